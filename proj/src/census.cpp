#include "circ/census.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <set>
#include <thread>

#include "circ/error.hpp"
#include "json.hpp"

namespace circ {

using Json = nlohmann::ordered_json;

std::string to_string(CensusMode mode) { return mode == CensusMode::graph ? "graph" : "digraph"; }

CensusMode parse_mode(const std::string& text) {
  if (text == "graph") return CensusMode::graph;
  if (text == "digraph") return CensusMode::digraph;
  throw ParseError("mode must be graph or digraph, got \"" + text + "\"");
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

Check make_check(std::string name, BigInt observed, Relation rel, BigInt bound, bool flagged_erratum) {
  Check c;
  c.name = std::move(name);
  c.relation = rel;
  switch (rel) {
    case Relation::le: c.holds = observed <= bound; break;
    case Relation::eq: c.holds = observed == bound; break;
    case Relation::ge: c.holds = observed >= bound; break;
  }
  c.observed = std::move(observed);
  c.bound_or_claim = std::move(bound);
  c.flagged_erratum = flagged_erratum;
  return c;
}

void CensusTally::merge(const CensusTally& o) {
  counts.drr += o.counts.drr;
  counts.small += o.counts.small;
  counts.normal += o.counts.normal;
  counts.nonnormal += o.counts.nonnormal;
  counts.gw += o.counts.gw;
  counts.dw += o.counts.dw;
  counts.sdw += o.counts.sdw;
  counts.gw_and_dw += o.counts.gw_and_dw;
  total += o.total;
  for (const auto& [m, c] : o.dw_by_m) dw_by_m[m] += c;
  nonnormal_without_witness += o.nonnormal_without_witness;
  gw_but_normal += o.gw_but_normal;
  normal_not_small += o.normal_not_small;
  prime_power_oracle += o.prime_power_oracle;
}

long long census_size(int n, CensusMode mode) {
  Modulus mod(n);
  const int bits = mode == CensusMode::graph ? n / 2 : n - 1;
  if (bits > 62) throw ResourceError("census space exceeds 2^62 sets");
  return 1LL << bits;
}

ConnectionSet census_set(int n, CensusMode mode, long long index) {
  Modulus mod(n);
  if (mode == CensusMode::digraph) return ConnectionSet::from_mask(mod, static_cast<Mask>(index) << 1);
  Mask bits = 0;
  for (int j = 0; j < n / 2; ++j) {
    if ((index >> j) & 1) bits |= (Mask{1} << (j + 1)) | (Mask{1} << (n - j - 1));
  }
  return ConnectionSet::from_mask(mod, bits);
}

int default_threads() {
  if (const char* env = std::getenv("CENSUS_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

namespace {

struct PrimePowerInfo {
  int p = 0;
  int k = 0;
  bool odd_prime_power() const { return p > 2 && k >= 2; }
};

PrimePowerInfo prime_power_info(int n) {
  const auto fac = factorize(n);
  if (fac.size() != 1) return {};
  return {static_cast<int>(fac[0].prime), fac[0].exponent};
}

void check_ceiling(int n, CensusMode mode, const CensusOptions& options) {
  const int ceiling = mode == CensusMode::digraph ? kDigraphCeiling : kGraphCeiling;
  if (n > ceiling && !options.override_ceiling) {
    throw ResourceError(to_string(mode) + " census of order " + std::to_string(n) +
                        " exceeds the default ceiling " + std::to_string(ceiling) +
                        "; pass the override flag to run it anyway");
  }
}

CensusTally tally_range(int n, CensusMode mode, long long begin, long long end, bool with_aut,
                        int aut_ceiling) {
  CensusTally t;
  const auto ms = dw_admissible_divisors(n);
  for (int m : ms) t.dw_by_m[m] = 0;
  const PrimePowerInfo pp = prime_power_info(n);
  int oracle_k = 0, oracle_h = 0;
  if (pp.odd_prime_power()) {
    oracle_k = pp.p;
    oracle_h = n / pp.p;
  }
  const bool composite = !is_prime(n);

  for (long long idx = begin; idx < end; ++idx) {
    const ConnectionSet s = census_set(n, mode, idx);
    ++t.total;
    const bool gw = gw_witness(s).has_value();
    bool dw = false;
    for (int m : ms) {
      if (satisfies_dw(s, m)) {
        ++t.dw_by_m[m];
        dw = true;
      }
    }
    if (gw) ++t.counts.gw;
    if (dw) ++t.counts.dw;
    if (gw && dw) ++t.counts.gw_and_dw;
    if (dw && !gw) ++t.counts.sdw;
    if (oracle_k != 0 && is_gw_pair(s, oracle_k, oracle_h)) ++t.prime_power_oracle;

    if (!with_aut) continue;
    const AutomorphismData data = compute_automorphisms(s, aut_ceiling);
    const long long stab = data.stabilizer_order_saturated();
    const bool normal = data.normalizes_regular_cycle();
    const bool small = s.is_graph() && stab == 2;
    if (stab == 1) ++t.counts.drr;
    if (small) ++t.counts.small;
    if (normal) {
      ++t.counts.normal;
      if (mode == CensusMode::graph && !small) ++t.normal_not_small;
      if (gw && composite) ++t.gw_but_normal;
    } else {
      ++t.counts.nonnormal;
      if (!gw && !dw) ++t.nonnormal_without_witness;
    }
  }
  return t;
}

CensusTally parallel_tally(int n, CensusMode mode, bool with_aut, const CensusOptions& options) {
  const long long size = census_size(n, mode);
  const int workers = static_cast<int>(std::max<long long>(1, std::min<long long>(options.threads, size)));
  std::vector<CensusTally> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      const long long begin = size * w / workers;
      const long long end = size * (w + 1) / workers;
      parts[w] = tally_range(n, mode, begin, end, with_aut, options.aut_ceiling);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CensusTally merged = std::move(parts.front());
  for (int w = 1; w < workers; ++w) merged.merge(parts[w]);
  return merged;
}

std::vector<Check> build_checks(int n, CensusMode mode, const CensusTally& t, bool with_aut) {
  std::vector<Check> checks;
  const auto& c = t.counts;
  const bool digraph = mode == CensusMode::digraph;
  const bool composite = !is_prime(n);
  const auto fac = factorize(n);
  const PrimePowerInfo pp = prime_power_info(n);

  checks.push_back(make_check("total", t.total, Relation::eq,
                              digraph ? total_digraphs(n) : total_graphs(n)));
  checks.push_back(make_check("sdw_equals_dw_minus_gw_and_dw", c.sdw, Relation::eq,
                              BigInt(c.dw - c.gw_and_dw)));

  if (composite) {
    if (digraph) {
      checks.push_back(make_check("gw_le_gw_digraph_bound_sum", c.gw, Relation::le, gw_digraph_bound_sum(n)));
    } else {
      checks.push_back(make_check("gw_le_gw_graph_bound_closed", c.gw, Relation::le,
                                  ceil_to_int(gw_graph_bound_closed(n))));
    }
  }
  for (const auto& [m, count] : t.dw_by_m) {
    const std::string suffix = "_m" + std::to_string(m);
    if (digraph) {
      checks.push_back(make_check("dw_with_witness" + suffix + "_equals_dw_count_with_witness", count,
                                  Relation::eq, dw_count_with_witness(n, m)));
    } else {
      checks.push_back(make_check("dw_with_witness" + suffix + "_le_dw_graph_bound", count, Relation::le,
                                  dw_graph_bound(n, m)));
    }
  }
  const bool is_pq = fac.size() == 2 && fac[0].exponent == 1 && fac[1].exponent == 1;
  if (is_pq && digraph) {
    const int p = static_cast<int>(fac[0].prime);
    const int q = static_cast<int>(fac[1].prime);
    checks.push_back(make_check("gw_equals_gw_exact_pq", c.gw, Relation::eq, gw_exact_pq(p, q)));
    if (pq_hypothesis_holds(p, q)) {
      checks.push_back(make_check("sdw_equals_sdw_exact_pq", c.sdw, Relation::eq, sdw_exact_pq(p, q), true));
      checks.push_back(make_check("sdw_equals_sdw_enumerated_form_pq", c.sdw, Relation::eq,
                                  sdw_enumerated_form_pq(p, q)));
    }
  }
  if (digraph && n % 4 == 2 && n > 2) {
    checks.push_back(make_check("gw_ge_gw_lower_bound_2mod4", c.gw, Relation::ge, gw_lower_bound_2mod4(n)));
  }

  if (!with_aut) return checks;

  checks.push_back(make_check("normal_plus_nonnormal_equals_total", BigInt(c.normal + c.nonnormal),
                              Relation::eq, t.total));
  checks.push_back(make_check("drr_le_normal", c.drr, Relation::le, c.normal));
  checks.push_back(make_check("small_le_normal", c.small, Relation::le, c.normal));
  checks.push_back(make_check("nonnormal_without_gw_or_dw", t.nonnormal_without_witness, Relation::eq, 0));
  if (composite && n % 4 != 0) {
    checks.push_back(make_check("gw_sets_that_are_normal", t.gw_but_normal, Relation::eq, 0));
  }
  if (digraph && n % 4 == 2 && n > 2) {
    checks.push_back(make_check("nonnormal_ge_gw_lower_bound_2mod4", c.nonnormal, Relation::ge,
                                gw_lower_bound_2mod4(n)));
  }
  if (pp.p != 0 && pp.k == 2 && pp.p != 2) {
    checks.push_back(make_check("nonnormal_equals_gw", c.nonnormal, Relation::eq, c.gw));
  }
  if (!digraph && pp.odd_prime_power()) {
    checks.push_back(make_check("nonnormal_equals_prime_power_oracle", c.nonnormal, Relation::eq,
                                t.prime_power_oracle));
    checks.push_back(make_check("nonnormal_equals_nonnorg_prime_power_claimed", c.nonnormal, Relation::eq,
                                nonnorg_prime_power_claimed(pp.p, pp.k), true));
    if (pp.p == 3) {
      checks.push_back(make_check("normal_graphs_not_small", t.normal_not_small, Relation::eq, 0));
    }
  }
  if (!digraph && n % 2 == 1) {
    checks.push_back(make_check("non_small_le_small_complement_bound", BigInt(t.total - c.small),
                                Relation::le, ceil_to_int(small_complement_bound(n))));
  }
  return checks;
}

CensusReport assemble(int n, CensusMode mode, const CensusTally& t, bool with_aut, double seconds) {
  CensusReport r;
  r.order = n;
  r.mode = mode;
  r.total = t.total;
  r.counts = t.counts;
  r.checks = build_checks(n, mode, t, with_aut);
  r.runtime_seconds = seconds;
  return r;
}

CensusReport census_impl(int n, CensusMode mode, const CensusOptions& options, bool with_aut) {
  Modulus mod(n);
  check_ceiling(n, mode, options);
  if (with_aut && n > options.aut_ceiling) {
    throw ResourceError("order " + std::to_string(n) + " exceeds the automorphism ceiling " +
                        std::to_string(options.aut_ceiling));
  }
  const auto start = std::chrono::steady_clock::now();
  const CensusTally t = parallel_tally(n, mode, with_aut, options);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return assemble(n, mode, t, with_aut, elapsed.count());
}

Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(v));
  }
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

}  // namespace

CensusReport run_census(int n, CensusMode mode, const CensusOptions& options) {
  return census_impl(n, mode, options, true);
}

CensusReport run_syntactic_census(int n, CensusMode mode, const CensusOptions& options) {
  return census_impl(n, mode, options, false);
}

std::string report_to_json(const CensusReport& r, bool include_runtime) {
  Json j;
  j["order"] = r.order;
  j["mode"] = to_string(r.mode);
  j["total"] = big_json(r.total);
  Json counts;
  counts["drr"] = r.counts.drr;
  counts["small"] = r.counts.small;
  counts["normal"] = r.counts.normal;
  counts["nonnormal"] = r.counts.nonnormal;
  counts["gw"] = r.counts.gw;
  counts["dw"] = r.counts.dw;
  counts["sdw"] = r.counts.sdw;
  counts["gw_and_dw"] = r.counts.gw_and_dw;
  j["counts"] = counts;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["bound_or_claim"] = big_json(c.bound_or_claim);
    jc["observed"] = big_json(c.observed);
    jc["relation"] = to_string(c.relation);
    jc["holds"] = c.holds;
    jc["flagged_erratum"] = c.flagged_erratum;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2);
}

std::string classification_to_json(const ClassificationRecord& rec) {
  Json j;
  j["set"] = rec.set.to_string();
  j["order"] = rec.set.order();
  j["is_graph"] = rec.is_graph;
  j["aut_order"] = big_json(rec.aut_order);
  j["is_drr"] = rec.is_drr;
  j["is_small"] = rec.is_small;
  j["is_normal"] = rec.is_normal;
  j["gw"] = rec.gw ? Json{{"k", rec.gw->k}, {"h", rec.gw->h}} : Json(nullptr);
  j["dw"] = rec.dw ? Json{{"m", rec.dw->m}} : Json(nullptr);
  j["is_sdw"] = rec.is_sdw;
  return j.dump(2);
}

std::string formulas_to_json(int n, const std::vector<FormulaResult>& rows) {
  Json j;
  j["order"] = n;
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json jr;
    jr["name"] = row.name;
    Json params = Json::object();
    for (const auto& [k, v] : row.parameters) params[k] = v;
    jr["parameters"] = params;
    jr["applicable"] = row.applicable();
    if (const auto* b = std::get_if<BigInt>(&row.value)) {
      jr["value"] = big_json(*b);
    } else if (const auto* d = std::get_if<double>(&row.value)) {
      jr["value"] = *d;
      jr["ceiling"] = big_json(ceil_to_int(*d));
    } else if (const auto* q = std::get_if<Rational>(&row.value)) {
      jr["value"] = q->str();
      jr["approx"] = static_cast<double>(*q);
    } else {
      jr["value"] = nullptr;
    }
    if (!row.note.empty()) jr["note"] = row.note;
    if (row.flagged_claim) jr["flagged_claim"] = true;
    arr.push_back(jr);
  }
  j["formulas"] = arr;
  return j.dump(2);
}

void write_report_csv(const CensusReport& r, std::ostream& out) {
  out << "kind,name,value,bound_or_claim,relation,holds,flagged_erratum\n";
  out << "total,total," << r.total << ",,,,\n";
  const std::pair<const char*, long long> rows[] = {
      {"drr", r.counts.drr},       {"small", r.counts.small}, {"normal", r.counts.normal},
      {"nonnormal", r.counts.nonnormal}, {"gw", r.counts.gw}, {"dw", r.counts.dw},
      {"sdw", r.counts.sdw},       {"gw_and_dw", r.counts.gw_and_dw}};
  for (const auto& [name, value] : rows) out << "count," << name << ',' << value << ",,,,\n";
  for (const auto& c : r.checks) {
    out << "check," << c.name << ',' << c.observed << ',' << c.bound_or_claim << ','
        << to_string(c.relation) << ',' << (c.holds ? "true" : "false") << ','
        << (c.flagged_erratum ? "true" : "false") << '\n';
  }
}

VerifySuite parse_suite(const std::string& text) {
  if (text == "all") return VerifySuite::all;
  if (text == "fast") return VerifySuite::fast;
  throw ParseError("suite must be all or fast, got \"" + text + "\"");
}

bool VerifyResult::passed() const {
  for (const auto& l : lines) {
    if (!l.skipped && !l.check.holds && !l.check.flagged_erratum) return false;
  }
  return true;
}

namespace {

constexpr long long kFamilyLimit = 1LL << 20;

void family_checks(int n, std::vector<VerifyLine>& lines) {
  auto add = [&](Check c) { lines.push_back({n, "family", std::move(c), false, {}}); };
  auto skip = [&](const std::string& name, const std::string& why) {
    VerifyLine l{n, "family", {}, true, why};
    l.check.name = name;
    lines.push_back(std::move(l));
  };
  for (auto p : prime_divisors(n)) {
    const int np = n / static_cast<int>(p);
    for (auto q : prime_divisors(np)) {
      const int bits = (np - 1) + (n - np) / static_cast<int>(q);
      const std::string name = "gw_family_q" + std::to_string(q) + "_p" + std::to_string(p);
      if ((1LL << std::min(bits, 62)) > kFamilyLimit) {
        skip(name, "family too large to enumerate in verify");
        continue;
      }
      std::set<Mask> distinct;
      long long not_gw = 0;
      gw_family(n, static_cast<int>(q), static_cast<int>(p), [&](const ConnectionSet& s) {
        distinct.insert(s.bits());
        if (!gw_witness(s)) ++not_gw;
      });
      add(make_check(name + "_distinct", static_cast<long long>(distinct.size()), Relation::eq, pow2(bits)));
      add(make_check(name + "_members_without_gw_witness", not_gw, Relation::eq, 0));
    }
  }
  for (int m : dw_admissible_divisors(n)) {
    const std::string name = "dw_family_m" + std::to_string(m);
    if (dw_count_with_witness(n, m) > kFamilyLimit) {
      skip(name, "family too large to enumerate in verify");
      continue;
    }
    std::set<Mask> distinct;
    long long failing = 0;
    dw_family(n, m, [&](const ConnectionSet& s) {
      distinct.insert(s.bits());
      if (!satisfies_dw(s, m)) ++failing;
    });
    add(make_check(name + "_distinct", static_cast<long long>(distinct.size()), Relation::eq,
                   dw_count_with_witness(n, m)));
    add(make_check(name + "_members_failing_conditions", failing, Relation::eq, 0));
  }
  if (!is_prime(n)) {
    lines.push_back({n, "formula",
                     make_check("gw_digraph_bound_sum_le_closed", gw_digraph_bound_sum(n), Relation::le,
                                ceil_to_int(gw_digraph_bound_closed(n))),
                     false,
                     {}});
  }
}

}  // namespace

VerifyResult verify(const std::vector<int>& orders, VerifySuite suite, const CensusOptions& options) {
  VerifyResult result;
  for (int n : orders) {
    Modulus mod(n);
    const bool digraph_ok = n <= kDigraphCeiling || options.override_ceiling;
    const bool graph_ok = n <= kGraphCeiling || options.override_ceiling;
    if (!graph_ok) {
      throw ResourceError("order " + std::to_string(n) + " exceeds every census ceiling");
    }
    for (CensusMode mode : {CensusMode::digraph, CensusMode::graph}) {
      const std::string source = "census/" + to_string(mode);
      if (mode == CensusMode::digraph && !digraph_ok) {
        VerifyLine l{n, source, {}, true, "order above the digraph ceiling"};
        l.check.name = "digraph census";
        result.lines.push_back(std::move(l));
        continue;
      }
      const CensusReport r = suite == VerifySuite::all ? run_census(n, mode, options)
                                                       : run_syntactic_census(n, mode, options);
      for (const auto& c : r.checks) result.lines.push_back({n, source, c, false, {}});
    }
    family_checks(n, result.lines);
  }
  return result;
}

void print_verify(const VerifyResult& result, std::ostream& out) {
  for (const auto& l : result.lines) {
    const char* status = l.skipped               ? "SKIP"
                         : l.check.holds         ? "PASS"
                         : l.check.flagged_erratum ? "INFO"
                                                   : "FAIL";
    out << std::left << std::setw(5) << status << " n=" << std::setw(3) << l.order << ' '
        << std::setw(15) << l.source << ' ' << l.check.name;
    if (l.skipped) {
      out << "  (" << l.note << ")\n";
      continue;
    }
    out << ": observed " << l.check.observed << ' ' << to_string(l.check.relation) << ' '
        << l.check.bound_or_claim;
    if (l.check.flagged_erratum) out << "  [flagged erratum]";
    out << '\n';
  }
  out << (result.passed() ? "verify: all hard checks passed\n" : "verify: FAILED\n");
}

}  // namespace circ
