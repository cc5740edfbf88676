#ifndef CIRC_CENSUS_HPP
#define CIRC_CENSUS_HPP

// Exhaustive census over all connection sets of one order, with the
// formula and structural checks attached to each report.

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "circ/aut.hpp"
#include "circ/bigint.hpp"
#include "circ/formulas.hpp"

namespace circ {

enum class CensusMode { graph, digraph };

std::string to_string(CensusMode mode);
CensusMode parse_mode(const std::string& text);  // throws ParseError

inline constexpr int kDigraphCeiling = 22;
inline constexpr int kGraphCeiling = 41;

struct CensusOptions {
  int threads = 1;
  bool override_ceiling = false;
  int aut_ceiling = kDefaultAutCeiling;
};

enum class Relation { le, eq, ge };
std::string to_string(Relation r);

struct Check {
  std::string name;
  BigInt bound_or_claim;
  BigInt observed;
  Relation relation = Relation::eq;
  bool holds = false;
  bool flagged_erratum = false;
};

Check make_check(std::string name, BigInt observed, Relation rel, BigInt bound,
                 bool flagged_erratum = false);

struct CensusCounts {
  long long drr = 0;
  long long small = 0;
  long long normal = 0;
  long long nonnormal = 0;
  long long gw = 0;
  long long dw = 0;
  long long sdw = 0;
  long long gw_and_dw = 0;
};

struct CensusReport {
  int order = 0;
  CensusMode mode = CensusMode::digraph;
  BigInt total;
  CensusCounts counts;
  std::vector<Check> checks;
  double runtime_seconds = 0;
};

// Tallies gathered by one pass over the set space. Public so the merge can
// be tested directly.
struct CensusTally {
  CensusCounts counts;
  long long total = 0;
  std::map<int, long long> dw_by_m;     // sets satisfying the DW conditions for m
  long long nonnormal_without_witness = 0;
  long long gw_but_normal = 0;
  long long normal_not_small = 0;        // graphs only
  long long prime_power_oracle = 0;      // sets with alpha*S = S (n = p^k)

  void merge(const CensusTally& other);
};

// Enumerates every set of the mode in ascending index order. Graph mode
// indexes the orbits {x, -x} of negation.
long long census_size(int n, CensusMode mode);
ConnectionSet census_set(int n, CensusMode mode, long long index);

// Throws ResourceError when n exceeds the mode ceiling without override.
CensusReport run_census(int n, CensusMode mode, const CensusOptions& options = {});

// Census without automorphism computations: only the syntactic tallies.
CensusReport run_syntactic_census(int n, CensusMode mode, const CensusOptions& options = {});

// Default worker count: CENSUS_THREADS when set and positive, else 1.
int default_threads();

// Rendering. BigInt values that fit in 64 bits are JSON numbers, larger
// values are decimal strings.
std::string report_to_json(const CensusReport& report, bool include_runtime = true);
std::string classification_to_json(const ClassificationRecord& record);
std::string formulas_to_json(int n, const std::vector<FormulaResult>& rows);
void write_report_csv(const CensusReport& report, std::ostream& out);

// Verification over several orders.
enum class VerifySuite { all, fast };
VerifySuite parse_suite(const std::string& text);

struct VerifyLine {
  int order = 0;
  std::string source;  // e.g. "census/digraph", "family", "formula"
  Check check;
  bool skipped = false;
  std::string note;
};

struct VerifyResult {
  std::vector<VerifyLine> lines;
  bool passed() const;
};

VerifyResult verify(const std::vector<int>& orders, VerifySuite suite, const CensusOptions& options);
void print_verify(const VerifyResult& result, std::ostream& out);

}  // namespace circ

#endif  // CIRC_CENSUS_HPP
