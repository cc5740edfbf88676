#ifndef CIRC_BIGINT_HPP
#define CIRC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace circ {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  return r << e;
}

}  // namespace circ

#endif  // CIRC_BIGINT_HPP
