#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfmix {

// Cardinalities of tower sets overflow 64 bits quickly in dimension >= 2.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Count& c) { return c.convert_to<double>(); }

inline std::string numerator_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str();
}
inline std::string denominator_string(const Rational& r) {
  return boost::multiprecision::denominator(r).str();
}

}  // namespace cfmix
