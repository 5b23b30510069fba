#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace powerhg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, long long exponent) {
  if (exponent < 0) throw std::domain_error("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline BigInt ipow(long long base, long long exponent) { return ipow(BigInt(base), exponent); }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const BigRational& v) {
  if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

inline long double to_long_double(const BigRational& v) {
  return boost::multiprecision::numerator(v).convert_to<long double>() /
         boost::multiprecision::denominator(v).convert_to<long double>();
}

}  // namespace powerhg
