#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <system_error>

#include <boost/multiprecision/cpp_int.hpp>

#include "conzeta/error.hpp"

namespace conzeta {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Divides by a small positive integer and insists the quotient is exact.
inline BigInt divide_exact(const BigInt& value, long divisor) {
  BigInt q, r;
  boost::multiprecision::divide_qr(value, BigInt(divisor), q, r);
  if (r != 0) {
    throw InvariantViolation("inexact integer division by " + std::to_string(divisor));
  }
  return q;
}

inline BigInt divide_exact(const BigInt& value, const BigInt& divisor) {
  BigInt q, r;
  boost::multiprecision::divide_qr(value, divisor, q, r);
  if (r != 0) throw InvariantViolation("inexact integer division");
  return q;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

inline std::int64_t round_to_int(double v) { return static_cast<std::int64_t>(std::llround(v)); }

using Complex = std::complex<double>;

}  // namespace conzeta
