#pragma once

// Scalar vocabulary shared by every module: exact integers/rationals (GMP),
// fixed-precision reals (MPFR tiers), quad precision with a complex partner,
// and the small numeric helpers used throughout (0 log 0 convention, pi,
// rational parsing and serialization).

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

namespace lshape {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Quad = mp::float128;
using ComplexQuad = mp::complex128;

constexpr unsigned digits10_for_bits(unsigned bits) {
  // ceil(bits * log10(2)) without floating point in a constant expression.
  return static_cast<unsigned>((bits * 30103ULL + 99999ULL) / 100000ULL);
}

/// MPFR real carrying at least `Bits` bits of mantissa.
template <unsigned Bits>
using RealBits = mp::number<mp::mpfr_float_backend<digits10_for_bits(Bits)>, mp::et_off>;

/// Precision tiers available on the real path; requests round up.
inline constexpr unsigned kPrecisionTiers[] = {128, 256, 512, 1024, 2048};

constexpr unsigned precision_tier(unsigned bits) {
  for (unsigned tier : kPrecisionTiers)
    if (bits <= tier) return tier;
  return 2048;
}

/// Default real-path precision for an N x N lattice.
constexpr unsigned default_precision_bits(int n) { return n > 64 ? 512 : 128; }

/// Calls `f(T{})` with T the MPFR type of the tier covering `bits`.
template <class F>
decltype(auto) dispatch_precision(unsigned bits, F&& f) {
  switch (precision_tier(bits)) {
    case 128: return f(RealBits<128>{});
    case 256: return f(RealBits<256>{});
    case 512: return f(RealBits<512>{});
    case 1024: return f(RealBits<1024>{});
    default: return f(RealBits<2048>{});
  }
}

template <class Real>
struct ComplexOf;
template <>
struct ComplexOf<double> { using type = std::complex<double>; };
template <>
struct ComplexOf<long double> { using type = std::complex<long double>; };
template <>
struct ComplexOf<Quad> { using type = ComplexQuad; };

template <class Real>
using complex_t = typename ComplexOf<Real>::type;

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

/// c * log(x) with the convention 0 * log(0) = 0.
template <class Real>
Real xlogy(const Real& c, const Real& x) {
  using std::log;
  if (c == 0) return Real(0);
  return c * log(x);
}

template <class Real, class Source>
Real convert(const Source& v) {
  if constexpr (std::is_same_v<Real, Source>) {
    return v;
  } else if constexpr (std::is_arithmetic_v<Real> &&
                       mp::is_number<Source>::value) {
    return v.template convert_to<Real>();
  } else {
    return static_cast<Real>(v);
  }
}

/// Natural log of |v| for integers far outside the double range.
double log_abs(const Integer& v);
/// log(p/q) computed as log|p| - log|q|; requires v > 0.
double log_positive(const Rational& v);

/// Parses "p/q", "-p/q", integers, and decimals such as "0.125" or "1e-3"
/// exactly (decimals are scaled by powers of ten). Throws kInvalidArgument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& v);

/// Shortest round-trip decimal for doubles; `digits` significant digits
/// otherwise.
std::string to_decimal(double v);
template <class Real>
std::string to_decimal(const Real& v, int digits) {
  return v.str(digits, std::ios_base::scientific);
}

}  // namespace lshape
