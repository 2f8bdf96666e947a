#pragma once

#include "orthofield/exact.hpp"

#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <string>
#include <type_traits>

namespace orthofield {

// The two arithmetic modes. Exact mode runs on Surd, floating mode on Real.
enum class Arithmetic { exact, floating };

// IEEE binary128. Every construction from moments loses about
// log10(cond(Hankel)) digits; near-circular measures reach cond ~ 1e11 by
// degree 8, which exhausts double and x87 extended precision.
using Real = boost::multiprecision::float128;

template <typename S>
concept Scalar = std::is_same_v<S, Real> || std::is_same_v<S, Surd>;

// Floating pivots below this fraction of the block scale count as zero. It
// leaves ten digits of binary128 headroom above rounding noise.
inline constexpr double kPivotFloor = 1e-24;

template <Scalar S>
inline constexpr bool is_exact_v = std::is_same_v<S, Surd>;

template <Scalar S>
inline constexpr Arithmetic arithmetic_of = is_exact_v<S> ? Arithmetic::exact
                                                          : Arithmetic::floating;

inline double to_double(double value) { return value; }
inline double to_double(const Real& value) { return static_cast<double>(value); }

inline bool is_zero(double value) { return value == 0.0; }
inline bool is_zero(const Real& value) { return value == 0; }
inline bool is_zero(const Surd& value) { return value.is_zero(); }

inline bool is_positive(double value) { return value > 0.0; }
inline bool is_positive(const Real& value) { return value > 0; }
inline bool is_positive(const Surd& value) { return value.sign() > 0; }

// Nearest Real, correctly rounded for ratios of integers below 2^63.
Real to_real(const Rational& value);
Real to_real(const Surd& value);

template <Scalar S>
S from_rational(const Rational& value) {
    if constexpr (is_exact_v<S>) {
        return Surd(value);
    } else {
        return to_real(value);
    }
}

template <Scalar S>
S square_root(const S& value) {
    using std::sqrt;
    return sqrt(value);
}

template <Scalar S>
double magnitude(const S& value) {
    return std::fabs(to_double(value));
}

// 17 significant digits, C locale.
std::string format_double(double value);

inline std::string format_scalar(double value) { return format_double(value); }
inline std::string format_scalar(const Real& value) { return format_double(static_cast<double>(value)); }
inline std::string format_scalar(const Surd& value) { return value.str(); }

}  // namespace orthofield
