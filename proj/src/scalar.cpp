#include "orthofield/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace orthofield {

Real to_real(const Rational& value) {
    const auto& num = value.get_num();
    const auto& den = value.get_den();
    if (mpz_fits_slong_p(num.get_mpz_t()) && mpz_fits_slong_p(den.get_mpz_t())) {
        return static_cast<Real>(num.get_si()) / static_cast<Real>(den.get_si());
    }
    return static_cast<Real>(value.get_d());
}

Real to_real(const Surd& value) {
    Real sum = 0;
    for (const auto& [radicand, coefficient] : value.terms()) {
        sum += to_real(coefficient) * sqrt(to_real(Rational(radicand)));
    }
    return sum;
}

std::string format_double(double value) {
    if (value == 0.0) return "0";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

}  // namespace orthofield
