#pragma once

#include "orthofield/measures.hpp"
#include "orthofield/scalar.hpp"

#include <compare>
#include <map>
#include <string>

namespace orthofield {

// Exponent pair of the monomial z^z_power * zbar^zbar_power.
struct Monomial {
    int z_power = 0;
    int zbar_power = 0;

    int degree() const noexcept { return z_power + zbar_power; }
    // Charge d = k - l; monomials of different sectors are orthogonal under
    // any rotation-invariant measure.
    int sector() const noexcept { return z_power - zbar_power; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite sum of c_{k,l} z^k zbar^l with real coefficients. Zero
/// coefficients are never stored; the empty polynomial is zero.
template <Scalar S>
class BivariatePolynomial {
public:
    using Terms = std::map<Monomial, S>;

    BivariatePolynomial() = default;
    static BivariatePolynomial constant(const S& value);
    static BivariatePolynomial monomial(int k, int l, const S& coefficient = S(1));

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const;
    S coefficient(int k, int l) const;

    void add_term(Monomial m, const S& coefficient);

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    BivariatePolynomial& operator-=(const BivariatePolynomial& other);
    BivariatePolynomial& operator*=(const S& factor);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a -= b;
    }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const S& factor) {
        return a *= factor;
    }
    friend BivariatePolynomial operator*(const S& factor, BivariatePolynomial a) {
        return a *= factor;
    }
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Multiplies by z^k zbar^l.
    BivariatePolynomial shifted(int k, int l) const;

private:
    Terms terms_;
};

template <Scalar S>
BivariatePolynomial<S> poly_product(const BivariatePolynomial<S>& p,
                                    const BivariatePolynomial<S>& q);

// Complex conjugate of a real-coefficient polynomial: (k,l) -> (l,k).
template <Scalar S>
BivariatePolynomial<S> conjugate_swap(const BivariatePolynomial<S>& p);

// Integral of p against mu; only diagonal terms survive.
template <Scalar S>
S moment_functional(const BivariatePolynomial<S>& p, const RadialMomentSequence<S>& m);

// <p, q> = integral conj(p) q dmu.
template <Scalar S>
S inner_product(const BivariatePolynomial<S>& p, const BivariatePolynomial<S>& q,
                const RadialMomentSequence<S>& m);

// Canonical text, terms by total degree then z-power, both descending, e.g.
// "6·z^2·zb - 4·z".
template <Scalar S>
std::string to_string(const BivariatePolynomial<S>& p);

}  // namespace orthofield
