#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace orthofield {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or an integer literal. Returns nullopt for anything else
// (decimal text included).
std::optional<Rational> parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& value);

// Splits n > 0 as root^2 * radicand, where the radicand is a product of
// distinct pairwise-coprime non-square factors: primes, or large cofactors
// that resisted Pollard rho. Never needs a complete factorization.
std::pair<Integer, Integer> split_square(const Integer& n);

// True once a large cofactor used as a radicand factor was later found to
// carry a square factor. Equality and zero tests then fall back to the exact
// sign, since a value may have two representations.
bool representation_ambiguous() noexcept;
/// Exact real number of the form  sum_s r_s * sqrt(s)  with rational r_s and
/// distinct radicands s >= 1, each a product of distinct factors from a
/// pairwise-coprime set of non-squares (see split_square).
///
/// Such square roots are linearly independent over Q, so the representation
/// is canonical: zero is the empty sum and equality is structural. The set is a field; it contains every square root
/// of a nonnegative rational, which is all the orthonormalization pipeline
/// needs (norms squared and recurrence coefficients squared are rational).
class Surd {
public:
    using Terms = std::map<Integer, Rational>;

    Surd() = default;
    Surd(long value);  // NOLINT(google-explicit-constructor)
    Surd(const Rational& value);  // NOLINT(google-explicit-constructor)

    // r * sqrt(radicand); the radicand need not be squarefree.
    static Surd term(const Rational& coefficient, const Integer& radicand);

    // Square root of a nonnegative rational.
    static Surd sqrt_of(const Rational& value);

    // Accepts "p/q", "sqrt(p/q)" and "p/q*sqrt(r/s)". Decimal text is rejected.
    static std::optional<Surd> parse(std::string_view text);

    bool is_zero() const;
    bool is_rational() const noexcept;
    // Throws InexactOperation unless is_rational().
    Rational to_rational() const;
    double to_double() const;
    // Exact sign: -1, 0 or +1.
    int sign() const;

    const Terms& terms() const noexcept { return terms_; }

    Surd operator-() const;
    Surd& operator+=(const Surd& other);
    Surd& operator-=(const Surd& other);
    Surd& operator*=(const Surd& other);
    // Throws std::domain_error on division by zero.
    Surd& operator/=(const Surd& other);

    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
    friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

    friend bool operator==(const Surd& a, const Surd& b) {
        return a.terms_ == b.terms_ || (representation_ambiguous() && (a - b).sign() == 0);
    }
    friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Surd& a, const Surd& b) { return b < a; }
    friend bool operator<=(const Surd& a, const Surd& b) { return !(b < a); }
    friend bool operator>=(const Surd& a, const Surd& b) { return !(a < b); }

    Surd inverse() const;

    // Canonical text: terms by ascending radicand, e.g. "1/2 + 3*sqrt(2)".
    std::string str() const;

private:
    void add_term(const Integer& radicand, const Rational& coefficient);

    Terms terms_;
};

// Square root of a Surd that is a nonnegative rational.
Surd sqrt(const Surd& value);

inline double to_double(const Surd& value) { return value.to_double(); }

}  // namespace orthofield
