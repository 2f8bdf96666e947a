#include "orthofield/exact.hpp"

#include "orthofield/errors.hpp"

#include <cctype>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>
#include <stdexcept>

namespace orthofield {

namespace {

constexpr unsigned long kTrialLimit = 1000000UL;
// Pollard-Brent iterations per polynomial before a cofactor is kept whole.
constexpr unsigned long kRhoBudget = 1UL << 12;

// Product of the distinct primes up to the trial bound that divide n > 0,
// from a single gcd with the primorial.
Integer small_prime_part(const Integer& n) {
    static const Integer primorial = [] {
        Integer p;
        mpz_primorial_ui(p.get_mpz_t(), kTrialLimit);
        return p;
    }();
    return gcd(n, Integer(primorial % n));
}

// The primes dividing a product of distinct small primes, ascending.
std::vector<unsigned long> small_primes_of(Integer g) {
    std::vector<unsigned long> out;
    for (unsigned long p = 2; g > 1; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(g.get_mpz_t(), p)) continue;
        mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
        out.push_back(p);
    }
    return out;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Nontrivial factor of an odd composite n by Brent's variant of Pollard rho,
// or 0 when the budget runs out.
Integer rho_factor(const Integer& n) {
    constexpr unsigned long kBatch = 128;
    for (unsigned long c = 1; c <= 8; ++c) {
        auto step = [&](const Integer& v) {
            Integer out = v * v + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        Integer y = 2;
        Integer x;
        Integer saved;
        Integer product = 1;
        Integer g = 1;
        unsigned long length = 1;
        unsigned long spent = 0;
        while (g == 1 && spent < kRhoBudget) {
            x = y;
            for (unsigned long i = 0; i < length; ++i) y = step(y);
            for (unsigned long done = 0; done < length && g == 1; done += kBatch) {
                saved = y;
                const unsigned long batch = std::min(kBatch, length - done);
                for (unsigned long i = 0; i < batch; ++i) {
                    y = step(y);
                    product = product * abs(x - y) % n;
                }
                g = gcd(product, n);
                spent += batch;
            }
            length *= 2;
        }
        if (g == n) {
            // The batch overshot; replay it one step at a time.
            do {
                saved = step(saved);
                g = gcd(abs(x - saved), n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

// Factors above the trial bound met so far ("atoms"). They stay pairwise
// coprime and none is a perfect square, so square roots of products of
// distinct atoms are linearly independent over Q even when an atom is a
// composite that resisted factoring. Radicands are such products, which keeps
// the representation canonical without complete factorization.
struct AtomRegistry {
    std::recursive_mutex mutex;
    std::vector<Integer> atoms;
    // Set once an atom is found to carry a square factor: values built from
    // it before the split may have a second representation.
    std::atomic<bool> ambiguous{false};
};

AtomRegistry& registry() {
    static AtomRegistry instance;
    return instance;
}

void decompose_large(Integer y, std::map<Integer, int>& out, int multiplicity);

// Replaces atoms[index] by the atoms of g and atoms[index]/g.
void split_atom(std::size_t index, const Integer& g) {
    auto& reg = registry();
    const Integer atom = reg.atoms[index];
    reg.atoms.erase(reg.atoms.begin() + static_cast<std::ptrdiff_t>(index));
    std::map<Integer, int> parts;
    decompose_large(g, parts, 1);
    decompose_large(Integer(atom / g), parts, 1);
    for (const auto& part : parts)
        if (part.second > 1) reg.ambiguous = true;
}

// Adds the exponents of y over the atoms to `out`, registering new atoms.
// y has no prime factor up to the trial bound. Caller holds the mutex.
void decompose_large(Integer y, std::map<Integer, int>& out, int multiplicity) {
    auto& reg = registry();
    const Integer bound = Integer(kTrialLimit) * kTrialLimit * kTrialLimit;
    while (y != 1) {
        if (mpz_perfect_square_p(y.get_mpz_t())) {
            y = sqrt(y);
            multiplicity *= 2;
            continue;
        }
        bool reduced = false;
        for (std::size_t i = 0; i < reg.atoms.size() && !reduced; ++i) {
            const Integer g = gcd(y, reg.atoms[i]);
            if (g == 1) continue;
            reduced = true;
            if (g != reg.atoms[i]) {
                split_atom(i, g);
                break;
            }
            const Integer atom = reg.atoms[i];
            while (mpz_divisible_p(y.get_mpz_t(), atom.get_mpz_t())) {
                y /= atom;
                out[atom] += multiplicity;
            }
        }
        if (reduced) continue;
        // Coprime to every atom. Below kTrialLimit^3 a non-square cofactor
        // free of small primes is a prime or a product of two distinct ones.
        const Integer d = (y < bound || is_probable_prime(y)) ? Integer(0) : rho_factor(y);
        if (d == 0) {
            reg.atoms.push_back(y);
            out[y] += multiplicity;
            return;
        }
        decompose_large(d, out, multiplicity);
        y /= d;
    }
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

// A prime or atom dividing s > 1.
Integer splitting_factor(const Integer& s) {
    const Integer small = small_prime_part(s);
    if (small > 1) return small_primes_of(small).front();
    std::lock_guard lock(registry().mutex);
    std::map<Integer, int> exponents;
    decompose_large(s, exponents, 1);
    return exponents.begin()->first;
}

// y = a + b*sqrt(p) with a, b free of p.
std::pair<Surd, Surd> split_on(const Surd& y, const Integer& p) {
    Surd a;
    Surd b;
    for (const auto& [radicand, coefficient] : y.terms()) {
        Integer rest = radicand;
        Rational scale = coefficient;
        bool odd = false;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            if (odd) scale *= p;
            odd = !odd;
        }
        (odd ? b : a) += Surd::term(scale, rest);
    }
    return {a, b};
}

Integer pick_factor(const Surd& y) {
    for (const auto& [radicand, coefficient] : y.terms()) {
        if (radicand != 1) return splitting_factor(radicand);
    }
    return 1;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    if (!is_integer_literal(num) || !is_integer_literal(den)) return std::nullopt;
    std::string num_text(num);
    std::string den_text(den);
    if (num_text.front() == '+') num_text.erase(0, 1);
    if (den_text.front() == '+') den_text.erase(0, 1);
    Integer n(num_text, 10);
    Integer d(den_text, 10);
    if (d == 0) return std::nullopt;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& input) {
    Rational value = input;
    value.canonicalize();
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::pair<Integer, Integer> split_square(const Integer& n) {
    if (n <= 0) throw std::domain_error("split_square requires a positive integer");
    Integer rest = n;
    Integer root = 1;
    Integer squarefree = 1;
    for (unsigned long p : small_primes_of(small_prime_part(n))) {
        int exponent = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++exponent;
        }
        for (int i = 0; i < exponent / 2; ++i) root *= p;
        if (exponent % 2 == 1) squarefree *= p;
    }
    if (rest == 1) return {root, squarefree};
    std::lock_guard lock(registry().mutex);
    std::map<Integer, int> exponents;
    decompose_large(rest, exponents, 1);
    for (const auto& [atom, exponent] : exponents) {
        for (int i = 0; i < exponent / 2; ++i) root *= atom;
        if (exponent % 2 == 1) squarefree *= atom;
    }
    return {root, squarefree};
}

bool representation_ambiguous() noexcept { return registry().ambiguous.load(); }

Surd::Surd(long value) : Surd(Rational(value)) {}

Surd::Surd(const Rational& value) {
    if (value != 0) terms_.emplace(Integer(1), value);
}

Surd Surd::term(const Rational& coefficient, const Integer& radicand) {
    Surd out;
    if (coefficient == 0) return out;
    if (radicand <= 0) throw std::domain_error("radicand must be positive");
    auto [root, squarefree] = split_square(radicand);
    out.terms_.emplace(squarefree, coefficient * root);
    return out;
}

Surd Surd::sqrt_of(const Rational& value) {
    if (value < 0) throw std::domain_error("square root of a negative rational");
    if (value == 0) return {};
    // sqrt(p/q) = a sqrt(s) / (b sqrt(t)) = a/(b t) sqrt(s t), with s t
    // squarefree because p and q are coprime.
    auto [a, s] = split_square(value.get_num());
    auto [b, t] = split_square(value.get_den());
    Surd out;
    out.terms_.emplace(Integer(s * t), Rational(a, b * t));
    out.terms_.begin()->second.canonicalize();
    return out;
}

std::optional<Surd> Surd::parse(std::string_view text) {
    text = trim(text);
    if (auto r = parse_rational(text)) return Surd(*r);
    Rational coefficient = 1;
    auto star = text.find('*');
    std::string_view root_part = text;
    if (star != std::string_view::npos) {
        auto c = parse_rational(text.substr(0, star));
        if (!c) return std::nullopt;
        coefficient = *c;
        root_part = trim(text.substr(star + 1));
    }
    if (root_part.size() < 7 || root_part.substr(0, 5) != "sqrt(" || root_part.back() != ')') {
        return std::nullopt;
    }
    auto inner = parse_rational(root_part.substr(5, root_part.size() - 6));
    if (!inner || *inner < 0) return std::nullopt;
    return Surd(coefficient) * sqrt_of(*inner);
}

bool Surd::is_zero() const {
    return terms_.empty() || (representation_ambiguous() && sign() == 0);
}

bool Surd::is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::to_rational() const {
    if (!is_rational()) throw InexactOperation("value " + str() + " is irrational");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

double Surd::to_double() const {
    long double sum = 0.0L;
    for (const auto& [radicand, coefficient] : terms_) {
        sum += static_cast<long double>(coefficient.get_d()) *
               std::sqrt(static_cast<long double>(radicand.get_d()));
    }
    return static_cast<double>(sum);
}

int Surd::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    Integer p = pick_factor(*this);
    auto [a, b] = split_on(*this, p);
    int sa = a.sign();
    int sb = b.sign();
    if (sa == 0 && sb == 0) return 0;  // only for an ambiguous representation
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Opposite signs: compare a^2 with p*b^2.
    Surd gap = a * a - Surd(Rational(p)) * b * b;
    return sa * gap.sign();
}

void Surd::add_term(const Integer& radicand, const Rational& coefficient) {
    auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Surd Surd::operator-() const {
    Surd out = *this;
    for (auto& entry : out.terms_) entry.second = -entry.second;
    return out;
}

Surd& Surd::operator+=(const Surd& other) {
    for (const auto& [radicand, coefficient] : other.terms_) add_term(radicand, coefficient);
    return *this;
}

Surd& Surd::operator-=(const Surd& other) {
    for (const auto& [radicand, coefficient] : other.terms_) add_term(radicand, -coefficient);
    return *this;
}

Surd& Surd::operator*=(const Surd& other) {
    Surd out;
    for (const auto& [s1, r1] : terms_) {
        for (const auto& [s2, r2] : other.terms_) {
            // sqrt(s1*s2) = g*sqrt((s1/g)*(s2/g)) with g = gcd(s1, s2)
            Integer g = gcd(s1, s2);
            Integer radicand = (s1 / g) * (s2 / g);
            out.add_term(radicand, r1 * r2 * Rational(g));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Surd Surd::inverse() const {
    if (terms_.empty()) throw std::domain_error("division by zero");
    if (terms_.size() == 1) {
        const auto& [radicand, coefficient] = *terms_.begin();
        // 1/(r*sqrt(s)) = sqrt(s)/(r*s)
        Surd out;
        out.terms_.emplace(radicand, Rational(1) / (coefficient * Rational(radicand)));
        return out;
    }
    Integer p = pick_factor(*this);
    auto [a, b] = split_on(*this, p);
    Surd conjugate = a - b * Surd::term(1, p);
    Surd norm = a * a - Surd(Rational(p)) * b * b;
    // A vanishing norm means a = b sqrt(p), so the value is 2a; this needs an
    // ambiguous representation.
    if (norm.is_zero()) return (Surd(2) * a).inverse();
    return conjugate * norm.inverse();
}

Surd& Surd::operator/=(const Surd& other) { return *this *= other.inverse(); }

std::string Surd::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [radicand, coefficient] : terms_) {
        Rational magnitude = abs(coefficient);
        bool negative = coefficient < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (radicand == 1) {
            out += format_rational(magnitude);
        } else {
            if (magnitude != 1) out += format_rational(magnitude) + "*";
            out += "sqrt(" + radicand.get_str() + ")";
        }
    }
    return out;
}

Surd sqrt(const Surd& value) {
    Rational r = value.to_rational();
    if (r < 0) throw std::domain_error("square root of a negative value");
    return Surd::sqrt_of(r);
}

}  // namespace orthofield
