#include "orthofield/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace orthofield {

template <Scalar S>
BivariatePolynomial<S> BivariatePolynomial<S>::constant(const S& value) {
    return monomial(0, 0, value);
}

template <Scalar S>
BivariatePolynomial<S> BivariatePolynomial<S>::monomial(int k, int l, const S& coefficient) {
    BivariatePolynomial out;
    out.add_term({k, l}, coefficient);
    return out;
}

template <Scalar S>
int BivariatePolynomial<S>::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

template <Scalar S>
S BivariatePolynomial<S>::coefficient(int k, int l) const {
    auto it = terms_.find({k, l});
    return it == terms_.end() ? S(0) : it->second;
}

template <Scalar S>
void BivariatePolynomial<S>::add_term(Monomial m, const S& coefficient) {
    if (orthofield::is_zero(coefficient)) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (orthofield::is_zero(it->second)) terms_.erase(it);
    }
}

template <Scalar S>
BivariatePolynomial<S>& BivariatePolynomial<S>::operator+=(const BivariatePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

template <Scalar S>
BivariatePolynomial<S>& BivariatePolynomial<S>::operator-=(const BivariatePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

template <Scalar S>
BivariatePolynomial<S>& BivariatePolynomial<S>::operator*=(const S& factor) {
    if (orthofield::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= factor;
        // double products may underflow to zero
        if (orthofield::is_zero(it->second)) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

template <Scalar S>
BivariatePolynomial<S> BivariatePolynomial<S>::shifted(int k, int l) const {
    BivariatePolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.z_power + k, m.zbar_power + l}, c);
    return out;
}

template <Scalar S>
BivariatePolynomial<S> poly_product(const BivariatePolynomial<S>& p,
                                    const BivariatePolynomial<S>& q) {
    BivariatePolynomial<S> out;
    for (const auto& [a, ca] : p.terms()) {
        for (const auto& [b, cb] : q.terms()) {
            out.add_term({a.z_power + b.z_power, a.zbar_power + b.zbar_power}, ca * cb);
        }
    }
    return out;
}

template <Scalar S>
BivariatePolynomial<S> conjugate_swap(const BivariatePolynomial<S>& p) {
    BivariatePolynomial<S> out;
    for (const auto& [m, c] : p.terms()) out.add_term({m.zbar_power, m.z_power}, c);
    return out;
}

template <Scalar S>
S moment_functional(const BivariatePolynomial<S>& p, const RadialMomentSequence<S>& m) {
    S total(0);
    for (const auto& [mono, c] : p.terms()) {
        if (mono.z_power != mono.zbar_power) continue;
        total += c * m[mono.z_power];
    }
    return total;
}

template <Scalar S>
S inner_product(const BivariatePolynomial<S>& p, const BivariatePolynomial<S>& q,
                const RadialMomentSequence<S>& m) {
    // Only pairs landing on the diagonal contribute, so skip forming the
    // full product: conj(z^a zbar^b) z^c zbar^e = z^{b+c} zbar^{a+e}.
    S total(0);
    for (const auto& [a, ca] : p.terms()) {
        for (const auto& [b, cb] : q.terms()) {
            if (a.sector() != b.sector()) continue;
            total += ca * cb * m[a.zbar_power + b.z_power];
        }
    }
    return total;
}

namespace {

std::string power_text(const char* symbol, int power) {
    if (power == 0) return {};
    if (power == 1) return symbol;
    return std::string(symbol) + "^" + std::to_string(power);
}

bool is_unit(const Real& c) { return c == 1; }
bool is_unit(const Surd& c) { return c == Surd(1); }

}  // namespace

template <Scalar S>
std::string to_string(const BivariatePolynomial<S>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, S>> ordered(p.terms().begin(), p.terms().end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
        return x.first.z_power > y.first.z_power;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        bool negative = false;
        S size = c;
        if constexpr (is_exact_v<S>) {
            // a multi-term coefficient keeps its own signs inside parentheses
            if (c.terms().size() == 1 && c.sign() < 0) {
                negative = true;
                size = -c;
            }
        } else {
            if (c < 0) {
                negative = true;
                size = -c;
            }
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::vector<std::string> factors;
        std::string coefficient_text = format_scalar(size);
        if constexpr (is_exact_v<S>) {
            if (size.terms().size() > 1) coefficient_text = "(" + coefficient_text + ")";
        }
        bool constant = m.z_power == 0 && m.zbar_power == 0;
        if (constant || !is_unit(size)) factors.push_back(coefficient_text);
        if (auto t = power_text("z", m.z_power); !t.empty()) factors.push_back(t);
        if (auto t = power_text("zb", m.zbar_power); !t.empty()) factors.push_back(t);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += "·";
            out += factors[i];
        }
    }
    return out;
}

#define ORTHOFIELD_INSTANTIATE_BIPOLY(S)                                                     \
    template class BivariatePolynomial<S>;                                                   \
    template BivariatePolynomial<S> poly_product(const BivariatePolynomial<S>&,              \
                                                 const BivariatePolynomial<S>&);             \
    template BivariatePolynomial<S> conjugate_swap(const BivariatePolynomial<S>&);           \
    template S moment_functional(const BivariatePolynomial<S>&,                              \
                                 const RadialMomentSequence<S>&);                            \
    template S inner_product(const BivariatePolynomial<S>&, const BivariatePolynomial<S>&,   \
                             const RadialMomentSequence<S>&);                                \
    template std::string to_string(const BivariatePolynomial<S>&);

ORTHOFIELD_INSTANTIATE_BIPOLY(Real)
ORTHOFIELD_INSTANTIATE_BIPOLY(Surd)

}  // namespace orthofield
