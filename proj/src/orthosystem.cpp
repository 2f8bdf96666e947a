#include "orthofield/orthosystem.hpp"

#include "orthofield/errors.hpp"
#include "orthofield/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace orthofield {

std::string to_string(Construction source) {
    return source == Construction::gram_schmidt ? "gram-schmidt" : "sector-cholesky";
}

template <Scalar S>
const BivariatePolynomial<S>& OrthonormalSystem<S>::at(int k, int l) const {
    auto it = polys_.find({k, l});
    if (it == polys_.end()) {
        throw OutOfRange("P_{" + std::to_string(k) + "," + std::to_string(l) +
                         "} is outside a system of degree " + std::to_string(max_degree_));
    }
    return it->second;
}

template <Scalar S>
bool AlphaTable<S>::contains(int k, int l) const {
    if (k == -1 && l >= 0) return true;
    return entries_.count({k, l}) != 0;
}

template <Scalar S>
S AlphaTable<S>::operator()(int k, int l) const {
    if (k == -1 && l >= 0) return S(0);
    auto it = entries_.find({k, l});
    if (it == entries_.end()) throw MissingAlpha(k, l);
    return it->second;
}

template <Scalar S>
int AlphaTable<S>::complete_degree() const {
    int n = 0;
    for (;; ++n) {
        // degree n+1 needs every (k,l) with k + l = n
        for (int k = 0; k <= n; ++k) {
            if (!entries_.count({k, n - k})) return n;
        }
    }
}

template <Scalar S>
int AlphaTable<S>::complete_square() const {
    int m = 0;
    for (;; ++m) {
        for (int i = 0; i <= m; ++i) {
            if (!entries_.count({i, m}) || !entries_.count({m, i})) return m - 1;
        }
    }
}

namespace {

template <Scalar S>
void require_moments(const RadialMomentSequence<S>& m, int max_degree) {
    if (max_degree < 0) throw InvalidParameter("maximal degree must be nonnegative");
    if (m.max_index() < max_degree) {
        throw OutOfRange("degree " + std::to_string(max_degree) + " needs moments m_0..m_" +
                         std::to_string(max_degree) + ", have up to m_" +
                         std::to_string(m.max_index()));
    }
}


}  // namespace

template <Scalar S>
OrthonormalSystem<S> gram_schmidt(const RadialMomentSequence<S>& m, int max_degree) {
    require_moments(m, max_degree);
    using Poly = BivariatePolynomial<S>;
    std::vector<const Poly*> done;
    typename OrthonormalSystem<S>::Polynomials polys;
    const int passes = is_exact_v<S> ? 1 : 2;

    for (int degree = 0; degree <= max_degree; ++degree) {
        for (int k = degree; k >= 0; --k) {
            const int l = degree - k;
            Poly w = Poly::monomial(k, l);
            for (int pass = 0; pass < passes; ++pass) {
                for (const Poly* p : done) {
                    S projection = inner_product(*p, w, m);
                    if (!is_zero(projection)) w -= *p * projection;
                }
            }
            S norm_sq = inner_product(w, w, m);
            const int sector = std::abs(k - l);
            const int index = std::min(k, l);
            bool degenerate = false;
            if constexpr (is_exact_v<S>) {
                degenerate = !is_positive(norm_sq);
            } else {
                // squared norm of z^k zbar^l itself is m_{k+l}
                degenerate = norm_sq <= kPivotFloor * m[k + l];
            }
            if (degenerate) throw DegenerateMeasure(sector, index + 1);
            w *= S(1) / square_root(norm_sq);
            auto [it, inserted] = polys.emplace(Monomial{k, l}, std::move(w));
            done.push_back(&it->second);
        }
    }
    return OrthonormalSystem<S>(max_degree, Construction::gram_schmidt, std::move(polys));
}

template <Scalar S>
OrthonormalSystem<S> sector_cholesky(const RadialMomentSequence<S>& m, int max_degree) {
    require_moments(m, max_degree);
    typename OrthonormalSystem<S>::Polynomials polys;
    for (int sector = 0; sector <= max_degree; ++sector) {
        const int size = (max_degree - sector) / 2 + 1;
        Matrix<S> hankel(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) hankel(i, j) = m[sector + i + j];
        auto factor = cholesky(hankel);
        if (factor.failed_at >= 0) throw DegenerateMeasure(sector, factor.failed_at + 1);
        // Rows of L^{-1} hold the coefficients of z^sector * p_i(z zbar).
        Matrix<S> inverse = invert_lower(factor.lower);
        for (int i = 0; i < size; ++i) {
            BivariatePolynomial<S> p;
            for (int j = 0; j <= i; ++j) p.add_term({sector + j, j}, inverse(i, j));
            if (sector > 0) polys.emplace(Monomial{i, sector + i}, conjugate_swap(p));
            polys.emplace(Monomial{sector + i, i}, std::move(p));
        }
    }
    return OrthonormalSystem<S>(max_degree, Construction::sector_cholesky, std::move(polys));
}

template <Scalar S>
AlphaTable<S> extract_alphas(const OrthonormalSystem<S>& sys, const RadialMomentSequence<S>& m,
                             const Tolerance& tolerance) {
    const int n = sys.max_degree();
    AlphaTable<S> table;
    for (int k = 0; k + 1 <= n; ++k) {
        for (int l = 0; k + l + 1 <= n; ++l) {
            auto shifted = sys.at(k, l).shifted(1, 0);
            S alpha = inner_product(sys.at(k + 1, l), shifted, m);
            if (!is_positive(alpha)) throw RecurrenceViolation(k, l, "alpha is not positive");
            table.set(k, l, alpha);
        }
    }
    // z P_{k,l} must be alpha_{k,l} P_{k+1,l} + alpha_{l-1,k} P_{k,l-1} exactly.
    for (const auto& [index, alpha] : table.entries()) {
        const auto [k, l] = index;
        auto shifted = sys.at(k, l).shifted(1, 0);
        auto residual = shifted - sys.at(k + 1, l) * alpha;
        if (l >= 1) {
            S cross = inner_product(sys.at(k, l - 1), shifted, m);
            S expected = table(l - 1, k);
            if constexpr (is_exact_v<S>) {
                if (!(cross == expected)) {
                    throw RecurrenceViolation(k, l, "down coefficient " + cross.str() +
                                                        " differs from alpha_{l-1,k} = " +
                                                        expected.str());
                }
            } else {
                if (!tolerance.accepts(magnitude(S(cross - expected)), magnitude(expected))) {
                    throw RecurrenceViolation(k, l, "down coefficient " + format_scalar(cross) +
                                                        " differs from alpha_{l-1,k} = " +
                                                        format_scalar(expected));
                }
            }
            residual -= sys.at(k, l - 1) * cross;
        }
        if constexpr (is_exact_v<S>) {
            if (!residual.is_zero()) {
                throw RecurrenceViolation(k, l, "z P has a component outside the recurrence span");
            }
        } else {
            // Expand the residual in the orthonormal basis: the quadratic form
            // <r, r> itself cancels catastrophically in floating point.
            const int target_sector = k + 1 - l;
            double leak_sq = 0.0;
            for (const auto& [mono, p] : sys.polynomials()) {
                if (mono.z_power - mono.zbar_power != target_sector) continue;
                if (mono.degree() > k + l + 1) continue;
                const double c = to_double(inner_product(p, residual, m));
                leak_sq += c * c;
            }
            double leak = std::sqrt(leak_sq);
            double scale = std::sqrt(std::max(0.0, to_double(inner_product(shifted, shifted, m))));
            if (!tolerance.accepts(leak, scale)) {
                throw RecurrenceViolation(k, l, "z P leaks " + format_double(leak) +
                                                    " outside the recurrence span");
            }
        }
    }
    return table;
}

namespace {

template <Scalar S>
double max_coefficient(const BivariatePolynomial<S>& p) {
    double out = 0.0;
    for (const auto& [mono, c] : p.terms()) out = std::max(out, magnitude(c));
    return out;
}

template <Scalar S>
void observe_polynomial(CheckResult& check, const BivariatePolynomial<S>& residual, double scale,
                        const Tolerance& tolerance, const std::vector<int>& where) {
    if (residual.is_zero()) {
        check.observe(S(0), scale, tolerance, where);
        return;
    }
    for (const auto& [mono, c] : residual.terms()) check.observe(c, scale, tolerance, where);
}

}  // namespace

template <Scalar S>
CheckResult verify_recurrence(const OrthonormalSystem<S>& sys, const AlphaTable<S>& a,
                              const Tolerance& tolerance) {
    CheckResult check;
    check.name = "recurrence";
    check.arithmetic = arithmetic_of<S>;
    const int n = sys.max_degree();
    for (int k = 0; k + 1 <= n; ++k) {
        for (int l = 0; k + l + 1 <= n; ++l) {
            const auto& p = sys.at(k, l);

            auto up = p.shifted(1, 0);
            double scale = max_coefficient(up);
            auto residual = up - sys.at(k + 1, l) * a(k, l);
            if (l >= 1) residual -= sys.at(k, l - 1) * a(l - 1, k);
            observe_polynomial(check, residual, scale, tolerance, {k, l, 0});

            auto conj = p.shifted(0, 1);
            scale = max_coefficient(conj);
            auto conj_residual = conj - sys.at(k, l + 1) * a(l, k);
            if (k >= 1) conj_residual -= sys.at(k - 1, l) * a(k - 1, l);
            observe_polynomial(check, conj_residual, scale, tolerance, {k, l, 1});
        }
    }
    return check;
}

template <Scalar S>
RelationsReport verify_relations(const AlphaTable<S>& a, const Tolerance& tolerance) {
    RelationsReport report;
    report.positivity.name = "positivity";
    report.product_relation.name = "product_relation";
    report.square_relation.name = "square_relation";
    for (auto* c : {&report.positivity, &report.product_relation, &report.square_relation}) {
        c->arithmetic = arithmetic_of<S>;
    }

    for (const auto& [index, value] : a.entries()) {
        const auto [k, l] = index;
        if (is_positive(value)) {
            report.positivity.record_pass();
        } else {
            report.positivity.record_failure(magnitude(value), format_scalar(value), {k, l});
        }

        if (a.contains(l, k + 1) && a.contains(l, k) && a.contains(k, l + 1)) {
            S lhs = value * a(l, k + 1);
            S rhs = a(l, k) * a(k, l + 1);
            double scale = std::max(magnitude(lhs), magnitude(rhs));
            report.product_relation.observe(S(lhs - rhs), scale, tolerance, {k, l});
        }

        if (a.contains(l, k) && a.contains(l - 1, k) && a.contains(k - 1, l)) {
            S down_l = a(l - 1, k);
            S down_k = a(k - 1, l);
            S swapped = a(l, k);
            S lhs = value * value + down_l * down_l;
            S rhs = swapped * swapped + down_k * down_k;
            double scale = std::max(magnitude(lhs), magnitude(rhs));
            report.square_relation.observe(S(lhs - rhs), scale, tolerance, {k, l});
        }
    }
    return report;
}

template <Scalar S>
CheckResult verify_orthonormality(const OrthonormalSystem<S>& sys,
                                  const RadialMomentSequence<S>& m, const Tolerance& tolerance) {
    CheckResult check;
    check.name = "orthonormality";
    check.arithmetic = arithmetic_of<S>;
    for (const auto& [a, p] : sys.polynomials()) {
        for (const auto& [b, q] : sys.polynomials()) {
            if (b < a) continue;
            S value = inner_product(p, q, m);
            if (a == b) value -= S(1);
            check.observe(value, 1.0, tolerance, {a.z_power, a.zbar_power, b.z_power, b.zbar_power});
        }
    }
    return check;
}

template <Scalar S>
CheckResult verify_conjugation_symmetry(const OrthonormalSystem<S>& sys,
                                        const Tolerance& tolerance) {
    CheckResult check;
    check.name = "conjugation_symmetry";
    check.arithmetic = arithmetic_of<S>;
    for (const auto& [mono, p] : sys.polynomials()) {
        if (!sys.contains(mono.zbar_power, mono.z_power)) continue;
        auto residual = conjugate_swap(p) - sys.at(mono.zbar_power, mono.z_power);
        observe_polynomial(check, residual, max_coefficient(p), tolerance,
                           {mono.z_power, mono.zbar_power});
    }
    return check;
}

template <Scalar S>
CheckResult compare_systems(const OrthonormalSystem<S>& a, const OrthonormalSystem<S>& b,
                            const Tolerance& tolerance) {
    CheckResult check;
    check.name = "construction_agreement";
    check.arithmetic = arithmetic_of<S>;
    for (const auto& [mono, p] : a.polynomials()) {
        if (!b.contains(mono.z_power, mono.zbar_power)) continue;
        const auto& q = b.at(mono.z_power, mono.zbar_power);
        double scale = std::max(max_coefficient(p), max_coefficient(q));
        observe_polynomial(check, p - q, scale, tolerance, {mono.z_power, mono.zbar_power});
    }
    return check;
}

#define ORTHOFIELD_INSTANTIATE_ORTHOSYSTEM(S)                                                  \
    template class OrthonormalSystem<S>;                                                       \
    template class AlphaTable<S>;                                                              \
    template OrthonormalSystem<S> gram_schmidt(const RadialMomentSequence<S>&, int);           \
    template OrthonormalSystem<S> sector_cholesky(const RadialMomentSequence<S>&, int);        \
    template AlphaTable<S> extract_alphas(const OrthonormalSystem<S>&,                         \
                                          const RadialMomentSequence<S>&, const Tolerance&);   \
    template CheckResult verify_recurrence(const OrthonormalSystem<S>&, const AlphaTable<S>&,  \
                                           const Tolerance&);                                  \
    template RelationsReport verify_relations(const AlphaTable<S>&, const Tolerance&);         \
    template CheckResult verify_orthonormality(const OrthonormalSystem<S>&,                    \
                                               const RadialMomentSequence<S>&,                 \
                                               const Tolerance&);                              \
    template CheckResult verify_conjugation_symmetry(const OrthonormalSystem<S>&,              \
                                                     const Tolerance&);                        \
    template CheckResult compare_systems(const OrthonormalSystem<S>&,                          \
                                         const OrthonormalSystem<S>&, const Tolerance&);

ORTHOFIELD_INSTANTIATE_ORTHOSYSTEM(Real)
ORTHOFIELD_INSTANTIATE_ORTHOSYSTEM(Surd)

}  // namespace orthofield
