#include "orthofield/factorize.hpp"

#include "orthofield/errors.hpp"

#include <algorithm>
#include <cmath>

namespace orthofield {

namespace {

template <Scalar S>
S power(const S& base, int exponent) {
    S out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

template <Scalar S>
void require_positive(const S& q, const S& c) {
    if (!is_positive(q)) throw InvalidParameter("q must be positive, got " + format_scalar(q));
    if (!is_positive(c)) throw InvalidParameter("c must be positive, got " + format_scalar(c));
}

template <Scalar S>
S closed_form_entry(const S& q, const S& c, int k, int l) {
    return c * square_root(q_number(q, k + 1)) * power(q, l);
}

}  // namespace

template <Scalar S>
S q_number(const S& q, int n) {
    if constexpr (is_exact_v<S>) {
        S q_sq = q * q;
        S term(1);
        S sum(0);
        for (int i = 0; i < n; ++i) {
            sum += term;
            term *= q_sq;
        }
        return sum;
    } else {
        if (magnitude(Real(q - 1)) <= 1e-9) return Real(n);
        const Real q_sq = q * q;
        return (1 - pow(q_sq, n)) / (1 - q_sq);
    }
}

template <Scalar S>
AlphaTable<S> closed_form_alphas(const S& q, const S& c, int max_degree) {
    require_positive(q, c);
    AlphaTable<S> table;
    for (int k = 0; k + 1 <= max_degree; ++k)
        for (int l = 0; k + l + 1 <= max_degree; ++l) table.set(k, l, closed_form_entry(q, c, k, l));
    return table;
}

template <Scalar S>
AlphaTable<S> closed_form_square(const S& q, const S& c, int cutoff) {
    require_positive(q, c);
    AlphaTable<S> table;
    for (int k = 0; k <= cutoff; ++k)
        for (int l = 0; l <= cutoff; ++l) table.set(k, l, closed_form_entry(q, c, k, l));
    return table;
}

template <Scalar S>
FactorizationResult<S> detect_factorization(const AlphaTable<S>& a, double tolerance) {
    const int n = a.complete_degree();
    if (n < 3) {
        throw IncompleteTable("factorization test needs every alpha_{k,l} with k + l + 1 <= 3; "
                              "table is complete only to degree " + std::to_string(n));
    }
    for (int k = 0; k + 1 <= n; ++k)
        for (int l = 0; k + l + 1 <= n; ++l)
            if (!is_positive(a(k, l))) throw NonPositiveEntry(k, l);

    FactorizationResult<S> out;
    const double log_corner = std::log(to_double(a(0, 0)));
    // Graded order: total degree ascending, k descending within a degree.
    for (int degree = 0; degree + 1 <= n; ++degree) {
        for (int k = degree; k >= 0; --k) {
            const int l = degree - k;
            double residual = std::fabs(std::log(to_double(a(k, l))) + log_corner -
                                        std::log(to_double(a(k, 0))) -
                                        std::log(to_double(a(0, l))));
            if (residual > out.log_residual || out.worst_entry.empty()) {
                out.log_residual = residual;
                out.worst_entry = {k, l};
            }
            if (residual > tolerance && !out.first_violation) {
                out.first_violation = std::vector<int>{k, l};
                out.first_violation_residual = residual;
            }
        }
    }

    // The lowest-index entries fix the normalization g_l = q^l, c = alpha_{0,0}.
    out.c = a(0, 0);
    out.q = a(0, 1) / a(0, 0);
    for (int k = 0; k + 1 <= n; ++k) out.f.push_back(a(k, 0));
    for (int l = 0; l + 1 <= n; ++l) out.g.push_back(power(out.q, l));
    out.rank_one = out.log_residual <= tolerance;
    if (!out.rank_one) return out;

    auto model = closed_form_alphas(out.q, out.c, n);
    bool matches = true;
    for (const auto& [index, expected] : model.entries()) {
        const S actual = a(index.first, index.second);
        if constexpr (is_exact_v<S>) {
            if (!(actual == expected)) {
                matches = false;
                out.closed_form_residual =
                    std::max(out.closed_form_residual, magnitude(S(actual - expected)));
            }
        } else {
            double relative = magnitude(S(actual - expected)) / magnitude(expected);
            out.closed_form_residual = std::max(out.closed_form_residual, relative);
        }
    }
    if constexpr (!is_exact_v<S>) matches = out.closed_form_residual <= tolerance;
    out.factorizable = matches;
    return out;
}

template <Scalar S>
QFockOperators<S> q_fock_operators(const S& q, const S& c, int cutoff) {
    require_positive(q, c);
    if (cutoff < 1) throw InvalidParameter("q-Fock operators need cutoff >= 1");
    QFockOperators<S> ops;
    ops.cutoff = cutoff;
    ops.q = q;
    ops.c = c;
    const std::size_t side = static_cast<std::size_t>((cutoff + 1) * (cutoff + 1));
    auto index = [cutoff](int k, int l) { return static_cast<std::size_t>(k * (cutoff + 1) + l); };
    ops.a_k = Matrix<S>(side, side);
    ops.a_l = Matrix<S>(side, side);
    ops.q_pow_n_k = Matrix<S>(side, side);
    ops.q_pow_n_l = Matrix<S>(side, side);
    std::vector<S> roots;
    std::vector<S> powers;
    for (int n = 0; n <= cutoff; ++n) {
        roots.push_back(square_root(q_number(q, n)));
        powers.push_back(power(q, n));
    }
    for (int k = 0; k <= cutoff; ++k) {
        for (int l = 0; l <= cutoff; ++l) {
            const auto col = index(k, l);
            if (k >= 1) ops.a_k(index(k - 1, l), col) = roots[k];
            if (l >= 1) ops.a_l(index(k, l - 1), col) = roots[l];
            ops.q_pow_n_k(col, col) = powers[k];
            ops.q_pow_n_l(col, col) = powers[l];
        }
    }
    ops.a_k_star = ops.a_k.transpose();
    ops.a_l_star = ops.a_l.transpose();
    ops.k_star_model = c * (ops.a_k_star * ops.q_pow_n_l);
    ops.lambda_model = c * (ops.a_l * ops.q_pow_n_k);
    return ops;
}

namespace {

template <Scalar S>
void observe_interior(CheckResult& check, const Matrix<S>& lhs, const Matrix<S>& rhs, int cutoff,
                      const Tolerance& tolerance) {
    const int inner = cutoff - 1;
    auto index = [cutoff](int k, int l) { return static_cast<std::size_t>(k * (cutoff + 1) + l); };
    for (int k = 0; k <= inner; ++k)
        for (int l = 0; l <= inner; ++l)
            for (int kk = 0; kk <= inner; ++kk)
                for (int ll = 0; ll <= inner; ++ll) {
                    const auto i = index(k, l);
                    const auto j = index(kk, ll);
                    double scale = std::max(magnitude(lhs(i, j)), magnitude(rhs(i, j)));
                    check.observe(S(lhs(i, j) - rhs(i, j)), scale, tolerance, {k, l, kk, ll});
                }
}

}  // namespace

template <Scalar S>
QRelationsReport verify_q_relations(const QFockOperators<S>& ops, const LadderRep<S>& rep,
                                    const Tolerance& tolerance) {
    if (ops.cutoff != rep.cutoff) throw InvalidParameter("operator and ladder cutoffs differ");
    const int cutoff = ops.cutoff;
    const std::size_t side = ops.a_k.rows();
    const auto one = Matrix<S>::identity(side);
    const S q_sq = ops.q * ops.q;

    QRelationsReport report;
    report.deformed_k.name = "deformed_commutator_particles";
    report.deformed_l.name = "deformed_commutator_antiparticles";
    report.cross_commutators.name = "cross_commutators";
    report.k_star_reconstruction.name = "k_star_reconstruction";
    report.lambda_reconstruction.name = "lambda_reconstruction";
    for (auto* c : {&report.deformed_k, &report.deformed_l, &report.cross_commutators,
                    &report.k_star_reconstruction, &report.lambda_reconstruction}) {
        c->arithmetic = arithmetic_of<S>;
    }

    observe_interior(report.deformed_k, Matrix<S>(ops.a_k * ops.a_k_star),
                     Matrix<S>(q_sq * (ops.a_k_star * ops.a_k) + one), cutoff, tolerance);
    observe_interior(report.deformed_l, Matrix<S>(ops.a_l * ops.a_l_star),
                     Matrix<S>(q_sq * (ops.a_l_star * ops.a_l) + one), cutoff, tolerance);

    const std::pair<const Matrix<S>*, const Matrix<S>*> pairs[] = {
        {&ops.a_k, &ops.a_l},
        {&ops.a_k_star, &ops.a_l_star},
        {&ops.a_k_star, &ops.a_l},
        {&ops.a_k, &ops.a_l_star},
    };
    for (const auto& [x, y] : pairs) {
        observe_interior(report.cross_commutators, Matrix<S>(*x * *y), Matrix<S>(*y * *x), cutoff,
                         tolerance);
    }

    observe_interior(report.k_star_reconstruction, rep.k_star, ops.k_star_model, cutoff, tolerance);
    observe_interior(report.lambda_reconstruction, rep.lambda, ops.lambda_model, cutoff, tolerance);
    return report;
}

#define ORTHOFIELD_INSTANTIATE_FACTORIZE(S)                                                   \
    template S q_number(const S&, int);                                                       \
    template AlphaTable<S> closed_form_alphas(const S&, const S&, int);                       \
    template AlphaTable<S> closed_form_square(const S&, const S&, int);                       \
    template FactorizationResult<S> detect_factorization(const AlphaTable<S>&, double);       \
    template QFockOperators<S> q_fock_operators(const S&, const S&, int);                     \
    template QRelationsReport verify_q_relations(const QFockOperators<S>&, const LadderRep<S>&, \
                                                 const Tolerance&);

ORTHOFIELD_INSTANTIATE_FACTORIZE(Real)
ORTHOFIELD_INSTANTIATE_FACTORIZE(Surd)

}  // namespace orthofield
