#pragma once

#include "orthofield/checks.hpp"
#include "orthofield/ladder.hpp"
#include "orthofield/matrix.hpp"
#include "orthofield/orthosystem.hpp"

#include <optional>
#include <vector>

namespace orthofield {

// [n]_{q^2} = 1 + q^2 + ... + q^{2(n-1)}, i.e. (1 - q^{2n})/(1 - q^2), with
// [n] = n at q = 1.
template <Scalar S>
S q_number(const S& q, int n);

// Table alpha_{k,l} = c sqrt([k+1]_{q^2}) q^l for k + l + 1 <= max_degree.
// Floating mode uses the quotient form away from q = 1 and sqrt(k+1) within
// 1e-9 of it; exact mode sums the geometric series. Throws InvalidParameter
// unless q > 0 and c > 0.
template <Scalar S>
AlphaTable<S> closed_form_alphas(const S& q, const S& c, int max_degree);

// Same values on the full square 0 <= k, l <= cutoff, as a ladder needs.
template <Scalar S>
AlphaTable<S> closed_form_square(const S& q, const S& c, int cutoff);

template <Scalar S>
struct FactorizationResult {
    bool factorizable = false;
    // Set when the log-domain rank-one test passes.
    bool rank_one = false;
    S q{};
    S c{};
    // max over entries of |log(alpha_{k,l} alpha_{0,0}) - log(alpha_{k,0} alpha_{0,l})|
    double log_residual = 0.0;
    std::vector<int> worst_entry;
    // First entry, in graded order, whose log residual exceeds the tolerance.
    std::optional<std::vector<int>> first_violation;
    double first_violation_residual = 0.0;
    // max relative deviation from closed_form_alphas(q, c); exact mode: 0 or
    // the largest |difference| when any entry differs.
    double closed_form_residual = 0.0;
    std::vector<S> f;  // f_k = alpha_{k,0}
    std::vector<S> g;  // g_l = q^l
};

// Throws IncompleteTable (table must cover k + l + 1 <= N with N >= 3) and
// NonPositiveEntry.
template <Scalar S>
FactorizationResult<S> detect_factorization(const AlphaTable<S>& a, double tolerance = 1e-8);

/// Two-mode q-deformed Fock operators on e_{k,l}, 0 <= k, l <= cutoff.
template <Scalar S>
struct QFockOperators {
    int cutoff = 0;
    S q{};
    S c{};
    Matrix<S> a_k;        // e_{k,l} -> sqrt([k]) e_{k-1,l}
    Matrix<S> a_k_star;
    Matrix<S> a_l;        // e_{k,l} -> sqrt([l]) e_{k,l-1}
    Matrix<S> a_l_star;
    Matrix<S> q_pow_n_k;  // diag(q^k)
    Matrix<S> q_pow_n_l;  // diag(q^l)
    Matrix<S> k_star_model;  // c a_k* q^{N_l}
    Matrix<S> lambda_model;  // c a_l q^{N_k}
};

template <Scalar S>
QFockOperators<S> q_fock_operators(const S& q, const S& c, int cutoff);

struct QRelationsReport {
    CheckResult deformed_k;        // a_k a_k* - q^2 a_k* a_k - 1
    CheckResult deformed_l;        // a_l a_l* - q^2 a_l* a_l - 1
    CheckResult cross_commutators; // [a_k,a_l], [a_k*,a_l*], [a_k*,a_l], [a_k,a_l*]
    CheckResult k_star_reconstruction;
    CheckResult lambda_reconstruction;

    bool passed() const {
        return deformed_k.passed() && deformed_l.passed() && cross_commutators.passed() &&
               k_star_reconstruction.passed() && lambda_reconstruction.passed();
    }
};

// Interior residuals (k, l <= cutoff - 1) of the deformed commutation
// relations and of K* = c A_k* q^{N_l}, Lambda = c A_l q^{N_k} against a
// ladder built from the closed-form table. Throws InvalidParameter when the
// cutoffs differ.
template <Scalar S>
QRelationsReport verify_q_relations(const QFockOperators<S>& ops, const LadderRep<S>& rep,
                                    const Tolerance& tolerance = {});

}  // namespace orthofield
