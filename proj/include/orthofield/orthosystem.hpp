#pragma once

#include "orthofield/bipoly.hpp"
#include "orthofield/checks.hpp"
#include "orthofield/measures.hpp"

#include <map>
#include <string>
#include <utility>

namespace orthofield {

enum class Construction { gram_schmidt, sector_cholesky };

std::string to_string(Construction source);

/// Orthonormal polynomials P_{k,l}, k + l <= max_degree, each with positive
/// leading coefficient at z^k zbar^l.
template <Scalar S>
class OrthonormalSystem {
public:
    using Polynomials = std::map<Monomial, BivariatePolynomial<S>>;

    OrthonormalSystem(int max_degree, Construction source, Polynomials polys)
        : max_degree_(max_degree), source_(source), polys_(std::move(polys)) {}

    int max_degree() const noexcept { return max_degree_; }
    Construction source() const noexcept { return source_; }
    const Polynomials& polynomials() const noexcept { return polys_; }

    bool contains(int k, int l) const { return polys_.count({k, l}) != 0; }
    // Throws OutOfRange for indices outside the system.
    const BivariatePolynomial<S>& at(int k, int l) const;

private:
    int max_degree_;
    Construction source_;
    Polynomials polys_;
};

/// Recurrence coefficients alpha_{k,l} for k, l >= 0. The boundary value
/// alpha_{-1,l} = 0 is implicit.
template <Scalar S>
class AlphaTable {
public:
    using Entries = std::map<std::pair<int, int>, S>;

    AlphaTable() = default;

    // True for stored entries and for the k = -1 boundary.
    bool contains(int k, int l) const;
    // Throws MissingAlpha for absent entries.
    S operator()(int k, int l) const;
    void set(int k, int l, const S& value) { entries_[{k, l}] = value; }
    const Entries& entries() const noexcept { return entries_; }

    // Largest N such that every (k,l) with k + l + 1 <= N is stored.
    int complete_degree() const;
    // Largest M such that every (k,l) with k, l <= M is stored; -1 if none.
    int complete_square() const;

private:
    Entries entries_;
};

// Graded Gram-Schmidt over 1, z, zbar, z^2, z zbar, zbar^2, ... up to total
// degree N. Needs m_0..m_N. Throws DegenerateMeasure.
template <Scalar S>
OrthonormalSystem<S> gram_schmidt(const RadialMomentSequence<S>& m, int max_degree);

// Same system assembled sector by sector from Cholesky factors of the Hankel
// blocks H^{(d)}. Throws DegenerateMeasure.
template <Scalar S>
OrthonormalSystem<S> sector_cholesky(const RadialMomentSequence<S>& m, int max_degree);

// alpha_{k,l} = <P_{k+1,l}, z P_{k,l}> for k + l + 1 <= N. Also confirms
// z P_{k,l} lies in span{P_{k+1,l}, P_{k,l-1}} with the second coefficient
// equal to alpha_{l-1,k}; throws RecurrenceViolation otherwise.
template <Scalar S>
AlphaTable<S> extract_alphas(const OrthonormalSystem<S>& sys, const RadialMomentSequence<S>& m,
                             const Tolerance& tolerance = {});

// Coefficient-wise residuals of
//   z P_{k,l}    - alpha_{k,l} P_{k+1,l} - alpha_{l-1,k} P_{k,l-1}
//   zbar P_{k,l} - alpha_{l,k} P_{k,l+1} - alpha_{k-1,l} P_{k-1,l}
// for k + l + 1 <= N. `worst` is {k, l, 0 for z | 1 for zbar}.
template <Scalar S>
CheckResult verify_recurrence(const OrthonormalSystem<S>& sys, const AlphaTable<S>& a,
                              const Tolerance& tolerance = {});

struct RelationsReport {
    CheckResult positivity;
    CheckResult product_relation;  // alpha_{k,l} alpha_{l,k+1} = alpha_{l,k} alpha_{k,l+1}
    CheckResult square_relation;   // alpha_{k,l}^2 + alpha_{l-1,k}^2 = alpha_{l,k}^2 + alpha_{k-1,l}^2

    bool passed() const {
        return positivity.passed() && product_relation.passed() && square_relation.passed();
    }
};

template <Scalar S>
RelationsReport verify_relations(const AlphaTable<S>& a, const Tolerance& tolerance = {});

// |<P_a, P_b> - delta_ab| over all stored pairs.
template <Scalar S>
CheckResult verify_orthonormality(const OrthonormalSystem<S>& sys,
                                  const RadialMomentSequence<S>& m,
                                  const Tolerance& tolerance = {});

// conjugate_swap(P_{k,l}) == P_{l,k}.
template <Scalar S>
CheckResult verify_conjugation_symmetry(const OrthonormalSystem<S>& sys,
                                        const Tolerance& tolerance = {});

// Entrywise coefficient agreement of two systems over their common indices.
template <Scalar S>
CheckResult compare_systems(const OrthonormalSystem<S>& a, const OrthonormalSystem<S>& b,
                            const Tolerance& tolerance = {});

}  // namespace orthofield
