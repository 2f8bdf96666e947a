#pragma once

#include "orthofield/checks.hpp"
#include "orthofield/matrix.hpp"
#include "orthofield/orthosystem.hpp"

#include <cstddef>

namespace orthofield {

/// Truncated representation of the field operator on the basis e_{k,l},
/// 0 <= k, l <= cutoff, ordered row-major by (k, l). k counts particles,
/// l antiparticles, and e_{0,0} is the vacuum.
///
/// phi = k_star + lambda, where k_star raises k and lambda lowers l. Moves
/// that leave the grid are dropped.
template <Scalar S>
struct LadderRep {
    int cutoff = 0;
    Matrix<S> phi;
    Matrix<S> phi_star;
    Matrix<S> k_star;
    Matrix<S> lambda;
    Matrix<S> n_particles;
    Matrix<S> n_antiparticles;

    std::size_t dimension() const { return static_cast<std::size_t>((cutoff + 1) * (cutoff + 1)); }
    std::size_t index(int k, int l) const { return static_cast<std::size_t>(k * (cutoff + 1) + l); }
};

// Needs alpha_{k,l} for all 0 <= k, l <= cutoff; throws MissingAlpha.
template <Scalar S>
LadderRep<S> build_ladder_rep(const AlphaTable<S>& a, int cutoff);

// Commutator phi phi* - phi* phi restricted to rows and columns with
// k, l <= cutoff - 1. `worst` is {row k, row l, col k, col l}.
template <Scalar S>
CheckResult verify_normality_interior(const LadderRep<S>& rep, const Tolerance& tolerance = {});

// <e_00, phi^k phi*^l e_00>, exact under truncation. Throws CutoffTooSmall
// unless k, l <= cutoff.
template <Scalar S>
S vacuum_moment(const LadderRep<S>& rep, int k, int l);

template <Scalar S>
struct PhiSplit {
    Matrix<S> k_star;       // particle creator
    Matrix<S> lambda;       // antiparticle annihilator
    Matrix<S> k;            // particle annihilator, adjoint of k_star
    Matrix<S> lambda_star;  // antiparticle creator, adjoint of lambda
};

template <Scalar S>
PhiSplit<S> split_phi(const LadderRep<S>& rep);

}  // namespace orthofield
