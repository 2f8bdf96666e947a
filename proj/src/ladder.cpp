#include "orthofield/ladder.hpp"

#include "orthofield/errors.hpp"

namespace orthofield {

template <Scalar S>
LadderRep<S> build_ladder_rep(const AlphaTable<S>& a, int cutoff) {
    if (cutoff < 0) throw InvalidParameter("ladder cutoff must be nonnegative");
    LadderRep<S> rep;
    rep.cutoff = cutoff;
    const std::size_t n = rep.dimension();
    rep.k_star = Matrix<S>(n, n);
    rep.lambda = Matrix<S>(n, n);
    rep.n_particles = Matrix<S>(n, n);
    rep.n_antiparticles = Matrix<S>(n, n);
    for (int k = 0; k <= cutoff; ++k) {
        for (int l = 0; l <= cutoff; ++l) {
            const std::size_t col = rep.index(k, l);
            // phi e_{k,l} = alpha_{k,l} e_{k+1,l} + alpha_{l-1,k} e_{k,l-1}
            S up = a(k, l);
            if (k + 1 <= cutoff) rep.k_star(rep.index(k + 1, l), col) = up;
            if (l >= 1) rep.lambda(rep.index(k, l - 1), col) = a(l - 1, k);
            rep.n_particles(col, col) = S(k);
            rep.n_antiparticles(col, col) = S(l);
        }
    }
    rep.phi = rep.k_star + rep.lambda;
    rep.phi_star = rep.phi.transpose();
    return rep;
}

template <Scalar S>
CheckResult verify_normality_interior(const LadderRep<S>& rep, const Tolerance& tolerance) {
    CheckResult check;
    check.name = "normality_interior";
    check.arithmetic = arithmetic_of<S>;
    if (rep.cutoff < 2) throw CutoffTooSmall("normality check needs cutoff >= 2");
    Matrix<S> forward = rep.phi * rep.phi_star;
    Matrix<S> backward = rep.phi_star * rep.phi;
    const int inner = rep.cutoff - 1;
    for (int k = 0; k <= inner; ++k) {
        for (int l = 0; l <= inner; ++l) {
            for (int kk = 0; kk <= inner; ++kk) {
                for (int ll = 0; ll <= inner; ++ll) {
                    const auto i = rep.index(k, l);
                    const auto j = rep.index(kk, ll);
                    double scale = std::max(magnitude(forward(i, j)), magnitude(backward(i, j)));
                    check.observe(S(forward(i, j) - backward(i, j)), scale, tolerance,
                                  {k, l, kk, ll});
                }
            }
        }
    }
    return check;
}

template <Scalar S>
S vacuum_moment(const LadderRep<S>& rep, int k, int l) {
    if (k < 0 || l < 0) throw InvalidParameter("moment orders must be nonnegative");
    // phi* only raises l from the vacuum, and phi then has to walk back, so
    // no path leaves the box k' <= k, l' <= l.
    if (std::max(k, l) > rep.cutoff) {
        throw CutoffTooSmall("vacuum moment (" + std::to_string(k) + "," + std::to_string(l) +
                             ") needs cutoff >= " + std::to_string(std::max(k, l)) + ", have " +
                             std::to_string(rep.cutoff));
    }
    std::vector<S> v(rep.dimension());
    v[rep.index(0, 0)] = S(1);
    for (int i = 0; i < l; ++i) v = rep.phi_star.apply(v);
    for (int i = 0; i < k; ++i) v = rep.phi.apply(v);
    return v[rep.index(0, 0)];
}

template <Scalar S>
PhiSplit<S> split_phi(const LadderRep<S>& rep) {
    return {rep.k_star, rep.lambda, rep.k_star.transpose(), rep.lambda.transpose()};
}

#define ORTHOFIELD_INSTANTIATE_LADDER(S)                                                  \
    template LadderRep<S> build_ladder_rep(const AlphaTable<S>&, int);                    \
    template CheckResult verify_normality_interior(const LadderRep<S>&, const Tolerance&); \
    template S vacuum_moment(const LadderRep<S>&, int, int);                              \
    template PhiSplit<S> split_phi(const LadderRep<S>&);

ORTHOFIELD_INSTANTIATE_LADDER(Real)
ORTHOFIELD_INSTANTIATE_LADDER(Surd)

}  // namespace orthofield
