#pragma once

#include "orthofield/errors.hpp"
#include "orthofield/exact.hpp"
#include "orthofield/measures.hpp"
#include "orthofield/orthosystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace orthofield::testing {

inline MeasureSpec gaussian(const std::string& sigma) {
    return MeasureSpec{Gaussian{Parameter::parse(sigma)}};
}

inline MeasureSpec disc(const std::string& radius) {
    return MeasureSpec{UniformDisc{Parameter::parse(radius)}};
}

inline MeasureSpec circle() { return MeasureSpec{UnitCircle{}}; }

inline MeasureSpec closed_form(const std::string& q, const std::string& c) {
    return MeasureSpec{ClosedForm{Parameter::parse(q), Parameter::parse(c)}};
}

inline MeasureSpec explicit_moments(const std::vector<std::string>& moments) {
    ExplicitMoments e;
    for (const auto& m : moments) e.moments.push_back(Parameter::parse(m));
    return MeasureSpec{e};
}

inline Surd surd(const std::string& text) { return *Surd::parse(text); }

// Determinant by fraction-exact Gaussian elimination, independent of the
// library's Cholesky.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    return det;
}

// D^{(d)}_i = det of the leading (i+1)x(i+1) block of H^{(d)}_{ab} = m_{d+a+b};
// D_{-1} = 1.
inline Rational hankel_minor(const std::vector<Rational>& m, int d, int i) {
    if (i < 0) return 1;
    std::vector<std::vector<Rational>> h(i + 1, std::vector<Rational>(i + 1));
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= i; ++b) h[a][b] = m.at(d + a + b);
    return determinant(h);
}

// Squared leading coefficient of P_{k,l}: D_{i-1}/D_i in sector |k-l|, i = min(k,l).
inline Rational leading_sq(const std::vector<Rational>& m, int k, int l) {
    const int d = std::abs(k - l);
    const int i = std::min(k, l);
    return hankel_minor(m, d, i - 1) / hankel_minor(m, d, i);
}

// alpha_{k,l}^2 from Hankel determinant ratios: comparing leading
// coefficients in z P_{k,l} = alpha_{k,l} P_{k+1,l} + (lower degree).
inline Rational alpha_sq_oracle(const std::vector<Rational>& m, int k, int l) {
    return leading_sq(m, k, l) / leading_sq(m, k + 1, l);
}

// <e_00, phi^k phi*^l e_00> summed over every lattice path on the untruncated
// grid, with alpha supplied pointwise.
inline Surd vacuum_paths(const std::function<Surd(int, int)>& alpha, int k, int l) {
    auto a = [&](int i, int j) { return i < 0 ? Surd(0) : alpha(i, j); };
    // steps remaining: first `l` applications of phi*, then `k` of phi.
    std::function<Surd(int, int, int, int)> walk = [&](int x, int y, int stars, int phis) -> Surd {
        if (stars == 0 && phis == 0) return (x == 0 && y == 0) ? Surd(1) : Surd(0);
        if (x + y > stars + phis) return Surd(0);  // cannot return to the vacuum
        Surd total;
        if (stars > 0) {
            // phi* e_{x,y} = alpha_{x-1,y} e_{x-1,y} + alpha_{y,x} e_{x,y+1}
            if (x >= 1) total += a(x - 1, y) * walk(x - 1, y, stars - 1, phis);
            total += a(y, x) * walk(x, y + 1, stars - 1, phis);
        } else {
            // phi e_{x,y} = alpha_{x,y} e_{x+1,y} + alpha_{y-1,x} e_{x,y-1}
            total += a(x, y) * walk(x + 1, y, 0, phis - 1);
            if (y >= 1) total += a(y - 1, x) * walk(x, y - 1, 0, phis - 1);
        }
        return total;
    };
    return walk(0, 0, l, k);
}

// Finite mixture of uniform circle measures: m_n = sum_i w_i r_i^{2n}.
// With at least `rings` distinct radii every sector Hankel block of order
// <= rings is positive definite.
struct RingMixture {
    std::vector<Rational> weights;
    std::vector<Rational> radii_sq;

    std::vector<Rational> moments(int n_max) const {
        std::vector<Rational> out(n_max + 1, Rational(0));
        for (std::size_t i = 0; i < weights.size(); ++i) {
            Rational power = 1;
            for (int n = 0; n <= n_max; ++n) {
                out[n] += weights[i] * power;
                power *= radii_sq[i];
            }
        }
        return out;
    }
};

inline RingMixture random_rings(std::mt19937& rng, int rings) {
    std::uniform_int_distribution<int> numerator(1, 9);
    std::uniform_int_distribution<int> denominator(1, 5);
    RingMixture mix;
    Rational total = 0;
    std::vector<Rational> raw;
    for (int i = 0; i < rings; ++i) {
        raw.push_back(Rational(numerator(rng), denominator(rng)));
        raw.back().canonicalize();
        total += raw.back();
    }
    for (auto& w : raw) mix.weights.push_back(w / total);
    // r_i^2 = (i + 1 + j/7) / (rings + 1) with random j in 0..6: distinct, below 1.
    std::uniform_int_distribution<int> offset(0, 6);
    for (int i = 0; i < rings; ++i) {
        Rational r(7 * (i + 1) + offset(rng), 7 + 7 * rings);
        r.canonicalize();
        mix.radii_sq.push_back(r);
    }
    return mix;
}

inline std::vector<std::string> as_text(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
}

}  // namespace orthofield::testing
