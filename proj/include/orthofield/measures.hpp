#pragma once

#include "orthofield/scalar.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orthofield {

/// A numeric input as the user wrote it. "p/q", integers and "sqrt(p/q)"
/// forms are exact; decimal text is floating.
class Parameter {
public:
    Parameter() = default;

    // Throws InvalidParameter on unparsable text.
    static Parameter parse(std::string_view text);
    static Parameter exact(const Surd& value);
    static Parameter floating(Real value);

    bool is_exact() const noexcept { return exact_; }
    Real value() const noexcept { return value_; }
    const std::string& text() const noexcept { return text_; }
    // Throws InvalidParameter when the text was decimal.
    const Surd& exact_value() const;

    template <Scalar S>
    S as() const {
        if constexpr (is_exact_v<S>) {
            return exact_value();
        } else {
            return value_;
        }
    }

private:
    bool exact_ = false;
    Surd surd_;
    Real value_ = 0;
    std::string text_;
};

struct Gaussian {
    Parameter sigma;
};
struct UniformDisc {
    Parameter radius;
};
struct UnitCircle {};
struct ExplicitMoments {
    std::vector<Parameter> moments;
};
// Measure whose recurrence coefficients follow the factorized closed form
// with deformation q and scale c.
struct ClosedForm {
    Parameter q;
    Parameter c;
};

struct MeasureSpec {
    std::variant<Gaussian, UniformDisc, UnitCircle, ExplicitMoments, ClosedForm> kind;

    // "gaussian", "uniform-disc", "unit-circle", "explicit", "from-closed-form"
    std::string name() const;
    // True when every parameter is exact, so exact arithmetic is available.
    bool all_exact() const;
    // Throws InvalidParameter unless sigma, radius, q, c > 0.
    void validate() const;
};

/// The radial moments m_n = integral of |z|^{2n} dmu, n = 0..N, of a
/// rotation-invariant probability measure. Construction enforces m_0 = 1 and
/// m_n > 0.
template <Scalar S>
class RadialMomentSequence {
public:
    // Throws NotNormalized or NonPositiveMoment. In floating mode m_0 may
    // deviate from 1 by at most 1e-10.
    explicit RadialMomentSequence(std::vector<S> moments);

    int max_index() const noexcept { return static_cast<int>(moments_.size()) - 1; }
    // Throws OutOfRange past max_index().
    const S& operator[](int n) const;
    const std::vector<S>& values() const noexcept { return moments_; }
    static constexpr Arithmetic arithmetic() { return arithmetic_of<S>; }

private:
    std::vector<S> moments_;
};

// m_0..m_{n_max} of a named measure. Closed-form measures go through the
// vacuum moments of their ladder representation.
template <Scalar S>
RadialMomentSequence<S> radial_moments(const MeasureSpec& spec, int n_max);

// integral of z^k zbar^l dmu: m_k on the diagonal, zero elsewhere.
template <Scalar S>
S bivariate_moment(const RadialMomentSequence<S>& m, int k, int l);

struct SectorPivot {
    int sector = 0;
    int size = 0;
    double smallest_pivot = 0.0;
    std::string smallest_pivot_text;
};

struct NondegeneracyReport {
    int degree = 0;
    std::vector<SectorPivot> sectors;
    bool nondegenerate = true;
};

// Cholesky of every sector Hankel block H^{(d)}_{ij} = m_{d+i+j},
// d = 0..degree, of order floor((degree-d)/2)+1. Throws DegenerateMeasure on
// the first failing block.
template <Scalar S>
NondegeneracyReport check_nondegenerate(const RadialMomentSequence<S>& m, int degree);

// Density rho(r) of a rotation-invariant measure, supported on [0, support_radius].
struct RadialDensity {
    std::function<double(double)> density;
    double support_radius = 0.0;
};

RadialDensity gaussian_density(double sigma);
RadialDensity disc_density(double radius);

// m_n = integral_0^R r^{2n} rho(r) 2 pi r dr by composite 16-point
// Gauss-Legendre with `nodes` total nodes (>= 64). Throws NotAProbability
// when m_0 is off by more than 1e-10.
RadialMomentSequence<Real> quadrature_oracle_moments(const RadialDensity& density, int n_max,
                                                       int nodes);

}  // namespace orthofield
