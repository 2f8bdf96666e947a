#include "orthofield/measures.hpp"

#include "orthofield/errors.hpp"
#include "orthofield/factorize.hpp"
#include "orthofield/ladder.hpp"
#include "orthofield/matrix.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace orthofield {

Parameter Parameter::parse(std::string_view text) {
    Parameter out;
    out.text_ = std::string(text);
    if (auto surd = Surd::parse(text)) {
        out.exact_ = true;
        out.surd_ = *surd;
        out.value_ = to_real(*surd);
        return out;
    }
    std::string buffer(text);
    char* end = nullptr;
    const double value = std::strtod(buffer.c_str(), &end);
    if (buffer.empty() || end != buffer.c_str() + buffer.size() || !std::isfinite(value)) {
        throw InvalidParameter("cannot parse number '" + buffer + "'");
    }
    // Re-read at full precision so "0.7" is the nearest binary128 value.
    out.value_ = Real(buffer);
    return out;
}

Parameter Parameter::exact(const Surd& value) {
    Parameter out;
    out.exact_ = true;
    out.surd_ = value;
    out.value_ = to_real(value);
    out.text_ = value.str();
    return out;
}

Parameter Parameter::floating(Real value) {
    Parameter out;
    out.value_ = value;
    out.text_ = format_scalar(value);
    return out;
}

const Surd& Parameter::exact_value() const {
    if (!exact_) {
        throw InvalidParameter("'" + text_ +
                               "' is decimal; exact arithmetic needs \"p/q\" or \"sqrt(p/q)\"");
    }
    return surd_;
}

std::string MeasureSpec::name() const {
    struct Visitor {
        std::string operator()(const Gaussian&) const { return "gaussian"; }
        std::string operator()(const UniformDisc&) const { return "uniform-disc"; }
        std::string operator()(const UnitCircle&) const { return "unit-circle"; }
        std::string operator()(const ExplicitMoments&) const { return "explicit"; }
        std::string operator()(const ClosedForm&) const { return "from-closed-form"; }
    };
    return std::visit(Visitor{}, kind);
}

bool MeasureSpec::all_exact() const {
    struct Visitor {
        bool operator()(const Gaussian& g) const { return g.sigma.is_exact(); }
        bool operator()(const UniformDisc& d) const { return d.radius.is_exact(); }
        bool operator()(const UnitCircle&) const { return true; }
        bool operator()(const ExplicitMoments& e) const {
            for (const auto& m : e.moments)
                if (!m.is_exact()) return false;
            return true;
        }
        bool operator()(const ClosedForm& f) const { return f.q.is_exact() && f.c.is_exact(); }
    };
    return std::visit(Visitor{}, kind);
}

namespace {

void require_positive(const Parameter& p, const char* what) {
    bool positive = p.is_exact() ? p.exact_value().sign() > 0 : p.value() > 0.0;
    if (!positive) throw InvalidParameter(std::string(what) + " must be positive, got " + p.text());
}

}  // namespace

void MeasureSpec::validate() const {
    if (const auto* g = std::get_if<Gaussian>(&kind)) require_positive(g->sigma, "sigma");
    if (const auto* d = std::get_if<UniformDisc>(&kind)) require_positive(d->radius, "radius");
    if (const auto* f = std::get_if<ClosedForm>(&kind)) {
        require_positive(f->q, "q");
        require_positive(f->c, "c");
    }
    if (const auto* e = std::get_if<ExplicitMoments>(&kind)) {
        if (e->moments.empty()) throw InvalidParameter("explicit measure needs at least m_0");
    }
}

template <Scalar S>
RadialMomentSequence<S>::RadialMomentSequence(std::vector<S> moments)
    : moments_(std::move(moments)) {
    if (moments_.empty()) throw InvalidParameter("moment sequence is empty");
    if constexpr (is_exact_v<S>) {
        if (!(moments_[0] == Surd(1))) throw NotNormalized(moments_[0].str());
    } else {
        if (magnitude(S(moments_[0] - 1)) > 1e-10) throw NotNormalized(format_scalar(moments_[0]));
    }
    for (std::size_t n = 0; n < moments_.size(); ++n) {
        if (!is_positive(moments_[n])) {
            throw NonPositiveMoment(static_cast<int>(n), format_scalar(moments_[n]));
        }
    }
}

template <Scalar S>
const S& RadialMomentSequence<S>::operator[](int n) const {
    if (n < 0 || n > max_index()) {
        throw OutOfRange("moment m_" + std::to_string(n) + " requested, sequence ends at m_" +
                         std::to_string(max_index()));
    }
    return moments_[static_cast<std::size_t>(n)];
}

template <Scalar S>
RadialMomentSequence<S> radial_moments(const MeasureSpec& spec, int n_max) {
    if (n_max < 0) throw InvalidParameter("n_max must be nonnegative");
    spec.validate();
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);

    if (const auto* g = std::get_if<Gaussian>(&spec.kind)) {
        // m_n = n! sigma^{2n}
        const S sigma = g->sigma.as<S>();
        const S step = sigma * sigma;
        S value(1);
        for (int n = 0; n <= n_max; ++n) {
            out.push_back(value);
            value *= step * S(n + 1);
        }
    } else if (const auto* d = std::get_if<UniformDisc>(&spec.kind)) {
        // m_n = R^{2n} / (n + 1)
        const S radius = d->radius.as<S>();
        const S step = radius * radius;
        S power(1);
        for (int n = 0; n <= n_max; ++n) {
            out.push_back(power / S(n + 1));
            power *= step;
        }
    } else if (std::holds_alternative<UnitCircle>(spec.kind)) {
        out.assign(static_cast<std::size_t>(n_max) + 1, S(1));
    } else if (const auto* e = std::get_if<ExplicitMoments>(&spec.kind)) {
        if (static_cast<int>(e->moments.size()) <= n_max) {
            throw OutOfRange("explicit measure provides m_0..m_" +
                             std::to_string(e->moments.size() - 1) + ", m_" +
                             std::to_string(n_max) + " requested");
        }
        for (int n = 0; n <= n_max; ++n) out.push_back(e->moments[n].as<S>());
    } else {
        const auto& f = std::get<ClosedForm>(spec.kind);
        // m_n = <e_00, phi^n phi*^n e_00>
        const int cutoff = std::max(n_max, 1);
        auto table = closed_form_square(f.q.as<S>(), f.c.as<S>(), cutoff);
        auto rep = build_ladder_rep(table, cutoff);
        for (int n = 0; n <= n_max; ++n) out.push_back(vacuum_moment(rep, n, n));
    }
    return RadialMomentSequence<S>(std::move(out));
}

template <Scalar S>
S bivariate_moment(const RadialMomentSequence<S>& m, int k, int l) {
    if (k < 0 || l < 0) throw InvalidParameter("moment exponents must be nonnegative");
    if (k != l) return S(0);
    return m[k];
}

template <Scalar S>
NondegeneracyReport check_nondegenerate(const RadialMomentSequence<S>& m, int degree) {
    if (degree < 0) throw InvalidParameter("degree must be nonnegative");
    if (m.max_index() < degree) {
        throw OutOfRange("nondegeneracy to degree " + std::to_string(degree) +
                         " needs m_0..m_" + std::to_string(degree));
    }
    NondegeneracyReport report;
    report.degree = degree;
    for (int sector = 0; sector <= degree; ++sector) {
        const int size = (degree - sector) / 2 + 1;
        Matrix<S> hankel(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) hankel(i, j) = m[sector + i + j];
        auto factor = cholesky(hankel);
        if (factor.failed_at >= 0) throw DegenerateMeasure(sector, factor.failed_at + 1);
        const auto smallest = std::min_element(
            factor.pivots.begin(), factor.pivots.end(),
            [](const S& a, const S& b) { return to_double(a) < to_double(b); });
        report.sectors.push_back(
            {sector, size, to_double(*smallest), format_scalar(*smallest)});
    }
    return report;
}

RadialDensity gaussian_density(double sigma) {
    if (!(sigma > 0.0)) throw InvalidParameter("sigma must be positive");
    const double norm = 1.0 / (std::numbers::pi * sigma * sigma);
    return {[=](double r) { return norm * std::exp(-(r * r) / (sigma * sigma)); }, 20.0 * sigma};
}

RadialDensity disc_density(double radius) {
    if (!(radius > 0.0)) throw InvalidParameter("radius must be positive");
    const double height = 1.0 / (std::numbers::pi * radius * radius);
    return {[=](double r) { return r <= radius ? height : 0.0; }, radius};
}

RadialMomentSequence<Real> quadrature_oracle_moments(const RadialDensity& density, int n_max,
                                                       int nodes) {
    constexpr int kPanelNodes = 16;
    if (nodes < 64) throw InvalidParameter("quadrature needs at least 64 nodes");
    if (n_max < 0) throw InvalidParameter("n_max must be nonnegative");
    if (!(density.support_radius > 0.0)) throw InvalidParameter("support radius must be positive");
    using Rule = boost::math::quadrature::gauss<double, kPanelNodes>;
    const int panels = nodes / kPanelNodes;
    const double width = density.support_radius / panels;

    std::vector<double> moments(static_cast<std::size_t>(n_max) + 1, 0.0);
    auto accumulate = [&](double r, double weight) {
        double base = weight * density.density(r) * 2.0 * std::numbers::pi * r;
        double r_sq = r * r;
        for (auto& m : moments) {
            m += base;
            base *= r_sq;
        }
    };
    const auto& abscissa = Rule::abscissa();
    const auto& weights = Rule::weights();
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * width;
        const double half = 0.5 * width;
        // Stored abscissae are the nonnegative half of a symmetric rule.
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            const double w = weights[i] * half;
            if (abscissa[i] == 0.0) {
                accumulate(mid, w);
            } else {
                accumulate(mid + half * abscissa[i], w);
                accumulate(mid - half * abscissa[i], w);
            }
        }
    }
    if (std::fabs(moments[0] - 1.0) > 1e-10) throw NotAProbability(moments[0]);
    return RadialMomentSequence<Real>(std::vector<Real>(moments.begin(), moments.end()));
}

#define ORTHOFIELD_INSTANTIATE_MEASURES(S)                                                \
    template class RadialMomentSequence<S>;                                               \
    template RadialMomentSequence<S> radial_moments(const MeasureSpec&, int);             \
    template S bivariate_moment(const RadialMomentSequence<S>&, int, int);                \
    template NondegeneracyReport check_nondegenerate(const RadialMomentSequence<S>&, int);

ORTHOFIELD_INSTANTIATE_MEASURES(Real)
ORTHOFIELD_INSTANTIATE_MEASURES(Surd)

}  // namespace orthofield
