#include "orthofield/report.hpp"

#include "orthofield/errors.hpp"

#include <sstream>

namespace orthofield {

namespace {

Parameter parameter_from_json(const Json& value, const char* field) {
    if (value.is_string()) return Parameter::parse(value.get<std::string>());
    if (value.is_number_integer()) return Parameter::parse(std::to_string(value.get<long long>()));
    if (value.is_number()) return Parameter::floating(value.get<double>());
    throw InvalidParameter(std::string("field '") + field + "' must be a number or numeric text");
}

Parameter required(const Json& descriptor, const char* field) {
    if (!descriptor.contains(field)) {
        throw InvalidParameter(std::string("measure descriptor lacks '") + field + "'");
    }
    return parameter_from_json(descriptor.at(field), field);
}

std::string text_of(const Real& value) { return format_scalar(value); }
std::string text_of(const Surd& value) { return value.str(); }

template <Scalar S>
std::string decimal_of(const S& value) {
    return format_double(to_double(value));
}

}  // namespace

MeasureSpec measure_from_json(const Json& descriptor) {
    if (!descriptor.is_object() || !descriptor.contains("kind") ||
        !descriptor.at("kind").is_string()) {
        throw InvalidParameter("measure descriptor must be an object with a string 'kind'");
    }
    const auto kind = descriptor.at("kind").get<std::string>();
    MeasureSpec spec;
    if (kind == "gaussian") {
        spec.kind = Gaussian{required(descriptor, "sigma")};
    } else if (kind == "uniform-disc") {
        spec.kind = UniformDisc{required(descriptor, "radius")};
    } else if (kind == "unit-circle") {
        spec.kind = UnitCircle{};
    } else if (kind == "explicit") {
        if (!descriptor.contains("moments") || !descriptor.at("moments").is_array()) {
            throw InvalidParameter("explicit measure needs a 'moments' array");
        }
        ExplicitMoments e;
        for (const auto& m : descriptor.at("moments")) e.moments.push_back(parameter_from_json(m, "moments"));
        spec.kind = std::move(e);
    } else if (kind == "from-closed-form") {
        spec.kind = ClosedForm{required(descriptor, "q"), required(descriptor, "c")};
    } else {
        throw InvalidParameter("unknown measure kind '" + kind + "'");
    }
    spec.validate();
    return spec;
}

Json measure_to_json(const MeasureSpec& spec) {
    Json out;
    out["kind"] = spec.name();
    if (const auto* g = std::get_if<Gaussian>(&spec.kind)) out["sigma"] = g->sigma.text();
    if (const auto* d = std::get_if<UniformDisc>(&spec.kind)) out["radius"] = d->radius.text();
    if (const auto* f = std::get_if<ClosedForm>(&spec.kind)) {
        out["q"] = f->q.text();
        out["c"] = f->c.text();
    }
    if (const auto* e = std::get_if<ExplicitMoments>(&spec.kind)) {
        Json list = Json::array();
        for (const auto& m : e->moments) list.push_back(m.text());
        out["moments"] = list;
    }
    return out;
}

std::string to_string(Arithmetic arithmetic) {
    return arithmetic == Arithmetic::exact ? "exact" : "float";
}

Json to_json(const CheckResult& check) {
    Json out;
    out["name"] = check.name;
    out["arithmetic"] = to_string(check.arithmetic);
    out["passed"] = check.passed();
    out["max_residual"] = check.max_residual_text;
    out["evaluated"] = check.evaluated;
    out["failures"] = check.failures;
    out["worst"] = check.worst;
    return out;
}

template <Scalar S>
Json moments_json(const RadialMomentSequence<S>& m) {
    Json rows = Json::array();
    for (int n = 0; n <= m.max_index(); ++n) {
        rows.push_back({{"n", n}, {"value", text_of(m[n])}});
    }
    return rows;
}

template <Scalar S>
std::string moments_csv(const RadialMomentSequence<S>& m) {
    std::string out = "n,moment\n";
    for (int n = 0; n <= m.max_index(); ++n) out += std::to_string(n) + "," + text_of(m[n]) + "\n";
    return out;
}

template <Scalar S>
Json alpha_table_json(const AlphaTable<S>& a) {
    Json rows = Json::array();
    for (const auto& [index, alpha] : a.entries()) {
        Json row;
        row["k"] = index.first;
        row["l"] = index.second;
        row["alpha"] = decimal_of(alpha);
        row["alpha_sq"] = text_of(S(alpha * alpha));
        if constexpr (is_exact_v<S>) row["alpha_exact"] = alpha.str();
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar S>
std::string alpha_table_csv(const AlphaTable<S>& a) {
    std::string out = "k,l,alpha,alpha_sq\n";
    for (const auto& [index, alpha] : a.entries()) {
        out += std::to_string(index.first) + "," + std::to_string(index.second) + "," +
               decimal_of(alpha) + "," + text_of(S(alpha * alpha)) + "\n";
    }
    return out;
}

template <Scalar S>
Json system_json(const OrthonormalSystem<S>& sys) {
    Json rows = Json::array();
    for (const auto& [mono, p] : sys.polynomials()) {
        rows.push_back({{"k", mono.z_power}, {"l", mono.zbar_power}, {"polynomial", to_string(p)}});
    }
    return {{"max_degree", sys.max_degree()},
            {"source", to_string(sys.source())},
            {"polynomials", rows}};
}

namespace {

template <Scalar S>
Json triples(const Matrix<S>& matrix) {
    Json out = Json::array();
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j)
            if (!is_zero(matrix(i, j))) out.push_back(Json::array({i, j, text_of(matrix(i, j))}));
    return out;
}

}  // namespace

template <Scalar S>
Json ladder_json(const LadderRep<S>& rep) {
    return {{"cutoff", rep.cutoff},
            {"phi", triples(rep.phi)},
            {"phi_star", triples(rep.phi_star)},
            {"k_star", triples(rep.k_star)},
            {"lambda", triples(rep.lambda)},
            {"n_particles", triples(rep.n_particles)},
            {"n_antiparticles", triples(rep.n_antiparticles)}};
}

template <Scalar S>
Json factorization_json(const FactorizationResult<S>& result) {
    Json out;
    out["factorizable"] = result.factorizable;
    out["rank_one"] = result.rank_one;
    out["q"] = text_of(result.q);
    out["c"] = text_of(result.c);
    out["log_residual"] = format_double(result.log_residual);
    out["worst_entry"] = result.worst_entry;
    if (result.first_violation) {
        out["first_violation"] = {{"entry", *result.first_violation},
                                  {"log_residual", format_double(result.first_violation_residual)}};
    } else {
        out["first_violation"] = nullptr;
    }
    out["closed_form_residual"] = format_double(result.closed_form_residual);
    if (result.factorizable && to_double(result.q) > 1.0) out["note"] = "moment-growth-unbounded";
    return out;
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

#define ORTHOFIELD_INSTANTIATE_REPORT(S)                              \
    template Json moments_json(const RadialMomentSequence<S>&);       \
    template std::string moments_csv(const RadialMomentSequence<S>&); \
    template Json alpha_table_json(const AlphaTable<S>&);             \
    template std::string alpha_table_csv(const AlphaTable<S>&);       \
    template Json system_json(const OrthonormalSystem<S>&);           \
    template Json ladder_json(const LadderRep<S>&);                   \
    template Json factorization_json(const FactorizationResult<S>&);

ORTHOFIELD_INSTANTIATE_REPORT(Real)
ORTHOFIELD_INSTANTIATE_REPORT(Surd)

}  // namespace orthofield
