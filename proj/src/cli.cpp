#include "orthofield/cli.hpp"

#include "orthofield/errors.hpp"
#include "orthofield/factorize.hpp"
#include "orthofield/ladder.hpp"
#include "orthofield/orthosystem.hpp"
#include "orthofield/report.hpp"

#include <fstream>
#include <iostream>
#include <vector>

namespace orthofield::cli {

std::optional<Command> parse_command(const std::string& name) {
    if (name == "moments") return Command::moments;
    if (name == "alphas") return Command::alphas;
    if (name == "verify") return Command::verify;
    if (name == "factorize") return Command::factorize;
    if (name == "ladder") return Command::ladder;
    if (name == "roundtrip") return Command::roundtrip;
    return std::nullopt;
}

std::string command_name(Command command) {
    switch (command) {
        case Command::moments: return "moments";
        case Command::alphas: return "alphas";
        case Command::verify: return "verify";
        case Command::factorize: return "factorize";
        case Command::ladder: return "ladder";
        case Command::roundtrip: return "roundtrip";
    }
    return "unknown";
}

void validate(const RunConfig& config) {
    if (config.degree < 1) throw InvalidParameter("N must be at least 1");
    if (config.cutoff < 1) throw InvalidParameter("M must be at least 1");
    if (!(config.tolerance > 0.0)) throw InvalidParameter("tolerance must be positive");
    config.measure.validate();
}

namespace {

struct Checks {
    std::vector<CheckResult> items;

    void add(CheckResult check) { items.push_back(std::move(check)); }
    bool passed() const {
        for (const auto& c : items)
            if (!c.passed()) return false;
        return true;
    }
    Json json() const {
        Json out = Json::array();
        for (const auto& c : items) out.push_back(to_json(c));
        return out;
    }
    std::string csv() const {
        std::string out = "check,passed,max_residual,evaluated,failures\n";
        for (const auto& c : items) {
            out += c.name + "," + (c.passed() ? "true" : "false") + "," + c.max_residual_text +
                   "," + std::to_string(c.evaluated) + "," + std::to_string(c.failures) + "\n";
        }
        return out;
    }
};

Json header(const RunConfig& config, Arithmetic arithmetic) {
    Json out;
    out["command"] = command_name(config.command);
    out["measure"] = measure_to_json(config.measure);
    out["arithmetic"] = to_string(arithmetic);
    return out;
}

RunOutcome finish_checks(const RunConfig& config, Json document, const Checks& checks) {
    document["checks"] = checks.json();
    document["passed"] = checks.passed();
    RunOutcome outcome;
    outcome.exit_code = checks.passed() ? kExitPass : kExitVerificationFailure;
    outcome.artifact = config.format == OutputFormat::csv ? checks.csv() : dump(document);
    return outcome;
}

const ClosedForm& require_closed_form(const RunConfig& config) {
    const auto* f = std::get_if<ClosedForm>(&config.measure.kind);
    if (!f) {
        throw InvalidParameter("command '" + command_name(config.command) +
                               "' needs closed-form parameters (--q and --c)");
    }
    return *f;
}

template <Scalar S>
RunOutcome run_moments(const RunConfig& config) {
    auto m = radial_moments<S>(config.measure, config.degree);
    Json document = header(config, arithmetic_of<S>);
    document["moments"] = moments_json(m);
    return {kExitPass, config.format == OutputFormat::csv ? moments_csv(m) : dump(document)};
}

template <Scalar S>
RunOutcome run_alphas(const RunConfig& config) {
    const Tolerance tolerance{config.tolerance};
    auto m = radial_moments<S>(config.measure, config.degree);
    check_nondegenerate(m, config.degree);
    auto sys = gram_schmidt(m, config.degree);
    auto alphas = extract_alphas(sys, m, tolerance);
    Json document = header(config, arithmetic_of<S>);
    document["degree"] = config.degree;
    document["alphas"] = alpha_table_json(alphas);
    return {kExitPass,
            config.format == OutputFormat::csv ? alpha_table_csv(alphas) : dump(document)};
}

template <Scalar S>
RunOutcome run_verify(const RunConfig& config) {
    const Tolerance tolerance{config.tolerance};
    const int n = config.degree;
    auto m = radial_moments<S>(config.measure, n);
    auto nondegeneracy = check_nondegenerate(m, n);
    auto gs = gram_schmidt(m, n);
    auto chol = sector_cholesky(m, n);

    Checks checks;
    checks.add(verify_orthonormality(gs, m, tolerance));
    checks.add(verify_conjugation_symmetry(gs, tolerance));
    checks.add(compare_systems(gs, chol, tolerance));
    auto alphas = extract_alphas(gs, m, tolerance);
    checks.add(verify_recurrence(gs, alphas, tolerance));
    auto relations = verify_relations(alphas, tolerance);
    checks.add(relations.positivity);
    checks.add(relations.product_relation);
    checks.add(relations.square_relation);

    // The table covers the square k, l <= (N-1)/2.
    const int ladder_cutoff = std::min(config.cutoff, alphas.complete_square());
    Json document = header(config, arithmetic_of<S>);
    document["degree"] = n;
    document["ladder_cutoff"] = ladder_cutoff;
    if (ladder_cutoff >= 2) {
        auto rep = build_ladder_rep(alphas, ladder_cutoff);
        checks.add(verify_normality_interior(rep, tolerance));
        CheckResult vacuum;
        vacuum.name = "vacuum_moments";
        vacuum.arithmetic = arithmetic_of<S>;
        for (int k = 0; k <= ladder_cutoff; ++k) {
            for (int l = 0; l <= ladder_cutoff; ++l) {
                S expected = bivariate_moment(m, k, l);
                vacuum.observe(S(vacuum_moment(rep, k, l) - expected), magnitude(expected),
                               tolerance, {k, l});
            }
        }
        checks.add(vacuum);
    }

    Json sectors = Json::array();
    for (const auto& s : nondegeneracy.sectors) {
        sectors.push_back(
            {{"sector", s.sector}, {"size", s.size}, {"smallest_pivot", s.smallest_pivot_text}});
    }
    document["nondegeneracy"] = sectors;
    return finish_checks(config, std::move(document), checks);
}

template <Scalar S>
RunOutcome run_factorize(const RunConfig& config) {
    const Tolerance tolerance{config.tolerance};
    auto m = radial_moments<S>(config.measure, config.degree);
    check_nondegenerate(m, config.degree);
    auto sys = gram_schmidt(m, config.degree);
    auto alphas = extract_alphas(sys, m, tolerance);
    auto verdict = detect_factorization(alphas);
    Json record = factorization_json(verdict);
    if (config.format == OutputFormat::csv) {
        std::string csv = "factorizable,q,c,log_residual,worst_k,worst_l\n";
        csv += std::string(verdict.factorizable ? "true" : "false") + "," +
               record["q"].get<std::string>() + "," + record["c"].get<std::string>() + "," +
               record["log_residual"].get<std::string>() + "," +
               std::to_string(verdict.worst_entry[0]) + "," +
               std::to_string(verdict.worst_entry[1]) + "\n";
        return {kExitPass, csv};
    }
    return {kExitPass, dump(record)};
}

template <Scalar S>
RunOutcome run_ladder(const RunConfig& config) {
    const Tolerance tolerance{config.tolerance};
    const auto& form = require_closed_form(config);
    const S q = form.q.as<S>();
    const S c = form.c.as<S>();
    const int cutoff = config.cutoff;
    if (cutoff < 2) throw InvalidParameter("ladder command needs M >= 2");
    auto rep = build_ladder_rep(closed_form_square(q, c, cutoff), cutoff);
    auto ops = q_fock_operators(q, c, cutoff);
    auto relations = verify_q_relations(ops, rep, tolerance);

    Checks checks;
    checks.add(relations.deformed_k);
    checks.add(relations.deformed_l);
    checks.add(relations.cross_commutators);
    checks.add(relations.k_star_reconstruction);
    checks.add(relations.lambda_reconstruction);
    checks.add(verify_normality_interior(rep, tolerance));

    Json document = header(config, arithmetic_of<S>);
    document["cutoff"] = cutoff;
    document["rep"] = ladder_json(rep);
    if (to_double(q) > 1.0) document["note"] = "moment-growth-unbounded";
    return finish_checks(config, std::move(document), checks);
}

template <Scalar S>
RunOutcome run_roundtrip(const RunConfig& config) {
    const Tolerance tolerance{config.tolerance};
    const int n = config.degree;
    Checks checks;
    Json document = header(config, arithmetic_of<S>);
    document["degree"] = n;

    if (const auto* form = std::get_if<ClosedForm>(&config.measure.kind)) {
        // closed form -> ladder -> vacuum moments -> Gram-Schmidt -> alphas
        const S q = form->q.as<S>();
        const S c = form->c.as<S>();
        const int cutoff = n;
        auto rep = build_ladder_rep(closed_form_square(q, c, cutoff), cutoff);
        std::vector<S> values;
        for (int i = 0; i <= n; ++i) values.push_back(vacuum_moment(rep, i, i));
        RadialMomentSequence<S> m(std::move(values));
        auto sys = gram_schmidt(m, n);
        auto recovered = extract_alphas(sys, m, tolerance);
        auto expected = closed_form_alphas(q, c, n);
        CheckResult closure;
        closure.name = "alpha_closure";
        closure.arithmetic = arithmetic_of<S>;
        for (const auto& [index, value] : expected.entries()) {
            S got = recovered(index.first, index.second);
            closure.observe(S(got - value), magnitude(value), tolerance,
                            {index.first, index.second});
        }
        checks.add(closure);
        document["mode"] = "closed-form";
        document["moments"] = moments_json(m);
    } else {
        // measure -> alphas -> diagonal products and ladder vacuum moments
        auto m = radial_moments<S>(config.measure, n);
        check_nondegenerate(m, n);
        auto sys = gram_schmidt(m, n);
        auto alphas = extract_alphas(sys, m, tolerance);
        CheckResult products;
        products.name = "diagonal_product_identity";
        products.arithmetic = arithmetic_of<S>;
        S product(1);
        for (int i = 0; i <= n; ++i) {
            products.observe(S(product - m[i]), magnitude(m[i]), tolerance, {i});
            if (i < n) product *= alphas(i, 0) * alphas(i, 0);
        }
        checks.add(products);
        const int cutoff = alphas.complete_square();
        if (cutoff >= 0) {
            auto rep = build_ladder_rep(alphas, cutoff);
            CheckResult vacuum;
            vacuum.name = "vacuum_moments";
            vacuum.arithmetic = arithmetic_of<S>;
            for (int i = 0; i <= cutoff; ++i) {
                vacuum.observe(S(vacuum_moment(rep, i, i) - m[i]), magnitude(m[i]), tolerance, {i});
            }
            checks.add(vacuum);
        }
        document["mode"] = "measure";
        document["moments"] = moments_json(m);
    }
    return finish_checks(config, std::move(document), checks);
}

template <Scalar S>
RunOutcome run(const RunConfig& config) {
    switch (config.command) {
        case Command::moments: return run_moments<S>(config);
        case Command::alphas: return run_alphas<S>(config);
        case Command::verify: return run_verify<S>(config);
        case Command::factorize: return run_factorize<S>(config);
        case Command::ladder: return run_ladder<S>(config);
        case Command::roundtrip: return run_roundtrip<S>(config);
    }
    throw InvalidParameter("unknown command");
}

RunOutcome diagnostic(int exit_code, const std::string& kind, const std::string& message,
                      Json extra = Json::object()) {
    Json record = std::move(extra);
    record["error"] = kind;
    record["message"] = message;
    return {exit_code, dump(record)};
}

}  // namespace

RunOutcome dispatch(const RunConfig& config) {
    try {
        validate(config);
        bool exact = false;
        switch (config.arithmetic) {
            case ArithmeticChoice::automatic: exact = config.measure.all_exact(); break;
            case ArithmeticChoice::exact: exact = true; break;
            case ArithmeticChoice::floating: exact = false; break;
        }
        return exact ? run<Surd>(config) : run<Real>(config);
    } catch (const DegenerateMeasure& e) {
        return diagnostic(kExitInputError, e.kind(), e.what(),
                          {{"sector", e.sector()}, {"size", e.size()}});
    } catch (const RecurrenceViolation& e) {
        return diagnostic(kExitVerificationFailure, e.kind(), e.what(),
                          {{"entry", std::vector<int>{e.k(), e.l()}}});
    } catch (const Error& e) {
        return diagnostic(kExitInputError, e.kind(), e.what());
    } catch (const std::exception& e) {
        return diagnostic(kExitInputError, "InputError", e.what());
    }
}

int emit_report(const RunOutcome& outcome, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << outcome.artifact;
        std::cout.flush();
        return std::cout ? outcome.exit_code : kExitIoError;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return kExitIoError;
    file << outcome.artifact;
    file.close();
    return file ? outcome.exit_code : kExitIoError;
}

}  // namespace orthofield::cli
