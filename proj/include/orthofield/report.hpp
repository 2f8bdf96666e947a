#pragma once

#include "orthofield/checks.hpp"
#include "orthofield/factorize.hpp"
#include "orthofield/ladder.hpp"
#include "orthofield/measures.hpp"
#include "orthofield/orthosystem.hpp"

#include <json.hpp>

#include <string>

namespace orthofield {

using Json = nlohmann::json;

// Measure descriptors: {"kind":"gaussian","sigma":"1"},
// {"kind":"uniform-disc","radius":"1"}, {"kind":"unit-circle"},
// {"kind":"explicit","moments":["1","1/2"]},
// {"kind":"from-closed-form","q":"1/2","c":"1"}.
// Numbers may be given as text ("p/q", "sqrt(p/q)", decimal) or JSON numbers.
// Throws InvalidParameter.
MeasureSpec measure_from_json(const Json& descriptor);
Json measure_to_json(const MeasureSpec& spec);

std::string to_string(Arithmetic arithmetic);

Json to_json(const CheckResult& check);

// Scalars are always emitted as text: "p/q" or surd form when exact, 17
// significant digits when floating.
template <Scalar S>
Json moments_json(const RadialMomentSequence<S>& m);
template <Scalar S>
std::string moments_csv(const RadialMomentSequence<S>& m);

// Rows {k, l, alpha, alpha_sq}; exact mode adds alpha_exact.
template <Scalar S>
Json alpha_table_json(const AlphaTable<S>& a);
// Header "k,l,alpha,alpha_sq"; alpha in decimal, alpha_sq rational when exact.
template <Scalar S>
std::string alpha_table_csv(const AlphaTable<S>& a);

template <Scalar S>
Json system_json(const OrthonormalSystem<S>& sys);

// {"cutoff": M, "<matrix>": [[row, col, "value"], ...]} with nonzero entries
// in row-major order.
template <Scalar S>
Json ladder_json(const LadderRep<S>& rep);

// {factorizable, q, c, log_residual, worst_entry:[k,l], ...}
template <Scalar S>
Json factorization_json(const FactorizationResult<S>& result);

// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& document);

}  // namespace orthofield
