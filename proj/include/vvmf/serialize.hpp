#pragma once

#include <string>

#include "json.hpp"

#include "vvmf/mde.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/reps.hpp"
#include "vvmf/valuation.hpp"

namespace vvmf {

using Json = nlohmann::ordered_json;

// Rationals are always exact "num/den" strings.
Json to_json(const ExactRational& x);
ExactRational rational_from_json(const Json& j);

// {"exponent": "A/N", "coeffs": [...], "order": T}
Json to_json(const QExpansion& f);
QExpansion series_from_json(const Json& j);

// {"A", "B", "C", "N", "k0"}
Json to_json(const RepTriple& t);
RepTriple triple_from_json(const Json& j);

Json to_json(const RepTriple& t, const Classification& c);
Json to_json(const FamilyResult& r, std::string_view family);

// {"triple", "k0", "alpha4", "alpha6", "components": [...]}
Json coefficients_json(const MDESystem& sys, const MinimalVector& f0);
// k0, x_j, alpha4, alpha6 and the heads of g0, g1, g2.
Json parameters_json(const MDESystem& sys);
Json basis_json(const MDESystem& sys, const MinimalVector& f0, const DerivedBasis& basis);

Json to_json(const PrimeCase& pc);
Json to_json(const ValuationReport& r);
// Columns n,observed,predicted; +inf prints as "inf", a missing prediction as empty.
std::string report_csv(const ValuationReport& r);

Json to_json(const DenominatorProfile& p);

}  // namespace vvmf
