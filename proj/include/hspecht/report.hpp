#pragma once

#include <string>

#include <json.hpp>

#include "hspecht/family.hpp"
#include "hspecht/linalg.hpp"
#include "hspecht/quotient.hpp"
#include "hspecht/specht.hpp"
#include "hspecht/symfunc.hpp"

namespace hspecht {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

Json params_json(Family f, const FamilyParams& p);
Json label_json(const BasisLabel& l);
Json basis_report_json(const BasisReport& r);
/// [{degree, lambda, mult}] sorted by (degree, lambda).
Json expansion_json(const GradedSchurExpansion& e);
/// Rows of rational strings.
Json matrix_json(const Matrix& m);
Json transition_json(const TransitionMatrix& tm, const AlmostLowerResult& alt);

/// Comma-separated rows, rationals as "p/q".
std::string matrix_csv(const Matrix& m);

/// Envelope shared by every command: {tool, version, command, config}.
Json report_header(const std::string& command, const Json& config);

}  // namespace hspecht
