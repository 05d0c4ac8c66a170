#pragma once

#include <json.hpp>

#include "reflective/classpoly.hpp"
#include "reflective/quadric.hpp"
#include "reflective/strata.hpp"

namespace reflective {

using json = nlohmann::json;

/// Exact integers travel as JSON numbers inside the signed 64-bit range and
/// as decimal strings outside it.
json to_json(const Integer& x);
Integer integer_from_json(const json& j);

/// Ascending coefficient array.
json to_json(const ClassPoly& f);
ClassPoly class_from_json(const json& j, std::size_t modulus);

/// Stratification file:
///   {"N": int, "primal": [{"name", "dim", "csm": [...]}, ...], "dual": [...],
///    "pairing": [[r, p], ...]}   (either side of a pair may be null)
/// The result is normalized (sorted by dimension) and validated.
StratifiedPair stratification_from_json(const json& j);
json to_json(const StratifiedPair& pair);

json to_json(const EulerTable& table, const StratifiedPair& pair);

json solve_report(const StratifiedPair& pair);
json involute_report(const ClassPoly& f, long d);
json detvar_report(long n);
json quadric_report(const QuadricSpec& spec);

}  // namespace reflective
