#pragma once

#include "polyred/builtin_examples.hpp"
#include "polyred/dynamics.hpp"
#include "polyred/lift.hpp"
#include "polyred/reduction.hpp"

#include <json.hpp>

namespace polyred {

using json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" or "p"; plain JSON integers are accepted
// on input.
json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const FormFamily& f);
json to_json(const StructureKind& k);
json to_json(const ActionPointData& d);
json to_json(const DerivedGeometry& g);
json to_json(const ConditionReport& r);
json to_json(const LinearReduction& r);
json to_json(const DimensionReport& r);
json to_json(const LiftLemmaReport& r);
json to_json(const EquivalenceReport& r);
json to_json(const DistributionReport& r);
json to_json(const MultiPoly& p);
json to_json(const PolySection& s);
json to_json(const PolyKVector& x);
json to_json(const ExampleBundle& b);

// readers throw std::invalid_argument with a short path description on bad input
Rational rational_from_json(const json& j);
Vec vec_from_json(const json& j);
Matrix matrix_from_json(const json& j);
Subspace subspace_from_json(const json& j);
FormFamily form_family_from_json(const json& j);
ActionPointData action_from_json(const json& j);
// {"vars": [...], "terms": [{"c": "p/q", "e": [...]}]} or {"vars": [...], "expr": "..."}
MultiPoly poly_from_json(const json& j);
MultiPoly poly_from_json(const json& j, const std::vector<std::string>& vars);
PolySection section_from_json(const json& j);
PolyKVector kvector_from_json(const json& j, const std::vector<std::string>& vars);

}  // namespace polyred
