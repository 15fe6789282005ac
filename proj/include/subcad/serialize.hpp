#pragma once

#include "subcad/driver.hpp"

#include <json.hpp>

#include <string>

namespace subcad {

using json = nlohmann::json;

/// Rationals as "p/q" strings; algebraic coordinates as
/// {"defpoly", "lo", "hi", "approx"} with the defining polynomial over the
/// preceding coordinates.
json coord_to_json(const Coord& c);
Coord coord_from_json(const json& j, const SamplePoint& base, const VarOrderPtr& order);

json cell_to_json(const Cell& c);
Cell cell_from_json(const json& j, const VarOrderPtr& order);

/// Cell JSON with "signs" of the given polynomials (keyed p1, p2, ...) and
/// optional "truth" per formula (keyed phi1, phi2, ...).
json annotated_cell_to_json(const Cell& c, const std::vector<Polynomial>& polys,
                            const std::vector<std::pair<std::string, bool>>& truth);

json projection_to_json(const ProjectionRun& run);
ProjectionRun projection_from_json(const json& j);

/// The whole outcome: kind, invariance, layers, ec ids, polynomials and cells.
json outcome_to_json(const Problem& problem, const Outcome& out);

/// Recursive layered state together with the projection it was built from.
json layered_state_to_json(const ProjectionRun& run, const LayeredState& state);
LayeredState layered_state_from_json(const json& j, ProjectionRun& run);

}  // namespace subcad
