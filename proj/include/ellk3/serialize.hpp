#pragma once

// JSON forms of models, reports, lattices, points and the Igusa table.

#include <json.hpp>

#include "ellk3/frobext.hpp"
#include "ellk3/lattice.hpp"
#include "ellk3/sections.hpp"

namespace ellk3 {

using Json = nlohmann::ordered_json;

// {"p", "a1".."a6", "label"}; missing coefficients default to "0".
WeierstrassModel model_from_json(const Json& j);
Json model_to_json(const WeierstrassModel& m);

Json fiber_to_json(const FiberAnalysis& f, int p);
Json report_to_json(const SurfaceReport& r);

Json point_to_json(const SectionPoint& P);
Json lattice_to_json(const Lattice& l);
Json igusa_to_json(const IgusaEntry& e);

}  // namespace ellk3
