#pragma once

#include "superz/centre.hpp"
#include "superz/diagram.hpp"
#include "superz/theorems.hpp"

#include <json.hpp>

namespace superz {

using Json = nlohmann::json;

Json toJson(const Pyramid& py);
Json toJson(const LabelledDiagram& d);
Json toJson(const CheckOutcome& c);
Json toJson(const SweepReport& r);

// Sparse triples [row, col, value] with exact rational values as strings.
Json sparseTriples(const RatMatrix& m);
Json matrixJson(const NamedMatrix& nm);

} // namespace superz
