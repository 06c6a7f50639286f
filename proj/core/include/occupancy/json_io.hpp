#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "occupancy/maxent.hpp"
#include "occupancy/models.hpp"
#include "occupancy/structure.hpp"

namespace occ {

nlohmann::json weights_to_json(const WeightFunction& a);
WeightFunction weights_from_json(const nlohmann::json& j);

/// {"n":..,"r":..,"pmf":[{"x":[..],"p":"p/q"},..]} lexicographically sorted by x.
nlohmann::json model_to_json(const OccupancyModel& m);
OccupancyModel model_from_json(const nlohmann::json& j);

nlohmann::json deconvolution_to_json(const DeconvolutionResult& r);
nlohmann::json classification_to_json(const GermClassification& c, int window);

nlohmann::json maxent_to_json(const MaxEntSolution& s);
nlohmann::json scale_consistency_to_json(const ScaleConsistencyReport& r);

/// Fixed 17-significant-digit float rendering for byte-identical reports.
std::string format_double(double v);

}  // namespace occ
