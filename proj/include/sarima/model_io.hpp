#pragma once

#include <iosfwd>
#include <string>

#include "sarima/model.hpp"

namespace sarima {

// JSON persistence of a FittedModel. Numbers survive a round trip
// bit-exactly (shortest round-trip decimal form); the expanded coefficient
// vectors are serialized for reference but always recomputed on load.
std::string to_json(const FittedModel& fitted);
FittedModel fitted_model_from_json(const std::string& text);

void save_model(const FittedModel& fitted, const std::string& path);
FittedModel load_model_file(const std::string& path);

}  // namespace sarima
