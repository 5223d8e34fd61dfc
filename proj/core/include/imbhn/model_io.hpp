// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <string>

#include "imbhn/trainer.hpp"

namespace imbhn {

// Versioned flat-file model format (see README, "Model file format").
// Doubles are written as C hexfloats, so the relevance matrix round-trips
// at full precision.

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

std::string model_to_string(const TrainedModel& model);
TrainedModel model_from_string(const std::string& text);

}  // namespace imbhn
