// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

// Umbrella header.

#include "imbhn/baselines.hpp"
#include "imbhn/corpus.hpp"
#include "imbhn/error.hpp"
#include "imbhn/eval.hpp"
#include "imbhn/experiments.hpp"
#include "imbhn/features.hpp"
#include "imbhn/matrix.hpp"
#include "imbhn/model_io.hpp"
#include "imbhn/network.hpp"
#include "imbhn/reference_scores.hpp"
#include "imbhn/reports.hpp"
#include "imbhn/rng.hpp"
#include "imbhn/trainer.hpp"
