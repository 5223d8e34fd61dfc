// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imbhn/features.hpp"

namespace imbhn {

// Published reference accuracies of two external classifiers (WEKA's J48
// decision tree and SMO support-vector machine) on the four SENSEVAL-2
// lexical-sample targets, for side-by-side display in evaluation reports.
// These systems are not reimplemented here.

struct ExternalScore {
  std::string method;   // "J48" or "SMO"
  double accuracy_percent = 0.0;
};

/// Reference scores matching a (target, feature kind, parameter) cell;
/// empty when the target or cell is not one of the published ones.
std::vector<ExternalScore> external_reference_scores(const std::string& target,
                                                     FeatureKind kind,
                                                     int param);

/// Published majority-baseline accuracy for the four targets, percent.
std::optional<double> external_baseline_percent(const std::string& target);

}  // namespace imbhn
