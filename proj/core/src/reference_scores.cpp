// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/reference_scores.hpp"

namespace imbhn {

namespace {

struct Row {
  const char* target;
  FeatureKind kind;
  int param;
  const char* method;
  double percent;
};

// Published accuracies of the two external WEKA classifiers on the
// SENSEVAL-2 lexical-sample targets, by feature configuration.
constexpr Row kRows[] = {
    // topical features, |T| = 100
    {"interest", FeatureKind::topical, 100, "J48", 79.47},
    {"interest", FeatureKind::topical, 100, "SMO", 79.77},
    {"line", FeatureKind::topical, 100, "J48", 62.73},
    {"line", FeatureKind::topical, 100, "SMO", 62.87},
    {"serve", FeatureKind::topical, 100, "J48", 68.15},
    {"serve", FeatureKind::topical, 100, "SMO", 66.79},
    {"hard", FeatureKind::topical, 100, "J48", 84.58},
    {"hard", FeatureKind::topical, 100, "SMO", 84.07},
    // topical features, |T| = 200
    {"interest", FeatureKind::topical, 200, "J48", 82.39},
    {"interest", FeatureKind::topical, 200, "SMO", 83.27},
    {"line", FeatureKind::topical, 200, "J48", 66.71},
    {"line", FeatureKind::topical, 200, "SMO", 68.95},
    {"serve", FeatureKind::topical, 200, "J48", 68.95},
    {"serve", FeatureKind::topical, 200, "SMO", 69.84},
    {"hard", FeatureKind::topical, 200, "J48", 86.17},
    {"hard", FeatureKind::topical, 200, "SMO", 85.36},
    // topical features, |T| = 300
    {"interest", FeatureKind::topical, 300, "J48", 82.68},
    {"interest", FeatureKind::topical, 300, "SMO", 84.71},
    {"line", FeatureKind::topical, 300, "J48", 68.54},
    {"line", FeatureKind::topical, 300, "SMO", 69.87},
    {"serve", FeatureKind::topical, 300, "J48", 70.67},
    {"serve", FeatureKind::topical, 300, "SMO", 71.92},
    {"hard", FeatureKind::topical, 300, "J48", 86.22},
    {"hard", FeatureKind::topical, 300, "SMO", 85.52},
    // local features, window 1
    {"interest", FeatureKind::local, 1, "J48", 65.83},
    {"interest", FeatureKind::local, 1, "SMO", 66.00},
    {"line", FeatureKind::local, 1, "J48", 60.97},
    {"line", FeatureKind::local, 1, "SMO", 62.61},
    {"serve", FeatureKind::local, 1, "J48", 46.43},
    {"serve", FeatureKind::local, 1, "SMO", 57.88},
    {"hard", FeatureKind::local, 1, "J48", 85.57},
    {"hard", FeatureKind::local, 1, "SMO", 81.30},
    // local features, window 2
    {"interest", FeatureKind::local, 2, "J48", 71.74},
    {"interest", FeatureKind::local, 2, "SMO", 64.10},
    {"line", FeatureKind::local, 2, "J48", 61.21},
    {"line", FeatureKind::local, 2, "SMO", 62.13},
    {"serve", FeatureKind::local, 2, "J48", 55.57},
    {"serve", FeatureKind::local, 2, "SMO", 58.63},
    {"hard", FeatureKind::local, 2, "J48", 85.39},
    {"hard", FeatureKind::local, 2, "SMO", 80.68},
    // local features, window 3
    {"interest", FeatureKind::local, 3, "J48", 76.85},
    {"interest", FeatureKind::local, 3, "SMO", 64.14},
    {"line", FeatureKind::local, 3, "J48", 62.66},
    {"line", FeatureKind::local, 3, "SMO", 60.80},
    {"serve", FeatureKind::local, 3, "J48", 60.94},
    {"serve", FeatureKind::local, 3, "SMO", 58.45},
    {"hard", FeatureKind::local, 3, "J48", 85.25},
    {"hard", FeatureKind::local, 3, "SMO", 79.78},
};

struct BaselineRow {
  const char* target;
  double percent;
};

constexpr BaselineRow kBaselines[] = {
    {"interest", 52.80},
    {"line", 53.40},
    {"serve", 41.40},
    {"hard", 79.30},
};

}  // namespace

std::vector<ExternalScore> external_reference_scores(const std::string& target,
                                                     FeatureKind kind,
                                                     int param) {
  std::vector<ExternalScore> out;
  for (const Row& row : kRows) {
    if (target == row.target && kind == row.kind && param == row.param) {
      out.push_back({row.method, row.percent});
    }
  }
  return out;
}

std::optional<double> external_baseline_percent(const std::string& target) {
  for (const BaselineRow& row : kBaselines) {
    if (target == row.target) return row.percent;
  }
  return std::nullopt;
}

}  // namespace imbhn
