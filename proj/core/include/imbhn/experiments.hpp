// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imbhn/eval.hpp"

namespace imbhn {

// Batch experiment driver shared by the CLI and the acceptance suite.
// Each command is stateless: all inputs come from the config, all outputs
// are files under output_dir.

struct ExperimentConfig {
  std::string corpus_path;
  std::string stopwords_path;  // empty: bundled list
  std::string output_dir = ".";

  FeatureKind features = FeatureKind::local;
  std::vector<int> topics = {100};  // grid, topical
  std::vector<int> windows = {2};   // grid, local
  ClassifierKind classifier = ClassifierKind::imbhn;
  std::vector<double> etas = {0.1};  // grid
  double epsilon_min = 0.01;
  int max_iters = 1000;
  InitChoice init = InitChoice::zeros;
  int knn_k = 3;
  int folds = 10;
  std::uint64_t master_seed = 0;

  // robustness
  std::vector<double> rates;
  int trials = 50;

  // train / predict
  std::string model_path;
  std::string predictions_path;
  bool dump_matrices = false;
};

/// Validates ranges and cross-field constraints; messages name the
/// offending flag. `command` is one of evaluate/robustness/train/predict.
void validate_experiment_config(const ExperimentConfig& config,
                                const std::string& command);

/// Cross-validates every (feature param) x (eta) grid cell and writes one
/// CSV + JSON report pair per cell. Returns the paths written.
std::vector<std::string> cmd_evaluate(const ExperimentConfig& config);

/// Runs the subsampling robustness experiment for the first grid cell and
/// writes a trial-level CSV plus a summary JSON. Returns the paths written.
std::vector<std::string> cmd_robustness(const ExperimentConfig& config);

/// Trains on the full corpus and persists the model file. Returns its path.
std::string cmd_train(const ExperimentConfig& config);

/// Loads a model, classifies every corpus instance, writes predictions CSV.
std::string cmd_predict(const ExperimentConfig& config);

}  // namespace imbhn
