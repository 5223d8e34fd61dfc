// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "imbhn/corpus.hpp"
#include "imbhn/features.hpp"
#include "imbhn/trainer.hpp"

namespace imbhn {

/// Assignment of every instance to one of k folds, stratified by sense.
struct FoldPlan {
  int k = 0;
  std::uint64_t rng_seed = 0;
  std::vector<int> fold_by_index;  // parallel to corpus.instances
  std::unordered_map<std::string, int> assignments;  // instance id -> fold
};

/// Shuffles instances within each class (seeded) and deals them round-robin
/// across folds, continuing the fold cursor from class to class. Fold sizes
/// differ by at most one, per-class counts per fold differ by at most one.
/// Throws ValidationError when k < 2, k exceeds the instance count, or a
/// declared class has no instances.
FoldPlan stratified_folds(const Corpus& corpus, int k, std::uint64_t rng_seed);

enum class ClassifierKind { imbhn, naive_bayes, knn, majority };
const char* classifier_kind_name(ClassifierKind kind);

/// Initialization choice at the evaluation layer. best3 runs zeros, random
/// and prior and reports the best of the three.
enum class InitChoice { zeros, random, prior, best3 };
const char* init_choice_name(InitChoice init);

struct EvalConfig {
  FeatureKind features = FeatureKind::local;
  int num_topics = 100;  // topical
  int window = 2;        // local
  ClassifierKind classifier = ClassifierKind::imbhn;
  double eta = 0.1;
  double epsilon_min = 0.01;
  int max_iters = 1000;
  InitChoice init = InitChoice::zeros;
  int knn_k = 3;
  int folds = 10;
  std::uint64_t master_seed = 0;

  int feature_param() const {
    return features == FeatureKind::topical ? num_topics : window;
  }
};

struct EvalReport {
  std::vector<int> fold_correct;
  std::vector<int> fold_total;
  std::vector<double> fold_accuracy;
  double mean_accuracy = 0.0;  // total correct / total instances
  std::vector<std::vector<int>> confusion;  // [gold][predicted]
  std::vector<std::string> classes;
  double macro_f1 = 0.0;  // supplementary; accuracy drives selection
  std::vector<std::string> warnings;

  // config echo for provenance
  EvalConfig config;
  std::string target;
  int n_instances = 0;

  // best3 bookkeeping (empty otherwise)
  std::map<std::string, double> per_init_accuracy;
  std::string winner_init;
};

/// Runs k-fold cross-validation: per fold, refits the feature space and the
/// classifier on the other k-1 folds (no leakage) and scores the held-out
/// fold. A training fold missing a class is recorded as a warning, except
/// under prior initialization where it is an error. config.init must not be
/// best3 here; use run_evaluation for that.
EvalReport cross_validate(const Corpus& corpus, const EvalConfig& config,
                          const FoldPlan& plan);

/// Builds the fold plan from the master seed and cross-validates. With
/// init = best3, runs all three initializations and returns the best
/// report (ties prefer zeros, then random, then prior), with all three
/// accuracies recorded.
EvalReport run_evaluation(const Corpus& corpus, const EvalConfig& config);

struct RobustnessReport {
  double gamma0 = 0.0;  // full-corpus CV accuracy
  std::vector<double> rates;
  std::vector<int> kept;  // subset size per rate
  std::vector<std::vector<double>> gamma;     // [rate][trial], absolute
  std::vector<std::vector<double>> relative;  // [rate][trial], gamma/gamma0
  std::vector<double> mean_relative;
  std::vector<double> std_relative;  // sample stddev, 0 when trials < 2
  int trials = 0;

  EvalConfig config;
  std::string target;
  int n_instances = 0;
};

/// Training-set robustness experiment: for each sampling rate S, draws
/// `trials` random subsets keeping N - floor(S*N) instances (redrawing up
/// to 100 times if a class would be emptied, then erroring), cross-validates
/// each subset and records the accuracy relative to the full corpus. The
/// fold and training seeds are shared with the gamma0 run, so S = 0 yields
/// exactly 1 for every trial.
RobustnessReport robustness_curve(const Corpus& corpus,
                                  const EvalConfig& config,
                                  const std::vector<double>& rates,
                                  int trials, std::uint64_t rng_seed);

}  // namespace imbhn
