// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/eval.hpp"

#include <algorithm>
#include <cmath>

#include "imbhn/baselines.hpp"
#include "imbhn/error.hpp"
#include "imbhn/network.hpp"
#include "imbhn/rng.hpp"

namespace imbhn {

const char* classifier_kind_name(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::imbhn: return "imbhn";
    case ClassifierKind::naive_bayes: return "nb";
    case ClassifierKind::knn: return "knn";
    case ClassifierKind::majority: return "majority";
  }
  return "?";
}

const char* init_choice_name(InitChoice init) {
  switch (init) {
    case InitChoice::zeros: return "zeros";
    case InitChoice::random: return "random";
    case InitChoice::prior: return "prior";
    case InitChoice::best3: return "best3";
  }
  return "?";
}

FoldPlan stratified_folds(const Corpus& corpus, int k,
                          std::uint64_t rng_seed) {
  const std::size_t n = corpus.instances.size();
  if (k < 2) throw ValidationError("stratified_folds: k must be >= 2");
  if (static_cast<std::size_t>(k) > n) {
    throw ValidationError("stratified_folds: k exceeds the instance count");
  }

  std::vector<std::vector<int>> by_class(corpus.sense_inventory.size());
  for (std::size_t idx = 0; idx < n; ++idx) {
    const int j = corpus.sense_index(corpus.instances[idx].sense);
    if (j < 0) {
      throw ValidationError("stratified_folds: instance '" +
                            corpus.instances[idx].id +
                            "' has sense outside the inventory");
    }
    by_class[static_cast<std::size_t>(j)].push_back(static_cast<int>(idx));
  }
  for (std::size_t j = 0; j < by_class.size(); ++j) {
    if (by_class[j].empty()) {
      throw ValidationError("stratified_folds: class '" +
                            corpus.sense_inventory[j] + "' has no instances");
    }
  }

  // Shuffle inside each class, then deal the concatenation round-robin.
  // Continuing the fold cursor across classes keeps both the total fold
  // sizes and the per-class counts within one of each other.
  Rng rng(rng_seed);
  FoldPlan plan;
  plan.k = k;
  plan.rng_seed = rng_seed;
  plan.fold_by_index.assign(n, 0);
  std::size_t cursor = 0;
  for (auto& members : by_class) {
    rng.shuffle(members);
    for (int idx : members) {
      plan.fold_by_index[static_cast<std::size_t>(idx)] =
          static_cast<int>(cursor % static_cast<std::size_t>(k));
      ++cursor;
    }
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    plan.assignments.emplace(corpus.instances[idx].id,
                             plan.fold_by_index[idx]);
  }
  return plan;
}

namespace {

Corpus subset_corpus(const Corpus& corpus, const std::vector<int>& indices) {
  Corpus out;
  out.target_lemma = corpus.target_lemma;
  out.sense_inventory = corpus.sense_inventory;
  out.stopwords = corpus.stopwords;
  out.instances.reserve(indices.size());
  for (int idx : indices) {
    out.instances.push_back(corpus.instances[static_cast<std::size_t>(idx)]);
  }
  return out;
}

FeatureSpace fit_space(const Corpus& train, const EvalConfig& config) {
  if (config.features == FeatureKind::topical) {
    return fit_topical_space(train, config.num_topics);
  }
  return fit_local_space(train, config.window);
}

InitKind to_init_kind(InitChoice init) {
  switch (init) {
    case InitChoice::zeros: return InitKind::zeros;
    case InitChoice::random: return InitKind::random;
    case InitChoice::prior: return InitKind::prior;
    case InitChoice::best3: break;
  }
  throw ValidationError("cross_validate: init must be a concrete kind");
}

double macro_f1_of(const std::vector<std::vector<int>>& confusion) {
  const std::size_t c = confusion.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < c; ++j) {
    long long tp = confusion[j][j];
    long long row = 0, col = 0;
    for (std::size_t m = 0; m < c; ++m) {
      row += confusion[j][m];
      col += confusion[m][j];
    }
    const double precision =
        col > 0 ? static_cast<double>(tp) / static_cast<double>(col) : 0.0;
    const double recall =
        row > 0 ? static_cast<double>(tp) / static_cast<double>(row) : 0.0;
    sum += (precision + recall) > 0.0
               ? 2.0 * precision * recall / (precision + recall)
               : 0.0;
  }
  return c > 0 ? sum / static_cast<double>(c) : 0.0;
}

}  // namespace

EvalReport cross_validate(const Corpus& corpus, const EvalConfig& config,
                          const FoldPlan& plan) {
  const std::size_t n_cls = corpus.sense_inventory.size();
  const InitKind init = config.classifier == ClassifierKind::imbhn
                            ? to_init_kind(config.init)
                            : InitKind::zeros;

  EvalReport report;
  report.config = config;
  report.target = corpus.target_lemma;
  report.n_instances = static_cast<int>(corpus.instances.size());
  report.classes = corpus.sense_inventory;
  report.confusion.assign(n_cls, std::vector<int>(n_cls, 0));

  long long total_correct = 0;
  long long total_seen = 0;

  for (int fold = 0; fold < plan.k; ++fold) {
    std::vector<int> train_idx, test_idx;
    for (std::size_t idx = 0; idx < corpus.instances.size(); ++idx) {
      (plan.fold_by_index[idx] == fold ? test_idx : train_idx)
          .push_back(static_cast<int>(idx));
    }
    const Corpus train = subset_corpus(corpus, train_idx);
    const Corpus test = subset_corpus(corpus, test_idx);

    // Classes can drop out of small training folds; that is worth a
    // warning, and fatal when the prior initialization needs their counts.
    std::vector<long long> class_count(n_cls, 0);
    for (const Instance& inst : train.instances) {
      ++class_count[static_cast<std::size_t>(train.sense_index(inst.sense))];
    }
    for (std::size_t j = 0; j < n_cls; ++j) {
      if (class_count[j] > 0) continue;
      if (config.classifier == ClassifierKind::imbhn &&
          init == InitKind::prior) {
        throw ValidationError(
            "fold " + std::to_string(fold) +
            ": prior initialization unavailable: class '" +
            corpus.sense_inventory[j] + "' missing from the training folds");
      }
      report.warnings.push_back("fold " + std::to_string(fold) + ": class '" +
                                corpus.sense_inventory[j] +
                                "' missing from the training folds");
    }

    std::vector<int> predicted(test.instances.size(), 0);
    switch (config.classifier) {
      case ClassifierKind::imbhn: {
        const FeatureSpace space = fit_space(train, config);
        TrainConfig tc;
        tc.eta = config.eta;
        tc.epsilon_min = config.epsilon_min;
        tc.max_iters = config.max_iters;
        tc.init = init;
        tc.rng_seed = derive_seed(config.master_seed, Stream::init,
                                  static_cast<std::uint64_t>(fold));
        const TrainedModel model = train_model(train, space, tc);
        for (std::size_t t = 0; t < test.instances.size(); ++t) {
          predicted[t] = classify_index(model, test.instances[t]);
        }
        break;
      }
      case ClassifierKind::naive_bayes: {
        const FeatureSpace space = fit_space(train, config);
        const BipartiteNetwork net = build_network(train, space);
        const NaiveBayesModel nb = train_nb(net);
        for (std::size_t t = 0; t < test.instances.size(); ++t) {
          predicted[t] = predict_nb(
              nb, to_sparse(vectorize(test.instances[t], space), space));
        }
        break;
      }
      case ClassifierKind::knn: {
        const FeatureSpace space = fit_space(train, config);
        const BipartiteNetwork net = build_network(train, space);
        const KnnModel knn = fit_knn(net, config.knn_k);
        for (std::size_t t = 0; t < test.instances.size(); ++t) {
          predicted[t] = predict_knn(
              knn, to_sparse(vectorize(test.instances[t], space), space));
        }
        break;
      }
      case ClassifierKind::majority: {
        const int label = majority_class_index(train);
        std::fill(predicted.begin(), predicted.end(), label);
        break;
      }
    }

    long long correct = 0;
    for (std::size_t t = 0; t < test.instances.size(); ++t) {
      const int gold = corpus.sense_index(test.instances[t].sense);
      report.confusion[static_cast<std::size_t>(gold)]
                      [static_cast<std::size_t>(predicted[t])] += 1;
      if (predicted[t] == gold) ++correct;
    }
    report.fold_correct.push_back(static_cast<int>(correct));
    report.fold_total.push_back(static_cast<int>(test.instances.size()));
    report.fold_accuracy.push_back(
        test.instances.empty()
            ? 0.0
            : static_cast<double>(correct) /
                  static_cast<double>(test.instances.size()));
    total_correct += correct;
    total_seen += static_cast<long long>(test.instances.size());
  }

  report.mean_accuracy = total_seen > 0 ? static_cast<double>(total_correct) /
                                              static_cast<double>(total_seen)
                                        : 0.0;
  report.macro_f1 = macro_f1_of(report.confusion);
  return report;
}

EvalReport run_evaluation(const Corpus& corpus, const EvalConfig& config) {
  const FoldPlan plan = stratified_folds(
      corpus, config.folds, derive_seed(config.master_seed, Stream::folds));

  if (config.classifier != ClassifierKind::imbhn ||
      config.init != InitChoice::best3) {
    return cross_validate(corpus, config, plan);
  }

  // best3: evaluate all three initializations and keep the winner.
  // Ties resolve in the order zeros, random, prior.
  constexpr InitChoice kOrder[] = {InitChoice::zeros, InitChoice::random,
                                   InitChoice::prior};
  EvalReport best;
  bool have_best = false;
  std::map<std::string, double> per_init;
  std::string winner;
  for (InitChoice choice : kOrder) {
    EvalConfig sub = config;
    sub.init = choice;
    EvalReport report = cross_validate(corpus, sub, plan);
    per_init[init_choice_name(choice)] = report.mean_accuracy;
    if (!have_best || report.mean_accuracy > best.mean_accuracy) {
      best = std::move(report);
      winner = init_choice_name(choice);
      have_best = true;
    }
  }
  best.config.init = InitChoice::best3;
  best.per_init_accuracy = std::move(per_init);
  best.winner_init = winner;
  return best;
}

namespace {

// Uniform draw keeping N - floor(rate*N) instances; redraws when a class
// would be emptied.
Corpus draw_subset(const Corpus& corpus, double rate, Rng& rng) {
  const std::size_t n = corpus.instances.size();
  const auto removed = static_cast<std::size_t>(
      std::floor(rate * static_cast<double>(n)));
  const std::size_t kept = n - removed;

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<int> indices(n);
    for (std::size_t i = 0; i < n; ++i) indices[i] = static_cast<int>(i);
    rng.shuffle(indices);
    indices.resize(kept);
    std::sort(indices.begin(), indices.end());

    std::vector<long long> class_count(corpus.sense_inventory.size(), 0);
    for (int idx : indices) {
      ++class_count[static_cast<std::size_t>(
          corpus.sense_index(corpus.instances[static_cast<std::size_t>(idx)].sense))];
    }
    const bool all_present =
        std::all_of(class_count.begin(), class_count.end(),
                    [](long long c) { return c > 0; });
    if (all_present) return subset_corpus(corpus, indices);
  }
  throw ValidationError(
      "robustness draw emptied a class in 100 consecutive attempts "
      "(rate too high for this corpus)");
}

}  // namespace

RobustnessReport robustness_curve(const Corpus& corpus,
                                  const EvalConfig& config,
                                  const std::vector<double>& rates,
                                  int trials, std::uint64_t rng_seed) {
  if (trials < 1) throw ValidationError("robustness: trials must be >= 1");
  for (double rate : rates) {
    if (rate < 0.0 || rate >= 1.0) {
      throw ValidationError("robustness: rates must lie in [0, 1)");
    }
  }

  EvalConfig base = config;
  base.master_seed = rng_seed;

  RobustnessReport report;
  report.config = base;
  report.target = corpus.target_lemma;
  report.n_instances = static_cast<int>(corpus.instances.size());
  report.trials = trials;
  report.rates = rates;

  report.gamma0 = run_evaluation(corpus, base).mean_accuracy;
  if (report.gamma0 <= 0.0) {
    throw ValidationError(
        "robustness: full-corpus accuracy is zero, relative accuracy "
        "undefined");
  }

  for (std::size_t r = 0; r < rates.size(); ++r) {
    const std::size_t n = corpus.instances.size();
    const auto removed = static_cast<std::size_t>(
        std::floor(rates[r] * static_cast<double>(n)));
    report.kept.push_back(static_cast<int>(n - removed));

    std::vector<double> gammas, rels;
    gammas.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
      Rng draw_rng(derive_seed(rng_seed, Stream::draw,
                               static_cast<std::uint64_t>(r),
                               static_cast<std::uint64_t>(t)));
      const Corpus subset = draw_subset(corpus, rates[r], draw_rng);
      const double gamma = run_evaluation(subset, base).mean_accuracy;
      gammas.push_back(gamma);
      rels.push_back(gamma / report.gamma0);
    }

    double mean = 0.0;
    for (double v : rels) mean += v;
    mean /= static_cast<double>(rels.size());
    double var = 0.0;
    if (rels.size() > 1) {
      for (double v : rels) var += (v - mean) * (v - mean);
      var /= static_cast<double>(rels.size() - 1);
    }
    report.gamma.push_back(std::move(gammas));
    report.relative.push_back(std::move(rels));
    report.mean_relative.push_back(mean);
    report.std_relative.push_back(std::sqrt(var));
  }
  return report;
}

}  // namespace imbhn
