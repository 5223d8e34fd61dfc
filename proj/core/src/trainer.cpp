// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/trainer.hpp"

#include <cmath>

#include "imbhn/baselines.hpp"
#include "imbhn/error.hpp"
#include "imbhn/rng.hpp"

namespace imbhn {

const char* init_kind_name(InitKind kind) {
  switch (kind) {
    case InitKind::zeros: return "zeros";
    case InitKind::random: return "random";
    case InitKind::prior: return "prior";
  }
  return "?";
}

RelevanceMatrix init_relevance(const BipartiteNetwork& net, InitKind init,
                               std::uint64_t rng_seed) {
  const std::size_t n_feat = net.n_features();
  const std::size_t n_cls = net.n_classes();
  Matrix f(n_feat, n_cls);

  switch (init) {
    case InitKind::zeros:
      break;
    case InitKind::random: {
      Rng rng(rng_seed);
      for (std::size_t i = 0; i < n_feat; ++i) {
        for (std::size_t j = 0; j < n_cls; ++j) {
          f.at(i, j) = rng.uniform01();
        }
      }
      break;
    }
    case InitKind::prior: {
      std::vector<long long> class_count(n_cls, 0);
      for (int g : net.gold) ++class_count[static_cast<std::size_t>(g)];
      for (std::size_t j = 0; j < n_cls; ++j) {
        if (class_count[j] == 0) {
          throw ValidationError(
              "prior initialization undefined: class '" + net.classes[j] +
              "' has no training instances");
        }
      }
      // Fraction of each class's instances connected to the feature.
      for (std::size_t i = 0; i < n_feat; ++i) {
        std::vector<long long> with_feature(n_cls, 0);
        for (const auto& [k, w] : net.cols[i]) {
          (void)w;
          ++with_feature[static_cast<std::size_t>(net.gold[k])];
        }
        for (std::size_t j = 0; j < n_cls; ++j) {
          f.at(i, j) = static_cast<double>(with_feature[j]) /
                       static_cast<double>(class_count[j]);
        }
      }
      break;
    }
  }
  return f;
}

Forward forward(const BipartiteNetwork& net, const RelevanceMatrix& relevance,
                std::size_t k) {
  const std::size_t n_cls = net.n_classes();
  Forward out;
  out.scores.assign(n_cls, 0.0);
  // Stored entries are feature-ascending, so each per-class accumulation
  // visits terms in the same order as a dense loop over all features.
  for (const auto& [i, w] : net.rows[k]) {
    const double* frow = relevance.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < n_cls; ++j) {
      out.scores[j] += w * frow[j];
    }
  }
  out.predicted = 0;
  for (std::size_t j = 1; j < n_cls; ++j) {
    if (out.scores[j] > out.scores[out.predicted]) {
      out.predicted = static_cast<int>(j);
    }
  }
  return out;
}

Matrix compute_error(const Matrix& labels, const Matrix& predictions) {
  if (!labels.same_shape(predictions)) {
    throw ValidationError("compute_error: shape mismatch");
  }
  Matrix e(labels.rows(), labels.cols());
  for (std::size_t k = 0; k < labels.rows(); ++k) {
    for (std::size_t j = 0; j < labels.cols(); ++j) {
      e.at(k, j) = labels.at(k, j) - predictions.at(k, j);
    }
  }
  return e;
}

TrainResult train_relevance(const BipartiteNetwork& net,
                            const TrainConfig& config,
                            const TrainCallback& callback) {
  if (net.n_instances() == 0) {
    throw ValidationError("train: network has no instances");
  }
  if (net.n_classes() == 0) {
    throw ValidationError("train: network has no classes");
  }
  if (config.eta <= 0.0) throw ValidationError("train: eta must be > 0");
  if (config.epsilon_min <= 0.0) {
    throw ValidationError("train: epsilon_min must be > 0");
  }
  if (config.max_iters < 1) {
    throw ValidationError("train: max_iters must be >= 1");
  }

  const std::size_t n_inst = net.n_instances();
  const std::size_t n_feat = net.n_features();
  const std::size_t n_cls = net.n_classes();
  const double denom =
      static_cast<double>(n_inst) * static_cast<double>(n_cls);

  TrainResult result;
  result.relevance = init_relevance(net, config.init, config.rng_seed);

  std::vector<int> predicted(n_inst);
  std::vector<char> wrong(n_inst);
  std::vector<double> delta(n_cls);

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    // Forward pass with the current relevance values.
    long long misclassified = 0;
    for (std::size_t k = 0; k < n_inst; ++k) {
      predicted[k] = forward(net, result.relevance, k).predicted;
      wrong[k] = predicted[k] != net.gold[k];
      misclassified += wrong[k];
    }

    // Batch update F += eta * W^T * E. E[k] is zero for correct rows and
    // +1 at gold / -1 at predicted otherwise, so only wrong rows
    // contribute. Columns are instance-ascending, which keeps the per-cell
    // accumulation order identical to a dense k-loop.
    for (std::size_t i = 0; i < n_feat; ++i) {
      std::fill(delta.begin(), delta.end(), 0.0);
      bool touched = false;
      for (const auto& [k, w] : net.cols[i]) {
        if (!wrong[static_cast<std::size_t>(k)]) continue;
        touched = true;
        delta[static_cast<std::size_t>(net.gold[k])] += w;
        delta[static_cast<std::size_t>(predicted[k])] -= w;
      }
      if (!touched) continue;
      double* frow = result.relevance.row(i);
      for (std::size_t j = 0; j < n_cls; ++j) {
        frow[j] += config.eta * delta[j];
        if (!std::isfinite(frow[j])) {
          throw TrainingError(
              "training diverged: non-finite relevance entry at iteration " +
                  std::to_string(iter) + " (eta too large?)",
              iter);
        }
      }
    }

    // Each wrong row contributes exactly (+1)^2 + (-1)^2 = 2.
    const double mse = 2.0 * static_cast<double>(misclassified) / denom;
    result.mse_history.push_back(mse);
    result.misclassified_history.push_back(static_cast<int>(misclassified));
    result.iterations_run = iter;
    if (callback) callback(iter, result.relevance, mse);
    if (mse < config.epsilon_min) {
      result.converged = true;
      break;
    }
  }
  return result;
}

TrainedModel train_model(const Corpus& train, const FeatureSpace& space,
                         const TrainConfig& config) {
  BipartiteNetwork net = build_network(train, space);
  TrainResult r = train_relevance(net, config);

  TrainedModel model;
  model.relevance = std::move(r.relevance);
  model.space = space;
  model.classes = train.sense_inventory;
  model.history = std::move(r.mse_history);
  model.misclassified_history = std::move(r.misclassified_history);
  model.iterations_run = r.iterations_run;
  model.converged = r.converged;
  model.majority_class = majority_class_index(train);
  model.config = config;
  model.target_lemma = train.target_lemma;
  return model;
}

int classify_index(const TrainedModel& model, const Instance& instance) {
  const WeightedEdgeList edges = vectorize(instance, model.space);
  if (edges.empty()) return model.majority_class;

  const std::size_t n_cls = model.classes.size();
  std::vector<double> scores(n_cls, 0.0);
  for (const WeightedEdge& e : edges) {
    const int i = model.space.index_of(e.feature);
    const double* frow = model.relevance.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < n_cls; ++j) {
      scores[j] += e.weight * frow[j];
    }
  }
  int best = 0;
  for (std::size_t j = 1; j < n_cls; ++j) {
    if (scores[j] > scores[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(j);
    }
  }
  return best;
}

std::string classify(const TrainedModel& model, const Instance& instance) {
  return model.classes[static_cast<std::size_t>(classify_index(model, instance))];
}

}  // namespace imbhn
