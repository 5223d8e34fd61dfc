// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imbhn/error.hpp"

namespace imbhn {

SparseVec to_sparse(const WeightedEdgeList& edges, const FeatureSpace& space) {
  SparseVec vec;
  vec.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    const int i = space.index_of(e.feature);
    if (i >= 0) vec.emplace_back(i, e.weight);
  }
  return vec;
}

int majority_class_index(const Corpus& train) {
  if (train.instances.empty()) {
    throw ValidationError("majority_baseline: empty corpus");
  }
  std::vector<long long> counts(train.sense_inventory.size(), 0);
  for (const Instance& inst : train.instances) {
    const int j = train.sense_index(inst.sense);
    if (j < 0) {
      throw ValidationError("instance '" + inst.id +
                            "' has sense outside the inventory");
    }
    ++counts[static_cast<std::size_t>(j)];
  }
  int best = 0;
  for (std::size_t j = 1; j < counts.size(); ++j) {
    if (counts[j] > counts[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(j);
    }
  }
  return best;
}

std::pair<std::string, double> majority_baseline(const Corpus& train) {
  const int best = majority_class_index(train);
  long long n = 0;
  for (const Instance& inst : train.instances) {
    if (train.sense_index(inst.sense) == best) ++n;
  }
  return {train.sense_inventory[static_cast<std::size_t>(best)],
          static_cast<double>(n) /
              static_cast<double>(train.instances.size())};
}

NaiveBayesModel train_nb(const BipartiteNetwork& net) {
  const std::size_t n_feat = net.n_features();
  const std::size_t n_cls = net.n_classes();
  const std::size_t n_inst = net.n_instances();
  if (n_inst == 0) throw ValidationError("train_nb: empty network");

  NaiveBayesModel model;
  model.classes = net.classes;
  model.class_log_priors.assign(n_cls, 0.0);
  model.feature_log_likelihoods = Matrix(n_feat, n_cls);

  std::vector<long long> class_count(n_cls, 0);
  for (int g : net.gold) ++class_count[static_cast<std::size_t>(g)];

  // Weight mass of each feature per class.
  Matrix mass(n_feat, n_cls);
  std::vector<double> total(n_cls, 0.0);
  for (std::size_t k = 0; k < n_inst; ++k) {
    const auto j = static_cast<std::size_t>(net.gold[k]);
    for (const auto& [i, w] : net.rows[k]) {
      mass.at(static_cast<std::size_t>(i), j) += w;
      total[j] += w;
    }
  }

  for (std::size_t j = 0; j < n_cls; ++j) {
    model.class_log_priors[j] =
        class_count[j] == 0
            ? -std::numeric_limits<double>::infinity()
            : std::log(static_cast<double>(class_count[j]) /
                       static_cast<double>(n_inst));
    for (std::size_t i = 0; i < n_feat; ++i) {
      // add-one smoothing over the weighted counts
      model.feature_log_likelihoods.at(i, j) =
          std::log((mass.at(i, j) + 1.0) /
                   (total[j] + static_cast<double>(n_feat)));
    }
  }
  return model;
}

std::vector<double> nb_log_posteriors(const NaiveBayesModel& model,
                                      const SparseVec& vec) {
  std::vector<double> scores = model.class_log_priors;
  for (const auto& [i, x] : vec) {
    for (std::size_t j = 0; j < scores.size(); ++j) {
      scores[j] +=
          x * model.feature_log_likelihoods.at(static_cast<std::size_t>(i), j);
    }
  }
  return scores;
}

int predict_nb(const NaiveBayesModel& model, const SparseVec& vec) {
  const std::vector<double> scores = nb_log_posteriors(model, vec);
  int best = 0;
  for (std::size_t j = 1; j < scores.size(); ++j) {
    if (scores[j] > scores[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(j);
    }
  }
  return best;
}

namespace {

double sparse_norm(const SparseVec& v) {
  double s = 0.0;
  for (const auto& [i, x] : v) {
    (void)i;
    s += x * x;
  }
  return std::sqrt(s);
}

double sparse_dot(const SparseVec& a, const SparseVec& b) {
  double s = 0.0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].first < b[ib].first) {
      ++ia;
    } else if (a[ia].first > b[ib].first) {
      ++ib;
    } else {
      s += a[ia].second * b[ib].second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

}  // namespace

KnnModel fit_knn(const BipartiteNetwork& net, int k) {
  if (net.n_instances() == 0) throw ValidationError("fit_knn: empty network");
  if (k < 1) throw ValidationError("fit_knn: k must be >= 1");

  KnnModel model;
  model.n_classes = static_cast<int>(net.n_classes());
  model.k = std::min<int>(k, static_cast<int>(net.n_instances()));
  model.vectors = net.rows;
  model.labels = net.gold;
  model.norms.reserve(net.n_instances());
  for (const SparseVec& v : model.vectors) {
    model.norms.push_back(sparse_norm(v));
  }

  std::vector<long long> counts(net.n_classes(), 0);
  for (int g : net.gold) ++counts[static_cast<std::size_t>(g)];
  model.fallback_class = 0;
  for (std::size_t j = 1; j < counts.size(); ++j) {
    if (counts[j] > counts[static_cast<std::size_t>(model.fallback_class)]) {
      model.fallback_class = static_cast<int>(j);
    }
  }
  return model;
}

int predict_knn(const KnnModel& model, const SparseVec& vec) {
  if (model.vectors.empty()) throw ValidationError("predict_knn: empty model");
  const double qnorm = sparse_norm(vec);
  if (qnorm == 0.0) return model.fallback_class;

  // (similarity, training index); zero-norm training vectors score 0.
  std::vector<std::pair<double, int>> sims;
  sims.reserve(model.vectors.size());
  for (std::size_t t = 0; t < model.vectors.size(); ++t) {
    double sim = 0.0;
    if (model.norms[t] > 0.0) {
      sim = sparse_dot(vec, model.vectors[t]) / (qnorm * model.norms[t]);
    }
    sims.emplace_back(sim, static_cast<int>(t));
  }
  std::stable_sort(sims.begin(), sims.end(),
                   [](const auto& a, const auto& b) {
                     return a.first > b.first;
                   });

  std::vector<int> votes(static_cast<std::size_t>(model.n_classes), 0);
  for (int r = 0; r < model.k; ++r) {
    ++votes[static_cast<std::size_t>(
        model.labels[static_cast<std::size_t>(sims[static_cast<std::size_t>(r)].second)])];
  }
  int best = 0;
  for (std::size_t j = 1; j < votes.size(); ++j) {
    if (votes[j] > votes[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(j);
    }
  }
  return best;
}

}  // namespace imbhn
