// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "imbhn/corpus.hpp"
#include "imbhn/features.hpp"
#include "imbhn/matrix.hpp"

namespace imbhn {

/// Sparse entries of one row/column of the weight matrix, index-ascending.
using SparseEntries = std::vector<std::pair<int, double>>;

/// The two-layer graph: instance nodes on one side, feature words on the
/// other, weighted cross-layer edges and one gold sense per instance.
/// Zero weights are never stored. Row k of `rows` is exactly the vectorize()
/// output of instance k. `cols` is the same matrix transposed, kept so the
/// trainer can walk feature columns without re-scanning rows.
struct BipartiteNetwork {
  std::vector<std::string> features;      // vocabulary echo, column order
  std::vector<std::string> instance_ids;  // row order
  std::vector<std::string> classes;       // sense inventory order

  std::vector<SparseEntries> rows;  // per instance: (feature, weight)
  std::vector<SparseEntries> cols;  // per feature: (instance, weight)
  std::vector<int> gold;            // class index per instance

  std::size_t n_instances() const { return rows.size(); }
  std::size_t n_features() const { return features.size(); }
  std::size_t n_classes() const { return classes.size(); }

  /// Y[k][j] of the one-hot label matrix.
  double label(std::size_t k, std::size_t j) const {
    return gold[k] == static_cast<int>(j) ? 1.0 : 0.0;
  }

  /// Materializes Y as a dense matrix (tests, debug dumps).
  Matrix label_matrix() const;
};

/// Builds the network from a preprocessed corpus and a fitted space.
/// Throws ValidationError if an instance's sense is not in the inventory.
BipartiteNetwork build_network(const Corpus& train, const FeatureSpace& space);

/// Debug dump: writes w.csv (k,i,feature,weight triples), y.csv and,
/// when a relevance matrix is given, f.csv into `dir`.
void dump_network_csv(const BipartiteNetwork& net, const std::string& dir,
                      const Matrix* relevance = nullptr);

}  // namespace imbhn
