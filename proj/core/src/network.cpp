// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/network.hpp"

#include <filesystem>
#include <fstream>

#include "imbhn/error.hpp"

namespace imbhn {

Matrix BipartiteNetwork::label_matrix() const {
  Matrix y(n_instances(), n_classes());
  for (std::size_t k = 0; k < n_instances(); ++k) {
    y.at(k, static_cast<std::size_t>(gold[k])) = 1.0;
  }
  return y;
}

BipartiteNetwork build_network(const Corpus& train, const FeatureSpace& space) {
  BipartiteNetwork net;
  net.features = space.vocabulary;
  net.classes = train.sense_inventory;
  net.rows.reserve(train.instances.size());
  net.cols.resize(space.vocabulary.size());

  for (const Instance& inst : train.instances) {
    const int cls = train.sense_index(inst.sense);
    if (cls < 0) {
      throw ValidationError("instance '" + inst.id + "' has sense '" +
                            inst.sense + "' not in the sense inventory");
    }
    const int k = static_cast<int>(net.rows.size());
    WeightedEdgeList edges = vectorize(inst, space);
    SparseEntries row;
    row.reserve(edges.size());
    for (const WeightedEdge& e : edges) {
      const int i = space.index_of(e.feature);
      row.emplace_back(i, e.weight);
      net.cols[static_cast<std::size_t>(i)].emplace_back(k, e.weight);
    }
    net.rows.push_back(std::move(row));
    net.instance_ids.push_back(inst.id);
    net.gold.push_back(cls);
  }
  // Rows are emitted in vocabulary order by vectorize, and columns in
  // instance order by the loop above, so both sides are index-ascending.
  return net;
}

void dump_network_csv(const BipartiteNetwork& net, const std::string& dir,
                      const Matrix* relevance) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);

  char buf[64];
  {
    std::ofstream w(fs::path(dir) / "w.csv");
    if (!w) throw IoError("cannot write w.csv under " + dir);
    w << "instance,feature_index,feature,weight\n";
    for (std::size_t k = 0; k < net.n_instances(); ++k) {
      for (const auto& [i, weight] : net.rows[k]) {
        std::snprintf(buf, sizeof buf, "%.17g", weight);
        w << net.instance_ids[k] << ',' << i << ','
          << net.features[static_cast<std::size_t>(i)] << ',' << buf << '\n';
      }
    }
  }
  {
    std::ofstream y(fs::path(dir) / "y.csv");
    if (!y) throw IoError("cannot write y.csv under " + dir);
    y << "instance,class_index,class\n";
    for (std::size_t k = 0; k < net.n_instances(); ++k) {
      y << net.instance_ids[k] << ',' << net.gold[k] << ','
        << net.classes[static_cast<std::size_t>(net.gold[k])] << '\n';
    }
  }
  if (relevance != nullptr) {
    std::ofstream f(fs::path(dir) / "f.csv");
    if (!f) throw IoError("cannot write f.csv under " + dir);
    f << "feature_index,feature";
    for (const std::string& c : net.classes) f << ',' << c;
    f << '\n';
    for (std::size_t i = 0; i < net.n_features(); ++i) {
      f << i << ',' << net.features[i];
      for (std::size_t j = 0; j < net.n_classes(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", relevance->at(i, j));
        f << ',' << buf;
      }
      f << '\n';
    }
  }
}

}  // namespace imbhn
