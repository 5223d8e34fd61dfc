// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "imbhn/error.hpp"
#include "imbhn/reports.hpp"

namespace imbhn {

// Line-oriented text format, version 1. Doubles are hexfloats (%a), which
// round-trip bit for bit. Class and vocabulary entries are one per line,
// verbatim; names containing newlines cannot be persisted.

namespace {

constexpr const char* kMagic = "imbhn-model";
constexpr int kVersion = 1;

std::string hex_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double parse_double(const std::string& s, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw FormatError(std::string("model file: bad double in ") + what +
                      ": '" + s + "'");
  }
  return v;
}

void check_no_newline(const std::string& s, const char* what) {
  if (s.find('\n') != std::string::npos ||
      s.find('\r') != std::string::npos) {
    throw ValidationError(std::string("cannot persist ") + what +
                          " containing a newline: '" + s + "'");
  }
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw FormatError(std::string("model file: truncated, expected ") +
                        what);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  long long next_int(const char* what) {
    const std::string line = next(what);
    try {
      return std::stoll(line);
    } catch (const std::exception&) {
      throw FormatError(std::string("model file: bad integer for ") + what +
                        ": '" + line + "'");
    }
  }

 private:
  std::istringstream in_;
};

}  // namespace

std::string model_to_string(const TrainedModel& model) {
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << '\n';
  check_no_newline(model.target_lemma, "target lemma");
  out << "target " << model.target_lemma << '\n';
  out << "feature_kind " << feature_kind_name(model.space.kind) << '\n';
  out << "param "
      << (model.space.kind == FeatureKind::topical ? model.space.num_topics
                                                   : model.space.window)
      << '\n';
  out << "n_train " << model.space.n_train << '\n';
  out << "majority_class " << model.majority_class << '\n';
  out << "eta " << hex_double(model.config.eta) << '\n';
  out << "epsilon_min " << hex_double(model.config.epsilon_min) << '\n';
  out << "max_iters " << model.config.max_iters << '\n';
  out << "init " << init_kind_name(model.config.init) << '\n';
  out << "rng_seed " << model.config.rng_seed << '\n';
  out << "iterations_run " << model.iterations_run << '\n';
  out << "converged " << (model.converged ? 1 : 0) << '\n';

  out << "classes " << model.classes.size() << '\n';
  for (const std::string& c : model.classes) {
    check_no_newline(c, "class label");
    out << c << '\n';
  }

  // Vocabulary lines carry the document frequency first so words may
  // contain spaces. Topical spaces have no df; write 0.
  out << "vocabulary " << model.space.vocabulary.size() << '\n';
  for (const std::string& w : model.space.vocabulary) {
    check_no_newline(w, "vocabulary word");
    int df = 0;
    if (model.space.kind == FeatureKind::local) {
      df = model.space.df.at(w);
    }
    out << df << ' ' << w << '\n';
  }

  out << "relevance " << model.relevance.rows() << ' '
      << model.relevance.cols() << '\n';
  for (std::size_t i = 0; i < model.relevance.rows(); ++i) {
    for (std::size_t j = 0; j < model.relevance.cols(); ++j) {
      if (j) out << ' ';
      out << hex_double(model.relevance.at(i, j));
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

TrainedModel model_from_string(const std::string& text) {
  LineReader reader(text);
  TrainedModel model;

  {
    const std::string header = reader.next("header");
    std::istringstream h(header);
    std::string magic;
    int version = 0;
    h >> magic >> version;
    if (magic != kMagic) {
      throw FormatError("not a model file (bad magic '" + magic + "')");
    }
    if (version != kVersion) {
      throw FormatError("unsupported model version " +
                        std::to_string(version));
    }
  }

  auto field = [&](const char* key) -> std::string {
    const std::string line = reader.next(key);
    const std::string prefix = std::string(key) + ' ';
    if (line.rfind(prefix, 0) != 0) {
      throw FormatError(std::string("model file: expected '") + key +
                        "', got '" + line + "'");
    }
    return line.substr(prefix.size());
  };

  model.target_lemma = field("target");
  const std::string kind = field("feature_kind");
  if (kind == "topical") {
    model.space.kind = FeatureKind::topical;
  } else if (kind == "local") {
    model.space.kind = FeatureKind::local;
  } else {
    throw FormatError("model file: unknown feature_kind '" + kind + "'");
  }
  const int param = static_cast<int>(
      parse_double(field("param"), "param"));
  if (model.space.kind == FeatureKind::topical) {
    model.space.num_topics = param;
  } else {
    model.space.window = param;
  }
  model.space.n_train =
      static_cast<int>(parse_double(field("n_train"), "n_train"));
  model.majority_class =
      static_cast<int>(parse_double(field("majority_class"), "majority_class"));
  model.config.eta = parse_double(field("eta"), "eta");
  model.config.epsilon_min = parse_double(field("epsilon_min"), "epsilon_min");
  model.config.max_iters =
      static_cast<int>(parse_double(field("max_iters"), "max_iters"));
  const std::string init = field("init");
  if (init == "zeros") {
    model.config.init = InitKind::zeros;
  } else if (init == "random") {
    model.config.init = InitKind::random;
  } else if (init == "prior") {
    model.config.init = InitKind::prior;
  } else {
    throw FormatError("model file: unknown init '" + init + "'");
  }
  model.config.rng_seed = std::stoull(field("rng_seed"));
  model.iterations_run =
      static_cast<int>(parse_double(field("iterations_run"), "iterations_run"));
  model.converged = field("converged") == "1";

  const long long n_classes = std::stoll(field("classes"));
  if (n_classes < 1) throw FormatError("model file: bad class count");
  for (long long j = 0; j < n_classes; ++j) {
    model.classes.push_back(reader.next("class label"));
  }

  const long long n_vocab = std::stoll(field("vocabulary"));
  if (n_vocab < 0) throw FormatError("model file: bad vocabulary count");
  for (long long i = 0; i < n_vocab; ++i) {
    const std::string line = reader.next("vocabulary entry");
    const auto space_pos = line.find(' ');
    if (space_pos == std::string::npos) {
      throw FormatError("model file: bad vocabulary line '" + line + "'");
    }
    int df = 0;
    try {
      df = std::stoi(line.substr(0, space_pos));
    } catch (const std::exception&) {
      throw FormatError("model file: bad df in '" + line + "'");
    }
    std::string word = line.substr(space_pos + 1);
    if (word.empty()) {
      throw FormatError("model file: empty vocabulary word");
    }
    if (model.space.kind == FeatureKind::local) {
      model.space.df.emplace(word, df);
    }
    model.space.index.emplace(word, static_cast<int>(i));
    model.space.vocabulary.push_back(std::move(word));
  }

  {
    const std::string dims = field("relevance");
    std::istringstream d(dims);
    long long rows = -1, cols = -1;
    d >> rows >> cols;
    if (rows != static_cast<long long>(model.space.vocabulary.size()) ||
        cols != n_classes) {
      throw FormatError("model file: relevance dimensions mismatch");
    }
    model.relevance = Matrix(static_cast<std::size_t>(rows),
                             static_cast<std::size_t>(cols));
    for (long long i = 0; i < rows; ++i) {
      const std::string line = reader.next("relevance row");
      std::istringstream r(line);
      std::string cell;
      for (long long j = 0; j < cols; ++j) {
        if (!(r >> cell)) {
          throw FormatError("model file: short relevance row " +
                            std::to_string(i));
        }
        model.relevance.at(static_cast<std::size_t>(i),
                           static_cast<std::size_t>(j)) =
            parse_double(cell, "relevance");
      }
    }
  }
  if (reader.next("end marker") != "end") {
    throw FormatError("model file: missing end marker");
  }
  return model;
}

void save_model(const TrainedModel& model, const std::string& path) {
  write_text_file(path, model_to_string(model));
}

TrainedModel load_model(const std::string& path) {
  return model_from_string(read_text_file(path));
}

}  // namespace imbhn
