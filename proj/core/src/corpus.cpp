// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "imbhn/error.hpp"

namespace imbhn {

extern const char* kDefaultStopwordsText;  // generated from data/stopwords_en.txt

bool is_punctuation_surface(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (c >= 0x80 || !std::ispunct(c)) return false;
  }
  return true;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Token Token::of(std::string surface) {
  Token t;
  t.is_punctuation = is_punctuation_surface(surface);
  t.surface = std::move(surface);
  return t;
}

int Corpus::sense_index(const std::string& sense) const {
  for (std::size_t j = 0; j < sense_inventory.size(); ++j) {
    if (sense_inventory[j] == sense) return static_cast<int>(j);
  }
  return -1;
}

namespace {

std::set<std::string> parse_stopword_lines(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(to_lower(line));
  }
  return words;
}

}  // namespace

std::set<std::string> default_stopwords() {
  std::istringstream in(kDefaultStopwordsText);
  return parse_stopword_lines(in);
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file: " + path);
  return parse_stopword_lines(in);
}

Corpus load_corpus(const std::string& path, CorpusFormat format,
                   std::set<std::string> stopwords) {
  if (format != CorpusFormat::jsonl) {
    throw ValidationError("unsupported corpus format");
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);

  Corpus corpus;
  corpus.stopwords = std::move(stopwords);
  std::unordered_set<std::string> seen_ids;
  std::unordered_set<std::string> seen_senses;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": invalid JSON: " + e.what());
    }
    auto require = [&](const char* field) -> const nlohmann::json& {
      auto it = rec.find(field);
      if (it == rec.end()) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": missing field '" + field + "'");
      }
      return *it;
    };

    Instance inst;
    const auto& id = require("id");
    const auto& target = require("target");
    const auto& target_index = require("target_index");
    const auto& sense = require("sense");
    const auto& tokens = require("tokens");
    if (!id.is_string() || !target.is_string() || !sense.is_string() ||
        !target_index.is_number_integer() || !tokens.is_array()) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": field has wrong type");
    }
    inst.id = id.get<std::string>();
    inst.target_lemma = target.get<std::string>();
    inst.sense = sense.get<std::string>();
    const long long ti = target_index.get<long long>();
    for (const auto& tok : tokens) {
      if (!tok.is_string()) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": tokens must be strings");
      }
      std::string surface = tok.get<std::string>();
      if (surface.empty()) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": empty token");
      }
      inst.context.push_back(Token::of(std::move(surface)));
    }
    if (inst.context.empty()) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": empty context");
    }
    if (ti < 0 || ti >= static_cast<long long>(inst.context.size())) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": target_index out of range");
    }
    inst.target_index = static_cast<std::size_t>(ti);

    if (!seen_ids.insert(inst.id).second) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate id '" + inst.id + "'");
    }
    if (corpus.instances.empty()) {
      corpus.target_lemma = inst.target_lemma;
    } else if (inst.target_lemma != corpus.target_lemma) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": target '" + inst.target_lemma +
                            "' differs from '" + corpus.target_lemma + "'");
    }
    if (seen_senses.insert(inst.sense).second) {
      corpus.sense_inventory.push_back(inst.sense);
    }
    corpus.instances.push_back(std::move(inst));
  }

  if (corpus.instances.empty()) {
    throw ValidationError("corpus file has no records: " + path);
  }
  if (corpus.sense_inventory.size() < 2) {
    throw ValidationError("corpus declares fewer than 2 senses: " + path);
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path,
                 CorpusFormat format) {
  if (format != CorpusFormat::jsonl) {
    throw ValidationError("unsupported corpus format");
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write corpus file: " + path);
  for (const Instance& inst : corpus.instances) {
    nlohmann::ordered_json rec;
    rec["id"] = inst.id;
    rec["target"] = inst.target_lemma;
    rec["target_index"] = inst.target_index;
    rec["sense"] = inst.sense;
    nlohmann::ordered_json toks = nlohmann::ordered_json::array();
    for (const Token& t : inst.context) toks.push_back(t.surface);
    rec["tokens"] = std::move(toks);
    out << rec.dump() << '\n';
  }
}

Instance preprocess(const Instance& instance,
                    const std::set<std::string>& stopwords) {
  Instance out;
  out.id = instance.id;
  out.target_lemma = instance.target_lemma;
  out.sense = instance.sense;
  for (std::size_t p = 0; p < instance.context.size(); ++p) {
    const Token& tok = instance.context[p];
    std::string lowered = to_lower(tok.surface);
    const bool is_target = p == instance.target_index;
    if (!is_target) {
      if (tok.is_punctuation) continue;
      if (stopwords.count(lowered)) continue;
    }
    if (is_target) out.target_index = out.context.size();
    out.context.push_back(Token::of(std::move(lowered)));
  }
  return out;
}

Corpus preprocess(const Corpus& corpus) {
  Corpus out;
  out.target_lemma = corpus.target_lemma;
  out.sense_inventory = corpus.sense_inventory;
  out.stopwords = corpus.stopwords;
  out.instances.reserve(corpus.instances.size());
  for (const Instance& inst : corpus.instances) {
    out.instances.push_back(preprocess(inst, corpus.stopwords));
  }
  return out;
}

}  // namespace imbhn
