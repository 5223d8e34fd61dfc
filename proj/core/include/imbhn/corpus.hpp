// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace imbhn {

/// One context word. The punctuation flag is derived from the surface: a
/// token is punctuation iff every character is in the ASCII punctuation
/// class.
struct Token {
  std::string surface;
  bool is_punctuation = false;

  static Token of(std::string surface);
};

/// One labeled occurrence of the ambiguous target word.
struct Instance {
  std::string id;
  std::string target_lemma;
  std::vector<Token> context;
  std::size_t target_index = 0;
  std::string sense;
};

/// A lexical-sample corpus for a single target word. Immutable after load;
/// safe to share read-only across threads.
struct Corpus {
  std::string target_lemma;
  std::vector<Instance> instances;
  std::vector<std::string> sense_inventory;  // order fixed at load time
  std::set<std::string> stopwords;

  /// Index of a sense in the inventory, -1 if absent.
  int sense_index(const std::string& sense) const;
};

enum class CorpusFormat { jsonl };

bool is_punctuation_surface(std::string_view s);
std::string to_lower(std::string_view s);

/// Bundled English stopword list (same content as core/data/stopwords_en.txt).
std::set<std::string> default_stopwords();

/// One word per line, '#' comments and blank lines ignored.
std::set<std::string> load_stopwords(const std::string& path);

/// Loads and validates a corpus. The sense inventory is ordered by first
/// appearance in the file. Throws FormatError (with line number) on parse
/// failures and ValidationError on semantic problems (duplicate ids,
/// out-of-range target_index, fewer than two senses).
Corpus load_corpus(const std::string& path, CorpusFormat format,
                   std::set<std::string> stopwords = default_stopwords());

/// Writes the corpus back out in the given format.
void save_corpus(const Corpus& corpus, const std::string& path,
                 CorpusFormat format);

/// Drops punctuation tokens and stopwords (case-insensitive), lowercases the
/// survivors and remaps target_index. The target token is never removed,
/// even when it matches a stopword. Idempotent.
Instance preprocess(const Instance& instance,
                    const std::set<std::string>& stopwords);

/// Applies preprocess() to every instance using corpus.stopwords.
Corpus preprocess(const Corpus& corpus);

}  // namespace imbhn
