// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <string>
#include <vector>

#include "imbhn/corpus.hpp"
#include "imbhn/eval.hpp"
#include "imbhn/trainer.hpp"

namespace imbhn {

// Report serialization. Every artifact embeds the resolved configuration
// and the master seed; the column schemas are documented in the README and
// versioned through kSchemaVersion. Output is deterministic byte for byte
// for a fixed seed.

inline constexpr int kSchemaVersion = 1;

std::string eval_report_csv(const EvalReport& report);
std::string eval_report_json(const EvalReport& report);

std::string robustness_report_csv(const RobustnessReport& report);
std::string robustness_report_json(const RobustnessReport& report);

/// One "id,predicted_sense" row per instance, same order as the corpus.
std::string predictions_csv(const Corpus& corpus,
                            const std::vector<std::string>& predicted,
                            const std::string& model_path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace imbhn
