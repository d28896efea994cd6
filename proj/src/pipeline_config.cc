// pipeline_config.cc

// Copyright 2026  The dispeech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dispeech/pipeline_config.h"

#include <charconv>
#include <filesystem>

#include "dispeech/errors.h"
#include "dispeech/manifest.h"
#include "dispeech/string_util.h"

namespace dispeech {

namespace fs = std::filesystem;

namespace {

std::string Resolve(const std::string &base, std::string_view p) {
  fs::path path(p);
  if (base.empty() || path.is_absolute()) return path.string();
  return (fs::path(base) / path).lexically_normal().string();
}

}  // namespace

PipelineConfig ParseConfig(std::string_view text, const std::string &base_dir) {
  PipelineConfig cfg;
  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = Trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string &what) {
      throw ValidationError("InvalidConfig", "line " + std::to_string(line_no) + ": " + what);
    };
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    std::string key(Trim(line.substr(0, eq)));
    std::string value(Trim(line.substr(eq + 1)));
    if (value.empty()) fail("empty value for '" + key + "'");

    auto number = [&]() {
      double v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size()) fail("'" + key + "' expects a number");
      return v;
    };

    if (key.starts_with("corpus.")) {
      std::string tag = key.substr(7);
      if (tag.empty()) fail("corpus tag missing in '" + key + "'");
      for (const auto &r : cfg.corpus_roots)
        if (r.corpus_tag == tag) fail("corpus '" + tag + "' configured twice");
      cfg.corpus_roots.push_back({Resolve(base_dir, value), tag});
    } else if (key == "normalization_table") {
      cfg.normalization_table_path = Resolve(base_dir, value);
    } else if (key == "output_dir") {
      cfg.output_dir = Resolve(base_dir, value);
    } else if (key == "speaker") {
      cfg.speaker = value;
    } else if (key == "nonspeech_ratio") {
      cfg.nonspeech_ratio = number();
      if (cfg.nonspeech_ratio < 0) fail("nonspeech_ratio must be >= 0");
    } else if (key == "split.train") {
      cfg.split_spec.train_ratio = number();
    } else if (key == "split.val") {
      cfg.split_spec.val_ratio = number();
    } else if (key == "split.test") {
      cfg.split_spec.test_ratio = number();
    } else if (key == "split.seed") {
      uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc() || ptr != value.data() + value.size()) fail("split.seed expects an unsigned integer");
      cfg.split_spec.seed = seed;
    } else if (key == "split.test_corpus_tag") {
      cfg.split_spec.test_corpus_tag = value;
    } else if (key == "split.test_speaker_fraction") {
      cfg.split_spec.test_speaker_fraction = number();
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  try {
    cfg.split_spec.Validate();
  } catch (const ValidationError &e) {
    throw ValidationError("InvalidConfig", e.what());
  }
  return cfg;
}

PipelineConfig LoadConfig(const std::string &path) {
  std::string base = fs::path(path).parent_path().string();
  try {
    return ParseConfig(ReadTextFile(path), base);
  } catch (const ValidationError &e) {
    throw ValidationError(e.code(), path + ": " + e.what());
  }
}

void PipelineConfig::CheckPaths() const {
  for (const auto &r : corpus_roots)
    if (!fs::exists(r.path))
      throw IoError("MissingPath", "corpus '" + r.corpus_tag + "' root does not exist: " + r.path);
  if (!normalization_table_path.empty() && !fs::exists(normalization_table_path))
    throw IoError("MissingPath", "normalization table does not exist: " + normalization_table_path);
}

}  // namespace dispeech
