// dispeech/pipeline_config.h

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

#ifndef DISPEECH_PIPELINE_CONFIG_H_
#define DISPEECH_PIPELINE_CONFIG_H_

#include <string>
#include <string_view>
#include <vector>

#include "dispeech/splitter.h"

namespace dispeech {

struct CorpusRoot {
  std::string path;
  std::string corpus_tag;
  bool operator==(const CorpusRoot &) const = default;
};

/// Settings shared by the CLI subcommands. Text form, one "key = value" per
/// line, '#' comments:
///
///   corpus.pitt = data/pitt          # repeatable, one per corpus tag
///   normalization_table = data/normalization.tsv
///   output_dir = out
///   speaker = PAR
///   nonspeech_ratio = 0.2
///   split.train = 0.8                # also split.val, split.test
///   split.seed = 42
///   split.test_corpus_tag = pitt
///   split.test_speaker_fraction = 0
///
/// Relative paths are resolved against the config file's directory.
struct PipelineConfig {
  std::vector<CorpusRoot> corpus_roots;
  std::string normalization_table_path;  // empty: built-in defaults
  SplitSpec split_spec;
  std::string output_dir = "out";
  std::string speaker = "PAR";
  double nonspeech_ratio = 0.2;

  /// Throws IoError("MissingPath") naming the first corpus root or table
  /// path that does not exist.
  void CheckPaths() const;
};

/// Throws ValidationError("InvalidConfig") with the line number.
PipelineConfig ParseConfig(std::string_view text, const std::string &base_dir = {});
PipelineConfig LoadConfig(const std::string &path);

}  // namespace dispeech

#endif  // DISPEECH_PIPELINE_CONFIG_H_
