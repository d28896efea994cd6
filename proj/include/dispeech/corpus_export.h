// dispeech/corpus_export.h

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

#ifndef DISPEECH_CORPUS_EXPORT_H_
#define DISPEECH_CORPUS_EXPORT_H_

#include <span>
#include <string>
#include <vector>

#include "dispeech/manifest.h"
#include "dispeech/pipeline_config.h"
#include "dispeech/segmenter.h"
#include "dispeech/text_normalizer.h"

namespace dispeech {

struct ExportOptions {
  std::string output_dir = "out";
  std::string speaker = "PAR";
  double nonspeech_ratio = 0.2;
  int jobs = 1;
};

struct ExportNote {
  std::string file;
  std::string message;
};

struct ExportSummary {
  std::vector<ManifestEntry> entries;
  std::vector<ExportNote> notes;  // skipped files and utterances
};

/// "<corpus_tag>:<media id up to the first '-'>", e.g. "pitt:001" for the
/// Pitt session "001-2".
std::string SpeakerIdFor(const std::string &corpus_tag, const std::string &media_id);

/// Walks each corpus root for *.cha files (sorted), plans segments for the
/// configured speaker, keeps the floor(nonspeech_ratio * speech segments)
/// longest non-speech plans across all recordings, slices
/// the companion "<media_id>.wav" next to each transcript into
/// output_dir/audio/<segment_id>.wav and writes output_dir/manifest.jsonl.
///
/// Files with no timed utterances or no audio are skipped and noted. Output
/// is identical for any `jobs` value.
ExportSummary ExportCorpus(std::span<const CorpusRoot> roots, const NormalizationTable &table,
                           const ExportOptions &options);

}  // namespace dispeech

#endif  // DISPEECH_CORPUS_EXPORT_H_
