// dispeech/manifest.h

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

#ifndef DISPEECH_MANIFEST_H_
#define DISPEECH_MANIFEST_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dispeech {

/// One exported audio slice. Serialised as one JSON object per line with
/// exactly these field names.
struct ManifestEntry {
  std::string segment_id;
  std::string audio_path;
  int64_t duration_ms = 0;
  std::string speaker_id;
  std::string corpus_tag;
  std::string reference_text;
  int n_uh = 0;
  int n_um = 0;

  bool operator==(const ManifestEntry &) const = default;
};

/// Throws ValidationError("InvalidManifest") naming the line for missing or
/// mistyped fields, filler counts that disagree with reference_text, and
/// duplicate segment ids.
std::vector<ManifestEntry> ParseManifest(std::string_view jsonl);
std::vector<ManifestEntry> ReadManifest(const std::string &path);

std::string ManifestLine(const ManifestEntry &entry);
std::string FormatManifest(std::span<const ManifestEntry> entries);
void WriteManifest(const std::string &path, std::span<const ManifestEntry> entries);

struct HypothesisRecord {
  std::string text;
  double processing_seconds = 0.0;
  bool operator==(const HypothesisRecord &) const = default;
};

/// One model's transcripts, keyed by segment id.
struct HypothesisSet {
  std::string model_id;
  std::map<std::string, HypothesisRecord> records;
  bool operator==(const HypothesisSet &) const = default;
};

/// Reads {"segment_id", "text", "processing_seconds"} lines. Unknown extra
/// fields are ignored. Throws ValidationError("InvalidHypothesisFile").
HypothesisSet ParseHypotheses(std::string_view jsonl, std::string model_id);

/// model_id defaults to the file name without directory and extension.
HypothesisSet ReadHypotheses(const std::string &path, std::string model_id = {});

std::string FormatHypotheses(const HypothesisSet &set);

/// Whole-file helpers shared by the readers.
std::string ReadTextFile(const std::string &path);
void WriteTextFile(const std::string &path, std::string_view contents);
std::string FileStem(const std::string &path);

}  // namespace dispeech

#endif  // DISPEECH_MANIFEST_H_
