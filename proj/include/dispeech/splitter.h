// dispeech/splitter.h

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

#ifndef DISPEECH_SPLITTER_H_
#define DISPEECH_SPLITTER_H_

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dispeech/manifest.h"

namespace dispeech {

/// Seeded generator for splits. mt19937_64 has a standardised output
/// sequence; bounded draws use rejection sampling and shuffles are
/// Fisher-Yates from the back, so results do not depend on the standard
/// library's distribution or std::shuffle implementation.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  uint64_t Below(uint64_t n);

  template <class T>
  void Shuffle(std::vector<T> &v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(Below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct SplitSpec {
  double train_ratio = 0.8;
  double val_ratio = 0.1;
  double test_ratio = 0.1;
  uint64_t seed = 42;
  std::string test_corpus_tag = "pitt";
  // When > 0, reserve ceil(fraction * speakers) of the test corpus's speakers
  // instead of filling the test set up to test_ratio of all segments.
  double test_speaker_fraction = 0.0;

  /// Each ratio in (0, 1), summing to 1 within 1e-9.
  void Validate() const;
};

struct SplitResult {
  std::vector<std::string> train;
  std::vector<std::string> val;
  std::vector<std::string> test;
  std::set<std::string> test_speakers;
  bool operator==(const SplitResult &) const = default;
};

/// Speaker-disjoint split.
///
/// Speakers of the test corpus are shuffled and moved, with all their
/// segments, into the test set until it holds at least test_ratio of all
/// segments. Speakers who also appear under another corpus tag are never
/// chosen. The remaining segments are shuffled and cut train:val by count.
/// Each list is returned sorted.
///
/// Throws ValidationError("EmptyCorpus"), ("InsufficientSpeakers"),
/// ("DuplicateSegmentId").
SplitResult SplitCorpus(std::span<const ManifestEntry> entries, const SplitSpec &spec);

std::string SplitResultToJson(const SplitResult &result);
SplitResult SplitResultFromJson(std::string_view json_text);

struct SplitStats {
  size_t segments = 0;
  int64_t duration_ms = 0;
  size_t speakers = 0;
  int64_t n_uh = 0;
  int64_t n_um = 0;

  double hours() const { return static_cast<double>(duration_ms) / 3.6e6; }
};

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SplitAudit {
  SplitStats train, val, test;
  std::vector<AuditCheck> checks;
  std::vector<std::string> warnings;

  bool ok() const;
};

/// Recomputes per-split statistics and re-checks every SplitResult
/// invariant. Empty splits produce warnings, not failures.
SplitAudit AuditSplit(std::span<const ManifestEntry> entries, const SplitResult &result,
                      std::string_view test_corpus_tag = "pitt");

std::string FormatAudit(const SplitAudit &audit);

}  // namespace dispeech

#endif  // DISPEECH_SPLITTER_H_
