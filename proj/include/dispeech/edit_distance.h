// dispeech/edit_distance.h

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

#ifndef DISPEECH_EDIT_DISTANCE_H_
#define DISPEECH_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dispeech {

enum class EditOp : uint8_t { kMatch, kSubstitute, kDelete, kInsert };

struct AlignStep {
  EditOp op;
  std::optional<size_t> ref_index;
  std::optional<size_t> hyp_index;
  bool operator==(const AlignStep &) const = default;
};

/// Token-level alignment. Ref (hyp) indices appear in increasing order and
/// cover the whole reference (hypothesis) exactly once.
struct Alignment {
  std::vector<AlignStep> steps;

  /// Number of non-match steps; equals the Levenshtein distance.
  size_t Cost() const {
    return static_cast<size_t>(std::count_if(
        steps.begin(), steps.end(),
        [](const AlignStep &s) { return s.op != EditOp::kMatch; }));
  }
  bool operator==(const Alignment &) const = default;
};

/// Minimal unit-cost alignment of `ref` against `hyp`.
///
/// The backtrace runs from the end of both sequences and, among steps that
/// stay on an optimal path, prefers match > substitute > delete > insert, so
/// the output is fully determined by the inputs.
template <class Token>
Alignment Align(std::span<const Token> ref, std::span<const Token> hyp) {
  const size_t n = ref.size(), m = hyp.size();
  const size_t w = m + 1;
  std::vector<uint32_t> cost((n + 1) * w);
  for (size_t j = 0; j <= m; ++j) cost[j] = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    cost[i * w] = static_cast<uint32_t>(i);
    for (size_t j = 1; j <= m; ++j) {
      uint32_t diag = cost[(i - 1) * w + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      uint32_t del = cost[(i - 1) * w + j] + 1;
      uint32_t ins = cost[i * w + j - 1] + 1;
      cost[i * w + j] = std::min({diag, del, ins});
    }
  }

  Alignment a;
  a.steps.reserve(n + m);
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const uint32_t here = cost[i * w + j];
    if (i > 0 && j > 0) {
      const uint32_t diag = cost[(i - 1) * w + j - 1];
      if (ref[i - 1] == hyp[j - 1] && diag == here) {
        a.steps.push_back({EditOp::kMatch, i - 1, j - 1});
        --i, --j;
        continue;
      }
      if (diag + 1 == here) {
        a.steps.push_back({EditOp::kSubstitute, i - 1, j - 1});
        --i, --j;
        continue;
      }
    }
    if (i > 0 && cost[(i - 1) * w + j] + 1 == here) {
      a.steps.push_back({EditOp::kDelete, i - 1, std::nullopt});
      --i;
    } else {
      a.steps.push_back({EditOp::kInsert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(a.steps.begin(), a.steps.end());
  return a;
}

/// Levenshtein distance with O(min) memory.
template <class Token>
size_t EditDistance(std::span<const Token> a, std::span<const Token> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t prev_diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t tmp = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, prev_diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev_diag = tmp;
    }
  }
  return row[b.size()];
}

/// S/D/I/N counts with the derived rate. `wer` is (S+D+I)/N, or 0 when N
/// and the error count are both zero.
struct WerBreakdown {
  int64_t substitutions = 0;
  int64_t deletions = 0;
  int64_t insertions = 0;
  int64_t ref_words = 0;
  double wer = 0.0;

  int64_t errors() const { return substitutions + deletions + insertions; }
  int64_t matches() const { return ref_words - substitutions - deletions; }
  bool operator==(const WerBreakdown &) const = default;
};

/// Counts edits without the N > 0 check; used for pooling.
WerBreakdown CountEdits(const Alignment &a);

/// Throws ValidationError("EmptyReference") when n_ref is 0 and the
/// hypothesis is not, and "InvalidArgument" when n_ref disagrees with `a`.
WerBreakdown ComputeWer(const Alignment &a, size_t n_ref);

/// Filler detection counts over an alignment. Only aligned matches count as
/// hits; an uh/um confusion is one miss plus one false alarm.
struct FillerScore {
  int64_t ref_fillers = 0;
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;
  double fir = 1.0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;

  /// Derives the rates: fir = recall = tp/ref_fillers (1 with no reference
  /// fillers); precision = tp/(tp+fp) (1 with no detections); f1 is 1 when
  /// all counts are zero and 0 when precision + recall is 0.
  static FillerScore FromCounts(int64_t tp, int64_t fp, int64_t fn);
  bool operator==(const FillerScore &) const = default;
};

inline const std::set<std::string> &DefaultFillers() {
  static const std::set<std::string> fillers{"uh", "um"};
  return fillers;
}

FillerScore ScoreFillers(const Alignment &a, std::span<const std::string> ref,
                         std::span<const std::string> hyp,
                         const std::set<std::string> &fillers = DefaultFillers());

enum class SimilarityUnit { kToken, kCharacter };

/// 1 - distance / max(len); 1 when both sides are empty. kCharacter compares
/// the space-joined strings byte by byte.
double Similarity(std::span<const std::string> ref, std::span<const std::string> hyp,
                  SimilarityUnit unit = SimilarityUnit::kToken);

struct SegmentScore {
  WerBreakdown wer;
  FillerScore fillers;
  bool operator==(const SegmentScore &) const = default;
};

/// Pools counts across segments (micro average) and recomputes every rate
/// from the pooled counts. Throws ValidationError("EmptyInput") for an empty
/// list and "EmptyReference" when the pooled N is 0 but errors exist.
SegmentScore Aggregate(std::span<const SegmentScore> per_segment);

/// Per-segment (macro) means, reported alongside the pooled figures. WER is
/// averaged over segments with N > 0 only.
struct MacroScores {
  double wer = 0.0;
  double fir = 0.0;
  double f1 = 0.0;
  size_t wer_segments = 0;
  size_t segments = 0;
};
MacroScores MacroAverage(std::span<const SegmentScore> per_segment);

/// Aligns and scores one reference/hypothesis pair of clean tokens.
SegmentScore ScoreSegment(std::span<const std::string> ref,
                          std::span<const std::string> hyp,
                          const std::set<std::string> &fillers = DefaultFillers());

}  // namespace dispeech

#endif  // DISPEECH_EDIT_DISTANCE_H_
