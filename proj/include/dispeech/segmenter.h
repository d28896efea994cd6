// dispeech/segmenter.h

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

#ifndef DISPEECH_SEGMENTER_H_
#define DISPEECH_SEGMENTER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dispeech/chat_document.h"
#include "dispeech/edit_distance.h"
#include "dispeech/manifest.h"
#include "dispeech/text_normalizer.h"
#include "dispeech/wave_io.h"

namespace dispeech {

inline constexpr int64_t kMinSegmentMs = 1000;
inline constexpr int64_t kMaxSegmentMs = 30000;
inline constexpr int kTargetSampleRate = 16000;
inline constexpr double kDefaultSimilarityThreshold = 0.70;

enum class SegmentKind { kSpeech, kNonSpeech };

const char *SegmentKindName(SegmentKind kind);

/// An audio slice to cut from one recording. Durations are within
/// [kMinSegmentMs, kMaxSegmentMs]; non-speech plans carry no utterances and
/// an empty reference.
struct SegmentPlan {
  std::string segment_id;
  std::string media_id;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
  SegmentKind kind = SegmentKind::kSpeech;
  std::vector<size_t> utterance_indices;
  CleanTranscript reference;

  int64_t duration_ms() const { return end_ms - start_ms; }
  bool operator==(const SegmentPlan &) const = default;
};

struct SkippedUtterance {
  size_t utterance_index = 0;
  // "untimed", "too_short", "overlaps_other_speaker", "no_words",
  // "unsplittable"
  std::string reason;
  std::optional<IntervalMs> interval;
  bool operator==(const SkippedUtterance &) const = default;
};

struct SegmentationResult {
  std::vector<SegmentPlan> plans;  // ordered by start time
  std::vector<SkippedUtterance> skipped;
};

/// Plans one speech segment per timed utterance of `speaker` and one
/// non-speech segment per qualifying silence.
///
/// Utterances under 1 s or overlapping another speaker's interval are
/// skipped. Utterances over 30 s are split at the word boundary closest to
/// their temporal midpoint, word times being spread uniformly across the
/// interval, recursively. A gap of at least 1 s between the speaker's
/// utterances that no other speaker's interval touches becomes a non-speech
/// plan, truncated to 30 s.
///
/// Throws ValidationError("UnknownSpeaker") or ("NoTimedUtterances").
SegmentationResult PlanSegments(const ChatDocument &doc, std::string_view speaker,
                                const NormalizationTable &table);

/// Keeps every speech plan and the floor(ratio * speech count) longest
/// non-speech plans (ties: earlier first). Output stays in time order.
std::vector<SegmentPlan> SelectNonSpeech(std::vector<SegmentPlan> plans, double ratio);

/// Cuts [start_ms, end_ms) out of `source` as 16 kHz mono PCM16. Channels are
/// averaged; non-16 kHz input goes through the polyphase resampler, 16 kHz
/// input is copied sample for sample.
/// Throws ValidationError("IntervalOutOfRange").
Waveform SliceAudio(const Waveform &source, int64_t start_ms, int64_t end_ms);
inline Waveform SliceAudio(const Waveform &source, const SegmentPlan &plan) {
  return SliceAudio(source, plan.start_ms, plan.end_ms);
}

struct FlaggedSegment {
  std::string segment_id;
  double similarity = 0.0;
  bool operator==(const FlaggedSegment &) const = default;
};

/// Segments whose reference/hypothesis similarity is strictly below
/// `threshold`, most dissimilar first. Throws MissingHypothesisError.
std::vector<FlaggedSegment> VerifySegments(std::span<const ManifestEntry> entries,
                                           const HypothesisSet &hypotheses,
                                           const NormalizationTable &table,
                                           double threshold = kDefaultSimilarityThreshold,
                                           SimilarityUnit unit = SimilarityUnit::kToken);

/// JSON Lines form of a plan, used by the `segment` subcommand.
std::string SegmentPlanLine(const SegmentPlan &plan);

}  // namespace dispeech

#endif  // DISPEECH_SEGMENTER_H_
