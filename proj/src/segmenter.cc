// segmenter.cc

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

#include "dispeech/segmenter.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "dispeech/errors.h"
#include "dispeech/resampler.h"
#include "dispeech/string_util.h"

namespace dispeech {

namespace {

struct Piece {
  int64_t start_ms;
  int64_t end_ms;
  std::vector<std::string> words;
};

// Halves [start, end) at the middle word until every piece is short enough.
// With word times spread uniformly, the boundary after word floor(n/2) is
// the one nearest the midpoint. Returns false if a long piece has a single
// word left.
bool SplitLong(std::span<const std::string> words, int64_t start, int64_t end,
               std::vector<Piece> *out) {
  if (end - start <= kMaxSegmentMs) {
    out->push_back({start, end, {words.begin(), words.end()}});
    return true;
  }
  const auto n = static_cast<int64_t>(words.size());
  if (n < 2) return false;
  const int64_t k = n / 2;
  const int64_t d = end - start;
  const int64_t cut = start + (2 * k * d + n) / (2 * n);
  return SplitLong(words.first(static_cast<size_t>(k)), start, cut, out) &&
         SplitLong(words.subspan(static_cast<size_t>(k)), cut, end, out);
}

bool OverlapsAny(const IntervalMs &iv, std::span<const IntervalMs> others) {
  return std::any_of(others.begin(), others.end(),
                     [&](const IntervalMs &o) { return iv.Overlaps(o); });
}

std::shared_ptr<const PolyphaseResampler> ResamplerFor(int input_rate) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PolyphaseResampler>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = cache[input_rate];
  if (!slot) slot = std::make_shared<PolyphaseResampler>(input_rate, kTargetSampleRate);
  return slot;
}

int16_t ToPcm16(double v) {
  double r = std::round(v);
  return static_cast<int16_t>(std::clamp(r, -32768.0, 32767.0));
}

}  // namespace

const char *SegmentKindName(SegmentKind kind) {
  return kind == SegmentKind::kSpeech ? "speech" : "nonspeech";
}

SegmentationResult PlanSegments(const ChatDocument &doc, std::string_view speaker,
                                const NormalizationTable &table) {
  const std::vector<size_t> mine = SpeakerUtteranceIndices(doc, speaker);

  std::vector<IntervalMs> own, others;
  for (size_t i = 0; i < doc.utterances.size(); ++i) {
    const auto &u = doc.utterances[i];
    if (!u.interval_ms) continue;
    (u.speaker_code == speaker ? own : others).push_back(*u.interval_ms);
  }
  if (own.empty())
    throw ValidationError("NoTimedUtterances",
                          "speaker '" + std::string(speaker) + "' has no timed utterances" +
                              (doc.media_id.empty() ? "" : " in '" + doc.media_id + "'"));

  SegmentationResult result;
  for (size_t idx : mine) {
    const Utterance &u = doc.utterances[idx];
    auto skip = [&](const char *reason) {
      result.skipped.push_back({idx, reason, u.interval_ms});
    };
    if (!u.interval_ms) { skip("untimed"); continue; }
    const IntervalMs iv = *u.interval_ms;
    if (iv.duration() < kMinSegmentMs) { skip("too_short"); continue; }
    if (OverlapsAny(iv, others)) { skip("overlaps_other_speaker"); continue; }
    CleanTranscript clean = NormalizeReference(u.raw_tokens, table);
    if (clean.tokens.empty()) { skip("no_words"); continue; }

    std::vector<Piece> pieces;
    if (!SplitLong(clean.tokens, iv.start_ms, iv.end_ms, &pieces)) { skip("unsplittable"); continue; }
    for (Piece &p : pieces) {
      SegmentPlan plan;
      plan.media_id = doc.media_id;
      plan.start_ms = p.start_ms;
      plan.end_ms = p.end_ms;
      plan.kind = SegmentKind::kSpeech;
      plan.utterance_indices = {idx};
      plan.reference = CleanTranscript::FromTokens(std::move(p.words));
      result.plans.push_back(std::move(plan));
    }
  }

  std::sort(own.begin(), own.end(), [](const IntervalMs &a, const IntervalMs &b) {
    return a.start_ms < b.start_ms || (a.start_ms == b.start_ms && a.end_ms < b.end_ms);
  });
  int64_t covered_until = own.front().end_ms;
  for (size_t i = 1; i < own.size(); ++i) {
    const IntervalMs gap{covered_until, own[i].start_ms};
    if (gap.duration() >= kMinSegmentMs && !OverlapsAny(gap, others)) {
      SegmentPlan plan;
      plan.media_id = doc.media_id;
      plan.start_ms = gap.start_ms;
      plan.end_ms = std::min(gap.end_ms, gap.start_ms + kMaxSegmentMs);
      plan.kind = SegmentKind::kNonSpeech;
      result.plans.push_back(std::move(plan));
    }
    covered_until = std::max(covered_until, own[i].end_ms);
  }

  std::stable_sort(result.plans.begin(), result.plans.end(),
                   [](const SegmentPlan &a, const SegmentPlan &b) {
                     return a.start_ms < b.start_ms ||
                            (a.start_ms == b.start_ms && a.end_ms < b.end_ms);
                   });
  for (size_t i = 0; i < result.plans.size(); ++i) {
    char seq[16];
    std::snprintf(seq, sizeof(seq), "%04zu", i);
    result.plans[i].segment_id =
        (doc.media_id.empty() ? std::string("doc") : doc.media_id) + "_" +
        std::string(speaker) + "_" + seq;
  }
  return result;
}

std::vector<SegmentPlan> SelectNonSpeech(std::vector<SegmentPlan> plans, double ratio) {
  if (!(ratio >= 0.0))
    throw ValidationError("InvalidArgument", "non-speech ratio must be >= 0");
  const auto n_speech = std::count_if(plans.begin(), plans.end(), [](const SegmentPlan &p) {
    return p.kind == SegmentKind::kSpeech;
  });
  const auto keep = static_cast<size_t>(std::floor(ratio * static_cast<double>(n_speech) + 1e-9));

  std::vector<size_t> silent;
  for (size_t i = 0; i < plans.size(); ++i)
    if (plans[i].kind == SegmentKind::kNonSpeech) silent.push_back(i);
  std::stable_sort(silent.begin(), silent.end(), [&](size_t a, size_t b) {
    return plans[a].duration_ms() > plans[b].duration_ms();
  });
  std::vector<bool> drop(plans.size(), false);
  for (size_t r = keep; r < silent.size(); ++r) drop[silent[r]] = true;

  std::vector<SegmentPlan> out;
  for (size_t i = 0; i < plans.size(); ++i)
    if (!drop[i]) out.push_back(std::move(plans[i]));
  return out;
}

Waveform SliceAudio(const Waveform &source, int64_t start_ms, int64_t end_ms) {
  const auto frames = static_cast<int64_t>(source.frames());
  if (start_ms < 0 || end_ms <= start_ms ||
      end_ms * source.sample_rate > frames * 1000)
    throw ValidationError("IntervalOutOfRange",
                          "interval [" + std::to_string(start_ms) + ", " +
                              std::to_string(end_ms) + ") ms exceeds audio of " +
                              std::to_string(frames) + " frames at " +
                              std::to_string(source.sample_rate) + " Hz");
  const int ch = source.channels;
  auto frame_sum = [&](int64_t f) {
    double s = 0.0;
    for (int c = 0; c < ch; ++c) s += source.samples[static_cast<size_t>(f * ch + c)];
    return s;
  };

  Waveform out;
  out.sample_rate = kTargetSampleRate;
  out.channels = 1;
  const int64_t first = start_ms * kTargetSampleRate / 1000;
  const int64_t count = (end_ms - start_ms) * kTargetSampleRate / 1000;
  out.samples.reserve(static_cast<size_t>(count));

  if (source.sample_rate == kTargetSampleRate) {
    for (int64_t f = first; f < first + count; ++f)
      out.samples.push_back(ch == 1 ? source.samples[static_cast<size_t>(f)]
                                    : ToPcm16(frame_sum(f) / ch));
    return out;
  }

  auto resampler = ResamplerFor(source.sample_rate);
  auto [lo, hi] = resampler->InputSupport(first, count);
  lo = std::max<int64_t>(lo, 0);
  hi = std::min<int64_t>(hi, frames);
  std::vector<double> mono(static_cast<size_t>(std::max<int64_t>(hi - lo, 0)));
  for (int64_t f = lo; f < hi; ++f) mono[static_cast<size_t>(f - lo)] = frame_sum(f) / ch;
  for (double v : resampler->Process(mono, lo, first, count)) out.samples.push_back(ToPcm16(v));
  return out;
}

std::vector<FlaggedSegment> VerifySegments(std::span<const ManifestEntry> entries,
                                           const HypothesisSet &hypotheses,
                                           const NormalizationTable &table,
                                           double threshold, SimilarityUnit unit) {
  std::vector<std::string> missing;
  for (const auto &e : entries)
    if (!hypotheses.records.count(e.segment_id)) missing.push_back(e.segment_id);
  if (!missing.empty()) throw MissingHypothesisError(std::move(missing));

  std::vector<FlaggedSegment> flagged;
  for (const auto &e : entries) {
    const std::vector<std::string> ref = SplitWhitespace(e.reference_text);
    const CleanTranscript hyp =
        NormalizeHypothesis(hypotheses.records.at(e.segment_id).text, table);
    const double sim = Similarity(ref, hyp.tokens, unit);
    if (sim < threshold) flagged.push_back({e.segment_id, sim});
  }
  std::stable_sort(flagged.begin(), flagged.end(), [](const FlaggedSegment &a, const FlaggedSegment &b) {
    return a.similarity < b.similarity ||
           (a.similarity == b.similarity && a.segment_id < b.segment_id);
  });
  return flagged;
}

std::string SegmentPlanLine(const SegmentPlan &plan) {
  nlohmann::ordered_json j;
  j["segment_id"] = plan.segment_id;
  j["media_id"] = plan.media_id;
  j["start_ms"] = plan.start_ms;
  j["end_ms"] = plan.end_ms;
  j["kind"] = SegmentKindName(plan.kind);
  j["utterance_indices"] = plan.utterance_indices;
  j["reference"] = plan.reference.text;
  j["n_uh"] = plan.reference.filler_count_uh;
  j["n_um"] = plan.reference.filler_count_um;
  return j.dump();
}

}  // namespace dispeech
