// edit_distance.cc

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

#include "dispeech/edit_distance.h"

#include "dispeech/errors.h"
#include "dispeech/string_util.h"

namespace dispeech {

namespace {

double Ratio(int64_t num, int64_t den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

WerBreakdown WithRate(WerBreakdown w) {
  if (w.ref_words > 0) {
    w.wer = Ratio(w.errors(), w.ref_words);
  } else if (w.errors() > 0) {
    throw ValidationError("EmptyReference",
                          "WER is undefined: empty reference with " +
                              std::to_string(w.errors()) + " inserted word(s)");
  } else {
    w.wer = 0.0;
  }
  return w;
}

}  // namespace

WerBreakdown CountEdits(const Alignment &a) {
  WerBreakdown w;
  for (const AlignStep &s : a.steps) {
    switch (s.op) {
      case EditOp::kMatch: ++w.ref_words; break;
      case EditOp::kSubstitute: ++w.substitutions, ++w.ref_words; break;
      case EditOp::kDelete: ++w.deletions, ++w.ref_words; break;
      case EditOp::kInsert: ++w.insertions; break;
    }
  }
  w.wer = w.ref_words > 0 ? Ratio(w.errors(), w.ref_words) : 0.0;
  return w;
}

WerBreakdown ComputeWer(const Alignment &a, size_t n_ref) {
  WerBreakdown w = CountEdits(a);
  if (static_cast<size_t>(w.ref_words) != n_ref)
    throw ValidationError("InvalidArgument",
                          "alignment covers " + std::to_string(w.ref_words) +
                              " reference words but n_ref is " + std::to_string(n_ref));
  return WithRate(w);
}

FillerScore FillerScore::FromCounts(int64_t tp, int64_t fp, int64_t fn) {
  FillerScore s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.ref_fillers = tp + fn;
  s.fir = s.ref_fillers > 0 ? Ratio(tp, s.ref_fillers) : 1.0;
  s.recall = s.fir;
  s.precision = tp + fp > 0 ? Ratio(tp, tp + fp) : 1.0;
  if (tp == 0 && fp == 0 && fn == 0) {
    s.f1 = 1.0;
  } else if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  } else {
    s.f1 = 0.0;
  }
  return s;
}

FillerScore ScoreFillers(const Alignment &a, std::span<const std::string> ref,
                         std::span<const std::string> hyp,
                         const std::set<std::string> &fillers) {
  int64_t tp = 0, fp = 0, fn = 0;
  auto is_filler = [&](const std::string &t) { return fillers.count(t) > 0; };
  for (const AlignStep &s : a.steps) {
    switch (s.op) {
      case EditOp::kMatch:
        if (is_filler(ref[*s.ref_index])) ++tp;
        break;
      case EditOp::kSubstitute:
        if (is_filler(ref[*s.ref_index])) ++fn;
        if (is_filler(hyp[*s.hyp_index])) ++fp;
        break;
      case EditOp::kDelete:
        if (is_filler(ref[*s.ref_index])) ++fn;
        break;
      case EditOp::kInsert:
        if (is_filler(hyp[*s.hyp_index])) ++fp;
        break;
    }
  }
  return FillerScore::FromCounts(tp, fp, fn);
}

double Similarity(std::span<const std::string> ref, std::span<const std::string> hyp,
                  SimilarityUnit unit) {
  if (unit == SimilarityUnit::kCharacter) {
    std::string r = Join(ref, " "), h = Join(hyp, " ");
    if (r.empty() && h.empty()) return 1.0;
    size_t d = EditDistance<char>(r, h);
    const auto len = static_cast<int64_t>(std::max(r.size(), h.size()));
    return Ratio(len - static_cast<int64_t>(d), len);
  }
  if (ref.empty() && hyp.empty()) return 1.0;
  // (len - d) / len rather than 1 - d / len, so that e.g. 7/10 compares
  // equal to a 0.70 threshold.
  const auto len = static_cast<int64_t>(std::max(ref.size(), hyp.size()));
  return Ratio(len - static_cast<int64_t>(EditDistance<std::string>(ref, hyp)), len);
}

SegmentScore Aggregate(std::span<const SegmentScore> per_segment) {
  if (per_segment.empty())
    throw ValidationError("EmptyInput", "cannot aggregate an empty list of segments");
  WerBreakdown w;
  int64_t tp = 0, fp = 0, fn = 0;
  for (const SegmentScore &s : per_segment) {
    w.substitutions += s.wer.substitutions;
    w.deletions += s.wer.deletions;
    w.insertions += s.wer.insertions;
    w.ref_words += s.wer.ref_words;
    tp += s.fillers.tp;
    fp += s.fillers.fp;
    fn += s.fillers.fn;
  }
  return {WithRate(w), FillerScore::FromCounts(tp, fp, fn)};
}

MacroScores MacroAverage(std::span<const SegmentScore> per_segment) {
  MacroScores m;
  for (const SegmentScore &s : per_segment) {
    if (s.wer.ref_words > 0) {
      m.wer += s.wer.wer;
      ++m.wer_segments;
    }
    m.fir += s.fillers.fir;
    m.f1 += s.fillers.f1;
    ++m.segments;
  }
  if (m.wer_segments) m.wer /= static_cast<double>(m.wer_segments);
  if (m.segments) {
    m.fir /= static_cast<double>(m.segments);
    m.f1 /= static_cast<double>(m.segments);
  }
  return m;
}

SegmentScore ScoreSegment(std::span<const std::string> ref,
                          std::span<const std::string> hyp,
                          const std::set<std::string> &fillers) {
  Alignment a = Align<std::string>(ref, hyp);
  return {CountEdits(a), ScoreFillers(a, ref, hyp, fillers)};
}

}  // namespace dispeech
