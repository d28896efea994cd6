// dispeech/report.h

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

#ifndef DISPEECH_REPORT_H_
#define DISPEECH_REPORT_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dispeech/edit_distance.h"
#include "dispeech/manifest.h"
#include "dispeech/splitter.h"
#include "dispeech/text_normalizer.h"

namespace dispeech {

struct CorpusTotals {
  size_t n_samples = 0;
  int64_t duration_ms = 0;
  int64_t n_uh = 0;
  int64_t n_um = 0;

  double total_hours() const { return static_cast<double>(duration_ms) / 3.6e6; }
  bool operator==(const CorpusTotals &) const = default;
};

struct CorpusStats {
  CorpusTotals total;
  std::map<std::string, CorpusTotals> per_corpus;
};

CorpusStats ComputeCorpusStats(std::span<const ManifestEntry> entries);

/// key=value lines; hours shown to two decimals.
std::string FormatCorpusStats(const CorpusStats &stats);

struct MetricsRow {
  std::string model_id;
  std::string split_name;
  double wer = 0.0;
  double fir = 0.0;
  double f1 = 0.0;
  int64_t n_segments = 0;
  int64_t n_ref_tokens = 0;
  int64_t n_ref_fillers = 0;
  bool operator==(const MetricsRow &) const = default;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;  // model-major, splits in requested order
  bool operator==(const MetricsReport &) const = default;
};

struct EvalOptions {
  std::vector<std::string> splits{"val", "test"};
  int jobs = 1;
};

/// Scores every hypothesis set on each requested split: hypotheses are
/// normalised, aligned against the manifest reference and pooled per
/// (model, split). Splits with no segments produce no row.
/// Throws MissingHypothesisError (ids as "model:segment") and
/// ValidationError("UnknownSegment").
MetricsReport EvalRun(std::span<const ManifestEntry> entries, const SplitResult &split,
                      std::span<const HypothesisSet> hyp_sets,
                      const NormalizationTable &table, const EvalOptions &options = {});

/// Per-segment scores for one model, in the order of `ids`.
std::vector<SegmentScore> ScoreSegments(std::span<const ManifestEntry> entries,
                                        std::span<const std::string> ids,
                                        const HypothesisSet &hyp,
                                        const NormalizationTable &table, int jobs = 1);

/// Plain-text table: one line per model, WER/FIR/F1 per split, two decimals.
std::string RenderMetricsTable(const MetricsReport &report);

/// RFC 4180 CSV with a header line. Rates use 17 significant digits so
/// ParseMetricsCsv(RenderMetricsCsv(r)) == r.
std::string RenderMetricsCsv(const MetricsReport &report);
MetricsReport ParseMetricsCsv(std::string_view csv);

/// Splits CSV text into records of fields (quoted fields, doubled quotes,
/// embedded newlines). Throws ValidationError("InvalidCsv").
std::vector<std::vector<std::string>> ParseCsv(std::string_view csv);

enum class SpeedStatistic { kTotalTime, kMedianRatio };

/// Pairwise speed factors: factors[{a, b}] is how many times faster a is than
/// b, total_seconds[b] / total_seconds[a] (or the median per-file ratio).
struct BenchReport {
  std::vector<std::string> models;
  std::map<std::string, double> total_seconds;
  std::map<std::pair<std::string, std::string>, double> factors;
};

/// Throws ValidationError("MismatchedFileSets") unless all sets cover the
/// same segment ids, and ("ZeroTiming") when a factor's denominator is 0.
BenchReport SpeedFactors(std::span<const HypothesisSet> hyp_sets,
                         SpeedStatistic statistic = SpeedStatistic::kTotalTime);

/// Totals and each unordered pair "a vs b" in input order, two decimals.
std::string RenderBench(const BenchReport &report);

}  // namespace dispeech

#endif  // DISPEECH_REPORT_H_
