// report.cc

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

#include "dispeech/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

#include "dispeech/errors.h"
#include "dispeech/parallel.h"
#include "dispeech/string_util.h"

namespace dispeech {

namespace {

std::string Fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string SplitTitle(const std::string &name) {
  if (name == "val") return "VALIDATION SET";
  if (name == "test") return "TEST SET";
  if (name == "train") return "TRAINING SET";
  return ToLowerAscii(name) + " set";
}

const std::vector<std::string> *SplitIds(const SplitResult &split, const std::string &name) {
  if (name == "train") return &split.train;
  if (name == "val") return &split.val;
  if (name == "test") return &split.test;
  return nullptr;
}

template <class T>
T ParseNumber(const std::string &s, const char *what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ValidationError("InvalidCsv", std::string("bad ") + what + " '" + s + "'");
  return v;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

CorpusStats ComputeCorpusStats(std::span<const ManifestEntry> entries) {
  CorpusStats stats;
  for (const auto &e : entries) {
    for (CorpusTotals *t : {&stats.total, &stats.per_corpus[e.corpus_tag]}) {
      ++t->n_samples;
      t->duration_ms += e.duration_ms;
      t->n_uh += e.n_uh;
      t->n_um += e.n_um;
    }
  }
  return stats;
}

std::string FormatCorpusStats(const CorpusStats &stats) {
  auto line = [](const CorpusTotals &t) {
    return "n_samples=" + std::to_string(t.n_samples) + " total_hours=" + Fixed2(t.total_hours()) +
           " n_uh=" + std::to_string(t.n_uh) + " n_um=" + std::to_string(t.n_um);
  };
  std::string out;
  out += "n_samples=" + std::to_string(stats.total.n_samples) + "\n";
  out += "total_hours=" + Fixed2(stats.total.total_hours()) + "\n";
  out += "n_uh=" + std::to_string(stats.total.n_uh) + "\n";
  out += "n_um=" + std::to_string(stats.total.n_um) + "\n";
  for (const auto &[tag, t] : stats.per_corpus) out += "corpus " + tag + ": " + line(t) + "\n";
  return out;
}

std::vector<SegmentScore> ScoreSegments(std::span<const ManifestEntry> entries,
                                        std::span<const std::string> ids,
                                        const HypothesisSet &hyp,
                                        const NormalizationTable &table, int jobs) {
  std::map<std::string, const ManifestEntry *> by_id;
  for (const auto &e : entries) by_id[e.segment_id] = &e;
  std::vector<std::string> missing;
  for (const auto &id : ids) {
    if (!by_id.count(id))
      throw ValidationError("UnknownSegment", "segment '" + id + "' is not in the manifest");
    if (!hyp.records.count(id)) missing.push_back(hyp.model_id + ":" + id);
  }
  if (!missing.empty()) throw MissingHypothesisError(std::move(missing));

  std::vector<SegmentScore> scores(ids.size());
  ParallelFor(ids.size(), jobs, [&](size_t i) {
    const std::vector<std::string> ref = SplitWhitespace(by_id.at(ids[i])->reference_text);
    const CleanTranscript h = NormalizeHypothesis(hyp.records.at(ids[i]).text, table);
    scores[i] = ScoreSegment(ref, h.tokens);
  });
  return scores;
}

MetricsReport EvalRun(std::span<const ManifestEntry> entries, const SplitResult &split,
                      std::span<const HypothesisSet> hyp_sets,
                      const NormalizationTable &table, const EvalOptions &options) {
  for (const auto &name : options.splits)
    if (!SplitIds(split, name))
      throw ValidationError("InvalidArgument", "unknown split '" + name + "'");

  std::set<std::string> known;
  for (const auto &e : entries) known.insert(e.segment_id);
  for (const auto &name : options.splits)
    for (const auto &id : *SplitIds(split, name))
      if (!known.count(id))
        throw ValidationError("UnknownSegment", "segment '" + id + "' is not in the manifest");

  // Missing hypotheses across all models.
  std::vector<std::string> missing;
  for (const HypothesisSet &hyp : hyp_sets)
    for (const auto &name : options.splits)
      for (const auto &id : *SplitIds(split, name))
        if (!hyp.records.count(id)) missing.push_back(hyp.model_id + ":" + id);
  if (!missing.empty()) throw MissingHypothesisError(std::move(missing));

  MetricsReport report;
  for (const HypothesisSet &hyp : hyp_sets) {
    for (const auto &name : options.splits) {
      const std::vector<std::string> &ids = *SplitIds(split, name);
      if (ids.empty()) continue;
      std::vector<SegmentScore> scores = ScoreSegments(entries, ids, hyp, table, options.jobs);
      SegmentScore pooled = Aggregate(scores);
      MetricsRow row;
      row.model_id = hyp.model_id;
      row.split_name = name;
      row.wer = pooled.wer.wer;
      row.fir = pooled.fillers.fir;
      row.f1 = pooled.fillers.f1;
      row.n_segments = static_cast<int64_t>(ids.size());
      row.n_ref_tokens = pooled.wer.ref_words;
      row.n_ref_fillers = pooled.fillers.ref_fillers;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string RenderMetricsTable(const MetricsReport &report) {
  std::vector<std::string> models, splits;
  std::map<std::pair<std::string, std::string>, const MetricsRow *> cell;
  for (const auto &r : report.rows) {
    if (std::find(models.begin(), models.end(), r.model_id) == models.end()) models.push_back(r.model_id);
    if (std::find(splits.begin(), splits.end(), r.split_name) == splits.end()) splits.push_back(r.split_name);
    cell[{r.model_id, r.split_name}] = &r;
  }
  size_t model_w = 5;
  for (const auto &m : models) model_w = std::max(model_w, m.size());
  model_w += 2;
  constexpr size_t kCol = 7;
  constexpr size_t kGroup = 3 * kCol + 2;

  auto pad = [](std::string s, size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  std::string l1 = pad("MODEL", model_w), l2 = pad("", model_w);
  for (const auto &s : splits) {
    l1 += pad(SplitTitle(s), kGroup);
    l2 += pad(pad("WER", kCol) + pad("FIR", kCol) + pad("F1", kCol), kGroup);
  }
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::string out = rstrip(l1) + "\n" + rstrip(l2) + "\n";
  for (const auto &m : models) {
    std::string line = pad(m, model_w);
    for (const auto &s : splits) {
      auto it = cell.find({m, s});
      std::string group;
      if (it == cell.end()) {
        group = pad("-", kCol) + pad("-", kCol) + pad("-", kCol);
      } else {
        group = pad(Fixed2(it->second->wer), kCol) + pad(Fixed2(it->second->fir), kCol) +
                pad(Fixed2(it->second->f1), kCol);
      }
      line += pad(group, kGroup);
    }
    out += rstrip(line) + "\n";
  }
  return out;
}

std::string RenderMetricsCsv(const MetricsReport &report) {
  std::string out = "model_id,split_name,wer,fir,f1,n_segments,n_ref_tokens,n_ref_fillers\r\n";
  for (const auto &r : report.rows) {
    out += CsvField(r.model_id) + "," + CsvField(r.split_name) + "," + Exact(r.wer) + "," +
           Exact(r.fir) + "," + Exact(r.f1) + "," + std::to_string(r.n_segments) + "," +
           std::to_string(r.n_ref_tokens) + "," + std::to_string(r.n_ref_fillers) + "\r\n";
  }
  return out;
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view csv) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  size_t i = 0;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };
  while (i < csv.size()) {
    char c = csv[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < csv.size() && csv[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (field_started) throw ValidationError("InvalidCsv", "quote inside an unquoted field");
      quoted = field_started = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (c == '\r' && i + 1 < csv.size() && csv[i + 1] == '\n') {
      end_record();
      ++i;
    } else if (c == '\n') {
      end_record();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (quoted) throw ValidationError("InvalidCsv", "unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

MetricsReport ParseMetricsCsv(std::string_view csv) {
  auto records = ParseCsv(csv);
  if (records.empty() || records[0].size() != 8 || records[0][0] != "model_id")
    throw ValidationError("InvalidCsv", "missing metrics header");
  MetricsReport report;
  for (size_t i = 1; i < records.size(); ++i) {
    const auto &f = records[i];
    if (f.size() != 8)
      throw ValidationError("InvalidCsv", "record " + std::to_string(i) + " has " +
                                              std::to_string(f.size()) + " fields");
    MetricsRow r;
    r.model_id = f[0];
    r.split_name = f[1];
    r.wer = ParseNumber<double>(f[2], "wer");
    r.fir = ParseNumber<double>(f[3], "fir");
    r.f1 = ParseNumber<double>(f[4], "f1");
    r.n_segments = ParseNumber<int64_t>(f[5], "n_segments");
    r.n_ref_tokens = ParseNumber<int64_t>(f[6], "n_ref_tokens");
    r.n_ref_fillers = ParseNumber<int64_t>(f[7], "n_ref_fillers");
    report.rows.push_back(std::move(r));
  }
  return report;
}

BenchReport SpeedFactors(std::span<const HypothesisSet> hyp_sets, SpeedStatistic statistic) {
  if (hyp_sets.empty()) throw ValidationError("InvalidArgument", "no hypothesis sets to compare");
  std::set<std::string> ids;
  for (const auto &[id, r] : hyp_sets[0].records) ids.insert(id);
  for (const auto &h : hyp_sets) {
    std::set<std::string> other;
    for (const auto &[id, r] : h.records) other.insert(id);
    if (other != ids)
      throw ValidationError("MismatchedFileSets", "model '" + h.model_id + "' covers a different file set than '" +
                                                      hyp_sets[0].model_id + "'");
  }

  BenchReport report;
  for (const auto &h : hyp_sets) {
    if (report.total_seconds.count(h.model_id))
      throw ValidationError("InvalidArgument", "duplicate model id '" + h.model_id + "'");
    report.models.push_back(h.model_id);
    double total = 0.0;
    for (const auto &[id, r] : h.records) total += r.processing_seconds;
    report.total_seconds[h.model_id] = total;
  }
  for (const auto &a : hyp_sets) {
    for (const auto &b : hyp_sets) {
      double factor;
      if (a.model_id == b.model_id) {
        factor = 1.0;
      } else if (statistic == SpeedStatistic::kTotalTime) {
        double ta = report.total_seconds[a.model_id];
        if (ta <= 0.0) throw ValidationError("ZeroTiming", "model '" + a.model_id + "' has zero total time");
        factor = report.total_seconds[b.model_id] / ta;
      } else {
        std::vector<double> ratios;
        for (const auto &[id, ra] : a.records)
          if (ra.processing_seconds > 0.0)
            ratios.push_back(b.records.at(id).processing_seconds / ra.processing_seconds);
        if (ratios.empty())
          throw ValidationError("ZeroTiming", "model '" + a.model_id + "' has no positive per-file time");
        factor = Median(std::move(ratios));
      }
      report.factors[{a.model_id, b.model_id}] = factor;
    }
  }
  return report;
}

std::string RenderBench(const BenchReport &report) {
  std::string out = "model total_seconds\n";
  for (const auto &m : report.models) out += m + " " + Fixed2(report.total_seconds.at(m)) + "\n";
  out += "pair factor\n";
  for (size_t i = 0; i < report.models.size(); ++i)
    for (size_t j = i + 1; j < report.models.size(); ++j) {
      const auto &a = report.models[i], &b = report.models[j];
      out += a + " vs " + b + " " + Fixed2(report.factors.at({a, b})) + "\n";
    }
  return out;
}

}  // namespace dispeech
