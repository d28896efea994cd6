// splitter.cc

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

#include "dispeech/splitter.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "dispeech/errors.h"
#include "dispeech/string_util.h"

namespace dispeech {

uint64_t SplitRng::Below(uint64_t n) {
  if (n == 0) throw ValidationError("InvalidArgument", "SplitRng::Below(0)");
  // Largest multiple of n representable, to reject the biased tail.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

void SplitSpec::Validate() const {
  for (double r : {train_ratio, val_ratio, test_ratio}) {
    if (!(r > 0.0 && r < 1.0))
      throw ValidationError("InvalidSplitSpec", "split ratios must each lie in (0, 1)");
  }
  if (std::abs(train_ratio + val_ratio + test_ratio - 1.0) > 1e-9)
    throw ValidationError("InvalidSplitSpec", "split ratios must sum to 1");
  if (!(test_speaker_fraction >= 0.0 && test_speaker_fraction <= 1.0))
    throw ValidationError("InvalidSplitSpec", "test_speaker_fraction must lie in [0, 1]");
  if (test_corpus_tag.empty())
    throw ValidationError("InvalidSplitSpec", "test_corpus_tag is empty");
}

SplitResult SplitCorpus(std::span<const ManifestEntry> entries, const SplitSpec &spec) {
  spec.Validate();
  if (entries.empty()) throw ValidationError("EmptyCorpus", "manifest has no entries");

  std::map<std::string, std::vector<size_t>> by_speaker;
  std::map<std::string, std::set<std::string>> tags_of;
  std::set<std::string> ids;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!ids.insert(entries[i].segment_id).second)
      throw ValidationError("DuplicateSegmentId", "duplicate segment_id '" + entries[i].segment_id + "'");
    by_speaker[entries[i].speaker_id].push_back(i);
    tags_of[entries[i].speaker_id].insert(entries[i].corpus_tag);
  }
  std::vector<std::string> candidates;  // sorted by construction
  for (const auto &[spk, tags] : tags_of)
    if (tags.size() == 1 && *tags.begin() == spec.test_corpus_tag) candidates.push_back(spk);
  if (by_speaker.size() < 2 || candidates.size() < 2)
    throw ValidationError("InsufficientSpeakers",
                          "need at least 2 speakers in corpus '" + spec.test_corpus_tag +
                              "' and overall; found " + std::to_string(candidates.size()) +
                              " and " + std::to_string(by_speaker.size()));

  SplitRng rng(spec.seed);
  rng.Shuffle(candidates);

  SplitResult result;
  std::set<size_t> in_test;
  const double target = spec.test_ratio * static_cast<double>(entries.size());
  const size_t speaker_quota =
      spec.test_speaker_fraction > 0.0
          ? std::max<size_t>(1, static_cast<size_t>(std::ceil(
                                    spec.test_speaker_fraction * static_cast<double>(candidates.size()) - 1e-9)))
          : 0;
  for (const std::string &spk : candidates) {
    if (speaker_quota ? result.test_speakers.size() >= speaker_quota
                      : static_cast<double>(in_test.size()) >= target)
      break;
    result.test_speakers.insert(spk);
    for (size_t i : by_speaker[spk]) in_test.insert(i);
  }
  if (in_test.size() == entries.size())
    throw ValidationError("InsufficientSpeakers",
                          "the test set would take every segment; no speakers left for training");

  std::vector<std::string> rest;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (in_test.count(i)) {
      result.test.push_back(entries[i].segment_id);
    } else {
      rest.push_back(entries[i].segment_id);
    }
  }
  std::sort(rest.begin(), rest.end());
  rng.Shuffle(rest);
  const double train_share = spec.train_ratio / (spec.train_ratio + spec.val_ratio);
  const auto n_train = static_cast<size_t>(std::llround(train_share * static_cast<double>(rest.size())));
  result.train.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(n_train));
  result.val.assign(rest.begin() + static_cast<std::ptrdiff_t>(n_train), rest.end());

  std::sort(result.train.begin(), result.train.end());
  std::sort(result.val.begin(), result.val.end());
  std::sort(result.test.begin(), result.test.end());
  return result;
}

std::string SplitResultToJson(const SplitResult &r) {
  nlohmann::ordered_json j;
  j["train"] = r.train;
  j["val"] = r.val;
  j["test"] = r.test;
  j["test_speakers"] = std::vector<std::string>(r.test_speakers.begin(), r.test_speakers.end());
  return j.dump(2) + "\n";
}

SplitResult SplitResultFromJson(std::string_view json_text) {
  try {
    nlohmann::json j = nlohmann::json::parse(json_text);
    SplitResult r;
    r.train = j.at("train").get<std::vector<std::string>>();
    r.val = j.at("val").get<std::vector<std::string>>();
    r.test = j.at("test").get<std::vector<std::string>>();
    auto spk = j.at("test_speakers").get<std::vector<std::string>>();
    r.test_speakers.insert(spk.begin(), spk.end());
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError("InvalidSplitFile", e.what());
  }
}

bool SplitAudit::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck &c) { return c.passed; });
}

SplitAudit AuditSplit(std::span<const ManifestEntry> entries, const SplitResult &result,
                      std::string_view test_corpus_tag) {
  std::map<std::string, const ManifestEntry *> by_id;
  for (const auto &e : entries) by_id[e.segment_id] = &e;

  SplitAudit audit;
  std::map<std::string, int> seen;
  std::vector<std::string> unknown;
  std::set<std::string> speakers[3];
  const std::vector<std::string> *lists[3] = {&result.train, &result.val, &result.test};
  SplitStats *stats[3] = {&audit.train, &audit.val, &audit.test};
  for (int k = 0; k < 3; ++k) {
    for (const auto &id : *lists[k]) {
      ++seen[id];
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        unknown.push_back(id);
        continue;
      }
      const ManifestEntry &e = *it->second;
      ++stats[k]->segments;
      stats[k]->duration_ms += e.duration_ms;
      stats[k]->n_uh += e.n_uh;
      stats[k]->n_um += e.n_um;
      speakers[k].insert(e.speaker_id);
    }
    stats[k]->speakers = speakers[k].size();
  }

  auto sample = [](const std::vector<std::string> &v) {
    std::vector<std::string> head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min<size_t>(v.size(), 5)));
    return Join(head, ", ") + (v.size() > 5 ? ", ..." : "");
  };

  std::vector<std::string> dup, absent;
  for (const auto &[id, n] : seen)
    if (n > 1) dup.push_back(id);
  for (const auto &e : entries)
    if (!seen.count(e.segment_id)) absent.push_back(e.segment_id);
  AuditCheck partition{"partition", dup.empty() && absent.empty() && unknown.empty(), ""};
  if (!dup.empty()) partition.detail += "in several splits: " + sample(dup) + "; ";
  if (!absent.empty()) partition.detail += "unassigned: " + sample(absent) + "; ";
  if (!unknown.empty()) partition.detail += "not in manifest: " + sample(unknown) + "; ";
  audit.checks.push_back(partition);

  std::vector<std::string> leaked;
  for (const auto &s : speakers[2])
    if (speakers[0].count(s) || speakers[1].count(s)) leaked.push_back(s);
  audit.checks.push_back({"speaker_disjoint", leaked.empty(),
                          leaked.empty() ? "" : "test speakers also in train/val: " + sample(leaked)});

  std::vector<std::string> off_corpus;
  for (const auto &id : result.test)
    if (auto it = by_id.find(id); it != by_id.end() && it->second->corpus_tag != test_corpus_tag)
      off_corpus.push_back(id);
  audit.checks.push_back({"test_corpus_tag", off_corpus.empty(),
                          off_corpus.empty() ? "" : "test segments outside '" + std::string(test_corpus_tag) + "': " + sample(off_corpus)});

  audit.checks.push_back({"test_speakers", speakers[2] == result.test_speakers,
                          speakers[2] == result.test_speakers ? "" : "test_speakers does not match the speakers of the test segments"});

  const char *names[3] = {"train", "val", "test"};
  for (int k = 0; k < 3; ++k)
    if (lists[k]->empty()) audit.warnings.push_back(std::string(names[k]) + " split is empty; realised ratios will be off");
  return audit;
}

std::string FormatAudit(const SplitAudit &a) {
  std::string out;
  char line[256];
  const SplitStats *stats[3] = {&a.train, &a.val, &a.test};
  const char *names[3] = {"train", "val", "test"};
  size_t total = 0;
  int64_t total_ms = 0;
  for (const SplitStats *s : stats) total += s->segments, total_ms += s->duration_ms;
  std::snprintf(line, sizeof(line), "%-6s %9s %8s %9s %7s %8s %8s %8s\n", "split", "segments",
                "hours", "speakers", "uh", "um", "count%", "dur%");
  out += line;
  for (int k = 0; k < 3; ++k) {
    const SplitStats &s = *stats[k];
    std::snprintf(line, sizeof(line), "%-6s %9zu %8.2f %9zu %7lld %8lld %8.2f %8.2f\n", names[k],
                  s.segments, s.hours(), s.speakers, static_cast<long long>(s.n_uh),
                  static_cast<long long>(s.n_um),
                  total ? 100.0 * static_cast<double>(s.segments) / static_cast<double>(total) : 0.0,
                  total_ms ? 100.0 * static_cast<double>(s.duration_ms) / static_cast<double>(total_ms) : 0.0);
    out += line;
  }
  for (const auto &c : a.checks)
    out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  for (const auto &w : a.warnings) out += "WARN " + w + "\n";
  return out;
}

}  // namespace dispeech
