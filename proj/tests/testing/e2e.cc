// testing/e2e.cc

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

#include "testing/e2e.h"

#include <algorithm>
#include <filesystem>

#include "dispeech/chat_document.h"
#include "dispeech/string_util.h"
#include "dispeech/text_normalizer.h"
#include "dispeech/wave_io.h"
#include "testing/fixtures.h"

namespace dispeech::testing {

namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::string>> TsvRows(const std::string &path) {
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  const std::string text = ReadTextFile(path);
  for (std::string_view line : Split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    for (std::string_view f : Split(line, '\t')) fields.emplace_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

EndToEndRun RunEndToEnd(const std::string &fixture_dir, int jobs) {
  EndToEndRun run;
  run.work_dir = TempDir("e2e");
  fs::copy(fs::path(fixture_dir) / "corpus", fs::path(run.work_dir) / "corpus", fs::copy_options::recursive);

  std::map<std::string, std::pair<int, int>> audio;
  for (const auto &row : TsvRows(fixture_dir + "/audio.tsv"))
    audio[row.at(0)] = {std::stoi(row.at(1)), std::stoi(row.at(2))};

  for (const auto &entry : fs::recursive_directory_iterator(fs::path(run.work_dir) / "corpus")) {
    if (entry.path().extension() != ".cha") continue;
    ChatDocument doc = ParseChat(ReadTextFile(entry.path().string()));
    int64_t end_ms = 0;
    for (const auto &u : doc.utterances)
      if (u.interval_ms) end_ms = std::max(end_ms, u.interval_ms->end_ms);
    auto [rate, channels] = audio.at(doc.media_id);
    Waveform w = Tone(rate, channels, static_cast<double>(end_ms + 1000) / 1000.0, 440.0, 0.25);
    WriteWav((entry.path().parent_path() / (doc.media_id + ".wav")).string(), w);
  }

  const std::vector<CorpusRoot> roots{{run.work_dir + "/corpus/pitt", "pitt"},
                                      {run.work_dir + "/corpus/kempler", "kempler"}};
  const NormalizationTable table = NormalizationTable::Defaults();
  ExportOptions options;
  options.output_dir = run.work_dir + "/out";
  options.jobs = jobs;
  run.exported = ExportCorpus(roots, table, options);

  const std::vector<ManifestEntry> entries = ReadManifest(options.output_dir + "/manifest.jsonl");
  run.split = SplitCorpus(entries, SplitSpec{});
  run.stats = ComputeCorpusStats(entries);

  std::vector<std::string> hyp_files;
  for (const auto &e : fs::directory_iterator(fs::path(fixture_dir) / "hyp"))
    if (e.path().extension() == ".jsonl") hyp_files.push_back(e.path().string());
  std::sort(hyp_files.begin(), hyp_files.end(), std::greater<>());  // descending by name
  for (const auto &f : hyp_files) run.hypotheses.push_back(ReadHypotheses(f));

  EvalOptions eval;
  eval.splits = {"train", "val", "test"};
  eval.jobs = jobs;
  run.report = EvalRun(entries, run.split, run.hypotheses, table, eval);
  run.table = RenderMetricsTable(run.report);
  run.csv = RenderMetricsCsv(run.report);
  return run;
}

std::vector<HandScore> LoadHandScores(const std::string &path) {
  std::vector<HandScore> out;
  for (const auto &r : TsvRows(path)) {
    auto n = [&](size_t k) { return static_cast<int64_t>(std::stoll(r.at(k))); };
    out.push_back({r.at(0), r.at(1), r.at(2), n(3), n(4), n(5), n(6), n(7), n(8), n(9)});
  }
  return out;
}

}  // namespace dispeech::testing
