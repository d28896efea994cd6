// testing/e2e.h

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

#ifndef DISPEECH_TESTING_E2E_H_
#define DISPEECH_TESTING_E2E_H_

#include <string>
#include <vector>

#include "dispeech/corpus_export.h"
#include "dispeech/manifest.h"
#include "dispeech/report.h"
#include "dispeech/splitter.h"

namespace dispeech::testing {

struct EndToEndRun {
  std::string work_dir;
  ExportSummary exported;
  SplitResult split;
  CorpusStats stats;
  std::vector<HypothesisSet> hypotheses;
  MetricsReport report;
  std::string table;
  std::string csv;
};

/// Copies the fixture corpus under fixture_dir/corpus into a fresh work
/// directory, synthesises each recording's audio per audio.tsv, then
/// exports, splits with the default spec and evaluates hyp/*.jsonl on the
/// train, val and test splits.
EndToEndRun RunEndToEnd(const std::string &fixture_dir, int jobs = 2);

struct HandScore {
  std::string model, split, segment;
  int64_t s, d, i, n, tp, fp, fn;
};
std::vector<HandScore> LoadHandScores(const std::string &path);

}  // namespace dispeech::testing

#endif  // DISPEECH_TESTING_E2E_H_
