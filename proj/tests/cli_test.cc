// cli_test.cc

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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "dispeech/manifest.h"
#include "dispeech/report.h"
#include "dispeech/string_util.h"
#include "testing/fixtures.h"

using namespace dispeech;

namespace {

struct Result {
  int exit_code = -1;
  std::string out, err;
};

std::string Quote(const std::string &s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Result Run(const std::vector<std::string> &args, const std::string &stdin_text = "",
           const std::string &env = "") {
  static int counter = 0;
  std::string dir = testing::TempDir("cli_run" + std::to_string(counter++));
  WriteTextFile(dir + "/in", stdin_text);
  std::string cmd = env + " " + Quote(DISPEECH_CLI);
  for (const auto &a : args) cmd += " " + Quote(a);
  cmd += " <" + Quote(dir + "/in") + " >" + Quote(dir + "/out") + " 2>" + Quote(dir + "/err");
  int status = std::system(cmd.c_str());
  Result r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = ReadTextFile(dir + "/out");
  r.err = ReadTextFile(dir + "/err");
  return r;
}

const char *kManifest =
    R"({"segment_id":"a","audio_path":"a.wav","duration_ms":2000,"speaker_id":"pitt:1","corpus_tag":"pitt","reference_text":"uh the dog","n_uh":1,"n_um":0})"
    "\n"
    R"({"segment_id":"b","audio_path":"b.wav","duration_ms":3000,"speaker_id":"pitt:2","corpus_tag":"pitt","reference_text":"the cat","n_uh":0,"n_um":0})"
    "\n"
    R"({"segment_id":"c","audio_path":"c.wav","duration_ms":5000,"speaker_id":"kempler:3","corpus_tag":"kempler","reference_text":"um yes um","n_uh":0,"n_um":2})"
    "\n";

}  // namespace

TEST_CASE("usage errors exit 64") {
  CHECK(Run({}).exit_code == 64);
  Result unknown = Run({"frobnicate"});
  CHECK(unknown.exit_code == 64);
  CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
  CHECK(Run({"stats"}).exit_code == 64);
  CHECK(Run({"stats", "--manifest", "x", "--bogus"}).exit_code == 64);
  CHECK(Run({"--help"}).exit_code == 0);
}

TEST_CASE("stats") {
  std::string dir = testing::TempDir("cli_stats");
  WriteTextFile(dir + "/m.jsonl", kManifest);
  Result r = Run({"stats", "--manifest", dir + "/m.jsonl"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n_samples=3\n") != std::string::npos);
  CHECK(r.out.find("n_uh=1\n") != std::string::npos);
  CHECK(r.out.find("n_um=2\n") != std::string::npos);

  Result missing = Run({"stats", "--manifest", dir + "/nope.jsonl"});
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("\"error\"") != std::string::npos);
}

TEST_CASE("validation errors exit 1 with a JSON message") {
  std::string dir = testing::TempDir("cli_errors");
  WriteTextFile(dir + "/untimed.cha", "@Participants:\tPAR Participant\n*PAR:\thello .\n");
  Result r = Run({"segment", dir + "/untimed.cha"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("\"error\":\"NoTimedUtterances\"") != std::string::npos);

  WriteTextFile(dir + "/bad.cha", "@Participants:\tPAR Participant\n*PAR:\thi .\njunk\n");
  Result bad = Run({"parse", dir + "/bad.cha"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("\"line\":3") != std::string::npos);
}

TEST_CASE("config problems") {
  std::string dir = testing::TempDir("cli_config");
  WriteTextFile(dir + "/m.jsonl", kManifest);
  WriteTextFile(dir + "/missing.conf", "corpus.pitt = does/not/exist\n");
  CHECK(Run({"--config", dir + "/missing.conf", "stats", "--manifest", dir + "/m.jsonl"}).exit_code == 2);
  CHECK(Run({"stats", "--manifest", dir + "/m.jsonl"}, "", "DISPEECH_CONFIG=" + Quote(dir + "/missing.conf"))
            .exit_code == 2);
  WriteTextFile(dir + "/invalid.conf", "what = 1\n");
  Result inv = Run({"--config", dir + "/invalid.conf", "stats", "--manifest", dir + "/m.jsonl"});
  CHECK(inv.exit_code == 1);
  CHECK(inv.err.find("InvalidConfig") != std::string::npos);
}

TEST_CASE("normalize reads stdin") {
  Result hyp = Run({"normalize", "--mode", "hypothesis"}, "Uh, distinct.\nI'm GONNA go!\n");
  CHECK(hyp.exit_code == 0);
  CHECK(hyp.out == "uh distinct\ni'm going to go\n");
  Result ref = Run({"normalize"}, "the xxx &-uh dog .\n");
  CHECK(ref.out == "the uh dog\n");
}

TEST_CASE("segment, verify and bench") {
  std::string dir = testing::TempDir("cli_misc");
  WriteTextFile(dir + "/a.cha",
                "@Participants:\tPAR Participant, INV Investigator\n@Media:\tabc, audio\n"
                "*PAR:\tthe boy . \x15" "0_2000\x15\n*PAR:\thi . \x15" "2100_2300\x15\n");
  Result seg = Run({"segment", dir + "/a.cha"});
  CHECK(seg.exit_code == 0);
  CHECK(seg.out.find("\"segment_id\":\"abc_PAR_0000\"") != std::string::npos);
  CHECK(seg.err.find("too_short") != std::string::npos);

  WriteTextFile(dir + "/m.jsonl", kManifest);
  WriteTextFile(dir + "/tiny.jsonl",
                "{\"segment_id\":\"a\",\"text\":\"uh the dog\",\"processing_seconds\":1}\n"
                "{\"segment_id\":\"b\",\"text\":\"the bat\",\"processing_seconds\":1}\n"
                "{\"segment_id\":\"c\",\"text\":\"um yes um\",\"processing_seconds\":1}\n");
  WriteTextFile(dir + "/big.jsonl",
                "{\"segment_id\":\"a\",\"text\":\"x\",\"processing_seconds\":4}\n"
                "{\"segment_id\":\"b\",\"text\":\"x\",\"processing_seconds\":2}\n"
                "{\"segment_id\":\"c\",\"text\":\"x\",\"processing_seconds\":3}\n");
  Result v = Run({"verify", "--manifest", dir + "/m.jsonl", "--hyp", dir + "/tiny.jsonl"});
  CHECK(v.exit_code == 0);
  CHECK(v.out == "b\t0.5000\n");

  WriteTextFile(dir + "/partial.jsonl", "{\"segment_id\":\"a\",\"text\":\"x\",\"processing_seconds\":4}\n");
  Result missing = Run({"verify", "--manifest", dir + "/m.jsonl", "--hyp", dir + "/partial.jsonl"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("\"ids\":[\"b\",\"c\"]") != std::string::npos);

  Result b = Run({"bench", "--hyp", dir + "/tiny.jsonl", "--hyp", dir + "/big.jsonl"});
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("tiny vs big 3.00") != std::string::npos);
}

TEST_CASE("split and eval") {
  std::string dir = testing::TempDir("cli_eval");
  testing::Rng rng(1);
  auto entries = testing::SyntheticManifest(std::vector<int>(6, 10), 3, rng);
  WriteManifest(dir + "/m.jsonl", entries);
  HypothesisSet perfect{"perfect", {}};
  for (const auto &e : entries) perfect.records[e.segment_id] = {e.reference_text, 0.1};
  WriteTextFile(dir + "/perfect.jsonl", FormatHypotheses(perfect));

  Result s = Run({"split", "--manifest", dir + "/m.jsonl", "--seed", "3", "-o", dir + "/split.json"});
  CHECK(s.exit_code == 0);
  CHECK(s.err.find("PASS") != std::string::npos);
  Result e = Run({"eval", "--manifest", dir + "/m.jsonl", "--split", dir + "/split.json", "--hyp",
                  dir + "/perfect.jsonl", "--csv", dir + "/r.csv"});
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("perfect") != std::string::npos);
  MetricsReport r = ParseMetricsCsv(ReadTextFile(dir + "/r.csv"));
  REQUIRE(r.rows.size() == 2);
  for (const auto &row : r.rows) CHECK(row.wer == 0.0);
}
