// tools/dispeech.cc

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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dispeech/chat_document.h"
#include "dispeech/corpus_export.h"
#include "dispeech/errors.h"
#include "dispeech/manifest.h"
#include "dispeech/parallel.h"
#include "dispeech/pipeline_config.h"
#include "dispeech/report.h"
#include "dispeech/segmenter.h"
#include "dispeech/splitter.h"
#include "dispeech/string_util.h"
#include "dispeech/text_normalizer.h"

namespace {

using namespace dispeech;

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

const std::set<std::string> kSubcommands = {"parse", "normalize", "segment", "export", "split",
                                            "stats", "verify", "eval", "bench"};

const char *kUsage =
    "usage: dispeech [--config FILE] [--jobs N] <subcommand> [options]\n"
    "\n"
    "subcommands:\n"
    "  parse      parse a CHAT file and print it as JSON\n"
    "  normalize  clean reference or hypothesis text, one line at a time\n"
    "  segment    plan speech/non-speech segments for one CHAT file\n"
    "  export     slice configured corpora into 16 kHz WAV + manifest.jsonl\n"
    "  split      speaker-disjoint train/val/test split of a manifest\n"
    "  stats      sample, hour and filler counts of a manifest\n"
    "  verify     list segments whose ASR similarity is below a threshold\n"
    "  eval       WER / FIR / F1 table per model and split\n"
    "  bench      pairwise speed factors from hypothesis timings\n";

void PrintError(const Error &e) {
  nlohmann::ordered_json j;
  j["error"] = e.code();
  j["message"] = e.what();
  if (auto *m = dynamic_cast<const MalformedLineError *>(&e)) j["line"] = m->line();
  if (auto *m = dynamic_cast<const MissingHypothesisError *>(&e)) j["ids"] = m->ids();
  std::cerr << j.dump() << "\n";
}

struct Context {
  std::string config_path;
  int jobs = DefaultJobs();
  PipelineConfig config;

  NormalizationTable Table() const {
    return config.normalization_table_path.empty()
               ? NormalizationTable::Defaults()
               : NormalizationTable::Load(config.normalization_table_path);
  }
};

void Emit(const std::string &text, const std::string &output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    WriteTextFile(output, text);
  }
}

std::string ReadInput(const std::string &path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return ReadTextFile(path);
}

nlohmann::ordered_json DocumentJson(const ChatDocument &doc) {
  nlohmann::ordered_json j;
  j["media_id"] = doc.media_id;
  j["participants"] = nlohmann::ordered_json::array();
  for (const auto &p : doc.participants) j["participants"].push_back({{"code", p.code}, {"role", p.role}});
  j["header_fields"] = doc.header_fields;
  j["utterances"] = nlohmann::ordered_json::array();
  for (const auto &u : doc.utterances) {
    nlohmann::ordered_json ju;
    ju["speaker_code"] = u.speaker_code;
    ju["raw_tokens"] = u.raw_tokens;
    if (u.interval_ms) {
      ju["interval_ms"] = {u.interval_ms->start_ms, u.interval_ms->end_ms};
    } else {
      ju["interval_ms"] = nullptr;
    }
    ju["dependent_tiers"] = u.dependent_tiers;
    j["utterances"].push_back(std::move(ju));
  }
  return j;
}

ChatDocument LoadChat(const std::string &path) {
  ChatDocument doc;
  try {
    doc = ParseChat(ReadTextFile(path));
  } catch (const MalformedLineError &e) {
    throw MalformedLineError(e.line(), path + ": " + e.what());
  } catch (const ValidationError &e) {
    throw ValidationError(e.code(), path + ": " + e.what());
  }
  if (doc.media_id.empty()) doc.media_id = FileStem(path);
  return doc;
}

std::vector<HypothesisSet> LoadHypotheses(const std::vector<std::string> &paths) {
  std::vector<HypothesisSet> sets;
  for (const auto &p : paths) sets.push_back(ReadHypotheses(p));
  return sets;
}

}  // namespace

int main(int argc, char **argv) {
  if (argc >= 2) {
    std::string first = argv[1];
    if (!first.starts_with("-") && !kSubcommands.count(first)) {
      std::cerr << "dispeech: unknown subcommand '" << first << "'\n\n" << kUsage;
      return kExitUsage;
    }
  }

  Context ctx;
  CLI::App app{"Corpus preparation and scoring for ASR on disordered speech", "dispeech"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", ctx.config_path, "key=value configuration file (fallback: $DISPEECH_CONFIG)");
  app.add_option("--jobs", ctx.jobs, "worker threads")->check(CLI::PositiveNumber);

  // parse
  std::string parse_file, parse_output;
  auto *parse = app.add_subcommand("parse", "Parse a CHAT transcript and print JSON");
  parse->add_option("file", parse_file, "CHAT file")->required();
  parse->add_option("-o,--output", parse_output, "write JSON here instead of stdout");

  // normalize
  std::string norm_mode = "reference", norm_input, norm_chat, norm_speaker;
  auto *normalize = app.add_subcommand("normalize", "Clean transcript text line by line");
  normalize->add_option("--mode", norm_mode, "reference (CHAT tokens) or hypothesis (ASR text)")
      ->check(CLI::IsMember({"reference", "hypothesis"}));
  normalize->add_option("--input", norm_input, "text file, one transcript per line (default stdin)");
  normalize->add_option("--chat", norm_chat, "normalise the utterances of a CHAT file instead");
  normalize->add_option("--speaker", norm_speaker, "with --chat: only this speaker");

  // segment
  std::string seg_file, seg_output, seg_speaker;
  auto *segment = app.add_subcommand("segment", "Plan 1-30 s segments for one CHAT file");
  segment->add_option("file", seg_file, "CHAT file")->required();
  segment->add_option("--speaker", seg_speaker, "speaker code (default from config: PAR)");
  segment->add_option("-o,--output", seg_output, "write plan JSONL here instead of stdout");

  // export
  std::vector<std::string> export_corpora;
  std::string export_dir;
  std::optional<double> export_ratio;
  auto *exporter = app.add_subcommand("export", "Slice corpora into 16 kHz mono WAV and write manifest.jsonl");
  exporter->add_option("--corpus", export_corpora, "TAG=PATH, repeatable; replaces config corpus.* entries");
  exporter->add_option("--output-dir", export_dir, "output directory");
  exporter->add_option("--nonspeech-ratio", export_ratio, "non-speech segments kept per speech segment");

  // split
  std::string split_manifest, split_output;
  std::optional<uint64_t> split_seed;
  auto *split = app.add_subcommand("split", "Speaker-disjoint train/val/test split");
  split->add_option("--manifest", split_manifest, "manifest.jsonl")->required();
  split->add_option("--seed", split_seed, "PRNG seed");
  split->add_option("-o,--output", split_output, "write split JSON here instead of stdout");

  // stats
  std::string stats_manifest;
  auto *stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--manifest", stats_manifest, "manifest.jsonl")->required();

  // verify
  std::string verify_manifest, verify_hyp;
  double verify_threshold = kDefaultSimilarityThreshold;
  bool verify_chars = false;
  auto *verify = app.add_subcommand("verify", "Flag segments whose ASR similarity is below threshold");
  verify->add_option("--manifest", verify_manifest, "manifest.jsonl")->required();
  verify->add_option("--hyp", verify_hyp, "hypothesis JSONL")->required();
  verify->add_option("--threshold", verify_threshold, "similarity threshold")->check(CLI::Range(0.0, 1.0));
  verify->add_flag("--character-level", verify_chars, "character edit similarity instead of word level");

  // eval
  std::string eval_manifest, eval_split, eval_csv, eval_splits = "val,test";
  std::vector<std::string> eval_hyps;
  auto *eval = app.add_subcommand("eval", "WER / FIR / F1 per model and split");
  eval->add_option("--manifest", eval_manifest, "manifest.jsonl")->required();
  eval->add_option("--split", eval_split, "split JSON")->required();
  eval->add_option("--hyp", eval_hyps, "hypothesis JSONL, repeatable; model id = file stem")->required();
  eval->add_option("--splits", eval_splits, "comma-separated splits to score");
  eval->add_option("--csv", eval_csv, "also write the rows as CSV");

  // bench
  std::vector<std::string> bench_hyps;
  bool bench_median = false;
  auto *bench = app.add_subcommand("bench", "Pairwise speed factors");
  bench->add_option("--hyp", bench_hyps, "hypothesis JSONL, repeatable")->required();
  bench->add_flag("--median-ratio", bench_median, "median of per-file ratios instead of summed time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (ctx.config_path.empty()) {
      if (const char *env = std::getenv("DISPEECH_CONFIG"); env && *env) ctx.config_path = env;
    }
    if (!ctx.config_path.empty()) {
      ctx.config = LoadConfig(ctx.config_path);
      ctx.config.CheckPaths();
    }

    if (*parse) {
      Emit(DocumentJson(LoadChat(parse_file)).dump(2) + "\n", parse_output);
    } else if (*normalize) {
      const NormalizationTable table = ctx.Table();
      std::string out;
      if (!norm_chat.empty()) {
        ChatDocument doc = LoadChat(norm_chat);
        std::vector<size_t> idx;
        if (norm_speaker.empty()) {
          for (size_t i = 0; i < doc.utterances.size(); ++i) idx.push_back(i);
        } else {
          idx = SpeakerUtteranceIndices(doc, norm_speaker);
        }
        for (size_t i : idx) out += NormalizeReference(doc.utterances[i].raw_tokens, table).text + "\n";
      } else {
        std::string text = ReadInput(norm_input);
        if (!text.empty() && text.back() == '\n') text.pop_back();
        for (std::string_view line : Split(text, '\n')) {
          if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
          CleanTranscript c = norm_mode == "hypothesis"
                                  ? NormalizeHypothesis(line, table)
                                  : NormalizeReference(TokenizeChatLine(line), table);
          out += c.text + "\n";
        }
      }
      std::cout << out;
    } else if (*segment) {
      ChatDocument doc = LoadChat(seg_file);
      const std::string speaker = seg_speaker.empty() ? ctx.config.speaker : seg_speaker;
      SegmentationResult r = PlanSegments(doc, speaker, ctx.Table());
      std::string out;
      for (const auto &p : r.plans) out += SegmentPlanLine(p) + "\n";
      Emit(out, seg_output);
      for (const auto &s : r.skipped) {
        nlohmann::ordered_json j;
        j["skipped_utterance"] = s.utterance_index;
        j["reason"] = s.reason;
        if (s.interval) j["interval_ms"] = {s.interval->start_ms, s.interval->end_ms};
        std::cerr << j.dump() << "\n";
      }
    } else if (*exporter) {
      std::vector<CorpusRoot> roots = ctx.config.corpus_roots;
      if (!export_corpora.empty()) {
        roots.clear();
        for (const auto &spec : export_corpora) {
          size_t eq = spec.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
            throw ValidationError("InvalidArgument", "--corpus expects TAG=PATH, got '" + spec + "'");
          roots.push_back({spec.substr(eq + 1), spec.substr(0, eq)});
        }
      }
      if (roots.empty()) throw ValidationError("InvalidArgument", "no corpora configured (use --corpus or corpus.<tag> in the config)");
      ExportOptions opts;
      opts.output_dir = export_dir.empty() ? ctx.config.output_dir : export_dir;
      opts.speaker = ctx.config.speaker;
      opts.nonspeech_ratio = export_ratio.value_or(ctx.config.nonspeech_ratio);
      opts.jobs = ctx.jobs;
      ExportSummary s = ExportCorpus(roots, ctx.Table(), opts);
      for (const auto &n : s.notes) std::cerr << n.file << ": " << n.message << "\n";
      std::cout << "wrote " << s.entries.size() << " segments to "
                << (std::filesystem::path(opts.output_dir) / "manifest.jsonl").string() << "\n";
    } else if (*split) {
      std::vector<ManifestEntry> entries = ReadManifest(split_manifest);
      SplitSpec spec = ctx.config.split_spec;
      if (split_seed) spec.seed = *split_seed;
      SplitResult r = SplitCorpus(entries, spec);
      Emit(SplitResultToJson(r), split_output);
      std::cerr << FormatAudit(AuditSplit(entries, r, spec.test_corpus_tag));
    } else if (*stats) {
      std::cout << FormatCorpusStats(ComputeCorpusStats(ReadManifest(stats_manifest)));
    } else if (*verify) {
      std::vector<ManifestEntry> entries = ReadManifest(verify_manifest);
      HypothesisSet hyp = ReadHypotheses(verify_hyp);
      auto flagged = VerifySegments(entries, hyp, ctx.Table(), verify_threshold,
                                    verify_chars ? SimilarityUnit::kCharacter : SimilarityUnit::kToken);
      char buf[32];
      for (const auto &f : flagged) {
        std::snprintf(buf, sizeof(buf), "%.4f", f.similarity);
        std::cout << f.segment_id << "\t" << buf << "\n";
      }
      std::cerr << flagged.size() << " of " << entries.size() << " segments below "
                << verify_threshold << "\n";
    } else if (*eval) {
      std::vector<ManifestEntry> entries = ReadManifest(eval_manifest);
      SplitResult split_result = SplitResultFromJson(ReadTextFile(eval_split));
      std::vector<HypothesisSet> sets = LoadHypotheses(eval_hyps);
      EvalOptions opts;
      opts.splits.clear();
      for (std::string_view s : Split(eval_splits, ','))
        if (!Trim(s).empty()) opts.splits.emplace_back(Trim(s));
      opts.jobs = ctx.jobs;
      MetricsReport report = EvalRun(entries, split_result, sets, ctx.Table(), opts);
      std::cout << RenderMetricsTable(report);
      if (!eval_csv.empty()) WriteTextFile(eval_csv, RenderMetricsCsv(report));
    } else if (*bench) {
      std::vector<HypothesisSet> sets = LoadHypotheses(bench_hyps);
      std::cout << RenderBench(SpeedFactors(
          sets, bench_median ? SpeedStatistic::kMedianRatio : SpeedStatistic::kTotalTime));
    }
  } catch (const ValidationError &e) {
    PrintError(e);
    return kExitValidation;
  } catch (const Error &e) {
    PrintError(e);
    return kExitIo;
  } catch (const std::exception &e) {
    PrintError(IoError(e.what()));
    return kExitIo;
  }
  return 0;
}
