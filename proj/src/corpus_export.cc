// corpus_export.cc

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

#include "dispeech/corpus_export.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>

#include "dispeech/chat_document.h"
#include "dispeech/errors.h"
#include "dispeech/parallel.h"
#include "dispeech/wave_io.h"

namespace dispeech {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> ChatFiles(const std::string &root) {
  std::vector<fs::path> files;
  if (fs::is_regular_file(root)) {
    files.emplace_back(root);
    return files;
  }
  if (!fs::is_directory(root)) throw IoError("MissingPath", "corpus root does not exist: " + root);
  for (const auto &e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file() && e.path().extension() == ".cha") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

std::optional<fs::path> FindAudio(const fs::path &chat, const std::string &media_id) {
  for (const char *ext : {".wav", ".WAV"}) {
    fs::path p = chat.parent_path() / (media_id + ext);
    if (fs::exists(p)) return p;
  }
  return std::nullopt;
}

}  // namespace

std::string SpeakerIdFor(const std::string &corpus_tag, const std::string &media_id) {
  return corpus_tag + ":" + media_id.substr(0, media_id.find('-'));
}

ExportSummary ExportCorpus(std::span<const CorpusRoot> roots, const NormalizationTable &table,
                           const ExportOptions &options) {
  struct Recording {
    std::string file;
    std::string corpus_tag;
    std::string speaker_id;
    fs::path audio;
    std::vector<SegmentPlan> plans;
  };

  ExportSummary summary;
  std::vector<Recording> recordings;
  for (const CorpusRoot &root : roots) {
    for (const fs::path &chat_path : ChatFiles(root.path)) {
      const std::string file = chat_path.string();
      ChatDocument doc;
      try {
        doc = ParseChat(ReadTextFile(file));
      } catch (const ValidationError &e) {
        throw ValidationError(e.code(), file + ": " + e.what());
      }
      if (doc.media_id.empty()) doc.media_id = chat_path.stem().string();
      if (!doc.HasParticipant(options.speaker)) {
        summary.notes.push_back({file, "no participant '" + options.speaker + "'; file skipped"});
        continue;
      }

      SegmentationResult seg;
      try {
        seg = PlanSegments(doc, options.speaker, table);
      } catch (const ValidationError &e) {
        if (e.code() != "NoTimedUtterances") throw;
        summary.notes.push_back({file, "no timed utterances; file skipped"});
        continue;
      }
      for (const SkippedUtterance &s : seg.skipped)
        summary.notes.push_back({file, "utterance " + std::to_string(s.utterance_index) + " skipped: " + s.reason});
      if (seg.plans.empty()) continue;
      auto audio_path = FindAudio(chat_path, doc.media_id);
      if (!audio_path) {
        summary.notes.push_back({file, "audio '" + doc.media_id + ".wav' not found; file skipped"});
        continue;
      }
      recordings.push_back({file, root.corpus_tag, SpeakerIdFor(root.corpus_tag, doc.media_id),
                            *audio_path, std::move(seg.plans)});
    }
  }

  // The non-speech budget applies to the export as a whole.
  std::vector<SegmentPlan> all;
  for (const Recording &r : recordings) all.insert(all.end(), r.plans.begin(), r.plans.end());
  std::set<std::string> ids;
  for (const SegmentPlan &p : all)
    if (!ids.insert(p.segment_id).second)
      throw ValidationError("DuplicateSegmentId", "segment id '" + p.segment_id + "' produced twice");
  std::set<std::string> kept;
  for (const SegmentPlan &p : SelectNonSpeech(std::move(all), options.nonspeech_ratio))
    kept.insert(p.segment_id);

  const fs::path out_dir(options.output_dir);
  fs::create_directories(out_dir / "audio");
  for (Recording &r : recordings) {
    std::erase_if(r.plans, [&](const SegmentPlan &p) { return !kept.count(p.segment_id); });
    if (r.plans.empty()) continue;
    const Waveform source = ReadWav(r.audio.string());
    std::vector<ManifestEntry> entries(r.plans.size());
    ParallelFor(r.plans.size(), options.jobs, [&](size_t i) {
      const SegmentPlan &plan = r.plans[i];
      Waveform slice = SliceAudio(source, plan);
      const std::string rel = "audio/" + plan.segment_id + ".wav";
      WriteWav((out_dir / rel).string(), slice);
      ManifestEntry &e = entries[i];
      e.segment_id = plan.segment_id;
      e.audio_path = rel;
      e.duration_ms = static_cast<int64_t>(slice.samples.size()) * 1000 / kTargetSampleRate;
      e.speaker_id = r.speaker_id;
      e.corpus_tag = r.corpus_tag;
      e.reference_text = plan.reference.text;
      e.n_uh = plan.reference.filler_count_uh;
      e.n_um = plan.reference.filler_count_um;
    });
    for (ManifestEntry &e : entries) summary.entries.push_back(std::move(e));
  }
  WriteManifest((out_dir / "manifest.jsonl").string(), summary.entries);
  return summary;
}

}  // namespace dispeech
