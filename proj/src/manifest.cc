// manifest.cc

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

#include "dispeech/manifest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dispeech/errors.h"
#include "dispeech/string_util.h"

namespace dispeech {

using nlohmann::json;

namespace {

template <class T>
T Field(const json &obj, const char *name, int line, const char *code) {
  auto it = obj.find(name);
  auto fail = [&](const std::string &what) {
    throw ValidationError(code, "line " + std::to_string(line) + ": " + what);
  };
  if (it == obj.end()) fail(std::string("missing field '") + name + "'");
  if constexpr (std::is_same_v<T, std::string>) {
    if (!it->is_string()) fail(std::string("field '") + name + "' must be a string");
  } else if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_integer()) fail(std::string("field '") + name + "' must be an integer");
  } else {
    if (!it->is_number()) fail(std::string("field '") + name + "' must be a number");
  }
  return it->get<T>();
}

json ParseLine(std::string_view line, int line_no, const char *code) {
  try {
    json j = json::parse(line);
    if (!j.is_object()) throw ValidationError(code, "line " + std::to_string(line_no) + ": expected a JSON object");
    return j;
  } catch (const json::parse_error &e) {
    throw ValidationError(code, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

int CountWord(std::string_view text, std::string_view word) {
  int n = 0;
  for (const auto &w : SplitWhitespace(text)) n += (w == word);
  return n;
}

}  // namespace

std::string ReadTextFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("short write to '" + path + "'");
}

std::string FileStem(const std::string &path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<ManifestEntry> ParseManifest(std::string_view jsonl) {
  constexpr const char *kCode = "InvalidManifest";
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  int line_no = 0;
  for (std::string_view line : Split(jsonl, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json j = ParseLine(line, line_no, kCode);
    ManifestEntry e;
    e.segment_id = Field<std::string>(j, "segment_id", line_no, kCode);
    e.audio_path = Field<std::string>(j, "audio_path", line_no, kCode);
    e.duration_ms = Field<int64_t>(j, "duration_ms", line_no, kCode);
    e.speaker_id = Field<std::string>(j, "speaker_id", line_no, kCode);
    e.corpus_tag = Field<std::string>(j, "corpus_tag", line_no, kCode);
    e.reference_text = Field<std::string>(j, "reference_text", line_no, kCode);
    e.n_uh = Field<int>(j, "n_uh", line_no, kCode);
    e.n_um = Field<int>(j, "n_um", line_no, kCode);
    auto where = "line " + std::to_string(line_no) + ": ";
    if (e.duration_ms < 0) throw ValidationError(kCode, where + "negative duration_ms");
    if (e.n_uh != CountWord(e.reference_text, "uh") || e.n_um != CountWord(e.reference_text, "um"))
      throw ValidationError(kCode, where + "filler counts disagree with reference_text");
    if (!seen.insert(e.segment_id).second)
      throw ValidationError(kCode, where + "duplicate segment_id '" + e.segment_id + "'");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ManifestEntry> ReadManifest(const std::string &path) {
  try {
    return ParseManifest(ReadTextFile(path));
  } catch (const ValidationError &e) {
    throw ValidationError(e.code(), path + ": " + e.what());
  }
}

std::string ManifestLine(const ManifestEntry &e) {
  nlohmann::ordered_json j;
  j["segment_id"] = e.segment_id;
  j["audio_path"] = e.audio_path;
  j["duration_ms"] = e.duration_ms;
  j["speaker_id"] = e.speaker_id;
  j["corpus_tag"] = e.corpus_tag;
  j["reference_text"] = e.reference_text;
  j["n_uh"] = e.n_uh;
  j["n_um"] = e.n_um;
  return j.dump();
}

std::string FormatManifest(std::span<const ManifestEntry> entries) {
  std::string out;
  for (const auto &e : entries) {
    out += ManifestLine(e);
    out += '\n';
  }
  return out;
}

void WriteManifest(const std::string &path, std::span<const ManifestEntry> entries) {
  WriteTextFile(path, FormatManifest(entries));
}

HypothesisSet ParseHypotheses(std::string_view jsonl, std::string model_id) {
  constexpr const char *kCode = "InvalidHypothesisFile";
  HypothesisSet set;
  set.model_id = std::move(model_id);
  int line_no = 0;
  for (std::string_view line : Split(jsonl, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json j = ParseLine(line, line_no, kCode);
    auto id = Field<std::string>(j, "segment_id", line_no, kCode);
    HypothesisRecord r;
    r.text = Field<std::string>(j, "text", line_no, kCode);
    r.processing_seconds = Field<double>(j, "processing_seconds", line_no, kCode);
    auto where = "line " + std::to_string(line_no) + ": ";
    if (!(r.processing_seconds >= 0.0))
      throw ValidationError(kCode, where + "processing_seconds must be >= 0");
    if (!set.records.emplace(id, std::move(r)).second)
      throw ValidationError(kCode, where + "duplicate segment_id '" + id + "'");
  }
  return set;
}

HypothesisSet ReadHypotheses(const std::string &path, std::string model_id) {
  if (model_id.empty()) model_id = FileStem(path);
  try {
    return ParseHypotheses(ReadTextFile(path), std::move(model_id));
  } catch (const ValidationError &e) {
    throw ValidationError(e.code(), path + ": " + e.what());
  }
}

std::string FormatHypotheses(const HypothesisSet &set) {
  std::string out;
  for (const auto &[id, r] : set.records) {
    nlohmann::ordered_json j;
    j["segment_id"] = id;
    j["text"] = r.text;
    j["processing_seconds"] = r.processing_seconds;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace dispeech
