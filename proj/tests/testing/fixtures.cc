// testing/fixtures.cc

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

#include "testing/fixtures.h"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "dispeech/string_util.h"

namespace dispeech::testing {

int64_t Uniform(Rng &rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

namespace {

template <class T>
const T &Pick(Rng &rng, const std::vector<T> &v) {
  return v[static_cast<size_t>(Uniform(rng, 0, static_cast<int64_t>(v.size()) - 1))];
}

const std::vector<std::string> kTokens = {
    "the", "boy", "is", "taking", "cookies", "mother", "water", "sink", "Don't", "hafta",
    "&-uh", "&-um", "&uh", "uh", "xxx", "[//]", "[/]", "[: have to]", "[*]", "<the",
    "dog>", "(.)", "(..)", "&=laughs", "(be)cause", ".", "?", "!", "+...", "gonna",
    "jar@o", "ice_cream", "&+fr", "UH", "\xE2\x80\x9Cquote\xE2\x80\x9D", "caf\xC3\xA9"};

}  // namespace

ChatDocument RandomChatDocument(Rng &rng) {
  ChatDocument doc;
  doc.header_fields["UTF8"] = "";
  if (Uniform(rng, 0, 3)) doc.header_fields["Begin"] = "";
  if (Uniform(rng, 0, 3)) doc.header_fields["End"] = "";
  doc.header_fields["Languages"] = "eng";
  if (Uniform(rng, 0, 1)) {
    doc.media_id = "s" + std::to_string(Uniform(rng, 100, 999)) + "-" + std::to_string(Uniform(rng, 0, 4));
    doc.header_fields["Media"] = doc.media_id + ", audio";
  }
  doc.header_fields["ID"] = "eng|Pitt|PAR|||||Participant|||\neng|Pitt|INV|||||Investigator|||";
  if (Uniform(rng, 0, 1)) doc.header_fields["Comment"] = "synthetic: fixture " + std::to_string(Uniform(rng, 0, 99));

  doc.participants = {{"PAR", "Participant"}, {"INV", "Investigator"}};
  if (Uniform(rng, 0, 2) == 0) doc.participants.push_back({"REL", "Sam Relative"});
  if (Uniform(rng, 0, 4) == 0) doc.participants.push_back({"OTH", ""});

  const int n = static_cast<int>(Uniform(rng, 0, 12));
  int64_t t = Uniform(rng, 0, 2000);
  for (int i = 0; i < n; ++i) {
    Utterance u;
    u.speaker_code = Pick(rng, doc.participants).code;
    const int ntok = static_cast<int>(Uniform(rng, 1, 9));
    for (int k = 0; k < ntok; ++k) u.raw_tokens.push_back(Pick(rng, kTokens));
    if (Uniform(rng, 0, 4)) {
      int64_t d = Uniform(rng, 1, 40000);
      u.interval_ms = IntervalMs{t, t + d};
      t += d + Uniform(rng, 0, 3000);
    }
    if (Uniform(rng, 0, 3) == 0) u.dependent_tiers["mor"] = "det:art|the n|boy .";
    if (Uniform(rng, 0, 5) == 0) u.dependent_tiers["com"] = "line one\nline two";
    doc.utterances.push_back(std::move(u));
  }
  return doc;
}

ChatDocument RandomTimedLayout(Rng &rng) {
  ChatDocument doc;
  doc.media_id = "layout";
  doc.participants = {{"PAR", "Participant"}, {"INV", "Investigator"}};
  const int n = static_cast<int>(Uniform(rng, 1, 15));
  int64_t t = Uniform(rng, 0, 5000);
  for (int i = 0; i < n; ++i) {
    Utterance u;
    u.speaker_code = "PAR";
    int64_t d;
    switch (Uniform(rng, 0, 5)) {
      case 0: d = Uniform(rng, 200, 999); break;        // too short
      case 1: d = Uniform(rng, 30001, 75000); break;    // needs splitting
      case 2: d = Uniform(rng, 999, 1001); break;       // boundary
      default: d = Uniform(rng, 1000, 30000); break;
    }
    const int ntok = static_cast<int>(Uniform(rng, 1, 14));
    for (int k = 0; k < ntok; ++k) u.raw_tokens.push_back(Pick(rng, kTokens));
    if (Uniform(rng, 0, 9)) u.interval_ms = IntervalMs{t, t + d};
    doc.utterances.push_back(std::move(u));

    int64_t gap = Uniform(rng, 0, 40000);
    if (Uniform(rng, 0, 2) == 0 && gap > 500) {
      Utterance inv;
      inv.speaker_code = "INV";
      inv.raw_tokens = {"and", "what", "else", "?"};
      int64_t s = t + d + Uniform(rng, -800, gap / 2);
      int64_t e = s + Uniform(rng, 300, std::max<int64_t>(301, gap));
      inv.interval_ms = IntervalMs{std::max<int64_t>(0, s), std::max<int64_t>(1, e)};
      doc.utterances.push_back(std::move(inv));
    }
    t += d + gap;
  }
  return doc;
}

std::vector<ManifestEntry> SyntheticManifest(const std::vector<int> &segments_per_speaker,
                                             int pitt_speakers, Rng &rng) {
  std::vector<ManifestEntry> out;
  for (size_t s = 0; s < segments_per_speaker.size(); ++s) {
    const bool pitt = static_cast<int>(s) < pitt_speakers;
    for (int k = 0; k < segments_per_speaker[s]; ++k) {
      ManifestEntry e;
      char id[64];
      std::snprintf(id, sizeof(id), "spk%03zu_seg%05d", s, k);
      e.segment_id = id;
      e.audio_path = std::string("audio/") + id + ".wav";
      e.duration_ms = Uniform(rng, 1000, 30000);
      e.speaker_id = (pitt ? "pitt:" : "kempler:") + std::to_string(s);
      e.corpus_tag = pitt ? "pitt" : "kempler";
      std::vector<std::string> words;
      const int n = static_cast<int>(Uniform(rng, 1, 8));
      for (int w = 0; w < n; ++w) {
        switch (Uniform(rng, 0, 9)) {
          case 0: words.push_back("uh"); ++e.n_uh; break;
          case 1: words.push_back("um"); ++e.n_um; break;
          default: words.push_back(Pick(rng, std::vector<std::string>{"the", "cookie", "jar", "is", "falling"}));
        }
      }
      e.reference_text = Join(words, " ");
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string FuzzText(Rng &rng) {
  static const std::vector<std::string> kPieces = {
      "a",     "B",     "z",    "'",    "\xE2\x80\x99", "\xE2\x80\x94", "\xC3\xA9", "&-uh",
      "&um",   "xxx",   "hafta", "[/]", "[//]",         "<",            ">",        "(",
      ")",     "&=laughs", "@o", "_",   "+",            ".",            ",",        "!",
      "?",     "0",     "9",    " ",    "  ",           "\t",           "Uh",       "UM",
      "er",    "yyy",   "[: have to]", "\xF0\x9F\x98\x80", "-", ":",   "\"",       "don't",
      "gonna", "\xE2\x80\x98", "www"};
  std::string s;
  for (int64_t n = Uniform(rng, 0, 12); n > 0; --n) s += Pick(rng, kPieces);
  return s;
}

Waveform Tone(int sample_rate, int channels, double seconds, double freq_hz, double amplitude) {
  Waveform w;
  w.sample_rate = sample_rate;
  w.channels = channels;
  const auto frames = static_cast<size_t>(std::llround(seconds * sample_rate));
  w.samples.resize(frames * static_cast<size_t>(channels));
  for (size_t i = 0; i < frames; ++i) {
    double v = amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / sample_rate);
    auto s = static_cast<int16_t>(std::lround(v * 32767.0));
    for (int c = 0; c < channels; ++c) w.samples[i * static_cast<size_t>(channels) + static_cast<size_t>(c)] = s;
  }
  return w;
}

Waveform Noise(int sample_rate, int channels, double seconds, uint64_t seed) {
  Rng rng(seed);
  Waveform w;
  w.sample_rate = sample_rate;
  w.channels = channels;
  const auto n = static_cast<size_t>(std::llround(seconds * sample_rate)) * static_cast<size_t>(channels);
  w.samples.resize(n);
  for (auto &s : w.samples) s = static_cast<int16_t>(Uniform(rng, -12000, 12000));
  return w;
}

std::string TempDir(const std::string &name) {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / ("dispeech_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

}  // namespace dispeech::testing
