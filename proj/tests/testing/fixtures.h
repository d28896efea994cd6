// testing/fixtures.h

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

#ifndef DISPEECH_TESTING_FIXTURES_H_
#define DISPEECH_TESTING_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dispeech/chat_document.h"
#include "dispeech/errors.h"
#include "dispeech/manifest.h"
#include "dispeech/wave_io.h"

namespace dispeech::testing {

using Rng = std::mt19937_64;

int64_t Uniform(Rng &rng, int64_t lo, int64_t hi);  // inclusive

/// Random document within the accepted CHAT grammar: headers (some
/// repeated), PAR/INV/other participants, tokens drawn from words, fillers,
/// CHAT annotations and punctuation, optional time bullets and % tiers.
ChatDocument RandomChatDocument(Rng &rng);

/// Timed PAR/INV layout for segmentation properties: PAR utterances from
/// 0.2 s to 75 s, interviewer turns in some gaps (occasionally overlapping
/// PAR), and the odd untimed utterance.
ChatDocument RandomTimedLayout(Rng &rng);

/// `speakers` speakers with the given segment counts; the first
/// `pitt_speakers` are tagged "pitt", the rest "kempler". Durations are
/// 1..30 s and references contain occasional fillers.
std::vector<ManifestEntry> SyntheticManifest(const std::vector<int> &segments_per_speaker,
                                             int pitt_speakers, Rng &rng);

/// Short string mixing ASCII letters, digits, punctuation, CHAT markers,
/// curly quotes, dashes, accented letters and emoji.
std::string FuzzText(Rng &rng);

/// Sine tone, identical on every channel.
Waveform Tone(int sample_rate, int channels, double seconds, double freq_hz,
              double amplitude = 0.5);

/// Deterministic pseudo-noise, different per channel.
Waveform Noise(int sample_rate, int channels, double seconds, uint64_t seed);

/// Fresh empty directory under the system temp dir.
std::string TempDir(const std::string &name);

/// Runs fn and returns the code of the dispeech::Error it throws, or "".
template <class Fn>
std::string ThrownCode(Fn &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return "";
}

}  // namespace dispeech::testing

#endif  // DISPEECH_TESTING_FIXTURES_H_
