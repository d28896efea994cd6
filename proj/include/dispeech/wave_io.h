// dispeech/wave_io.h

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

#ifndef DISPEECH_WAVE_IO_H_
#define DISPEECH_WAVE_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dispeech {

/// 16-bit PCM audio, channels interleaved.
struct Waveform {
  int sample_rate = 16000;
  int channels = 1;
  std::vector<int16_t> samples;

  size_t frames() const { return channels > 0 ? samples.size() / channels : 0; }
  bool operator==(const Waveform &) const = default;
};

/// Decodes RIFF/WAVE: integer PCM (8/16/24/32 bit), IEEE float (32/64 bit),
/// and WAVE_FORMAT_EXTENSIBLE wrappers of those. Everything is converted to
/// 16-bit. Throws ValidationError("UndecodableAudio").
Waveform DecodeWav(std::span<const uint8_t> bytes);
Waveform ReadWav(const std::string &path);

/// Writes canonical 44-byte-header PCM16 little-endian WAVE.
std::vector<uint8_t> EncodeWav(const Waveform &wav);
void WriteWav(const std::string &path, const Waveform &wav);

}  // namespace dispeech

#endif  // DISPEECH_WAVE_IO_H_
