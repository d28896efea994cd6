// wave_io_test.cc

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

#include <cstring>
#include <filesystem>

#include "dispeech/errors.h"
#include "dispeech/wave_io.h"
#include "testing/fixtures.h"

using namespace dispeech;

namespace {

void Put16(std::vector<uint8_t> &b, uint16_t v) {
  b.push_back(v & 0xff);
  b.push_back(v >> 8);
}
void Put32(std::vector<uint8_t> &b, uint32_t v) {
  for (int k = 0; k < 4; ++k) b.push_back((v >> (8 * k)) & 0xff);
}

std::vector<uint8_t> Header(uint16_t format, int channels, int rate, int bits,
                            const std::vector<uint8_t> &data, bool extra_chunk = false) {
  std::vector<uint8_t> b;
  b.insert(b.end(), {'R', 'I', 'F', 'F'});
  Put32(b, 0);
  b.insert(b.end(), {'W', 'A', 'V', 'E'});
  b.insert(b.end(), {'f', 'm', 't', ' '});
  Put32(b, 16);
  Put16(b, format);
  Put16(b, static_cast<uint16_t>(channels));
  Put32(b, static_cast<uint32_t>(rate));
  Put32(b, static_cast<uint32_t>(rate * channels * bits / 8));
  Put16(b, static_cast<uint16_t>(channels * bits / 8));
  Put16(b, static_cast<uint16_t>(bits));
  if (extra_chunk) {
    b.insert(b.end(), {'L', 'I', 'S', 'T'});
    Put32(b, 3);
    b.insert(b.end(), {'a', 'b', 'c', 0});  // odd size plus pad byte
  }
  b.insert(b.end(), {'d', 'a', 't', 'a'});
  Put32(b, static_cast<uint32_t>(data.size()));
  b.insert(b.end(), data.begin(), data.end());
  uint32_t riff = static_cast<uint32_t>(b.size() - 8);
  std::memcpy(&b[4], &riff, 4);
  return b;
}

}  // namespace

TEST_CASE("pcm16 round trip") {
  Waveform w = testing::Noise(16000, 2, 0.25, 9);
  std::vector<uint8_t> bytes = EncodeWav(w);
  CHECK(bytes.size() == 44 + w.samples.size() * 2);
  CHECK(DecodeWav(bytes) == w);

  std::string dir = testing::TempDir("wave_io");
  WriteWav(dir + "/a.wav", w);
  CHECK(ReadWav(dir + "/a.wav") == w);
  CHECK(std::filesystem::file_size(dir + "/a.wav") == bytes.size());
}

TEST_CASE("other sample formats convert to 16 bit") {
  SUBCASE("8 bit unsigned") {
    Waveform w = DecodeWav(Header(1, 1, 8000, 8, {0, 128, 255}));
    CHECK(w.samples == std::vector<int16_t>{-32768, 0, 32512});
  }
  SUBCASE("24 bit with a padded extra chunk") {
    Waveform w = DecodeWav(Header(1, 1, 8000, 24, {0x00, 0x00, 0x80, 0xff, 0xff, 0x7f}, true));
    CHECK(w.samples == std::vector<int16_t>{-32768, 32767});
  }
  SUBCASE("32 bit float") {
    std::vector<uint8_t> data;
    for (float f : {0.0f, 0.5f, -1.0f, 2.0f}) {
      uint32_t u;
      std::memcpy(&u, &f, 4);
      Put32(data, u);
    }
    Waveform w = DecodeWav(Header(3, 1, 8000, 32, data));
    CHECK(w.samples == std::vector<int16_t>{0, 16384, -32768, 32767});
  }
}

TEST_CASE("a short data chunk keeps the whole frames present") {
  auto bytes = Header(1, 2, 8000, 16, {1, 0, 2, 0, 3, 0, 4, 0});
  bytes.resize(bytes.size() - 3);
  Waveform w = DecodeWav(bytes);
  CHECK(w.samples == std::vector<int16_t>{1, 2});
}

TEST_CASE("undecodable input") {
  auto code = [](std::vector<uint8_t> b) { return testing::ThrownCode([&] { DecodeWav(b); }); };
  CHECK(code({}) == "UndecodableAudio");
  CHECK(code({'R', 'I', 'F', 'F', 0, 0, 0, 0, 'A', 'V', 'I', ' '}) == "UndecodableAudio");
  CHECK(code(Header(2, 1, 8000, 16, {0, 0})) == "UndecodableAudio");
  CHECK(code(Header(1, 0, 8000, 16, {0, 0})) == "UndecodableAudio");
  auto short_fmt = Header(1, 1, 8000, 16, {});
  short_fmt.resize(30);
  CHECK(code(short_fmt) == "UndecodableAudio");
  CHECK(testing::ThrownCode([] { ReadWav("/nonexistent/file.wav"); }) != "");
}
