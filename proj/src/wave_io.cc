// wave_io.cc

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

#include "dispeech/wave_io.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "dispeech/errors.h"

namespace dispeech {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

[[noreturn]] void Undecodable(const std::string &why) {
  throw ValidationError("UndecodableAudio", why);
}

uint32_t Le32(const uint8_t *p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 | uint32_t(p[3]) << 24;
}
uint16_t Le16(const uint8_t *p) { return uint16_t(p[0] | p[1] << 8); }

int16_t FloatToPcm16(double v) {
  double scaled = std::round(v * 32768.0);
  if (scaled > 32767.0) scaled = 32767.0;
  if (scaled < -32768.0) scaled = -32768.0;
  return static_cast<int16_t>(scaled);
}

int16_t DecodeSample(const uint8_t *p, uint16_t format, uint16_t bits) {
  if (format == kFormatFloat) {
    if (bits == 32) {
      float f;
      uint32_t u = Le32(p);
      std::memcpy(&f, &u, 4);
      return FloatToPcm16(f);
    }
    uint64_t u = uint64_t(Le32(p)) | uint64_t(Le32(p + 4)) << 32;
    double d;
    std::memcpy(&d, &u, 8);
    return FloatToPcm16(d);
  }
  switch (bits) {
    case 8: return static_cast<int16_t>((int(p[0]) - 128) << 8);
    case 16: return static_cast<int16_t>(Le16(p));
    case 24: {
      int32_t v = int32_t(uint32_t(p[0]) << 8 | uint32_t(p[1]) << 16 | uint32_t(p[2]) << 24) >> 8;
      return FloatToPcm16(v / 8388608.0);
    }
    default: {
      auto v = static_cast<int32_t>(Le32(p));
      return FloatToPcm16(v / 2147483648.0);
    }
  }
}

void Put16(std::vector<uint8_t> *out, uint16_t v) {
  out->push_back(uint8_t(v & 0xFF));
  out->push_back(uint8_t(v >> 8));
}
void Put32(std::vector<uint8_t> *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(uint8_t(v >> (8 * i)));
}

}  // namespace

Waveform DecodeWav(std::span<const uint8_t> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    Undecodable("not a RIFF/WAVE stream");

  uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  std::span<const uint8_t> data;
  bool have_data = false;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t *hdr = bytes.data() + pos;
    uint32_t size = Le32(hdr + 4);
    size_t body = pos + 8;
    size_t avail = bytes.size() - body;
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (size < 16 || size > avail) Undecodable("truncated fmt chunk");
      const uint8_t *f = bytes.data() + body;
      format = Le16(f);
      channels = Le16(f + 2);
      rate = Le32(f + 4);
      block_align = Le16(f + 12);
      bits = Le16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 40) Undecodable("truncated WAVE_FORMAT_EXTENSIBLE header");
        format = Le16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      // Streaming writers leave 0 or 0xFFFFFFFF here; take what is present.
      data = bytes.subspan(body, std::min<size_t>(size, avail));
      have_data = true;
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) Undecodable("missing fmt chunk");
  if (!have_data) Undecodable("missing data chunk");
  if (channels == 0 || rate == 0) Undecodable("zero channels or sample rate");
  bool ok = (format == kFormatPcm && (bits == 8 || bits == 16 || bits == 24 || bits == 32)) ||
            (format == kFormatFloat && (bits == 32 || bits == 64));
  if (!ok)
    Undecodable("unsupported encoding (format " + std::to_string(format) + ", " +
                std::to_string(bits) + " bit)");
  const size_t bytes_per_sample = bits / 8;
  if (block_align != bytes_per_sample * channels) Undecodable("inconsistent block alignment");

  Waveform wav;
  wav.sample_rate = static_cast<int>(rate);
  wav.channels = channels;
  const size_t n = data.size() / bytes_per_sample / channels * channels;
  wav.samples.resize(n);
  for (size_t i = 0; i < n; ++i)
    wav.samples[i] = DecodeSample(data.data() + i * bytes_per_sample, format, bits);
  return wav;
}

Waveform ReadWav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open audio file '" + path + "'");
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return DecodeWav(bytes);
  } catch (const ValidationError &e) {
    throw ValidationError(e.code(), path + ": " + e.what());
  }
}

std::vector<uint8_t> EncodeWav(const Waveform &wav) {
  const uint32_t data_bytes = static_cast<uint32_t>(wav.samples.size() * 2);
  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  Put32(&out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  Put32(&out, 16);
  Put16(&out, kFormatPcm);
  Put16(&out, static_cast<uint16_t>(wav.channels));
  Put32(&out, static_cast<uint32_t>(wav.sample_rate));
  Put32(&out, static_cast<uint32_t>(wav.sample_rate * wav.channels * 2));
  Put16(&out, static_cast<uint16_t>(wav.channels * 2));
  Put16(&out, 16);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  Put32(&out, data_bytes);
  for (int16_t s : wav.samples) Put16(&out, static_cast<uint16_t>(s));
  return out;
}

void WriteWav(const std::string &path, const Waveform &wav) {
  std::vector<uint8_t> bytes = EncodeWav(wav);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write audio file '" + path + "'");
  out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to '" + path + "'");
}

}  // namespace dispeech
