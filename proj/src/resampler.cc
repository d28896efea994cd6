// resampler.cc

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

#include "dispeech/resampler.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "dispeech/errors.h"

namespace dispeech {

namespace {

double FloorDiv(int64_t a, int64_t b) { return std::floor(static_cast<double>(a) / b); }

}  // namespace

PolyphaseResampler::PolyphaseResampler(int input_rate, int output_rate,
                                       int zero_crossings, double rolloff,
                                       double kaiser_beta)
    : input_rate_(input_rate), output_rate_(output_rate) {
  if (input_rate <= 0 || output_rate <= 0)
    throw ValidationError("InvalidArgument", "sample rates must be positive");
  int64_t g = std::gcd(input_rate, output_rate);
  up_ = output_rate / g;
  down_ = input_rate / g;

  // Cutoff in cycles per input sample.
  const double cutoff = 0.5 * rolloff * std::min(1.0, static_cast<double>(up_) / down_);
  const double half_width = zero_crossings / (2.0 * cutoff);
  half_taps_ = static_cast<int>(std::ceil(half_width));
  const int row = 2 * half_taps_ + 1;
  const double i0_beta = std::cyl_bessel_i(0.0, kaiser_beta);

  table_.assign(static_cast<size_t>(up_ * row), 0.0);
  for (int64_t phase = 0; phase < up_; ++phase) {
    const double frac = static_cast<double>(phase) / up_;
    double *taps = &table_[static_cast<size_t>(phase * row)];
    double sum = 0.0;
    for (int k = -half_taps_; k <= half_taps_; ++k) {
      const double t = frac - k;  // distance from output position to input k
      if (std::abs(t) >= half_width) continue;
      const double x = 2.0 * cutoff * t;
      const double sinc = x == 0.0 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
      const double r = t / half_width;
      const double window = std::cyl_bessel_i(0.0, kaiser_beta * std::sqrt(1.0 - r * r)) / i0_beta;
      taps[k + half_taps_] = 2.0 * cutoff * sinc * window;
      sum += taps[k + half_taps_];
    }
    for (int k = 0; k < row; ++k) taps[k] /= sum;
  }
}

std::pair<int64_t, int64_t> PolyphaseResampler::InputSupport(int64_t first_output,
                                                             int64_t count) const {
  int64_t lo = static_cast<int64_t>(FloorDiv(first_output * down_, up_)) - half_taps_;
  int64_t hi = static_cast<int64_t>(FloorDiv((first_output + count) * down_, up_)) + half_taps_ + 1;
  return {lo, hi};
}

std::vector<double> PolyphaseResampler::Process(std::span<const double> input,
                                                int64_t input_offset,
                                                int64_t first_output,
                                                int64_t count) const {
  std::vector<double> out(static_cast<size_t>(std::max<int64_t>(count, 0)));
  const int row = 2 * half_taps_ + 1;
  const auto n_in = static_cast<int64_t>(input.size());
  for (int64_t i = 0; i < count; ++i) {
    const int64_t num = (first_output + i) * down_;
    const auto base = static_cast<int64_t>(FloorDiv(num, up_));
    const int64_t phase = num - base * up_;
    const double *taps = &table_[static_cast<size_t>(phase * row)];
    double acc = 0.0;
    for (int k = -half_taps_; k <= half_taps_; ++k) {
      const int64_t idx = base + k - input_offset;
      if (idx < 0 || idx >= n_in) continue;
      acc += taps[k + half_taps_] * input[static_cast<size_t>(idx)];
    }
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

std::vector<double> PolyphaseResampler::Process(std::span<const double> input) const {
  const auto n = static_cast<int64_t>(input.size());
  const int64_t count = (n * up_ + down_ - 1) / down_;
  return Process(input, 0, 0, count);
}

}  // namespace dispeech
