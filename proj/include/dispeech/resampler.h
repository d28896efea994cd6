// dispeech/resampler.h

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

#ifndef DISPEECH_RESAMPLER_H_
#define DISPEECH_RESAMPLER_H_

#include <cstdint>
#include <span>
#include <vector>

namespace dispeech {

/// Rational-ratio polyphase resampler with a Kaiser-windowed sinc kernel.
///
/// For rates in/out reduced to M/L, output sample n sits at input position
/// n*M/L; its L possible fractional phases each get a precomputed tap row,
/// normalised to unit DC gain. The low-pass cutoff is `rolloff` times the
/// lower of the two Nyquist frequencies.
class PolyphaseResampler {
 public:
  PolyphaseResampler(int input_rate, int output_rate, int zero_crossings = 16,
                     double rolloff = 0.945, double kaiser_beta = 8.0);

  int input_rate() const { return input_rate_; }
  int output_rate() const { return output_rate_; }

  /// Produces outputs [first_output, first_output + count). `input` holds the
  /// input samples starting at absolute index `input_offset`; anything outside
  /// it is treated as silence.
  std::vector<double> Process(std::span<const double> input, int64_t input_offset,
                              int64_t first_output, int64_t count) const;

  /// Whole-signal convenience: ceil(N * out / in) outputs.
  std::vector<double> Process(std::span<const double> input) const;

  /// Input index range [first, last) that outputs [first_output, first_output
  /// + count) depend on.
  std::pair<int64_t, int64_t> InputSupport(int64_t first_output, int64_t count) const;

 private:
  int input_rate_, output_rate_;
  int64_t up_, down_;  // L and M
  int half_taps_;
  std::vector<double> table_;  // up_ rows of (2 * half_taps_ + 1) taps
};

}  // namespace dispeech

#endif  // DISPEECH_RESAMPLER_H_
