// dispeech/text_normalizer.h

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

#ifndef DISPEECH_TEXT_NORMALIZER_H_
#define DISPEECH_TEXT_NORMALIZER_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dispeech {

/// Data-driven rules for cleaning transcripts.
///
/// Invariants (checked by Validate):
///   - every filler_map value is in filler_vocabulary, and every vocabulary
///     word maps to itself;
///   - no filler_map key is in delete_set;
///   - colloquial expansions are already clean, contain no fillers and no
///     colloquial keys (so normalisation is idempotent).
struct NormalizationTable {
  std::map<std::string, std::string> colloquial_map;
  std::map<std::string, std::string> filler_map;
  std::set<std::string> delete_set;
  std::set<std::string> filler_vocabulary{"uh", "um"};

  /// The built-in table, identical to data/normalization.tsv.
  static NormalizationTable Defaults();

  /// Parses the sectioned tab-separated format:
  ///
  ///   # comment
  ///   [filler]
  ///   &-uh<TAB>uh
  ///   [colloquial]
  ///   hafta<TAB>have to
  ///   [delete]
  ///   xxx
  ///
  /// Missing identity entries for vocabulary words are added. Throws
  /// ValidationError("InvalidTable") with the offending line.
  static NormalizationTable Parse(std::string_view text);
  static NormalizationTable Load(const std::string &path);

  void Validate() const;
  bool operator==(const NormalizationTable &) const = default;
};

/// Canonical transcript: lowercase ASCII letters and apostrophes, single
/// spaces, with per-filler counts.
struct CleanTranscript {
  std::string text;
  std::vector<std::string> tokens;
  int filler_count_uh = 0;
  int filler_count_um = 0;

  static CleanTranscript FromTokens(std::vector<std::string> tokens);
  bool operator==(const CleanTranscript &) const = default;
};

/// Cleans CHAT tokens: filler mapping, deletion of markers such as "xxx",
/// annotation stripping ([...], &=event, (.) pauses, <...> retrace brackets,
/// @-suffixes, (..) omitted material), colloquial expansion, lowercasing and
/// removal of everything except letters and apostrophes. Retraced words are
/// kept.
CleanTranscript NormalizeReference(std::span<const std::string> raw_tokens,
                                   const NormalizationTable &table);

/// Cleans free ASR output: whitespace tokenisation, colloquial expansion,
/// lowercasing and character stripping. No CHAT handling.
CleanTranscript NormalizeHypothesis(std::string_view raw_text,
                                    const NormalizationTable &table);

/// Lowercases and keeps only ASCII letters and apostrophes (U+2018/U+2019 are
/// folded to '). Returns "" when no letter survives.
std::string CleanWord(std::string_view word);

}  // namespace dispeech

#endif  // DISPEECH_TEXT_NORMALIZER_H_
