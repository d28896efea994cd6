// dispeech/chat_document.h

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

#ifndef DISPEECH_CHAT_DOCUMENT_H_
#define DISPEECH_CHAT_DOCUMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dispeech {

/// Half-open time interval in milliseconds, [start_ms, end_ms).
struct IntervalMs {
  int64_t start_ms = 0;
  int64_t end_ms = 0;

  int64_t duration() const { return end_ms - start_ms; }
  bool Overlaps(const IntervalMs &other) const {
    return start_ms < other.end_ms && other.start_ms < end_ms;
  }
  bool operator==(const IntervalMs &) const = default;
};

struct Participant {
  std::string code;  // "PAR", "INV", ...
  std::string role;  // remainder of the @Participants entry
  bool operator==(const Participant &) const = default;
};

struct Utterance {
  std::string speaker_code;
  // Verbatim CHAT tokens; bracketed annotations such as "[: have to]" are kept
  // as a single token.
  std::vector<std::string> raw_tokens;
  std::optional<IntervalMs> interval_ms;
  // Keyed by tier name without the leading '%' ("mor", "gra", ...).
  std::map<std::string, std::string> dependent_tiers;
  bool operator==(const Utterance &) const = default;
};

/// A parsed CHAT transcript. Utterance indices are stable identifiers.
///
/// Headers other than @Participants are kept verbatim in `header_fields`,
/// keyed without the '@'. Value-less headers (@Begin, @End, @UTF8) map to an
/// empty string. Repeated headers (several @ID lines) are joined with '\n'.
struct ChatDocument {
  std::string media_id;
  std::vector<Participant> participants;
  std::vector<Utterance> utterances;
  std::map<std::string, std::string> header_fields;

  bool HasParticipant(std::string_view code) const;
  bool operator==(const ChatDocument &) const = default;
};

/// Parses CHAT text. Accepts the legacy 0x15 time-bullet delimiter as well as
/// U+2022. Throws MalformedLineError for unrecognised lines and
/// ValidationError("MissingParticipants") when @Participants is absent.
ChatDocument ParseChat(std::string_view source_text);

/// Serialises a document in the form ParseChat accepts; ParseChat(WriteChat(d))
/// reproduces `d` for any document whose tokens contain no whitespace other
/// than inside bracket groups.
std::string WriteChat(const ChatDocument &doc);

/// Utterances spoken by `code`, in file order. Throws
/// ValidationError("UnknownSpeaker") if `code` is not a declared participant.
std::vector<Utterance> FilterSpeaker(const ChatDocument &doc,
                                     std::string_view code);

/// Same selection as FilterSpeaker, returning indices into doc.utterances.
std::vector<size_t> SpeakerUtteranceIndices(const ChatDocument &doc,
                                            std::string_view code);

/// Splits the body of an utterance line into CHAT tokens. Whitespace separates
/// tokens except inside a [...] group, which becomes one token with its inner
/// whitespace collapsed to single spaces.
std::vector<std::string> TokenizeChatLine(std::string_view body);

}  // namespace dispeech

#endif  // DISPEECH_CHAT_DOCUMENT_H_
