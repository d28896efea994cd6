// chat_document.cc

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

#include "dispeech/chat_document.h"

#include <algorithm>
#include <charconv>

#include "dispeech/errors.h"
#include "dispeech/string_util.h"

namespace dispeech {

namespace {

constexpr std::string_view kLegacyBullet = "\x15";
constexpr std::string_view kUnicodeBullet = "\xE2\x80\xA2";  // U+2022

struct LogicalLine {
  int line_no;
  std::string text;
};

// Splits into physical lines and folds tab-led continuation lines into the
// line they continue.
std::vector<LogicalLine> JoinContinuations(std::string_view text) {
  std::vector<LogicalLine> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = nl + 1;
    if (!line.empty() && line.front() == '\t') {
      std::string_view rest = Trim(line);
      if (rest.empty()) continue;
      if (out.empty())
        throw MalformedLineError(line_no, "continuation line with nothing to continue");
      out.back().text += ' ';
      out.back().text += rest;
      continue;
    }
    if (Trim(line).empty()) continue;
    out.push_back({line_no, std::string(line)});
  }
  return out;
}

bool IsValidSpeakerCode(std::string_view code) {
  if (code.empty() || code.size() > 4) return false;
  return std::all_of(code.begin(), code.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  });
}

bool ParseMs(std::string_view s, int64_t *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Finds the next bullet delimiter at or after `from`; returns its position
// and sets *len to its byte length.
size_t FindBullet(std::string_view s, size_t from, size_t *len) {
  size_t a = s.find(kLegacyBullet, from);
  size_t b = s.find(kUnicodeBullet, from);
  if (a == std::string_view::npos && b == std::string_view::npos)
    return std::string_view::npos;
  if (b == std::string_view::npos || (a != std::string_view::npos && a < b)) {
    *len = kLegacyBullet.size();
    return a;
  }
  *len = kUnicodeBullet.size();
  return b;
}

// Removes time bullets from `body` and returns the interval they describe.
// Several bullets on one utterance collapse to first start .. last end.
std::optional<IntervalMs> ExtractBullets(int line_no, std::string *body) {
  std::optional<IntervalMs> interval;
  std::string out;
  size_t pos = 0;
  for (;;) {
    size_t open_len = 0, close_len = 0;
    size_t open = FindBullet(*body, pos, &open_len);
    if (open == std::string::npos) {
      out.append(*body, pos, std::string::npos);
      break;
    }
    size_t close = FindBullet(*body, open + open_len, &close_len);
    if (close == std::string::npos)
      throw MalformedLineError(line_no, "unterminated time bullet");
    std::string_view inner =
        std::string_view(*body).substr(open + open_len, close - open - open_len);
    size_t us = inner.find('_');
    int64_t start = 0, end = 0;
    if (us == std::string_view::npos || !ParseMs(inner.substr(0, us), &start) ||
        !ParseMs(inner.substr(us + 1), &end))
      throw MalformedLineError(line_no, "invalid time bullet '" + std::string(inner) + "'");
    if (start < 0 || start >= end)
      throw MalformedLineError(line_no, "time bullet requires 0 <= start < end");
    if (interval) {
      interval->end_ms = std::max(interval->end_ms, end);
    } else {
      interval = IntervalMs{start, end};
    }
    out.append(*body, pos, open - pos);
    out += ' ';
    pos = close + close_len;
  }
  *body = std::move(out);
  return interval;
}

void ParseParticipants(int line_no, std::string_view value,
                       std::vector<Participant> *participants) {
  for (std::string_view entry : Split(value, ',')) {
    std::vector<std::string> words = SplitWhitespace(entry);
    if (words.empty()) continue;
    if (!IsValidSpeakerCode(words[0]))
      throw MalformedLineError(line_no, "invalid participant code '" + words[0] + "'");
    Participant p;
    p.code = words[0];
    for (size_t i = 1; i < words.size(); ++i) {
      if (i > 1) p.role += ' ';
      p.role += words[i];
    }
    participants->push_back(std::move(p));
  }
}

// Splits "@Key:\tvalue" / "*KEY:\tvalue" / "%key:\tvalue" after the sigil.
bool SplitTierLine(std::string_view line, std::string_view *key,
                   std::string_view *value) {
  size_t colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  *key = Trim(line.substr(1, colon - 1));
  *value = Trim(line.substr(colon + 1));
  return true;
}

void AppendHeader(std::map<std::string, std::string> *headers,
                  std::string key, std::string_view value) {
  auto [it, inserted] = headers->emplace(std::move(key), std::string(value));
  if (!inserted) {
    it->second += '\n';
    it->second += value;
  }
}

}  // namespace

bool ChatDocument::HasParticipant(std::string_view code) const {
  return std::any_of(participants.begin(), participants.end(),
                     [&](const Participant &p) { return p.code == code; });
}

std::vector<std::string> TokenizeChatLine(std::string_view body) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '[') {
      flush();
      size_t close = body.find(']', i);
      if (close == std::string_view::npos) close = body.size() - 1;
      std::string group = "[";
      bool space = false;
      for (size_t j = i + 1; j < close; ++j) {
        if (IsAsciiSpace(body[j])) {
          space = true;
          continue;
        }
        if (space && group.size() > 1) group += ' ';
        space = false;
        group += body[j];
      }
      if (body[close] == ']') group += ']';
      tokens.push_back(std::move(group));
      i = close;
    } else if (IsAsciiSpace(c)) {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return tokens;
}

ChatDocument ParseChat(std::string_view source_text) {
  if (source_text.starts_with("\xEF\xBB\xBF")) source_text.remove_prefix(3);
  if (size_t bad = FindInvalidUtf8(source_text); bad != std::string_view::npos) {
    int line = 1 + static_cast<int>(std::count(source_text.begin(),
                                               source_text.begin() + bad, '\n'));
    throw ValidationError("InvalidEncoding",
                          "line " + std::to_string(line) + ": input is not valid UTF-8");
  }

  ChatDocument doc;
  bool saw_participants = false;
  std::vector<int> utterance_lines;

  for (LogicalLine &ll : JoinContinuations(source_text)) {
    std::string_view line = ll.text;
    std::string_view key, value;
    switch (line.front()) {
      case '@': {
        if (!SplitTierLine(line, &key, &value)) {
          key = Trim(line.substr(1));
          value = {};
        }
        if (key.empty()) throw MalformedLineError(ll.line_no, "empty header name");
        if (key == "Participants") {
          saw_participants = true;
          ParseParticipants(ll.line_no, value, &doc.participants);
          break;
        }
        if (key == "Media" && doc.media_id.empty())
          doc.media_id = std::string(Trim(Split(value, ',').front()));
        AppendHeader(&doc.header_fields, std::string(key), value);
        break;
      }
      case '*': {
        if (!SplitTierLine(line, &key, &value))
          throw MalformedLineError(ll.line_no, "utterance line without ':'");
        if (!IsValidSpeakerCode(key))
          throw MalformedLineError(ll.line_no, "invalid speaker code '" + std::string(key) + "'");
        Utterance u;
        u.speaker_code = std::string(key);
        std::string body(value);
        u.interval_ms = ExtractBullets(ll.line_no, &body);
        u.raw_tokens = TokenizeChatLine(body);
        if (u.raw_tokens.empty())
          throw MalformedLineError(ll.line_no, "utterance has no tokens");
        doc.utterances.push_back(std::move(u));
        utterance_lines.push_back(ll.line_no);
        break;
      }
      case '%': {
        if (!SplitTierLine(line, &key, &value) || key.empty())
          throw MalformedLineError(ll.line_no, "dependent tier without ':'");
        if (doc.utterances.empty())
          throw MalformedLineError(ll.line_no, "dependent tier before any utterance");
        AppendHeader(&doc.utterances.back().dependent_tiers, std::string(key), value);
        break;
      }
      default:
        throw MalformedLineError(ll.line_no, "not a header, tier, or continuation line");
    }
  }

  if (!saw_participants)
    throw ValidationError("MissingParticipants", "@Participants header is missing");
  for (size_t i = 0; i < doc.utterances.size(); ++i) {
    if (!doc.HasParticipant(doc.utterances[i].speaker_code))
      throw MalformedLineError(utterance_lines[i],
                               "speaker '" + doc.utterances[i].speaker_code +
                                   "' is not declared in @Participants");
  }
  return doc;
}

std::string WriteChat(const ChatDocument &doc) {
  std::string out;
  auto write_header = [&](const std::string &key, const std::string &value) {
    for (std::string_view v : Split(value, '\n')) {
      out += '@';
      out += key;
      if (!v.empty()) {
        out += ":\t";
        out += v;
      }
      out += '\n';
    }
  };
  const auto &h = doc.header_fields;
  for (const char *k : {"UTF8", "Begin", "Languages"}) {
    if (auto it = h.find(k); it != h.end()) write_header(it->first, it->second);
  }

  std::string participants;
  for (const Participant &p : doc.participants) {
    if (!participants.empty()) participants += ", ";
    participants += p.code;
    if (!p.role.empty()) participants += ' ' + p.role;
  }
  write_header("Participants", participants);

  if (!doc.media_id.empty() && !h.count("Media"))
    write_header("Media", doc.media_id + ", audio");
  for (const auto &[key, value] : h) {
    if (key == "UTF8" || key == "Begin" || key == "Languages" || key == "End") continue;
    write_header(key, value);
  }

  for (const Utterance &u : doc.utterances) {
    out += '*';
    out += u.speaker_code;
    out += ":\t";
    out += Join(u.raw_tokens, " ");
    if (u.interval_ms) {
      out += ' ';
      out += kLegacyBullet;
      out += std::to_string(u.interval_ms->start_ms) + "_" +
             std::to_string(u.interval_ms->end_ms);
      out += kLegacyBullet;
    }
    out += '\n';
    for (const auto &[tier, value] : u.dependent_tiers) {
      for (std::string_view v : Split(value, '\n')) {
        out += '%';
        out += tier;
        out += ":\t";
        out += v;
        out += '\n';
      }
    }
  }
  if (h.count("End")) write_header("End", h.at("End"));
  return out;
}

std::vector<size_t> SpeakerUtteranceIndices(const ChatDocument &doc,
                                            std::string_view code) {
  if (!doc.HasParticipant(code))
    throw ValidationError("UnknownSpeaker",
                          "speaker '" + std::string(code) + "' is not a participant");
  std::vector<size_t> idx;
  for (size_t i = 0; i < doc.utterances.size(); ++i)
    if (doc.utterances[i].speaker_code == code) idx.push_back(i);
  return idx;
}

std::vector<Utterance> FilterSpeaker(const ChatDocument &doc,
                                     std::string_view code) {
  std::vector<Utterance> out;
  for (size_t i : SpeakerUtteranceIndices(doc, code)) out.push_back(doc.utterances[i]);
  return out;
}

}  // namespace dispeech
