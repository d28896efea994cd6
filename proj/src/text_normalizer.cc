// text_normalizer.cc

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

#include "dispeech/text_normalizer.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dispeech/errors.h"
#include "dispeech/string_util.h"

namespace dispeech {

namespace {

[[noreturn]] void TableError(const std::string &what) {
  throw ValidationError("InvalidTable", what);
}

bool IsCleanWord(std::string_view w) { return !w.empty() && CleanWord(w) == w; }

// Removes "(...)" spans, which mark material that was not pronounced.
std::string DropParenthesized(std::string_view s) {
  std::string out;
  int depth = 0;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out += c;
    }
  }
  return out;
}

bool IsAnnotationOnly(std::string_view tok) {
  if (tok.starts_with('[')) return true;
  if (tok.starts_with("&=")) return true;
  return tok.size() >= 2 && tok.front() == '(' && tok.back() == ')';
}

class TokenSink {
 public:
  explicit TokenSink(const NormalizationTable &table) : table_(table) {}

  // Handles one cleaned word: filler, deletion, or colloquial expansion.
  void AddCleanWord(const std::string &w) {
    if (w.empty()) return;
    if (auto f = table_.filler_map.find(w); f != table_.filler_map.end()) {
      tokens_.push_back(f->second);
      return;
    }
    AddLexical(w);
  }

  void AddMappedFiller(const std::string &filler) { tokens_.push_back(filler); }

  void AddLexical(const std::string &w) {
    if (w.empty()) return;
    if (auto c = table_.colloquial_map.find(w); c != table_.colloquial_map.end()) {
      for (std::string &piece : SplitWhitespace(c->second)) tokens_.push_back(std::move(piece));
      return;
    }
    tokens_.push_back(w);
  }

  std::vector<std::string> Take() { return std::move(tokens_); }

 private:
  const NormalizationTable &table_;
  std::vector<std::string> tokens_;
};

}  // namespace

std::string CleanWord(std::string_view word) {
  std::string out;
  bool has_letter = false;
  for (size_t i = 0; i < word.size();) {
    auto b = static_cast<unsigned char>(word[i]);
    if (b < 0x80) {
      char c = static_cast<char>(b);
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c >= 'a' && c <= 'z') {
        out += c;
        has_letter = true;
      } else if (c == '\'') {
        out += c;
      }
      ++i;
      continue;
    }
    size_t len = (b & 0xE0) == 0xC0 ? 2 : (b & 0xF0) == 0xE0 ? 3 : (b & 0xF8) == 0xF0 ? 4 : 1;
    std::string_view seq = word.substr(i, len);
    if (seq == "\xE2\x80\x98" || seq == "\xE2\x80\x99") out += '\'';
    i += len;
  }
  return has_letter ? out : std::string();
}

CleanTranscript CleanTranscript::FromTokens(std::vector<std::string> tokens) {
  CleanTranscript t;
  t.tokens = std::move(tokens);
  t.text = Join(t.tokens, " ");
  for (const auto &tok : t.tokens) {
    if (tok == "uh") ++t.filler_count_uh;
    if (tok == "um") ++t.filler_count_um;
  }
  return t;
}

NormalizationTable NormalizationTable::Defaults() {
  NormalizationTable t;
  t.filler_map = {{"&-uh", "uh"}, {"&uh", "uh"}, {"uh", "uh"},
                  {"&-um", "um"}, {"&um", "um"}, {"um", "um"},
                  {"uhm", "um"},  {"er", "uh"},  {"erm", "um"}};
  t.colloquial_map = {{"hafta", "have to"}, {"gonna", "going to"},
                      {"wanna", "want to"}, {"gotta", "got to"},
                      {"kinda", "kind of"}, {"lemme", "let me"}};
  t.delete_set = {"xxx", "yyy", "www"};
  return t;
}

NormalizationTable NormalizationTable::Parse(std::string_view text) {
  NormalizationTable t;
  enum class Section { kNone, kFiller, kColloquial, kDelete } section = Section::kNone;
  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (line == "[filler]") { section = Section::kFiller; continue; }
    if (line == "[colloquial]") { section = Section::kColloquial; continue; }
    if (line == "[delete]") { section = Section::kDelete; continue; }

    size_t tab = raw.find('\t');
    std::string from = ToLowerAscii(Trim(raw.substr(0, tab)));
    std::string to = tab == std::string_view::npos
                         ? std::string()
                         : Join(SplitWhitespace(raw.substr(tab + 1)), " ");
    switch (section) {
      case Section::kNone:
        TableError(where() + "entry outside of a [filler]/[colloquial]/[delete] section");
      case Section::kDelete:
        if (!to.empty()) TableError(where() + "[delete] entries take a single column");
        t.delete_set.insert(from);
        break;
      case Section::kFiller:
      case Section::kColloquial:
        if (to.empty()) TableError(where() + "expected 'from<TAB>to'");
        auto &map = section == Section::kFiller ? t.filler_map : t.colloquial_map;
        if (!map.emplace(from, to).second) TableError(where() + "duplicate key '" + from + "'");
        break;
    }
  }
  for (const auto &w : t.filler_vocabulary) t.filler_map.emplace(w, w);
  t.Validate();
  return t;
}

NormalizationTable NormalizationTable::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open normalization table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

void NormalizationTable::Validate() const {
  for (const auto &w : filler_vocabulary) {
    auto it = filler_map.find(w);
    if (it == filler_map.end() || it->second != w)
      TableError("filler '" + w + "' must map to itself");
    if (delete_set.count(w)) TableError("filler '" + w + "' is in the delete set");
  }
  for (const auto &[from, to] : filler_map) {
    if (!filler_vocabulary.count(to))
      TableError("filler mapping '" + from + "' -> '" + to + "' leaves the vocabulary");
    if (delete_set.count(from))
      TableError("'" + from + "' is both a filler form and a deleted token");
  }
  for (const auto &[from, to] : colloquial_map) {
    if (!IsCleanWord(from)) TableError("colloquial key '" + from + "' is not a clean word");
    std::vector<std::string> words = SplitWhitespace(to);
    if (words.empty()) TableError("colloquial key '" + from + "' has an empty expansion");
    for (const auto &w : words) {
      if (!IsCleanWord(w) || filler_vocabulary.count(w) || colloquial_map.count(w) ||
          filler_map.count(w) || delete_set.count(w))
        TableError("colloquial expansion '" + to + "' is not a plain clean phrase");
    }
    if (filler_map.count(from) || delete_set.count(from))
      TableError("colloquial key '" + from + "' collides with another section");
  }
}

CleanTranscript NormalizeReference(std::span<const std::string> raw_tokens,
                                   const NormalizationTable &table) {
  TokenSink sink(table);
  for (const std::string &raw : raw_tokens) {
    std::string lower = ToLowerAscii(raw);
    if (auto f = table.filler_map.find(lower); f != table.filler_map.end()) {
      sink.AddMappedFiller(f->second);
      continue;
    }
    if (table.delete_set.count(lower) || IsAnnotationOnly(raw)) continue;

    std::string body = DropParenthesized(raw);
    if (size_t at = body.find('@'); at != std::string::npos) body.resize(at);
    std::replace(body.begin(), body.end(), '_', ' ');
    std::replace(body.begin(), body.end(), '+', ' ');
    for (const std::string &piece : SplitWhitespace(body)) {
      std::string w = CleanWord(piece);
      if (table.delete_set.count(w)) continue;
      sink.AddCleanWord(w);
    }
  }
  return CleanTranscript::FromTokens(sink.Take());
}

CleanTranscript NormalizeHypothesis(std::string_view raw_text,
                                    const NormalizationTable &table) {
  TokenSink sink(table);
  for (const std::string &tok : SplitWhitespace(raw_text)) sink.AddLexical(CleanWord(tok));
  return CleanTranscript::FromTokens(sink.Take());
}

}  // namespace dispeech
