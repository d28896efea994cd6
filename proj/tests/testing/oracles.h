// testing/oracles.h

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

// Reference implementations used only to check the library. None of them
// share code with the dynamic-programming aligner.

#ifndef DISPEECH_TESTING_ORACLES_H_
#define DISPEECH_TESTING_ORACLES_H_

#include <string>
#include <vector>

#include "dispeech/edit_distance.h"

namespace dispeech::testing {

/// Every alignment of ref against hyp (all monotone edit scripts), as op
/// sequences with indices. Exponential; keep inputs short.
template <class T>
void EnumerateAlignments(const std::vector<T> &ref, const std::vector<T> &hyp, size_t i, size_t j,
                         std::vector<AlignStep> &path, std::vector<Alignment> &out) {
  if (i == ref.size() && j == hyp.size()) {
    out.push_back({path});
    return;
  }
  if (i < ref.size() && j < hyp.size()) {
    path.push_back({ref[i] == hyp[j] ? EditOp::kMatch : EditOp::kSubstitute, i, j});
    EnumerateAlignments(ref, hyp, i + 1, j + 1, path, out);
    path.pop_back();
  }
  if (i < ref.size()) {
    path.push_back({EditOp::kDelete, i, std::nullopt});
    EnumerateAlignments(ref, hyp, i + 1, j, path, out);
    path.pop_back();
  }
  if (j < hyp.size()) {
    path.push_back({EditOp::kInsert, std::nullopt, j});
    EnumerateAlignments(ref, hyp, i, j + 1, path, out);
    path.pop_back();
  }
}

/// Minimum edit cost by exhaustive search over all edit scripts (no
/// memoisation).
size_t ExhaustiveEditCost(const std::vector<int> &ref, const std::vector<int> &hyp);

/// Among all minimum-cost alignments, the one whose step list read from the
/// end is lexicographically smallest under match < substitute < delete <
/// insert.
Alignment PreferredMinimalAlignment(const std::vector<std::string> &ref,
                                    const std::vector<std::string> &hyp);

}  // namespace dispeech::testing

#endif  // DISPEECH_TESTING_ORACLES_H_
