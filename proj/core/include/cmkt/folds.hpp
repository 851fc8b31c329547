// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmkt::data {

struct FoldSplit {
  int fold_id = 0;
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;
};

/// Deterministic 5-fold split at the student level: one seeded shuffle, five
/// disjoint test chunks covering all students, and an 8:2 train/validation
/// cut of each fold's remainder. Requires at least 5 students.
std::vector<FoldSplit> split_folds(const std::vector<std::string>& student_ids,
                                   std::uint64_t seed);

}  // namespace cmkt::data
