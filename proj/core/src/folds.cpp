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

#include "cmkt/folds.hpp"

#include "cmkt/errors.hpp"
#include "cmkt/rng.hpp"

namespace cmkt::data {

namespace {
constexpr std::uint64_t kFoldStreamTag = 0x464f4c44;  // "FOLD"
constexpr int kFolds = 5;
}  // namespace

std::vector<FoldSplit> split_folds(const std::vector<std::string>& student_ids,
                                   std::uint64_t seed) {
  const std::size_t n = student_ids.size();
  if (n < static_cast<std::size_t>(kFolds)) {
    throw DataError("split_folds: need at least 5 students, got " + std::to_string(n));
  }
  std::vector<std::string> shuffled = student_ids;
  RngStream rng(mix_seed(seed, kFoldStreamTag));
  rng.shuffle(shuffled);

  // Chunk boundaries; the first n%5 chunks take one extra student.
  std::vector<std::size_t> begin(kFolds + 1, 0);
  const std::size_t base = n / kFolds;
  const std::size_t extra = n % kFolds;
  for (int f = 0; f < kFolds; ++f) {
    begin[static_cast<std::size_t>(f) + 1] =
        begin[static_cast<std::size_t>(f)] + base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
  }

  std::vector<FoldSplit> folds;
  folds.reserve(kFolds);
  for (int f = 0; f < kFolds; ++f) {
    FoldSplit split;
    split.fold_id = f;
    split.test.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(begin[static_cast<std::size_t>(f)]),
                      shuffled.begin() + static_cast<std::ptrdiff_t>(begin[static_cast<std::size_t>(f) + 1]));
    std::vector<std::string> rest;
    rest.reserve(n - split.test.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i < begin[static_cast<std::size_t>(f)] || i >= begin[static_cast<std::size_t>(f) + 1]) {
        rest.push_back(shuffled[i]);
      }
    }
    const std::size_t n_train = (rest.size() * 8 + 5) / 10;  // round(0.8 * |rest|)
    split.train.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.validation.assign(rest.begin() + static_cast<std::ptrdiff_t>(n_train), rest.end());
    folds.push_back(std::move(split));
  }
  return folds;
}

}  // namespace cmkt::data
