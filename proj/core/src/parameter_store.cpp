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

#include "cmkt/parameter_store.hpp"

#include <algorithm>

#include "cmkt/errors.hpp"

namespace cmkt::ad {

int ParameterStore::add(std::string name, int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw DataError("parameter '" + name + "': invalid shape " + shape_str(rows, cols));
  }
  if (index_.count(name) != 0) {
    throw DataError("parameter '" + name + "' already exists");
  }
  const int idx = static_cast<int>(slots_.size());
  Slot s;
  s.name = name;
  s.value = Tensor(rows, cols);
  s.grad = Tensor(rows, cols);
  s.m = Tensor(rows, cols);
  s.v = Tensor(rows, cols);
  index_.emplace(std::move(name), idx);
  slots_.push_back(std::move(s));
  return idx;
}

int ParameterStore::add_uniform(std::string name, int rows, int cols,
                                double bound, RngStream& rng) {
  const int idx = add(std::move(name), rows, cols);
  for (double& x : slots_[static_cast<std::size_t>(idx)].value.v) {
    x = rng.uniform(-bound, bound);
  }
  return idx;
}

bool ParameterStore::has(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

int ParameterStore::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw DataError("unknown parameter '" + std::string(name) + "'");
  }
  return it->second;
}

std::size_t ParameterStore::total_coords() const {
  std::size_t n = 0;
  for (const Slot& s : slots_) n += s.value.size();
  return n;
}

void ParameterStore::zero_grads() {
  for (Slot& s : slots_) s.grad.fill(0.0);
}

std::vector<std::string> ParameterStore::sorted_names() const {
  std::vector<std::string> names;
  names.reserve(slots_.size());
  for (const Slot& s : slots_) names.push_back(s.name);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace cmkt::ad
