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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cmkt/rng.hpp"
#include "cmkt/tensor.hpp"

namespace cmkt::ad {

/// Named trainable tensors with their gradients and Adam moments. Slots keep
/// creation order; serialization sorts by name.
class ParameterStore {
 public:
  struct Slot {
    std::string name;
    Tensor value;
    Tensor grad;
    Tensor m;  // Adam first moment
    Tensor v;  // Adam second moment
  };

  /// Adds a zero-initialized slot. Duplicate names are rejected.
  int add(std::string name, int rows, int cols);

  /// Adds a slot with entries drawn uniformly from [-bound, bound].
  int add_uniform(std::string name, int rows, int cols, double bound,
                  RngStream& rng);

  bool has(std::string_view name) const;
  int index_of(std::string_view name) const;  // throws DataError if missing

  Slot& slot(int index) { return slots_[static_cast<std::size_t>(index)]; }
  const Slot& slot(int index) const { return slots_[static_cast<std::size_t>(index)]; }
  Slot& slot(std::string_view name) { return slot(index_of(name)); }
  const Slot& slot(std::string_view name) const { return slot(index_of(name)); }

  int size() const { return static_cast<int>(slots_.size()); }
  std::int64_t step() const { return step_; }
  void set_step(std::int64_t s) { step_ = s; }

  std::size_t total_coords() const;
  void zero_grads();

  /// Slot names sorted lexicographically (stable serialization order).
  std::vector<std::string> sorted_names() const;

 private:
  std::vector<Slot> slots_;
  std::unordered_map<std::string, int> index_;
  std::int64_t step_ = 0;
};

}  // namespace cmkt::ad
