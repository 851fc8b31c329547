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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cmkt::ad {

/// Dense row-major matrix of doubles. Vectors are 1xN. Double precision
/// everywhere: the gradient checks in this project require it.
struct Tensor {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}
  Tensor(int r, int c, std::initializer_list<double> init)
      : rows(r), cols(c), v(init) {}

  std::array<int, 2> shape() const { return {rows, cols}; }
  std::size_t size() const { return v.size(); }
  double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
  double* data() { return v.data(); }
  const double* data() const { return v.data(); }
  void fill(double x) { std::fill(v.begin(), v.end(), x); }

  bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }
};

std::string shape_str(int rows, int cols);
bool all_finite(std::span<const double> xs);

}  // namespace cmkt::ad
