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

#include "cmkt/optimizer.hpp"

#include <cmath>

#include "cmkt/errors.hpp"

namespace cmkt::ad {

void adam_step(ParameterStore& store, const AdamConfig& cfg) {
  const std::int64_t t = store.step() + 1;
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
  for (int i = 0; i < store.size(); ++i) {
    ParameterStore::Slot& s = store.slot(i);
    if (!all_finite(s.grad.v)) {
      throw NumericError("adam_step: non-finite gradient in slot '" + s.name + "'");
    }
    const std::size_t n = s.value.size();
    for (std::size_t j = 0; j < n; ++j) {
      const double g = s.grad.v[j];
      s.m.v[j] = cfg.beta1 * s.m.v[j] + (1.0 - cfg.beta1) * g;
      s.v.v[j] = cfg.beta2 * s.v.v[j] + (1.0 - cfg.beta2) * g * g;
      const double mhat = s.m.v[j] / bc1;
      const double vhat = s.v.v[j] / bc2;
      s.value.v[j] -= cfg.lr * mhat / (std::sqrt(vhat) + cfg.eps);
    }
  }
  store.set_step(t);
}

}  // namespace cmkt::ad
