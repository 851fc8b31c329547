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

#include "cmkt/grad_check.hpp"

#include <cmath>
#include <stdexcept>

#include "cmkt/errors.hpp"

namespace cmkt::ad {

FdReport finite_difference_check(ParameterStore& store, const LossFn& loss_fn,
                                 double epsilon, const FdFault* fault) {
  if (!(epsilon > 0.0) || epsilon > 1e-2) {
    throw std::invalid_argument(
        "finite_difference_check: epsilon must be in (0, 1e-2], got " +
        std::to_string(epsilon));
  }

  store.zero_grads();
  const double base = loss_fn(true);
  if (!std::isfinite(base)) {
    throw NumericError("finite_difference_check: non-finite loss at base point");
  }

  std::vector<Tensor> analytic;
  analytic.reserve(static_cast<std::size_t>(store.size()));
  for (int i = 0; i < store.size(); ++i) analytic.push_back(store.slot(i).grad);
  if (fault != nullptr) {
    analytic[static_cast<std::size_t>(store.index_of(fault->slot))]
        .v[static_cast<std::size_t>(fault->coord)] += fault->delta;
  }

  FdReport report;
  report.slots.reserve(static_cast<std::size_t>(store.size()));
  for (int i = 0; i < store.size(); ++i) {
    ParameterStore::Slot& s = store.slot(i);
    FdSlotReport sr;
    sr.name = s.name;
    for (std::size_t j = 0; j < s.value.size(); ++j) {
      const double saved = s.value.v[j];
      s.value.v[j] = saved + epsilon;
      const double plus = loss_fn(false);
      s.value.v[j] = saved - epsilon;
      const double minus = loss_fn(false);
      s.value.v[j] = saved;
      if (!std::isfinite(plus) || !std::isfinite(minus)) {
        throw NumericError("finite_difference_check: non-finite loss perturbing slot '" +
                           s.name + "' coordinate " + std::to_string(j));
      }
      const double numeric = (plus - minus) / (2.0 * epsilon);
      const double a = analytic[static_cast<std::size_t>(i)].v[j];
      const double denom = std::max({std::fabs(a), std::fabs(numeric), 1e-8});
      const double rel = std::fabs(a - numeric) / denom;
      if (rel > sr.max_rel_err) {
        sr.max_rel_err = rel;
        sr.worst_coord = static_cast<int>(j);
        sr.analytic = a;
        sr.numeric = numeric;
      }
    }
    if (sr.max_rel_err >= report.worst_rel_err &&
        (report.worst_slot.empty() || sr.max_rel_err > report.worst_rel_err)) {
      report.worst_rel_err = sr.max_rel_err;
      report.worst_slot = sr.name;
    }
    report.slots.push_back(std::move(sr));
  }
  return report;
}

}  // namespace cmkt::ad
