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

#include <functional>
#include <string>
#include <vector>

#include "cmkt/parameter_store.hpp"

namespace cmkt::ad {

/// Loss callable contract: `loss_fn(true)` zeroes nothing itself but must run
/// forward+backward and leave gradients accumulated in the store (the checker
/// zeroes beforehand); `loss_fn(false)` must evaluate the loss without
/// touching gradients. Both return the loss value.
using LossFn = std::function<double(bool with_grad)>;

struct FdSlotReport {
  std::string name;
  double max_rel_err = 0.0;
  int worst_coord = -1;
  double analytic = 0.0;  // at the worst coordinate
  double numeric = 0.0;
};

struct FdReport {
  std::vector<FdSlotReport> slots;  // store creation order
  double worst_rel_err = 0.0;
  std::string worst_slot;
};

/// Test hook: perturbs one analytic gradient coordinate after the backward
/// pass so a deliberately wrong gradient is reported.
struct FdFault {
  std::string slot;
  int coord = 0;
  double delta = 1e-3;
};

/// Central-difference check of analytic gradients, per parameter slot:
/// max over coordinates of |analytic - numeric| / max(|analytic|, |numeric|, 1e-8).
/// epsilon must lie in (0, 1e-2]. Non-finite loss at a perturbed point raises
/// NumericError naming the slot and coordinate.
FdReport finite_difference_check(ParameterStore& store, const LossFn& loss_fn,
                                 double epsilon, const FdFault* fault = nullptr);

}  // namespace cmkt::ad
