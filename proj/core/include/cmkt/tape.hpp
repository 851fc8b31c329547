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
#include <span>
#include <string_view>
#include <vector>

#include "cmkt/parameter_store.hpp"
#include "cmkt/tensor.hpp"

namespace cmkt::ad {

using NodeId = int;

/// Reverse-mode tape over dense tensors.
///
/// Nodes are appended in topological order (an op's inputs always precede it),
/// so backward() is a single reverse sweep that visits each node exactly once.
/// Values live in a bump arena owned by the tape; parameter leaves alias the
/// ParameterStore directly and their gradients accumulate straight into the
/// store, which makes gradient accumulation across sequences an ordered sum.
///
/// The tape is meant to be rebuilt per sequence: reset() drops all nodes but
/// keeps arena capacity.
class Tape {
 public:
  explicit Tape(ParameterStore* store = nullptr) : store_(store) {}

  /// When disabled, ops still compute values but the op structure is not
  /// recorded and backward() refuses to run.
  void set_grad_enabled(bool on) { grad_enabled_ = on; }
  bool grad_enabled() const { return grad_enabled_; }

  /// Optional per-op finiteness checking (used by tests; off by default).
  void set_check_finite(bool on) { check_finite_ = on; }

  NodeId constant(const Tensor& t);
  NodeId constant_zeros(int rows, int cols);
  NodeId scalar(double x);

  /// Leaf view of a ParameterStore slot; memoized per tape.
  NodeId param(std::string_view name);

  NodeId row(NodeId table, int r);
  NodeId concat(std::span<const NodeId> parts);  // row vectors, joined on cols
  NodeId matmul(NodeId a, NodeId b);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);  // elementwise
  NodeId div(NodeId a, NodeId b);  // b must be 1x1; broadcast divide
  NodeId sigmoid(NodeId a);
  NodeId tanh(NodeId a);
  NodeId relu(NodeId a);
  NodeId square(NodeId a);
  NodeId log(NodeId a);
  NodeId neg(NodeId a);
  NodeId scale(NodeId a, double c);
  NodeId add_const(NodeId a, double c);
  NodeId rsub_const(double c, NodeId a);  // c - a
  NodeId clamp(NodeId a, double lo, double hi);
  NodeId sum(NodeId a);            // -> 1x1
  NodeId dot(NodeId a, NodeId b);  // row vectors -> 1x1

  int rows(NodeId id) const { return nodes_[static_cast<std::size_t>(id)].rows; }
  int cols(NodeId id) const { return nodes_[static_cast<std::size_t>(id)].cols; }
  std::span<const double> values(NodeId id) const;
  double value(NodeId id) const;  // 1x1 nodes
  Tensor tensor(NodeId id) const;

  /// Accumulates d(loss)/d(param) into the store's gradient tensors for every
  /// parameter reachable from `loss`. The loss node must be 1x1. Gradients
  /// are added, not assigned; callers zero the store between batches.
  void backward(NodeId loss);

  /// Gradient of an arena node after backward() (diagnostics/tests).
  std::span<const double> node_grad(NodeId id) const;

  void reset();
  std::size_t size() const { return nodes_.size(); }

 private:
  enum class Op : std::uint8_t {
    Const, Param, Row, Concat, MatMul, Add, Sub, Mul, Div,
    Sigmoid, Tanh, Relu, Square, Log, Neg,
    Scale, AddConst, RSubConst, Clamp, Sum, Dot,
  };

  struct Node {
    Op op = Op::Const;
    NodeId a = -1;
    NodeId b = -1;
    int rows = 0;
    int cols = 0;
    std::int64_t off = -1;  // arena offset; -1 for parameter leaves
    double c0 = 0.0;
    double c1 = 0.0;
    const double* ext_val = nullptr;  // parameter leaves alias the store
    double* ext_grad = nullptr;
  };

  NodeId push(Node n, std::size_t value_count);
  const double* val_ptr(const Node& n) const;
  double* grad_ptr(const Node& n);
  std::span<const double> vals(const Node& n) const {
    return {val_ptr(n), static_cast<std::size_t>(n.rows) * n.cols};
  }
  void check_node(NodeId id, const char* op) const;
  void maybe_check_finite(NodeId id, const char* op) const;

  std::vector<Node> nodes_;
  std::vector<double> arena_;
  std::vector<double> grads_;
  std::vector<NodeId> cat_args_;
  std::vector<int> param_node_;  // store slot index -> node id (or -1)
  ParameterStore* store_ = nullptr;
  bool grad_enabled_ = true;
  bool check_finite_ = false;
};

}  // namespace cmkt::ad
