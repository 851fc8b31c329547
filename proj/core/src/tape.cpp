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

#include "cmkt/tape.hpp"

#include <cmath>
#include <cstring>

#include "cmkt/errors.hpp"

namespace cmkt::ad {

namespace {

double sigmoid_scalar(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

NodeId Tape::push(Node n, std::size_t value_count) {
  if (n.ext_val == nullptr) {
    n.off = static_cast<std::int64_t>(arena_.size());
    arena_.resize(arena_.size() + value_count);
  }
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

const double* Tape::val_ptr(const Node& n) const {
  return n.ext_val != nullptr ? n.ext_val : arena_.data() + n.off;
}

double* Tape::grad_ptr(const Node& n) {
  return n.ext_grad != nullptr ? n.ext_grad : grads_.data() + n.off;
}

void Tape::check_node(NodeId id, const char* op) const {
  if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
    throw ShapeError(std::string(op) + ": invalid node id " + std::to_string(id));
  }
}

void Tape::maybe_check_finite(NodeId id, const char* op) const {
  if (!check_finite_) return;
  if (!all_finite(values(id))) {
    throw NumericError(std::string(op) + ": non-finite value in node " +
                       std::to_string(id));
  }
}

std::span<const double> Tape::values(NodeId id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  return vals(n);
}

double Tape::value(NodeId id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.rows != 1 || n.cols != 1) {
    throw ShapeError("value: node is " + shape_str(n.rows, n.cols) + ", not 1x1");
  }
  return *val_ptr(n);
}

Tensor Tape::tensor(NodeId id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  Tensor t(n.rows, n.cols);
  const auto v = vals(n);
  std::copy(v.begin(), v.end(), t.v.begin());
  return t;
}

std::span<const double> Tape::node_grad(NodeId id) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.off < 0) {
    throw ShapeError("node_grad: parameter leaves accumulate into the store");
  }
  return {grads_.data() + n.off, static_cast<std::size_t>(n.rows) * n.cols};
}

void Tape::reset() {
  nodes_.clear();
  arena_.clear();
  cat_args_.clear();
  std::fill(param_node_.begin(), param_node_.end(), -1);
}

NodeId Tape::constant(const Tensor& t) {
  Node n;
  n.op = Op::Const;
  n.rows = t.rows;
  n.cols = t.cols;
  const NodeId id = push(n, t.size());
  std::copy(t.v.begin(), t.v.end(), arena_.begin() + nodes_.back().off);
  return id;
}

NodeId Tape::constant_zeros(int rows, int cols) {
  Node n;
  n.op = Op::Const;
  n.rows = rows;
  n.cols = cols;
  return push(n, static_cast<std::size_t>(rows) * cols);
}

NodeId Tape::scalar(double x) {
  Node n;
  n.op = Op::Const;
  n.rows = 1;
  n.cols = 1;
  const NodeId id = push(n, 1);
  arena_[static_cast<std::size_t>(nodes_.back().off)] = x;
  return id;
}

NodeId Tape::param(std::string_view name) {
  if (store_ == nullptr) {
    throw DataError("tape has no parameter store attached");
  }
  const int slot_idx = store_->index_of(name);
  if (param_node_.size() < static_cast<std::size_t>(store_->size())) {
    param_node_.resize(static_cast<std::size_t>(store_->size()), -1);
  }
  if (param_node_[static_cast<std::size_t>(slot_idx)] >= 0) {
    return param_node_[static_cast<std::size_t>(slot_idx)];
  }
  ParameterStore::Slot& s = store_->slot(slot_idx);
  Node n;
  n.op = Op::Param;
  n.rows = s.value.rows;
  n.cols = s.value.cols;
  n.ext_val = s.value.data();
  n.ext_grad = s.grad.data();
  const NodeId id = push(n, 0);
  param_node_[static_cast<std::size_t>(slot_idx)] = id;
  return id;
}

NodeId Tape::row(NodeId table, int r) {
  check_node(table, "row");
  const Node& t = nodes_[static_cast<std::size_t>(table)];
  if (r < 0 || r >= t.rows) {
    throw ShapeError("row: index " + std::to_string(r) + " out of range for " +
                     shape_str(t.rows, t.cols));
  }
  Node n;
  n.op = grad_enabled_ ? Op::Row : Op::Const;
  n.a = table;
  n.c0 = static_cast<double>(r);
  n.rows = 1;
  n.cols = t.cols;
  const NodeId id = push(n, static_cast<std::size_t>(t.cols));
  const Node& tt = nodes_[static_cast<std::size_t>(table)];
  const double* src = val_ptr(tt) + static_cast<std::size_t>(r) * tt.cols;
  std::copy(src, src + tt.cols, arena_.begin() + nodes_.back().off);
  return id;
}

NodeId Tape::concat(std::span<const NodeId> parts) {
  if (parts.empty()) throw ShapeError("concat: no inputs");
  int total = 0;
  for (NodeId p : parts) {
    check_node(p, "concat");
    const Node& n = nodes_[static_cast<std::size_t>(p)];
    if (n.rows != 1) {
      throw ShapeError("concat: input is " + shape_str(n.rows, n.cols) +
                       ", expected a row vector");
    }
    total += n.cols;
  }
  Node n;
  n.op = grad_enabled_ ? Op::Concat : Op::Const;
  n.a = static_cast<NodeId>(cat_args_.size());
  n.b = static_cast<NodeId>(parts.size());
  n.rows = 1;
  n.cols = total;
  for (NodeId p : parts) cat_args_.push_back(p);
  const NodeId id = push(n, static_cast<std::size_t>(total));
  double* out = arena_.data() + nodes_.back().off;
  for (NodeId p : parts) {
    const Node& part = nodes_[static_cast<std::size_t>(p)];
    const double* src = val_ptr(part);
    std::memcpy(out, src, static_cast<std::size_t>(part.cols) * sizeof(double));
    out += part.cols;
  }
  return id;
}

NodeId Tape::matmul(NodeId a, NodeId b) {
  check_node(a, "matmul");
  check_node(b, "matmul");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  const Node& nb = nodes_[static_cast<std::size_t>(b)];
  if (na.cols != nb.rows) {
    throw ShapeError("matmul: lhs " + shape_str(na.rows, na.cols) + " rhs " +
                     shape_str(nb.rows, nb.cols) + " inner dimensions differ");
  }
  Node n;
  n.op = grad_enabled_ ? Op::MatMul : Op::Const;
  n.a = a;
  n.b = b;
  n.rows = na.rows;
  n.cols = nb.cols;
  const NodeId id = push(n, static_cast<std::size_t>(na.rows) * nb.cols);
  const Node& xa = nodes_[static_cast<std::size_t>(a)];
  const Node& xb = nodes_[static_cast<std::size_t>(b)];
  const double* A = val_ptr(xa);
  const double* B = val_ptr(xb);
  double* C = arena_.data() + nodes_.back().off;
  const int m = xa.rows, k = xa.cols, p = xb.cols;
  for (int i = 0; i < m; ++i) {
    double* ci = C + static_cast<std::size_t>(i) * p;
    for (int j = 0; j < p; ++j) ci[j] = 0.0;
    const double* ai = A + static_cast<std::size_t>(i) * k;
    for (int kk = 0; kk < k; ++kk) {
      const double aik = ai[kk];
      const double* bk = B + static_cast<std::size_t>(kk) * p;
      for (int j = 0; j < p; ++j) ci[j] += aik * bk[j];
    }
  }
  maybe_check_finite(id, "matmul");
  return id;
}

#define CMKT_BINARY_SAME_SHAPE(NAME, OP_ENUM, EXPR)                           \
  NodeId Tape::NAME(NodeId a, NodeId b) {                                     \
    check_node(a, #NAME);                                                     \
    check_node(b, #NAME);                                                     \
    const Node& na = nodes_[static_cast<std::size_t>(a)];                     \
    const Node& nb = nodes_[static_cast<std::size_t>(b)];                     \
    if (na.rows != nb.rows || na.cols != nb.cols) {                           \
      throw ShapeError(#NAME ": lhs " + shape_str(na.rows, na.cols) +         \
                       " rhs " + shape_str(nb.rows, nb.cols));                \
    }                                                                         \
    Node n;                                                                   \
    n.op = grad_enabled_ ? OP_ENUM : Op::Const;                               \
    n.a = a;                                                                  \
    n.b = b;                                                                  \
    n.rows = na.rows;                                                         \
    n.cols = na.cols;                                                         \
    const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);   \
    const auto va = vals(nodes_[static_cast<std::size_t>(a)]);                \
    const auto vb = vals(nodes_[static_cast<std::size_t>(b)]);                \
    double* out = arena_.data() + nodes_.back().off;                          \
    for (std::size_t i = 0; i < va.size(); ++i) out[i] = EXPR;                \
    maybe_check_finite(id, #NAME);                                            \
    return id;                                                                \
  }

CMKT_BINARY_SAME_SHAPE(add, Op::Add, va[i] + vb[i])
CMKT_BINARY_SAME_SHAPE(sub, Op::Sub, va[i] - vb[i])
CMKT_BINARY_SAME_SHAPE(mul, Op::Mul, va[i] * vb[i])
#undef CMKT_BINARY_SAME_SHAPE

NodeId Tape::div(NodeId a, NodeId b) {
  check_node(a, "div");
  check_node(b, "div");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  const Node& nb = nodes_[static_cast<std::size_t>(b)];
  if (nb.rows != 1 || nb.cols != 1) {
    throw ShapeError("div: divisor is " + shape_str(nb.rows, nb.cols) +
                     ", expected 1x1");
  }
  Node n;
  n.op = grad_enabled_ ? Op::Div : Op::Const;
  n.a = a;
  n.b = b;
  n.rows = na.rows;
  n.cols = na.cols;
  const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  const double denom = *val_ptr(nodes_[static_cast<std::size_t>(b)]);
  double* out = arena_.data() + nodes_.back().off;
  for (std::size_t i = 0; i < va.size(); ++i) out[i] = va[i] / denom;
  maybe_check_finite(id, "div");
  return id;
}

#define CMKT_UNARY(NAME, OP_ENUM, EXPR)                                       \
  NodeId Tape::NAME(NodeId a) {                                               \
    check_node(a, #NAME);                                                     \
    const Node& na = nodes_[static_cast<std::size_t>(a)];                     \
    Node n;                                                                   \
    n.op = grad_enabled_ ? OP_ENUM : Op::Const;                               \
    n.a = a;                                                                  \
    n.rows = na.rows;                                                         \
    n.cols = na.cols;                                                         \
    const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);   \
    const auto va = vals(nodes_[static_cast<std::size_t>(a)]);                \
    double* out = arena_.data() + nodes_.back().off;                          \
    for (std::size_t i = 0; i < va.size(); ++i) out[i] = EXPR;                \
    maybe_check_finite(id, #NAME);                                            \
    return id;                                                                \
  }

CMKT_UNARY(sigmoid, Op::Sigmoid, sigmoid_scalar(va[i]))
CMKT_UNARY(tanh, Op::Tanh, std::tanh(va[i]))
CMKT_UNARY(relu, Op::Relu, va[i] > 0.0 ? va[i] : 0.0)
CMKT_UNARY(square, Op::Square, va[i] * va[i])
CMKT_UNARY(log, Op::Log, std::log(va[i]))
CMKT_UNARY(neg, Op::Neg, -va[i])
#undef CMKT_UNARY

NodeId Tape::scale(NodeId a, double c) {
  check_node(a, "scale");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  Node n;
  n.op = grad_enabled_ ? Op::Scale : Op::Const;
  n.a = a;
  n.c0 = c;
  n.rows = na.rows;
  n.cols = na.cols;
  const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  double* out = arena_.data() + nodes_.back().off;
  for (std::size_t i = 0; i < va.size(); ++i) out[i] = va[i] * c;
  return id;
}

NodeId Tape::add_const(NodeId a, double c) {
  check_node(a, "add_const");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  Node n;
  n.op = grad_enabled_ ? Op::AddConst : Op::Const;
  n.a = a;
  n.c0 = c;
  n.rows = na.rows;
  n.cols = na.cols;
  const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  double* out = arena_.data() + nodes_.back().off;
  for (std::size_t i = 0; i < va.size(); ++i) out[i] = va[i] + c;
  return id;
}

NodeId Tape::rsub_const(double c, NodeId a) {
  check_node(a, "rsub_const");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  Node n;
  n.op = grad_enabled_ ? Op::RSubConst : Op::Const;
  n.a = a;
  n.c0 = c;
  n.rows = na.rows;
  n.cols = na.cols;
  const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  double* out = arena_.data() + nodes_.back().off;
  for (std::size_t i = 0; i < va.size(); ++i) out[i] = c - va[i];
  return id;
}

NodeId Tape::clamp(NodeId a, double lo, double hi) {
  check_node(a, "clamp");
  if (!(lo < hi)) throw ShapeError("clamp: lo must be < hi");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  Node n;
  n.op = grad_enabled_ ? Op::Clamp : Op::Const;
  n.a = a;
  n.c0 = lo;
  n.c1 = hi;
  n.rows = na.rows;
  n.cols = na.cols;
  const NodeId id = push(n, static_cast<std::size_t>(na.rows) * na.cols);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  double* out = arena_.data() + nodes_.back().off;
  for (std::size_t i = 0; i < va.size(); ++i) {
    out[i] = va[i] < lo ? lo : (va[i] > hi ? hi : va[i]);
  }
  return id;
}

NodeId Tape::sum(NodeId a) {
  check_node(a, "sum");
  Node n;
  n.op = grad_enabled_ ? Op::Sum : Op::Const;
  n.a = a;
  n.rows = 1;
  n.cols = 1;
  const NodeId id = push(n, 1);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  double acc = 0.0;
  for (double x : va) acc += x;
  arena_[static_cast<std::size_t>(nodes_.back().off)] = acc;
  return id;
}

NodeId Tape::dot(NodeId a, NodeId b) {
  check_node(a, "dot");
  check_node(b, "dot");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  const Node& nb = nodes_[static_cast<std::size_t>(b)];
  if (na.rows != 1 || nb.rows != 1 || na.cols != nb.cols) {
    throw ShapeError("dot: lhs " + shape_str(na.rows, na.cols) + " rhs " +
                     shape_str(nb.rows, nb.cols) + " must be equal-length row vectors");
  }
  Node n;
  n.op = grad_enabled_ ? Op::Dot : Op::Const;
  n.a = a;
  n.b = b;
  n.rows = 1;
  n.cols = 1;
  const NodeId id = push(n, 1);
  const auto va = vals(nodes_[static_cast<std::size_t>(a)]);
  const auto vb = vals(nodes_[static_cast<std::size_t>(b)]);
  double acc = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) acc += va[i] * vb[i];
  arena_[static_cast<std::size_t>(nodes_.back().off)] = acc;
  return id;
}

void Tape::backward(NodeId loss) {
  if (!grad_enabled_) {
    throw NumericError("backward: gradient tracking is disabled on this tape");
  }
  check_node(loss, "backward");
  const Node& ln = nodes_[static_cast<std::size_t>(loss)];
  if (ln.rows != 1 || ln.cols != 1) {
    throw ShapeError("backward: loss node is " + shape_str(ln.rows, ln.cols) +
                     ", expected 1x1 scalar");
  }
  grads_.assign(arena_.size(), 0.0);
  if (ln.off >= 0) {
    grads_[static_cast<std::size_t>(ln.off)] = 1.0;
  } else if (ln.ext_grad != nullptr) {
    ln.ext_grad[0] += 1.0;
    return;  // loss is a bare parameter; nothing upstream
  }

  // Reverse sweep from the loss node; inputs always precede their op, so
  // each node is finalized before its own contribution is propagated.
  for (std::size_t idx = static_cast<std::size_t>(loss) + 1; idx-- > 0;) {
    const Node& n = nodes_[idx];
    if (n.op == Op::Const || n.op == Op::Param) continue;
    const double* g = grad_ptr(const_cast<Node&>(n));
    const std::size_t count = static_cast<std::size_t>(n.rows) * n.cols;
    switch (n.op) {
      case Op::Row: {
        Node& ta = nodes_[static_cast<std::size_t>(n.a)];
        double* tg = grad_ptr(ta);
        const int r = static_cast<int>(n.c0);
        double* dst = tg + static_cast<std::size_t>(r) * ta.cols;
        for (std::size_t i = 0; i < count; ++i) dst[i] += g[i];
        break;
      }
      case Op::Concat: {
        const int first = n.a;
        const int nparts = n.b;
        const double* gp = g;
        for (int p = 0; p < nparts; ++p) {
          Node& part = nodes_[static_cast<std::size_t>(
              cat_args_[static_cast<std::size_t>(first + p)])];
          double* pg = grad_ptr(part);
          for (int i = 0; i < part.cols; ++i) pg[i] += gp[i];
          gp += part.cols;
        }
        break;
      }
      case Op::MatMul: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        Node& nb = nodes_[static_cast<std::size_t>(n.b)];
        const double* A = val_ptr(na);
        const double* B = val_ptr(nb);
        double* dA = grad_ptr(na);
        double* dB = grad_ptr(nb);
        const int m = na.rows, k = na.cols, p = nb.cols;
        // dA += g . B^T
        for (int i = 0; i < m; ++i) {
          const double* gi = g + static_cast<std::size_t>(i) * p;
          double* dAi = dA + static_cast<std::size_t>(i) * k;
          for (int kk = 0; kk < k; ++kk) {
            const double* bk = B + static_cast<std::size_t>(kk) * p;
            double acc = 0.0;
            for (int j = 0; j < p; ++j) acc += gi[j] * bk[j];
            dAi[kk] += acc;
          }
        }
        // dB += A^T . g
        for (int i = 0; i < m; ++i) {
          const double* ai = A + static_cast<std::size_t>(i) * k;
          const double* gi = g + static_cast<std::size_t>(i) * p;
          for (int kk = 0; kk < k; ++kk) {
            const double aik = ai[kk];
            double* dBk = dB + static_cast<std::size_t>(kk) * p;
            for (int j = 0; j < p; ++j) dBk[j] += aik * gi[j];
          }
        }
        break;
      }
      case Op::Add: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        Node& nb = nodes_[static_cast<std::size_t>(n.b)];
        double* da = grad_ptr(na);
        double* db = grad_ptr(nb);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i];
        for (std::size_t i = 0; i < count; ++i) db[i] += g[i];
        break;
      }
      case Op::Sub: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        Node& nb = nodes_[static_cast<std::size_t>(n.b)];
        double* da = grad_ptr(na);
        double* db = grad_ptr(nb);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i];
        for (std::size_t i = 0; i < count; ++i) db[i] -= g[i];
        break;
      }
      case Op::Mul: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        Node& nb = nodes_[static_cast<std::size_t>(n.b)];
        const double* va = val_ptr(na);
        const double* vb = val_ptr(nb);
        double* da = grad_ptr(na);
        double* db = grad_ptr(nb);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i] * vb[i];
        for (std::size_t i = 0; i < count; ++i) db[i] += g[i] * va[i];
        break;
      }
      case Op::Div: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        Node& nb = nodes_[static_cast<std::size_t>(n.b)];
        const double* va = val_ptr(na);
        const double denom = *val_ptr(nb);
        double* da = grad_ptr(na);
        double* db = grad_ptr(nb);
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
          da[i] += g[i] / denom;
          acc += g[i] * va[i];
        }
        db[0] -= acc / (denom * denom);
        break;
      }
      case Op::Sigmoid: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        const double* y = val_ptr(n);
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i] * y[i] * (1.0 - y[i]);
        break;
      }
      case Op::Tanh: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        const double* y = val_ptr(n);
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i] * (1.0 - y[i] * y[i]);
        break;
      }
      case Op::Relu: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        const double* x = val_ptr(na);
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) {
          if (x[i] > 0.0) da[i] += g[i];
        }
        break;
      }
      case Op::Square: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        const double* x = val_ptr(na);
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i] * 2.0 * x[i];
        break;
      }
      case Op::Log: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        const double* x = val_ptr(na);
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i] / x[i];
        break;
      }
      case Op::Neg: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] -= g[i];
        break;
      }
      case Op::Scale: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i] * n.c0;
        break;
      }
      case Op::AddConst: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] += g[i];
        break;
      }
      case Op::RSubConst: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) da[i] -= g[i];
        break;
      }
      case Op::Clamp: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        const double* x = val_ptr(na);
        double* da = grad_ptr(na);
        for (std::size_t i = 0; i < count; ++i) {
          if (x[i] > n.c0 && x[i] < n.c1) da[i] += g[i];
        }
        break;
      }
      case Op::Sum: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        double* da = grad_ptr(na);
        const double gg = g[0];
        const std::size_t an = static_cast<std::size_t>(na.rows) * na.cols;
        for (std::size_t i = 0; i < an; ++i) da[i] += gg;
        break;
      }
      case Op::Dot: {
        Node& na = nodes_[static_cast<std::size_t>(n.a)];
        Node& nb = nodes_[static_cast<std::size_t>(n.b)];
        const double* va = val_ptr(na);
        const double* vb = val_ptr(nb);
        double* da = grad_ptr(na);
        double* db = grad_ptr(nb);
        const double gg = g[0];
        const std::size_t an = static_cast<std::size_t>(na.cols);
        for (std::size_t i = 0; i < an; ++i) {
          da[i] += gg * vb[i];
          db[i] += gg * va[i];
        }
        break;
      }
      case Op::Const:
      case Op::Param:
        break;
    }
  }
}

}  // namespace cmkt::ad
