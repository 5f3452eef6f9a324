#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

// Dense float64 tensors with reverse-mode differentiation over a per-step
// tape, an Adam optimizer over a named parameter store, and a checkpoint
// container. Everything is CPU-only and deterministic: fixed seeds give
// bit-identical traces (kernels accumulate in a fixed order even when
// parallel).
namespace geolm::num {

using Shape = std::vector<size_t>;
std::string shape_str(const Shape& s);  // "3x4" style, for error messages

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);  // zero-filled
  Tensor(Shape shape, std::vector<double> values);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, double value);
  // Gaussian init via Box-Muller on the given engine (two draws per element,
  // no library distribution, so streams are reproducible everywhere).
  static Tensor randn(Shape shape, std::mt19937_64& rng, double stddev);

  const Shape& shape() const { return shape_; }
  size_t rank() const { return shape_.size(); }
  size_t size() const { return values_.size(); }
  // Rank-2 accessors; every tape op works on matrices (vectors are 1 x m).
  size_t rows() const;
  size_t cols() const;
  double& at(size_t r, size_t c);
  double at(size_t r, size_t c) const;

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  const std::vector<double>& values() const { return values_; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

 private:
  Shape shape_;
  std::vector<double> values_;
};

// Uniform double in [0, 1) from the top 53 bits (shared RNG discipline).
double unit_double(std::mt19937_64& rng);

enum class Reduction { kMean, kSum };

// Reverse-mode tape. Build the forward graph through the member ops, call
// backward() once on a scalar root, then read gradients; the tape is meant
// to be discarded after each step. Handles are indices, cheap to copy.
class Tape {
 public:
  struct V {
    size_t idx = static_cast<size_t>(-1);
  };

  // Leaf holding a copy of `t`; gradients accumulate on the tape node and
  // are read back via grad(). Constants and parameters use the same entry
  // point - callers simply never read a constant's gradient.
  V leaf(const Tensor& t);

  const Tensor& value(V v) const;
  const Tensor& grad(V v) const;  // valid after backward()

  // (n x k) * (k x m) -> n x m
  V matmul(V a, V b);
  V add(V a, V b);            // same shape
  V sub(V a, V b);            // same shape
  V mul_scalar(V a, double s);
  V transpose(V a);
  V concat(const std::vector<V>& parts, int axis);  // 0 = stack rows, 1 = side by side
  V slice_rows(V a, size_t start, size_t count);
  V softmax(V a);        // row-wise
  V logsumexp_rows(V a); // (n x m) -> (n x 1)
  V add_rowvec(V a, V row);  // (n x m) + (1 x m), broadcast down rows
  V add_colvec(V a, V col);  // (n x m) + (n x 1), broadcast across columns
  V layer_norm(V a, V gamma, V beta);  // per row; gamma/beta are 1 x m
  V gelu(V a);                         // exact erf form
  V embedding_lookup(V table, const std::vector<uint32_t>& ids);
  // Rows with label -1 are ignored. Zero labeled rows -> loss 0.
  V cross_entropy(V logits, const std::vector<int32_t>& labels,
                  Reduction reduction = Reduction::kMean);
  V pick(V a, size_t r, size_t c);  // single entry as a 1 x 1 value

  // Seeds d(root)=1 and runs the recorded graph in reverse. Root must hold
  // exactly one element. One shot per tape.
  void backward(V root);

  size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::function<void()> back;  // empty for leaves
  };
  V push(Tensor value, std::function<void()> back = {});
  Node& node(V v);
  const Node& node(V v) const;
  static constexpr double kLayerNormEps = 1e-12;

  // Deque keeps value()/grad() references stable while later ops append.
  std::deque<Node> nodes_;
  bool backward_done_ = false;
};

struct AdamConfig {
  double lr = 5e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Linearly decaying learning rate: base * max(0, 1 - step/total).
double linear_decay_lr(double base_lr, int64_t step, int64_t total_steps);

// Named parameters plus per-parameter Adam moments and the shared step
// count; save/load round-trips bit-exactly, metadata strings included.
class ParameterStore {
 public:
  Tensor& create(const std::string& name, Tensor init);  // duplicate name throws
  Tensor& get(const std::string& name);
  const Tensor& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;  // sorted
  size_t count() const { return params_.size(); }

  int64_t step() const { return step_; }
  const Tensor& moment1(const std::string& name) const;
  const Tensor& moment2(const std::string& name) const;

  std::map<std::string, std::string>& metadata() { return meta_; }
  const std::map<std::string, std::string>& metadata() const { return meta_; }

  void save(const std::string& path) const;
  static ParameterStore load(const std::string& path);

 private:
  friend void adam_step(ParameterStore&, const std::map<std::string, const Tensor*>&,
                        const AdamConfig&);
  struct Slot {
    Tensor value;
    Tensor m1;  // first moment
    Tensor m2;  // second moment
  };
  std::map<std::string, Slot> params_;
  std::map<std::string, std::string> meta_;
  int64_t step_ = 0;
};

// One Adam update over every parameter, in name order. Parameters missing
// from `grads` are treated as zero-gradient (their moments still decay).
// Unknown gradient names or shape mismatches throw; any non-finite gradient
// value throws NumericError naming the parameter and flat index.
void adam_step(ParameterStore& store, const std::map<std::string, const Tensor*>& grads,
               const AdamConfig& cfg = {});

}  // namespace geolm::num
