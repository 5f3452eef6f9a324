#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geolm/dgg.hpp"
#include "geolm/masker.hpp"
#include "geolm/numerics.hpp"

// The pre-training network: a per-node Transformer encoder, type-aware
// attention across the nodes of one walk document (TranSAGE), a fusion
// layer, and two heads - masked-token prediction over context tokens and a
// 33-way-by-16-class geocode decoder over the fused [CLS] state.
namespace geolm::model {

struct ModelConfig {
  size_t d_h = 64;       // hidden width
  size_t layers = 2;     // encoder depth
  size_t heads = 4;      // attention heads (d_h divisible by heads)
  size_t vocab = 0;      // token vocabulary size (set from the tokenizer)
  size_t max_len = 64;   // maximum tokens per node, [CLS] included
  size_t node_types = 2; // POI, query
  size_t geo_positions = 33;
  size_t geo_alphabet = 16;
  bool use_positional = true;     // off enables permutation-equivariance checks
  bool transage_residual = false; // adds residual + layer norm around TranSAGE
  double mlm_weight = 1.0;        // loss mix; zero disables a task
  double geo_weight = 1.0;

  size_t head_dim() const { return d_h / heads; }
  void validate() const;
  std::map<std::string, std::string> to_metadata() const;
  static ModelConfig from_metadata(const std::map<std::string, std::string>& meta);
};

// One leaf per parameter per tape, shared across every use in the step so
// gradients accumulate; collect() hands the gradient map to the optimizer.
class ParamBinding {
 public:
  ParamBinding(num::Tape& tape, num::ParameterStore& store) : tape_(tape), store_(store) {}
  num::Tape::V operator()(const std::string& name);
  std::map<std::string, const num::Tensor*> collect_grads() const;

 private:
  num::Tape& tape_;
  num::ParameterStore& store_;
  std::map<std::string, num::Tape::V> cache_;
};

struct NodeInput {
  std::vector<uint32_t> token_ids;  // [CLS]-prefixed
  uint8_t node_type = 0;            // 0 = POI, 1 = query
};

struct Encoded {
  num::Tape::V h_cls;                         // 1 x d_h
  std::optional<num::Tape::V> h_context;      // (T-1) x d_h, absent when only [CLS]
  bool truncated = false;
};

struct Fused {
  num::Tape::V h_cls_hat;                     // 1 x d_h (geocoding input)
  std::optional<num::Tape::V> h_context_hat;  // (T-1) x d_h (MLM input)
};

struct MlmOutput {
  num::Tape::V logits;     // C x vocab over context rows
  num::Tape::V loss_mean;  // mean cross-entropy over masked rows (0 when none)
  num::Tape::V loss_sum;
  size_t masked = 0;       // flag: masked == 0 means the loss is the empty default
};

struct DocLoss {
  num::Tape::V total;
  double mlm = 0.0;       // forward values, for curves
  double geo = 0.0;
  size_t masked = 0;      // masked positions contributing to MLM
  size_t geocoded = 0;    // POI nodes contributing to geocoding
};

class Model {
 public:
  Model(ModelConfig cfg, uint64_t seed);            // fresh Gaussian init
  explicit Model(num::ParameterStore store);        // config read from metadata

  const ModelConfig& config() const { return cfg_; }
  num::ParameterStore& store() { return store_; }
  const num::ParameterStore& store() const { return store_; }

  // Token sequence ([CLS] first) -> per-node representation. Sequences past
  // max_len are truncated (flagged on the result).
  Encoded encode_node(num::Tape& tape, ParamBinding& params,
                      const std::vector<uint32_t>& token_ids) const;

  // Stacked h_cls rows (n x d_h) + node types -> cross-node representations
  // (n x d_h). Per head and node type there is a distinct Q/K projection;
  // the attention values are the unprojected input rows, and the
  // concatenated heads pass through the (heads*d_h) x d_h output matrix.
  // attention_out, when given, receives each head's n x n softmax matrix.
  num::Tape::V transage(num::Tape& tape, ParamBinding& params, num::Tape::V H,
                        const std::vector<uint8_t>& node_types,
                        std::vector<num::Tape::V>* attention_out = nullptr) const;

  // Replaces the node's h_cls with its TranSAGE row and runs one more
  // Transformer layer over the node's sequence.
  Fused fuse_and_output(num::Tape& tape, ParamBinding& params, const Encoded& enc,
                        num::Tape::V h_tilde_row) const;

  // context_labels align with the context rows (original token id at masked
  // rows, -1 elsewhere).
  MlmOutput mlm_head(num::Tape& tape, ParamBinding& params, num::Tape::V h_context,
                     const std::vector<int32_t>& context_labels) const;

  // 33 independent linear classifiers over the fused [CLS] state.
  num::Tape::V geocoding_logits(num::Tape& tape, ParamBinding& params,
                                num::Tape::V h_cls_hat) const;  // 33 x 16
  num::Tape::V geocoding_loss(num::Tape& tape, ParamBinding& params, num::Tape::V h_cls_hat,
                              const dgg::MultiLevelCode& target) const;  // sum of 33 CEs

  // Full forward pass over one masked walk document; loss terms weighted by
  // the config pair (a zero weight skips that head entirely).
  DocLoss document_loss(num::Tape& tape, ParamBinding& params,
                        const masker::MaskedExample& doc) const;

  // --- inference (no tape kept) ---
  // Single-node mode: h_cls of the node's own encoder pass.
  num::Tensor embed_single(const std::vector<uint32_t>& token_ids) const;
  // Graph mode: h_cls_hat of the target node after TranSAGE over the whole
  // document and fusion.
  num::Tensor embed_graph(const std::vector<NodeInput>& doc, size_t target) const;
  // Softmax rows of the target's geocode logits (33 x 16), graph mode.
  num::Tensor geocode_probabilities(const std::vector<NodeInput>& doc, size_t target) const;

  static uint8_t node_type_of(const masker::MaskedNode& node) { return node.is_poi ? 0 : 1; }

 private:
  num::Tape::V transformer_layer(num::Tape& tape, ParamBinding& params,
                                 const std::string& prefix, num::Tape::V x) const;
  Fused fused_forward(num::Tape& tape, ParamBinding& params, const std::vector<NodeInput>& doc,
                      size_t target) const;
  void init_params(uint64_t seed);
  void validate_schema() const;

  ModelConfig cfg_;
  num::ParameterStore store_;
};

struct PretrainConfig {
  int64_t steps = 2000;            // additional steps to run
  double lr = 5e-5;
  double beta1 = 0.9;              // Adam first-moment decay
  double beta2 = 0.999;            // Adam second-moment decay
  int64_t lr_decay_steps = 0;      // 0 = constant learning rate
  int64_t checkpoint_every = 500;  // 0 = only the final checkpoint
  std::string checkpoint_path;     // empty = keep everything in memory
};

struct PretrainResult {
  std::vector<double> losses;  // total loss per step
  std::vector<double> mlm_losses;
  std::vector<double> geo_losses;
  int64_t final_step = 0;
  std::string checkpoint_path;
};

// Cycles the documents in order, one Adam step per document, deterministic
// given the model seed. The document index continues from the stored step
// count, so resuming from a checkpoint bit-continues the trace. A non-finite
// loss raises NumericError naming the last good checkpoint.
PretrainResult pretrain(Model& model, const masker::MaskedCorpus& corpus,
                        const PretrainConfig& cfg);

}  // namespace geolm::model
