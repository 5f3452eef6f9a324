#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geolm/masker.hpp"
#include "geolm/model.hpp"
#include "geolm/sampler.hpp"

// Pipeline-wide configuration: one flat key=value file with section prefixes
// (paths.*, graph.*, walk.*, mask.*, model.*, pretrain.*, task.*) plus the
// global `seed`. The same struct serializes back to a canonical text form
// that every artifact-writing stage echoes for provenance, so experiment
// configs stay diffable and runs stay reproducible.
namespace geolm {

struct PipelineConfig {
  uint64_t seed = 42;

  struct Paths {
    std::string pois;        // POI records (JSONL)
    std::string clicks;      // query click records (JSONL)
    std::string sessions;    // visit session records (JSONL)
    std::string snapshot;    // graph snapshot binary
    std::string corpus;      // walk corpus (one document per line)
    std::string vocab;       // tokenizer vocabulary (one token per line)
    std::string masked;      // masked corpus binary
    std::string checkpoint;  // model parameter checkpoint
    std::string dataset;     // fine-tune / eval dataset (JSONL)
    std::string candidates;  // recommendation candidate pool (JSONL)
    std::string report;      // metric report (JSON)
    std::string loss_curve;  // pre-training loss curve (JSON)
    std::string embeddings;  // embedding dump (JSONL)
  } paths;

  struct Graph {
    size_t qcp_top_k = 4;   // strongest queries kept per POI
    int pcp_level = 15;     // co-location grid level
    size_t pcp_cap = 256;   // dense-cell neighbor cap
    bool qcp_edges = true;  // ingest query-click edges
    bool otd_edges = true;  // ingest session-transition edges
    bool pcp_edges = true;  // build co-location edges
  } graph;

  sampler::WalkConfig walk;      // walk.length, walk.lambda_*; seed = global seed
  bool walk_graphless = false;   // walk.graphless: one single-node document per POI

  masker::MaskConfig mask;       // mask.select_prob, mask.p_*
  size_t mask_max_vocab = 20000; // mask.max_vocab: tokenizer size cap

  model::ModelConfig model;      // model.* (same keys as checkpoint metadata)

  struct Pretrain {
    size_t steps = 2000;
    double lr = 5e-5;
    double beta1 = 0.9;         // Adam first-moment decay
    double beta2 = 0.999;       // Adam second-moment decay
    size_t lr_decay_steps = 0;  // 0 = constant learning rate
    size_t checkpoint_every = 500;
  } pretrain;

  struct Task {
    size_t epochs = 3;
    double lr = 1e-3;
    size_t classes = 4;      // classification / matching label count
    std::string tags = "O";  // comma-separated BIO tag inventory
    size_t k = 50;           // recommendation Acc@K cutoff
    double n_km = 3.0;       // geocoding Acc@N radius (km)
    size_t top_n = 10;       // analogy neighbor list length
  } task;

  // Assigns one key. Unknown keys or unparseable values throw ParseError.
  void apply(const std::string& key, const std::string& value);

  // Cross-field validation (delegates to the owning modules); ValidationError.
  void validate() const;

  // Canonical text form: every key, fixed order, one per line. parse() of the
  // output reproduces the struct exactly.
  std::string serialize() const;
  std::vector<std::pair<std::string, std::string>> items() const;

  // `origin` names the source in errors ("path" or "<flag>"). Blank lines and
  // full-line # comments are skipped; keys may repeat (last one wins).
  static PipelineConfig parse_text(const std::string& text, const std::string& origin);
  static PipelineConfig load(const std::string& path);

  std::vector<std::string> tag_names() const;  // task.tags split on commas
};

}  // namespace geolm
