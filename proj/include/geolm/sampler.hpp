#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "geolm/geograph.hpp"

// Weighted random walks over the frozen graph, one per start node, rendered
// into a line-per-document pre-training corpus.
namespace geolm::sampler {

struct WalkConfig {
  int walk_length = 9;  // sampled steps beyond the start; documents then hold <= 10 nodes
  double lambda_qcp = 0.5;
  double lambda_otd = 0.25;
  double lambda_pcp = 0.25;
  uint64_t seed = 0;

  // walk_length >= 1, lambdas >= 0 with a positive sum; throws ValidationError.
  void validate() const;
};

struct WalkDocument {
  uint32_t start_id = 0;
  std::vector<uint32_t> node_ids;  // begins with start_id; length <= walk_length + 1
};

// One-step distribution from v: each type-t neighbor receives
// lambda_t / |N_t(v)|, a neighbor reachable through several types sums its
// contributions, and the map is rescaled by the lambda-sum of the types
// actually present at v so it totals 1. Sorted by node id; empty when v is
// isolated (or every present type has lambda 0).
std::vector<std::pair<uint32_t, double>> transition_distribution(const graph::HeteroGraph& g,
                                                                 uint32_t v,
                                                                 const WalkConfig& cfg);

// Walks walk_length steps from `start`, stopping early at a dead end. The RNG
// stream is keyed by (cfg.seed, start), so the result is independent of what
// other walks run around it.
WalkDocument sample_walk(const graph::HeteroGraph& g, uint32_t start, const WalkConfig& cfg);

struct CorpusStats {
  size_t documents = 0;
  size_t nodes = 0;
  double mean_length() const { return documents ? static_cast<double>(nodes) / documents : 0.0; }
};

// One document per line: nodes joined by "⏐" (U+23D0), each rendered as
// "TYPE\ttext\tgeocode-or-empty" (TYPE is POI or QUERY; geocode only on POI
// nodes). Newlines or separator characters inside node text are replaced by
// spaces so the line format stays parseable.
std::string render_document(const graph::HeteroGraph& g, const WalkDocument& doc);

// One walk per node in id order. Parallel inside, but byte-identical output
// for any thread count (num_threads 0 = the OpenMP runtime default).
CorpusStats generate_corpus(const graph::HeteroGraph& g, const WalkConfig& cfg,
                            std::ostream& sink, int num_threads = 0);

// Inverse of render_document for one line (used by the masking stage).
struct CorpusNode {
  std::string type;     // "POI" / "QUERY"
  std::string text;
  std::string geocode;  // 33 chars or empty
};
std::vector<CorpusNode> parse_corpus_line(const std::string& line);

}  // namespace geolm::sampler
