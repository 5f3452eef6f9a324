#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geolm/dgg.hpp"
#include "geolm/masker.hpp"
#include "geolm/model.hpp"
#include "geolm/numerics.hpp"

// Downstream harnesses over a pre-trained model: text classification (incl.
// 4-level query-POI matching), CRF sequence labeling with entity-level F1,
// geocode prediction with Acc@N-km, two-tower next-POI recommendation with
// Acc@K, and the vector-arithmetic analogy probe. Datasets are JSON lines;
// metric reports are JSON {metric, value, n}.
namespace geolm::tasks {

// ---------------------------------------------------------------- datasets
struct ClassifyExample {
  std::string text;  // matching tasks pre-join as "query [SEP] poi-text"
  int32_t label = 0;
};

struct TaggingExample {
  std::string text;
  std::vector<std::string> tags;  // BIO, one per token of text
};

struct GeocodeExample {
  std::string text;
  dgg::LatLng point;
};

struct RecommendCase {
  std::vector<std::string> history;  // visited POI texts, oldest first
  std::string gold;                  // candidate id that was visited next
};

struct Candidate {
  std::string id;
  std::string text;
};

struct AnalogyExample {
  std::string a, b, c;  // a - b + c
  std::string expected; // optional; empty = unscored probe
};

std::vector<ClassifyExample> load_classify_jsonl(const std::string& path);
std::vector<TaggingExample> load_tagging_jsonl(const std::string& path);
std::vector<GeocodeExample> load_geocode_jsonl(const std::string& path);
std::vector<RecommendCase> load_recommend_jsonl(const std::string& path);
std::vector<Candidate> load_candidates_jsonl(const std::string& path);
std::vector<AnalogyExample> load_analogy_jsonl(const std::string& path);

struct MetricReport {
  std::string metric;
  double value = 0.0;
  size_t n = 0;
};
void write_metric_report(const std::string& path, const MetricReport& report);

// ------------------------------------------------------------- fine-tuning
struct FinetuneConfig {
  int64_t epochs = 3;
  double lr = 1e-3;
};

// Linear head over the single-node [CLS] encoding; trains head + backbone,
// one Adam step per example in dataset order. Returns final-epoch training
// accuracy. Head parameters live at task.cls.* in the model's store.
double finetune_classifier(model::Model& m, const masker::WordTokenizer& tok,
                           const std::vector<ClassifyExample>& train, size_t classes,
                           const FinetuneConfig& cfg);
int32_t classify_predict(const model::Model& m, const masker::WordTokenizer& tok,
                         const std::string& text);
double classify_accuracy(const model::Model& m, const masker::WordTokenizer& tok,
                         const std::vector<ClassifyExample>& dataset);

// ---------------------------------------------------------------- CRF head
// Emissions are L x T rows (one per token); transitions T x T; start/stop
// 1 x T. Loss is the forward-algorithm negative log-likelihood of the tag
// path; decode is the Viterbi argmax.
num::Tape::V crf_loss(num::Tape& tape, num::Tape::V emissions, const std::vector<int32_t>& tags,
                      num::Tape::V transition, num::Tape::V start, num::Tape::V stop);
std::vector<int32_t> crf_decode(const num::Tensor& emissions, const num::Tensor& transition,
                                const num::Tensor& start, const num::Tensor& stop);

// Tagging harness: token emissions from the context rows of the single-node
// encoding, CRF on top (parameters at task.crf.*). Tags use BIO over the
// given chunk types: "O", "B-<type>", "I-<type>".
void finetune_tagger(model::Model& m, const masker::WordTokenizer& tok,
                     const std::vector<TaggingExample>& train,
                     const std::vector<std::string>& tag_names, const FinetuneConfig& cfg);
std::vector<std::string> tagger_predict(const model::Model& m, const masker::WordTokenizer& tok,
                                        const std::string& text,
                                        const std::vector<std::string>& tag_names);

// ----------------------------------------------------------- entity F1
struct Chunk {
  std::string type;
  size_t begin = 0;  // token span, half-open
  size_t end = 0;
  bool operator==(const Chunk& o) const {
    return type == o.type && begin == o.begin && end == o.end;
  }
};

// BIO -> chunks; a dangling I-x (after O, sequence start, or another type)
// is repaired to B-x, with repairs counted when a counter is given.
std::vector<Chunk> bio_chunks(const std::vector<std::string>& tags, size_t* repairs = nullptr);

struct F1Result {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t repairs = 0;
};
F1Result entity_f1(const std::vector<std::vector<std::string>>& gold,
                   const std::vector<std::vector<std::string>>& pred);

// ------------------------------------------------------------- geocoding
struct GeocodePrediction {
  dgg::LatLng point;       // center of the decoded cell
  int level = 0;           // decoded cell level (22 when fully consistent)
  std::string token;       // decoded cell token
  bool inconsistent = false;  // argmax code was not a valid 22-level ladder
};

// Argmax each of the 33 positions, then decode; an inconsistent ladder falls
// back to the deepest consistent prefix cell and is flagged.
GeocodePrediction geocode_from_probs(const num::Tensor& probs_33x16);
GeocodePrediction geocode_predict(const model::Model& m, const masker::WordTokenizer& tok,
                                  const std::string& text);

// Trains the geocoding head (and backbone) on (text -> level-22 code).
void finetune_geocoder(model::Model& m, const masker::WordTokenizer& tok,
                       const std::vector<GeocodeExample>& train, const FinetuneConfig& cfg);

double haversine_km(const dgg::LatLng& a, const dgg::LatLng& b);  // R = 6371.0088
double acc_at_n_km(const std::vector<dgg::LatLng>& pred, const std::vector<dgg::LatLng>& gold,
                   double n_km = 3.0);

// --------------------------------------------------------- recommendation
// Candidate tower: single-node embedding of the candidate text. History
// tower: graph-mode embedding of the history chain (fused state of the most
// recent visit). Scores are cosine; ranking is exact and ties break toward
// the lower candidate index.
std::vector<size_t> rank_by_cosine(const num::Tensor& query,
                                   const std::vector<num::Tensor>& candidates);
num::Tensor history_embedding(const model::Model& m, const masker::WordTokenizer& tok,
                              const std::vector<std::string>& history);
double recommend_acc_at_k(const model::Model& m, const masker::WordTokenizer& tok,
                          const std::vector<RecommendCase>& cases,
                          const std::vector<Candidate>& candidates, size_t k = 50);

// -------------------------------------------------------------- analogy
// Top-n candidate texts by cosine to embed(a) - embed(b) + embed(c).
std::vector<std::pair<std::string, double>> analogy_rank(
    const model::Model& m, const masker::WordTokenizer& tok, const std::string& a,
    const std::string& b, const std::string& c, const std::vector<std::string>& candidates,
    size_t top_n = 10);

}  // namespace geolm::tasks
