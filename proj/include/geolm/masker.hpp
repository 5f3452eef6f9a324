#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geolm/dgg.hpp"
#include "geolm/sampler.hpp"

// Whole-entity masking: walk documents become MLM training examples where
// complete entities (dictionary-matched word spans) are selected together,
// and each word of a selected entity is masked, misspelled, randomized, or
// kept under a fixed action schedule.
namespace geolm::masker {

// Word-level tokenizer: splits on whitespace, then peels ASCII punctuation
// into single-character tokens (bytes >= 0x80 count as word characters, so
// UTF-8 text stays intact). Bracketed specials like "[SEP]" survive as one
// token. Vocabulary is corpus-built; unknown tokens map to [UNK].
class WordTokenizer {
 public:
  static constexpr uint32_t kPad = 0, kUnk = 1, kCls = 2, kSep = 3, kMask = 4;
  static constexpr uint32_t kNumSpecials = 5;

  // Counts tokens over corpus lines (the sampler's line format) and keeps the
  // max_vocab-5 most frequent (ties to the lexicographically smaller token).
  static WordTokenizer build_from_corpus(std::istream& corpus_lines, size_t max_vocab = 20000);
  // From an explicit id-ordered token list that must start with the specials.
  static WordTokenizer from_tokens(std::vector<std::string> tokens);

  static std::vector<std::string> split_words(std::string_view text);    // whitespace split
  static std::vector<std::string> word_tokens(std::string_view word);    // punctuation split

  std::vector<std::string> tokenize(std::string_view text) const;
  std::vector<uint32_t> encode(std::string_view text) const;             // no [CLS] added
  uint32_t token_id(std::string_view token) const;                       // kUnk when absent
  const std::string& token_text(uint32_t id) const;
  size_t vocab_size() const { return tokens_.size(); }
  uint64_t fingerprint() const;  // FNV-1a over the id-ordered token list

  void save_vocab(const std::string& path) const;  // one token per line
  static WordTokenizer load_vocab(const std::string& path);

 private:
  WordTokenizer() = default;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, uint32_t> ids_;
};

// Greedy longest-match entity segmentation over whitespace-word sequences;
// words covered by no dictionary entity become single-word segments.
class Segmenter {
 public:
  static Segmenter from_entities(const std::vector<std::string>& entities);

  // Half-open word-index ranges covering [0, words.size()) without overlap.
  std::vector<std::pair<size_t, size_t>> segment(const std::vector<std::string>& words) const;
  size_t entity_count() const { return entries_; }

 private:
  // first word -> candidate word sequences, longest first
  std::unordered_map<std::string, std::vector<std::vector<std::string>>> by_first_;
  size_t entries_ = 0;
};

// Entity strings mined from the POI table: every name and type, plus the
// comma-separated components of every address.
std::vector<std::string> entity_dictionary(const graph::HeteroGraph& g);

// Misspellings mined from click logs: query words absent from the clicked
// POI's name attach to the nearest name word when the normalized edit
// distance (Levenshtein / longer length) is at most 0.5.
class MisspellLexicon {
 public:
  static MisspellLexicon build(
      const std::vector<std::pair<std::string, std::string>>& query_name_pairs);

  void add(const std::string& correct, const std::string& misspelling);
  // nullptr when the word has no known misspellings; entries carry counts.
  const std::vector<std::pair<std::string, int64_t>>* lookup(const std::string& word) const;
  size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::pair<std::string, int64_t>>> entries_;
};

size_t levenshtein(std::string_view a, std::string_view b);

enum class MaskAction : uint8_t { kMask = 0, kMisspell = 1, kRandom = 2, kKeep = 3 };
inline constexpr size_t kNumMaskActions = 4;
inline constexpr uint8_t kNoAction = 0xff;
inline constexpr int32_t kNoLabel = -1;

struct MaskConfig {
  double select_prob = 0.15;  // per entity
  double p_mask = 0.70;       // per word of a selected entity
  double p_misspell = 0.10;   // falls back to RANDOM without a usable lexicon entry
  double p_random = 0.10;
  double p_keep = 0.10;
  void validate() const;
};

struct MaskedNode {
  bool is_poi = false;
  std::vector<uint32_t> token_ids;  // [CLS] + text tokens, post-replacement
  std::vector<int32_t> labels;      // original ids at masked positions, else kNoLabel
  std::vector<uint8_t> actions;     // MaskAction at masked positions, else kNoAction
  std::optional<dgg::MultiLevelCode> geocode;  // POI nodes only

  std::vector<size_t> mask_positions() const;
};

struct MaskedExample {
  std::vector<MaskedNode> nodes;
};

struct MaskStats {
  size_t entities = 0;
  size_t selected_entities = 0;
  size_t actions[4] = {0, 0, 0, 0};  // indexed by MaskAction, counted per word
};

// Masks one document. Draws from `rng` in a fixed order (per node, per
// segment: one selection draw; per word of a selected segment: one action
// draw plus any replacement draws), so a seeded stream reproduces bytes.
MaskedExample mask_document(const std::vector<sampler::CorpusNode>& doc,
                            const WordTokenizer& tokenizer, const Segmenter& segmenter,
                            const MisspellLexicon& lexicon, const MaskConfig& cfg,
                            std::mt19937_64& rng, MaskStats* stats = nullptr);

// Streams a whole corpus through mask_document (documents masked in
// parallel, RNG keyed by document index) into a binary file plus a JSON
// sidecar at <path>.json carrying the vocabulary hash, config, and counts.
MaskStats write_masked_corpus(std::istream& corpus, const std::string& out_path,
                              const WordTokenizer& tokenizer, const Segmenter& segmenter,
                              const MisspellLexicon& lexicon, const MaskConfig& cfg,
                              uint64_t seed, int num_threads = 0);

struct MaskedCorpus {
  std::vector<MaskedExample> documents;
  uint64_t vocab_fingerprint = 0;
};

MaskedCorpus read_masked_corpus(const std::string& path);

}  // namespace geolm::masker
