#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geolm/dgg.hpp"

// Heterogeneous POI/query graph: node text plus location-derived geocodes on
// POI nodes, and three edge types — query-click-POI (QcP, undirected),
// origin-to-destination (OtD, directed), POI-co-locates-with-POI (PcP,
// undirected). Built single-writer, then frozen into immutable CSR adjacency
// that any number of threads may read.
namespace geolm::graph {

enum class NodeType : uint8_t { kPoi = 0, kQuery = 1 };
enum class EdgeType : uint8_t { kQcp = 0, kOtd = 1, kPcp = 2 };
inline constexpr int kNumEdgeTypes = 3;

std::string_view node_type_name(NodeType type);  // "POI" / "QUERY"
std::string_view edge_type_name(EdgeType type);  // "QcP" / "OtD" / "PcP"

struct PoiRecord {
  std::string poi_id;
  std::string name;
  std::string address;
  std::string poi_type;
  dgg::LatLng location;
};

struct QueryRecord {
  std::string text;
  std::string clicked_poi_id;
  int64_t count = 1;
};

struct SessionRecord {
  std::vector<std::string> poi_ids;
};

struct Node {
  NodeType type = NodeType::kPoi;
  std::string ext_id;  // source poi_id; empty for query nodes
  std::string text;    // POI: "name [SEP] address [SEP] type"; query: query text
  std::optional<dgg::LatLng> location;         // POI only
  std::optional<dgg::MultiLevelCode> geocode;  // POI only
};

struct IngestStats {
  size_t accepted = 0;
  size_t skipped = 0;  // records/ids referencing unknown POIs
};

struct ColocationConfig {
  int level = 15;               // grid level defining "same place"
  int max_cell_occupancy = 256; // above this, link each POI to this many random cellmates
  uint64_t seed = 0;            // for the dense-cell subsampling
};

class HeteroGraph {
 public:
  // --- building phase (throws ConsistencyError once frozen) ---

  // One node per record; text rendered from name/address/type, geocode from
  // the level-22 cell of the location. Duplicate poi_id or empty name throws
  // ValidationError.
  void ingest_pois(const std::vector<PoiRecord>& records);

  // Keeps the `top_k` highest-count distinct query texts per POI (ties by
  // lexicographically smaller text), creating one query node per retained
  // (text, POI) pair plus an undirected QcP edge. Records for unknown POIs
  // are skipped and counted. Single shot: a second call throws.
  IngestStats ingest_clicks(const std::vector<QueryRecord>& records, int top_k = 4);

  // Emits one directed OtD edge per adjacent pair of a session; pairs with
  // an unresolvable id are dropped (each unknown occurrence counted), and
  // self-pairs are ignored.
  IngestStats ingest_sessions(const std::vector<SessionRecord>& records);

  // Links all POI pairs sharing a cell at cfg.level with undirected PcP
  // edges; cells denser than cfg.max_cell_occupancy link each member to
  // that many seeded-random cellmates instead of the full clique. Returns
  // the number of distinct pairs produced by this call.
  size_t build_colocation(const ColocationConfig& cfg = {});

  // Deduplicates edges and builds per-type CSR adjacency; the graph becomes
  // immutable and reads become legal.
  void freeze();

  // --- frozen reads (throw ConsistencyError before freeze()) ---
  bool frozen() const { return frozen_; }
  size_t node_count() const { return nodes_.size(); }
  const Node& node(uint32_t id) const { return nodes_.at(id); }
  std::optional<uint32_t> find_poi(std::string_view poi_id) const;

  // Canonical edge count: undirected pairs for QcP/PcP, directed for OtD.
  size_t edge_count(EdgeType type) const;
  const std::vector<std::pair<uint32_t, uint32_t>>& edges(EdgeType type) const;

  // Walk-facing neighbor list, sorted and deduplicated. OtD edges are
  // traversable in both directions here; direction is preserved in edges().
  std::span<const uint32_t> neighbors(uint32_t v, EdgeType type) const;
  size_t degree(uint32_t v, EdgeType type) const { return neighbors(v, type).size(); }

  // --- persistence (frozen graphs only) ---
  void save_snapshot(const std::string& path) const;
  static HeteroGraph load_snapshot(const std::string& path);

 private:
  struct Csr {
    std::vector<uint64_t> offsets;  // node_count + 1
    std::vector<uint32_t> targets;
  };

  void require_building(const char* op) const;
  void require_frozen(const char* op) const;
  uint32_t add_query_node(std::string text, uint32_t poi);
  void rebuild_adjacency();

  std::vector<Node> nodes_;
  std::unordered_map<std::string, uint32_t> poi_index_;
  std::vector<std::pair<uint32_t, uint32_t>> raw_edges_[kNumEdgeTypes];
  std::vector<std::pair<uint32_t, uint32_t>> edges_[kNumEdgeTypes];  // canonical, sorted
  Csr adjacency_[kNumEdgeTypes];  // traversal view (OtD symmetrized)
  bool clicks_ingested_ = false;
  bool frozen_ = false;
};

// JSON-lines readers; parse errors carry the file name and line number.
// pois.jsonl: {poi_id, name, address, type, lat, lng}
// clicks.jsonl: {query, poi_id, count}
// sessions.jsonl: {poi_ids: [...]}
std::vector<PoiRecord> read_pois_jsonl(const std::string& path);
std::vector<QueryRecord> read_clicks_jsonl(const std::string& path);
std::vector<SessionRecord> read_sessions_jsonl(const std::string& path);

}  // namespace geolm::graph
