#pragma once

#include <string>
#include <vector>

#include "geolm/geograph.hpp"

// JSONL readers for the three raw inputs of the pipeline. One JSON object per
// line; blank lines are skipped; malformed rows raise ParseError with
// "path:line:" context.
namespace geolm::ingest {

// {"poi_id": "...", "name": "...", "address": "...", "type": "...",
//  "lat": 40.0, "lng": 116.3}
std::vector<graph::PoiRecord> load_pois_jsonl(const std::string& path);

// {"query": "...", "poi_id": "...", "count": 3}   (count optional, default 1)
std::vector<graph::QueryRecord> load_clicks_jsonl(const std::string& path);

// {"poi_ids": ["a", "b", "c"]}
std::vector<graph::SessionRecord> load_sessions_jsonl(const std::string& path);

// (query text, clicked POI name) pairs for misspelling mining, resolved
// against the POI table; clicks on unknown POIs are dropped.
std::vector<std::pair<std::string, std::string>> query_name_pairs(
    const std::vector<graph::QueryRecord>& clicks, const std::vector<graph::PoiRecord>& pois);

}  // namespace geolm::ingest
