#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldp/classify_index.hpp"
#include "ldp/invariants.hpp"
#include "ldp/normal_form.hpp"

namespace ldp {

// One classified polygon, stored by its canonical vertices together with
// every derived invariant (so consumers never need to recompute, and
// verification can).
struct CatalogRecord {
  std::vector<Point> vertices;  // canonical form, ccw
  i64 index = 0;
  i64 order = 0;
  i64 max_local_index = 0;
  i64 volume = 0;
  i64 boundary_points = 0;
  i64 interior_points = 0;
  i64 num_vertices = 0;
  bool is_triangle = false;
  std::vector<i64> local_indices;
  std::vector<RationalPoint> dual_vertices;
};

struct Catalog {
  nlohmann::json params;  // run parameters; never includes worker counts
  std::vector<CatalogRecord> records;
};

CatalogRecord make_record(const CanonicalForm& form);

// Fixed publication order: (num_vertices, volume, vertices lexicographic).
void sort_records(std::vector<CatalogRecord>& records);

Catalog make_catalog(const std::set<CanonicalForm>& classes, nlohmann::json params);

nlohmann::json record_to_json(const CatalogRecord& rec);
CatalogRecord record_from_json(const nlohmann::json& j);

// Header line {"format_version":1,"generator":"ldp","params":{...}}
// followed by one record per line.
std::string render_jsonl(const Catalog& cat);
// Scalar fields only, fixed header row.
std::string render_csv(const Catalog& cat);

// Inverse of render_jsonl. A completely empty stream yields an empty
// catalog; anything else must start with a valid header. Throws ParseError.
Catalog parse_jsonl(std::istream& in);

// Parse a polygon literal "[[x,y],...]"; throws ParseError.
std::vector<Point> parse_polygon_text(const std::string& text);
nlohmann::json vertices_to_json(const std::vector<Point>& vs);

struct TableRow {
  i64 k = 0;
  i64 classes = 0;
  i64 triangles = 0;
};

// Classification counts for every index up to max_index.
std::vector<TableRow> classification_table(i64 max_index, const SearchOptions& opts = {});

// Two-row layout: indices across the top, class and triangle counts below.
std::string render_table(const std::vector<TableRow>& rows);
nlohmann::json table_to_json(const std::vector<TableRow>& rows);

}  // namespace ldp
