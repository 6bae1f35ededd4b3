#include "ldp/catalog.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "ldp/errors.hpp"
#include "ldp/polygon.hpp"

namespace ldp {

CatalogRecord make_record(const CanonicalForm& form) {
  const Polygon p = make_polygon(form.vertices, Require::IP);
  const InvariantSet inv = invariant_set(p);
  CatalogRecord rec;
  rec.vertices = form.vertices;
  rec.index = inv.index;
  rec.order = inv.order;
  rec.max_local_index = inv.max_local_index;
  rec.volume = inv.volume;
  rec.boundary_points = inv.boundary_points;
  rec.interior_points = inv.interior_points;
  rec.num_vertices = inv.num_vertices;
  rec.is_triangle = inv.is_triangle;
  rec.local_indices = inv.local_indices;
  rec.dual_vertices = inv.dual_vertices;
  return rec;
}

void sort_records(std::vector<CatalogRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
    if (a.num_vertices != b.num_vertices) return a.num_vertices < b.num_vertices;
    if (a.volume != b.volume) return a.volume < b.volume;
    return a.vertices < b.vertices;
  });
}

Catalog make_catalog(const std::set<CanonicalForm>& classes, nlohmann::json params) {
  Catalog cat;
  cat.params = std::move(params);
  cat.records.reserve(classes.size());
  for (const CanonicalForm& c : classes) cat.records.push_back(make_record(c));
  sort_records(cat.records);
  return cat;
}

nlohmann::json vertices_to_json(const std::vector<Point>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (Point v : vs) arr.push_back({v.x, v.y});
  return arr;
}

nlohmann::json record_to_json(const CatalogRecord& rec) {
  nlohmann::json j;
  j["vertices"] = vertices_to_json(rec.vertices);
  j["index"] = rec.index;
  j["order"] = rec.order;
  j["max_local_index"] = rec.max_local_index;
  j["volume"] = rec.volume;
  j["boundary_points"] = rec.boundary_points;
  j["interior_points"] = rec.interior_points;
  j["num_vertices"] = rec.num_vertices;
  j["is_triangle"] = rec.is_triangle;
  j["local_indices"] = rec.local_indices;
  nlohmann::json duals = nlohmann::json::array();
  for (const RationalPoint& d : rec.dual_vertices)
    duals.push_back({{d.x.num, d.x.den}, {d.y.num, d.y.den}});
  j["dual_vertices"] = duals;
  return j;
}

namespace {

std::vector<Point> points_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of [x,y] pairs");
  std::vector<Point> vs;
  for (const nlohmann::json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("expected an array of [x,y] integer pairs");
    vs.push_back({e[0].get<i64>(), e[1].get<i64>()});
  }
  return vs;
}

}  // namespace

CatalogRecord record_from_json(const nlohmann::json& j) {
  try {
    CatalogRecord rec;
    rec.vertices = points_from_json(j.at("vertices"));
    rec.index = j.at("index").get<i64>();
    rec.order = j.at("order").get<i64>();
    rec.max_local_index = j.at("max_local_index").get<i64>();
    rec.volume = j.at("volume").get<i64>();
    rec.boundary_points = j.at("boundary_points").get<i64>();
    rec.interior_points = j.at("interior_points").get<i64>();
    rec.num_vertices = j.at("num_vertices").get<i64>();
    rec.is_triangle = j.at("is_triangle").get<bool>();
    rec.local_indices = j.at("local_indices").get<std::vector<i64>>();
    for (const nlohmann::json& d : j.at("dual_vertices")) {
      if (!d.is_array() || d.size() != 2 || d[0].size() != 2 || d[1].size() != 2)
        throw ParseError("dual vertex must be [[num,den],[num,den]]");
      rec.dual_vertices.push_back({Rational::make(d[0][0].get<i64>(), d[0][1].get<i64>()),
                                   Rational::make(d[1][0].get<i64>(), d[1][1].get<i64>())});
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad catalog record: ") + e.what());
  }
}

std::string render_jsonl(const Catalog& cat) {
  nlohmann::json header;
  header["format_version"] = 1;
  header["generator"] = "ldp";
  header["params"] = cat.params.is_null() ? nlohmann::json::object() : cat.params;
  std::string out = header.dump();
  out.push_back('\n');
  for (const CatalogRecord& rec : cat.records) {
    out += record_to_json(rec).dump();
    out.push_back('\n');
  }
  return out;
}

std::string render_csv(const Catalog& cat) {
  std::string out =
      "index,order,max_local_index,volume,boundary_points,interior_points,"
      "num_vertices,is_triangle\n";
  for (const CatalogRecord& r : cat.records) {
    out += std::to_string(r.index) + ',' + std::to_string(r.order) + ',' +
           std::to_string(r.max_local_index) + ',' + std::to_string(r.volume) + ',' +
           std::to_string(r.boundary_points) + ',' + std::to_string(r.interior_points) + ',' +
           std::to_string(r.num_vertices) + ',' + (r.is_triangle ? "1" : "0") + '\n';
  }
  return out;
}

Catalog parse_jsonl(std::istream& in) {
  Catalog cat;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad catalog line: ") + e.what());
    }
    if (!have_header) {
      if (!j.is_object() || j.value("format_version", 0) != 1 || !j.contains("generator"))
        throw ParseError("missing or unsupported catalog header");
      cat.params = j.value("params", nlohmann::json::object());
      have_header = true;
      continue;
    }
    cat.records.push_back(record_from_json(j));
  }
  return cat;
}

std::vector<Point> parse_polygon_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polygon literal: ") + e.what());
  }
  return points_from_json(j);
}

std::vector<TableRow> classification_table(i64 max_index, const SearchOptions& opts) {
  if (max_index < 1) throw DomainError("table needs a positive maximal index");
  std::vector<TableRow> rows;
  for (i64 k = 1; k <= max_index; ++k) {
    const std::set<CanonicalForm> classes = classify_index(k, opts);
    TableRow row{k, static_cast<i64>(classes.size()), 0};
    for (const CanonicalForm& c : classes)
      if (c.vertices.size() == 3) ++row.triangles;
    rows.push_back(row);
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  auto line = [&](const std::string& label, auto field) {
    out << label;
    for (const TableRow& r : rows) {
      std::string cell = std::to_string(field(r));
      out << std::string(cell.size() >= 6 ? 1 : 6 - cell.size(), ' ') << cell;
    }
    out << '\n';
  };
  line("k    ", [](const TableRow& r) { return r.k; });
  line("n(k) ", [](const TableRow& r) { return r.classes; });
  line("m(k) ", [](const TableRow& r) { return r.triangles; });
  return out.str();
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TableRow& r : rows)
    arr.push_back({{"k", r.k}, {"n", r.classes}, {"m", r.triangles}});
  return {{"rows", arr}};
}

}  // namespace ldp
