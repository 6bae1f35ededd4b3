#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ldp/bounds.hpp"
#include "ldp/catalog.hpp"
#include "ldp/classify_index.hpp"
#include "ldp/classify_local.hpp"
#include "ldp/errors.hpp"
#include "ldp/invariants.hpp"
#include "ldp/normal_form.hpp"
#include "ldp/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // verification failure / internal error
constexpr int kExitUsage = 2;     // bad flags or bad input data
constexpr int kExitResource = 3;  // search budget exhausted

ldp::i64 env_node_budget(ldp::i64 fallback) {
  const char* s = std::getenv("LDP_NODE_BUDGET");
  if (!s || !*s) return fallback;
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ldp::ParseError("LDP_NODE_BUDGET must be an integer");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ldp::ParseError("cannot open output file: " + path);
  out << text;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct ClassifyArgs {
  ldp::i64 index = 0;
  ldp::i64 max_local_index = 0;
  ldp::i64 order_cap = 0;
  ldp::i64 volume_cap = 0;
  int jobs = 0;
  bool progress = false;
  std::string out;
  std::string format = "jsonl";
};

int run_classify(const ClassifyArgs& a, bool has_index, bool has_k, bool has_caps) {
  if (static_cast<int>(has_index) + static_cast<int>(has_k) + static_cast<int>(has_caps) != 1) {
    std::cerr << "error: pass exactly one of --index, --max-local-index, or --order with --volume\n";
    return kExitUsage;
  }
  Timer timer;
  std::set<ldp::CanonicalForm> classes;
  nlohmann::json params;
  std::string label;
  if (has_index) {
    ldp::SearchOptions opts;
    opts.jobs = a.jobs;
    opts.node_budget = env_node_budget(opts.node_budget);
    if (a.progress)
      opts.progress = [](std::size_t done, std::size_t total) {
        const std::size_t step = total / 20 + 1;
        if (done % step == 0 || done == total)
          std::fprintf(stderr, "progress: seeds %zu/%zu\n", done, total);
      };
    classes = ldp::classify_index(a.index, opts);
    params = {{"mode", "index"}, {"index", a.index}};
    label = "index=" + std::to_string(a.index);
  } else {
    ldp::LocalOptions opts;
    opts.jobs = a.jobs;
    opts.node_budget = env_node_budget(opts.node_budget);
    if (a.progress)
      opts.progress = [](ldp::i64 t, std::size_t done, std::size_t total) {
        const std::size_t step = total / 20 + 1;
        if (done % step == 0 || done == total)
          std::fprintf(stderr, "progress: level t=%lld %zu/%zu\n", static_cast<long long>(t), done,
                       total);
      };
    if (has_k) {
      classes = ldp::classify_by_max_local_index(a.max_local_index, opts);
      params = {{"mode", "max-local-index"}, {"max_local_index", a.max_local_index}};
      label = "max_local_index=" + std::to_string(a.max_local_index);
    } else {
      const ldp::i64 max_vertices = 4 * a.order_cap + 1;
      classes = ldp::classify_by_order_volume(a.order_cap, a.volume_cap, max_vertices, opts);
      params = {{"mode", "order-volume"},
                {"order", a.order_cap},
                {"volume", a.volume_cap},
                {"max_vertices", max_vertices}};
      label = "order=" + std::to_string(a.order_cap) + " volume=" + std::to_string(a.volume_cap);
    }
  }

  const ldp::Catalog cat = ldp::make_catalog(classes, params);
  write_output(a.out, a.format == "csv" ? ldp::render_csv(cat) : ldp::render_jsonl(cat));

  ldp::i64 triangles = 0;
  for (const ldp::CatalogRecord& r : cat.records) triangles += r.is_triangle ? 1 : 0;
  std::fprintf(stderr, "%s classes=%zu triangles=%lld elapsed=%.2fs\n", label.c_str(),
               cat.records.size(), static_cast<long long>(triangles), timer.seconds());
  return kExitOk;
}

int run_invariants(const std::string& polygon_text) {
  const ldp::Polygon p =
      ldp::make_polygon(ldp::parse_polygon_text(polygon_text), ldp::Require::IP);
  const ldp::InvariantSet inv = ldp::invariant_set(p);
  nlohmann::json j;
  j["vertices"] = ldp::vertices_to_json(p.vertices());
  j["order"] = inv.order;
  j["max_local_index"] = inv.max_local_index;
  j["index"] = inv.index;
  j["volume"] = inv.volume;
  j["boundary_points"] = inv.boundary_points;
  j["interior_points"] = inv.interior_points;
  j["num_vertices"] = inv.num_vertices;
  j["is_triangle"] = inv.is_triangle;
  j["local_indices"] = inv.local_indices;
  nlohmann::json duals = nlohmann::json::array();
  for (const ldp::RationalPoint& d : inv.dual_vertices)
    duals.push_back({{d.x.num, d.x.den}, {d.y.num, d.y.den}});
  j["dual_vertices"] = duals;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_normal_form(const std::string& polygon_text) {
  const ldp::Polygon p =
      ldp::make_polygon(ldp::parse_polygon_text(polygon_text), ldp::Require::IP);
  std::cout << ldp::vertices_to_json(ldp::canonical(p).vertices).dump() << "\n";
  return kExitOk;
}

int run_table(ldp::i64 max_index, int jobs) {
  ldp::SearchOptions opts;
  opts.jobs = jobs;
  opts.node_budget = env_node_budget(opts.node_budget);
  const std::vector<ldp::TableRow> rows = ldp::classification_table(max_index, opts);
  std::cout << ldp::render_table(rows);
  std::cout << ldp::table_to_json(rows).dump() << "\n";
  return kExitOk;
}

int run_verify(const std::string& input) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw ldp::ParseError("cannot open input file: " + input);
  const ldp::Catalog cat = ldp::parse_jsonl(in);
  if (cat.records.empty()) {
    std::cerr << "warning: empty catalog, nothing to verify\n";
    return kExitOk;
  }
  bool all_ok = true;
  for (const ldp::CatalogRecord& rec : cat.records) {
    nlohmann::json line;
    line["polygon"] = ldp::vertices_to_json(rec.vertices);
    try {
      const ldp::CatalogRecord fresh = ldp::make_record(ldp::CanonicalForm{rec.vertices});
      const ldp::Polygon p = ldp::make_polygon(rec.vertices, ldp::Require::IP);
      const bool canonical_stable = ldp::canonical(p).vertices == rec.vertices;
      const bool consistent =
          canonical_stable && ldp::record_to_json(fresh) == ldp::record_to_json(rec);
      const ldp::BoundReport report = ldp::check_all(p);
      nlohmann::json checks = nlohmann::json::array();
      for (const ldp::BoundCheck& c : report.checks)
        checks.push_back(
            {{"name", c.name}, {"bound", c.bound}, {"actual", c.actual}, {"holds", c.holds}});
      line["consistent"] = consistent;
      line["all_hold"] = report.all_hold();
      line["checks"] = checks;
      if (!consistent || !report.all_hold()) all_ok = false;
    } catch (const ldp::Error& e) {
      line["error"] = e.what();
      all_ok = false;
    }
    std::cout << line.dump() << "\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

int run_oracle_classify(ldp::i64 index, ldp::i64 box, int jobs, const std::string& out) {
  Timer timer;
  ldp::OracleOptions opts;
  opts.jobs = jobs;
  opts.node_budget = env_node_budget(opts.node_budget);
  const std::set<ldp::CanonicalForm> classes = ldp::brute_force_classify(index, box, opts);
  const ldp::Catalog cat = ldp::make_catalog(
      classes, {{"mode", "oracle"}, {"index", index}, {"box", box}});
  write_output(out, ldp::render_jsonl(cat));
  ldp::i64 triangles = 0;
  for (const ldp::CatalogRecord& r : cat.records) triangles += r.is_triangle ? 1 : 0;
  std::fprintf(stderr, "index=%lld box=%lld classes=%zu triangles=%lld elapsed=%.2fs\n",
               static_cast<long long>(index), static_cast<long long>(box), cat.records.size(),
               static_cast<long long>(triangles), timer.seconds());
  return kExitOk;
}

template <typename F>
int run_guarded(F&& f) {
  try {
    return f();
  } catch (const ldp::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ldp::BoxTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::NotIP& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::OriginNotInterior& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::NonPrimitiveVertex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ldp::DegenerateHull& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification toolkit for LDP-polygons (toric log del Pezzo surfaces)"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  CLI::App* classify = app.add_subcommand("classify", "Enumerate classes and write a catalog");
  CLI::Option* opt_index = classify->add_option("--index", ca.index, "Classify by exact index");
  CLI::Option* opt_k = classify->add_option("--max-local-index", ca.max_local_index,
                                            "Classify by maximal local index");
  CLI::Option* opt_order =
      classify->add_option("--order", ca.order_cap, "Advanced: cap the order directly");
  CLI::Option* opt_volume =
      classify->add_option("--volume", ca.volume_cap, "Advanced: cap the normalized volume");
  classify->add_option("--jobs", ca.jobs, "Worker threads (0 = all, 1 = serial)");
  classify->add_option("--out", ca.out, "Output file (default: stdout)");
  classify->add_option("--format", ca.format, "Catalog format")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  classify->add_flag("--progress", ca.progress, "Report progress on stderr");
  opt_index->excludes(opt_k)->excludes(opt_order)->excludes(opt_volume);
  opt_k->excludes(opt_order)->excludes(opt_volume);
  opt_order->needs(opt_volume);
  opt_volume->needs(opt_order);

  std::string inv_polygon;
  CLI::App* invariants_cmd =
      app.add_subcommand("invariants", "Print the invariant set of one polygon as JSON");
  invariants_cmd->add_option("--polygon", inv_polygon, "Polygon as [[x,y],...]")->required();

  std::string nf_polygon;
  CLI::App* normal_form_cmd =
      app.add_subcommand("normal-form", "Print the canonical vertex list of one polygon");
  normal_form_cmd->add_option("--polygon", nf_polygon, "Polygon as [[x,y],...]")->required();

  ldp::i64 table_max = 1;
  int table_jobs = 0;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Classification counts for every index up to a maximum");
  table_cmd->add_option("--max-index", table_max, "Largest index")->required();
  table_cmd->add_option("--jobs", table_jobs, "Worker threads (0 = all, 1 = serial)");

  std::string verify_input;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Re-derive and bound-check every record of a catalog");
  verify_cmd->add_option("--input", verify_input, "Catalog file (JSON lines)")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Independent brute-force reference");
  oracle_cmd->group("");  // dev tier, hidden from help
  oracle_cmd->require_subcommand(1);
  ldp::i64 oracle_index = 1;
  ldp::i64 oracle_box = 4;
  int oracle_jobs = 0;
  std::string oracle_out;
  CLI::App* oracle_classify =
      oracle_cmd->add_subcommand("classify", "Classify by brute force over a coordinate box");
  oracle_classify->add_option("--index", oracle_index, "Exact index")->required();
  oracle_classify->add_option("--box", oracle_box, "Box half-width")->required();
  oracle_classify->add_option("--jobs", oracle_jobs, "Worker threads (0 = all, 1 = serial)");
  oracle_classify->add_option("--out", oracle_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  return run_guarded([&]() -> int {
    if (classify->parsed())
      return run_classify(ca, opt_index->count() > 0, opt_k->count() > 0, opt_order->count() > 0);
    if (invariants_cmd->parsed()) return run_invariants(inv_polygon);
    if (normal_form_cmd->parsed()) return run_normal_form(nf_polygon);
    if (table_cmd->parsed()) return run_table(table_max, table_jobs);
    if (verify_cmd->parsed()) return run_verify(verify_input);
    if (oracle_cmd->parsed() && oracle_classify->parsed())
      return run_oracle_classify(oracle_index, oracle_box, oracle_jobs, oracle_out);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  });
}
