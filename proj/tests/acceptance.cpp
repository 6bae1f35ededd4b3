// Acceptance gate: one PASS/FAIL/SKIP line per criterion, exit 0 iff no FAIL.
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ldp/bounds.hpp"
#include "ldp/catalog.hpp"
#include "ldp/classify_index.hpp"
#include "ldp/classify_local.hpp"
#include "ldp/invariants.hpp"
#include "ldp/normal_form.hpp"
#include "ldp/oracle.hpp"
#include "helpers.hpp"

using namespace ldp;
using ldp::test::apply_map;
using ldp::test::random_ip_polygon;
using ldp::test::random_unimodular;

namespace {

// Golden counts: total classes n(k) and triangle classes m(k) for k = 1..16.
const std::vector<i64> kGoldenN = {16,  30,  99,  91,   250,  379,  429,  307,
                                   690, 916, 939, 1279, 1142, 1545, 4312, 1030};
const std::vector<i64> kGoldenM = {5,  7,  18, 13, 33, 26, 45, 27,
                                   51, 51, 67, 53, 69, 74, 133, 48};

std::string g_cli;
std::string g_tmpdir;
int g_pass = 0, g_fail = 0, g_skip = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void pass(int id, const std::string& what) {
  ++g_pass;
  std::printf("PASS: criterion %d — %s\n", id, what.c_str());
  std::fflush(stdout);
}

void fail(int id, const std::string& what) {
  ++g_fail;
  std::printf("FAIL: criterion %d — %s\n", id, what.c_str());
  std::fflush(stdout);
}

void skip(int id, const std::string& what) {
  ++g_skip;
  std::printf("SKIP: criterion %d — %s\n", id, what.c_str());
  std::fflush(stdout);
}

void info(const std::string& what) {
  std::printf("  info: %s\n", what.c_str());
  std::fflush(stdout);
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int id = 0;
  const std::string base = g_tmpdir + "/acc" + std::to_string(++id);
  const std::string cmd = g_cli + " " + args + " >" + base + ".out 2>" + base + ".err";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  return r;
}

std::string last_line(const std::string& s) {
  std::istringstream in(s);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last;
}

// classify_index results, computed once and reused across criteria
std::map<i64, std::set<CanonicalForm>>& index_catalogs() {
  static std::map<i64, std::set<CanonicalForm>> cache;
  return cache;
}

const std::set<CanonicalForm>& by_index(i64 ell) {
  auto& cache = index_catalogs();
  auto it = cache.find(ell);
  if (it == cache.end()) it = cache.emplace(ell, classify_index(ell)).first;
  return it->second;
}

// Checks `table --max-index <up_to>` against the golden rows [from..up_to].
bool check_table(int id, i64 from, i64 up_to, std::string* detail) {
  RunResult r = run_cli("table --max-index " + std::to_string(up_to));
  if (r.code != 0) {
    *detail = "table command exited with code " + std::to_string(r.code);
    return false;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(last_line(r.out));
  } catch (const std::exception& e) {
    *detail = std::string("cannot parse table JSON: ") + e.what();
    return false;
  }
  if (static_cast<i64>(j["rows"].size()) != up_to) {
    *detail = "expected " + std::to_string(up_to) + " rows";
    return false;
  }
  for (i64 k = from; k <= up_to; ++k) {
    const auto& row = j["rows"][k - 1];
    const i64 n = row["n"], m = row["m"];
    if (row["k"] != k || n != kGoldenN[k - 1] || m != kGoldenM[k - 1]) {
      *detail = "k=" + std::to_string(k) + ": got n=" + std::to_string(n) + " m=" +
                std::to_string(m) + ", want n=" + std::to_string(kGoldenN[k - 1]) + " m=" +
                std::to_string(kGoldenM[k - 1]);
      return false;
    }
  }
  (void)id;
  return true;
}

void criterion1() {
  Timer t;
  std::string detail;
  if (check_table(1, 1, 6, &detail))
    pass(1, "table --max-index 6 matches the golden counts (" +
                std::to_string(t.seconds()) + "s)");
  else
    fail(1, "golden table mismatch: " + detail);
}

void criterion2() {
  const bool full = std::getenv("LDP_ACCEPT_FULL") != nullptr;
  const bool nightly = full || std::getenv("LDP_ACCEPT_NIGHTLY") != nullptr;
  if (!nightly) {
    skip(2, "extended golden counts not run; set LDP_ACCEPT_NIGHTLY=1 for indices <= 10 "
            "(~20s) or LDP_ACCEPT_FULL=1 for indices <= 16 (~25min, single core)");
    return;
  }
  Timer t;
  const i64 up_to = full ? 16 : 10;
  std::string detail;
  if (check_table(2, 7, up_to, &detail))
    pass(2, "table --max-index " + std::to_string(up_to) + " matches the golden counts (" +
                std::to_string(t.seconds()) + "s)");
  else
    fail(2, "extended golden table mismatch: " + detail);
}

void criterion3() {
  const auto& classes = by_index(2);
  i64 triangles = 0;
  for (const CanonicalForm& c : classes)
    if (c.vertices.size() == 3) ++triangles;
  if (classes.size() == 30 && triangles == 7)
    pass(3, "index 2 yields 30 classes, 7 of them triangles");
  else
    fail(3, "index 2 yields " + std::to_string(classes.size()) + " classes, " +
                std::to_string(triangles) + " triangles (want 30 / 7)");
}

void criterion4() {
  const std::map<i64, std::vector<i64>> admissible = {
      {1, {1}}, {2, {1, 2}}, {3, {1, 2, 3, 6}}};
  const std::map<i64, i64> expected = {{1, 16}, {2, 46}, {3, 524}};
  bool ok = true;
  std::string detail;
  for (const auto& [k, ells] : admissible) {
    Timer t;
    std::set<CanonicalForm> lhs = classify_by_max_local_index(k);
    std::set<CanonicalForm> rhs;
    i64 dropped = 0;  // classes of admissible index whose maximal local index exceeds k
    for (i64 ell : ells)
      for (const CanonicalForm& c : by_index(ell)) {
        if (max_local_index(to_polygon(c)) <= k)
          rhs.insert(c);
        else
          ++dropped;
      }
    // class-for-class: every lhs class equivalent to an rhs class and vice versa
    bool sets_equal = lhs.size() == rhs.size();
    if (sets_equal)
      for (auto a = lhs.begin(), b = rhs.begin(); a != lhs.end(); ++a, ++b)
        if (!equivalent(to_polygon(*a), to_polygon(*b))) {
          sets_equal = false;
          break;
        }
    info("k=" + std::to_string(k) + ": both algorithms give " + std::to_string(lhs.size()) +
         " classes (filtered union drops " + std::to_string(dropped) +
         " higher-m classes), sets " + (sets_equal ? "equal" : "DIFFER") + ", " +
         std::to_string(t.seconds()) + "s");
    if (!sets_equal) {
      ok = false;
      detail = "k=" + std::to_string(k) + ": class sets differ (" +
               std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()) + ")";
      break;
    }
    if (static_cast<i64>(lhs.size()) != expected.at(k)) {
      ok = false;
      detail = "k=" + std::to_string(k) + ": both algorithms agree on " +
               std::to_string(lhs.size()) + " classes, but the stated count is " +
               std::to_string(expected.at(k)) +
               " (that figure sums the index-1,2,3,6 classifications without removing the "
               "index-6 classes of maximal local index 6, e.g. conv{(-1,6),(1,6),(0,-1)})";
      break;
    }
  }
  if (ok)
    pass(4, "maximal-local-index classification matches the filtered index classifications "
            "(16 / 46 / 524)");
  else
    fail(4, detail);
}

void criterion5() {
  for (i64 ell : {1, 2, 3}) {
    Timer t;
    std::set<CanonicalForm> oracle = brute_force_classify(ell, min_box_for_index(ell));
    if (oracle != by_index(ell)) {
      fail(5, "brute force disagrees with the production search at index " +
                  std::to_string(ell) + " (" + std::to_string(oracle.size()) + " vs " +
                  std::to_string(by_index(ell).size()) + " classes)");
      return;
    }
    info("index " + std::to_string(ell) + ": oracle reproduces all " +
         std::to_string(oracle.size()) + " classes, " + std::to_string(t.seconds()) + "s");
  }
  pass(5, "independent brute-force search reproduces indices 1-3 exactly");
}

void criterion6() {
  i64 checked = 0, violations = 0;
  std::string first;
  auto scan = [&](const std::set<CanonicalForm>& classes) {
    for (const CanonicalForm& c : classes) {
      BoundReport rep = check_all(to_polygon(c));
      ++checked;
      for (const BoundCheck& b : rep.checks)
        if (!b.holds) {
          ++violations;
          if (first.empty())
            first = b.name + " bound " + std::to_string(b.bound) + " actual " +
                    std::to_string(b.actual);
        }
    }
  };
  for (i64 ell = 1; ell <= 6; ++ell) scan(by_index(ell));
  for (i64 k = 1; k <= 3; ++k) scan(classify_by_max_local_index(k));
  if (violations == 0)
    pass(6, "all bounds hold on every polygon of every produced catalog (" +
                std::to_string(checked) + " polygons)");
  else
    fail(6, std::to_string(violations) + " bound violations over " + std::to_string(checked) +
                " polygons; first: " + first);
}

void criterion7() {
  i64 triples = 0, failures = 0;
  for (i64 ell : {1, 2, 3}) {
    for (const CanonicalForm& c : by_index(ell)) {
      Polygon q = to_polygon(c);
      const i64 m = max_local_index(q);
      if (m < 2) continue;  // no admissible x exists at height one
      for (const Facet& f : q.facets()) {
        if (f.local_index != m) continue;
        for (Point x : height_one_points(f)) {
          bool vertex = false;
          for (Point v : q.vertices()) vertex = vertex || v == x;
          if (vertex) continue;
          ++triples;
          if (!projection_property_holds(q, f, x)) ++failures;
        }
      }
    }
  }
  if (failures == 0 && triples > 0)
    pass(7, "projection property holds for all " + std::to_string(triples) +
                " admissible (polygon, facet, point) triples over indices 1-3");
  else
    fail(7, std::to_string(failures) + " projection failures over " + std::to_string(triples) +
                " triples");
}

void criterion8() {
  for (i64 a = 1; a <= 6; ++a)
    for (i64 b = a; b <= 6; ++b) {
      Polygon q = example_triangle(a, b);
      const bool ok = q.normalized_volume() == 2 * b * (a + 1) * (a + 1) &&
                      q.boundary_lattice_point_count() == 2 * (a + 1) * (b + 1) &&
                      index(q) == lcm(a, b) && q.is_ldp() == (gcd(a, b) == 1);
      if (!ok) {
        fail(8, "closed forms fail at a=" + std::to_string(a) + " b=" + std::to_string(b));
        return;
      }
    }
  pass(8, "closed forms hold for every extremal triangle with 1 <= a <= b <= 6");
}

void criterion9() {
  Timer t;
  std::mt19937 rng(20260816);
  for (int i = 0; i < 10000; ++i) {
    Polygon q = random_ip_polygon(rng);
    CanonicalForm c = canonical(q);
    if (canonical(to_polygon(c)) != c) {
      fail(9, "canonical form is not idempotent (iteration " + std::to_string(i) + ")");
      return;
    }
    if (canonical(apply_map(random_unimodular(rng), q)) != c) {
      fail(9, "canonical form is not map-invariant (iteration " + std::to_string(i) + ")");
      return;
    }
  }
  // Completeness against the independent decision procedure on the index-2
  // catalog: distinct classes are pairwise inequivalent, and each class is
  // equivalent to a randomly remapped copy of itself.
  std::vector<Polygon> reps;
  for (const CanonicalForm& c : by_index(2)) reps.push_back(to_polygon(c));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!brute_force_equivalent(reps[i], apply_map(random_unimodular(rng), reps[i]))) {
      fail(9, "brute-force equivalence rejects a remapped copy");
      return;
    }
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (brute_force_equivalent(reps[i], reps[j])) {
        fail(9, "distinct canonical classes are brute-force equivalent");
        return;
      }
  }
  pass(9, "canonical form: 10,000 fuzzed idempotence/invariance pairs and full index-2 "
          "cross-validation (" + std::to_string(t.seconds()) + "s)");
}

void criterion10() {
  for (i64 ell = 1; ell <= 4; ++ell) {
    const std::string f1 = g_tmpdir + "/det_" + std::to_string(ell) + "_j1.jsonl";
    const std::string f8 = g_tmpdir + "/det_" + std::to_string(ell) + "_j8.jsonl";
    RunResult r1 = run_cli("classify --index " + std::to_string(ell) + " --jobs 1 --out " + f1);
    RunResult r8 = run_cli("classify --index " + std::to_string(ell) + " --jobs 8 --out " + f8);
    if (r1.code != 0 || r8.code != 0) {
      fail(10, "classify exited nonzero at index " + std::to_string(ell));
      return;
    }
    const std::string a = slurp(f1), b = slurp(f8);
    if (a.empty() || a != b) {
      fail(10, "catalogs differ between 1 and 8 workers at index " + std::to_string(ell));
      return;
    }
  }
  pass(10, "1-worker and 8-worker catalogs are byte-identical for indices 1-4");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: acceptance --cli <path-to-ldp-binary>\n");
    return 2;
  }
  char tmpl[] = "/tmp/ldp_acceptance_XXXXXX";
  char* dir = mkdtemp(tmpl);
  if (!dir) {
    std::fprintf(stderr, "cannot create temp dir\n");
    return 2;
  }
  g_tmpdir = dir;

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  std::printf("acceptance: %d passed, %d failed, %d skipped\n", g_pass, g_fail, g_skip);
  return g_fail == 0 ? 0 : 1;
}
