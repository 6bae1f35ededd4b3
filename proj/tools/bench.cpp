#include <CLI11.hpp>

#include <omp.h>

#include <cstdio>
#include <set>

#include "ldp/classify_index.hpp"
#include "ldp/normal_form.hpp"

// Times the index-classification kernel on its serial reference path and on
// the OpenMP path, and checks that both produce the same classes.

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP benchmark for the LDP classification kernel"};
  ldp::i64 lo = 4;
  ldp::i64 hi = 6;
  int jobs = 0;
  app.add_option("--min-index", lo, "First index to time");
  app.add_option("--max-index", hi, "Last index to time");
  app.add_option("--jobs", jobs, "Threads for the parallel run (0 = all)");
  CLI11_PARSE(app, argc, argv);

  std::printf("%-6s %9s %11s %13s %8s %6s\n", "index", "classes", "serial[s]", "parallel[s]",
              "speedup", "match");
  for (ldp::i64 ell = lo; ell <= hi; ++ell) {
    ldp::SearchOptions serial;
    serial.jobs = 1;
    double t0 = omp_get_wtime();
    const std::set<ldp::CanonicalForm> a = ldp::classify_index(ell, serial);
    const double ts = omp_get_wtime() - t0;

    ldp::SearchOptions parallel;
    parallel.jobs = jobs;
    t0 = omp_get_wtime();
    const std::set<ldp::CanonicalForm> b = ldp::classify_index(ell, parallel);
    const double tp = omp_get_wtime() - t0;

    std::printf("%-6lld %9zu %11.3f %13.3f %8.2f %6s\n", static_cast<long long>(ell), a.size(),
                ts, tp, tp > 0 ? ts / tp : 0.0, a == b ? "yes" : "NO");
    if (a != b) return 1;
  }
  return 0;
}
