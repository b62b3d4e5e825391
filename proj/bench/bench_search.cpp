// Timing comparison of the parallel search / fuzz kernels against their
// serial reference implementations.  Results must agree exactly; only the
// wall time may differ.

#include <chrono>
#include <iostream>

#include "gmk/proof.hpp"
#include "gmk/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gmk;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_search(const char* label, const Fptr& f, const SearchBounds& b) {
  auto t0 = Clock::now();
  SearchResult serial = find_countermodel_serial(f, b);
  double serial_ms = ms_since(t0);
  t0 = Clock::now();
  SearchResult parallel = find_countermodel(f, b);
  double parallel_ms = ms_since(t0);

  bool agree = serial.found == parallel.found &&
               (!serial.found || serial.counterexample->model_index ==
                                     parallel.counterexample->model_index);
  std::cout << "search  " << label << ": serial " << serial_ms << " ms, parallel "
            << parallel_ms << " ms, speedup " << serial_ms / parallel_ms
            << (agree ? "" : "  [MISMATCH]") << "\n";
}

void bench_fuzz(const char* label, std::uint64_t iters) {
  AxiomRegistry reg = resolve_system("GKc", {"T"}, Mode::Local);
  SearchBounds b{4, 6, true, 3};
  auto t0 = Clock::now();
  FuzzReport serial = fuzz_axiom_soundness(reg, {"reflexive"}, iters, 9, b, /*parallel=*/false);
  double serial_ms = ms_since(t0);
  t0 = Clock::now();
  FuzzReport parallel = fuzz_axiom_soundness(reg, {"reflexive"}, iters, 9, b, /*parallel=*/true);
  double parallel_ms = ms_since(t0);
  bool agree = serial.to_json() == parallel.to_json();
  std::cout << "fuzz    " << label << ": serial " << serial_ms << " ms, parallel "
            << parallel_ms << " ms, speedup " << serial_ms / parallel_ms
            << (agree ? "" : "  [MISMATCH]") << "\n";
}

} // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel paths run serially\n";
#endif
  // valid formulas exhaust their whole bounded space: worst case for search
  bench_search("K distribution, 3 worlds", parse_formula("[](p -> q) -> ([]p -> []q)"),
               SearchBounds{3, 3, true, 2});
  bench_search("crisp-only scheme, valued space", parse_formula("[](0 | q) -> ([]0 | <>q)"),
               SearchBounds{2, 4, false, 1});
  bench_fuzz("GKc+T, 20000 iterations", 20000);
  return 0;
}
