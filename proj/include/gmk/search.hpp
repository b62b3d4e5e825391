#ifndef GMK_SEARCH_HPP
#define GMK_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gmk/model.hpp"
#include "gmk/proof.hpp"

namespace gmk {

// Bounded refutation search.  "exhausted" only ever means the bounded
// space holds no counter-model; it is never a validity claim (the Kripke
// semantics here lacks the finite model property).
struct SearchBounds {
  int max_worlds = 3;
  int chain_size = 3; // values {0, 1/(k-1), ..., 1}
  bool crisp = true;
  int variable_budget = 3;
};

// Deterministic enumeration of all models with worlds {w1..wn}: flat
// index = relation_index * VC + valuation_index, relation entries in
// row-major (from, to) order and valuation digits in (variable, world)
// order, both least-significant first.  Crisp relations have 2 choices
// per entry, valued ones chain_size.
struct ModelSpace {
  int num_worlds;
  int chain_size;
  bool crisp;
  std::vector<std::string> vars;

  std::uint64_t relation_count() const;
  std::uint64_t valuation_count() const;
  std::uint64_t count() const; // throws if the space exceeds 2^63
  KripkeModel decode(std::uint64_t index) const;
};

ModelSpace enumerate_crisp_models(int num_worlds, int chain_size,
                                  const std::vector<std::string>& vars);

struct Counterexample {
  KripkeModel model;
  std::string world;
  Rational value;
  std::uint64_t model_index = 0;
  int num_worlds = 0;
};

struct SearchResult {
  bool found = false; // false == exhausted within bounds
  std::optional<Counterexample> counterexample;
  SearchBounds bounds;
};

SearchResult find_countermodel(const Fptr& f, const SearchBounds& b, bool parallel = true);
SearchResult find_countermodel_serial(const Fptr& f, const SearchBounds& b);

// Deterministic function of (params, seed); uniform over the enumerated space.
KripkeModel random_model(int num_worlds, int chain_size, bool crisp,
                         const std::vector<std::string>& vars, std::uint64_t seed);

// Random formula of the given depth bound over the first `variable_budget`
// of p, q, r, ...; deterministic in the seed.
Fptr random_formula(int max_depth, int variable_budget, std::uint64_t seed);

using FrameFilter = std::set<std::string>; // of reflexive/transitive/symmetric/euclidean/serial

// Smallest superset of the relation satisfying every requested property
// (serial gaps are closed with an edge to the world itself).
void close_under_frame_properties(KripkeModel& m, const FrameFilter& filter);
bool satisfies_frame_properties(const KripkeModel& m, const FrameFilter& filter);

struct FuzzViolation {
  std::uint64_t iteration;
  std::string scheme;
  Fptr instance;
  KripkeModel model;
  std::string world;
  Rational value;
};

struct FuzzReport {
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  std::vector<FuzzViolation> violations;
  std::string to_json() const;
};

// Draws (model satisfying filter, scheme, instantiation) per iteration and
// checks the instance has value 1 at every world.  Deterministic in
// (seed, iters) regardless of thread count.
FuzzReport fuzz_scheme_soundness(const std::map<std::string, Fptr>& schemes,
                                 const FrameFilter& filter, std::uint64_t iters,
                                 std::uint64_t seed, const SearchBounds& bounds,
                                 bool parallel = true);
FuzzReport fuzz_axiom_soundness(const AxiomRegistry& registry, const FrameFilter& filter,
                                std::uint64_t iters, std::uint64_t seed,
                                const SearchBounds& bounds, bool parallel = true);

// splitmix64; used everywhere randomness is needed so that reports are
// reproducible across platforms and thread counts.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
  return r.next();
}

} // namespace gmk

#endif
