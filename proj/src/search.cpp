#include "gmk/search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gmk {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("model space exceeds 2^63 elements");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::string> world_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

Rational chain_value(std::uint64_t digit, int chain_size) {
  return Rational(static_cast<std::int64_t>(digit), chain_size - 1);
}

} // namespace

std::uint64_t ModelSpace::relation_count() const {
  std::uint64_t per_entry = crisp ? 2 : static_cast<std::uint64_t>(chain_size);
  return checked_pow(per_entry, static_cast<std::uint64_t>(num_worlds) * num_worlds);
}

std::uint64_t ModelSpace::valuation_count() const {
  return checked_pow(static_cast<std::uint64_t>(chain_size),
                     static_cast<std::uint64_t>(num_worlds) * vars.size());
}

std::uint64_t ModelSpace::count() const {
  unsigned __int128 c = static_cast<unsigned __int128>(relation_count()) * valuation_count();
  if (c > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("model space exceeds 2^63 elements");
  return static_cast<std::uint64_t>(c);
}

KripkeModel ModelSpace::decode(std::uint64_t index) const {
  std::uint64_t vc = valuation_count();
  std::uint64_t rel_idx = index / vc;
  std::uint64_t val_idx = index % vc;
  KripkeModel m = KripkeModel::empty(world_names(num_worlds));
  std::uint64_t rel_base = crisp ? 2 : static_cast<std::uint64_t>(chain_size);
  for (int i = 0; i < num_worlds; ++i)
    for (int j = 0; j < num_worlds; ++j) {
      std::uint64_t digit = rel_idx % rel_base;
      rel_idx /= rel_base;
      m.relation[i][j] = crisp ? Rational(static_cast<std::int64_t>(digit), 1)
                               : chain_value(digit, chain_size);
    }
  for (const std::string& v : vars)
    for (int w = 0; w < num_worlds; ++w) {
      std::uint64_t digit = val_idx % chain_size;
      val_idx /= chain_size;
      if (digit != 0) m.set_value(v, w, chain_value(digit, chain_size));
    }
  return m;
}

ModelSpace enumerate_crisp_models(int num_worlds, int chain_size,
                                  const std::vector<std::string>& vars) {
  if (num_worlds < 1) throw std::invalid_argument("need at least one world");
  if (chain_size < 2) throw std::invalid_argument("chain needs at least the points 0 and 1");
  return ModelSpace{num_worlds, chain_size, true, vars};
}

namespace {

// index of the first world refuting f in `m`, or -1
int refuting_world(const KripkeModel& m, const Fptr& f) {
  for (std::size_t w = 0; w < m.size(); ++w)
    if (!evaluate(m, static_cast<int>(w), f).is_one()) return static_cast<int>(w);
  return -1;
}

SearchResult search_impl(const Fptr& f, const SearchBounds& b, bool parallel) {
  std::vector<std::string> vars = variables_of(f);
  for (int n = 1; n <= b.max_worlds; ++n) {
    ModelSpace space{n, b.chain_size, b.crisp, vars};
    std::uint64_t total = space.count();
    constexpr std::uint64_t block = 1u << 16;
    for (std::uint64_t lo = 0; lo < total; lo += block) {
      std::uint64_t hi = std::min(total, lo + block);
      std::int64_t best = -1;
      if (parallel) {
        std::int64_t best_idx = std::numeric_limits<std::int64_t>::max();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best_idx)
#endif
        for (std::int64_t i = static_cast<std::int64_t>(lo); i < static_cast<std::int64_t>(hi);
             ++i) {
          KripkeModel m = space.decode(static_cast<std::uint64_t>(i));
          if (refuting_world(m, f) >= 0 && i < best_idx) best_idx = i;
        }
        if (best_idx != std::numeric_limits<std::int64_t>::max()) best = best_idx;
      } else {
        for (std::uint64_t i = lo; i < hi; ++i) {
          KripkeModel m = space.decode(i);
          if (refuting_world(m, f) >= 0) { best = static_cast<std::int64_t>(i); break; }
        }
      }
      if (best >= 0) {
        KripkeModel m = space.decode(static_cast<std::uint64_t>(best));
        int w = refuting_world(m, f);
        Counterexample cex{m, m.worlds[w], evaluate(m, w, f), static_cast<std::uint64_t>(best), n};
        return {true, std::move(cex), b};
      }
    }
  }
  return {false, std::nullopt, b};
}

} // namespace

SearchResult find_countermodel(const Fptr& f, const SearchBounds& b, bool parallel) {
  return search_impl(f, b, parallel);
}

SearchResult find_countermodel_serial(const Fptr& f, const SearchBounds& b) {
  return search_impl(f, b, false);
}

KripkeModel random_model(int num_worlds, int chain_size, bool crisp,
                         const std::vector<std::string>& vars, std::uint64_t seed) {
  if (num_worlds < 1) throw std::invalid_argument("need at least one world");
  if (chain_size < 2) throw std::invalid_argument("chain needs at least the points 0 and 1");
  Rng rng(seed);
  KripkeModel m = KripkeModel::empty(world_names(num_worlds));
  for (int i = 0; i < num_worlds; ++i)
    for (int j = 0; j < num_worlds; ++j) {
      std::uint64_t digit = crisp ? rng.below(2) : rng.below(chain_size);
      m.relation[i][j] = crisp ? Rational(static_cast<std::int64_t>(digit), 1)
                               : chain_value(digit, chain_size);
    }
  for (const std::string& v : vars)
    for (int w = 0; w < num_worlds; ++w) {
      std::uint64_t digit = rng.below(chain_size);
      if (digit != 0) m.set_value(v, w, chain_value(digit, chain_size));
    }
  return m;
}

namespace {

std::vector<std::string> budget_vars(int budget) {
  static const char* names[] = {"p", "q", "r", "s", "t"};
  std::vector<std::string> out;
  for (int i = 0; i < budget && i < 5; ++i) out.push_back(names[i]);
  return out;
}

Fptr random_formula_rec(int depth, const std::vector<std::string>& vars, Rng& rng) {
  if (depth <= 0 || rng.below(8) == 0) {
    std::uint64_t k = rng.below(vars.size() + 2);
    if (k == 0) return bottom();
    if (k == 1) return top();
    return var(vars[k - 2]);
  }
  switch (rng.below(5)) {
    case 0: return conj(random_formula_rec(depth - 1, vars, rng),
                        random_formula_rec(depth - 1, vars, rng));
    case 1: return disj(random_formula_rec(depth - 1, vars, rng),
                        random_formula_rec(depth - 1, vars, rng));
    case 2: return implies(random_formula_rec(depth - 1, vars, rng),
                           random_formula_rec(depth - 1, vars, rng));
    case 3: return box(random_formula_rec(depth - 1, vars, rng));
    default: return dia(random_formula_rec(depth - 1, vars, rng));
  }
}

} // namespace

Fptr random_formula(int max_depth, int variable_budget, std::uint64_t seed) {
  Rng rng(seed);
  return random_formula_rec(max_depth, budget_vars(variable_budget), rng);
}

bool satisfies_frame_properties(const KripkeModel& m, const FrameFilter& filter) {
  int n = static_cast<int>(m.size());
  auto rel = [&](int i, int j) { return m.relation[i][j].is_one(); };
  for (const std::string& p : filter) {
    if (p == "reflexive") {
      for (int i = 0; i < n; ++i)
        if (!rel(i, i)) return false;
    } else if (p == "transitive") {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (rel(i, j) && rel(j, k) && !rel(i, k)) return false;
    } else if (p == "symmetric") {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel(i, j) && !rel(j, i)) return false;
    } else if (p == "euclidean") {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (rel(i, j) && rel(i, k) && !rel(j, k)) return false;
    } else if (p == "serial") {
      for (int i = 0; i < n; ++i) {
        bool succ = false;
        for (int j = 0; j < n; ++j) succ |= rel(i, j);
        if (!succ) return false;
      }
    } else {
      throw std::invalid_argument("unknown frame property '" + p + "'");
    }
  }
  return true;
}

void close_under_frame_properties(KripkeModel& m, const FrameFilter& filter) {
  if (!m.is_crisp()) throw std::invalid_argument("frame properties apply to crisp models");
  if (filter.empty()) return;
  int n = static_cast<int>(m.size());
  auto rel = [&](int i, int j) -> bool { return m.relation[i][j].is_one(); };
  auto set = [&](int i, int j) { m.relation[i][j] = Rational::one(); };
  bool changed = true;
  while (changed) {
    changed = false;
    if (filter.count("reflexive"))
      for (int i = 0; i < n; ++i)
        if (!rel(i, i)) { set(i, i); changed = true; }
    if (filter.count("symmetric"))
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel(i, j) && !rel(j, i)) { set(j, i); changed = true; }
    if (filter.count("transitive"))
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (rel(i, j) && rel(j, k) && !rel(i, k)) { set(i, k); changed = true; }
    if (filter.count("euclidean"))
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (rel(i, j) && rel(i, k) && !rel(j, k)) { set(j, k); changed = true; }
    if (filter.count("serial"))
      for (int i = 0; i < n; ++i) {
        bool succ = false;
        for (int j = 0; j < n; ++j) succ |= rel(i, j);
        if (!succ) { set(i, i); changed = true; }
      }
  }
}

namespace {

std::optional<FuzzViolation> fuzz_one(const std::vector<std::pair<std::string, Fptr>>& schemes,
                                      const FrameFilter& filter, const SearchBounds& bounds,
                                      std::uint64_t seed, std::uint64_t iteration) {
  Rng rng(mix_seed(seed, iteration));
  int n = 1 + static_cast<int>(rng.below(bounds.max_worlds));
  int k = 2 + static_cast<int>(rng.below(bounds.chain_size - 1));
  KripkeModel m =
      random_model(n, k, /*crisp=*/true, budget_vars(bounds.variable_budget), rng.next());
  close_under_frame_properties(m, filter);
  const auto& [name, scheme] = schemes[rng.below(schemes.size())];
  Substitution subst;
  std::set<std::string> metas;
  std::function<void(const Fptr&)> collect = [&](const Fptr& f) {
    if (f->kind == Kind::Meta) metas.insert(f->name);
    if (f->left) collect(f->left);
    if (f->right) collect(f->right);
  };
  collect(scheme);
  for (const std::string& mv : metas)
    subst.emplace(mv, random_formula_rec(3, budget_vars(bounds.variable_budget), rng));
  Fptr instance = instantiate_scheme(scheme, subst);
  for (std::size_t w = 0; w < m.size(); ++w) {
    Rational v = evaluate(m, static_cast<int>(w), instance);
    if (!v.is_one())
      return FuzzViolation{iteration, name, instance, m, m.worlds[w], v};
  }
  return std::nullopt;
}

} // namespace

FuzzReport fuzz_scheme_soundness(const std::map<std::string, Fptr>& schemes,
                                 const FrameFilter& filter, std::uint64_t iters,
                                 std::uint64_t seed, const SearchBounds& bounds, bool parallel) {
  if (schemes.empty()) throw std::invalid_argument("no schemes to fuzz");
  std::vector<std::pair<std::string, Fptr>> ordered(schemes.begin(), schemes.end());
  FuzzReport report;
  report.iterations = iters;
  report.seed = seed;
  if (parallel) {
    std::vector<std::vector<FuzzViolation>> per_thread;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
      per_thread.resize(static_cast<std::size_t>(omp_get_num_threads()));
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(iters); ++i) {
        auto v = fuzz_one(ordered, filter, bounds, seed, static_cast<std::uint64_t>(i));
        if (v) per_thread[static_cast<std::size_t>(omp_get_thread_num())].push_back(*v);
      }
    }
#else
    per_thread.resize(1);
    for (std::uint64_t i = 0; i < iters; ++i) {
      auto v = fuzz_one(ordered, filter, bounds, seed, i);
      if (v) per_thread[0].push_back(*v);
    }
#endif
    for (auto& vec : per_thread)
      report.violations.insert(report.violations.end(), vec.begin(), vec.end());
    std::sort(report.violations.begin(), report.violations.end(),
              [](const FuzzViolation& a, const FuzzViolation& b) { return a.iteration < b.iteration; });
  } else {
    for (std::uint64_t i = 0; i < iters; ++i) {
      auto v = fuzz_one(ordered, filter, bounds, seed, i);
      if (v) report.violations.push_back(*v);
    }
  }
  return report;
}

FuzzReport fuzz_axiom_soundness(const AxiomRegistry& registry, const FrameFilter& filter,
                                std::uint64_t iters, std::uint64_t seed,
                                const SearchBounds& bounds, bool parallel) {
  return fuzz_scheme_soundness(registry.axioms, filter, iters, seed, bounds, parallel);
}

std::string FuzzReport::to_json() const {
  nlohmann::json j;
  j["iterations"] = iterations;
  j["seed"] = seed;
  nlohmann::json viols = nlohmann::json::array();
  for (const FuzzViolation& v : violations) {
    nlohmann::json jv;
    jv["iteration"] = v.iteration;
    jv["scheme"] = v.scheme;
    jv["instance"] = format_formula(v.instance);
    jv["model"] = nlohmann::json::parse(v.model.to_json());
    jv["world"] = v.world;
    jv["value"] = v.value.str();
    viols.push_back(jv);
  }
  j["violations"] = viols;
  return j.dump(2);
}

} // namespace gmk
