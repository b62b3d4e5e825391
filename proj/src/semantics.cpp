#include "gmk/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace gmk {

KripkeModel KripkeModel::empty(std::vector<std::string> world_ids) {
  if (world_ids.empty()) throw std::invalid_argument("model needs a non-empty world set");
  KripkeModel m;
  m.worlds = std::move(world_ids);
  m.relation.assign(m.worlds.size(), std::vector<Rational>(m.worlds.size(), Rational::zero()));
  return m;
}

int KripkeModel::world_index(const std::string& id) const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown world identifier '" + id + "'");
}

bool KripkeModel::is_crisp() const {
  for (const auto& row : relation)
    for (const auto& v : row)
      if (!v.is_crisp()) return false;
  return true;
}

Rational KripkeModel::value_of(const std::string& var, int w) const {
  auto it = valuation.find(var);
  if (it == valuation.end()) return Rational::zero();
  return it->second[static_cast<std::size_t>(w)];
}

void KripkeModel::set_value(const std::string& var, int w, const Rational& v) {
  auto it = valuation.find(var);
  if (it == valuation.end())
    it = valuation.emplace(var, std::vector<Rational>(worlds.size(), Rational::zero())).first;
  it->second[static_cast<std::size_t>(w)] = v;
}

Rational evaluate(const KripkeModel& m, int world, const Fptr& f) {
  switch (f->kind) {
    case Kind::Bottom: return Rational::zero();
    case Kind::Var: return m.value_of(f->name, world);
    case Kind::And: return godel_and(evaluate(m, world, f->left), evaluate(m, world, f->right));
    case Kind::Or: return godel_or(evaluate(m, world, f->left), evaluate(m, world, f->right));
    case Kind::Implies:
      return godel_implies(evaluate(m, world, f->left), evaluate(m, world, f->right));
    case Kind::Box: {
      // empty meet is 1; worlds with relation value 0 contribute 1
      Rational acc = Rational::one();
      for (std::size_t w = 0; w < m.size(); ++w) {
        Rational r = m.relation[static_cast<std::size_t>(world)][w];
        if (r.is_zero()) continue;
        acc = godel_and(acc, godel_implies(r, evaluate(m, static_cast<int>(w), f->left)));
      }
      return acc;
    }
    case Kind::Dia: {
      Rational acc = Rational::zero();
      for (std::size_t w = 0; w < m.size(); ++w) {
        Rational r = m.relation[static_cast<std::size_t>(world)][w];
        if (r.is_zero()) continue;
        acc = godel_or(acc, godel_and(r, evaluate(m, static_cast<int>(w), f->left)));
      }
      return acc;
    }
    case Kind::Meta: throw std::invalid_argument("cannot evaluate a scheme metavariable");
  }
  throw std::logic_error("unreachable");
}

Rational evaluate(const KripkeModel& m, const std::string& world, const Fptr& f) {
  return evaluate(m, m.world_index(world), f);
}

std::vector<Rational> evaluate_row(const KripkeModel& m, const Fptr& f) {
  std::vector<Rational> row;
  row.reserve(m.size());
  for (std::size_t w = 0; w < m.size(); ++w) row.push_back(evaluate(m, static_cast<int>(w), f));
  return row;
}

bool valid_in_model(const KripkeModel& m, const Fptr& f) {
  for (std::size_t w = 0; w < m.size(); ++w)
    if (!evaluate(m, static_cast<int>(w), f).is_one()) return false;
  return true;
}

EntailmentVerdict local_consequence(const KripkeModel& m, const std::vector<Fptr>& premises,
                                    const Fptr& conclusion) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    bool all_true = true;
    for (const Fptr& g : premises)
      if (!evaluate(m, static_cast<int>(w), g).is_one()) { all_true = false; break; }
    if (!all_true) continue;
    Rational v = evaluate(m, static_cast<int>(w), conclusion);
    if (!v.is_one()) return {false, {{m.worlds[w], v}}};
  }
  return {true, std::nullopt};
}

EntailmentVerdict global_consequence(const KripkeModel& m, const std::vector<Fptr>& premises,
                                     const Fptr& conclusion) {
  for (const Fptr& g : premises)
    if (!valid_in_model(m, g)) return {true, std::nullopt};
  for (std::size_t w = 0; w < m.size(); ++w) {
    Rational v = evaluate(m, static_cast<int>(w), conclusion);
    if (!v.is_one()) return {false, {{m.worlds[w], v}}};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Propositional decision procedure
// ---------------------------------------------------------------------------

namespace {

Rational eval_prop(const Fptr& f, const std::map<std::string, Rational>& h) {
  switch (f->kind) {
    case Kind::Bottom: return Rational::zero();
    case Kind::Var: {
      auto it = h.find(f->name);
      return it == h.end() ? Rational::zero() : it->second;
    }
    case Kind::And: return godel_and(eval_prop(f->left, h), eval_prop(f->right, h));
    case Kind::Or: return godel_or(eval_prop(f->left, h), eval_prop(f->right, h));
    case Kind::Implies: return godel_implies(eval_prop(f->left, h), eval_prop(f->right, h));
    default: throw std::invalid_argument("propositional evaluation on a modal formula");
  }
}

} // namespace

PropVerdict decide_prop_validity_on_chain(const Fptr& f, int chain_points) {
  if (contains_modal(f))
    throw std::invalid_argument("decide_prop_validity: formula contains a modal operator");
  if (chain_points < 2) throw std::invalid_argument("chain needs at least the points 0 and 1");
  std::vector<std::string> vars = variables_of(f);
  std::vector<Rational> chain;
  for (int i = 0; i < chain_points; ++i) chain.emplace_back(i, chain_points - 1);

  std::size_t n = vars.size();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::map<std::string, Rational> h;
    for (std::size_t i = 0; i < n; ++i) h[vars[i]] = chain[idx[i]];
    Rational v = eval_prop(f, h);
    if (!v.is_one()) {
      PropVerdict out;
      out.valid = false;
      out.countervaluation = std::move(h);
      out.counter_value = v;
      return out;
    }
    // next assignment (or done, including the n == 0 case)
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < chain.size()) break;
      idx[i] = 0;
    }
    if (i == n) break;
  }
  return {};
}

PropVerdict decide_prop_validity(const Fptr& f) {
  int n = static_cast<int>(variables_of(f).size());
  return decide_prop_validity_on_chain(f, n + 2);
}

KripkeModel rescale_model(const KripkeModel& m, const std::map<Rational, Rational>& sigma) {
  auto apply = [&](const Rational& v) {
    auto it = sigma.find(v);
    if (it == sigma.end())
      throw std::invalid_argument("rescale_model: sigma undefined on value " + v.str());
    return it->second;
  };
  // strictly order-preserving on its whole domain, fixing 0 and 1
  const Rational* prev_in = nullptr;
  const Rational* prev_out = nullptr;
  for (const auto& [in, out] : sigma) {
    if (in.is_zero() && !out.is_zero())
      throw std::invalid_argument("rescale_model: sigma must fix 0");
    if (in.is_one() && !out.is_one())
      throw std::invalid_argument("rescale_model: sigma must fix 1");
    if (prev_in && !(*prev_out < out))
      throw std::invalid_argument("rescale_model: sigma is not strictly increasing");
    prev_in = &in;
    prev_out = &out;
  }
  KripkeModel out = m;
  for (auto& row : out.relation)
    for (auto& v : row) v = apply(v);
  for (auto& [var, row] : out.valuation)
    for (auto& v : row) v = apply(v);
  return out;
}

// ---------------------------------------------------------------------------
// JSON model files
// ---------------------------------------------------------------------------

std::string KripkeModel::to_json() const {
  nlohmann::json j;
  j["worlds"] = worlds;
  nlohmann::json rel = nlohmann::json::array();
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t w = 0; w < size(); ++w)
      if (!relation[v][w].is_zero())
        rel.push_back({{"from", worlds[v]}, {"to", worlds[w]}, {"value", relation[v][w].str()}});
  j["relation"] = rel;
  nlohmann::json val = nlohmann::json::object();
  for (const auto& [name, row] : valuation) {
    nlohmann::json per_world = nlohmann::json::object();
    for (std::size_t w = 0; w < size(); ++w)
      if (!row[w].is_zero()) per_world[worlds[w]] = row[w].str();
    val[name] = per_world;
  }
  j["valuation"] = val;
  return j.dump(2);
}

KripkeModel KripkeModel::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  KripkeModel m = KripkeModel::empty(j.at("worlds").get<std::vector<std::string>>());
  if (j.contains("relation"))
    for (const auto& edge : j.at("relation")) {
      int from = m.world_index(edge.at("from").get<std::string>());
      int to = m.world_index(edge.at("to").get<std::string>());
      m.relation[from][to] = Rational::parse(edge.at("value").get<std::string>());
    }
  if (j.contains("valuation"))
    for (const auto& [var, per_world] : j.at("valuation").items())
      for (const auto& [world, value] : per_world.items())
        m.set_value(var, m.world_index(world), Rational::parse(value.get<std::string>()));
  return m;
}

} // namespace gmk
