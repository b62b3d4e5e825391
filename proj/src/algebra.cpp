#include "gmk/algebra.hpp"

#include "gmk/proof.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace gmk {

CrispFrame CrispFrame::empty(std::vector<std::string> world_ids) {
  if (world_ids.empty()) throw std::invalid_argument("frame needs a non-empty world set");
  CrispFrame f;
  f.worlds = std::move(world_ids);
  f.relation.assign(f.worlds.size(), std::vector<bool>(f.worlds.size(), false));
  return f;
}

CrispFrame CrispFrame::of_model(const KripkeModel& m) {
  if (!m.is_crisp()) throw std::invalid_argument("model is not crisp");
  CrispFrame f = CrispFrame::empty(m.worlds);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) f.relation[i][j] = m.relation[i][j].is_one();
  return f;
}

std::string CrispFrame::to_json() const {
  nlohmann::json j;
  j["worlds"] = worlds;
  nlohmann::json rel = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < size(); ++k)
      if (relation[i][k]) rel.push_back({worlds[i], worlds[k]});
  j["relation"] = rel;
  return j.dump(2);
}

CrispFrame CrispFrame::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CrispFrame f = CrispFrame::empty(j.at("worlds").get<std::vector<std::string>>());
  if (j.contains("relation"))
    for (const auto& pair : j.at("relation")) {
      std::size_t i = 0, k = 0;
      std::string from = pair.at(0).get<std::string>();
      std::string to = pair.at(1).get<std::string>();
      auto find = [&](const std::string& id) {
        for (std::size_t w = 0; w < f.size(); ++w)
          if (f.worlds[w] == id) return w;
        throw std::invalid_argument("unknown world identifier '" + id + "'");
      };
      i = find(from);
      k = find(to);
      f.relation[i][k] = true;
    }
  return f;
}

AlgebraElement complex_box(const CrispFrame& frame, const AlgebraElement& g) {
  if (g.size() != frame.size()) throw std::invalid_argument("element / frame size mismatch");
  AlgebraElement out(frame.size(), Rational::one()); // empty meet is 1
  for (std::size_t v = 0; v < frame.size(); ++v)
    for (std::size_t w = 0; w < frame.size(); ++w)
      if (frame.relation[v][w]) out[v] = godel_and(out[v], g[w]);
  return out;
}

AlgebraElement complex_dia(const CrispFrame& frame, const AlgebraElement& g) {
  if (g.size() != frame.size()) throw std::invalid_argument("element / frame size mismatch");
  AlgebraElement out(frame.size(), Rational::zero()); // empty join is 0
  for (std::size_t v = 0; v < frame.size(); ++v)
    for (std::size_t w = 0; w < frame.size(); ++w)
      if (frame.relation[v][w]) out[v] = godel_or(out[v], g[w]);
  return out;
}

AlgebraElement complex_op(const CrispFrame& frame, const std::string& op,
                          const AlgebraElement& g) {
  if (op == "box") return complex_box(frame, g);
  if (op == "dia") return complex_dia(frame, g);
  throw std::invalid_argument("unknown modal op '" + op + "'");
}

namespace {

AlgebraElement pointwise(const AlgebraElement& a, const AlgebraElement& b,
                         Rational (*op)(const Rational&, const Rational&)) {
  AlgebraElement out(a.size(), Rational::zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

} // namespace

bool SubalgebraClosure::contains(const AlgebraElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

SubalgebraClosure generate_subalgebra(const CrispFrame& frame,
                                      const std::vector<AlgebraElement>& generators,
                                      const std::set<AlgOp>& op_set) {
  SubalgebraClosure out;
  out.generators = generators;
  out.op_set = op_set;
  // and/or/implies are always in scope; op_set only selects the modalities
  std::set<AlgOp> ops = op_set;
  ops.insert(AlgOp::And);
  ops.insert(AlgOp::Or);
  ops.insert(AlgOp::Implies);

  std::map<AlgebraElement, std::string> traces;
  std::vector<AlgebraElement> worklist;
  auto add = [&](const AlgebraElement& e, std::string term) {
    if (e.size() != frame.size()) throw std::invalid_argument("element / frame size mismatch");
    if (traces.emplace(e, std::move(term)).second) worklist.push_back(e);
  };
  add(AlgebraElement(frame.size(), Rational::zero()), "0");
  add(AlgebraElement(frame.size(), Rational::one()), "1");
  for (std::size_t i = 0; i < generators.size(); ++i)
    add(generators[i], "g" + std::to_string(i + 1));

  while (!worklist.empty()) {
    AlgebraElement e = worklist.back();
    worklist.pop_back();
    std::string te = traces.at(e);
    if (ops.count(AlgOp::Box)) add(complex_box(frame, e), "[](" + te + ")");
    if (ops.count(AlgOp::Dia)) add(complex_dia(frame, e), "<>(" + te + ")");
    // binary ops against everything already present (both argument orders)
    std::vector<std::pair<AlgebraElement, std::string>> known(traces.begin(), traces.end());
    for (const auto& [f, tf] : known) {
      add(pointwise(e, f, godel_and), "(" + te + " & " + tf + ")");
      add(pointwise(e, f, godel_or), "(" + te + " | " + tf + ")");
      add(pointwise(e, f, godel_implies), "(" + te + " -> " + tf + ")");
      add(pointwise(f, e, godel_implies), "(" + tf + " -> " + te + ")");
    }
  }

  for (const auto& [e, t] : traces) out.elements.push_back(e);
  std::sort(out.elements.begin(), out.elements.end());
  out.traces = std::move(traces);
  return out;
}

NondefinabilityReport nondefinability_report(const CrispFrame& frame,
                                             const AlgebraElement& generator) {
  NondefinabilityReport r;
  r.dia_closure = generate_subalgebra(frame, {generator}, {AlgOp::Dia});
  r.box_closure = generate_subalgebra(frame, {generator}, {AlgOp::Box});
  r.box_of_generator = complex_box(frame, generator);
  r.dia_of_generator = complex_dia(frame, generator);
  r.box_escapes_dia_closure = !r.dia_closure.contains(r.box_of_generator);
  r.dia_escapes_box_closure = !r.box_closure.contains(r.dia_of_generator);
  return r;
}

OptimalModelReport compute_R_plus(const KripkeModel& m) {
  CrispFrame frame = CrispFrame::of_model(m);
  std::vector<AlgebraElement> generators;
  for (const auto& [var, row] : m.valuation) generators.push_back(row);
  OptimalModelReport rep;
  rep.subalgebra =
      generate_subalgebra(frame, generators, {AlgOp::Box, AlgOp::Dia});
  // (v, w) is in R+ iff box g at v <= g at w <= dia g at v for every g in
  // the subalgebra; the evaluation rows of all formulas are exactly that set
  std::size_t n = m.size();
  std::vector<std::vector<bool>> rplus(n, std::vector<bool>(n, true));
  for (const AlgebraElement& g : rep.subalgebra.elements) {
    AlgebraElement bg = complex_box(frame, g);
    AlgebraElement dg = complex_dia(frame, g);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (rplus[v][w] && !(bg[v] <= g[w] && g[w] <= dg[v])) rplus[v][w] = false;
  }
  bool optimal = true;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      if (rplus[v][w]) rep.r_plus.emplace_back(m.worlds[v], m.worlds[w]);
      if (rplus[v][w] != frame.relation[v][w]) optimal = false;
    }
  rep.is_optimal = optimal;
  return rep;
}

KripkeModel optimal_extension(const KripkeModel& m) {
  OptimalModelReport rep = compute_R_plus(m);
  KripkeModel out = m;
  for (auto& row : out.relation) std::fill(row.begin(), row.end(), Rational::zero());
  for (const auto& [from, to] : rep.r_plus)
    out.relation[out.world_index(from)][out.world_index(to)] = Rational::one();
  return out;
}

namespace {

AlgebraElement eval_scheme_element(const CrispFrame& frame, const Fptr& f,
                                   const std::map<std::string, AlgebraElement>& meta_assign,
                                   const KripkeModel& m) {
  switch (f->kind) {
    case Kind::Bottom: return AlgebraElement(frame.size(), Rational::zero());
    case Kind::Var: {
      AlgebraElement row(frame.size(), Rational::zero());
      for (std::size_t w = 0; w < frame.size(); ++w)
        row[w] = m.value_of(f->name, static_cast<int>(w));
      return row;
    }
    case Kind::Meta: return meta_assign.at(f->name);
    case Kind::And:
      return pointwise(eval_scheme_element(frame, f->left, meta_assign, m),
                       eval_scheme_element(frame, f->right, meta_assign, m), godel_and);
    case Kind::Or:
      return pointwise(eval_scheme_element(frame, f->left, meta_assign, m),
                       eval_scheme_element(frame, f->right, meta_assign, m), godel_or);
    case Kind::Implies:
      return pointwise(eval_scheme_element(frame, f->left, meta_assign, m),
                       eval_scheme_element(frame, f->right, meta_assign, m), godel_implies);
    case Kind::Box: return complex_box(frame, eval_scheme_element(frame, f->left, meta_assign, m));
    case Kind::Dia: return complex_dia(frame, eval_scheme_element(frame, f->left, meta_assign, m));
  }
  throw std::logic_error("unreachable");
}

} // namespace

bool validates_scheme(const KripkeModel& m, const Fptr& scheme) {
  CrispFrame frame = CrispFrame::of_model(m);
  OptimalModelReport rep = compute_R_plus(m);
  const std::vector<AlgebraElement>& domain = rep.subalgebra.elements;

  std::set<std::string> metas;
  std::function<void(const Fptr&)> collect = [&](const Fptr& f) {
    if (f->kind == Kind::Meta) metas.insert(f->name);
    if (f->left) collect(f->left);
    if (f->right) collect(f->right);
  };
  collect(scheme);
  std::vector<std::string> names(metas.begin(), metas.end());

  std::vector<std::size_t> idx(names.size(), 0);
  while (true) {
    std::map<std::string, AlgebraElement> assign;
    for (std::size_t i = 0; i < names.size(); ++i) assign.emplace(names[i], domain[idx[i]]);
    AlgebraElement val = eval_scheme_element(frame, scheme, assign, m);
    for (const Rational& v : val)
      if (!v.is_one()) return false;
    std::size_t i = 0;
    for (; i < names.size(); ++i) {
      if (++idx[i] < domain.size()) break;
      idx[i] = 0;
    }
    if (i == names.size()) break;
  }
  return true;
}

FrameReport frame_report(const KripkeModel& m) {
  CrispFrame frame = CrispFrame::of_model(m);
  std::size_t n = frame.size();
  auto rel = [&](std::size_t i, std::size_t j) { return static_cast<bool>(frame.relation[i][j]); };

  FrameReport rep;
  {
    bool refl = true, trans = true, sym = true, eucl = true, serial = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel(i, i)) refl = false;
      bool succ = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel(i, j)) succ = true;
        if (rel(i, j) && !rel(j, i)) sym = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (rel(i, j) && rel(j, k) && !rel(i, k)) trans = false;
          if (rel(i, j) && rel(i, k) && !rel(j, k)) eucl = false;
        }
      }
      if (!succ) serial = false;
    }
    rep.properties = {{"reflexive", refl}, {"transitive", trans}, {"symmetric", sym},
                      {"euclidean", eucl}, {"serial", serial}};
  }

  const auto& table = axiom_scheme_table();
  for (const char* name : {"T_box", "T_dia", "4_box", "4_dia", "B_1", "B_2", "5_1", "5_2", "D"})
    rep.scheme_validity[name] = validates_scheme(m, table.at(name));

  rep.is_optimal = compute_R_plus(m).is_optimal;

  auto pair_valid = [&](const char* a, const char* b) {
    return rep.scheme_validity.at(a) && (b == nullptr || rep.scheme_validity.at(b));
  };
  // seriality corresponds on every model; the other rows only on optimal ones
  rep.correspondence["serial"] = rep.properties.at("serial") == pair_valid("D", nullptr);
  if (rep.is_optimal) {
    rep.correspondence["reflexive"] = rep.properties.at("reflexive") == pair_valid("T_box", "T_dia");
    rep.correspondence["transitive"] =
        rep.properties.at("transitive") == pair_valid("4_box", "4_dia");
    rep.correspondence["symmetric"] = rep.properties.at("symmetric") == pair_valid("B_1", "B_2");
    rep.correspondence["euclidean"] = rep.properties.at("euclidean") == pair_valid("5_1", "5_2");
  }
  return rep;
}

std::string format_element(const AlgebraElement& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e[i].str();
  }
  return out;
}

AlgebraElement parse_element(const std::string& text) {
  AlgebraElement out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(Rational::parse(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON reports
// ---------------------------------------------------------------------------

namespace {

nlohmann::json closure_json(const SubalgebraClosure& c) {
  nlohmann::json j;
  nlohmann::json elems = nlohmann::json::array();
  for (const AlgebraElement& e : c.elements) {
    nlohmann::json je;
    nlohmann::json tuple = nlohmann::json::array();
    for (const Rational& v : e) tuple.push_back(v.str());
    je["element"] = tuple;
    je["trace"] = c.traces.at(e);
    elems.push_back(je);
  }
  j["size"] = c.elements.size();
  j["elements"] = elems;
  return j;
}

} // namespace

std::string NondefinabilityReport::to_json() const {
  nlohmann::json j;
  j["dia_closure"] = closure_json(dia_closure);
  j["box_closure"] = closure_json(box_closure);
  j["box_of_generator"] = format_element(box_of_generator);
  j["dia_of_generator"] = format_element(dia_of_generator);
  j["box_escapes_dia_closure"] = box_escapes_dia_closure;
  j["dia_escapes_box_closure"] = dia_escapes_box_closure;
  j["nondefinability_witnessed"] = box_escapes_dia_closure || dia_escapes_box_closure;
  return j.dump(2);
}

std::string FrameReport::to_json() const {
  nlohmann::json j;
  j["properties"] = properties;
  j["scheme_validity"] = scheme_validity;
  j["optimal"] = is_optimal;
  j["correspondence"] = correspondence;
  return j.dump(2);
}

} // namespace gmk
