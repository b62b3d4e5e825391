#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gmk/algebra.hpp"
#include "gmk/search.hpp"

using namespace gmk;

namespace {

AlgebraElement el(const char* s) { return parse_element(s); }

// x sees y and z; y and z are endpoints
CrispFrame fan_frame() {
  CrispFrame f = CrispFrame::empty({"x", "y", "z"});
  f.relation[0][1] = true;
  f.relation[0][2] = true;
  return f;
}

std::vector<AlgebraElement> sorted(std::vector<AlgebraElement> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("complex-algebra modal operators on the fan") {
  CrispFrame f = fan_frame();
  AlgebraElement g = el("0,1/2,1/3");
  CHECK(complex_box(f, g) == el("1/3,1,1"));
  CHECK(complex_dia(f, g) == el("1/2,0,0"));
  CHECK(complex_op(f, "box", g) == complex_box(f, g));
  CHECK_THROWS(complex_op(f, "huh", g));
}

TEST_CASE("diamond-generated subalgebra of the fan is the known nine-element set") {
  SubalgebraClosure c = generate_subalgebra(fan_frame(), {el("0,1/2,1/3")}, {AlgOp::Dia});
  std::vector<AlgebraElement> expected = sorted({
      el("0,0,0"), el("1,1,1"), el("1,0,0"), el("0,1,1"), el("0,1/2,1/3"),
      el("1,1/2,1/3"), el("1/2,1/2,1/3"), el("1/2,0,0"), el("1/2,1,1")});
  CHECK(c.elements == expected);
  // box of the generator escapes it
  CHECK(!c.contains(el("1/3,1,1")));
}

TEST_CASE("box-generated subalgebra of the fan is the known nine-element set") {
  SubalgebraClosure c = generate_subalgebra(fan_frame(), {el("0,1/2,1/3")}, {AlgOp::Box});
  std::vector<AlgebraElement> expected = sorted({
      el("0,0,0"), el("1,1,1"), el("1,0,0"), el("0,1,1"), el("0,1/2,1/3"),
      el("1,1/2,1/3"), el("1/3,1/2,1/3"), el("1/3,0,0"), el("1/3,1,1")});
  CHECK(c.elements == expected);
  // diamond of the generator escapes it
  CHECK(!c.contains(el("1/2,0,0")));
}

TEST_CASE("closure traces replay to their element") {
  CrispFrame f = fan_frame();
  SubalgebraClosure c = generate_subalgebra(f, {el("0,1/2,1/3")}, {AlgOp::Box, AlgOp::Dia});
  // replay each trace as a formula over a model whose variable g1 is the generator
  KripkeModel m = KripkeModel::empty(f.worlds);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f.relation[i][j]) m.relation[i][j] = Rational(1);
  AlgebraElement g = el("0,1/2,1/3");
  for (std::size_t w = 0; w < 3; ++w) m.set_value("g1", static_cast<int>(w), g[w]);
  for (const AlgebraElement& e : c.elements) {
    Fptr term = parse_formula(c.traces.at(e));
    CHECK(evaluate_row(m, term) == e);
  }
}

TEST_CASE("non-definability witnesses on the fan") {
  NondefinabilityReport rep = nondefinability_report(fan_frame(), el("0,1/2,1/3"));
  CHECK(rep.box_of_generator == el("1/3,1,1"));
  CHECK(rep.dia_of_generator == el("1/2,0,0"));
  CHECK(rep.box_escapes_dia_closure);
  CHECK(rep.dia_escapes_box_closure);
  CHECK(rep.dia_closure.elements.size() == 9);
  CHECK(rep.box_closure.elements.size() == 9);
}

TEST_CASE("a two-valued generator yields no witness (oracle cross-check)") {
  CrispFrame f = fan_frame();
  AlgebraElement g = el("0,1,1");
  NondefinabilityReport rep = nondefinability_report(f, g);
  CHECK(!rep.box_escapes_dia_closure);
  CHECK(!rep.dia_escapes_box_closure);

  // independent fixpoint over raw vectors, no SubalgebraClosure machinery
  auto brute = [&](bool use_dia) {
    std::set<AlgebraElement> acc{g, el("0,0,0"), el("1,1,1")};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<AlgebraElement> next = acc;
      auto put = [&](const AlgebraElement& e) {
        if (next.insert(e).second) grew = true;
      };
      for (const auto& a : acc) {
        put(use_dia ? complex_dia(f, a) : complex_box(f, a));
        for (const auto& b : acc) {
          AlgebraElement meet(3), join(3), res(3);
          for (int i = 0; i < 3; ++i) {
            meet[i] = godel_and(a[i], b[i]);
            join[i] = godel_or(a[i], b[i]);
            res[i] = godel_implies(a[i], b[i]);
          }
          put(meet);
          put(join);
          put(res);
        }
      }
      acc = std::move(next);
    }
    return acc;
  };
  std::set<AlgebraElement> dia_oracle = brute(true);
  std::set<AlgebraElement> box_oracle = brute(false);
  CHECK(std::set<AlgebraElement>(rep.dia_closure.elements.begin(),
                                 rep.dia_closure.elements.end()) == dia_oracle);
  CHECK(std::set<AlgebraElement>(rep.box_closure.elements.begin(),
                                 rep.box_closure.elements.end()) == box_oracle);
  CHECK(dia_oracle.count(complex_box(f, g)) == 1);
  CHECK(box_oracle.count(complex_dia(f, g)) == 1);
}

TEST_CASE("largest evaluation-preserving relation on one-world models") {
  // no self-loop, p = 1/2: the empty relation is already the largest
  KripkeModel bare = KripkeModel::empty({"w"});
  bare.set_value("p", 0, Rational(1, 2));
  OptimalModelReport r1 = compute_R_plus(bare);
  CHECK(r1.r_plus.empty());
  CHECK(r1.is_optimal);

  // with a self-loop the loop survives
  KripkeModel loop = bare;
  loop.relation[0][0] = Rational(1);
  OptimalModelReport r2 = compute_R_plus(loop);
  CHECK(r2.r_plus == std::vector<std::pair<std::string, std::string>>{{"w", "w"}});
  CHECK(r2.is_optimal);
}

TEST_CASE("constant valuations admit a strictly larger relation") {
  // two reflexive worlds, p constantly 1/2: every pair preserves evaluation
  KripkeModel m = KripkeModel::empty({"u", "v"});
  m.relation[0][0] = Rational(1);
  m.relation[1][1] = Rational(1);
  m.set_value("p", 0, Rational(1, 2));
  m.set_value("p", 1, Rational(1, 2));
  OptimalModelReport rep = compute_R_plus(m);
  CHECK(rep.r_plus.size() == 4);
  CHECK(!rep.is_optimal);

  KripkeModel ext = optimal_extension(m);
  CHECK(compute_R_plus(ext).is_optimal);
  // and the extension really leaves evaluation alone
  for (std::uint64_t s = 0; s < 50; ++s) {
    Fptr f = random_formula(4, 1, s);
    for (int w = 0; w < 2; ++w) CHECK(evaluate(m, w, f) == evaluate(ext, w, f));
  }
}

TEST_CASE("relation extension is sound, monotone and idempotent on random models") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    KripkeModel m = random_model(3, 3, true, {"p", "q"}, seed);
    KripkeModel ext = optimal_extension(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(m.relation[i][j] <= ext.relation[i][j]); // R subset of R+
    for (std::uint64_t fs = 0; fs < 20; ++fs) {
      Fptr f = random_formula(4, 2, seed * 1000 + fs);
      for (int w = 0; w < 3; ++w) CHECK(evaluate(m, w, f) == evaluate(ext, w, f));
    }
    KripkeModel ext2 = optimal_extension(ext);
    CHECK(ext.to_json() == ext2.to_json()); // idempotent
  }
}

TEST_CASE("scheme validity over the generated subalgebra") {
  KripkeModel refl = KripkeModel::empty({"a", "b"});
  refl.relation[0][0] = Rational(1);
  refl.relation[1][1] = Rational(1);
  refl.relation[0][1] = Rational(1);
  refl.set_value("p", 0, Rational(1, 2));
  refl.set_value("p", 1, Rational(1, 3));
  CHECK(validates_scheme(refl, axiom_scheme_table().at("T_box")));
  CHECK(validates_scheme(refl, axiom_scheme_table().at("T_dia")));
  CHECK(!validates_scheme(refl, axiom_scheme_table().at("B_1")));
}

TEST_CASE("frame report on a reflexive transitive model") {
  KripkeModel m = KripkeModel::empty({"a", "b"});
  m.relation[0][0] = Rational(1);
  m.relation[1][1] = Rational(1);
  m.relation[0][1] = Rational(1);
  m.set_value("p", 1, Rational(1, 2));
  FrameReport rep = frame_report(m);
  CHECK(rep.properties.at("reflexive"));
  CHECK(rep.properties.at("transitive"));
  CHECK(rep.properties.at("serial"));
  CHECK(!rep.properties.at("symmetric"));
  CHECK(rep.scheme_validity.at("T_box"));
  CHECK(rep.scheme_validity.at("4_box"));
  CHECK(rep.scheme_validity.at("D"));
  CHECK(rep.correspondence.at("serial"));
}

TEST_CASE("element parsing and printing") {
  CHECK(format_element(el("0,1/2,1")) == "0,1/2,1");
  CHECK(el("1/2,1,0") == (AlgebraElement{Rational(1, 2), Rational(1), Rational(0)}));
  CHECK_THROWS(parse_element(""));
  CHECK_THROWS(parse_element("0,x"));
}

TEST_CASE("frame JSON round trip and model conversion") {
  CrispFrame f = fan_frame();
  CrispFrame back = CrispFrame::from_json(f.to_json());
  CHECK(back.worlds == f.worlds);
  CHECK(back.relation == f.relation);

  KripkeModel fuzzy = KripkeModel::empty({"w"});
  fuzzy.relation[0][0] = Rational(1, 2);
  CHECK_THROWS(CrispFrame::of_model(fuzzy));
}
