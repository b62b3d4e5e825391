#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gmk/model.hpp"
#include "gmk/search.hpp"

using namespace gmk;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

// three worlds, x sees y and z, p = <0, 1/2, 1/3>
KripkeModel fan_model() {
  KripkeModel m = KripkeModel::empty({"x", "y", "z"});
  m.relation[0][1] = Rational(1);
  m.relation[0][2] = Rational(1);
  m.set_value("p", 1, rat("1/2"));
  m.set_value("p", 2, rat("1/3"));
  return m;
}

} // namespace

TEST_CASE("truth-functional clauses on the standard algebra") {
  std::vector<Rational> grid{rat("0"), rat("1/3"), rat("1/2"), rat("2/3"), rat("1")};
  for (const Rational& a : grid)
    for (const Rational& b : grid) {
      CHECK(godel_and(a, b) == std::min(a, b));
      CHECK(godel_or(a, b) == std::max(a, b));
      CHECK(godel_implies(a, b) == (a <= b ? Rational(1) : b));
      // residuation: min(a, c) <= b  iff  c <= a -> b
      for (const Rational& c : grid)
        CHECK((godel_and(a, c) <= b) == (c <= godel_implies(a, b)));
    }
  CHECK(godel_not(rat("0")) == Rational(1));
  CHECK(godel_not(rat("1/2")) == Rational(0));
  CHECK(godel_not(rat("1")) == Rational(0));
}

TEST_CASE("modal clauses on the two-successor fan") {
  KripkeModel m = fan_model();
  Fptr p = parse_formula("p");
  CHECK(evaluate(m, "x", box(p)) == rat("1/3"));
  CHECK(evaluate(m, "x", dia(p)) == rat("1/2"));
  // y and z have no successors: empty meet is 1, empty join is 0
  CHECK(evaluate(m, "y", box(p)) == Rational(1));
  CHECK(evaluate(m, "y", dia(p)) == Rational(0));
  CHECK(evaluate_row(m, box(p)) ==
        std::vector<Rational>{rat("1/3"), Rational(1), Rational(1)});
  CHECK(evaluate_row(m, dia(p)) ==
        std::vector<Rational>{rat("1/2"), Rational(0), Rational(0)});
  // negation collapses intermediate values
  CHECK(evaluate(m, "x", parse_formula("~p")) == Rational(1));
  CHECK(evaluate(m, "y", parse_formula("~~p")) == Rational(1));
}

TEST_CASE("valued relation edges weight both modalities") {
  KripkeModel m = KripkeModel::empty({"u", "w"});
  m.relation[0][1] = rat("1/2");
  m.set_value("q", 1, rat("1/2"));
  // box: R(u,w) -> q(w) = 1/2 -> 1/2 = 1; dia: min(1/2, 1/2) = 1/2
  CHECK(evaluate(m, "u", parse_formula("[]q")) == Rational(1));
  CHECK(evaluate(m, "u", parse_formula("<>q")) == rat("1/2"));
  // the crisp-only distribution scheme fails at value 1/2 here
  CHECK(evaluate(m, "u", parse_formula("[](0 | q) -> ([]0 | <>q)")) == rat("1/2"));
  CHECK(!m.is_crisp());
  CHECK(fan_model().is_crisp());
}

TEST_CASE("model JSON round trip") {
  KripkeModel m = fan_model();
  m.relation[1][2] = rat("2/3");
  KripkeModel back = KripkeModel::from_json(m.to_json());
  CHECK(back.worlds == m.worlds);
  CHECK(back.relation == m.relation);
  CHECK(back.valuation == m.valuation);
  CHECK_THROWS(m.world_index("nope"));
}

TEST_CASE("local and global consequence differ on necessitation") {
  std::vector<Fptr> prem{parse_formula("p")};
  Fptr conc = parse_formula("[]p");
  KripkeModel m = KripkeModel::empty({"a", "b"});
  m.relation[0][1] = Rational(1);
  m.set_value("p", 0, Rational(1));
  // p holds at a but not at b, so p is not valid: global holds vacuously
  CHECK(global_consequence(m, prem, conc).holds);
  EntailmentVerdict local = local_consequence(m, prem, conc);
  CHECK(!local.holds);
  REQUIRE(local.witness.has_value());
  CHECK(local.witness->first == "a");
  CHECK(local.witness->second == Rational(0));
}

TEST_CASE("propositional validity on small chains") {
  CHECK(decide_prop_validity(parse_formula("p -> p")).valid);
  CHECK(decide_prop_validity(parse_formula("(p -> q) | (q -> p)")).valid);
  CHECK(decide_prop_validity(parse_formula("~(p & ~p)")).valid);
  PropVerdict em = decide_prop_validity(parse_formula("p | ~p"));
  CHECK(!em.valid);
  Rational witness = em.countervaluation.at("p");
  CHECK(Rational(0) < witness);
  CHECK(witness < Rational(1));
  CHECK(em.counter_value < Rational(1));
  // double negation elimination also fails
  CHECK(!decide_prop_validity(parse_formula("~~p -> p")).valid);
  CHECK_THROWS(decide_prop_validity(parse_formula("[]p -> p")));
}

TEST_CASE("propositional decider agrees with a larger-chain oracle") {
  // test-local generator for modal-free formulas
  struct Gen {
    Rng rng;
    explicit Gen(std::uint64_t s) : rng(s) {}
    Fptr go(int depth) {
      if (depth <= 0 || rng.below(4) == 0) {
        switch (rng.below(5)) {
          case 0: return bottom();
          case 1: return top();
          case 2: return var("p");
          case 3: return var("q");
          default: return var("r");
        }
      }
      switch (rng.below(3)) {
        case 0: return conj(go(depth - 1), go(depth - 1));
        case 1: return disj(go(depth - 1), go(depth - 1));
        default: return implies(go(depth - 1), go(depth - 1));
      }
    }
  };
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    Gen g(seed);
    Fptr f = g.go(4);
    int n = static_cast<int>(variables_of(f).size());
    PropVerdict fast = decide_prop_validity(f);
    PropVerdict oracle = decide_prop_validity_on_chain(f, n + 5);
    CAPTURE(format_formula(f));
    CHECK(fast.valid == oracle.valid);
  }
}

TEST_CASE("rescaling by a strictly monotone bijection preserves evaluation shape") {
  std::map<Rational, Rational> sigma{{rat("0"), rat("0")},
                                     {rat("1/2"), rat("7/8")},
                                     {rat("1"), rat("1")}};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    KripkeModel m = random_model(3, 3, false, {"p", "q"}, seed);
    KripkeModel scaled = rescale_model(m, sigma);
    for (std::uint64_t fs = 0; fs < 5; ++fs) {
      Fptr f = random_formula(4, 2, seed * 31 + fs);
      for (int w = 0; w < 3; ++w) {
        Rational before = evaluate(m, w, f);
        auto it = sigma.find(before);
        REQUIRE(it != sigma.end());
        CHECK(evaluate(scaled, w, f) == it->second);
      }
    }
  }
  // not strictly increasing -> rejected
  std::map<Rational, Rational> bad{{rat("0"), rat("0")},
                                   {rat("1/2"), rat("1/2")},
                                   {rat("2/3"), rat("1/3")},
                                   {rat("1"), rat("1")}};
  KripkeModel m = random_model(2, 4, false, {"p"}, 7);
  CHECK_THROWS(rescale_model(m, bad));
}

TEST_CASE("rational parsing and printing") {
  CHECK(rat("2/4") == rat("1/2"));
  CHECK(rat("1/2").str() == "1/2");
  CHECK(rat("0").str() == "0");
  CHECK(rat("1").str() == "1");
  CHECK_THROWS(Rational::parse("3/2")); // outside [0,1]
  CHECK_THROWS(Rational::parse("x"));
}
