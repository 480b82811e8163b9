#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <stdexcept>
#include <vector>

#include "groth/laurent.hpp"
#include "groth/rng.hpp"

using groth::Family;
using groth::LaurentPoly;
using groth::Monomial;
using groth::Rat;
using groth::Var;

namespace {

LaurentPoly var(Family f, int i) { return LaurentPoly::variable(Var{f, i}); }

// Small random Laurent polynomials over a fixed variable pool, exponents in
// [-2, 2], coefficients in [-3, 3].
LaurentPoly random_poly(groth::Lcg64& rng) {
  static const Var pool[] = {Var{Family::a, 1}, Var{Family::b, 1}, Var{Family::b, 2},
                             Var{Family::x, 1}, Var{Family::y, 1}};
  LaurentPoly f;
  const int terms = 1 + static_cast<int>(rng.below(4));
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<Var, int>> entries;
    for (const Var& v : pool)
      if (rng.below(2)) entries.emplace_back(v, static_cast<int>(rng.below(5)) - 2);
    int coeff = static_cast<int>(rng.below(7)) - 3;
    if (coeff == 0) coeff = 1;
    f += LaurentPoly::term(Monomial(entries), coeff);
  }
  return f;
}

}  // namespace

TEST_CASE("variable names parse and print", "[laurent]") {
  REQUIRE(groth::parse_var("b12") == Var{Family::b, 12});
  REQUIRE(groth::to_string(Var{Family::x, 3}) == "x3");
  for (const char* name : {"a1", "b2", "x1", "y7", "z10", "c1"})
    REQUIRE(groth::to_string(groth::parse_var(name)) == name);
  for (const char* bad : {"b0", "q1", "b", "1b", "b1x", "b-1", "b1000001"})
    REQUIRE_THROWS_AS(groth::parse_var(bad), std::invalid_argument);
}

TEST_CASE("variable order puts the scratch family last", "[laurent]") {
  REQUIRE(Var{Family::a, 2} < Var{Family::b, 1});
  REQUIRE(Var{Family::b, 1} < Var{Family::b, 2});
  REQUIRE(Var{Family::z, 1} < Var{Family::c, 1});
}

TEST_CASE("canonical term order is graded with pinned renderings", "[laurent]") {
  REQUIRE(groth::to_string(LaurentPoly()) == "0");
  REQUIRE(groth::to_string(LaurentPoly(1)) == "1");
  REQUIRE(groth::to_string(LaurentPoly(-3)) == "-3");
  REQUIRE(groth::to_string(var(Family::x, 1) - var(Family::y, 1)) == "x1 - y1");
  const LaurentPoly ratio =
      LaurentPoly(1) - LaurentPoly::term(Monomial({{Var{Family::b, 1}, 1},
                                                   {Var{Family::b, 2}, -1}}),
                                         1);
  REQUIRE(groth::to_string(ratio) == "1 - b1*b2^-1");
  REQUIRE(groth::to_string(-var(Family::x, 1)) == "-x1");
  REQUIRE(groth::to_string(LaurentPoly(2) * var(Family::x, 1)) == "2*x1");
  REQUIRE(groth::to_string(var(Family::x, 1) * var(Family::x, 1)) == "x1^2");
  REQUIRE(groth::to_string(var(Family::x, 1) + 2) == "2 + x1");
  REQUIRE(groth::to_string(var(Family::y, 2) - var(Family::y, 1)) == "-y1 + y2");
  REQUIRE(groth::to_string(var(Family::x, 1) + var(Family::x, 1) * var(Family::y, 1)) ==
          "x1 + x1*y1");
}

TEST_CASE("ring axioms on fixed and random inputs", "[laurent]") {
  const LaurentPoly f = var(Family::x, 1) + 2;
  const LaurentPoly g = var(Family::y, 1) - 1;
  const LaurentPoly h = var(Family::x, 1) * var(Family::y, 1);
  REQUIRE((f + g) * h == f * h + g * h);
  REQUIRE(f * g == g * f);
  REQUIRE((f - f).is_zero());
  REQUIRE(f * LaurentPoly() == LaurentPoly());
  groth::Lcg64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE(a * (b * c) == (a * b) * c);
  }
}

TEST_CASE("pow", "[laurent]") {
  const LaurentPoly f = var(Family::x, 1) + 1;
  REQUIRE(groth::pow(f, 0) == LaurentPoly(1));
  REQUIRE(groth::pow(f, 3) == f * f * f);
  REQUIRE_THROWS_AS(groth::pow(f, -1), std::invalid_argument);
}

TEST_CASE("monomial exponent overflow is caught", "[laurent]") {
  const Monomial m(Var{Family::b, 1}, 1000);
  REQUIRE_THROWS_AS(m.pow(2000), std::overflow_error);
}

TEST_CASE("coefficient extraction and exponent ranges", "[laurent]") {
  const LaurentPoly f = groth::pow(var(Family::x, 1) + var(Family::y, 1), 2);
  REQUIRE(f.coefficient_of(Var{Family::x, 1}, 1) == 2 * var(Family::y, 1));
  REQUIRE(f.coefficient_of(Var{Family::x, 1}, 2) == LaurentPoly(1));
  const LaurentPoly ratio =
      LaurentPoly(1) - LaurentPoly::term(Monomial({{Var{Family::b, 1}, 1},
                                                   {Var{Family::b, 2}, -1}}),
                                         1);
  REQUIRE(ratio.min_exponent(Var{Family::b, 2}) == -1);
  REQUIRE(ratio.max_exponent(Var{Family::b, 2}) == 0);
  REQUIRE(ratio.min_exponent(Var{Family::z, 1}) == 0);
}

TEST_CASE("unit monomial detection", "[laurent]") {
  const LaurentPoly b1 = var(Family::b, 1);
  auto unit = b1.as_unit_monomial();
  REQUIRE(unit.has_value());
  REQUIRE(unit->first == Monomial(Var{Family::b, 1}, 1));
  REQUIRE(unit->second == 1);
  REQUIRE((-b1).as_unit_monomial()->second == -1);
  REQUIRE(LaurentPoly(1).as_unit_monomial()->first.is_one());
  REQUIRE(!(2 * b1).as_unit_monomial().has_value());
  REQUIRE(!(b1 + 1).as_unit_monomial().has_value());
  REQUIRE(!LaurentPoly().as_unit_monomial().has_value());
}

TEST_CASE("substitution is simultaneous", "[laurent]") {
  const LaurentPoly x1 = var(Family::x, 1), y1 = var(Family::y, 1);
  std::map<Var, LaurentPoly> swap;
  swap.emplace(Var{Family::x, 1}, y1);
  swap.emplace(Var{Family::y, 1}, x1);
  REQUIRE((x1 - y1).substitute(swap) == y1 - x1);
  std::map<Var, LaurentPoly> expand;
  expand.emplace(Var{Family::x, 1}, var(Family::a, 1) + 1);
  REQUIRE((x1 * x1 + y1).substitute(expand) ==
          groth::pow(var(Family::a, 1) + 1, 2) + y1);
}

TEST_CASE("substitution into negative exponents needs unit images", "[laurent]") {
  const LaurentPoly f = LaurentPoly::term(Monomial(Var{Family::b, 2}, -1), 1);
  std::map<Var, LaurentPoly> good;
  good.emplace(Var{Family::b, 2}, var(Family::b, 1) * var(Family::b, 2));
  REQUIRE(f.substitute(good) ==
          LaurentPoly::term(Monomial({{Var{Family::b, 1}, -1}, {Var{Family::b, 2}, -1}}), 1));
  std::map<Var, LaurentPoly> negated;
  negated.emplace(Var{Family::b, 2}, -var(Family::b, 1));
  REQUIRE(f.substitute(negated) == -LaurentPoly::term(Monomial(Var{Family::b, 1}, -1), 1));
  std::map<Var, LaurentPoly> bad;
  bad.emplace(Var{Family::b, 2}, var(Family::b, 1) + 1);
  REQUIRE_THROWS_AS(f.substitute(bad), std::domain_error);
}

TEST_CASE("evaluation over rationals", "[laurent]") {
  const LaurentPoly f = var(Family::x, 1) - var(Family::y, 1);
  std::map<Var, Rat> point;
  point.emplace(Var{Family::x, 1}, Rat(3, 2));
  point.emplace(Var{Family::y, 1}, Rat(1, 2));
  REQUIRE(f.eval(point) == Rat(1));
  std::map<Var, Rat> partial;
  partial.emplace(Var{Family::x, 1}, Rat(1));
  REQUIRE_THROWS_AS(f.eval(partial), std::invalid_argument);

  const LaurentPoly inv = LaurentPoly::term(Monomial(Var{Family::b, 1}, -1), 1);
  std::map<Var, Rat> ok;
  ok.emplace(Var{Family::b, 1}, Rat(2, 3));
  REQUIRE(inv.eval(ok) == Rat(3, 2));
  std::map<Var, Rat> zero;
  zero.emplace(Var{Family::b, 1}, Rat(0));
  REQUIRE_THROWS_AS(inv.eval(zero), std::domain_error);
}

TEST_CASE("exact division of Laurent polynomials", "[laurent]") {
  const LaurentPoly b1 = var(Family::b, 1);
  const LaurentPoly b2inv = LaurentPoly::term(Monomial(Var{Family::b, 2}, -1), 1);
  const LaurentPoly g = LaurentPoly(1) - b1 * b2inv;
  const LaurentPoly f = LaurentPoly(1) - b1 * b1 * b2inv * b2inv;
  REQUIRE(groth::exact_divide(f, g) == LaurentPoly(1) + b1 * b2inv);

  const LaurentPoly x1 = var(Family::x, 1), y1 = var(Family::y, 1);
  REQUIRE(groth::exact_divide(x1 * x1 - y1 * y1, x1 - y1) == x1 + y1);
  REQUIRE(groth::exact_divide(LaurentPoly(), g).is_zero());
  REQUIRE(groth::exact_divide(f, LaurentPoly(1)) == f);
  REQUIRE_THROWS_AS(groth::exact_divide(f, LaurentPoly()), std::domain_error);
  REQUIRE_THROWS_WITH(groth::exact_divide(x1 * x1 + y1 * y1, x1 - y1),
                      Catch::Matchers::StartsWith("not divisible"));
}

TEST_CASE("division inverts multiplication on random inputs", "[laurent]") {
  groth::Lcg64 rng(42);
  int done = 0;
  while (done < 50) {
    const LaurentPoly f = random_poly(rng);
    const LaurentPoly g = random_poly(rng);
    if (g.is_zero()) continue;
    REQUIRE(groth::exact_divide(f * g, g) == f);
    ++done;
  }
}
