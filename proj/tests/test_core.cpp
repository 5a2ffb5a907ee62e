#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gasep/derivation.hpp"
#include "gasep/polynomial.hpp"
#include "gasep/rational.hpp"
#include "gasep/rep_spec.hpp"

using namespace gasep;

namespace {

Polynomial xv(int i, int j, int e = 1) { return Polynomial::var(VarId::main(i, j), e); }

// small random polynomial over the variables of rep, plus optionally y0/y1
Polynomial random_poly(std::mt19937_64& rng, const RepSpec& rep, bool with_aux = false) {
  auto vars = rep.variables();
  if (with_aux) {
    vars.push_back(y0());
    vars.push_back(y1());
  }
  Polynomial p;
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int factors = static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f)
      m = m * Monomial::var(vars[rng() % vars.size()], 1 + static_cast<int>(rng() % 2));
    long num = static_cast<long>(rng() % 9) - 4;
    long den = 1 + static_cast<long>(rng() % 3);
    p.add_term(m, Rational(num, den));
  }
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));
  CHECK(Rational(-2, -6).str() == "1/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK((Rational(1, 3) + Rational(2, 6)) == Rational(2, 3));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(3, 4) / Rational(3, 2)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational::parse("-8").str() == "-8");
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(Rational::factorial(6) == Rational(720));
  CHECK(Rational::binomial(5, 2) == Rational(10));
  CHECK(Rational::binomial(3, 7).is_zero());
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
}

TEST_CASE("rational arbitrary precision") {
  // 30! overflows 64-bit arithmetic by a wide margin
  Rational f = Rational::factorial(30);
  CHECK(f.str() == "265252859812191058636308480000000");
  CHECK((f / f) == Rational(1));
}

TEST_CASE("varid ordering") {
  CHECK(VarId::main(0, 1) < VarId::main(1, 1));
  CHECK(VarId::main(5, 1) < VarId::main(0, 2));
  CHECK(VarId::main(3, 7) < y0());
  CHECK(y0() < y1());
  CHECK(VarId::main(2, 3).name() == "x[2,3]");
  CHECK(y1().name() == "y1");
}

TEST_CASE("monomial grlex order") {
  Monomial a = Monomial::var(VarId::main(0, 1), 2);               // x[0,1]^2
  Monomial b = Monomial::var(VarId::main(0, 1)) * Monomial::var(VarId::main(1, 1));
  Monomial c = Monomial::var(VarId::main(1, 1));
  CHECK(Monomial::compare(c, a) < 0);      // degree decides first
  CHECK(Monomial::compare(a, b) < 0);      // same degree, larger variable wins
  CHECK(Monomial::compare(a, a) == 0);
  CHECK(a.degree() == 2);
  CHECK((a * c).degree() == 3);
  CHECK(a.pow(3).exponent(VarId::main(0, 1)) == 6);
  CHECK(Monomial().is_unit());
}

TEST_CASE("polynomial arithmetic examples") {
  Polynomial x0 = xv(0, 1), x1 = xv(1, 1), x2 = xv(2, 1);
  CHECK((x0 + x0.scale(Rational(-1))).is_zero());
  CHECK((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);
  CHECK(xv(2, 1).scale(Rational(2)).scale(Rational(1, 2)) == x2);
  CHECK(x0.pow(0) == Polynomial::constant(Rational(1)));
  CHECK((x0 - x0).degree() == -1);
  CHECK(Polynomial().is_zero());
}

TEST_CASE("polynomial ring axioms on random inputs") {
  RepSpec rep = RepSpec::canonicalize({2, 3});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng, rep), b = random_poly(rng, rep), c = random_poly(rng, rep);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partial derivatives") {
  Polynomial f = Polynomial::var(y0(), 2) * Polynomial::var(y1());
  CHECK(f.partial(y0()) == Polynomial::var(y0()).scale(Rational(2)) * Polynomial::var(y1()));
  Polynomial g = xv(0, 1) * Polynomial::var(y1(), 2);
  CHECK(g.partial(y0()).is_zero());
  Polynomial h = Polynomial::var(y0(), 3);
  CHECK(h.partial(y0()).partial(y0()).partial(y0()) == Polynomial::constant(Rational(6)));
}

TEST_CASE("substitution") {
  Polynomial f = Polynomial::var(y0()) * xv(0, 1) + Polynomial::var(y1()) * xv(1, 1);
  std::map<VarId, Polynomial> at_base = {{y0(), Polynomial()},
                                         {y1(), Polynomial::constant(Rational(1))}};
  CHECK(f.substitute(at_base) == xv(1, 1));

  Polynomial g = xv(0, 1, 2);
  std::map<VarId, Polynomial> shift = {{VarId::main(0, 1), xv(0, 1) + xv(1, 1)}};
  CHECK(g.substitute(shift) == xv(0, 1, 2) + (xv(0, 1) * xv(1, 1)).scale(Rational(2)) + xv(1, 1, 2));
}

TEST_CASE("evaluation is a ring homomorphism") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  std::mt19937_64 rng(11);
  auto value_of = [&](std::map<uint32_t, Rational>& env, VarId v) -> Rational {
    auto it = env.find(v.code());
    return it == env.end() ? Rational(0) : it->second;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial a = random_poly(rng, rep), b = random_poly(rng, rep);
    std::map<uint32_t, Rational> env;
    for (VarId v : rep.variables())
      env.emplace(v.code(), Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
    auto look = [&](VarId v) { return value_of(env, v); };
    CHECK((a * b).evaluate(look) == a.evaluate(look) * b.evaluate(look));
    CHECK((a + b).evaluate(look) == a.evaluate(look) + b.evaluate(look));
  }
}

TEST_CASE("text form round-trips") {
  Polynomial f = xv(0, 1) * xv(2, 1) + xv(1, 1, 2).scale(Rational(-1, 2));
  CHECK(f.str() == "x[0,1]x[2,1] - 1/2x[1,1]^2");
  CHECK(Polynomial::parse(f.str()) == f);
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial::parse("0").is_zero());
  CHECK(Polynomial::parse("-x[0,1] + x[0,1]").is_zero());
  CHECK(Polynomial::parse("2 * x[1,2]^3") == xv(1, 2, 3).scale(Rational(2)));
  CHECK(Polynomial::parse("1/2 x[1,1]") == xv(1, 1).scale(Rational(1, 2)));
  CHECK_THROWS_AS(Polynomial::parse("x[1"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("3 +"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse(""), std::invalid_argument);
}

TEST_CASE("serialization round-trips on random polynomials") {
  RepSpec rep = RepSpec::canonicalize({3, 2});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(rng, rep, /*with_aux=*/true);
    CHECK(Polynomial::parse(p.str()) == p);
    CHECK(Polynomial::from_json(p.to_json()) == p);
  }
}

TEST_CASE("lowering derivation basics") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  Derivation D = rep.lowering_derivation();
  CHECK(D(xv(2, 1)) == xv(1, 1));
  CHECK(D(xv(0, 1)).is_zero());
  // hand-expanded kernel element
  Polynomial inv = xv(0, 1) * xv(2, 2) - xv(1, 1) * xv(1, 2) + xv(2, 1) * xv(0, 2);
  CHECK(D(inv).is_zero());
}

TEST_CASE("Leibniz rule on random pairs") {
  RepSpec rep = RepSpec::canonicalize({2, 3});
  Derivation D = rep.lowering_derivation();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = random_poly(rng, rep), g = random_poly(rng, rep);
    CHECK(D(f * g) == D(f) * g + f * D(g));
  }
}

TEST_CASE("nilpotency index") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  Derivation D = rep.lowering_derivation();
  CHECK(D.nilpotency_index(xv(0, 1)) == 0);
  CHECK(D.nilpotency_index(xv(1, 1)) == 1);
  CHECK(D.nilpotency_index(xv(2, 2)) == 2);

  // hand iteration: D(x[1,1]x[2,2]) = x[0,1]x[2,2] + x[1,1]x[1,2],
  // D^2 = 2x[0,1]x[1,2] + x[1,1]x[0,2], D^3 = 3x[0,1]x[0,2], D^4 = 0
  Polynomial f = xv(1, 1) * xv(2, 2);
  CHECK(D.nilpotency_index(f) == 3);
  CHECK(D.apply_power(f, 3) == (xv(0, 1) * xv(0, 2)).scale(Rational(3)));
  CHECK(D.apply_power(f, 4).is_zero());

  CHECK_THROWS_AS(D.nilpotency_index(Polynomial()), std::domain_error);
}

TEST_CASE("nilpotency terminates on random main-variable polynomials") {
  RepSpec rep = RepSpec::canonicalize({3, 2});
  Derivation D = rep.lowering_derivation();
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = random_poly(rng, rep);
    if (f.is_zero()) continue;
    int nu = D.nilpotency_index(f);
    CHECK(!D.apply_power(f, nu).is_zero());
    CHECK(D.apply_power(f, nu + 1).is_zero());
  }
}
