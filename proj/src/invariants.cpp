#include "gasep/invariants.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gasep {

namespace {

void check_summand(const RepSpec& rep, int j, const char* who) {
  if (j < 1 || j > rep.k())
    throw std::invalid_argument(std::string(who) + ": summand index out of range");
}

int monomial_weight(const RepSpec& rep, const Monomial& m, int j) {
  int w = 0;
  for (const auto& [v, e] : m.factors()) w += (rep.degree(j) - 2 * v.level()) * e;
  return w;
}

}  // namespace

Derivation raising_derivation(const RepSpec& rep, int j) {
  check_summand(rep, j, "raising_derivation");
  int n = rep.degree(j);
  std::map<VarId, Polynomial> images;
  for (int i = 0; i < n; ++i) {
    Rational c(static_cast<long>(n - i) * (i + 1));
    images.emplace(VarId::main(i, j), Polynomial::var(VarId::main(i + 1, j)).scale(c));
  }
  return Derivation(std::move(images));
}

Polynomial f_inv(const RepSpec& rep, int i, int j) {
  check_summand(rep, j, "f_inv");
  int n = rep.degree(j);
  if (i < 0 || i > n / 2) throw std::invalid_argument("f_inv: level out of range");
  if (i == 0) return Polynomial::var(VarId::main(0, j));
  Polynomial p;
  for (int q = 0; q < i; ++q) {
    Rational c(q % 2 == 0 ? 1 : -1);
    p.add_term(Monomial::var(VarId::main(q, j)) * Monomial::var(VarId::main(2 * i - q, j)), c);
  }
  p.add_term(Monomial::var(VarId::main(i, j), 2), Rational(i % 2 == 0 ? 1 : -1, 2));
  return p;
}

Polynomial s_slice(const RepSpec& rep, int i, int j) {
  check_summand(rep, j, "s_slice");
  if (i < 0 || i > slice_top(rep.degree(j)))
    throw std::invalid_argument("s_slice: level out of range");
  if (i == 0) return Polynomial::var(VarId::main(1, j));
  Polynomial p;
  for (int q = 0; q <= i; ++q) {
    Rational c(2 * i + 1 - 2 * q, 2);
    if (q % 2 == 1) c = -c;
    p.add_term(Monomial::var(VarId::main(q, j)) * Monomial::var(VarId::main(2 * i + 1 - q, j)), c);
  }
  return p;
}

Polynomial epsilon(const RepSpec& rep, const Polynomial& s, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("epsilon: zero polynomial");
  Derivation lower = rep.lowering_derivation();
  Polynomial ds = lower(s);
  if (!lower(ds).is_zero()) throw std::invalid_argument("epsilon: s is not a local slice");
  int nu = lower.nilpotency_index(f);
  Polynomial result;
  Polynomial df = f;            // D^q(f)
  Polynomial s_pow = Polynomial::constant(Rational(1));
  for (int q = 0; q <= nu; ++q) {
    Rational c = Rational(q % 2 == 0 ? 1 : -1) / Rational::factorial(q);
    result = result + (df * s_pow * ds.pow(nu - q)).scale(c);
    if (q < nu) {
      df = lower(df);
      s_pow = s_pow * s;
    }
  }
  return result;
}

bool is_isobaric(const RepSpec& rep, const Polynomial& f, int j) {
  check_summand(rep, j, "is_isobaric");
  std::optional<int> w;
  for (const auto& [m, c] : f.terms()) {
    int mw = monomial_weight(rep, m, j);
    if (w && *w != mw) return false;
    w = mw;
  }
  return true;
}

int weight(const RepSpec& rep, const Polynomial& f, int j) {
  check_summand(rep, j, "weight");
  if (f.is_zero()) throw std::invalid_argument("weight: zero polynomial");
  for (VarId v : f.variables())
    if (v.is_aux() || v.summand() != j)
      throw std::invalid_argument("weight: polynomial not supported on summand " +
                                  std::to_string(j));
  std::optional<int> w;
  for (const auto& [m, c] : f.terms()) {
    int mw = monomial_weight(rep, m, j);
    if (w && *w != mw) throw std::invalid_argument("weight: polynomial is not isobaric");
    w = mw;
  }
  return *w;
}

IsobaricInvariant make_isobaric_invariant(const RepSpec& rep, const Polynomial& f, int j) {
  int w = weight(rep, f, j);
  if (w < 0) throw std::invalid_argument("make_isobaric_invariant: negative weight");
  if (!rep.lowering_derivation()(f).is_zero())
    throw std::invalid_argument("make_isobaric_invariant: not a kernel element");
  return IsobaricInvariant{f, j, w};
}

Polynomial roberts_inverse(const RepSpec& rep, const IsobaricInvariant& f) {
  Derivation raise = raising_derivation(rep, f.summand);
  Polynomial result;
  Polynomial numerator = f.poly;  // Delta^i(f)
  for (int i = 0; i <= f.weight; ++i) {
    Rational c = Rational(i % 2 == 0 ? 1 : -1) / Rational::factorial(i);
    Polynomial y_part = Polynomial::var(y0()).pow(i) * Polynomial::var(y1()).pow(f.weight - i);
    result = result + (numerator * y_part).scale(c);
    if (i < f.weight) numerator = raise(numerator);
  }
  return result;
}

Polynomial transvectant(const Polynomial& F, const Polynomial& G, int r) {
  if (r < 0) throw std::invalid_argument("transvectant: negative order");
  Polynomial result;
  for (int q = 0; q <= r; ++q) {
    Polynomial dF = F, dG = G;
    for (int t = 0; t < r - q; ++t) dF = dF.partial(y0());
    for (int t = 0; t < q; ++t) dF = dF.partial(y1());
    for (int t = 0; t < q; ++t) dG = dG.partial(y0());
    for (int t = 0; t < r - q; ++t) dG = dG.partial(y1());
    Rational c = Rational::binomial(r, q);
    if (q % 2 == 1) c = -c;
    result = result + (dF * dG).scale(c);
  }
  return result;
}

Polynomial semitransvectant(const RepSpec& rep, const IsobaricInvariant& f1,
                            const IsobaricInvariant& f2, int r) {
  if (r < 0 || r > std::min(f1.weight, f2.weight))
    throw std::invalid_argument("semitransvectant: order exceeds the operand weights");
  Polynomial paired = transvectant(roberts_inverse(rep, f1), roberts_inverse(rep, f2), r);
  std::map<VarId, Polynomial> at_base = {{y0(), Polynomial()},
                                         {y1(), Polynomial::constant(Rational(1))}};
  return paired.substitute(at_base);
}

namespace {

void check_w_pair(const RepSpec& rep, int j1, int j2) {
  check_summand(rep, j1, "w_invariant");
  check_summand(rep, j2, "w_invariant");
  if (j1 == j2) throw std::invalid_argument("w_invariant: summands must differ");
  for (int j : {j1, j2})
    if (rep.degree(j) % 4 != 2)
      throw std::invalid_argument("w_invariant: summand degree must be 2 mod 4");
}

}  // namespace

Polynomial w_invariant(const RepSpec& rep, int j1, int j2) {
  check_w_pair(rep, j1, j2);
  int n1 = rep.degree(j1), n2 = rep.degree(j2);
  int N = std::lcm(n1, n2);
  auto power = [&](int j, int e) {
    return make_isobaric_invariant(rep, Polynomial::var(VarId::main(0, j)).pow(e), j);
  };
  return semitransvectant(rep, power(j1, N / n1), power(j2, N / n2), N);
}

Polynomial w_invariant_closed_form(const RepSpec& rep, int j1, int j2) {
  check_w_pair(rep, j1, j2);
  int n1 = rep.degree(j1), n2 = rep.degree(j2);
  int N = std::lcm(n1, n2);
  Derivation raise1 = raising_derivation(rep, j1);
  Derivation raise2 = raising_derivation(rep, j2);
  Rational n_factorial = Rational::factorial(N);
  Polynomial left = Polynomial::var(VarId::main(0, j1)).pow(N / n1);   // Delta^(N-q)
  Polynomial right = Polynomial::var(VarId::main(0, j2)).pow(N / n2);  // Delta^q
  left = raise1.apply_power(left, N);
  Polynomial result;
  for (int q = 0; q <= N; ++q) {
    Rational c = n_factorial;
    if (q % 2 == 1) c = -c;
    result = result + (left * right).scale(c);
    if (q < N) {
      // next step: one fewer raise on the left, one more on the right.
      // Recompute the left factor from scratch (cheap at these sizes).
      left = raise1.apply_power(Polynomial::var(VarId::main(0, j1)).pow(N / n1), N - q - 1);
      right = raise2(right);
    }
  }
  return result;
}

Polynomial z_invariant(const RepSpec& rep, int j) {
  check_summand(rep, j, "z_invariant");
  int n = rep.degree(j);
  if (n <= 0 || n % 4 != 0)
    throw std::invalid_argument("z_invariant: summand degree must be a positive multiple of 4");
  auto x0 = make_isobaric_invariant(rep, Polynomial::var(VarId::main(0, j)), j);
  auto f = make_isobaric_invariant(rep, f_inv(rep, n / 4, j), j);
  return semitransvectant(rep, x0, f, n);
}

}  // namespace gasep
