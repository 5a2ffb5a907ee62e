#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gasep/monomial.hpp"
#include "gasep/rational.hpp"
#include "gasep/varid.hpp"

namespace gasep {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Polynomials are immutable values in canonical form: no zero coefficient is
/// ever stored and the zero polynomial has an empty term map, so structural
/// equality coincides with mathematical equality. Terms are kept in graded
/// lexicographic order (see Monomial::compare); the leading term is the
/// grlex-largest one.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;  // the zero polynomial

  static Polynomial constant(Rational c);
  static Polynomial var(VarId v, int exp = 1);
  static Polynomial term(Rational c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Formal partial derivative with respect to v.
  Polynomial partial(VarId v) const;

  /// Simultaneous substitution; variables not in the map stand for
  /// themselves.
  Polynomial substitute(const std::map<VarId, Polynomial>& sigma) const;

  /// Evaluates via a variable -> value lookup. The lookup must cover every
  /// variable occurring in the polynomial.
  Rational evaluate(const std::function<Rational(VarId)>& value_of) const;

  std::set<VarId> variables() const;
  /// Distinct summand indices among the main variables.
  std::set<int> summands() const;
  bool has_aux() const;

  /// Text form, e.g. "x[0,1]x[2,1] - 1/2x[1,1]^2"; the zero polynomial is
  /// "0". Terms appear leading-first.
  std::string str() const;
  /// Parses the text form produced by str(); also accepts '*' between
  /// factors and arbitrary term order.
  static Polynomial parse(std::string_view s);

  nlohmann::ordered_json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

  /// Builder-style accumulation, used internally by the arithmetic ops.
  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scale(c); }

}  // namespace gasep
