#pragma once

#include <utility>
#include <vector>

#include "gasep/varid.hpp"

namespace gasep {

/// A power product of variables. Exponents are strictly positive; the unit
/// monomial has an empty factor list.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarId v, int exp = 1);

  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  int exponent(VarId v) const;

  /// Factors sorted by variable, all exponents > 0.
  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int e) const;

  /// Returns a copy with the exponent of v replaced by `exp` (0 removes v).
  Monomial with_exponent(VarId v, int exp) const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

  /// Graded lexicographic comparison: total degree first, ties broken on the
  /// largest variable whose exponents differ. Returns <0, 0 or >0.
  static int compare(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

}  // namespace gasep
