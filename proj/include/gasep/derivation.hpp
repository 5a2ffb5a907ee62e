#pragma once

#include <map>

#include "gasep/polynomial.hpp"

namespace gasep {

/// A k-linear derivation of the polynomial ring, given by the images of the
/// variables and extended to products via the Leibniz rule. Variables with no
/// stored image map to zero.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::map<VarId, Polynomial> images);

  const Polynomial& image(VarId v) const;

  /// apply(f) = sum_v image(v) * df/dv.
  Polynomial apply(const Polynomial& f) const;
  Polynomial operator()(const Polynomial& f) const { return apply(f); }

  Polynomial apply_power(const Polynomial& f, int q) const;

  /// The largest d with D^d(f) != 0, for a locally nilpotent derivation.
  /// Throws std::domain_error on the zero polynomial and std::runtime_error
  /// if iteration does not terminate within a generous cap.
  int nilpotency_index(const Polynomial& f) const;

 private:
  std::map<VarId, Polynomial> images_;
  Polynomial zero_;
};

}  // namespace gasep
