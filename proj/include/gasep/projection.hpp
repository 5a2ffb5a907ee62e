#pragma once

#include <map>
#include <vector>

#include "gasep/polynomial.hpp"
#include "gasep/rep_spec.hpp"

namespace gasep {

/// Pullback of the equivariant zero-padding embedding of the halved module
/// into the source module. On coordinates of the source it acts as
///
///   x[i,j] -> 0                          if i < ceil(n_j / 2),
///   x[i,j] -> x[i - ceil(n_j / 2), j]    otherwise,
///
/// where the image variables are coordinates of the target module with
/// summand degrees floor(n_j / 2), indexed by the same j as the source.
class ProjectionMap {
 public:
  explicit ProjectionMap(const RepSpec& source);

  const std::vector<int>& target_degrees() const { return target_degrees_; }

  /// Image of a single source variable (zero or a target variable).
  Polynomial image_of(VarId v) const;

  /// Applies the substitution to a polynomial over the source variables.
  Polynomial apply(const Polynomial& f) const;

 private:
  std::vector<int> target_degrees_;
  std::map<VarId, Polynomial> substitution_;
};

/// Convenience wrapper: the halving projection pullback of f.
Polynomial pi_star(const RepSpec& source, const Polynomial& f);

}  // namespace gasep
