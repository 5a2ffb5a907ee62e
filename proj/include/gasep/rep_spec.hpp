#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gasep/derivation.hpp"
#include "gasep/varid.hpp"

namespace gasep {

/// A direct sum of basic additive-group modules, one summand of highest
/// level n_j per entry. Summands are kept in the canonical order
///
///   n_j == 2 (mod 4) for j <= l', n_j == 0 (mod 4) for l' < j <= l,
///   n_j odd for l < j <= k,
///
/// stable within each block, with zero-dimensional summands (n_j = 0) placed
/// last inside the 0-mod-4 block. The permutation applied to the input is
/// recorded so callers can map summand indices back.
class RepSpec {
 public:
  /// Reorders `raw` into canonical form. Throws on an empty list or a
  /// negative entry.
  static RepSpec canonicalize(std::vector<int> raw);

  /// Parses a comma-separated list such as "2,2,3" and canonicalizes it.
  static RepSpec parse(const std::string& text);

  int k() const { return static_cast<int>(summands_.size()); }
  /// Highest level of summand j (1-based).
  int degree(int j) const;
  const std::vector<int>& summands() const { return summands_; }
  const std::vector<int>& input() const { return input_; }
  /// position c (0-based) of the canonical order came from input index
  /// input_permutation()[c].
  const std::vector<int>& input_permutation() const { return perm_; }

  /// Dimension n = sum (n_j + 1).
  int dimension() const { return dimension_; }
  /// Number of even summands (l).
  int even_count() const { return l_; }
  /// Number of summands with n_j == 2 (mod 4) (l').
  int two_mod4_count() const { return l_prime_; }

  /// All main variables x[i,j], ordered by (summand, level).
  std::vector<VarId> variables() const;
  bool contains(VarId v) const;

  /// The triangular lowering derivation whose kernel is the invariant ring:
  /// x[i,j] -> x[i-1,j], x[0,j] -> 0.
  Derivation lowering_derivation() const;

  nlohmann::ordered_json to_json() const;
  /// Short display name, e.g. "V2+V2+V4".
  std::string name() const;

 private:
  std::vector<int> summands_;
  std::vector<int> input_;
  std::vector<int> perm_;
  int dimension_ = 0;
  int l_ = 0;
  int l_prime_ = 0;
};

/// Largest slice level of a summand: floor((n-1)/2), or -1 when n = 0.
inline int slice_top(int n) { return n >= 1 ? (n - 1) / 2 : -1; }

}  // namespace gasep
