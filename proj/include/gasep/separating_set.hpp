#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gasep/polynomial.hpp"
#include "gasep/rep_spec.hpp"

namespace gasep {

/// The six construction families of the separating set.
enum class Family {
  f,               // f_{i,j}, indices (i, j)
  eps_cross_low,   // eps_{s[i2,j2]}(x[i1,j1]), j1 < j2, upper-range i1
  eps_self,        // eps_{s[i2,j]}(x[i1,j]), same summand
  eps_cross_high,  // eps_{s[i2,j2]}(x[i1,j1]), j2 < j1, full i1 range
  w,               // w_{j1,j2}, indices (j1, j2), j1 < j2
  z,               // z_j, index (j)
};

std::string family_name(Family f);

struct TaggedInvariant {
  Family family;
  std::vector<int> indices;  // (i,j) | (i1,j1,i2,j2) | (j1,j2) | (j)
  Polynomial poly;

  int degree() const { return poly.degree(); }
  /// Display label, e.g. "f[1,2]", "eps(x[2,1];s[0,2])", "w[1,2]", "z[3]".
  std::string label() const;
};

enum class DedupMode {
  scalar,  // drop zero polynomials and rational-scalar multiples (default)
  exact,   // drop zero polynomials and exact duplicates only
  none,    // keep the raw enumeration
};

DedupMode parse_dedup_mode(const std::string& name);

struct DroppedInvariant {
  Family family;
  std::vector<int> indices;
  enum class Reason { zero, duplicate } reason;
  // populated for Reason::duplicate: the retained element and the factor
  // with poly == ratio * kept.poly
  Family kept_family = Family::f;
  std::vector<int> kept_indices;
  Rational ratio;
};

/// The assembled separating set of a module, with per-family bookkeeping.
struct SeparatingSet {
  RepSpec rep;
  DedupMode dedup = DedupMode::scalar;
  std::vector<TaggedInvariant> elements;
  std::map<Family, int> raw_counts;
  std::vector<DroppedInvariant> dropped;

  int raw_total() const;
  nlohmann::ordered_json to_json(bool include_polynomials = true) const;
};

/// Enumerates all six families over their index ranges in deterministic
/// order (family-major, then lexicographic index tuples) and applies the
/// dedup policy; the first element of a scalar class is retained.
SeparatingSet build_separating_set(const RepSpec& rep, DedupMode mode = DedupMode::scalar);

}  // namespace gasep
