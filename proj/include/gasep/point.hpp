#pragma once

#include <vector>

#include <json.hpp>

#include "gasep/polynomial.hpp"
#include "gasep/rational.hpp"
#include "gasep/rep_spec.hpp"

namespace gasep {

/// A rational coordinate vector of the module: one value per x[i,j].
class Point {
 public:
  Point() = default;
  explicit Point(const RepSpec& rep);

  const Rational& coord(int i, int j) const;
  void set_coord(int i, int j, Rational value);

  int summand_count() const { return static_cast<int>(coords_.size()); }
  int levels(int j) const { return static_cast<int>(coords_[j - 1].size()); }

  bool operator==(const Point& o) const { return coords_ == o.coords_; }

  /// Arrays-of-arrays of rational strings, one inner array per summand.
  nlohmann::ordered_json to_json() const;
  static Point from_json(const RepSpec& rep, const nlohmann::json& j);

  std::string str() const;

 private:
  std::vector<std::vector<Rational>> coords_;  // [j-1][i]
};

/// Exact evaluation; throws std::domain_error when f involves the auxiliary
/// variables and std::invalid_argument when a main variable has no
/// coordinate in p.
Rational evaluate(const Polynomial& f, const Point& p);

}  // namespace gasep
