#include "gasep/point.hpp"

#include <stdexcept>

namespace gasep {

Point::Point(const RepSpec& rep) {
  coords_.resize(rep.k());
  for (int j = 1; j <= rep.k(); ++j) coords_[j - 1].assign(rep.degree(j) + 1, Rational(0));
}

const Rational& Point::coord(int i, int j) const {
  if (j < 1 || j > summand_count() || i < 0 || i >= levels(j))
    throw std::invalid_argument("Point: coordinate index out of range");
  return coords_[j - 1][i];
}

void Point::set_coord(int i, int j, Rational value) {
  if (j < 1 || j > summand_count() || i < 0 || i >= levels(j))
    throw std::invalid_argument("Point: coordinate index out of range");
  coords_[j - 1][i] = std::move(value);
}

nlohmann::ordered_json Point::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& summand : coords_) {
    nlohmann::ordered_json inner = nlohmann::ordered_json::array();
    for (const auto& value : summand) inner.push_back(value.str());
    j.push_back(inner);
  }
  return j;
}

Point Point::from_json(const RepSpec& rep, const nlohmann::json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != rep.k())
    throw std::invalid_argument("Point: expected one coordinate array per summand");
  Point p(rep);
  for (int s = 1; s <= rep.k(); ++s) {
    const auto& inner = j.at(s - 1);
    if (!inner.is_array() || static_cast<int>(inner.size()) != rep.degree(s) + 1)
      throw std::invalid_argument("Point: summand " + std::to_string(s) + " needs " +
                                  std::to_string(rep.degree(s) + 1) + " coordinates");
    for (int i = 0; i <= rep.degree(s); ++i) {
      const auto& value = inner.at(i);
      if (value.is_string()) {
        p.set_coord(i, s, Rational::parse(value.get<std::string>()));
      } else if (value.is_number_integer()) {
        p.set_coord(i, s, Rational(value.get<long>()));
      } else {
        throw std::invalid_argument("Point: coordinates must be rational strings or integers");
      }
    }
  }
  return p;
}

std::string Point::str() const { return to_json().dump(); }

Rational evaluate(const Polynomial& f, const Point& p) {
  if (f.has_aux())
    throw std::domain_error("evaluate: polynomial involves the auxiliary variables");
  return f.evaluate([&](VarId v) { return p.coord(v.level(), v.summand()); });
}

}  // namespace gasep
