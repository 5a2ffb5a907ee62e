#include "gasep/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gasep {

Monomial Monomial::var(VarId v, int exp) {
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, VarId x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

Monomial Monomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto& [v, x] : r.factors_) x *= e;
  return r;
}

Monomial Monomial::with_exponent(VarId v, int exp) const {
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  Monomial r;
  r.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (f.first == v) {
      if (exp > 0) r.factors_.emplace_back(v, exp);
      placed = true;
    } else {
      if (!placed && v < f.first) {
        if (exp > 0) r.factors_.emplace_back(v, exp);
        placed = true;
      }
      r.factors_.push_back(f);
    }
  }
  if (!placed && exp > 0) r.factors_.emplace_back(v, exp);
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Walk both factor lists from the largest variable down.
  auto ia = a.factors_.rbegin(), ib = b.factors_.rbegin();
  while (ia != a.factors_.rend() && ib != b.factors_.rend()) {
    if (ib->first < ia->first) return 1;   // a owns the larger variable
    if (ia->first < ib->first) return -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.rend()) return 1;
  if (ib != b.factors_.rend()) return -1;
  return 0;
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace gasep
