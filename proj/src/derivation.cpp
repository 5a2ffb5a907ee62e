#include "gasep/derivation.hpp"

#include <stdexcept>
#include <utility>

namespace gasep {

Derivation::Derivation(std::map<VarId, Polynomial> images) : images_(std::move(images)) {
  // canonical form: drop identically-zero images
  for (auto it = images_.begin(); it != images_.end();) {
    it = it->second.is_zero() ? images_.erase(it) : std::next(it);
  }
}

const Polynomial& Derivation::image(VarId v) const {
  auto it = images_.find(v);
  return it == images_.end() ? zero_ : it->second;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  Polynomial r;
  for (VarId v : f.variables()) {
    auto it = images_.find(v);
    if (it == images_.end()) continue;
    r = r + it->second * f.partial(v);
  }
  return r;
}

Polynomial Derivation::apply_power(const Polynomial& f, int q) const {
  if (q < 0) throw std::invalid_argument("Derivation: negative power");
  Polynomial g = f;
  for (int i = 0; i < q; ++i) g = apply(g);
  return g;
}

int Derivation::nilpotency_index(const Polynomial& f) const {
  if (f.is_zero()) throw std::domain_error("Derivation: nilpotency index of the zero polynomial");
  constexpr int kMaxIterations = 100000;
  Polynomial g = f;
  for (int d = 0; d < kMaxIterations; ++d) {
    Polynomial next = apply(g);
    if (next.is_zero()) return d;
    g = std::move(next);
  }
  throw std::runtime_error("Derivation: not locally nilpotent on the given polynomial");
}

}  // namespace gasep
