#include "gasep/projection.hpp"

namespace gasep {

ProjectionMap::ProjectionMap(const RepSpec& source) {
  target_degrees_.reserve(source.k());
  for (int j = 1; j <= source.k(); ++j) {
    int n = source.degree(j);
    int shift = (n + 1) / 2;  // ceil(n/2)
    target_degrees_.push_back(n / 2);
    for (int i = 0; i <= n; ++i) {
      Polynomial image;
      if (i >= shift) image = Polynomial::var(VarId::main(i - shift, j));
      substitution_.emplace(VarId::main(i, j), std::move(image));
    }
  }
}

Polynomial ProjectionMap::image_of(VarId v) const {
  auto it = substitution_.find(v);
  return it == substitution_.end() ? Polynomial::var(v) : it->second;
}

Polynomial ProjectionMap::apply(const Polynomial& f) const { return f.substitute(substitution_); }

Polynomial pi_star(const RepSpec& source, const Polynomial& f) {
  return ProjectionMap(source).apply(f);
}

}  // namespace gasep
