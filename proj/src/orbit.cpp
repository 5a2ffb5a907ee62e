#include "gasep/orbit.hpp"

#include <stdexcept>

#include "gasep/invariants.hpp"

namespace gasep {

Point act(const RepSpec& rep, const Rational& alpha, const Point& v) {
  Point result(rep);
  for (int j = 1; j <= rep.k(); ++j) {
    for (int i = 0; i <= rep.degree(j); ++i) {
      Rational sum(0);
      Rational alpha_power(1);
      for (int m = 0; m <= i; ++m) {
        sum += alpha_power / Rational::factorial(m) * v.coord(i - m, j);
        alpha_power *= alpha;
      }
      result.set_coord(i, j, sum);
    }
  }
  return result;
}

Point slice_normalize(const RepSpec& rep, const Polynomial& s, const Point& v) {
  Polynomial ds = rep.lowering_derivation()(s);
  Rational denom = evaluate(ds, v);
  if (denom.is_zero()) throw std::domain_error("slice_normalize: slice derivative vanishes at v");
  Rational beta = -evaluate(s, v) / denom;
  return act(rep, beta, v);
}

bool same_orbit(const RepSpec& rep, const Point& v, const Point& w) {
  if (v == w) return true;
  // Find a coordinate that moves linearly in alpha: the lowest nonzero level
  // i0 of some summand with i0 < n_j. Then any alpha with act(alpha, v) = w
  // must satisfy w(i0+1) = v(i0+1) + alpha * v(i0).
  for (int j = 1; j <= rep.k(); ++j) {
    for (int i = 0; i <= rep.degree(j); ++i) {
      if (v.coord(i, j).is_zero()) continue;
      if (i == rep.degree(j)) break;  // top-level coordinate is fixed
      Rational alpha = (w.coord(i + 1, j) - v.coord(i + 1, j)) / v.coord(i, j);
      return act(rep, alpha, v) == w;
    }
  }
  // v is a fixed point of the action and v != w
  return false;
}

bool invariant_equivalent(const RepSpec& rep, const Point& v, const Point& w) {
  // (a) minimal-index scan over the lower halves
  int found_i = -1, found_j = -1;
  for (int j = 1; j <= rep.k() && found_j < 0; ++j) {
    for (int i = 0; i <= slice_top(rep.degree(j)); ++i) {
      if (!v.coord(i, j).is_zero() || !w.coord(i, j).is_zero()) {
        found_i = i;
        found_j = j;
        break;
      }
    }
  }

  if (found_j < 0) {
    // (b) both points lie in the common zero locus Z of the lower halves.
    // Invariant values there depend only on the mid coordinates of the even
    // summands, up to one global sign on the 2-mod-4 block.
    int l = rep.even_count(), lp = rep.two_mod4_count();
    for (int j = lp + 1; j <= l; ++j) {
      int mid = rep.degree(j) / 2;
      if (!(v.coord(mid, j) == w.coord(mid, j))) return false;
    }
    bool plus = true, minus = true;
    for (int j = 1; j <= lp; ++j) {
      int mid = rep.degree(j) / 2;
      if (!(v.coord(mid, j) == w.coord(mid, j))) plus = false;
      if (!(v.coord(mid, j) == -w.coord(mid, j))) minus = false;
    }
    return plus || minus;
  }

  // (c) the quadratic kernel element at the scan position evaluates to
  // +-1/2 a^2 there, so it separates unless the squares agree.
  const Rational& a = v.coord(found_i, found_j);
  const Rational& b = w.coord(found_i, found_j);
  if (a.is_zero() != b.is_zero()) return false;
  if (!(a * a == b * b)) return false;

  // (d) localize along the slice at the scan position and compare exactly.
  Polynomial s = s_slice(rep, found_i, found_j);
  return slice_normalize(rep, s, v) == slice_normalize(rep, s, w);
}

PointSampler::PointSampler(const RepSpec& rep, uint64_t seed, SampleBounds bounds)
    : rep_(rep), bounds_(bounds), rng_(seed) {}

uint64_t PointSampler::random_below(uint64_t bound) {
  // fixed modulo mapping: reproducible across platforms, and the tiny bias
  // is irrelevant for test-point generation
  return rng_() % bound;
}

Rational PointSampler::random_rational() {
  long span = 2 * bounds_.numerator_bound + 1;
  long num = static_cast<long>(random_below(static_cast<uint64_t>(span))) - bounds_.numerator_bound;
  long den = static_cast<long>(random_below(static_cast<uint64_t>(bounds_.denominator_max))) + 1;
  return Rational(num, den);
}

Rational PointSampler::random_nonzero_rational() {
  for (;;) {
    Rational r = random_rational();
    if (!r.is_zero()) return r;
  }
}

Point PointSampler::sample(Stratum stratum) {
  if (stratum == Stratum::low_zeros) return sample_with_prefixes(sample_prefixes());
  Point p(rep_);
  for (int j = 1; j <= rep_.k(); ++j) {
    for (int i = 0; i <= rep_.degree(j); ++i) {
      bool zeroed = stratum == Stratum::in_Z && i <= slice_top(rep_.degree(j));
      p.set_coord(i, j, zeroed ? Rational(0) : random_rational());
    }
  }
  return p;
}

std::vector<int> PointSampler::sample_prefixes() {
  std::vector<int> prefixes(rep_.k());
  for (int j = 1; j <= rep_.k(); ++j) {
    int top = slice_top(rep_.degree(j));
    prefixes[j - 1] = static_cast<int>(random_below(static_cast<uint64_t>(top + 2)));
  }
  return prefixes;
}

Point PointSampler::sample_with_prefixes(const std::vector<int>& prefixes) {
  Point p(rep_);
  for (int j = 1; j <= rep_.k(); ++j) {
    for (int i = 0; i <= rep_.degree(j); ++i) {
      bool zeroed = i < prefixes[j - 1];
      p.set_coord(i, j, zeroed ? Rational(0) : random_rational());
    }
  }
  return p;
}

}  // namespace gasep
