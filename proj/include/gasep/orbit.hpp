#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gasep/point.hpp"
#include "gasep/rep_spec.hpp"

namespace gasep {

/// Group action on points:
///   x[i,j](alpha . v) = sum_{m=0}^{i} alpha^m/m! * x[i-m,j](v),
/// so that f(alpha . v) = (exp(alpha D) f)(v) for every polynomial f.
Point act(const RepSpec& rep, const Rational& alpha, const Point& v);

/// Moves v along its orbit to the zero locus of the local slice s:
/// returns act(beta, v) with beta = -s(v)/(Ds)(v). Constant on the orbit of
/// v inside {Ds != 0}; throws std::domain_error when (Ds)(v) = 0.
Point slice_normalize(const RepSpec& rep, const Polynomial& s, const Point& v);

/// Exact decision of the orbit relation: true iff act(alpha, v) = w for some
/// rational alpha.
bool same_orbit(const RepSpec& rep, const Point& v, const Point& w);

/// Decides whether every invariant takes equal values on v and w, following
/// the minimal-index scan / slice localization / sign-class analysis. This
/// is the separating-set oracle: it agrees with pointwise agreement of the
/// constructed separating set (randomly cross-checked by the verify suite).
bool invariant_equivalent(const RepSpec& rep, const Point& v, const Point& w);

struct SampleBounds {
  long numerator_bound = 9;  // numerators drawn from [-bound, bound]
  long denominator_max = 4;  // denominators drawn from [1, max]
};

enum class Stratum {
  generic,    // every coordinate random
  in_Z,       // all levels i <= floor((n_j-1)/2) set to zero
  low_zeros,  // a random prefix of each summand's lower half set to zero
};

/// Deterministic point source: the same seed always yields the same stream.
class PointSampler {
 public:
  PointSampler(const RepSpec& rep, uint64_t seed, SampleBounds bounds = {});

  Point sample(Stratum stratum = Stratum::generic);
  /// Zero prefix lengths for the low_zeros stratum, one per summand.
  std::vector<int> sample_prefixes();
  Point sample_with_prefixes(const std::vector<int>& prefixes);

  Rational random_rational();
  Rational random_nonzero_rational();
  /// Uniform value in [0, bound).
  uint64_t random_below(uint64_t bound);

 private:
  const RepSpec& rep_;
  SampleBounds bounds_;
  std::mt19937_64 rng_;
};

}  // namespace gasep
