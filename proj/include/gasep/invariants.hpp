#pragma once

#include <optional>

#include "gasep/derivation.hpp"
#include "gasep/polynomial.hpp"
#include "gasep/rep_spec.hpp"

namespace gasep {

/// The raising derivation of summand j:
///   x[i,j] -> (n_j - i)(i + 1) x[i+1,j].
Derivation raising_derivation(const RepSpec& rep, int j);

/// Quadratic kernel element of summand j, for 0 <= i <= floor(n_j/2):
///   f_{i,j} = sum_{q<i} (-1)^q x[q,j] x[2i-q,j] + 1/2 (-1)^i x[i,j]^2,
/// with f_{0,j} = x[0,j].
Polynomial f_inv(const RepSpec& rep, int i, int j);

/// Local slice of summand j, for 0 <= i <= floor((n_j-1)/2):
///   s_{i,j} = sum_{q<=i} (-1)^q (2i+1-2q)/2 x[q,j] x[2i+1-q,j],
/// with s_{0,j} = x[1,j]. Satisfies D(s_{i,j}) = f_{i,j}.
Polynomial s_slice(const RepSpec& rep, int i, int j);

/// Invariantization of f along the local slice s:
///   eps_s(f) = sum_{q=0}^{nu(f)} (-1)^q/q! D^q(f) s^q (Ds)^{nu(f)-q}.
/// Requires f != 0 and D(D(s)) = 0.
Polynomial epsilon(const RepSpec& rep, const Polynomial& s, const Polynomial& f);

/// True when every monomial of f (supported on summand j only) has the same
/// weight sum_i (n_j - 2i) e_i. Vacuously true for the zero polynomial.
bool is_isobaric(const RepSpec& rep, const Polynomial& f, int j);

/// The common monomial weight of an isobaric polynomial; throws when the
/// monomial weights disagree, on support outside summand j, or on zero.
int weight(const RepSpec& rep, const Polynomial& f, int j);

/// A kernel element supported on a single summand, all of whose monomials
/// share one weight.
struct IsobaricInvariant {
  Polynomial poly;
  int summand = 0;
  int weight = 0;
};

/// Validates the defining properties and packages the result; throws when f
/// is not isobaric, not supported on summand j, or not a kernel element.
IsobaricInvariant make_isobaric_invariant(const RepSpec& rep, const Polynomial& f, int j);

/// Lift of an isobaric kernel element of weight m into the auxiliary
/// variables:
///   sum_{i=0}^m (-1)^i Delta_j^i(f)/i! y0^i y1^(m-i).
/// Substituting y0 = 0, y1 = 1 recovers f.
Polynomial roberts_inverse(const RepSpec& rep, const IsobaricInvariant& f);

/// The r-th transvectant in the auxiliary variables:
///   sum_{q=0}^r (-1)^q C(r,q) d^r F/dy0^(r-q) dy1^q * d^r G/dy0^q dy1^(r-q).
/// Total: over-differentiation simply yields zero.
Polynomial transvectant(const Polynomial& F, const Polynomial& G, int r);

/// The r-th pairing of two isobaric kernel elements: lift both, take the
/// r-th transvectant, then substitute y0 = 0, y1 = 1. Requires
/// r <= min(weight(f1), weight(f2)).
Polynomial semitransvectant(const RepSpec& rep, const IsobaricInvariant& f1,
                            const IsobaricInvariant& f2, int r);

/// Degree-N pairing of x[0,j1]^(N/n_j1) and x[0,j2]^(N/n_j2) with
/// N = lcm(n_j1, n_j2), for two distinct summands with n == 2 (mod 4).
/// Computed through the generic semitransvectant pipeline.
Polynomial w_invariant(const RepSpec& rep, int j1, int j2);

/// The same invariant by the closed form
///   sum_{q=0}^N (-1)^q N! Delta_j1^(N-q)(x[0,j1]^(N/n_j1))
///                        Delta_j2^q    (x[0,j2]^(N/n_j2)).
/// Used as an independent cross-check of w_invariant.
Polynomial w_invariant_closed_form(const RepSpec& rep, int j1, int j2);

/// Degree-3 sign detector of a summand with n_j == 0 (mod 4), n_j > 0:
/// the n_j-th pairing of x[0,j] with f_{n_j/4, j}.
Polynomial z_invariant(const RepSpec& rep, int j);

}  // namespace gasep
