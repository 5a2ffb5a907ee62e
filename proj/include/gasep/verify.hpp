#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gasep/orbit.hpp"
#include "gasep/separating_set.hpp"

namespace gasep {

struct CheckResult {
  std::string name;
  bool pass = true;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  long millis = 0;

  nlohmann::ordered_json to_json(bool include_timings) const;
};

/// Every element of T is a kernel element: D(t) = 0, symbolically.
CheckResult check_invariance(const RepSpec& rep, const SeparatingSet& set);

/// deg(t) <= 2n - 1 for all t; quadratic family degree <= 2; sign detectors
/// degree exactly 3.
CheckResult check_degree(const RepSpec& rep, const SeparatingSet& set);

/// Every element involves variables of at most two summands.
CheckResult check_support(const RepSpec& rep, const SeparatingSet& set);

/// Projection images: contained in the x[0,j] (j <= l) subring, fixed by the
/// simultaneous sign flip on j <= l', and for w / z a nonzero scalar times
/// the predicted monomial (scalars recorded in the details).
CheckResult check_projection(const RepSpec& rep, const SeparatingSet& set);

/// Randomized slice identities: D(s_{i,j}) = f_{i,j} symbolically for all
/// valid (i, j), and eps_s(f)(v) = (Ds)(v)^nu(f) * f(sigma_s(v)) exactly on
/// random points.
CheckResult check_epsilon_identity(const RepSpec& rep, int trials, uint64_t seed,
                                   SampleBounds bounds = {});

/// Randomized separating-property check over stratified pairs: agreement of
/// all elements of T on (v, w) must coincide with the oracle's verdict, and
/// orbit pairs must never be separated.
CheckResult check_separation(const RepSpec& rep, const SeparatingSet& set, int trials,
                             uint64_t seed, SampleBounds bounds = {});

/// Family counts before and after dedup, with an informational comparison
/// against the published size when the module appears in the tables.
/// Mismatches are flagged in the details, never failures.
CheckResult check_counts(const RepSpec& rep, const SeparatingSet& set);

/// Published separating-set size for modules listed in the size tables.
std::optional<long> table_size(const RepSpec& rep);

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "invariance", "degree", "support", "projection", "epsilon", "separation", "counts"};
  return names;
}

/// Runs the named checks and assembles the full report. Timings are zeroed
/// unless include_timings is set, so that equal (rep, checks, trials, seed)
/// always serialize to identical bytes.
nlohmann::ordered_json run_checks(const RepSpec& rep, const std::vector<std::string>& names,
                                  int trials, uint64_t seed, SampleBounds bounds = {},
                                  bool include_timings = false);

bool report_has_failures(const nlohmann::json& report);

}  // namespace gasep
