#include "gasep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "gasep/invariants.hpp"
#include "gasep/projection.hpp"

namespace gasep {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

nlohmann::ordered_json point_pair_json(const Point& v, const Point& w) {
  return {{"v", v.to_json()}, {"w", w.to_json()}};
}

}  // namespace

nlohmann::ordered_json CheckResult::to_json(bool include_timings) const {
  return {{"name", name},
          {"status", pass ? "pass" : "fail"},
          {"details", details},
          {"witnesses", witnesses},
          {"millis", include_timings ? millis : 0}};
}

CheckResult check_invariance(const RepSpec& rep, const SeparatingSet& set) {
  auto start = Clock::now();
  CheckResult r{"invariance"};
  Derivation lower = rep.lowering_derivation();
  int checked = 0;
  for (const auto& t : set.elements) {
    ++checked;
    if (!lower(t.poly).is_zero()) {
      r.pass = false;
      r.witnesses.push_back({{"element", t.label()}, {"image", lower(t.poly).str()}});
    }
  }
  r.details["elements_checked"] = checked;
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_degree(const RepSpec& rep, const SeparatingSet& set) {
  auto start = Clock::now();
  CheckResult r{"degree"};
  int bound = 2 * rep.dimension() - 1;
  int max_degree = 0;
  for (const auto& t : set.elements) {
    int d = t.degree();
    max_degree = std::max(max_degree, d);
    bool ok = d <= bound;
    if (t.family == Family::f) ok = ok && d <= 2;
    if (t.family == Family::z) ok = ok && d == 3;
    if (!ok) {
      r.pass = false;
      r.witnesses.push_back({{"element", t.label()}, {"degree", d}});
    }
  }
  r.details["bound"] = bound;
  r.details["max_degree"] = max_degree;
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_support(const RepSpec& rep, const SeparatingSet& set) {
  auto start = Clock::now();
  CheckResult r{"support"};
  (void)rep;
  for (const auto& t : set.elements) {
    auto js = t.poly.summands();
    if (js.size() > 2 || t.poly.has_aux()) {
      r.pass = false;
      r.witnesses.push_back(
          {{"element", t.label()}, {"summands", std::vector<int>(js.begin(), js.end())}});
    }
  }
  r.details["elements_checked"] = set.elements.size();
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_projection(const RepSpec& rep, const SeparatingSet& set) {
  auto start = Clock::now();
  CheckResult r{"projection"};
  ProjectionMap proj(rep);
  int l = rep.even_count(), lp = rep.two_mod4_count();

  // simultaneous sign flip on the 2-mod-4 block of the image variables
  std::map<VarId, Polynomial> flip;
  for (int j = 1; j <= lp; ++j) {
    VarId v = VarId::main(0, j);
    flip.emplace(v, Polynomial::var(v).scale(Rational(-1)));
  }

  nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
  for (const auto& t : set.elements) {
    Polynomial image = proj.apply(t.poly);
    for (VarId v : image.variables()) {
      if (v.is_aux() || v.level() != 0 || v.summand() > l) {
        r.pass = false;
        r.witnesses.push_back(
            {{"element", t.label()}, {"problem", "image outside the even x[0,j] subring"},
             {"image", image.str()}});
        break;
      }
    }
    if (!(image.substitute(flip) == image)) {
      r.pass = false;
      r.witnesses.push_back(
          {{"element", t.label()}, {"problem", "image not fixed by the sign flip"}});
    }
    if (t.family == Family::w || t.family == Family::z) {
      // image must be a nonzero scalar times the predicted monomial
      Monomial predicted;
      if (t.family == Family::w) {
        int j1 = t.indices[0], j2 = t.indices[1];
        int N = std::lcm(rep.degree(j1), rep.degree(j2));
        predicted = Monomial::var(VarId::main(0, j1), N / rep.degree(j1)) *
                    Monomial::var(VarId::main(0, j2), N / rep.degree(j2));
      } else {
        predicted = Monomial::var(VarId::main(0, t.indices[0]), 3);
      }
      bool ok = image.term_count() == 1 && image.leading_monomial() == predicted &&
                !image.leading_coefficient().is_zero();
      if (ok) {
        scalars[t.label()] = image.leading_coefficient().str();
      } else {
        r.pass = false;
        r.witnesses.push_back({{"element", t.label()},
                               {"problem", "image is not a scalar multiple of the predicted monomial"},
                               {"image", image.str()}});
      }
    }
  }
  r.details["projection_scalars"] = scalars;
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_epsilon_identity(const RepSpec& rep, int trials, uint64_t seed,
                                   SampleBounds bounds) {
  auto start = Clock::now();
  CheckResult r{"epsilon"};
  Derivation lower = rep.lowering_derivation();

  // slice identities D(s_{i,j}) = f_{i,j}, symbolically
  int slice_identities = 0;
  std::vector<std::pair<int, int>> slices;
  for (int j = 1; j <= rep.k(); ++j) {
    for (int i = 0; i <= slice_top(rep.degree(j)); ++i) {
      slices.emplace_back(i, j);
      if (!(lower(s_slice(rep, i, j)) == f_inv(rep, i, j))) {
        r.pass = false;
        r.witnesses.push_back({{"slice", {i, j}}, {"problem", "D(s) != f"}});
      }
      ++slice_identities;
    }
  }
  r.details["slice_identities"] = slice_identities;

  if (slices.empty()) {
    // no slices (every summand trivial): nothing to sample
    r.details["trials"] = 0;
    r.millis = elapsed_ms(start);
    return r;
  }

  auto vars = rep.variables();
  PointSampler sampler(rep, seed, bounds);
  std::map<std::pair<std::pair<int, int>, uint32_t>, Polynomial> eps_cache;
  int performed = 0;
  for (int trial = 0; trial < trials; ++trial) {
    auto [i2, j2] = slices[trial % slices.size()];
    VarId x = vars[sampler.random_below(vars.size())];
    Polynomial s = s_slice(rep, i2, j2);
    Polynomial ds = lower(s);

    Point v = sampler.sample();
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      if (!evaluate(ds, v).is_zero()) { found = true; break; }
      v = sampler.sample();
    }
    if (!found) continue;  // slice derivative degenerate on this stratum

    auto key = std::make_pair(std::make_pair(i2, j2), x.code());
    auto it = eps_cache.find(key);
    if (it == eps_cache.end())
      it = eps_cache.emplace(key, epsilon(rep, s, Polynomial::var(x))).first;

    int nu = x.level();  // nu(x[i,j]) = i
    Rational lhs = evaluate(it->second, v);
    Rational rhs =
        evaluate(ds, v).pow(static_cast<unsigned>(nu)) * evaluate(Polynomial::var(x), slice_normalize(rep, s, v));
    ++performed;
    if (!(lhs == rhs)) {
      r.pass = false;
      r.witnesses.push_back({{"slice", {i2, j2}},
                             {"variable", x.name()},
                             {"point", v.to_json()},
                             {"lhs", lhs.str()},
                             {"rhs", rhs.str()}});
    }
  }
  r.details["trials"] = performed;
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_separation(const RepSpec& rep, const SeparatingSet& set, int trials,
                             uint64_t seed, SampleBounds bounds) {
  auto start = Clock::now();
  CheckResult r{"separation"};
  PointSampler sampler(rep, seed, bounds);
  int lp = rep.two_mod4_count();

  auto values_on = [&](const Point& p) {
    std::vector<Rational> values;
    values.reserve(set.elements.size());
    for (const auto& t : set.elements) values.push_back(evaluate(t.poly, p));
    return values;
  };

  enum class Kind { generic, orbit, in_Z, c2_flip, low_zeros, orbit_low, near };
  std::vector<std::pair<Kind, const char*>> strata = {
      {Kind::generic, "generic"},   {Kind::orbit, "orbit"},
      {Kind::in_Z, "in_Z"},         {Kind::low_zeros, "low_zeros"},
      {Kind::orbit_low, "orbit_low"}, {Kind::near, "near"}};
  if (lp > 0) strata.insert(strata.begin() + 3, {Kind::c2_flip, "c2_flip"});

  std::map<std::string, int> per_stratum;
  int mismatches = 0;
  for (int trial = 0; trial < trials; ++trial) {
    auto [kind, stratum_name] = strata[trial % strata.size()];
    Point v, w;
    bool must_be_equivalent = false;
    switch (kind) {
      case Kind::generic:
        v = sampler.sample();
        w = sampler.sample();
        break;
      case Kind::orbit:
        v = sampler.sample();
        w = act(rep, sampler.random_nonzero_rational(), v);
        must_be_equivalent = true;
        break;
      case Kind::in_Z:
        v = sampler.sample(Stratum::in_Z);
        w = sampler.sample(Stratum::in_Z);
        break;
      case Kind::c2_flip: {
        v = sampler.sample(Stratum::in_Z);
        w = v;
        // one global sign on the mid coordinates of the 2-mod-4 block, and
        // fresh values on coordinates invisible to invariants inside Z
        for (int j = 1; j <= lp; ++j) {
          int mid = rep.degree(j) / 2;
          w.set_coord(mid, j, -v.coord(mid, j));
        }
        for (int j = 1; j <= rep.k(); ++j) {
          int n = rep.degree(j);
          int visible_mid = (n % 2 == 0) ? n / 2 : -1;
          for (int i = slice_top(n) + 1; i <= n; ++i)
            if (i != visible_mid) w.set_coord(i, j, sampler.random_rational());
        }
        must_be_equivalent = true;
        break;
      }
      case Kind::low_zeros: {
        auto prefixes = sampler.sample_prefixes();
        v = sampler.sample_with_prefixes(prefixes);
        w = sampler.sample_with_prefixes(prefixes);
        break;
      }
      case Kind::orbit_low:
        v = sampler.sample(Stratum::low_zeros);
        w = act(rep, sampler.random_nonzero_rational(), v);
        must_be_equivalent = true;
        break;
      case Kind::near: {
        v = sampler.sample();
        w = v;
        int j = 1 + static_cast<int>(sampler.random_below(static_cast<uint64_t>(rep.k())));
        int i = static_cast<int>(sampler.random_below(static_cast<uint64_t>(rep.degree(j) + 1)));
        w.set_coord(i, j, w.coord(i, j) + Rational(1));
        break;
      }
    }
    ++per_stratum[stratum_name];

    bool agree = values_on(v) == values_on(w);
    bool oracle = invariant_equivalent(rep, v, w);
    bool bad = agree != oracle || (must_be_equivalent && !oracle);
    if (bad) {
      ++mismatches;
      r.pass = false;
      if (r.witnesses.size() < 10) {
        nlohmann::ordered_json witness = point_pair_json(v, w);
        witness["stratum"] = stratum_name;
        witness["set_agrees"] = agree;
        witness["oracle"] = oracle;
        r.witnesses.push_back(witness);
      }
    }
  }
  r.details["pairs"] = trials;
  r.details["mismatches"] = mismatches;
  nlohmann::ordered_json strata_json = nlohmann::ordered_json::object();
  for (const auto& [name, count] : per_stratum) strata_json[name] = count;
  r.details["strata"] = strata_json;
  r.millis = elapsed_ms(start);
  return r;
}

std::optional<long> table_size(const RepSpec& rep) {
  std::vector<int> sorted = rep.summands();
  std::sort(sorted.begin(), sorted.end());

  bool homogeneous = std::all_of(sorted.begin(), sorted.end(),
                                 [&](int n) { return n == sorted.front(); });
  long c = static_cast<long>(sorted.size());
  if (homogeneous) {
    // explicit table cells first, then the closed-form columns
    static const std::map<std::pair<int, long>, long> cells = {
        {{2, 2}, 10},  {{2, 3}, 21},  {{2, 4}, 36},  {{3, 1}, 7},   {{3, 2}, 24},
        {{3, 3}, 51},  {{3, 4}, 108}, {{3, 5}, 135}, {{4, 1}, 11},  {{4, 2}, 35},
        {{4, 3}, 75},  {{4, 4}, 128}, {{4, 5}, 195}, {{5, 1}, 16},  {{5, 2}, 56},
    };
    int m = sorted.front();
    auto cell = cells.find({m, c});
    if (cell != cells.end()) return cell->second;
    switch (m) {
      case 2: return 2 * c * c + c;
      case 3: return 5 * c * c + 2 * c;
      case 4: return 7 * c * c + 4 * c;
      case 5: return 12 * c * c + 4 * c;
      case 6: return (31 * c * c + 9 * c) / 2;
      default: return std::nullopt;
    }
  }
  if (sorted.size() == 2) {
    static const std::map<std::pair<int, int>, long> pairs = {
        {{1, 2}, 7},  {{1, 3}, 12}, {{1, 4}, 17}, {{1, 5}, 23}, {{2, 3}, 15},
        {{2, 4}, 21}, {{2, 5}, 29}, {{3, 4}, 30}, {{3, 5}, 39},
    };
    auto it = pairs.find({sorted[0], sorted[1]});
    if (it != pairs.end()) return it->second;
  }
  return std::nullopt;
}

CheckResult check_counts(const RepSpec& rep, const SeparatingSet& set) {
  auto start = Clock::now();
  CheckResult r{"counts"};

  nlohmann::ordered_json raw = nlohmann::ordered_json::object();
  for (const auto& [fam, count] : set.raw_counts) raw[family_name(fam)] = count;
  r.details["raw_counts"] = raw;
  r.details["raw_total"] = set.raw_total();
  r.details["size"] = set.elements.size();
  int dropped_zero = 0, dropped_duplicate = 0;
  for (const auto& d : set.dropped)
    (d.reason == DroppedInvariant::Reason::zero ? dropped_zero : dropped_duplicate)++;
  r.details["dropped_zero"] = dropped_zero;
  r.details["dropped_duplicate"] = dropped_duplicate;

  // hard internal consistency: the dedup invariant must hold
  if (set.dedup == DedupMode::scalar) {
    std::map<std::string, std::string> normal_forms;
    for (const auto& t : set.elements) {
      if (t.poly.is_zero()) {
        r.pass = false;
        r.witnesses.push_back({{"element", t.label()}, {"problem", "zero element retained"}});
        continue;
      }
      std::string key = t.poly.scale(Rational(1) / t.poly.leading_coefficient()).str();
      auto [it, inserted] = normal_forms.emplace(key, t.label());
      if (!inserted) {
        r.pass = false;
        r.witnesses.push_back({{"element", t.label()},
                               {"problem", "scalar multiple retained"},
                               {"of", it->second}});
      }
    }
  }

  // published sizes are informational: mismatches are flagged, not failed
  auto published = table_size(rep);
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  if (published) {
    table["published"] = *published;
    table["computed"] = set.elements.size();
    table["status"] =
        (*published == static_cast<long>(set.elements.size())) ? "match" : "mismatch-flagged";
  } else {
    table["status"] = "not-listed";
  }
  r.details["table"] = table;

  // w is defined on unordered pairs; report the swapped-order ratio
  nlohmann::ordered_json wsym = nlohmann::ordered_json::array();
  for (const auto& t : set.elements) {
    if (t.family != Family::w) continue;
    Polynomial swapped = w_invariant(rep, t.indices[1], t.indices[0]);
    nlohmann::ordered_json entry{{"pair", t.indices}};
    if (swapped.scale(t.poly.leading_coefficient() / swapped.leading_coefficient()) == t.poly) {
      entry["proportional"] = true;
      entry["ratio"] = (swapped.leading_coefficient() / t.poly.leading_coefficient()).str();
    } else {
      entry["proportional"] = false;
    }
    wsym.push_back(entry);
  }
  r.details["w_swap"] = wsym;

  r.millis = elapsed_ms(start);
  return r;
}

nlohmann::ordered_json run_checks(const RepSpec& rep, const std::vector<std::string>& names,
                                  int trials, uint64_t seed, SampleBounds bounds,
                                  bool include_timings) {
  for (const auto& name : names) {
    if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
        all_check_names().end())
      throw std::invalid_argument("unknown check '" + name + "'");
  }
  auto wants = [&](const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
  };

  SeparatingSet set = build_separating_set(rep);

  nlohmann::ordered_json report;
  report["rep"] = rep.to_json();
  report["seed"] = seed;
  report["trials"] = trials;
  report["bounds"] = {{"numerator", bounds.numerator_bound}, {"denominator", bounds.denominator_max}};

  std::vector<CheckResult> results;
  // fixed execution order = the canonical name order
  for (const auto& name : all_check_names()) {
    if (!wants(name)) continue;
    if (name == "invariance") results.push_back(check_invariance(rep, set));
    else if (name == "degree") results.push_back(check_degree(rep, set));
    else if (name == "support") results.push_back(check_support(rep, set));
    else if (name == "projection") results.push_back(check_projection(rep, set));
    else if (name == "epsilon") results.push_back(check_epsilon_identity(rep, trials, seed, bounds));
    else if (name == "separation") results.push_back(check_separation(rep, set, trials, seed, bounds));
    else if (name == "counts") results.push_back(check_counts(rep, set));
  }

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& result : results) checks.push_back(result.to_json(include_timings));
  report["checks"] = checks;
  return report;
}

bool report_has_failures(const nlohmann::json& report) {
  for (const auto& check : report.at("checks"))
    if (check.at("status").get<std::string>() != "pass") return true;
  return false;
}

}  // namespace gasep
