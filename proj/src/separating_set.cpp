#include "gasep/separating_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "gasep/invariants.hpp"

namespace gasep {

std::string family_name(Family f) {
  switch (f) {
    case Family::f: return "f";
    case Family::eps_cross_low: return "eps_cross_low";
    case Family::eps_self: return "eps_self";
    case Family::eps_cross_high: return "eps_cross_high";
    case Family::w: return "w";
    case Family::z: return "z";
  }
  return "?";
}

DedupMode parse_dedup_mode(const std::string& name) {
  if (name == "scalar") return DedupMode::scalar;
  if (name == "exact") return DedupMode::exact;
  if (name == "none") return DedupMode::none;
  throw std::invalid_argument("unknown dedup mode '" + name + "'");
}

std::string TaggedInvariant::label() const {
  auto idx = [&](int a) { return std::to_string(indices[a]); };
  switch (family) {
    case Family::f:
      return "f[" + idx(0) + "," + idx(1) + "]";
    case Family::eps_cross_low:
    case Family::eps_self:
    case Family::eps_cross_high:
      return "eps(x[" + idx(0) + "," + idx(1) + "];s[" + idx(2) + "," + idx(3) + "])";
    case Family::w:
      return "w[" + idx(0) + "," + idx(1) + "]";
    case Family::z:
      return "z[" + idx(0) + "]";
  }
  return "?";
}

int SeparatingSet::raw_total() const {
  int total = 0;
  for (const auto& [fam, count] : raw_counts) total += count;
  return total;
}

namespace {

struct Candidate {
  Family family;
  std::vector<int> indices;
  Polynomial poly;
};

// All candidates of one family, sorted by index tuple.
void sort_by_indices(std::vector<Candidate>& v) {
  std::sort(v.begin(), v.end(),
            [](const Candidate& a, const Candidate& b) { return a.indices < b.indices; });
}

std::vector<Candidate> enumerate_family(const RepSpec& rep, Family fam) {
  std::vector<Candidate> out;
  int k = rep.k();
  int l = rep.even_count();
  int lp = rep.two_mod4_count();
  auto eps_of = [&](int i1, int j1, int i2, int j2) {
    return epsilon(rep, s_slice(rep, i2, j2), Polynomial::var(VarId::main(i1, j1)));
  };
  switch (fam) {
    case Family::f:
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i <= rep.degree(j) / 2; ++i)
          out.push_back({fam, {i, j}, f_inv(rep, i, j)});
      break;
    case Family::eps_cross_low:
      for (int j1 = 1; j1 <= k; ++j1)
        for (int j2 = j1 + 1; j2 <= k; ++j2)
          for (int i1 = slice_top(rep.degree(j1)) + 1; i1 <= rep.degree(j1); ++i1)
            for (int i2 = 0; i2 <= slice_top(rep.degree(j2)); ++i2)
              out.push_back({fam, {i1, j1, i2, j2}, eps_of(i1, j1, i2, j2)});
      break;
    case Family::eps_self:
      for (int j = 1; j <= k; ++j)
        for (int i2 = 0; i2 <= slice_top(rep.degree(j)); ++i2)
          for (int i1 = i2; i1 <= rep.degree(j); ++i1)
            out.push_back({fam, {i1, j, i2, j}, eps_of(i1, j, i2, j)});
      break;
    case Family::eps_cross_high:
      for (int j2 = 1; j2 <= k; ++j2)
        for (int j1 = j2 + 1; j1 <= k; ++j1)
          for (int i1 = 0; i1 <= rep.degree(j1); ++i1)
            for (int i2 = 0; i2 <= slice_top(rep.degree(j2)); ++i2)
              out.push_back({fam, {i1, j1, i2, j2}, eps_of(i1, j1, i2, j2)});
      break;
    case Family::w:
      // unordered pairs; w[j2,j1] is proportional to w[j1,j2]
      for (int j1 = 1; j1 <= lp; ++j1)
        for (int j2 = j1 + 1; j2 <= lp; ++j2)
          out.push_back({fam, {j1, j2}, w_invariant(rep, j1, j2)});
      break;
    case Family::z:
      for (int j = lp + 1; j <= l; ++j)
        if (rep.degree(j) > 0) out.push_back({fam, {j}, z_invariant(rep, j)});
      break;
  }
  sort_by_indices(out);
  return out;
}

}  // namespace

SeparatingSet build_separating_set(const RepSpec& rep, DedupMode mode) {
  SeparatingSet set;
  set.rep = rep;
  set.dedup = mode;

  constexpr Family kFamilies[] = {Family::f,   Family::eps_cross_low, Family::eps_self,
                                  Family::eps_cross_high, Family::w,  Family::z};

  // key: canonical text of the comparison form -> index into set.elements
  std::map<std::string, size_t> seen;
  for (Family fam : kFamilies) {
    auto candidates = enumerate_family(rep, fam);
    set.raw_counts[fam] = static_cast<int>(candidates.size());
    for (auto& cand : candidates) {
      if (mode == DedupMode::none) {
        set.elements.push_back({cand.family, cand.indices, std::move(cand.poly)});
        continue;
      }
      if (cand.poly.is_zero()) {
        set.dropped.push_back(
            {cand.family, cand.indices, DroppedInvariant::Reason::zero, Family::f, {}, Rational(0)});
        continue;
      }
      Rational lc = cand.poly.leading_coefficient();
      Polynomial normalized =
          (mode == DedupMode::scalar) ? cand.poly.scale(Rational(1) / lc) : cand.poly;
      std::string key = normalized.str();
      auto [it, inserted] = seen.emplace(key, set.elements.size());
      if (!inserted) {
        const TaggedInvariant& kept = set.elements[it->second];
        Rational ratio = (mode == DedupMode::scalar)
                             ? lc / kept.poly.leading_coefficient()
                             : Rational(1);
        set.dropped.push_back({cand.family, cand.indices, DroppedInvariant::Reason::duplicate,
                               kept.family, kept.indices, ratio});
        continue;
      }
      set.elements.push_back({cand.family, cand.indices, std::move(cand.poly)});
    }
  }
  return set;
}

nlohmann::ordered_json SeparatingSet::to_json(bool include_polynomials) const {
  nlohmann::ordered_json j;
  j["rep"] = rep.to_json();
  j["dedup"] = dedup == DedupMode::scalar ? "scalar" : (dedup == DedupMode::exact ? "exact" : "none");
  nlohmann::ordered_json raw = nlohmann::ordered_json::object();
  for (const auto& [fam, count] : raw_counts) raw[family_name(fam)] = count;
  j["raw_counts"] = raw;
  j["raw_total"] = raw_total();
  j["size"] = elements.size();
  nlohmann::ordered_json dropped_json = nlohmann::ordered_json::array();
  for (const auto& d : dropped) {
    nlohmann::ordered_json entry{{"family", family_name(d.family)}, {"indices", d.indices}};
    if (d.reason == DroppedInvariant::Reason::zero) {
      entry["reason"] = "zero";
    } else {
      entry["reason"] = "duplicate-of";
      entry["of"] = {{"family", family_name(d.kept_family)}, {"indices", d.kept_indices}};
      entry["ratio"] = d.ratio.str();
    }
    dropped_json.push_back(entry);
  }
  j["dropped"] = dropped_json;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const auto& t : elements) {
    nlohmann::ordered_json entry{{"family", family_name(t.family)},
                                 {"indices", t.indices},
                                 {"label", t.label()},
                                 {"degree", t.degree()}};
    if (include_polynomials) {
      entry["text"] = t.poly.str();
      entry["polynomial"] = t.poly.to_json();
    }
    elems.push_back(entry);
  }
  j["elements"] = elems;
  return j;
}

}  // namespace gasep
