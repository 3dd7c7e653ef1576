#include "pidx/indices.hpp"

#include <algorithm>
#include <bit>

namespace pidx {

std::uint64_t SwingProfile::sigma_total() const {
  std::uint64_t total = 0;
  for (std::uint64_t s : sigma) total += s;
  return total;
}

SwingProfile swing_profile_from_table(const std::vector<std::uint8_t>& sat,
                                      int ground_size) {
  const int m = ground_size;
  SwingProfile profile;
  profile.ground_size = m;
  profile.sigma.assign(static_cast<std::size_t>(m), 0);
  profile.sigma_by_size.assign(
      static_cast<std::size_t>(m),
      std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::uint64_t crit_sets = 0;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!sat[s]) continue;
    const int card = std::popcount(s);
    bool any = false;
    for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
      const std::uint64_t bit = bits & (0 - bits);
      if (!sat[s ^ bit]) {
        const int e = std::countr_zero(bit);
        profile.sigma[e] += 1;
        profile.sigma_by_size[e][card] += 1;
        any = true;
      }
    }
    if (any) ++crit_sets;
  }
  profile.crit_containing_sets = crit_sets;
  return profile;
}

SwingProfile swing_profile_brute(const PredicateOracle& p, int cap,
                                 int threads) {
  return swing_profile_from_table(tabulate(p, cap, threads),
                                  p.ground().size());
}

SwingProfile swing_profile_from_family(const MinimalFamily& family, int cap,
                                       int threads) {
  if (family.kind() != FamilyKind::msp) {
    throw PreconditionError(
        "swing profile needs a family of minimal satisfying sets");
  }
  if (family.empty()) {
    throw PreconditionError("swing profile of an empty family is undefined");
  }
  ExplicitFamilySpec spec{family.ground_size(), family.members()};
  return swing_profile_brute(make_explicit_family(spec), cap, threads);
}

SwingProfile swing_profile_threshold_dp(const ThresholdSpec& spec,
                                        int brute_cap) {
  spec.validate();
  const int m = spec.ground_size();
  const std::uint64_t quota = spec.quota;
  // Partner weights at or above the quota can never witness a swing, so the
  // weight axis saturates at quota and the table is m x quota. Counts fit
  // 64 bits: each entry is at most C(62, 31) < 2^59.
  if (static_cast<std::uint64_t>(m) * quota > (std::uint64_t{1} << 25)) {
    throw SizeCapError(
        "threshold tabulation needs m * quota table entries; " +
        std::to_string(m) + " * " + std::to_string(quota) + " is too large");
  }

  SwingProfile profile;
  profile.ground_size = m;
  profile.sigma.assign(static_cast<std::size_t>(m), 0);
  profile.sigma_by_size.assign(
      static_cast<std::size_t>(m),
      std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));

  const std::size_t qn = static_cast<std::size_t>(quota);
  for (int i = 1; i <= m; ++i) {
    // count[s][w]: subsets of the other elements with size s, weight w < quota.
    std::vector<std::vector<std::uint64_t>> count(
        static_cast<std::size_t>(m), std::vector<std::uint64_t>(qn, 0));
    count[0][0] = 1;
    int placed = 0;
    for (int j = 1; j <= m; ++j) {
      if (j == i) continue;
      const std::uint64_t w = spec.weights[static_cast<std::size_t>(j) - 1];
      ++placed;
      if (w >= quota) continue;  // any subset containing j leaves the table
      for (int s = std::min(placed - 1, m - 2); s >= 0; --s) {
        const auto& row = count[static_cast<std::size_t>(s)];
        auto& next = count[static_cast<std::size_t>(s) + 1];
        for (std::size_t wt = 0; wt + w < quota; ++wt) {
          if (row[wt] != 0) next[wt + static_cast<std::size_t>(w)] += row[wt];
        }
      }
    }
    // Element i swings S = T + {i} exactly when quota - w_i <= weight(T) and
    // weight(T) < quota. A zero-weight element has an empty window: dummy.
    const std::uint64_t wi = spec.weights[static_cast<std::size_t>(i) - 1];
    const std::uint64_t lower = quota > wi ? quota - wi : 0;
    for (int s = 1; s <= m; ++s) {
      std::uint64_t swings = 0;
      const auto& row = count[static_cast<std::size_t>(s) - 1];
      for (std::uint64_t wt = lower; wt < quota; ++wt) {
        swings += row[static_cast<std::size_t>(wt)];
      }
      profile.sigma_by_size[i - 1][static_cast<std::size_t>(s)] = swings;
      profile.sigma[i - 1] += swings;
    }
  }

  if (m <= brute_cap) {
    // The crit-containing count has no cardinality-by-weight shortcut; fill
    // it from a full scan while that is affordable.
    const std::vector<std::uint8_t> sat = tabulate(make_threshold(spec), brute_cap);
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::uint64_t crit_sets = 0;
    for (std::uint64_t s = 0; s <= full; ++s) {
      if (!sat[s]) continue;
      for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
        const std::uint64_t bit = bits & (0 - bits);
        if (!sat[s ^ bit]) {
          ++crit_sets;
          break;
        }
      }
    }
    profile.crit_containing_sets = crit_sets;
  }
  return profile;
}

std::vector<Rational> shapley(const SwingProfile& profile) {
  const int m = profile.ground_size;
  std::vector<Rational> out(static_cast<std::size_t>(m), Rational(0));
  for (int e = 0; e < m; ++e) {
    for (int s = 1; s <= m; ++s) {
      const std::uint64_t swings =
          profile.sigma_by_size[static_cast<std::size_t>(e)]
                               [static_cast<std::size_t>(s)];
      if (swings == 0) continue;
      // Of the m * C(m-1, s-1) (position, size) slots, the element is pivotal
      // in `swings` of the size-s ones.
      out[static_cast<std::size_t>(e)] +=
          Rational(BigInt(swings), BigInt(m) * binomial(m - 1, s - 1));
    }
  }
  return out;
}

BanzhafValues banzhaf(const SwingProfile& profile) {
  const int m = profile.ground_size;
  const std::uint64_t total = profile.sigma_total();
  if (total == 0) {
    throw PreconditionError(
        "no element is ever critical; the predicate is not a valid "
        "non-constant monotone predicate");
  }
  BanzhafValues values;
  const BigInt denom_raw = BigInt(1) << (m - 1);
  for (int e = 0; e < m; ++e) {
    const std::uint64_t swings = profile.sigma[static_cast<std::size_t>(e)];
    values.raw.emplace_back(BigInt(swings), denom_raw);
    values.norm.emplace_back(BigInt(swings), BigInt(total));
  }
  if (profile.crit_containing_sets) {
    std::vector<Rational> frac;
    for (int e = 0; e < m; ++e) {
      frac.emplace_back(BigInt(profile.sigma[static_cast<std::size_t>(e)]),
                        BigInt(*profile.crit_containing_sets));
    }
    values.frac = std::move(frac);
  }
  return values;
}

std::vector<Rational> deegan_packel(const MinimalFamily& family) {
  if (family.kind() != FamilyKind::msp) {
    throw PreconditionError(
        "deegan_packel needs a family of minimal satisfying sets");
  }
  if (family.empty()) {
    throw PreconditionError("deegan_packel of an empty family is undefined");
  }
  std::vector<Rational> out(static_cast<std::size_t>(family.ground_size()),
                            Rational(0));
  const BigInt family_size(family.size());
  for (SubsetMask s : family.members()) {
    const Rational share(BigInt(1), BigInt(s.cardinality()) * family_size);
    for (Element e : s) out[static_cast<std::size_t>(e) - 1] += share;
  }
  return out;
}

const char* to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::shapley: return "shapley";
    case IndexKind::banzhaf_raw: return "banzhaf_raw";
    case IndexKind::banzhaf_frac: return "banzhaf_frac";
    case IndexKind::banzhaf_norm: return "banzhaf_norm";
    case IndexKind::deegan_packel: return "deegan_packel";
  }
  return "unknown";
}

std::optional<IndexKind> index_kind_from_string(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "shapley") return IndexKind::shapley;
  if (key == "banzhaf_raw") return IndexKind::banzhaf_raw;
  if (key == "banzhaf_frac") return IndexKind::banzhaf_frac;
  if (key == "banzhaf_norm") return IndexKind::banzhaf_norm;
  if (key == "deegan_packel") return IndexKind::deegan_packel;
  return std::nullopt;
}

const char* to_string(ComputeMethod method) {
  switch (method) {
    case ComputeMethod::automatic: return "auto";
    case ComputeMethod::brute: return "brute";
    case ComputeMethod::family: return "family";
    case ComputeMethod::threshold_dp: return "threshold_dp";
  }
  return "unknown";
}

std::optional<ComputeMethod> compute_method_from_string(
    const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "auto") return ComputeMethod::automatic;
  if (key == "brute") return ComputeMethod::brute;
  if (key == "family") return ComputeMethod::family;
  if (key == "threshold_dp") return ComputeMethod::threshold_dp;
  return std::nullopt;
}

const std::optional<std::vector<Rational>>& IndexReport::column(
    IndexKind kind) const {
  switch (kind) {
    case IndexKind::shapley: return shapley;
    case IndexKind::banzhaf_raw: return banzhaf_raw;
    case IndexKind::banzhaf_frac: return banzhaf_frac;
    case IndexKind::banzhaf_norm: return banzhaf_norm;
    case IndexKind::deegan_packel: return deegan_packel;
  }
  throw Error("unreachable index kind");
}

IndexReport compute_report(const Problem& problem,
                           const std::vector<IndexKind>& requested,
                           ComputeMethod method, int precision, int brute_cap,
                           int threads) {
  if (precision < 0 || precision > 18) {
    throw PreconditionError("precision must be between 0 and 18");
  }
  ComputeMethod resolved = method;
  if (resolved == ComputeMethod::automatic) {
    if (problem.kind == ProblemKind::threshold) {
      resolved = ComputeMethod::threshold_dp;
    } else if (problem.kind == ProblemKind::monotone_family) {
      resolved = ComputeMethod::family;
    } else {
      resolved = ComputeMethod::brute;
    }
  }
  if (resolved == ComputeMethod::family && !problem.explicit_family()) {
    throw PreconditionError(
        "family method requires an explicit-family problem");
  }
  if (resolved == ComputeMethod::threshold_dp && !problem.threshold()) {
    throw PreconditionError(
        "threshold_dp method requires a threshold problem");
  }

  const auto wants = [&requested](IndexKind kind) {
    return std::find(requested.begin(), requested.end(), kind) !=
           requested.end();
  };
  const bool wants_banzhaf = wants(IndexKind::banzhaf_raw) ||
                             wants(IndexKind::banzhaf_frac) ||
                             wants(IndexKind::banzhaf_norm);

  const int m = problem.ground_size();
  SwingProfile profile;
  std::optional<MinimalFamily> family;
  switch (resolved) {
    case ComputeMethod::brute: {
      const std::vector<std::uint8_t> sat =
          tabulate(problem.make_oracle(), brute_cap, threads);
      profile = swing_profile_from_table(sat, m);
      if (wants(IndexKind::deegan_packel)) {
        family = msp_family_from_table(sat, m);
      }
      break;
    }
    case ComputeMethod::family: {
      family = MinimalFamily(m, FamilyKind::msp,
                             problem.explicit_family()->minimal_sets);
      profile = swing_profile_from_family(*family, brute_cap, threads);
      break;
    }
    case ComputeMethod::threshold_dp: {
      profile = swing_profile_threshold_dp(*problem.threshold(), brute_cap);
      // The DP fast path never enumerates the minimal-set family; past the
      // exhaustive cap deegan_packel joins banzhaf_frac as unavailable.
      if (wants(IndexKind::deegan_packel) && m <= brute_cap) {
        family = msp_family_from_table(
            tabulate(problem.make_oracle(), brute_cap, threads), m);
      }
      break;
    }
    case ComputeMethod::automatic:
      throw Error("unresolved compute method");
  }

  IndexReport report;
  report.ground_size = m;
  report.method = resolved;
  report.provenance = problem.describe();
  report.precision = precision;
  if (wants(IndexKind::shapley)) report.shapley = shapley(profile);
  if (wants_banzhaf) {
    BanzhafValues values = banzhaf(profile);
    if (wants(IndexKind::banzhaf_raw)) report.banzhaf_raw = values.raw;
    if (wants(IndexKind::banzhaf_norm)) report.banzhaf_norm = values.norm;
    if (wants(IndexKind::banzhaf_frac)) {
      if (values.frac) {
        report.banzhaf_frac = *values.frac;
      } else {
        report.unavailable.push_back(IndexKind::banzhaf_frac);
      }
    }
  }
  if (wants(IndexKind::deegan_packel)) {
    if (family) {
      report.deegan_packel = deegan_packel(*family);
    } else {
      report.unavailable.push_back(IndexKind::deegan_packel);
    }
  }
  return report;
}

}  // namespace pidx
