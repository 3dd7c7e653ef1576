#include "pidx/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "pidx/extraction.hpp"

namespace pidx {

namespace {

void require_cap(int m, int cap, const char* what) {
  if (m > cap) {
    throw SizeCapError(std::string(what) + " is capped at ground sets of " +
                       std::to_string(cap) + " elements, got " +
                       std::to_string(m));
  }
}

}  // namespace

std::vector<std::uint8_t> tabulate(const PredicateOracle& p, int cap,
                                   int threads) {
  const int m = p.ground().size();
  require_cap(m, cap, "exhaustive tabulation");
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::uint8_t> sat(count);
  const int workers = std::max(
      1, std::min(threads, static_cast<int>(std::min<std::uint64_t>(count, 256))));
  if (workers == 1) {
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      sat[mask] = p.evaluate(SubsetMask(mask)) ? 1 : 0;
    }
    return sat;
  }
  // Disjoint slices of the mask range; copies of the oracle share one atomic
  // tally, so concurrent evaluation keeps the count exact.
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&sat, p, begin, end] {
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        sat[mask] = p.evaluate(SubsetMask(mask)) ? 1 : 0;
      }
    });
  }
  for (auto& t : pool) t.join();
  return sat;
}

MinimalFamily msp_family_from_table(const std::vector<std::uint8_t>& sat,
                                    int ground_size) {
  const std::uint64_t full = (std::uint64_t{1} << ground_size) - 1;
  std::vector<SubsetMask> members;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!sat[s]) continue;
    bool minimal = true;
    for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
      const std::uint64_t bit = bits & (0 - bits);
      if (sat[s ^ bit]) {
        minimal = false;
        break;
      }
    }
    if (minimal) members.push_back(SubsetMask(s));
  }
  return MinimalFamily::from_canonical_unchecked(ground_size, FamilyKind::msp,
                                                 std::move(members));
}

MinimalFamily mbp_family_from_table(const std::vector<std::uint8_t>& sat,
                                    int ground_size) {
  const std::uint64_t full = (std::uint64_t{1} << ground_size) - 1;
  std::vector<SubsetMask> members;
  for (std::uint64_t b = 0; b <= full; ++b) {
    const std::uint64_t rest = full ^ b;
    if (sat[rest]) continue;  // removing b does not break the predicate
    bool minimal = true;
    for (std::uint64_t bits = b; bits != 0; bits &= bits - 1) {
      const std::uint64_t bit = bits & (0 - bits);
      if (!sat[rest | bit]) {  // re-adding one element must revive it
        minimal = false;
        break;
      }
    }
    if (minimal) members.push_back(SubsetMask(b));
  }
  return MinimalFamily::from_canonical_unchecked(ground_size, FamilyKind::mbp,
                                                 std::move(members));
}

std::pair<MinimalFamily, MinimalFamily> enumerate_brute(
    const PredicateOracle& p, int cap, int threads) {
  const std::vector<std::uint8_t> sat = tabulate(p, cap, threads);
  const int m = p.ground().size();
  return {msp_family_from_table(sat, m), mbp_family_from_table(sat, m)};
}

namespace {

constexpr std::uint64_t kClassDone = ~std::uint64_t{0};

// Next mask with the same popcount in ascending numeric order (Gosper), or
// kClassDone past the given full-mask bound.
std::uint64_t next_same_cardinality(std::uint64_t v, std::uint64_t full) {
  if (v == 0) return kClassDone;  // the empty mask is alone in its class
  const std::uint64_t low = v & (0 - v);
  const std::uint64_t ripple = v + low;
  const std::uint64_t next = ripple | (((v ^ ripple) >> 2) / low);
  return next > full ? kClassDone : next;
}

struct MarcoRun {
  std::vector<SubsetMask> msps;
  std::vector<SubsetMask> mbps;
};

MarcoRun marco_run(const PredicateOracle& p,
                   std::optional<std::size_t> limit,
                   std::optional<FamilyKind> limit_kind) {
  const int m = p.ground().size();
  require_cap(m, kMarcoCap, "seed-shrink-grow enumeration");
  const std::uint64_t full = p.ground().full().value();

  std::vector<bool> blocked(full + 1, false);
  // One resume pointer per cardinality class. The canonical scan never has to
  // revisit a pointer it advanced past: blocked flags are never cleared, so a
  // mask skipped as blocked stays blocked, and a class reported exhausted
  // stays exhausted.
  std::vector<std::uint64_t> resume(static_cast<std::size_t>(m) + 1);
  for (int c = 0; c <= m; ++c) {
    resume[c] = c == 0 ? 0 : (std::uint64_t{1} << c) - 1;
  }

  MarcoRun out;
  const auto block_supersets = [&](std::uint64_t base) {
    const std::uint64_t rest = full & ~base;
    std::uint64_t sub = rest;
    for (;;) {
      blocked[base | sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  };
  const auto block_subsets = [&](std::uint64_t base) {
    std::uint64_t sub = base;
    for (;;) {
      blocked[sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & base;
    }
  };
  const auto reached_limit = [&] {
    if (!limit || !limit_kind) return false;
    const std::size_t have = *limit_kind == FamilyKind::msp ? out.msps.size()
                                                            : out.mbps.size();
    return have >= *limit;
  };

  for (int c = 0; c <= m && !reached_limit(); ++c) {
    std::uint64_t& cursor = resume[c];
    while (!reached_limit()) {
      while (cursor != kClassDone && blocked[cursor]) {
        cursor = next_same_cardinality(cursor, full);
      }
      if (cursor == kClassDone) break;
      const SubsetMask seed(cursor);
      if (p.evaluate(seed)) {
        // Any minimal set below this seed is new: had it been found before,
        // the seed would be blocked as its superset.
        const SubsetMask found =
            extract_msp(p, seed, ExtractAlgo::deletion).found;
        out.msps.push_back(found);
        block_supersets(found.value());
      } else {
        const SubsetMask coatom = grow_to_coatom(p, seed);
        out.mbps.push_back(SubsetMask(full ^ coatom.value()));
        block_subsets(coatom.value());
      }
    }
  }
  return out;
}

}  // namespace

MinimalFamily enumerate_marco(const PredicateOracle& p, FamilyKind kind,
                              std::optional<std::size_t> limit) {
  MarcoRun run = marco_run(p, limit, kind);
  const int m = p.ground().size();
  return kind == FamilyKind::msp
             ? MinimalFamily::from_canonical_unchecked(m, FamilyKind::msp,
                                                       std::move(run.msps))
             : MinimalFamily::from_canonical_unchecked(m, FamilyKind::mbp,
                                                       std::move(run.mbps));
}

std::pair<MinimalFamily, MinimalFamily> enumerate_marco_both(
    const PredicateOracle& p) {
  MarcoRun run = marco_run(p, std::nullopt, std::nullopt);
  const int m = p.ground().size();
  return {MinimalFamily::from_canonical_unchecked(m, FamilyKind::msp,
                                                  std::move(run.msps)),
          MinimalFamily::from_canonical_unchecked(m, FamilyKind::mbp,
                                                  std::move(run.mbps))};
}

MinimalFamily minimal_hitting_sets(const MinimalFamily& family) {
  if (family.empty()) {
    throw PreconditionError("hitting sets of an empty family are undefined");
  }
  const std::vector<SubsetMask>& members = family.members();
  std::vector<SubsetMask> found;

  // Branch over the elements of the first member the partial set misses.
  // Each branch on element e bans the elements tried before e at the same
  // node, which partitions the search space: no hitting set is reached twice.
  // A recorded set that fits inside the partial set prunes the node, because
  // every completion from there would be a strict superset of it.
  const std::function<void(SubsetMask, SubsetMask)> descend =
      [&](SubsetMask hit, SubsetMask banned) {
        for (SubsetMask r : found) {
          if (r.subset_of(hit)) return;
        }
        const SubsetMask* unhit = nullptr;
        for (const SubsetMask& s : members) {
          if ((s & hit).empty()) {
            unhit = &s;
            break;
          }
        }
        if (unhit == nullptr) {
          found.push_back(hit);
          return;
        }
        SubsetMask tried;
        for (Element e : *unhit) {
          if (banned.contains(e)) continue;
          descend(hit.with(e), banned | tried);
          tried = tried.with(e);
        }
      };
  descend(SubsetMask{}, SubsetMask{});

  // Drop the non-minimal stragglers (a subset recorded later than its
  // superset escapes the in-search prune).
  std::vector<SubsetMask> minimal;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < found.size(); ++j) {
      if (j != i && found[j].subset_of(found[i])) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(found[i]);
  }
  const FamilyKind flipped =
      family.kind() == FamilyKind::msp ? FamilyKind::mbp : FamilyKind::msp;
  return MinimalFamily::from_canonical_unchecked(family.ground_size(), flipped,
                                                 std::move(minimal));
}

bool check_duality(const MinimalFamily& msps, const MinimalFamily& mbps) {
  if (msps.ground_size() != mbps.ground_size()) {
    throw PreconditionError(
        "duality check requires families over the same ground size");
  }
  return minimal_hitting_sets(msps).members() == mbps.members() &&
         minimal_hitting_sets(mbps).members() == msps.members();
}

}  // namespace pidx
