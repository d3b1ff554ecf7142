#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "digitop/subdivision.hpp"

namespace digitop {

// Verification record for a candidate cover F of a map f: whether F is
// continuous, whether the square rho_cod . F = f . rho_dom commutes, and the
// first violation of each kind (lexicographic) when it does not.
struct CoverCertificate {
  bool continuous = true;
  std::optional<std::pair<LatticePoint, LatticePoint>> continuity_violation;
  bool commutes = true;
  std::optional<LatticePoint> commuting_violation;
  bool pass() const { return continuous && commutes; }
};

// Checks that cover: S(domain(f), k_dom) -> S(codomain(f), k_cod) is a
// continuous cover of f. Throws if the shapes do not line up.
CoverCertificate verify_cover(const DigitalMap& f, const DigitalMap& cover,
                              int k_dom, int k_cod);

// A request to enumerate fillers of the covering square for f between the
// given subdivision factors. With fibrewise set, candidates are confined to
// the fibers forced by the commuting square; this is exactly the set of
// covers of f.
struct FillerQuery {
  DigitalMap map;
  int factor_domain = 1;
  int factor_codomain = 1;
  bool fibrewise = true;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct FillerEnumeration {
  enum class Status { complete, budget_exceeded };
  Status status = Status::complete;
  // Fillers in lexicographic order of their value tables, up to the
  // requested limit. Cleared when the budget is exceeded: a budget overrun
  // is an explicit outcome, never a silently truncated list.
  std::vector<DigitalMap> fillers;
  std::uint64_t total_count = 0;  // all fillers found before stopping
  std::uint64_t evaluations = 0;  // candidate assignments tried
  bool truncated = false;         // total_count exceeds the list limit
};

// Exhaustive backtracking over the domain points in lexicographic order with
// adjacency-consistency pruning. The budget bounds the number of candidate
// evaluations; exceeding it yields Status::budget_exceeded.
FillerEnumeration enumerate_fillers(const FillerQuery& q, std::size_t limit,
                                    std::uint64_t budget = kDefaultOracleBudget);

// Streaming form of the same search: visit receives each filler's value
// table (aligned with the sorted points of the subdivided domain) and may
// return false to stop. Large filler sets can be scanned without
// materializing them.
struct FillerScan {
  FillerEnumeration::Status status = FillerEnumeration::Status::complete;
  std::uint64_t total_count = 0;
  std::uint64_t evaluations = 0;
  bool stopped_early = false;
};
FillerScan for_each_filler(
    const FillerQuery& q, std::uint64_t budget,
    const std::function<bool(const std::vector<LatticePoint>&)>& visit);

// Decides membership of a candidate table in the filler set of q by walking
// the single backtracking branch the candidate selects.
bool contains_filler(const FillerQuery& q, const DigitalMap& candidate);

}  // namespace digitop
