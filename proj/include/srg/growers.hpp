#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srg/grid.hpp"
#include "srg/population.hpp"

namespace srg {

/// One seed: an identifier and its marker points. The position of a seed in
/// a SeedList IS the initialisation order under test.
struct Seed {
  std::string id;
  std::vector<Point> points;
};
using SeedList = std::vector<Seed>;

enum class GrowMode { kSimple, kVBoundary, kAmbiguous };

enum class TraceCause { kSeed, kRegion, kBoundary, kSkip };

/// step counts label-assigning events; a skip repeats the current count.
struct TraceEvent {
  std::uint64_t step;
  Point point;
  std::int32_t label;  // grown label; for skips, the popped label
  TraceCause cause;
};
using TraceSink = std::function<void(const TraceEvent&)>;

struct GrowStats {
  std::uint64_t pops = 0;
  std::uint64_t skips = 0;
  std::uint64_t boundary_growths = 0;
};

struct GrowResult {
  LabelMap labels;
  /// Seed ids in the canonical order used for file output; run_with_order
  /// sets this to the unpermuted order so invariant results serialize
  /// byte-identically across orders.
  std::vector<std::string> seed_order;
  std::map<std::int32_t, std::string> seed_of_label;
  std::optional<std::int32_t> boundary_label;
  GrowStats stats;
};

struct GrowOptions {
  TraceSink trace;
  bool zi_audit = false;  // recompute-and-compare ZI covers after every growth
};

/// Single FIFO flood: pop couples and grow unconditionally (stale entries
/// are skipped). Output regions are a simple-partition of the seed-reachable
/// subset of the domain.
GrowResult grow_simple(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                       const GrowOptions& options = {});

/// Adds a passive boundary tribe, grown at any popped point covered by two
/// or more zones of influence. Requires seeds pairwise non-V-adjacent.
GrowResult grow_vboundary(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                          const GrowOptions& options = {});

/// Boundary as ambiguous points: the boundary grows only when the popped
/// couple's label is the minimum of the point's ZI cover, which compensates
/// the initialisation order.
GrowResult grow_ambiguous(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                          const GrowOptions& options = {});

/// Runs `mode` on seeds reordered by `order` (a permutation of the seed
/// indices); the result keeps the original seed ids and seed_order, so
/// results across orders are directly comparable.
GrowResult run_with_order(GrowMode mode, const GridDomain& domain, const SeedList& seeds,
                          const Neighborhood& v, std::span<const std::size_t> order,
                          const GrowOptions& options = {});

}  // namespace srg
