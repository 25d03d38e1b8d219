#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "srg/grid.hpp"
#include "srg/growers.hpp"

namespace srg {

/// Unit-weight multi-source shortest-path distances over the V-adjacency
/// graph restricted to the domain. kUnreachable marks points no path reaches.
class DistanceMap {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMap(std::vector<Coord> dims, std::vector<std::int32_t> values);

  const std::vector<Coord>& dims() const { return dims_; }
  std::int32_t at_index(std::size_t idx) const { return values_[idx]; }
  const std::vector<std::int32_t>& values() const { return values_; }

 private:
  std::vector<Coord> dims_;
  std::vector<std::int32_t> values_;
};

/// BFS from the source set; throws if a source point is off the domain.
DistanceMap geodesic_distances(const GridDomain& domain, const PointSet& source,
                               const Neighborhood& v);

/// z(s_i) = points strictly closer to seed i than to every other seed.
/// Points unreachable from all seeds belong to no zone.
std::vector<PointSet> influence_zones(const GridDomain& domain, const SeedList& seeds,
                                      const Neighborhood& v);

/// Reachable points whose minimal geodesic distance is attained by two or
/// more seeds at once.
PointSet ambiguous_set(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v);

enum class Axiom {
  kCoverGap,      // universe point missing from every block
  kCoverExcess,   // block point outside the universe
  kOverlap,       // two blocks share a point
  kSeparation,    // dilate(X_i, V) meets X_j
  kBoundaryThick  // erode(X_b, V) nonempty
};

std::string axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::string detail;
  std::vector<Point> witnesses;
};

struct PartitionReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Blocks cover the universe and are pairwise disjoint.
PartitionReport is_simple_partition(std::span<const PointSet> blocks, const PointSet& universe);

/// Blocks plus boundary cover the universe, blocks are pairwise
/// non-V-adjacent, and the boundary erodes to nothing (thickness one).
PartitionReport is_v_boundary_partition(std::span<const PointSet> blocks,
                                        const PointSet& boundary, const Neighborhood& v,
                                        const PointSet& universe);

/// The influence zones plus the ambiguous set are pairwise disjoint and
/// their union is the seed-reachable subset of the domain.
bool decomposition_check(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v);

/// Rewrites run-local labels to order-independent values: unlabeled stays
/// kUnlabeled, the boundary becomes the reserved label 0 (present in the
/// policy table even when unused), and each seed region becomes
/// 1 + lexicographic rank of its seed id. Two results agree here exactly
/// when their point -> seed-id assignments agree.
LabelMap canonical_relabel(const GrowResult& result);

}  // namespace srg
