#include "srg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace srg {

DistanceMap::DistanceMap(std::vector<Coord> dims, std::vector<std::int32_t> values)
    : dims_(std::move(dims)), values_(std::move(values)) {}

DistanceMap geodesic_distances(const GridDomain& domain, const PointSet& source,
                               const Neighborhood& v) {
  if (v.dim() != domain.dim())
    throw std::invalid_argument("neighborhood/domain dimension mismatch");
  std::vector<std::int32_t> dist(domain.box_size(), DistanceMap::kUnreachable);
  std::deque<std::size_t> queue;
  for (const Point& s : source) {
    if (!domain.contains(s))
      throw std::invalid_argument("geodesic_distances: source " + s.to_string() +
                                  " lies outside the domain");
    std::size_t idx = domain.index_of(s);
    if (dist[idx] == DistanceMap::kUnreachable) {
      dist[idx] = 0;
      queue.push_back(idx);
    }
  }
  while (!queue.empty()) {
    std::size_t xi = queue.front();
    queue.pop_front();
    Point x = domain.point_of(xi);
    for (const Point& o : v.offsets()) {
      Point y = x + o;
      if (!domain.in_box(y)) continue;
      std::size_t yi = domain.index_of(y);
      if (dist[yi] != DistanceMap::kUnreachable || !domain.contains_index(yi)) continue;
      dist[yi] = dist[xi] + 1;
      queue.push_back(yi);
    }
  }
  return DistanceMap(domain.dims(), std::move(dist));
}

namespace {

std::vector<DistanceMap> per_seed_distances(const GridDomain& domain, const SeedList& seeds,
                                            const Neighborhood& v) {
  std::vector<DistanceMap> out;
  out.reserve(seeds.size());
  for (const Seed& s : seeds) out.push_back(geodesic_distances(domain, PointSet(s.points), v));
  return out;
}

}  // namespace

std::vector<PointSet> influence_zones(const GridDomain& domain, const SeedList& seeds,
                                      const Neighborhood& v) {
  std::vector<DistanceMap> dist = per_seed_distances(domain, seeds, v);
  std::vector<PointSet> zones(seeds.size());
  for (std::size_t idx = 0; idx < domain.box_size(); ++idx) {
    if (!domain.contains_index(idx)) continue;
    std::int32_t best = DistanceMap::kUnreachable;
    std::size_t winner = 0;
    int winners = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
      std::int32_t d = dist[i].at_index(idx);
      if (d == DistanceMap::kUnreachable) continue;
      if (best == DistanceMap::kUnreachable || d < best) {
        best = d;
        winner = i;
        winners = 1;
      } else if (d == best) {
        ++winners;
      }
    }
    if (winners == 1) zones[winner].insert(domain.point_of(idx));
  }
  return zones;
}

PointSet ambiguous_set(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v) {
  std::vector<DistanceMap> dist = per_seed_distances(domain, seeds, v);
  PointSet out;
  for (std::size_t idx = 0; idx < domain.box_size(); ++idx) {
    if (!domain.contains_index(idx)) continue;
    std::int32_t best = DistanceMap::kUnreachable;
    int winners = 0;
    for (const DistanceMap& d : dist) {
      std::int32_t dv = d.at_index(idx);
      if (dv == DistanceMap::kUnreachable) continue;
      if (best == DistanceMap::kUnreachable || dv < best) {
        best = dv;
        winners = 1;
      } else if (dv == best) {
        ++winners;
      }
    }
    if (winners >= 2) out.insert(domain.point_of(idx));
  }
  return out;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kCoverGap: return "cover-gap";
    case Axiom::kCoverExcess: return "cover-excess";
    case Axiom::kOverlap: return "overlap";
    case Axiom::kSeparation: return "separation";
    case Axiom::kBoundaryThick: return "boundary-thick";
  }
  return "?";
}

std::string PartitionReport::to_string() const {
  if (ok()) return "ok\n";
  std::string s;
  for (const Violation& v : violations) {
    s += axiom_name(v.axiom);
    if (!v.detail.empty()) s += " (" + v.detail + ")";
    s += ":";
    constexpr std::size_t kMaxShown = 16;
    for (std::size_t i = 0; i < v.witnesses.size() && i < kMaxShown; ++i)
      s += " " + v.witnesses[i].to_string();
    if (v.witnesses.size() > kMaxShown)
      s += " ... +" + std::to_string(v.witnesses.size() - kMaxShown) + " more";
    s += "\n";
  }
  return s;
}

namespace {

void check_cover(std::span<const PointSet> blocks, const PointSet* boundary,
                 const PointSet& universe, PartitionReport& report) {
  std::vector<Point> gaps;
  for (const Point& p : universe) {
    bool covered = boundary != nullptr && boundary->contains(p);
    for (std::size_t i = 0; !covered && i < blocks.size(); ++i) covered = blocks[i].contains(p);
    if (!covered) gaps.push_back(p);
  }
  if (!gaps.empty())
    report.violations.push_back({Axiom::kCoverGap, "", std::move(gaps)});

  std::vector<Point> excess;
  auto scan = [&](const PointSet& set) {
    for (const Point& p : set)
      if (!universe.contains(p)) excess.push_back(p);
  };
  for (const PointSet& b : blocks) scan(b);
  if (boundary != nullptr) scan(*boundary);
  if (!excess.empty())
    report.violations.push_back({Axiom::kCoverExcess, "", std::move(excess)});
}

}  // namespace

PartitionReport is_simple_partition(std::span<const PointSet> blocks, const PointSet& universe) {
  PartitionReport report;
  check_cover(blocks, nullptr, universe, report);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<Point> shared;
      for (const Point& p : blocks[i])
        if (blocks[j].contains(p)) shared.push_back(p);
      if (!shared.empty())
        report.violations.push_back({Axiom::kOverlap,
                                     "blocks " + std::to_string(i) + " and " + std::to_string(j),
                                     std::move(shared)});
    }
  }
  return report;
}

PartitionReport is_v_boundary_partition(std::span<const PointSet> blocks,
                                        const PointSet& boundary, const Neighborhood& v,
                                        const PointSet& universe) {
  PartitionReport report;
  check_cover(blocks, &boundary, universe, report);
  // (X_i ⊕ V) ∩ X_j = ∅: dilation includes the origin, so overlap counts too.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      std::vector<Point> hits;
      for (const Point& p : blocks[i]) {
        if (blocks[j].contains(p)) hits.push_back(p);
        for (const Point& o : v.offsets()) {
          Point q = p + o;
          if (blocks[j].contains(q)) hits.push_back(q);
        }
      }
      if (!hits.empty()) {
        PointSet unique(std::move(hits));
        report.violations.push_back({Axiom::kSeparation,
                                     "blocks " + std::to_string(i) + " and " + std::to_string(j),
                                     unique.points()});
      }
    }
  }
  PointSet thick = erode(boundary, v);
  if (!thick.empty())
    report.violations.push_back({Axiom::kBoundaryThick, "", thick.points()});
  return report;
}

bool decomposition_check(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v) {
  std::vector<PointSet> zones = influence_zones(domain, seeds, v);
  PointSet amb = ambiguous_set(domain, seeds, v);
  PointSet all_seed_points;
  for (const Seed& s : seeds)
    for (const Point& p : s.points) all_seed_points.insert(p);
  PointSet reach = reachable(domain, all_seed_points, v);

  std::size_t covered = 0;
  for (const PointSet& z : zones) {
    for (const Point& p : z) {
      if (!reach.contains(p) || amb.contains(p)) return false;
      ++covered;
    }
  }
  for (std::size_t i = 0; i < zones.size(); ++i)
    for (std::size_t j = i + 1; j < zones.size(); ++j)
      for (const Point& p : zones[i])
        if (zones[j].contains(p)) return false;
  for (const Point& p : amb) {
    if (!reach.contains(p)) return false;
    ++covered;
  }
  return covered == reach.size();
}

LabelMap canonical_relabel(const GrowResult& result) {
  std::vector<std::string> ids;
  ids.reserve(result.seed_of_label.size());
  for (const auto& [label, id] : result.seed_of_label) ids.push_back(id);
  std::sort(ids.begin(), ids.end());

  std::map<std::int32_t, std::int32_t> remap;
  if (result.boundary_label.has_value()) remap[*result.boundary_label] = 0;
  for (const auto& [label, id] : result.seed_of_label) {
    auto rank = std::lower_bound(ids.begin(), ids.end(), id) - ids.begin();
    remap[label] = static_cast<std::int32_t>(1 + rank);
  }

  std::vector<std::int32_t> values = result.labels.values();
  for (std::int32_t& val : values) {
    if (val == kUnlabeled) continue;
    val = remap.at(val);
  }
  std::vector<TribeKind> policies(1 + ids.size(), TribeKind::kActive);
  policies[0] = TribeKind::kPassive;
  return LabelMap(result.labels.dims(), std::move(values), std::move(policies));
}

}  // namespace srg
