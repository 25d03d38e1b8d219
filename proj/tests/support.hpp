#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// instances at the scales the engine targets, plus small conversions from
// grow results to point sets.

#include <string>
#include <vector>

#include "srg/grid.hpp"
#include "srg/growers.hpp"
#include "srg/rng.hpp"

namespace srg::testing {

struct Instance {
  GridDomain domain;
  SeedList seeds;
  int kind;  // 4/8 in 2D, 6/26 in 3D
};

struct InstanceParams {
  int dim = 2;
  Coord min_side = 8;
  Coord max_side = 64;
  double min_fill = 0.4;
  double max_fill = 0.8;
  std::size_t min_seeds = 2;
  std::size_t max_seeds = 6;
  std::size_t max_seed_points = 4;
  bool nonadjacent_seeds = false;
};

inline double unit_real(Xorshift64Star& rng) {
  return static_cast<double>(rng.next() >> 11) / 9007199254740992.0;  // 53-bit mantissa
}

inline Instance random_instance(Xorshift64Star& rng, const InstanceParams& params) {
  for (;;) {
    std::vector<Coord> dims;
    for (int i = 0; i < params.dim; ++i)
      dims.push_back(params.min_side +
                     static_cast<Coord>(rng.below(
                         static_cast<std::uint64_t>(params.max_side - params.min_side + 1))));
    const double fill = params.min_fill + (params.max_fill - params.min_fill) * unit_real(rng);
    std::size_t total = 1;
    for (Coord d : dims) total *= static_cast<std::size_t>(d);
    std::vector<std::uint8_t> mask(total);
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < total; ++i) {
      mask[i] = unit_real(rng) < fill;
      if (mask[i]) inside.push_back(i);
    }
    const std::size_t n_seeds =
        params.min_seeds + rng.below(params.max_seeds - params.min_seeds + 1);
    std::size_t want_points = 0;
    std::vector<std::size_t> per_seed;
    for (std::size_t s = 0; s < n_seeds; ++s) {
      per_seed.push_back(1 + rng.below(params.max_seed_points));
      want_points += per_seed.back();
    }
    if (inside.size() < want_points * 4) continue;  // too hollow, draw again

    GridDomain domain(dims, std::move(mask));
    Neighborhood v = standard_neighborhood(params.dim, params.dim == 2 ? 4 : 6);

    // Sample distinct in-domain cells; for the non-adjacent variant, reject
    // cells touching an already placed point of another seed.
    SeedList seeds;
    PointSet taken;
    bool ok = true;
    for (std::size_t s = 0; s < n_seeds && ok; ++s) {
      Seed seed;
      seed.id = "s" + std::to_string(s);
      for (std::size_t k = 0; k < per_seed[s]; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
          Point p = domain.point_of(inside[rng.below(inside.size())]);
          if (taken.contains(p)) continue;
          if (params.nonadjacent_seeds) {
            bool touches_other = false;
            Neighborhood probe = standard_neighborhood(params.dim, params.dim == 2 ? 8 : 26);
            for (const Point& o : probe.offsets()) {
              Point q = p + o;
              if (taken.contains(q) && !PointSet(seed.points).contains(q)) touches_other = true;
            }
            if (touches_other) continue;
          }
          taken.insert(p);
          seed.points.push_back(p);
          placed = true;
        }
        if (!placed) ok = false;
      }
      if (ok) seeds.push_back(std::move(seed));
    }
    if (!ok) continue;
    const int kind = params.dim == 2 ? (rng.below(2) ? 8 : 4) : (rng.below(2) ? 26 : 6);
    return Instance{std::move(domain), std::move(seeds), kind};
  }
}

inline PointSet all_seed_points(const SeedList& seeds) {
  PointSet out;
  for (const Seed& s : seeds)
    for (const Point& p : s.points) out.insert(p);
  return out;
}

/// Per-region point sets of a result, in seed_of_label order, plus the
/// boundary set when the mode has one.
inline std::vector<PointSet> result_blocks(const GrowResult& result, const GridDomain& domain,
                                           PointSet* boundary_out) {
  std::vector<PointSet> blocks;
  for (const auto& [label, id] : result.seed_of_label) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < result.labels.values().size(); ++i)
      if (result.labels.values()[i] == label) pts.push_back(domain.point_of(i));
    blocks.emplace_back(std::move(pts));
  }
  if (boundary_out != nullptr) {
    *boundary_out = PointSet();
    if (result.boundary_label.has_value())
      for (std::size_t i = 0; i < result.labels.values().size(); ++i)
        if (result.labels.values()[i] == *result.boundary_label)
          boundary_out->insert(domain.point_of(i));
  }
  return blocks;
}

}  // namespace srg::testing
