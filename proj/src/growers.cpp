#include "srg/growers.hpp"

#include <algorithm>
#include <stdexcept>

namespace srg {

namespace {

void validate_seeds(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                    bool forbid_adjacent) {
  PointSet taken;
  std::vector<std::string> ids;
  for (const Seed& seed : seeds) {
    if (seed.points.empty())
      throw std::invalid_argument("seed '" + seed.id + "' has no points");
    ids.push_back(seed.id);
    for (const Point& p : seed.points) {
      if (!domain.contains(p))
        throw std::invalid_argument("seed '" + seed.id + "' point " + p.to_string() +
                                    " is outside the domain");
      if (!taken.insert(p))
        throw std::invalid_argument("seed point " + p.to_string() + " appears twice (seed '" +
                                    seed.id + "')");
    }
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("seed ids must be unique");
  if (!forbid_adjacent) return;
  // The separation axiom must hold at t=0: no point of one seed may be a
  // V-neighbor of another seed's point.
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    PointSet own(seeds[i].points);
    for (const Point& p : seeds[i].points) {
      for (const Point& o : v.offsets()) {
        Point q = p + o;
        if (taken.contains(q) && !own.contains(q))
          throw std::invalid_argument("seeds are V-adjacent at " + p.to_string() + " / " +
                                      q.to_string());
      }
    }
  }
}

GrowResult run(GrowMode mode, const GridDomain& domain, const SeedList& seeds,
               const Neighborhood& v, const GrowOptions& options) {
  if (v.dim() != domain.dim())
    throw std::invalid_argument("neighborhood/domain dimension mismatch");
  validate_seeds(domain, seeds, v, mode == GrowMode::kVBoundary);

  SystemQueue sq(
      [&domain](const Point& x, std::int32_t) -> std::optional<std::int64_t> {
        return domain.contains(x) ? std::optional<std::int64_t>(0) : std::nullopt;
      },
      Discipline::kFifo);
  Population pop(domain, sq);
  pop.set_zi_audit(options.zi_audit);

  GrowStats stats;
  std::uint64_t step = 0;
  auto emit = [&](const Point& x, std::int32_t label, TraceCause cause) {
    if (cause != TraceCause::kSkip) ++step;
    if (options.trace) options.trace(TraceEvent{step, x, label, cause});
  };

  std::optional<std::int32_t> boundary;
  if (mode != GrowMode::kSimple) boundary = pop.growth_tribe(TribePolicy::passive());

  std::map<std::int32_t, std::string> seed_of_label;
  for (const Seed& seed : seeds) {
    std::int32_t label = pop.growth_tribe(TribePolicy::active(v));
    seed_of_label[label] = seed.id;
    for (const Point& p : seed.points) {
      pop.growth(p, label);
      emit(p, label, TraceCause::kSeed);
    }
  }

  sq.select_queue(0);
  while (!sq.empty()) {
    auto [x, i] = sq.pop();
    ++stats.pops;
    std::size_t idx = domain.index_of(x);
    if (pop.label_at(idx) != kUnlabeled) {
      ++stats.skips;
      emit(x, i, TraceCause::kSkip);
      continue;
    }
    bool to_boundary = false;
    if (mode != GrowMode::kSimple) {
      const std::vector<std::int32_t>& zi = pop.zi_at_index(idx);
      if (mode == GrowMode::kVBoundary)
        to_boundary = zi.size() >= 2;
      else
        to_boundary = zi.size() >= 2 && i == zi.front();
    }
    if (to_boundary) {
      pop.growth(x, *boundary);
      ++stats.boundary_growths;
      emit(x, *boundary, TraceCause::kBoundary);
    } else {
      pop.growth(x, i);
      emit(x, i, TraceCause::kRegion);
    }
  }

  GrowResult result{pop.labels(), {}, std::move(seed_of_label), boundary, stats};
  result.seed_order.reserve(seeds.size());
  for (const Seed& seed : seeds) result.seed_order.push_back(seed.id);
  return result;
}

}  // namespace

GrowResult grow_simple(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                       const GrowOptions& options) {
  return run(GrowMode::kSimple, domain, seeds, v, options);
}

GrowResult grow_vboundary(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                          const GrowOptions& options) {
  return run(GrowMode::kVBoundary, domain, seeds, v, options);
}

GrowResult grow_ambiguous(const GridDomain& domain, const SeedList& seeds, const Neighborhood& v,
                          const GrowOptions& options) {
  return run(GrowMode::kAmbiguous, domain, seeds, v, options);
}

GrowResult run_with_order(GrowMode mode, const GridDomain& domain, const SeedList& seeds,
                          const Neighborhood& v, std::span<const std::size_t> order,
                          const GrowOptions& options) {
  if (order.size() != seeds.size())
    throw std::invalid_argument("order length does not match seed count");
  std::vector<std::uint8_t> used(seeds.size(), 0);
  for (std::size_t i : order) {
    if (i >= seeds.size() || used[i])
      throw std::invalid_argument("order is not a permutation of the seed indices");
    used[i] = 1;
  }
  SeedList permuted;
  permuted.reserve(seeds.size());
  for (std::size_t i : order) permuted.push_back(seeds[i]);
  GrowResult result = run(mode, domain, permuted, v, options);
  result.seed_order.clear();
  for (const Seed& seed : seeds) result.seed_order.push_back(seed.id);
  return result;
}

}  // namespace srg
