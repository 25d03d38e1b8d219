#include "srg/population.hpp"

#include <algorithm>
#include <stdexcept>

namespace srg {

TribePolicy TribePolicy::active(Neighborhood v) {
  TribePolicy p(TribeKind::kActive);
  p.v_ = std::move(v);
  return p;
}

TribePolicy TribePolicy::passive() { return TribePolicy(TribeKind::kPassive); }

const Neighborhood& TribePolicy::neighborhood() const {
  if (!v_.has_value()) throw std::logic_error("passive tribe has no neighborhood");
  return *v_;
}

LabelMap::LabelMap(std::vector<Coord> dims, std::vector<std::int32_t> values,
                   std::vector<TribeKind> policies)
    : dims_(std::move(dims)), values_(std::move(values)), policies_(std::move(policies)) {
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(dims_[static_cast<std::size_t>(i) + 1]);
}

std::int32_t LabelMap::at(const Point& x) const {
  std::size_t idx = 0;
  for (int i = 0; i < static_cast<int>(dims_.size()); ++i)
    idx += static_cast<std::size_t>(x[i]) * strides_[static_cast<std::size_t>(i)];
  return values_[idx];
}

TribeKind LabelMap::policy(std::int32_t label) const {
  if (label < 0 || label >= label_count())
    throw std::invalid_argument("unknown label " + std::to_string(label));
  return policies_[static_cast<std::size_t>(label)];
}

std::optional<std::int32_t> LabelMap::passive_label() const {
  std::optional<std::int32_t> found;
  for (std::int32_t l = 0; l < label_count(); ++l) {
    if (policies_[static_cast<std::size_t>(l)] == TribeKind::kPassive) {
      if (found.has_value()) return std::nullopt;
      found = l;
    }
  }
  return found;
}

Population::Population(const GridDomain& domain, SystemQueue& sq)
    : domain_(domain),
      sq_(sq),
      labelmap_(domain.box_size(), kUnlabeled),
      zi_cover_(domain.box_size()) {}

std::int32_t Population::growth_tribe(const TribePolicy& policy) {
  std::int32_t label = static_cast<std::int32_t>(regions_.size());
  regions_.push_back(Region{label, policy, {}});
  return label;
}

void Population::growth(const Point& x, std::int32_t label) {
  if (!domain_.contains(x))
    throw std::invalid_argument("growth: point " + x.to_string() + " is outside the domain");
  if (label < 0 || static_cast<std::size_t>(label) >= regions_.size())
    throw std::invalid_argument("growth: unknown region label " + std::to_string(label));
  const std::size_t idx = domain_.index_of(x);
  if (labelmap_[idx] != kUnlabeled)
    throw std::invalid_argument("growth: point " + x.to_string() + " is already labeled " +
                                std::to_string(labelmap_[idx]));

  labelmap_[idx] = label;
  Region& region = regions_[static_cast<std::size_t>(label)];
  region.points.push_back(x);
  zi_cover_[idx].clear();

  if (region.policy.kind() == TribeKind::kActive) {
    for (const Point& o : region.policy.neighborhood().offsets()) {
      Point y = x + o;
      if (!domain_.in_box(y)) continue;
      std::size_t yi = domain_.index_of(y);
      if (!domain_.contains_index(yi) || labelmap_[yi] != kUnlabeled) continue;
      std::vector<std::int32_t>& cover = zi_cover_[yi];
      auto it = std::lower_bound(cover.begin(), cover.end(), label);
      if (it != cover.end() && *it == label) continue;
      cover.insert(it, label);
      sq_.push(y, label);
    }
  }
  if (audit_) audit_zi();
}

std::vector<std::int32_t> Population::zi_at(const Point& x) const {
  if (!domain_.in_box(x)) throw std::invalid_argument("zi_at: point outside the box");
  return zi_cover_[domain_.index_of(x)];
}

LabelMap Population::labels() const {
  std::vector<TribeKind> policies;
  policies.reserve(regions_.size());
  for (const Region& r : regions_) policies.push_back(r.policy.kind());
  return LabelMap(domain_.dims(), labelmap_, std::move(policies));
}

const Region& Population::region(std::int32_t label) const {
  if (label < 0 || static_cast<std::size_t>(label) >= regions_.size())
    throw std::invalid_argument("unknown region label " + std::to_string(label));
  return regions_[static_cast<std::size_t>(label)];
}

void Population::audit_zi() const {
  // Z_j from scratch: dilate X_j, drop labeled points, compare.
  std::vector<std::vector<std::int32_t>> expected(domain_.box_size());
  for (const Region& r : regions_) {
    if (r.policy.kind() != TribeKind::kActive) continue;
    for (const Point& x : r.points) {
      for (const Point& o : r.policy.neighborhood().offsets()) {
        Point y = x + o;
        if (!domain_.in_box(y)) continue;
        std::size_t yi = domain_.index_of(y);
        if (!domain_.contains_index(yi) || labelmap_[yi] != kUnlabeled) continue;
        std::vector<std::int32_t>& cover = expected[yi];
        auto it = std::lower_bound(cover.begin(), cover.end(), r.label);
        if (it == cover.end() || *it != r.label) cover.insert(it, r.label);
      }
    }
  }
  for (std::size_t i = 0; i < zi_cover_.size(); ++i) {
    if (zi_cover_[i] != expected[i])
      throw std::logic_error("ZI cover out of sync at " + domain_.point_of(i).to_string());
  }
}

}  // namespace srg
