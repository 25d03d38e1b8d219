#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srg/grid.hpp"
#include "srg/queue.hpp"

namespace srg {

inline constexpr std::int32_t kUnlabeled = -1;

enum class TribeKind { kActive, kPassive };

/// Growth policy of a region. Active tribes expand through a neighborhood
/// and their zone of influence is the outer border excluding all regions;
/// passive tribes (the boundary region) keep an empty zone forever.
class TribePolicy {
 public:
  static TribePolicy active(Neighborhood v);
  static TribePolicy passive();

  TribeKind kind() const { return kind_; }
  const Neighborhood& neighborhood() const;

 private:
  explicit TribePolicy(TribeKind k) : kind_(k) {}
  TribeKind kind_;
  std::optional<Neighborhood> v_;
};

/// Immutable snapshot of a finished (or in-progress) label assignment plus
/// the label -> policy table, so the boundary is identifiable as the unique
/// passive label when present.
class LabelMap {
 public:
  LabelMap(std::vector<Coord> dims, std::vector<std::int32_t> values,
           std::vector<TribeKind> policies);

  const std::vector<Coord>& dims() const { return dims_; }
  const std::vector<std::int32_t>& values() const { return values_; }
  std::int32_t at_index(std::size_t idx) const { return values_[idx]; }
  std::int32_t at(const Point& x) const;

  std::int32_t label_count() const { return static_cast<std::int32_t>(policies_.size()); }
  TribeKind policy(std::int32_t label) const;
  /// The unique passive label, or nullopt when there is none (or several).
  std::optional<std::int32_t> passive_label() const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  std::vector<Coord> dims_;
  std::vector<std::size_t> strides_;
  std::vector<std::int32_t> values_;
  std::vector<TribeKind> policies_;
};

struct Region {
  std::int32_t label;
  TribePolicy policy;
  std::vector<Point> points;  // X_i in growth order
};

/// Owns all regions and their zones of influence. The per-point ZI cover is
/// maintained incrementally: growing point x into active region i adds i to
/// the cover of every unlabeled in-domain neighbor of x not yet covered by i
/// and pushes that couple into the system queue. An audit mode recomputes
/// every cover from the set formula after each growth and throws on any
/// difference.
class Population {
 public:
  Population(const GridDomain& domain, SystemQueue& sq);

  /// Creates an empty region with the next dense label (0,1,2,...).
  std::int32_t growth_tribe(const TribePolicy& policy);

  /// Labels x with region `label`; errors if x is outside the domain,
  /// already labeled, or the label is unknown. Callers must skip stale
  /// queue entries themselves.
  void growth(const Point& x, std::int32_t label);

  /// Current ZI cover of x (sorted ascending; empty for labeled points).
  std::vector<std::int32_t> zi_at(const Point& x) const;
  const std::vector<std::int32_t>& zi_at_index(std::size_t idx) const { return zi_cover_[idx]; }

  LabelMap labels() const;

  std::size_t region_count() const { return regions_.size(); }
  const Region& region(std::int32_t label) const;
  std::int32_t label_at(std::size_t idx) const { return labelmap_[idx]; }

  void set_zi_audit(bool on) { audit_ = on; }
  /// Recomputes Z_j = (X_j ⊕ V) \ ∪X_k for every active region and compares
  /// with the incremental cover; throws std::logic_error on mismatch.
  void audit_zi() const;

 private:
  const GridDomain& domain_;
  SystemQueue& sq_;
  std::vector<std::int32_t> labelmap_;
  std::vector<std::vector<std::int32_t>> zi_cover_;
  std::vector<Region> regions_;
  bool audit_ = false;
};

}  // namespace srg
