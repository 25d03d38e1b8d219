#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace srg {

using Coord = std::int32_t;

// Points above 4 axes would need heap storage; the engine targets 1D..4D
// lattices (2D and 3D are the supported file formats).
inline constexpr int kMaxDim = 4;

/// A lattice point or offset vector with runtime dimension.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<Coord> coords);
  static Point of(std::span<const Coord> coords);

  int dim() const { return n_; }
  Coord operator[](int axis) const { return c_[static_cast<std::size_t>(axis)]; }
  Coord& operator[](int axis) { return c_[static_cast<std::size_t>(axis)]; }

  // Lexicographic; points of lower dimension order first. Unused slots are
  // zero so same-dimension comparison is plain lexicographic order.
  friend auto operator<=>(const Point&, const Point&) = default;

  std::string to_string() const;

 private:
  std::uint8_t n_ = 0;
  std::array<Coord, kMaxDim> c_{};
};

Point operator+(const Point& a, const Point& b);

/// Finite set of nonzero, pairwise distinct offsets (the structuring
/// element V). Offsets are kept sorted lexicographically; every neighbor
/// enumeration in the engine follows that order, which is what makes runs
/// byte-reproducible.
class Neighborhood {
 public:
  explicit Neighborhood(std::vector<Point> offsets);

  int dim() const;
  std::size_t size() const { return offsets_.size(); }
  const std::vector<Point>& offsets() const { return offsets_; }

 private:
  std::vector<Point> offsets_;  // sorted, unique, no zero vector
};

/// The named lattice neighborhoods: 4/8 in 2D, 6/26 in 3D.
Neighborhood standard_neighborhood(int dimension, int kind);

/// Dense boolean mask over the box [0,dims); realizes the domain
/// {x : mask(x) != 0}. Flat storage is row-major with the last axis fastest.
/// Immutable after construction.
class GridDomain {
 public:
  GridDomain(std::vector<Coord> dims, std::vector<std::uint8_t> mask);
  static GridDomain full(std::vector<Coord> dims);

  int dim() const { return static_cast<int>(dims_.size()); }
  const std::vector<Coord>& dims() const { return dims_; }
  std::size_t box_size() const { return mask_.size(); }
  std::size_t domain_size() const { return inside_count_; }

  bool in_box(const Point& x) const;
  /// True iff x lies in the box and the mask holds there. Throws
  /// std::invalid_argument on dimension mismatch.
  bool contains(const Point& x) const;
  bool contains_index(std::size_t idx) const { return mask_[idx] != 0; }

  std::size_t index_of(const Point& x) const;  // pre: in_box(x)
  Point point_of(std::size_t idx) const;

 private:
  std::vector<Coord> dims_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> mask_;
  std::size_t inside_count_ = 0;
};

/// Sorted duplicate-free set of points. Value type; iteration order is the
/// lexicographic point order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  bool insert(const Point& p);  // true if p was new
  bool contains(const Point& p) const;
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }

  std::vector<Point>::const_iterator begin() const { return pts_.begin(); }
  std::vector<Point>::const_iterator end() const { return pts_.end(); }
  const std::vector<Point>& points() const { return pts_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

/// x+v for every v in V, in V's enumeration order; no domain filtering.
std::vector<Point> neighbors(const Point& x, const Neighborhood& v);

/// (S ∪ S⊕V) ∩ Ω. The origin is included by convention: V itself excludes
/// the zero offset, so dilation re-adds S.
PointSet dilate(const PointSet& s, const Neighborhood& v, const GridDomain& within);

/// {x ∈ S : x+v ∈ S for every v in V}. Translates falling outside S (or the
/// box) count as missing, which keeps erosion checkable without infinite E.
PointSet erode(const PointSet& s, const Neighborhood& v);

/// Points of the domain connected to a seed by a V-path inside the domain.
/// Throws if a seed lies outside the domain.
PointSet reachable(const GridDomain& domain, const PointSet& seeds, const Neighborhood& v);

}  // namespace srg
