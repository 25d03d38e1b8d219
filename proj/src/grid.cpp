#include "srg/grid.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace srg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Point::Point(std::initializer_list<Coord> coords) {
  require(coords.size() >= 1 && coords.size() <= static_cast<std::size_t>(kMaxDim),
          "point dimension must be 1.." + std::to_string(kMaxDim));
  n_ = static_cast<std::uint8_t>(coords.size());
  std::size_t i = 0;
  for (Coord c : coords) c_[i++] = c;
}

Point Point::of(std::span<const Coord> coords) {
  require(coords.size() >= 1 && coords.size() <= static_cast<std::size_t>(kMaxDim),
          "point dimension must be 1.." + std::to_string(kMaxDim));
  Point p;
  p.n_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) p.c_[i] = coords[i];
  return p;
}

std::string Point::to_string() const {
  std::string s = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

Point operator+(const Point& a, const Point& b) {
  assert(a.dim() == b.dim());
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
  return r;
}

Neighborhood::Neighborhood(std::vector<Point> offsets) : offsets_(std::move(offsets)) {
  require(!offsets_.empty(), "neighborhood must not be empty");
  const int d = offsets_.front().dim();
  Point zero = offsets_.front();
  for (int i = 0; i < d; ++i) zero[i] = 0;
  for (const Point& v : offsets_) {
    require(v.dim() == d, "neighborhood offsets must share one dimension");
    require(!(v == zero), "neighborhood offset must not be the zero vector");
  }
  std::sort(offsets_.begin(), offsets_.end());
  require(std::adjacent_find(offsets_.begin(), offsets_.end()) == offsets_.end(),
          "neighborhood offsets must be pairwise distinct");
}

int Neighborhood::dim() const { return offsets_.front().dim(); }

Neighborhood standard_neighborhood(int dimension, int kind) {
  const bool ok = (dimension == 2 && (kind == 4 || kind == 8)) ||
                  (dimension == 3 && (kind == 6 || kind == 26));
  require(ok, "no standard " + std::to_string(kind) + "-neighborhood in " +
                  std::to_string(dimension) + "D");
  std::vector<Point> off;
  if (dimension == 2) {
    for (Coord a = -1; a <= 1; ++a)
      for (Coord b = -1; b <= 1; ++b) {
        if (a == 0 && b == 0) continue;
        if (kind == 4 && a != 0 && b != 0) continue;
        off.push_back(Point{a, b});
      }
  } else {
    for (Coord a = -1; a <= 1; ++a)
      for (Coord b = -1; b <= 1; ++b)
        for (Coord c = -1; c <= 1; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          if (kind == 6 && (a != 0) + (b != 0) + (c != 0) != 1) continue;
          off.push_back(Point{a, b, c});
        }
  }
  return Neighborhood(std::move(off));
}

GridDomain::GridDomain(std::vector<Coord> dims, std::vector<std::uint8_t> mask)
    : dims_(std::move(dims)), mask_(std::move(mask)) {
  require(!dims_.empty() && dims_.size() <= static_cast<std::size_t>(kMaxDim),
          "domain dimension must be 1.." + std::to_string(kMaxDim));
  std::size_t total = 1;
  for (Coord d : dims_) {
    require(d > 0, "domain extents must be positive");
    total *= static_cast<std::size_t>(d);
  }
  require(mask_.size() == total, "mask size does not match box size");
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(dims_[static_cast<std::size_t>(i) + 1]);
  for (std::uint8_t m : mask_) inside_count_ += (m != 0);
}

GridDomain GridDomain::full(std::vector<Coord> dims) {
  std::size_t total = 1;
  for (Coord d : dims) {
    require(d > 0, "domain extents must be positive");
    total *= static_cast<std::size_t>(d);
  }
  return GridDomain(std::move(dims), std::vector<std::uint8_t>(total, 1));
}

bool GridDomain::in_box(const Point& x) const {
  assert(x.dim() == dim());
  for (int i = 0; i < dim(); ++i)
    if (x[i] < 0 || x[i] >= dims_[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool GridDomain::contains(const Point& x) const {
  require(x.dim() == dim(), "point dimension " + std::to_string(x.dim()) +
                                " does not match domain dimension " + std::to_string(dim()));
  return in_box(x) && mask_[index_of(x)] != 0;
}

std::size_t GridDomain::index_of(const Point& x) const {
  assert(in_box(x));
  std::size_t idx = 0;
  for (int i = 0; i < dim(); ++i)
    idx += static_cast<std::size_t>(x[i]) * strides_[static_cast<std::size_t>(i)];
  return idx;
}

Point GridDomain::point_of(std::size_t idx) const {
  assert(idx < mask_.size());
  std::vector<Coord> c(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    c[i] = static_cast<Coord>(idx / strides_[i]);
    idx %= strides_[i];
  }
  return Point::of(c);
}

PointSet::PointSet(std::vector<Point> points) : pts_(std::move(points)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::insert(const Point& p) {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
  if (it != pts_.end() && *it == p) return false;
  pts_.insert(it, p);
  return true;
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::vector<Point> neighbors(const Point& x, const Neighborhood& v) {
  require(x.dim() == v.dim(), "point/neighborhood dimension mismatch");
  std::vector<Point> out;
  out.reserve(v.size());
  for (const Point& o : v.offsets()) out.push_back(x + o);
  return out;
}

PointSet dilate(const PointSet& s, const Neighborhood& v, const GridDomain& within) {
  require(v.dim() == within.dim(), "neighborhood/domain dimension mismatch");
  PointSet out;
  for (const Point& p : s) {
    if (within.contains(p)) out.insert(p);
    for (const Point& o : v.offsets()) {
      Point q = p + o;
      if (within.contains(q)) out.insert(q);
    }
  }
  return out;
}

PointSet erode(const PointSet& s, const Neighborhood& v) {
  PointSet out;
  for (const Point& p : s) {
    bool all = true;
    for (const Point& o : v.offsets()) {
      if (!s.contains(p + o)) {
        all = false;
        break;
      }
    }
    if (all) out.insert(p);
  }
  return out;
}

PointSet reachable(const GridDomain& domain, const PointSet& seeds, const Neighborhood& v) {
  require(v.dim() == domain.dim(), "neighborhood/domain dimension mismatch");
  std::vector<std::uint8_t> seen(domain.box_size(), 0);
  std::deque<Point> queue;
  for (const Point& s : seeds) {
    if (!domain.contains(s))
      throw std::invalid_argument("reachable: seed " + s.to_string() + " lies outside the domain");
    std::size_t idx = domain.index_of(s);
    if (!seen[idx]) {
      seen[idx] = 1;
      queue.push_back(s);
    }
  }
  PointSet out;
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    out.insert(x);
    for (const Point& o : v.offsets()) {
      Point y = x + o;
      if (!domain.in_box(y)) continue;
      std::size_t idx = domain.index_of(y);
      if (!seen[idx] && domain.contains_index(idx)) {
        seen[idx] = 1;
        queue.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace srg
