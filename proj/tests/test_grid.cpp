#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "srg/grid.hpp"
#include "srg/rng.hpp"
#include "support.hpp"

using namespace srg;

namespace {

GridDomain line7_full() { return GridDomain::full({7}); }

Neighborhood line_v() { return Neighborhood({Point{-1}, Point{1}}); }

// Brute-force evaluation of (S ∪ S⊕V) ∩ Ω straight from the definition,
// kept independent of dilate()'s incremental path.
PointSet dilate_by_enumeration(const PointSet& s, const Neighborhood& v, const GridDomain& dom) {
  PointSet out;
  for (std::size_t i = 0; i < dom.box_size(); ++i) {
    if (!dom.contains_index(i)) continue;
    Point x = dom.point_of(i);
    bool in = s.contains(x);
    for (const Point& o : v.offsets()) {
      if (in) break;
      Point pre = x;
      for (int a = 0; a < x.dim(); ++a) pre[a] = x[a] - o[a];
      in = s.contains(pre);
    }
    if (in) out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("contains answers the mask and rejects dimension mismatch") {
  GridDomain line = line7_full();
  CHECK(line.contains(Point{3}));
  CHECK_FALSE(line.contains(Point{7}));

  std::vector<std::uint8_t> mask(9, 1);
  mask[4] = 0;  // (1,1)
  GridDomain grid({3, 3}, mask);
  CHECK_FALSE(grid.contains(Point{1, 1}));
  CHECK(grid.contains(Point{1, 0}));

  CHECK_THROWS_AS((void)grid.contains(Point{1}), std::invalid_argument);
}

TEST_CASE("neighbors expands offsets in lexicographic order without filtering") {
  CHECK(neighbors(Point{3}, line_v()) == std::vector<Point>{Point{2}, Point{4}});

  Neighborhood v4 = standard_neighborhood(2, 4);
  CHECK(neighbors(Point{0, 0}, v4) ==
        std::vector<Point>{Point{-1, 0}, Point{0, -1}, Point{0, 1}, Point{1, 0}});

  Neighborhood v8 = standard_neighborhood(2, 8);
  std::vector<Point> around = neighbors(Point{1, 1}, v8);
  CHECK(around.size() == 8);
  for (const Point& p : around) {
    CHECK(std::max(std::abs(p[0] - 1), std::abs(p[1] - 1)) == 1);
  }
  // Enumeration order is part of the contract (trace reproducibility).
  CHECK(around == neighbors(Point{1, 1}, v8));
  CHECK(around.front() == Point{0, 0});
  CHECK(around.back() == Point{2, 2});
}

TEST_CASE("standard neighborhoods") {
  Neighborhood v4 = standard_neighborhood(2, 4);
  CHECK(v4.offsets() ==
        std::vector<Point>{Point{-1, 0}, Point{0, -1}, Point{0, 1}, Point{1, 0}});
  CHECK(standard_neighborhood(2, 8).size() == 8);
  CHECK(standard_neighborhood(3, 6).size() == 6);
  CHECK(standard_neighborhood(3, 26).size() == 26);
  CHECK_THROWS_AS(standard_neighborhood(2, 6), std::invalid_argument);
  CHECK_THROWS_AS(standard_neighborhood(3, 8), std::invalid_argument);
}

TEST_CASE("neighborhood invariants") {
  CHECK_THROWS_AS(Neighborhood({Point{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Neighborhood({Point{1}, Point{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Neighborhood({Point{1}, Point{1, 0}}), std::invalid_argument);
}

TEST_CASE("dilate on line and grid fixtures") {
  GridDomain line = line7_full();
  PointSet s(std::vector<Point>{Point{3}});
  CHECK(dilate(s, line_v(), line) ==
        PointSet(std::vector<Point>{Point{2}, Point{3}, Point{4}}));

  CHECK(dilate(PointSet{}, line_v(), line) == PointSet{});

  GridDomain grid = GridDomain::full({3, 3});
  PointSet corner(std::vector<Point>{Point{0, 0}});
  CHECK(dilate(corner, standard_neighborhood(2, 4), grid) ==
        PointSet(std::vector<Point>{Point{0, 0}, Point{0, 1}, Point{1, 0}}));
}

TEST_CASE("erode on line fixtures") {
  PointSet s(std::vector<Point>{Point{0}, Point{1}, Point{2}});
  CHECK(erode(s, line_v()) == PointSet(std::vector<Point>{Point{1}}));
  CHECK(erode(PointSet{}, line_v()) == PointSet{});
  CHECK(erode(PointSet(std::vector<Point>{Point{5}}), line_v()) == PointSet{});
}

TEST_CASE("reachable flood") {
  GridDomain line = line7_full();
  PointSet from0(std::vector<Point>{Point{0}});
  CHECK(reachable(line, from0, line_v()).size() == 7);

  std::vector<std::uint8_t> mask(7, 1);
  mask[3] = 0;
  GridDomain holed({7}, mask);
  CHECK(reachable(holed, from0, line_v()) ==
        PointSet(std::vector<Point>{Point{0}, Point{1}, Point{2}}));

  CHECK(reachable(line, PointSet{}, line_v()) == PointSet{});
  CHECK_THROWS_AS(reachable(holed, PointSet(std::vector<Point>{Point{3}}), line_v()),
                  std::invalid_argument);
}

TEST_CASE("dilate matches definition enumeration and is extensive/monotone") {
  Xorshift64Star rng(101);
  testing::InstanceParams params;
  params.min_side = 4;
  params.max_side = 12;
  for (int trial = 0; trial < 40; ++trial) {
    testing::Instance inst = testing::random_instance(rng, params);
    Neighborhood v = standard_neighborhood(2, inst.kind);

    std::vector<Point> pts;
    for (std::size_t i = 0; i < inst.domain.box_size(); ++i)
      if (inst.domain.contains_index(i) && rng.below(3) == 0)
        pts.push_back(inst.domain.point_of(i));
    PointSet s(pts);

    PointSet grown = dilate(s, v, inst.domain);
    CHECK(grown == dilate_by_enumeration(s, v, inst.domain));

    // Extensive on Ω members, and monotone under subset.
    for (const Point& p : s)
      if (inst.domain.contains(p)) CHECK(grown.contains(p));
    PointSet smaller;
    for (const Point& p : s)
      if (rng.below(2) == 0) smaller.insert(p);
    for (const Point& p : dilate(smaller, v, inst.domain)) CHECK(grown.contains(p));
  }
}

TEST_CASE("erode after dilate recovers interiors on a full box") {
  Xorshift64Star rng(202);
  GridDomain box = GridDomain::full({16, 16});
  Neighborhood v4 = standard_neighborhood(2, 4);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet s;
    for (Coord r = 3; r < 13; ++r)
      for (Coord c = 3; c < 13; ++c)
        if (rng.below(3) == 0) s.insert(Point{r, c});
    PointSet back = erode(dilate(s, v4, box), v4);
    for (const Point& p : s) CHECK(back.contains(p));
  }
}

TEST_CASE("reachable stays inside the domain and contains the seeds") {
  Xorshift64Star rng(303);
  testing::InstanceParams params;
  params.min_side = 4;
  params.max_side = 16;
  for (int trial = 0; trial < 20; ++trial) {
    testing::Instance inst = testing::random_instance(rng, params);
    Neighborhood v = standard_neighborhood(2, inst.kind);
    PointSet seeds = testing::all_seed_points(inst.seeds);
    PointSet reach = reachable(inst.domain, seeds, v);
    for (const Point& p : seeds) CHECK(reach.contains(p));
    for (const Point& p : reach) CHECK(inst.domain.contains(p));
  }
}
