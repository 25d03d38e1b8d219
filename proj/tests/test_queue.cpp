#include <doctest.h>

#include <deque>
#include <stdexcept>
#include <vector>

#include "srg/queue.hpp"
#include "srg/rng.hpp"

using namespace srg;

namespace {

// δ = 0 on Ω, OUT elsewhere — the metric every grower instantiates.
QueueKey omega_key(const GridDomain& dom) {
  return [&dom](const Point& x, std::int32_t) -> std::optional<std::int64_t> {
    return dom.contains(x) ? std::optional<std::int64_t>(0) : std::nullopt;
  };
}

}  // namespace

TEST_CASE("push filters couples through the metric") {
  std::vector<std::uint8_t> mask{1, 1, 0, 1};
  GridDomain dom({4}, mask);
  SystemQueue sq(omega_key(dom), Discipline::kFifo);
  sq.select_queue(0);

  CHECK(sq.push(Point{1}, 0) == PushResult::kAccepted);
  CHECK_FALSE(sq.empty());

  CHECK(sq.push(Point{2}, 0) == PushResult::kFilteredOut);
  CHECK(sq.accepted_count() == 1);

  // No dedup at this level: the same couple may sit in a bucket twice.
  CHECK(sq.push(Point{1}, 0) == PushResult::kAccepted);
  CHECK(sq.pop() == std::pair{Point{1}, 0});
  CHECK(sq.pop() == std::pair{Point{1}, 0});
  CHECK(sq.empty());
}

TEST_CASE("select_queue targets a bucket; absent buckets read empty") {
  GridDomain dom = GridDomain::full({4});
  SystemQueue sq(omega_key(dom), Discipline::kFifo);
  sq.push(Point{1}, 3);
  sq.select_queue(0);
  CHECK(sq.pop() == std::pair{Point{1}, 3});

  sq.select_queue(5);
  CHECK(sq.empty());
  sq.select_queue(0);
  sq.select_queue(0);
  CHECK(sq.empty());
}

TEST_CASE("pop follows the discipline and rejects empty buckets") {
  GridDomain dom = GridDomain::full({4});

  SystemQueue fifo(omega_key(dom), Discipline::kFifo);
  fifo.push(Point{0}, 0);
  fifo.push(Point{1}, 1);
  fifo.select_queue(0);
  CHECK(fifo.pop() == std::pair{Point{0}, 0});

  SystemQueue lifo(omega_key(dom), Discipline::kLifo);
  lifo.push(Point{0}, 0);
  lifo.push(Point{1}, 1);
  lifo.select_queue(0);
  CHECK(lifo.pop() == std::pair{Point{1}, 1});

  SystemQueue fresh(omega_key(dom), Discipline::kFifo);
  fresh.select_queue(0);
  CHECK(fresh.empty());
  CHECK_THROWS_AS(fresh.pop(), std::logic_error);

  // A full bucket elsewhere does not rescue an empty selected bucket.
  SystemQueue aside(omega_key(dom), Discipline::kFifo);
  aside.push(Point{1}, 0);
  aside.select_queue(3);
  CHECK(aside.empty());
  CHECK_THROWS_AS(aside.pop(), std::logic_error);
}

TEST_CASE("empty tracks the selected bucket across pushes and pops") {
  GridDomain dom = GridDomain::full({4});
  SystemQueue sq(omega_key(dom), Discipline::kFifo);
  sq.select_queue(0);
  CHECK(sq.empty());
  sq.push(Point{2}, 0);
  CHECK_FALSE(sq.empty());
  (void)sq.pop();
  CHECK(sq.empty());
}

TEST_CASE("FIFO pop sequence equals the accepted push sequence") {
  // Random interleavings of pushes (some filtered) and pops; per bucket the
  // accepted pushes must replay exactly, and conservation must hold.
  Xorshift64Star rng(404);
  std::vector<std::uint8_t> mask(16, 1);
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = rng.below(4) != 0;
  GridDomain dom({16}, mask);

  for (int trial = 0; trial < 50; ++trial) {
    SystemQueue sq(omega_key(dom), Discipline::kFifo);
    sq.select_queue(0);
    std::deque<std::pair<Point, std::int32_t>> model;
    std::uint64_t accepted = 0, popped = 0;
    for (int step = 0; step < 200; ++step) {
      if (rng.below(2) == 0) {
        Point x{static_cast<Coord>(rng.below(16))};
        std::int32_t label = static_cast<std::int32_t>(rng.below(4));
        PushResult r = sq.push(x, label);
        CHECK(r == (dom.contains(x) ? PushResult::kAccepted : PushResult::kFilteredOut));
        if (r == PushResult::kAccepted) {
          model.emplace_back(x, label);
          ++accepted;
        }
      } else if (!model.empty()) {
        CHECK_FALSE(sq.empty());
        CHECK(sq.pop() == model.front());
        model.pop_front();
        ++popped;
      } else {
        CHECK(sq.empty());
      }
    }
    CHECK(accepted == popped + model.size());
    CHECK(sq.accepted_count() == accepted);
  }
}
