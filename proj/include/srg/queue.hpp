#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "srg/grid.hpp"

namespace srg {

enum class Discipline { kFifo, kLifo };
enum class PushResult { kAccepted, kFilteredOut };

/// Metric over (point, label) couples. nullopt is the OUT value: such
/// couples are silently dropped at push time.
using QueueKey = std::function<std::optional<std::int64_t>(const Point&, std::int32_t)>;

struct QueueEntry {
  Point point;
  std::int32_t label = 0;
  std::uint64_t seq = 0;  // entering time, strictly increasing across buckets
};

/// Buckets of (point, label) couples keyed by an integer metric, ordered by
/// entering time within a bucket. pop/empty act on the selected bucket.
/// Single-owner mutable state; growth runs drive it single-threaded.
class SystemQueue {
 public:
  SystemQueue(QueueKey key, Discipline discipline);

  PushResult push(const Point& x, std::int32_t label);
  /// Selecting an absent bucket is allowed; it reads as empty.
  void select_queue(std::int64_t key);
  bool empty() const;
  /// FIFO: lowest seq of the selected bucket; LIFO: highest.
  /// Throws std::logic_error if the selected bucket is empty.
  std::pair<Point, std::int32_t> pop();

  std::uint64_t accepted_count() const { return accepted_; }

 private:
  QueueKey key_;
  Discipline discipline_;
  std::map<std::int64_t, std::deque<QueueEntry>> buckets_;
  std::int64_t selected_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t accepted_ = 0;
};

}  // namespace srg
