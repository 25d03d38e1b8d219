#include "srg/queue.hpp"

#include <stdexcept>

namespace srg {

SystemQueue::SystemQueue(QueueKey key, Discipline discipline)
    : key_(std::move(key)), discipline_(discipline) {}

PushResult SystemQueue::push(const Point& x, std::int32_t label) {
  std::optional<std::int64_t> k = key_(x, label);
  if (!k.has_value()) return PushResult::kFilteredOut;
  buckets_[*k].push_back(QueueEntry{x, label, next_seq_++});
  ++accepted_;
  return PushResult::kAccepted;
}

void SystemQueue::select_queue(std::int64_t key) { selected_ = key; }

bool SystemQueue::empty() const {
  auto it = buckets_.find(selected_);
  return it == buckets_.end() || it->second.empty();
}

std::pair<Point, std::int32_t> SystemQueue::pop() {
  auto it = buckets_.find(selected_);
  if (it == buckets_.end() || it->second.empty())
    throw std::logic_error("pop on empty bucket " + std::to_string(selected_));
  std::deque<QueueEntry>& bucket = it->second;
  QueueEntry e;
  if (discipline_ == Discipline::kFifo) {
    e = bucket.front();
    bucket.pop_front();
  } else {
    e = bucket.back();
    bucket.pop_back();
  }
  return {e.point, e.label};
}

}  // namespace srg
