#ifndef NHSIM_EVENT_QUEUE_HPP
#define NHSIM_EVENT_QUEUE_HPP

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "nhsim/errors.hpp"
#include "nhsim/time.hpp"

namespace nhsim {

// Deterministic discrete-event queue. Events dispatch in nondecreasing time
// order; ties break by insertion sequence number, so identical schedules give
// identical dispatch orders regardless of heap internals.
template <class Payload>
class EventQueue {
 public:
  struct Event {
    SimTime at;
    std::uint64_t seqno = 0;
    Payload payload;
  };

  SimTime now() const { return now_; }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  std::uint64_t scheduled_total() const { return next_seqno_; }

  void schedule(SimTime at, Payload payload) {
    if (at < now_) {
      throw Error(Errc::precondition, "event scheduled in the past");
    }
    heap_.push(Event{at, next_seqno_++, std::move(payload)});
  }

  // Dispatches every event with timestamp <= t_end (including events the
  // handlers schedule along the way), then advances the clock to t_end.
  // Returns the number of events dispatched.
  template <class Fn>
  std::size_t run_until(SimTime t_end, Fn&& handler) {
    if (t_end < now_) {
      throw Error(Errc::precondition, "run_until target is in the past");
    }
    std::size_t dispatched = 0;
    while (!heap_.empty() && heap_.top().at <= t_end) {
      Event ev = heap_.top();
      heap_.pop();
      now_ = ev.at;
      ++dispatched;
      handler(ev);
    }
    now_ = t_end;
    return dispatched;
  }

  // Dispatches until the queue is fully empty. Only terminates if handlers
  // eventually stop scheduling; callers use it to drain in-flight work after
  // the sources have shut down.
  template <class Fn>
  std::size_t drain(Fn&& handler) {
    std::size_t dispatched = 0;
    while (!heap_.empty()) {
      Event ev = heap_.top();
      heap_.pop();
      now_ = ev.at;
      ++dispatched;
      handler(ev);
    }
    return dispatched;
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return b.at < a.at;
      return b.seqno < a.seqno;
    }
  };

  SimTime now_ = SimTime::zero();
  std::uint64_t next_seqno_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
};

}  // namespace nhsim

#endif  // NHSIM_EVENT_QUEUE_HPP
