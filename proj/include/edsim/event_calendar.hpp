#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace edsim {

enum class EventKind : uint8_t {
  Arrival = 0,
  TriageDone,
  VisitStartAttempt,
  VisitDone,
  ExamsDone,
  ReassessmentDone,
  Abandonment,
  ShiftChange,
  UtilizationSample,
  EndOfWarmup,
  EndOfRun,
};

struct Event {
  double fire_time = 0.0;
  uint64_t seq = 0;  ///< insertion order; breaks fire_time ties FIFO
  EventKind kind = EventKind::Arrival;
  int32_t patient = -1;  ///< payload; -1 when the event has no subject
};

/// Handle for cancelling a scheduled event. Default-constructed handles are
/// inert.
struct EventHandle {
  uint64_t seq = UINT64_MAX;
  bool valid() const { return seq != UINT64_MAX; }
};

/// Future-event calendar ordered by (fire_time, seq).
///
/// Equal-time events pop in insertion order. Cancellation is lazy: cancelled
/// entries are skipped on pop. Scheduling strictly in the past throws.
class EventCalendar {
 public:
  EventHandle schedule(double fire_time, EventKind kind, int32_t patient = -1) {
    if (fire_time < now_) {
      throw std::logic_error("event scheduled in the past");
    }
    Event ev{fire_time, next_seq_++, kind, patient};
    heap_.push(ev);
    cancelled_.push_back(0);
    ++live_;
    return EventHandle{ev.seq};
  }

  /// Cancel a previously scheduled event. Cancelling twice, or cancelling an
  /// already-fired event, is a no-op.
  void cancel(EventHandle h) {
    if (!h.valid() || h.seq >= cancelled_.size()) return;
    if (!cancelled_[h.seq]) {
      cancelled_[h.seq] = 1;
      --live_;
    }
  }

  bool empty() const { return live_ == 0; }
  std::size_t size() const { return live_; }
  double now() const { return now_; }

  /// Pop the next non-cancelled event and advance the clock to it.
  /// Throws when no live events remain.
  Event pop_next() {
    while (!heap_.empty()) {
      Event ev = heap_.top();
      heap_.pop();
      if (cancelled_[ev.seq]) continue;
      cancelled_[ev.seq] = 1;  // fired events cannot be cancelled later
      --live_;
      now_ = ev.fire_time;
      return ev;
    }
    throw std::logic_error("pop_next on empty calendar");
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::vector<uint8_t> cancelled_;  // indexed by seq
  uint64_t next_seq_ = 0;
  std::size_t live_ = 0;
  double now_ = 0.0;
};

}  // namespace edsim
