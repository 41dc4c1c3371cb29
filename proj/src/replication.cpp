#include "edsim/replication.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "edsim/arrivals.hpp"
#include "edsim/event_calendar.hpp"

namespace edsim {

bool yellow_area_open_at(const ReplicationSetup& setup, double at_minutes) {
  double h = hour_of_day(at_minutes);
  bool day_open =
      h >= setup.flow.yellow_night_end_hour && h < setup.flow.yellow_night_start_hour;
  if (day_open) return true;
  return setup.peimaf && setup.peimaf->open_areas_to_red &&
         setup.peimaf->window.active_at(at_minutes);
}

int scheduled_area_capacity(const ReplicationSetup& setup, Area area, double at_minutes) {
  if (area == Area::YellowArea && !yellow_area_open_at(setup, at_minutes)) return 0;
  return setup.area_capacities.of(area);
}

namespace {

/// Per-patient runtime state that never reaches the output record.
struct LiveState {
  EventHandle abandonment;
};

class ReplicationRun {
 public:
  ReplicationRun(const ReplicationSetup& setup, uint64_t seed, uint64_t rep)
      : setup_(setup),
        arrivals_rng_(seed, rep, RngPurpose::Arrivals),
        tags_rng_(seed, rep, RngPurpose::TriageTags),
        visit_rng_(seed, rep, RngPurpose::VisitTimes),
        exam_rng_(seed, rep, RngPurpose::ExamTimes),
        outcome_rng_(seed, rep, RngPurpose::Outcomes),
        transition_rng_(seed, rep, RngPurpose::TagTransitions),
        abandon_rng_(seed, rep, RngPurpose::Abandonment),
        generator_(setup.rate_plan, arrivals_rng_) {
    result_.replication_index = rep;
  }

  ReplicationResult run() {
    const double horizon = setup_.horizon_minutes;
    cal_.schedule(horizon, EventKind::EndOfRun);
    cal_.schedule(setup_.warmup_minutes, EventKind::EndOfWarmup);
    cal_.schedule(0.0, EventKind::ShiftChange);
    if (auto t = generator_.next(); t && *t < horizon) {
      cal_.schedule(*t, EventKind::Arrival);
    }

    while (running_ && !cal_.empty()) {
      Event ev = cal_.pop_next();
      ++result_.events_processed;
      switch (ev.kind) {
        case EventKind::Arrival: on_arrival(); break;
        case EventKind::TriageDone: on_triage_done(ev.patient); break;
        case EventKind::VisitStartAttempt: dispatch(); break;
        case EventKind::VisitDone: on_visit_done(ev.patient); break;
        case EventKind::ExamsDone: on_exams_done(ev.patient); break;
        case EventKind::ReassessmentDone: on_reassessment_done(ev.patient); break;
        case EventKind::Abandonment: on_abandonment(ev.patient); break;
        case EventKind::ShiftChange: on_shift_change(); break;
        case EventKind::UtilizationSample: on_utilization_sample(); break;
        case EventKind::EndOfWarmup: past_warmup_ = true; break;
        case EventKind::EndOfRun: running_ = false; break;
      }
    }

    finalize();
    return std::move(result_);
  }

 private:
  double now() const { return cal_.now(); }

  PatientRecord& rec(int32_t pid) { return result_.patients[static_cast<std::size_t>(pid)]; }

  bool peimaf_active(double t) const {
    return setup_.peimaf && setup_.peimaf->window.active_at(t);
  }

  int scheduled_capacity(Area a, double t) const {
    return scheduled_area_capacity(setup_, a, t);
  }

  bool seat_available(Area a, double t) const {
    return area_busy_[static_cast<std::size_t>(a)] < scheduled_capacity(a, t);
  }

  /// Seat preference order for a tag at an instant. Empty count means the
  /// tag cannot be seated right now.
  int admissible_areas(Tag tag, double t, std::array<Area, 3>& out) const {
    switch (tag) {
      case Tag::Red: {
        int n = 0;
        out[n++] = Area::ShockRoom;
        if (setup_.peimaf && setup_.peimaf->open_areas_to_red && peimaf_active(t)) {
          out[n++] = Area::YellowArea;
          out[n++] = Area::GreenArea;
        }
        return n;
      }
      case Tag::Yellow:
        out[0] = yellow_area_open_for_yellow(t) ? Area::YellowArea : Area::GreenArea;
        return 1;
      case Tag::Green:
      case Tag::White:
        out[0] = Area::GreenArea;
        return 1;
    }
    return 0;
  }

  /// The night rule routes yellows to the green area even when the plan has
  /// reopened the yellow area for red overflow.
  bool yellow_area_open_for_yellow(double t) const {
    double h = hour_of_day(t);
    return h >= setup_.flow.yellow_night_end_hour && h < setup_.flow.yellow_night_start_hour;
  }

  StaffCounts staff_now() const {
    std::optional<PeimafWindow> window;
    if (setup_.peimaf) window = setup_.peimaf->window;
    return setup_.staff.on_duty(now(), setup_.day_calendar, window);
  }

  void post_attempt() { cal_.schedule(now(), EventKind::VisitStartAttempt); }

  // ---- handlers -------------------------------------------------------

  void on_arrival() {
    const double t = now();
    const int32_t pid = static_cast<int32_t>(result_.patients.size());
    result_.patients.emplace_back();
    live_.emplace_back();
    PatientRecord& p = result_.patients.back();
    p.id = pid;
    p.arrival_time = t;
    p.triage_tag = assign_triage_tag(tags_rng_.u01(), setup_.rate_plan.mix_for_day(day_number_of(t)));

    if (p.triage_tag == Tag::Red &&
        tags_rng_.u01() < setup_.flow.red_ambulance_bypass_probability) {
      p.via_ambulance = true;
      p.triage_end_time = t;  // ambulance criticals skip the triage station
      enter_post_triage(pid);
    } else {
      triage_queue_.push_back(pid);
      try_start_triage();
    }

    if (auto next = generator_.next(); next && *next < setup_.horizon_minutes) {
      cal_.schedule(*next, EventKind::Arrival);
    }
  }

  void try_start_triage() {
    if (triage_busy_ || triage_queue_.empty()) return;
    int32_t pid = triage_queue_.front();
    triage_queue_.pop_front();
    triage_busy_ = true;
    double dur = setup_.flow.triage_duration.sample(visit_rng_);
    cal_.schedule(now() + dur, EventKind::TriageDone, pid);
  }

  void on_triage_done(int32_t pid) {
    rec(pid).triage_end_time = now();
    triage_busy_ = false;
    try_start_triage();
    enter_post_triage(pid);
  }

  void enter_post_triage(int32_t pid) {
    PatientRecord& p = rec(pid);
    const Tag tag = p.triage_tag;
    const double u = abandon_rng_.u01();
    const double p_lwbs = setup_.flow.lwbs_probability[static_cast<std::size_t>(tag)];
    const double p_workup = setup_.flow.leaves_workup_probability[static_cast<std::size_t>(tag)];
    if (u < p_lwbs) {
      p.fate = Fate::LeftWithoutBeingSeen;
    } else if (u < p_lwbs + p_workup) {
      p.fate = Fate::LeftDuringWorkup;
    }

    if (peimaf_active(now()) && setup_.peimaf->divert_low_acuity && tag != Tag::Red) {
      p.diverted = true;
      p.departure_time = now();
      return;
    }

    if (p.fate == Fate::LeftWithoutBeingSeen) {
      double patience = setup_.flow.patience.sample(abandon_rng_);
      live_[static_cast<std::size_t>(pid)].abandonment =
          cal_.schedule(now() + patience, EventKind::Abandonment, pid);
      if (!setup_.flow.lwbs_rescue_on_visit) {
        return;  // fate committed: never contends for a visit
      }
    }
    visit_queue_[static_cast<std::size_t>(tag)].push_back(pid);
    post_attempt();
  }

  void on_abandonment(int32_t pid) {
    PatientRecord& p = rec(pid);
    if (p.fate == Fate::LeftWithoutBeingSeen) {
      if (setup_.flow.lwbs_rescue_on_visit) {
        auto& q = visit_queue_[static_cast<std::size_t>(p.triage_tag)];
        auto it = std::find(q.begin(), q.end(), pid);
        if (it == q.end()) {
          throw std::logic_error("abandoning patient missing from the waiting queue");
        }
        q.erase(it);
      }
      p.outcome = Outcome::O7;
    } else {
      p.outcome = Outcome::O6;  // walked out mid-workup
    }
    p.discharge_tag = p.triage_tag;  // abandonments keep the triage tag
    p.departure_time = now();
  }

  /// Visits outrank reassessments for a freed physician regardless of tag:
  /// reassessment is a short wrap-up the physician fits in whenever no visit
  /// can start. Dispatching the other way round lets a surge's reassessment
  /// backlog idle the treatment seats, which never shows in practice.
  void dispatch() {
    for (;;) {
      const StaffCounts duty = staff_now();
      if (phys_busy_ >= duty.physicians) return;

      bool started = false;
      if (nurse_busy_ < duty.nurses) {
        for (int pr = kTagCount - 1; pr >= 0 && !started; --pr) {
          const Tag tag = static_cast<Tag>(pr);
          if (visit_queue_[static_cast<std::size_t>(pr)].empty()) continue;
          std::array<Area, 3> areas{};
          int n = admissible_areas(tag, now(), areas);
          for (int i = 0; i < n; ++i) {
            if (!seat_available(areas[i], now())) continue;
            start_visit(tag, areas[i], duty);
            started = true;
            break;
          }
        }
      }
      if (started) continue;

      for (int pr = kTagCount - 1; pr >= 0 && !started; --pr) {
        if (reassess_queue_[static_cast<std::size_t>(pr)].empty()) continue;
        start_reassessment(static_cast<Tag>(pr));
        started = true;
      }
      if (!started) return;
    }
  }

  void start_visit(Tag tag, Area area, const StaffCounts& duty) {
    auto& q = visit_queue_[static_cast<std::size_t>(tag)];
    int32_t pid = q.front();

    // A waiting patient of strictly higher priority with staff available and
    // an admissible free seat would mean the queue discipline broke.
    for (int pr = kTagCount - 1; pr > priority_of(tag); --pr) {
      if (visit_queue_[static_cast<std::size_t>(pr)].empty()) continue;
      if (nurse_busy_ >= duty.nurses) continue;
      std::array<Area, 3> areas{};
      int n = admissible_areas(static_cast<Tag>(pr), now(), areas);
      for (int i = 0; i < n; ++i) {
        if (seat_available(areas[i], now())) {
          ++result_.priority_violations;
          break;
        }
      }
    }

    q.pop_front();
    PatientRecord& p = rec(pid);
    ++phys_busy_;
    ++nurse_busy_;
    ++area_busy_[static_cast<std::size_t>(area)];
    p.visit_start_time = now();
    p.visit_area = area;
    if (tag == Tag::Red) {
      if (area == Area::GreenArea) ++result_.red_visits_in_green_area;
      if (area == Area::YellowArea) ++result_.red_visits_in_yellow_area;
    }
    if (p.fate == Fate::LeftWithoutBeingSeen) {
      // The visit won the race: revoke the pending abandonment.
      cal_.cancel(live_[static_cast<std::size_t>(pid)].abandonment);
      p.fate = Fate::Normal;
    }
    double dur = setup_.flow.visit_duration[static_cast<std::size_t>(tag)].sample(visit_rng_);
    cal_.schedule(now() + dur, EventKind::VisitDone, pid);
  }

  void start_reassessment(Tag tag) {
    auto& q = reassess_queue_[static_cast<std::size_t>(tag)];
    int32_t pid = q.front();
    q.pop_front();
    ++phys_busy_;
    double dur = setup_.flow.visit_duration[static_cast<std::size_t>(tag)].sample(visit_rng_) *
                 setup_.flow.reassessment_duration_factor;
    cal_.schedule(now() + dur, EventKind::ReassessmentDone, pid);
  }

  void on_visit_done(int32_t pid) {
    PatientRecord& p = rec(pid);
    p.visit_end_time = now();
    --phys_busy_;
    --nurse_busy_;
    --area_busy_[static_cast<std::size_t>(*p.visit_area)];

    const auto ti = static_cast<std::size_t>(p.triage_tag);
    if (p.fate == Fate::LeftDuringWorkup) {
      // Always heads into the workup and walks out partway through it.
      double exams = setup_.flow.exam_duration[ti].sample(exam_rng_);
      double fraction = abandon_rng_.u01();
      cal_.schedule(now() + fraction * exams, EventKind::Abandonment, pid);
    } else if (exam_rng_.u01() < setup_.flow.exam_probability[ti]) {
      double exams = setup_.flow.exam_duration[ti].sample(exam_rng_);
      cal_.schedule(now() + exams, EventKind::ExamsDone, pid);
    } else {
      p.workup_end_time = now();
      discharge(pid);
    }
    post_attempt();
  }

  void on_exams_done(int32_t pid) {
    reassess_queue_[static_cast<std::size_t>(rec(pid).triage_tag)].push_back(pid);
    post_attempt();
  }

  void on_reassessment_done(int32_t pid) {
    --phys_busy_;
    rec(pid).workup_end_time = now();
    discharge(pid);
    post_attempt();
  }

  void discharge(int32_t pid) {
    PatientRecord& p = rec(pid);
    p.departure_time = now();
    const Tag tag = p.triage_tag;
    double death = setup_.transition.death_probability(tag);
    if (death > 0.0 && transition_rng_.u01() < death) {
      p.discharge_tag = tag;
      p.outcome = Outcome::O8;
      return;
    }
    Tag dtag = setup_.transition.sample(tag, transition_rng_.u01());
    p.discharge_tag = dtag;
    p.outcome = setup_.outcomes.sample_completion(dtag, outcome_rng_.u01());
  }

  void on_shift_change() {
    if (now() + 60.0 < setup_.horizon_minutes) {
      cal_.schedule(now() + 60.0, EventKind::ShiftChange);
    }
    post_attempt();
    cal_.schedule(now(), EventKind::UtilizationSample);  // fires after the attempt
  }

  void on_utilization_sample() {
    const double t = now();
    if (t < setup_.warmup_minutes || t >= setup_.horizon_minutes) return;
    int day = day_number_of(t);
    int hour = static_cast<int>(hour_of_day(t) + 0.5);
    for (Area a : kAllAreas) {
      result_.samples.push_back(UtilizationSample{day, hour, a,
                                                  area_busy_[static_cast<std::size_t>(a)],
                                                  scheduled_capacity(a, t)});
    }
  }

  void finalize() {
    for (PatientRecord& p : result_.patients) {
      if (!p.departure_time && !p.diverted) p.censored = true;
      const bool discharged = p.outcome.has_value();
      const int ways = int(discharged) + int(p.diverted) + int(p.censored);
      if (ways != 1) {
        throw std::logic_error("patient accounting broken: arrival must end discharged, "
                               "diverted, or censored (exactly one)");
      }
    }
  }

  // ---- state ----------------------------------------------------------

  const ReplicationSetup& setup_;
  RngStream arrivals_rng_, tags_rng_, visit_rng_, exam_rng_, outcome_rng_, transition_rng_,
      abandon_rng_;
  ArrivalGenerator generator_;
  EventCalendar cal_;
  ReplicationResult result_;
  std::vector<LiveState> live_;

  std::deque<int32_t> triage_queue_;
  bool triage_busy_ = false;
  std::array<std::deque<int32_t>, kTagCount> visit_queue_;
  std::array<std::deque<int32_t>, kTagCount> reassess_queue_;
  int phys_busy_ = 0;
  int nurse_busy_ = 0;
  std::array<int, kAreaCount> area_busy_{};
  bool past_warmup_ = false;
  bool running_ = true;
};

}  // namespace

ReplicationResult run_replication(const ReplicationSetup& setup, uint64_t seed,
                                  uint64_t replication_index) {
  setup.rate_plan.validate();
  ReplicationRun run(setup, seed, replication_index);
  return run.run();
}

}  // namespace edsim
