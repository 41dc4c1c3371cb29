#pragma once

#include <array>
#include <optional>
#include <vector>

#include "edsim/day_calendar.hpp"
#include "edsim/types.hpp"

namespace edsim {

/// One shift block. Wraps midnight when end_hour <= start_hour
/// (e.g. 21 -> 8 covers [21,24) of one day and [0,8) of the next).
struct ShiftBlock {
  int start_hour = 0;
  int end_hour = 0;
  int count = 0;

  bool operator==(const ShiftBlock&) const = default;
};

struct StaffCounts {
  int physicians = 0;
  int nurses = 0;

  bool operator==(const StaffCounts&) const = default;
};

/// Window during which the mass-casualty plan is active: staffing doubles
/// (or multiplies) from start_hour to midnight of the given day.
struct PeimafWindow {
  int day_number = 0;  ///< 1-based
  int start_hour = 0;
  int staff_multiplier = 2;

  bool active_at(double minutes) const {
    return day_number_of(minutes) == day_number && hour_of_day(minutes) >= start_hour;
  }

  bool operator==(const PeimafWindow&) const = default;
};

/// Shift-based on-duty staff levels. Physicians follow separate weekday and
/// public-holiday tables; nurses follow one table every day.
class StaffCalendar {
 public:
  StaffCalendar(std::vector<ShiftBlock> physicians_weekday,
                std::vector<ShiftBlock> physicians_holiday,
                std::vector<ShiftBlock> nurses_all_days);

  /// Staff on duty at an instant, holiday-aware, with the plan window
  /// multiplier applied when active.
  StaffCounts on_duty(double minutes, const DayCalendar& calendar,
                      const std::optional<PeimafWindow>& peimaf) const;

  const std::vector<ShiftBlock>& physicians_weekday() const { return phys_weekday_; }
  const std::vector<ShiftBlock>& physicians_holiday() const { return phys_holiday_; }
  const std::vector<ShiftBlock>& nurses() const { return nurses_; }

  bool operator==(const StaffCalendar&) const = default;

 private:
  std::vector<ShiftBlock> phys_weekday_;
  std::vector<ShiftBlock> phys_holiday_;
  std::vector<ShiftBlock> nurses_;
  // Hour-resolved tables precomputed from the shift blocks.
  std::array<int, 24> phys_weekday_by_hour_{};
  std::array<int, 24> phys_holiday_by_hour_{};
  std::array<int, 24> nurses_by_hour_{};
};

}  // namespace edsim
