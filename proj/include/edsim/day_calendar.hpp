#pragma once

#include <set>

#include "edsim/types.hpp"

namespace edsim {

/// Maps replication days to weekdays and public holidays.
///
/// Day numbers are 1-based from replication start (Day 1 holds the warm-up).
/// By default every Sunday is a public holiday; extra holidays can be added
/// by day number.
struct DayCalendar {
  Weekday start_weekday = Weekday::Mon;
  bool sundays_are_holidays = true;
  std::set<int> extra_holiday_days;  ///< 1-based day numbers

  Weekday weekday_of_day(int day_number) const {
    int w = (static_cast<int>(start_weekday) + day_number - 1) % 7;
    return static_cast<Weekday>(w);
  }

  bool is_holiday(int day_number) const {
    if (sundays_are_holidays && weekday_of_day(day_number) == Weekday::Sun) return true;
    return extra_holiday_days.count(day_number) > 0;
  }

  bool operator==(const DayCalendar&) const = default;
};

/// 1-based day number containing a clock instant.
inline int day_number_of(double minutes) { return day_index_of(minutes) + 1; }

}  // namespace edsim
