#include "edsim/staffing.hpp"

#include <stdexcept>
#include <string>

namespace edsim {

namespace {

std::array<int, 24> build_hour_table(const std::vector<ShiftBlock>& blocks, const char* label) {
  std::array<int, 24> table{};
  std::array<bool, 24> covered{};
  for (const ShiftBlock& b : blocks) {
    if (b.start_hour < 0 || b.start_hour > 23 || b.end_hour < 0 || b.end_hour > 24) {
      throw std::invalid_argument(std::string(label) + ": shift hours must lie in [0, 24]");
    }
    if (b.count < 1) {
      throw std::invalid_argument(std::string(label) + ": on-duty count must be >= 1");
    }
    int h = b.start_hour;
    do {
      if (covered[static_cast<std::size_t>(h)]) {
        throw std::invalid_argument(std::string(label) + ": shifts overlap at hour " +
                                    std::to_string(h));
      }
      covered[static_cast<std::size_t>(h)] = true;
      table[static_cast<std::size_t>(h)] = b.count;
      h = (h + 1) % 24;
    } while (h != b.end_hour % 24);
  }
  for (int h = 0; h < 24; ++h) {
    if (!covered[static_cast<std::size_t>(h)]) {
      throw std::invalid_argument(std::string(label) + ": no shift covers hour " +
                                  std::to_string(h));
    }
  }
  return table;
}

}  // namespace

StaffCalendar::StaffCalendar(std::vector<ShiftBlock> physicians_weekday,
                             std::vector<ShiftBlock> physicians_holiday,
                             std::vector<ShiftBlock> nurses_all_days)
    : phys_weekday_(std::move(physicians_weekday)),
      phys_holiday_(std::move(physicians_holiday)),
      nurses_(std::move(nurses_all_days)) {
  phys_weekday_by_hour_ = build_hour_table(phys_weekday_, "physician weekday shifts");
  phys_holiday_by_hour_ = build_hour_table(phys_holiday_, "physician holiday shifts");
  nurses_by_hour_ = build_hour_table(nurses_, "nurse shifts");
}

StaffCounts StaffCalendar::on_duty(double minutes, const DayCalendar& calendar,
                                   const std::optional<PeimafWindow>& peimaf) const {
  int day = day_number_of(minutes);
  int hour = static_cast<int>(hour_of_day(minutes));
  if (hour > 23) hour = 23;
  const auto& phys_table =
      calendar.is_holiday(day) ? phys_holiday_by_hour_ : phys_weekday_by_hour_;
  StaffCounts counts{phys_table[static_cast<std::size_t>(hour)],
                     nurses_by_hour_[static_cast<std::size_t>(hour)]};
  if (peimaf && peimaf->active_at(minutes)) {
    counts.physicians *= peimaf->staff_multiplier;
    counts.nurses *= peimaf->staff_multiplier;
  }
  return counts;
}

}  // namespace edsim
