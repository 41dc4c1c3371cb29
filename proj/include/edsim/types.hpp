#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace edsim {

/// Triage colour tags, ordered from least to most urgent.
enum class Tag : uint8_t { White = 0, Green = 1, Yellow = 2, Red = 3 };

inline constexpr std::array<Tag, 4> kAllTags{Tag::White, Tag::Green, Tag::Yellow, Tag::Red};
inline constexpr int kTagCount = 4;

/// Higher value wins the queue. Red > Yellow > Green > White.
inline constexpr int priority_of(Tag t) { return static_cast<int>(t); }

inline constexpr const char* tag_name(Tag t) {
  switch (t) {
    case Tag::White: return "white";
    case Tag::Green: return "green";
    case Tag::Yellow: return "yellow";
    case Tag::Red: return "red";
  }
  return "?";
}

Tag tag_from_name(const std::string& name);

/// Departure outcome codes used on the discharge record.
enum class Outcome : uint8_t {
  O1 = 0,  ///< discharged home
  O2 = 1,  ///< discharged with referral to an outpatient clinic
  O3 = 2,  ///< admitted to a ward
  O4 = 3,  ///< transferred to another hospital
  O5 = 4,  ///< refused admission against medical advice
  O6 = 5,  ///< left during the additional-exams workup
  O7 = 6,  ///< left without being seen
  O8 = 7,  ///< died in the department
  O9 = 8,  ///< dead on arrival
};

inline constexpr int kOutcomeCount = 9;

inline constexpr const char* outcome_code(Outcome o) {
  constexpr const char* codes[] = {"O1", "O2", "O3", "O4", "O5", "O6", "O7", "O8", "O9"};
  return codes[static_cast<int>(o)];
}

Outcome outcome_from_code(const std::string& code);

/// How a patient's stay ends relative to the normal visit path.
enum class Fate : uint8_t {
  Normal = 0,            ///< completes the full path
  LeftWithoutBeingSeen,  ///< abandons the waiting room before the visit (O7)
  LeftDuringWorkup,      ///< abandons during the additional exams (O6)
};

inline constexpr const char* fate_name(Fate f) {
  switch (f) {
    case Fate::Normal: return "normal";
    case Fate::LeftWithoutBeingSeen: return "lwbs";
    case Fate::LeftDuringWorkup: return "left_during_workup";
  }
  return "?";
}

/// Treatment areas a visit can occupy. Triage has its own station.
enum class Area : uint8_t { GreenArea = 0, YellowArea = 1, ShockRoom = 2 };

inline constexpr std::array<Area, 3> kAllAreas{Area::GreenArea, Area::YellowArea, Area::ShockRoom};
inline constexpr int kAreaCount = 3;

inline constexpr const char* area_name(Area a) {
  switch (a) {
    case Area::GreenArea: return "green_area";
    case Area::YellowArea: return "yellow_area";
    case Area::ShockRoom: return "shock_room";
  }
  return "?";
}

/// Minutes per day; the simulation clock runs in continuous minutes from
/// replication start.
inline constexpr double kMinutesPerDay = 1440.0;

inline constexpr int day_index_of(double minutes) {
  return static_cast<int>(minutes / kMinutesPerDay);
}

/// Hour of day in [0, 24).
inline constexpr double hour_of_day(double minutes) {
  double in_day = minutes - static_cast<double>(day_index_of(minutes)) * kMinutesPerDay;
  return in_day / 60.0;
}

/// Days of week, used by the staffing calendar.
enum class Weekday : uint8_t { Mon = 0, Tue, Wed, Thu, Fri, Sat, Sun };

Weekday weekday_from_name(const std::string& name);
const char* weekday_name(Weekday d);

}  // namespace edsim
