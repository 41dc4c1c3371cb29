#include "edsim/types.hpp"

namespace edsim {

Tag tag_from_name(const std::string& name) {
  for (Tag t : kAllTags) {
    if (name == tag_name(t)) return t;
  }
  throw std::invalid_argument("unknown tag name: " + name);
}

Outcome outcome_from_code(const std::string& code) {
  for (int i = 0; i < kOutcomeCount; ++i) {
    Outcome o = static_cast<Outcome>(i);
    if (code == outcome_code(o)) return o;
  }
  throw std::invalid_argument("unknown outcome code: " + code);
}

namespace {
constexpr const char* kWeekdayNames[] = {"mon", "tue", "wed", "thu", "fri", "sat", "sun"};
}

const char* weekday_name(Weekday d) { return kWeekdayNames[static_cast<int>(d)]; }

Weekday weekday_from_name(const std::string& name) {
  for (int i = 0; i < 7; ++i) {
    if (name == kWeekdayNames[i]) return static_cast<Weekday>(i);
  }
  throw std::invalid_argument("unknown weekday name: " + name);
}

}  // namespace edsim
