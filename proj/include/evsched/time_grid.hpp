#ifndef EVSCHED_TIME_GRID_HPP
#define EVSCHED_TIME_GRID_HPP

#include <chrono>
#include <optional>
#include <string>

#include "evsched/errors.hpp"

namespace evsched {

// One day is divided into 96 slots of 15 minutes each.
inline constexpr int kSlotsPerDay = 96;
inline constexpr int kSlotMinutes = 15;
inline constexpr double kSlotHours = 0.25;

// Level 2 EVSE rating used throughout.
inline constexpr double kEvseMaxKw = 6.6;
inline constexpr double kEvseMaxSlotKwh = kEvseMaxKw * kSlotHours;  // 1.65

inline double kw_to_slot_kwh(double kw) { return kw * kSlotHours; }
inline double slot_kwh_to_kw(double kwh) { return kwh / kSlotHours; }

inline int slot_of_minute(int minute_of_day) {
    require(minute_of_day >= 0 && minute_of_day < 24 * 60, "minute_of_day out of range");
    return minute_of_day / kSlotMinutes;
}

// Minute-resolution local timestamp: a civil date plus minute of day.
struct Timestamp {
    std::chrono::sys_days day{};
    int minute = 0;  // 0..1439

    int slot() const { return slot_of_minute(minute); }
    // 0 = Monday .. 6 = Sunday.
    int weekday() const {
        std::chrono::weekday wd{day};
        return static_cast<int>(wd.iso_encoding()) - 1;
    }
    long long total_minutes() const {
        return static_cast<long long>(day.time_since_epoch().count()) * 24 * 60 + minute;
    }
    friend bool operator<(const Timestamp& a, const Timestamp& b) {
        return a.total_minutes() < b.total_minutes();
    }
    friend bool operator==(const Timestamp& a, const Timestamp& b) {
        return a.day == b.day && a.minute == b.minute;
    }
};

inline long long minutes_between(const Timestamp& from, const Timestamp& to) {
    return to.total_minutes() - from.total_minutes();
}

// Accepts "YYYY-MM-DD HH:MM[:SS]" or "YYYY-MM-DDTHH:MM[:SS]". Seconds are
// truncated to the minute.
std::optional<Timestamp> parse_timestamp(const std::string& text);

std::string format_timestamp(const Timestamp& ts);

// "YYYY-MM-DD".
std::optional<std::chrono::sys_days> parse_date(const std::string& text);
std::string format_date(std::chrono::sys_days day);

inline bool is_weekend(std::chrono::sys_days day) {
    std::chrono::weekday wd{day};
    return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

// 0 = Monday .. 6 = Sunday.
inline int weekday_index(std::chrono::sys_days day) {
    return static_cast<int>(std::chrono::weekday{day}.iso_encoding()) - 1;
}

}  // namespace evsched

#endif
