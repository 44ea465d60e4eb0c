#ifndef EVSCHED_BLOCK_STATS_HPP
#define EVSCHED_BLOCK_STATS_HPP

#include <array>
#include <string>
#include <vector>

#include "evsched/sessions.hpp"

namespace evsched {

inline constexpr int kBlocksPerDay = 12;  // 2-hour arrival windows

// Arrival block of a timestamp: floor(hour / 2), so 09:48 -> block 4.
inline int block_of_minute(int minute_of_day) {
    require(minute_of_day >= 0 && minute_of_day < 24 * 60, "block_of: minute out of range");
    return minute_of_day / 120;
}
inline int block_of(const Timestamp& ts) { return block_of_minute(ts.minute); }

// Aggregate statistics of sessions whose arrival fell in one weekday x
// 2-hour block.
struct ArrivalBlockStats {
    int weekday = 0;  // 0 = Monday .. 6 = Sunday
    int block = 0;    // 0..11
    double mean_arrivals_per_day = 0.0;
    double mean_energy_kwh = 0.0;
    double mean_stay_min = 0.0;
    std::vector<double> stay_samples_min;  // retained for scenario sampling
};

using DayBlockStats = std::array<ArrivalBlockStats, kBlocksPerDay>;

// Per-weekday block statistics for a whole site.
struct ArrivalModel {
    std::array<DayBlockStats, 7> weekdays{};
};

// Means over sessions arriving on the given weekday, per block.
// mean_arrivals_per_day averages over the distinct dates present in the
// input (all sessions, any weekday share the date set denominator only for
// that weekday's dates).
DayBlockStats build_block_stats(const std::vector<ChargingSession>& sessions, int weekday);

ArrivalModel build_arrival_model(const std::vector<ChargingSession>& sessions);

// Bundled default model for a mid-size workplace lot: block means for
// energy and stay follow typical commuter behavior (morning-heavy arrivals,
// long afternoon stays), with weekday arrivals summing to ~65.
ArrivalModel default_arrival_model();

// Scales every block's mean_arrivals_per_day so that the busiest weekday
// sums to target_daily_arrivals.
void scale_arrivals(ArrivalModel& model, double target_daily_arrivals);

// JSON round-trip.
void save_arrival_model(const ArrivalModel& model, const std::string& path);
ArrivalModel load_arrival_model(const std::string& path);

}  // namespace evsched

#endif
