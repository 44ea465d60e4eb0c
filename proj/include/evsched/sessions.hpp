#ifndef EVSCHED_SESSIONS_HPP
#define EVSCHED_SESSIONS_HPP

#include <string>
#include <vector>

#include "evsched/time_grid.hpp"

namespace evsched {

// One plug-in event. Ground truth for simulation; the controller sees only
// the arrival (and eventually the departure, when it happens).
struct ChargingSession {
    std::string session_id;
    std::string evse_id;  // optional in input
    Timestamp arrival;
    Timestamp departure;
    double energy_kwh = 0.0;  // total energy the EV actually absorbed

    double stay_minutes() const { return double(minutes_between(arrival, departure)); }
};

struct RejectedRow {
    int line = 0;
    std::string raw;
    std::string reason;
};

struct SessionParseResult {
    std::vector<ChargingSession> sessions;
    std::vector<RejectedRow> rejected;
};

// CSV header: session_id,evse_id,arrival,departure,energy_kwh
// Malformed rows land in the reject report instead of being dropped.
// Throws io_error if unreadable, format_error if more than half of the data
// rows are rejected.
SessionParseResult parse_sessions(const std::string& path);
SessionParseResult parse_sessions_text(const std::string& csv_text);

void write_sessions_csv(const std::vector<ChargingSession>& sessions, const std::string& path);
std::string sessions_to_csv(const std::vector<ChargingSession>& sessions);
void write_reject_report(const std::vector<RejectedRow>& rejected, const std::string& path);

}  // namespace evsched

#endif
