#include "evsched/sessions.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace evsched {

static std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

SessionParseResult parse_sessions_text(const std::string& csv_text) {
    SessionParseResult result;
    std::stringstream in(csv_text);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    int data_rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            saw_header = true;  // header row, not validated beyond presence
            continue;
        }
        ++data_rows;
        auto reject = [&](const std::string& why) {
            result.rejected.push_back({line_no, line, why});
        };
        auto fields = split_csv_line(line);
        if (fields.size() != 5) {
            reject("expected 5 fields, got " + std::to_string(fields.size()));
            continue;
        }
        ChargingSession s;
        s.session_id = fields[0];
        s.evse_id = fields[1];
        auto arr = parse_timestamp(fields[2]);
        auto dep = parse_timestamp(fields[3]);
        if (!arr) {
            reject("bad arrival timestamp");
            continue;
        }
        if (!dep) {
            reject("bad departure timestamp");
            continue;
        }
        s.arrival = *arr;
        s.departure = *dep;
        char* end = nullptr;
        s.energy_kwh = std::strtod(fields[4].c_str(), &end);
        if (end == fields[4].c_str()) {
            reject("bad energy value");
            continue;
        }
        if (!(s.departure.total_minutes() > s.arrival.total_minutes())) {
            reject("departure not after arrival");
            continue;
        }
        if (s.energy_kwh < 0.0) {
            reject("negative energy");
            continue;
        }
        // Physical deliverability at the EVSE rating, with one slot of slack.
        double max_kwh = s.stay_minutes() / 60.0 * kEvseMaxKw + kEvseMaxSlotKwh;
        if (s.energy_kwh > max_kwh) {
            reject("energy exceeds deliverable for stay duration");
            continue;
        }
        result.sessions.push_back(std::move(s));
    }
    if (data_rows > 0 && result.rejected.size() * 2 > size_t(data_rows))
        throw format_error("more than half of session rows rejected (" +
                           std::to_string(result.rejected.size()) + " of " +
                           std::to_string(data_rows) + ")");
    return result;
}

SessionParseResult parse_sessions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open session file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sessions_text(buf.str());
}

std::string sessions_to_csv(const std::vector<ChargingSession>& sessions) {
    std::string out = "session_id,evse_id,arrival,departure,energy_kwh\n";
    char buf[64];
    for (const auto& s : sessions) {
        std::snprintf(buf, sizeof(buf), "%.3f", s.energy_kwh);
        out += s.session_id + "," + s.evse_id + "," + format_timestamp(s.arrival) + "," +
               format_timestamp(s.departure) + "," + buf + "\n";
    }
    return out;
}

void write_sessions_csv(const std::vector<ChargingSession>& sessions, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write session file: " + path);
    out << sessions_to_csv(sessions);
}

void write_reject_report(const std::vector<RejectedRow>& rejected, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write reject report: " + path);
    out << "line,reason,raw\n";
    for (const auto& r : rejected) out << r.line << "," << r.reason << ",\"" << r.raw << "\"\n";
}

}  // namespace evsched
