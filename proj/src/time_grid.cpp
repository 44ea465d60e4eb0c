#include "evsched/time_grid.hpp"

#include <cstdio>

namespace evsched {

std::optional<Timestamp> parse_timestamp(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    int n = std::sscanf(text.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d", &y, &mo, &d, &h, &mi, &s);
    if (n < 5) return std::nullopt;
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(mo)},
                                    std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) return std::nullopt;
    if (h < 0 || h > 23 || mi < 0 || mi > 59) return std::nullopt;
    return Timestamp{std::chrono::sys_days{ymd}, h * 60 + mi};
}

std::string format_timestamp(const Timestamp& ts) {
    std::chrono::year_month_day ymd{ts.day};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()), ts.minute / 60, ts.minute % 60);
    return buf;
}

std::optional<std::chrono::sys_days> parse_date(const std::string& text) {
    int y = 0, mo = 0, d = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d", &y, &mo, &d) != 3) return std::nullopt;
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(mo)},
                                    std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) return std::nullopt;
    return std::chrono::sys_days{ymd};
}

std::string format_date(std::chrono::sys_days day) {
    std::chrono::year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

}  // namespace evsched
