#include "evsched/tariff.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace evsched {

void TariffSchedule::validate() const {
    for (double p : slot_prices) require(p >= 0.0, "tariff: negative weekday price");
    for (double p : weekend_slot_prices) require(p >= 0.0, "tariff: negative weekend price");
    require(demand_charge_rate >= 0.0, "tariff: negative demand charge rate");
    if (!weekday_windows.empty()) {
        std::array<int, kSlotsPerDay> cover{};
        for (const auto& w : weekday_windows) {
            require(w.start_slot >= 0 && w.end_slot <= kSlotsPerDay && w.start_slot < w.end_slot,
                    "tariff: window slots out of range");
            for (int t = w.start_slot; t < w.end_slot; ++t) ++cover[t];
        }
        for (int t = 0; t < kSlotsPerDay; ++t)
            require(cover[t] == 1, "tariff: windows must tile all 96 slots exactly once");
    }
}

TariffSchedule flat_tariff(double price, double demand_charge_rate) {
    TariffSchedule t;
    t.slot_prices.fill(price);
    t.weekend_slot_prices.fill(price);
    t.demand_charge_rate = demand_charge_rate;
    t.validate();
    return t;
}

TariffSchedule tariff_from_windows(const std::vector<TouWindow>& weekday_windows,
                                   double weekend_price, double demand_charge_rate) {
    TariffSchedule t;
    t.weekday_windows = weekday_windows;
    t.demand_charge_rate = demand_charge_rate;
    t.weekend_slot_prices.fill(weekend_price);
    t.slot_prices.fill(-1.0);
    for (const auto& w : weekday_windows)
        for (int s = w.start_slot; s < w.end_slot; ++s) t.slot_prices[s] = w.price;
    t.validate();
    return t;
}

TariffSchedule default_tariff() {
    // Placeholder rates chosen for a pronounced off/partial/peak contrast;
    // window boundaries: partial-peak 08:30-12:00, peak 12:00-18:00.
    std::vector<TouWindow> w = {
        {"off-peak", 0, 34, 0.10},
        {"partial-peak", 34, 48, 0.22},
        {"peak", 48, 72, 0.35},
        {"off-peak", 72, 96, 0.10},
    };
    return tariff_from_windows(w, 0.10, 16.0);
}

const std::array<double, kSlotsPerDay>& price_vector(const TariffSchedule& tariff, DayKind kind) {
    return kind == DayKind::weekday ? tariff.slot_prices : tariff.weekend_slot_prices;
}

double energy_cost(std::span<const double> energy_kwh, std::span<const double> price) {
    require(energy_kwh.size() == price.size(), "energy_cost: length mismatch");
    double total = 0.0;
    for (size_t i = 0; i < energy_kwh.size(); ++i) {
        require(energy_kwh[i] >= 0.0, "energy_cost: negative energy");
        total += energy_kwh[i] * price[i];
    }
    return total;
}

double demand_charge(double peak_power_kw, const TariffSchedule& tariff) {
    require(peak_power_kw >= 0.0, "demand_charge: negative peak");
    return tariff.demand_charge_rate * peak_power_kw;
}

int slot_of_time_string(const std::string& hhmm) {
    int h = 0, m = 0;
    if (std::sscanf(hhmm.c_str(), "%d:%d", &h, &m) != 2)
        throw format_error("bad time of day: " + hhmm);
    if (h == 24 && m == 0) return kSlotsPerDay;
    require(h >= 0 && h < 24 && m >= 0 && m < 60, "time of day out of range: " + hhmm);
    require(m % kSlotMinutes == 0, "time must align to 15-minute boundary: " + hhmm);
    return h * 4 + m / kSlotMinutes;
}

static std::string time_string_of_slot(int slot) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d:%02d", (slot * kSlotMinutes) / 60,
                  (slot * kSlotMinutes) % 60);
    return buf;
}

TariffSchedule load_tariff(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open tariff file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw format_error("tariff file " + path + ": " + e.what());
    }
    std::vector<TouWindow> windows;
    for (const auto& jw : j.at("windows")) {
        TouWindow w;
        w.label = jw.at("label").get<std::string>();
        w.start_slot = slot_of_time_string(jw.at("start").get<std::string>());
        w.end_slot = slot_of_time_string(jw.at("end").get<std::string>());
        w.price = jw.at("price").get<double>();
        windows.push_back(w);
    }
    double weekend_price = j.value("weekend_price", -1.0);
    if (weekend_price < 0.0) {
        // Default: copy the cheapest (off-peak) weekday price across weekends.
        weekend_price = windows.empty() ? 0.0 : windows.front().price;
        for (const auto& w : windows) weekend_price = std::min(weekend_price, w.price);
    }
    return tariff_from_windows(windows, weekend_price, j.at("demand_charge_rate").get<double>());
}

void save_tariff(const TariffSchedule& tariff, const std::string& path) {
    require(!tariff.weekday_windows.empty(), "save_tariff: window table required");
    nlohmann::json j;
    for (const auto& w : tariff.weekday_windows) {
        j["windows"].push_back({{"label", w.label},
                                {"start", time_string_of_slot(w.start_slot)},
                                {"end", time_string_of_slot(w.end_slot)},
                                {"price", w.price}});
    }
    j["weekend_price"] = tariff.weekend_slot_prices[0];
    j["demand_charge_rate"] = tariff.demand_charge_rate;
    std::ofstream out(path);
    if (!out) throw io_error("cannot write tariff file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace evsched
