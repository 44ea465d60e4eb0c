#ifndef EVSCHED_TARIFF_HPP
#define EVSCHED_TARIFF_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "evsched/time_grid.hpp"

namespace evsched {

enum class DayKind { weekday, weekend };

// One time-of-use window. Slot indices are [start_slot, end_slot).
struct TouWindow {
    std::string label;  // off-peak | partial-peak | peak
    int start_slot = 0;
    int end_slot = 0;
    double price = 0.0;  // $/kWh
};

// Per-slot energy rates for weekdays and weekends plus the demand charge
// rate applied to the monthly peak 15-minute-average power.
struct TariffSchedule {
    std::array<double, kSlotsPerDay> slot_prices{};
    std::array<double, kSlotsPerDay> weekend_slot_prices{};
    double demand_charge_rate = 0.0;  // $/kW
    std::vector<TouWindow> weekday_windows;

    // Throws contract_error if prices are negative or windows fail to tile
    // the 96 slots exactly.
    void validate() const;
};

// Uniform price at all slots of all days.
TariffSchedule flat_tariff(double price, double demand_charge_rate = 0.0);

// Assembles per-slot prices from a window table. Windows must cover all 96
// slots without overlap. Weekend slots all carry weekend_price.
TariffSchedule tariff_from_windows(const std::vector<TouWindow>& weekday_windows,
                                   double weekend_price, double demand_charge_rate);

// Bundled default: off-peak / partial-peak (08:30-12:00) / peak (12:00-18:00)
// windows with illustrative prices. The rates are placeholders for a
// workplace TOU structure, not a published rate sheet.
TariffSchedule default_tariff();

const std::array<double, kSlotsPerDay>& price_vector(const TariffSchedule& tariff, DayKind kind);

// p^T e. Throws contract_error on length mismatch or negative energy.
double energy_cost(std::span<const double> energy_kwh, std::span<const double> price);

// demand_charge_rate x monthly peak kW.
double demand_charge(double peak_power_kw, const TariffSchedule& tariff);

// JSON config: {"windows": [{"label","start","end","price"}...],
//               "weekend_price": x, "demand_charge_rate": y}
// with HH:MM times on 15-minute boundaries.
TariffSchedule load_tariff(const std::string& path);
void save_tariff(const TariffSchedule& tariff, const std::string& path);

// "HH:MM" -> slot index; must align to a 15-minute boundary. "24:00" maps
// to 96 so windows can end at midnight.
int slot_of_time_string(const std::string& hhmm);

}  // namespace evsched

#endif
