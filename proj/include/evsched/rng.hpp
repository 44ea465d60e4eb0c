#ifndef EVSCHED_RNG_HPP
#define EVSCHED_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace evsched {

// mt19937_64 plus hand-rolled samplers. The engine's output sequence is fixed
// by the standard; implementing the distributions here keeps traces
// reproducible bit-for-bit regardless of the standard library in use.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi_inclusive) {
        return lo + int(uniform() * double(hi_inclusive - lo + 1));
    }

    // Box-Muller; consumes exactly two engine draws per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Normal redrawn until >= lo.
    double truncated_normal(double mean, double sd, double lo) {
        for (int i = 0; i < 1000; ++i) {
            double x = normal(mean, sd);
            if (x >= lo) return x;
        }
        return lo;
    }

    // Parameterized by the distribution mean and coefficient of variation.
    double lognormal_mean_cv(double mean, double cv) {
        double sigma2 = std::log(1.0 + cv * cv);
        double mu = std::log(mean) - 0.5 * sigma2;
        return std::exp(normal(mu, std::sqrt(sigma2)));
    }

    // Knuth product method; exact and adequate for the per-block means here.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        double limit = std::exp(-mean);
        double prod = uniform();
        int k = 0;
        while (prod > limit) {
            prod *= uniform();
            ++k;
        }
        return k;
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace evsched

#endif
