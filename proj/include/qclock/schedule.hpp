#pragma once

#include <cmath>
#include <utility>
#include <variant>
#include <vector>

namespace qclock {

// Control signals driving a clocking cycle. Values are dimensionless,
// times in units of hbar/E_k.

// p0 -> p1 half-cosine switch: value(0) = p0, value(t_f) = p1.
struct CosineSwitch {
    double p0 = 1.0;
    double p1 = -1.0;
    double t_f = 1.0;
    bool operator==(const CosineSwitch&) const = default;
};

// gamma_max * sin(pi t / t_f); latched (zero) at both ends.
struct SineRamp {
    double gamma_max = 0.5;
    double t_f = 1.0;
    bool operator==(const SineRamp&) const = default;
};

struct Constant {
    double value = 0.0;
    bool operator==(const Constant&) const = default;
};

// Linear interpolation through strictly increasing (t, value) knots.
struct PiecewiseLinear {
    std::vector<std::pair<double, double>> points;
    bool operator==(const PiecewiseLinear&) const = default;
};

using Schedule = std::variant<CosineSwitch, SineRamp, Constant, PiecewiseLinear>;

// Throws std::invalid_argument on t_f <= 0 or non-increasing knots.
void validate_schedule(const Schedule& s);

// Value at time t. Throws std::out_of_range when t falls outside the
// schedule's domain (Constant accepts any t). A small slack of 1e-9 is
// tolerated at the domain ends so that integrator stage times landing on
// t_f up to roundoff stay valid.
double evaluate_schedule(const Schedule& s, double t);

// End of the schedule's time domain; +infinity for Constant.
double schedule_end(const Schedule& s);

}  // namespace qclock
