#include "qclock/schedule.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace qclock {

namespace {

constexpr double kTimeSlack = 1e-9;

[[noreturn]] void out_of_domain(double t, double lo, double hi) {
    throw std::out_of_range("schedule evaluated at t=" + std::to_string(t) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
}

double clamp_to_domain(double t, double lo, double hi) {
    if (t < lo - kTimeSlack || t > hi + kTimeSlack) out_of_domain(t, lo, hi);
    return std::min(std::max(t, lo), hi);
}

}  // namespace

void validate_schedule(const Schedule& s) {
    if (const auto* c = std::get_if<CosineSwitch>(&s)) {
        if (!(c->t_f > 0)) throw std::invalid_argument("CosineSwitch: t_f must be > 0");
    } else if (const auto* r = std::get_if<SineRamp>(&s)) {
        if (!(r->t_f > 0)) throw std::invalid_argument("SineRamp: t_f must be > 0");
    } else if (const auto* p = std::get_if<PiecewiseLinear>(&s)) {
        if (p->points.empty())
            throw std::invalid_argument("PiecewiseLinear: needs at least one point");
        for (std::size_t i = 1; i < p->points.size(); ++i)
            if (!(p->points[i - 1].first < p->points[i].first))
                throw std::invalid_argument(
                    "PiecewiseLinear: knot times must be strictly increasing");
    }
}

double evaluate_schedule(const Schedule& s, double t) {
    if (const auto* c = std::get_if<CosineSwitch>(&s)) {
        const double tt = clamp_to_domain(t, 0.0, c->t_f);
        if (tt == 0.0) return c->p0;      // endpoints exact
        if (tt == c->t_f) return c->p1;
        const double w = std::cos(M_PI * tt / c->t_f);
        return 0.5 * c->p0 * (1.0 + w) + 0.5 * c->p1 * (1.0 - w);
    }
    if (const auto* r = std::get_if<SineRamp>(&s)) {
        const double tt = clamp_to_domain(t, 0.0, r->t_f);
        if (tt == 0.0 || tt == r->t_f) return 0.0;  // latched exactly
        return r->gamma_max * std::sin(M_PI * tt / r->t_f);
    }
    if (const auto* k = std::get_if<Constant>(&s)) return k->value;

    const auto& pts = std::get<PiecewiseLinear>(s).points;
    const double tt = clamp_to_domain(t, pts.front().first, pts.back().first);
    auto hi = std::lower_bound(pts.begin(), pts.end(), tt,
                               [](const auto& p, double x) { return p.first < x; });
    if (hi == pts.begin()) return hi->second;
    if (hi == pts.end()) return pts.back().second;
    auto lo = hi - 1;
    const double u = (tt - lo->first) / (hi->first - lo->first);
    return lo->second + u * (hi->second - lo->second);
}

double schedule_end(const Schedule& s) {
    if (const auto* c = std::get_if<CosineSwitch>(&s)) return c->t_f;
    if (const auto* r = std::get_if<SineRamp>(&s)) return r->t_f;
    if (std::get_if<Constant>(&s)) return std::numeric_limits<double>::infinity();
    return std::get<PiecewiseLinear>(s).points.back().first;
}

}  // namespace qclock
