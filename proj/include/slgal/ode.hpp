#pragma once

// Embedded Dormand-Prince 5(4) integrator, generic over the state type.
//
// A State must support `State + State`, `double * State`, and provide a
// free function `double norm_of(const State&)` reachable by ADL. The error
// test is norm-wise: |err| <= atol + rtol * max(|y_n|, |y_{n+1}|).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "slgal/errors.hpp"

namespace slgal::ode {

inline double norm_of(double v) { return std::abs(v); }

struct StepControl {
    double rtol = 1e-11;
    double atol = 1e-300;
    double h_initial = 0.0;  // 0: pick from the interval length
    double h_max = 0.0;      // 0: unbounded
    std::size_t max_steps = 2'000'000;
};

template <class State>
struct Solution {
    State y;
    double h_next = 0.0;  // step size suggestion for a continuation call
    std::size_t steps = 0;
};

template <class State, class Rhs>
Solution<State> integrate(Rhs&& rhs, double t0, double t1, State y, const StepControl& ctl) {
    Solution<State> out{y, ctl.h_initial, 0};
    const double span = t1 - t0;
    if (span == 0.0) return out;
    const double dir = span > 0 ? 1.0 : -1.0;
    const double length = std::abs(span);

    double h = ctl.h_initial > 0 ? ctl.h_initial : 0.01 * length;
    if (ctl.h_max > 0) h = std::min(h, ctl.h_max);
    h = std::min(h, length);
    const double h_floor = 1e-14 * std::max(1.0, std::max(std::abs(t0), std::abs(t1)));

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    double t = t0;
    State k1 = rhs(t, y);
    std::size_t steps = 0;
    while (dir * (t1 - t) > 0) {
        if (++steps > ctl.max_steps) {
            throw Error(ErrorKind::Tolerance, "integrator exceeded " + std::to_string(ctl.max_steps) + " steps");
        }
        bool last = false;
        if (h >= std::abs(t1 - t)) {
            h = std::abs(t1 - t);
            last = true;
        }
        const double hs = dir * h;
        const State k2 = rhs(t + c2 * hs, y + (hs * a21) * k1);
        const State k3 = rhs(t + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
        const State k4 = rhs(t + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
        const State k5 = rhs(t + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const State k6 = rhs(t + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const State y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const State k7 = rhs(t + hs, y_new);
        const State err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double scale = ctl.atol + ctl.rtol * std::max(norm_of(y), norm_of(y_new));
        const double ratio = norm_of(err) / scale;
        if (!std::isfinite(ratio)) {
            h *= 0.1;
            if (h < h_floor) throw Error(ErrorKind::StepUnderflow, "non-finite state; step underflow");
            continue;
        }
        if (ratio <= 1.0) {
            t = last ? t1 : t + hs;
            y = y_new;
            k1 = k7;
            const double grow = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
            if (!last) out.h_next = h * grow;
            h *= grow;
        } else {
            h *= std::max(0.2, 0.9 * std::pow(ratio, -0.2));
            if (h < h_floor) {
                throw Error(ErrorKind::StepUnderflow,
                            "step size underflow at t=" + std::to_string(t) + " (near a singularity?)");
            }
        }
        if (ctl.h_max > 0) h = std::min(h, ctl.h_max);
    }
    out.y = y;
    out.steps = steps;
    if (out.h_next <= 0) out.h_next = h;
    return out;
}

}  // namespace slgal::ode
