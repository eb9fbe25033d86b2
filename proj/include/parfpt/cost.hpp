#pragma once

#include <algorithm>
#include <cstdint>

namespace parfpt {

// Model cost of one primitive invocation. Work is counted in touches
// (one touch = one edge or vertex access); span is the charged critical
// path under the declared parallel-time bound of the primitive.
struct Charge {
    std::int64_t work = 0;
    std::int64_t span = 0;

    Charge& operator+=(const Charge& o) {
        work += o.work;
        span += o.span;
        return *this;
    }
};

// ceil(log2(t + 2))^e, clamped to t so that a step's span never exceeds
// its work (on tiny inputs the asymptotic formula would).
inline std::int64_t polylog_span(std::int64_t touches, int exponent) {
    if (touches <= 0) return 0;
    std::int64_t bits = 0;
    for (std::int64_t v = touches + 1; v > 0; v >>= 1) ++bits;  // ceil(log2(t+2))
    std::int64_t s = 1;
    for (int i = 0; i < exponent; ++i) s *= bits;
    return std::min(touches, s);
}

// A sequential step: touches units of work on the critical path.
inline Charge sequential_charge(std::int64_t touches) { return {touches, touches}; }

// A parallel step charged with polylog span of the given exponent.
inline Charge parallel_charge(std::int64_t touches, int exponent) {
    return {touches, polylog_span(touches, exponent)};
}

}  // namespace parfpt
