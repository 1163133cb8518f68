#pragma once

#include "p13/poly.hpp"

#include <array>

namespace p13 {

// Momentum triples whose perpendicular radius and energy are both integers,
// so every symbol in the engine evaluates to an exact rational there:
//   r^2 = p1^2 + p2^2 and e^2 = r^2 + p3^2 are perfect squares.
struct PythTriple {
    long p1, p2, p3, r, e;
};

[[nodiscard]] inline const std::array<PythTriple, 8>& pyth_triples() {
    static const std::array<PythTriple, 8> t = {{
        {3, 4, 12, 5, 13},
        {6, 8, 24, 10, 26},
        {5, 12, 84, 13, 85},
        {8, 15, 144, 17, 145},
        {9, 12, 8, 15, 17},
        {12, 16, 15, 20, 25},
        {7, 24, 60, 25, 65},
        {20, 21, 420, 29, 421},
    }};
    return t;
}

// branch selects the sign of A relative to |p3|; signs flip the individual
// momentum components (E, R, |p3| are unaffected).
[[nodiscard]] inline ExactPoint exact_point(int idx, int branch, std::array<int, 3> signs = {1, 1, 1},
                                            Rat t0 = Rat(0)) {
    const PythTriple& t = pyth_triples()[static_cast<size_t>(idx) % pyth_triples().size()];
    ExactPoint pt;
    pt.t0 = std::move(t0);
    pt.p1 = Rat(signs[0] * t.p1);
    pt.p2 = Rat(signs[1] * t.p2);
    pt.p3 = Rat(signs[2] * t.p3);
    pt.e = Rat(t.e);
    pt.a = Rat(branch * t.p3);
    pt.r = Rat(t.r);
    return pt;
}

}  // namespace p13
