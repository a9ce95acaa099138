#pragma once

#include "test_util.hpp"

namespace fsing::test {

inline Ideal semigroup_ideal() {
    auto R = ring(5, "a b c d");
    return ideal(R, {"b*c - a*d", "b^3 - a^2*c", "c^3 - b*d^2", "a*c^2 - b^2*d"});
}

inline Ideal stanley_reisner_ideal(std::uint32_t p) {
    auto R = ring(p, "u v z");
    return ideal(R, {"u*v", "u*z", "v*z"});
}

}  // namespace fsing::test

namespace fsing::test {

inline Ideal segre_ideal(std::uint32_t p) {
    auto R = ring(p, "a b c d e f");
    return ideal(R, {"d*e - c*f", "b*e - a*f", "b*c - a*d", "b^3 + d^3 + f^3", "a*b^2 + c*d^2 + e*f^2",
                     "a^2*b + c^2*d + e^2*f", "a^3 + c^3 + e^3"});
}

inline Ideal fedder_singh_ideal() {
    auto R = ring(5, "U:2 V:2 Y:1 Z:2");
    return ideal(R, {"U*V", "U*Z", "Z*(V - Y^2)"});
}

}  // namespace fsing::test
