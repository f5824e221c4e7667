#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "latpath/boundary.hpp"

namespace latpath::gen {

/// Prefix length <= 3, period height <= 3, entries <= max_term.
inline Boundary random_boundary(std::mt19937& rng, Term max_term = 6) {
    std::uniform_int_distribution<int> len(0, 3), height(1, 3);
    std::uniform_int_distribution<Term> pre(1, max_term), per(0, max_term);
    std::vector<Term> prefix(static_cast<std::size_t>(len(rng))), period(static_cast<std::size_t>(height(rng)));
    for (auto& x : prefix) x = pre(rng);
    for (auto& x : period) x = per(rng);
    std::sort(prefix.begin(), prefix.end());
    std::sort(period.begin(), period.end());
    if (prefix.empty())
        for (auto& x : period) x = std::max<Term>(x, 1);
    return Boundary(prefix, period);
}

/// A random boundary satisfying the slope condition for `shape`.
inline Boundary random_slope_valid(std::mt19937& rng, StepShape shape, Term max_term = 6) {
    while (true) {
        Boundary b = random_boundary(rng, max_term);
        if (slope_condition(b, shape)) return b;
    }
}

}  // namespace latpath::gen
