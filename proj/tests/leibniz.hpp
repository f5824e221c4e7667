#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace latpath::gen {

/// Determinant by the permutation expansion.
template <class F>
F leibniz_det(const std::vector<std::vector<F>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    F total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        F term(1);
        for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
        total = inversions % 2 ? F(total - term) : F(total + term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace latpath::gen
