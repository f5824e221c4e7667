#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace latpath {

using Term = std::int64_t;

/// Diagonal step (u, v) -> (u + a, v + b).
struct StepShape {
    Term a = 1;
    Term b = 1;
    friend bool operator==(const StepShape&, const StepShape&) = default;
};

/// Ultimately periodic right boundary: a finite prefix a_0..a_{r-1}
/// followed by p + b_j + q*l at index r + q*k + j, where p = a_{r-1}
/// (0 for an empty prefix), k = period length and l = b_{k-1}.
///
/// Equality is semantic: two boundaries compare equal when they generate
/// the same term sequence, whatever prefix/period split they were given.
class Boundary {
   public:
    Boundary(std::vector<Term> prefix, std::vector<Term> period) : prefix_(std::move(prefix)), period_(std::move(period)) {
        validate();
    }

    const std::vector<Term>& prefix() const noexcept { return prefix_; }
    const std::vector<Term>& period() const noexcept { return period_; }
    std::size_t prefix_length() const noexcept { return prefix_.size(); }
    std::size_t height() const noexcept { return period_.size(); }
    Term width() const noexcept { return period_.back(); }
    Term offset() const noexcept { return prefix_.empty() ? 0 : prefix_.back(); }

    Term term(std::size_t n) const {
        if (n < prefix_.size()) return prefix_[n];
        const std::size_t m = n - prefix_.size();
        const std::size_t q = m / period_.size(), j = m % period_.size();
        return offset() + period_[j] + static_cast<Term>(q) * width();
    }

    std::vector<Term> terms(std::size_t count) const {
        std::vector<Term> out;
        out.reserve(count);
        for (std::size_t n = 0; n < count; ++n) out.push_back(term(n));
        return out;
    }

    /// Shortest period, then shortest prefix, generating the same terms.
    Boundary canonical() const {
        const std::size_t r = prefix_length(), k = height();
        const auto s = terms(r + 2 * k + 1);
        std::size_t kk = k;
        for (std::size_t cand = 1; cand < k; ++cand) {
            if (k % cand) continue;
            const Term l = s[r + cand] - s[r];
            bool ok = true;
            for (std::size_t n = r; n < r + k && ok; ++n) ok = s[n + cand] == s[n] + l;
            if (ok) {
                kk = cand;
                break;
            }
        }
        const Term l = s[r + kk] - s[r];
        // e(-1) = 0 extends the sequence one step to the left.
        auto e = [&](std::ptrdiff_t n) -> Term { return n < 0 ? 0 : s[static_cast<std::size_t>(n)]; };
        std::size_t rr = r;
        while (rr > 0) {
            const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rr) - 2;
            if (e(n + static_cast<std::ptrdiff_t>(kk)) != e(n) + l) break;
            --rr;
        }
        std::vector<Term> pre(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(rr));
        const Term p = rr ? s[rr - 1] : 0;
        std::vector<Term> per;
        for (std::size_t j = 0; j < kk; ++j) per.push_back(s[rr + j] - p);
        return Boundary(std::move(pre), std::move(per));
    }

    bool same_representation(const Boundary& o) const { return prefix_ == o.prefix_ && period_ == o.period_; }

    friend bool operator==(const Boundary& a, const Boundary& b) {
        return a.canonical().same_representation(b.canonical());
    }

    friend std::ostream& operator<<(std::ostream& os, const Boundary& b) {
        os << "{prefix:[";
        for (std::size_t i = 0; i < b.prefix_.size(); ++i) os << (i ? "," : "") << b.prefix_[i];
        os << "],period:[";
        for (std::size_t i = 0; i < b.period_.size(); ++i) os << (i ? "," : "") << b.period_[i];
        return os << "]}";
    }

   private:
    void validate() const {
        auto fail = [](const std::string& why) { throw Error(Errc::InvalidBoundary, why); };
        if (period_.empty()) fail("period must be non-empty");
        for (std::size_t i = 0; i < prefix_.size(); ++i) {
            if (prefix_[i] < 1) fail("prefix terms must be positive");
            if (i && prefix_[i] < prefix_[i - 1]) fail("prefix must be non-decreasing");
        }
        for (std::size_t j = 0; j < period_.size(); ++j) {
            if (period_[j] < 0) fail("period entries must be non-negative");
            if (j && period_[j] < period_[j - 1]) fail("period must be non-decreasing");
        }
        if (prefix_.empty() && period_[0] < 1) fail("first boundary term must be positive");
    }

    std::vector<Term> prefix_;
    std::vector<Term> period_;
};

inline Term term(const Boundary& boundary, std::size_t n) { return boundary.term(n); }

/// Result of the slope test; `counterexample` is the first failing j.
struct SlopeResult {
    bool holds = true;
    std::optional<std::size_t> counterexample;
    explicit operator bool() const noexcept { return holds; }
};

/// Checks s_{j+i} > s_j - 1 + i a / b for i = 1..b by cross-multiplication.
/// Lattice paths (no shape) and (0,0) always pass; (a,0) with a > 0 never
/// does. Violations repeat with the period, so j < r + 2k + b suffices;
/// `window` overrides that bound.
inline SlopeResult slope_condition(const Boundary& boundary, std::optional<StepShape> shape, std::size_t window = 0) {
    if (!shape) return {};
    const Term a = shape->a, b = shape->b;
    if (a < 0 || b < 0) throw Error(Errc::UnsupportedShape, "step components must be non-negative");
    if (a == 0 && b == 0) return {};
    if (b == 0) return {false, 0};
    if (window == 0) window = boundary.prefix_length() + 2 * boundary.height() + static_cast<std::size_t>(b);
    for (std::size_t j = 0; j < window; ++j) {
        const Term sj = boundary.term(j);
        for (Term i = 1; i <= b; ++i)
            if (b * boundary.term(j + static_cast<std::size_t>(i)) <= b * (sj - 1) + i * a) return {false, j};
    }
    return {};
}

/// Tennis-ball boundary 1, then l+1 k times, 2l+1 k times, ...
inline Boundary make_tennis(Term k, Term l) {
    if (k < 1 || l < 1) throw Error(Errc::InvalidBoundary, "tennis boundary needs k, l >= 1");
    return Boundary({1}, std::vector<Term>(static_cast<std::size_t>(k), l));
}

/// s_i = c + i d, in canonical form.
inline Boundary make_arithmetic(Term c, Term d) {
    if (c < 1 || d < 0) throw Error(Errc::InvalidBoundary, "arithmetic boundary needs c >= 1, d >= 0");
    return Boundary({c}, {d}).canonical();
}

/// s_i = ceil(i / gamma) + 1, the integers just right of y = gamma (x - 1);
/// height = numerator of gamma, width = denominator.
inline Boundary make_staircase(const Rational& gamma) {
    if (sgn(gamma) <= 0) throw Error(Errc::InvalidBoundary, "staircase slope must be positive");
    if (!gamma.get_num().fits_slong_p() || !gamma.get_den().fits_slong_p())
        throw Error(Errc::InvalidBoundary, "staircase slope too large");
    const Term num = gamma.get_num().get_si(), den = gamma.get_den().get_si();
    auto s = [&](Term i) { return (i * den + num - 1) / num + 1; };
    std::vector<Term> period;
    for (Term j = 0; j < num; ++j) period.push_back(s(j + 1) - s(0));
    return Boundary({s(0)}, std::move(period)).canonical();
}

}  // namespace latpath
