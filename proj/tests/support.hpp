#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "resgal/pl_func.hpp"
#include "resgal/real_set.hpp"

namespace resgal::test {

inline Rat q(long n, long d = 1) { return make_rat(n, d); }

inline Domain dom(long a, long b) { return Domain(q(a), q(b)); }

inline PLFunc pl(const Domain& d, std::initializer_list<std::pair<Rat, Rat>> pts) {
    std::vector<Breakpoint> bp;
    for (const auto& [x, y] : pts) bp.push_back({x, y});
    return PLFunc::make(std::move(bp), d);
}

inline PLFunc cst(const Domain& d, const Rat& c) { return PLFunc::constant(d, c); }

inline RealSet pts(const Domain& d, std::initializer_list<Rat> ps) {
    std::vector<Rat> v(ps);
    return RealSet::points(d, v);
}

inline RealSet iv(const Domain& d, const Rat& a, const Rat& b, bool lc, bool rc) {
    return RealSet::interval(d, a, b, lc, rc);
}

// Random PL function on d with breakpoints on a grid of step 1/2 and small
// integer/half values.
inline PLFunc random_pl(std::mt19937& rng, const Domain& d, int max_inner = 3) {
    std::uniform_int_distribution<int> val(-6, 6);
    std::vector<Breakpoint> bp{{d.left(), q(val(rng), 2)}};
    Rat width = d.right() - d.left();
    std::uniform_int_distribution<int> cnt(0, max_inner);
    std::vector<Rat> inner;
    std::uniform_int_distribution<int> pos(1, 15);
    for (int i = cnt(rng); i > 0; --i) inner.push_back(Rat(d.left() + width * q(pos(rng), 16)));
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    for (const Rat& x : inner) bp.push_back({x, q(val(rng), 2)});
    bp.push_back({d.right(), q(val(rng), 2)});
    return PLFunc::make(std::move(bp), d);
}

// Random union of up to three intervals/points with endpoints on a 1/4 grid.
inline RealSet random_set(std::mt19937& rng, const Domain& d) {
    std::uniform_int_distribution<int> cnt(0, 3), kind(0, 3), pos(0, 16), coin(0, 1);
    std::vector<Interval> parts;
    Rat width = d.right() - d.left();
    for (int i = cnt(rng); i > 0; --i) {
        Rat a = Rat(d.left() + width * q(pos(rng), 16));
        Rat b = Rat(d.left() + width * q(pos(rng), 16));
        if (b < a) std::swap(a, b);
        if (a == b || kind(rng) == 0) {
            parts.push_back({a, a, true, true});
        } else {
            parts.push_back({a, b, coin(rng) == 1, coin(rng) == 1});
        }
    }
    return RealSet::from_intervals(d, parts);
}

}  // namespace resgal::test
