#include "resgal/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "resgal/error.hpp"

namespace resgal {

PLFunc incr_bijection(const Rat& i_lo, const Rat& i_hi, const Rat& j_lo, const Rat& j_hi,
                      const std::vector<BijectionConstraint>& constraints) {
    if (!(i_lo < i_hi) || !(j_lo < j_hi)) throw PreconditionError("bijection needs non-degenerate intervals");
    Domain d(i_lo, i_hi);
    std::vector<Rat> seen;
    for (const auto& c : constraints) {
        if (!(i_lo < c.x && c.x < i_hi))
            throw PreconditionError("constraint point " + to_string(c.x) + " is not interior");
        if (std::find(seen.begin(), seen.end(), c.x) != seen.end())
            throw ConstructionError("duplicate constraint point " + to_string(c.x));
        seen.push_back(c.x);
    }
    Rat half_slope = (j_hi - j_lo) / (i_hi - i_lo) / 2;
    std::vector<Breakpoint> pts{{i_lo, j_lo}, {i_hi, j_hi}};
    Rat step(1);
    for (const auto& c : constraints) {
        auto after = std::upper_bound(pts.begin(), pts.end(), c.x,
                                      [](const Rat& x, const Breakpoint& b) { return x < b.x; });
        const Breakpoint& p = *(after - 1);
        const Breakpoint& r = *after;
        Rat u = p.y + (r.y - p.y) * (c.x - p.x) / (r.x - p.x);
        // Keep f - f0/2 increasing on both halves of the split piece.
        Rat lo = std::max(Rat(p.y + half_slope * (c.x - p.x)), Rat(u - step));
        Rat hi = std::min(Rat(r.y - half_slope * (r.x - c.x)), Rat(u + step));
        Rat v = dense_pick(c.rule, lo, hi, u);
        pts.insert(after, {c.x, v});
        step /= 2;
    }
    return PLFunc::make(std::move(pts), d);
}

PLFunc band_extension(const RealSet& E, const PLFunc& values, const ExtBound& lo, const ExtBound& hi) {
    return band_extend(E, values, lo, hi);
}

Rat oscillation(const PLFunc& f, const Rat& a, const Rat& b) {
    const Domain& d = f.domain();
    if (a > b || !d.contains(a) || !d.contains(b)) throw DomainError("interval outside the domain");
    Rat mx = f(a), mn = mx;
    auto see = [&](const Rat& y) {
        mx = std::max(mx, y);
        mn = std::min(mn, y);
    };
    see(f(b));
    for (const auto& bp : f.breakpoints())
        if (a < bp.x && bp.x < b) see(bp.y);
    return mx - mn;
}

std::pair<ExtBound, ExtBound> effective_band(const std::vector<Slice>& slices, std::size_t i) {
    ExtBound lo = slices[i].lo, hi = slices[i].hi;
    for (std::size_t j = 0; j < i; ++j) lo = bound_max(lo, slices[j].hi);
    for (std::size_t k = i + 1; k < slices.size(); ++k) hi = bound_min(hi, slices[k].lo);
    return {lo, hi};
}

std::vector<Slice> sliced_normalize(const Domain& d, std::vector<Slice> slices,
                                    std::optional<std::vector<std::size_t>> order) {
    std::size_t n = slices.size();
    if (n == 0) throw PreconditionError("no slices to normalize");
    for (std::size_t i = 0; i < n; ++i) {
        auto [lo, hi] = effective_band(slices, i);
        if (!bound_less(lo, hi, true, d)) throw PreconditionError("not sliced: slice " + std::to_string(i) + " is empty");
    }
    std::vector<std::size_t> enumeration(n);
    std::iota(enumeration.begin(), enumeration.end(), 0);
    if (order) {
        std::vector<std::size_t> sorted = *order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != enumeration) throw PreconditionError("enumeration is not a permutation of the slices");
        enumeration = *order;
    }
    for (std::size_t m = 0; m < n; ++m) {
        std::size_t i = enumeration[m];
        ExtBound h_minus = slices[i].lo, h_plus = slices[i].hi;
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t j = enumeration[k];
            if (j < i) h_minus = bound_max(h_minus, *slices[j].h_plus);
            if (j > i) h_plus = bound_min(h_plus, *slices[j].h_minus);
        }
        slices[i].h_minus = h_minus;
        slices[i].h_plus = h_plus;
    }
    return slices;
}

FamilyDesc slice_decompose(const FamilyDesc& G) {
    const Domain& d = G.domain();
    auto reject_if_bad = [&] {
        auto p = predicates(G);
        if (!p.complete) throw PreconditionError("family is not complete");
        auto r = relation_checks(G);
        if (!r.transitive) throw PreconditionError("family is not transitive");
        if (!r.sequential) throw PreconditionError("family is not sequential");
    };
    std::vector<Slice> bands;
    if (G.get_if<FullFam>()) {
        bands.push_back({ExtBound::neg_inf(), ExtBound::pos_inf(), {}, {}});
    } else if (auto b = G.get_if<OpenBand>()) {
        bands.push_back({b->lo, b->hi, {}, {}});
    } else if (auto p = G.get_if<Punctured>()) {
        bands.push_back({ExtBound::neg_inf(), p->g, {}, {}});
        bands.push_back({p->g, ExtBound::pos_inf(), {}, {}});
    } else if (auto s = G.get_if<SlicedUnion>()) {
        for (const auto& sl : s->slices) bands.push_back({sl.lo, sl.hi, {}, {}});
    } else if (G.get_if<EmptyFam>()) {
        throw PreconditionError("the empty family has no slices");
    } else {
        reject_if_bad();
        throw UnsupportedError(G.kind() + ": component is not an open band");
    }
    if (bands.size() > 1) {
        bands.front().h_minus = ExtBound::neg_inf();
        bands.back().h_plus = ExtBound::pos_inf();
        for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
            // Neighbouring bands share no point, so hi_i <= lo_{i+1} and both are finite.
            PLFunc mid = pl_scale(pl_combine(bands[i].hi.func(), bands[i + 1].lo.func(), CombineOp::Add), make_rat(1, 2));
            bands[i].h_plus = mid;
            bands[i + 1].h_minus = mid;
        }
    }
    return FamilyDesc::sliced(d, std::move(bands));
}

}  // namespace resgal
