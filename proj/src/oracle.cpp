#include "resgal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "resgal/error.hpp"

namespace resgal {

namespace {

constexpr std::size_t kBandCap = 4096;

// Finite functions the family is built from.
std::vector<PLFunc> base_functions(const FamilyDesc& G) {
    std::vector<PLFunc> out;
    auto add = [&](const ExtBound& b) {
        if (b.finite()) out.push_back(b.func());
    };
    if (auto s = G.get_if<Singleton>()) out.push_back(s->g);
    if (auto o = G.get_if<OrderInterval>()) {
        add(o->lo);
        add(o->hi);
    }
    if (auto b = G.get_if<OpenBand>()) {
        add(b->lo);
        add(b->hi);
    }
    if (auto p = G.get_if<Punctured>()) out.push_back(p->g);
    if (auto s = G.get_if<SlicedUnion>())
        for (const auto& sl : s->slices) {
            add(sl.lo);
            add(sl.hi);
        }
    if (auto fam = G.get_if<FiniteFamily>()) out.insert(out.end(), fam->members.begin(), fam->members.end());
    return out;
}

Rat band_representative(const ExtBound& lo, const ExtBound& hi, const Rat& x) {
    if (lo.finite() && hi.finite()) return midpoint(lo.func()(x), hi.func()(x));
    if (lo.finite()) return lo.func()(x) + 1;
    if (hi.finite()) return hi.func()(x) - 1;
    return Rat(0);
}

Rat tent_radius(const Universe& U) {
    const auto& pts = U.points();
    const Domain& d = U.domain();
    Rat gap = (d.right() - d.left()) * 3 / 4;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) gap = std::min(gap, Rat(pts[i + 1] - pts[i]));
    return gap / 3;
}

// Union of radius-r neighbourhoods of the chosen grid points; regular open
// in the window since r is below half the smallest gap.
RealSet neighbourhood(const Universe& U, std::uint32_t mask, const Rat& r) {
    const Domain& d = U.domain();
    std::vector<Interval> parts;
    const auto& pts = U.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        Rat lo = pts[i] - r, hi = pts[i] + r;
        bool lo_clipped = lo < d.left(), hi_clipped = hi > d.right();
        parts.push_back({lo_clipped ? d.left() : lo, hi_clipped ? d.right() : hi, lo_clipped, hi_clipped});
    }
    return RealSet::from_intervals(d, parts);
}

// Table containment decides f_member when E_fam lives on the grid.
bool lives_on_grid(const HFam& E_fam, const Universe& U) {
    RealSet grid = RealSet::points(U.domain(), U.points());
    for (const auto& p : hfam_parts(E_fam, U.domain()))
        if (!p.subset_of(grid)) return false;
    return true;
}

}  // namespace

ValueLattice::ValueLattice(std::vector<Rat> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty()) throw ConstructionError("value lattice needs at least one value");
}

ValueLattice default_lattice(const FamilyDesc& G, const Universe& U) {
    std::vector<Rat> vs;
    for (const auto& f : base_functions(G))
        for (const Rat& p : U.points()) vs.push_back(f(p));
    if (auto s = G.get_if<SyntheticLeast>()) {
        for (const Rat& p : U.points()) vs.push_back(dense_pick(s->tagging.rule_at(p), Rat(-1), Rat(1), Rat(0)));
        vs.push_back(make_rat(1, 5));
    }
    if (vs.empty()) vs.push_back(Rat(0));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<Rat> out = vs;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) out.push_back(midpoint(vs[i], vs[j]));
    out.push_back(vs.back() + 1);
    out.push_back(vs.front() - 1);
    return ValueLattice(std::move(out));
}

std::vector<PLFunc> enum_pl(const Universe& U, const ValueLattice& values, std::size_t budget) {
    const auto& pts = U.points();
    const auto& vs = values.values();
    std::size_t total = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (total > budget / vs.size()) throw CapacityError("value lattice enumeration exceeds the budget of " + std::to_string(budget));
        total *= vs.size();
    }
    std::vector<PLFunc> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        std::vector<Breakpoint> bp;
        for (const Rat& p : pts) {
            bp.push_back({p, vs[rest % vs.size()]});
            rest /= vs.size();
        }
        out.push_back(PLFunc::through(U.domain(), std::move(bp)));
    }
    return out;
}

std::vector<HFam> enum_downsets(const Universe& U) {
    std::vector<HFam> out;
    for (const auto& g : GridFamily::all_downsets(static_cast<unsigned>(U.points().size()))) out.push_back(g.to_hfam(U));
    return out;
}

std::vector<LabelledFunc> witness_pool(const FamilyDesc& G, const Universe& U) {
    const Domain& d = U.domain();
    const auto& pts = U.points();
    std::vector<LabelledFunc> out;
    auto base = base_functions(G);
    base.push_back(PLFunc::constant(d, Rat(0)));
    Rat r = tent_radius(U);
    bool split_kind = G.get_if<Punctured>() || G.get_if<SlicedUnion>();

    for (const auto& b : base)
        for (const Rat& a : pts) {
            PLFunc v = cone(PLFunc::constant(d, Rat(0)), a);
            out.push_back({cone(b, a), split_kind ? "touch" : "cone"});
            out.push_back({pl_combine(b, v, CombineOp::Sub), "cone"});
            out.push_back({pl_combine(b, pl_tent(d, a, r, Rat(1)), CombineOp::Add), "tent"});
            out.push_back({pl_combine(b, pl_tent(d, a, r, Rat(1)), CombineOp::Sub), "tent"});
        }
    // Cones clipped at the midline of a two-sided band.
    std::vector<std::pair<ExtBound, ExtBound>> bands;
    if (auto b = G.get_if<OpenBand>()) bands.emplace_back(b->lo, b->hi);
    if (auto s = G.get_if<SlicedUnion>())
        for (const auto& sl : s->slices) bands.emplace_back(sl.lo, sl.hi);
    for (const auto& [lo, hi] : bands) {
        if (!lo.finite() || !hi.finite()) continue;
        PLFunc mid = pl_scale(pl_combine(lo.func(), hi.func(), CombineOp::Add), make_rat(1, 2));
        for (const Rat& a : pts) {
            out.push_back({pl_combine(cone(lo.func(), a), mid, CombineOp::Min), "cone"});
            PLFunc down = pl_combine(hi.func(), cone(PLFunc::constant(d, Rat(0)), a), CombineOp::Sub);
            out.push_back({pl_combine(down, mid, CombineOp::Max), "cone"});
        }
    }
    if (split_kind) {
        std::uint32_t n = static_cast<std::uint32_t>(pts.size());
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            RealSet nb = neighbourhood(U, mask, r);
            for (const auto& b : base) out.push_back({sign_split(b, nb), "sign_split"});
        }
        // Every assignment of grid points to bands.
        std::vector<std::pair<ExtBound, ExtBound>> all_bands;
        if (auto p = G.get_if<Punctured>()) {
            all_bands.emplace_back(ExtBound::neg_inf(), p->g);
            all_bands.emplace_back(p->g, ExtBound::pos_inf());
        } else {
            for (const auto& sl : G.get_if<SlicedUnion>()->slices) all_bands.emplace_back(sl.lo, sl.hi);
        }
        std::size_t k = all_bands.size(), total = 1;
        for (std::uint32_t i = 0; i < n && total <= kBandCap; ++i) total *= k;
        if (total <= kBandCap)
            for (std::size_t code = 0; code < total; ++code) {
                std::size_t rest = code;
                std::vector<Breakpoint> bp;
                for (const Rat& p : pts) {
                    const auto& [lo, hi] = all_bands[rest % k];
                    bp.push_back({p, band_representative(lo, hi, p)});
                    rest /= k;
                }
                out.push_back({PLFunc::through(d, std::move(bp)), "band"});
            }
    }
    return out;
}

BruteClosure brute_closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U, const ValueLattice& values,
                           std::size_t budget) {
    if (!U.is_grid()) throw PreconditionError("brute force needs a grid universe");
    const auto& pts = U.points();
    const auto& vs = values.values();
    unsigned n = static_cast<unsigned>(pts.size());
    std::size_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (total > budget / vs.size()) throw CapacityError("value lattice enumeration exceeds the budget of " + std::to_string(budget));
        total *= vs.size();
    }
    std::vector<LabelledFunc> witnesses = witness_pool(G, U);

    bool on_grid = lives_on_grid(E_fam, U);
    GridFamily want = on_grid ? GridFamily::of(E_fam, U) : GridFamily(n);
    BruteClosure out{FullFamily{}, GridFamily::full(n), {}, witnesses.size() + total};
    // `make` is only called when the function is needed as an object.
    auto offer = [&](const GridFamily& prof, const std::function<LabelledFunc()>& make) {
        std::optional<LabelledFunc> lf;
        if (on_grid) {
            if (!want.subset_of(prof)) return;
        } else {
            lf = make();
            if (!f_member(G, E_fam, lf->f)) return;
        }
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (out.table.contains(m) && !prof.contains(m)) {
                if (!lf) lf = make();
                out.certificates.emplace(m, *lf);
            }
        out.table = out.table.intersect(prof);
    };
    for (const auto& w : witnesses) offer(grid_profile(G, w.f, U), [&] { return w; });
    std::vector<Rat> fv(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (unsigned i = 0; i < n; ++i) {
            fv[i] = vs[rest % vs.size()];
            rest /= vs.size();
        }
        offer(grid_profile_of_values(G, fv, U), [&] {
            std::vector<Breakpoint> bp;
            for (unsigned i = 0; i < n; ++i) bp.push_back({pts[i], fv[i]});
            return LabelledFunc{PLFunc::through(U.domain(), std::move(bp)), "lattice"};
        });
    }
    out.upper = out.table.to_hfam(U);
    return out;
}

BruteClosure brute_closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U) {
    return brute_closure(G, E_fam, U, default_lattice(G, U));
}

OracleReport oracle_verify(const FamilyDesc& G, const HFam& E_fam, const Universe& grid, const Universe& closure_universe,
                           const ValueLattice& values, std::size_t budget) {
    OracleReport rep{false, GridFamily::of(closure(G, E_fam, closure_universe), grid),
                     brute_closure(G, E_fam, grid, values, budget), ""};
    unsigned n = rep.theorem.size();
    bool sound = rep.theorem.subset_of(rep.brute.table);
    bool equal = rep.theorem == rep.brute.table;
    bool certified = true;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (rep.brute.table.contains(m)) continue;
        auto it = rep.brute.certificates.find(m);
        if (it == rep.brute.certificates.end() || !f_member(G, E_fam, it->second.f) ||
            relation(G, it->second.f, grid.subset(m)))
            certified = false;
    }
    rep.pass = sound && equal && certified;
    if (!sound) rep.detail = "theorem closure is not contained in the brute upper bound";
    else if (!equal) rep.detail = "brute upper bound is strictly larger than the theorem closure";
    else if (!certified) rep.detail = "an excluded set lacks a valid certificate";
    else rep.detail = "ok";
    return rep;
}

}  // namespace resgal
