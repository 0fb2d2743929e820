#include "resgal/family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "resgal/error.hpp"

namespace resgal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_bound(const Domain& d, const ExtBound& b) {
    if (b.finite() && !(b.func().domain() == d)) throw DomainError("bound " + to_string(b) + " lives on another domain");
}

void check_func(const Domain& d, const PLFunc& f) {
    if (!(f.domain() == d)) throw DomainError("function " + to_string(f) + " lives on another domain");
}

// lo < f < hi on E (or <= when !strict).
bool inside_on(const ExtBound& lo, const ExtBound& hi, const PLFunc& f, const RealSet& E, bool strict) {
    return E.subset_of(where_bound_below(lo, f, strict)) && E.subset_of(where_bound_above(hi, f, strict));
}

ValueInterval band_values(const ExtBound& lo, const ExtBound& hi, const Rat& x, bool closed) {
    return {lo.at(x), hi.at(x), closed, closed};
}

// Grid points where f lands in the tagged dense set, as a point set.
RealSet tagged_hits(const SyntheticLeast& s, const PLFunc& f, const RealSet& within) {
    std::vector<Rat> hit;
    for (const Rat& x : s.grid)
        if (within.contains(x) && s.tagging.hits(x, f(x))) hit.push_back(x);
    return RealSet::points(f.domain(), hit);
}

// Abscissae where the arrangement of members can change: breakpoints,
// crossings and ends of coincidence stretches.
std::vector<Rat> arrangement_nodes(const Domain& d, const std::vector<PLFunc>& ms) {
    std::vector<Rat> xs{d.left(), d.right()};
    for (const auto& f : ms) {
        auto fx = f.xs();
        xs.insert(xs.end(), fx.begin(), fx.end());
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            auto e = eq_set(ms[i], ms[j]).endpoints();
            xs.insert(xs.end(), e.begin(), e.end());
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<Rat> with_midpoints(std::vector<Rat> xs) {
    std::size_t n = xs.size();
    for (std::size_t i = 0; i + 1 < n; ++i) xs.push_back(midpoint(xs[i], xs[i + 1]));
    std::sort(xs.begin(), xs.end());
    return xs;
}

// Is there a continuous selection through the union of the graphs that
// follows no single member? Cells between arrangement nodes carry disjoint
// linear pieces, so a selection is a chain of pieces glued at the nodes.
bool finite_complete(const Domain& d, const std::vector<PLFunc>& ms) {
    auto nodes = arrangement_nodes(d, ms);
    std::size_t cells = nodes.size() - 1;
    using Mask = std::uint64_t;
    struct Piece {
        Mask members = 0;
        Rat left, right;
    };
    std::vector<std::vector<Piece>> pieces(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        Rat mid = midpoint(nodes[c], nodes[c + 1]);
        std::map<Rat, std::size_t> by_value;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            Rat v = ms[i](mid);
            auto [it, fresh] = by_value.emplace(v, pieces[c].size());
            if (fresh) pieces[c].push_back({0, ms[i](nodes[c]), ms[i](nodes[c + 1])});
            pieces[c][it->second].members |= Mask{1} << i;
        }
    }
    std::set<std::tuple<std::size_t, std::size_t, Mask>> seen;
    std::function<bool(std::size_t, std::size_t, Mask)> stray = [&](std::size_t c, std::size_t p, Mask alive) {
        if (alive == 0) return true;
        if (c + 1 == cells) return false;
        if (!seen.insert({c, p, alive}).second) return false;
        for (std::size_t q = 0; q < pieces[c + 1].size(); ++q)
            if (pieces[c + 1][q].left == pieces[c][p].right && stray(c + 1, q, alive & pieces[c + 1][q].members))
                return true;
        return false;
    };
    for (std::size_t p = 0; p < pieces[0].size(); ++p)
        if (stray(0, p, pieces[0][p].members)) return false;
    return true;
}

bool finite_sim(const std::vector<PLFunc>& ms, const Point2& a, const Point2& b) {
    return std::any_of(ms.begin(), ms.end(),
                       [&](const PLFunc& h) { return h(a.first) == a.second && h(b.first) == b.second; });
}

bool finite_connected(const Domain& d, const std::vector<PLFunc>& ms) {
    auto xs = with_midpoints(arrangement_nodes(d, ms));
    for (const Rat& x : xs)
        for (const Rat& y : xs) {
            if (x == y) continue;
            for (const auto& f : ms)
                for (const auto& g : ms)
                    if (!finite_sim(ms, {x, f(x)}, {y, g(y)})) return false;
        }
    return true;
}

bool finite_transitive(const Domain& d, const std::vector<PLFunc>& ms) {
    auto xs = with_midpoints(arrangement_nodes(d, ms));
    // Graph points over the test abscissae, deduplicated per abscissa.
    std::vector<std::vector<Point2>> pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::set<Rat> ys;
        for (const auto& f : ms) ys.insert(f(xs[i]));
        for (const Rat& y : ys) pts[i].push_back({xs[i], y});
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            for (const auto& a : pts[i])
                for (const auto& b : pts[j]) {
                    if (!finite_sim(ms, a, b)) continue;
                    for (std::size_t k = 0; k < xs.size(); ++k) {
                        if (k == i || k == j) continue;
                        for (const auto& c : pts[k])
                            if (finite_sim(ms, b, c) && !finite_sim(ms, a, c)) return false;
                    }
                }
        }
    return true;
}

// Distance from p to a nonempty set, +inf encoded as nullopt when empty.
std::optional<Rat> distance_to(const RealSet& E, const Rat& p) {
    std::optional<Rat> best;
    for (const auto& c : E.components()) {
        Rat dist = p < c.lo ? Rat(c.lo - p) : (p > c.hi ? Rat(p - c.hi) : Rat(0));
        if (!best || dist < *best) best = dist;
    }
    return best;
}

PLFunc synthetic_witness(const SyntheticLeast& s, const PLFunc& f, const RealSet& E) {
    const Domain& d = f.domain();
    Rat gap = d.right() - d.left();
    for (std::size_t i = 0; i + 1 < s.grid.size(); ++i) gap = std::min(gap, Rat(s.grid[i + 1] - s.grid[i]));
    PLFunc g = f;
    for (const Rat& p : s.grid) {
        if (E.contains(p) || !s.tagging.hits(p, f(p))) continue;
        Rat r = gap / 2;
        if (auto dist = distance_to(E, p)) r = std::min(r, Rat(*dist / 2));
        // Adding 1/5 leaves both dyadics and dyadic+1/3 shifts.
        g = pl_combine(g, pl_tent(d, p, r, make_rat(1, 5)), CombineOp::Add);
    }
    return g;
}

}  // namespace

FamilyDesc FamilyDesc::singleton(const PLFunc& g) { return FamilyDesc(g.domain(), Singleton{g}); }

FamilyDesc FamilyDesc::order_interval(const Domain& d, ExtBound lo, ExtBound hi) {
    check_bound(d, lo);
    check_bound(d, hi);
    if (lo.kind() == ExtBound::Kind::PosInf || hi.kind() == ExtBound::Kind::NegInf || !bound_less(lo, hi, false, d))
        throw ConstructionError("order interval [" + to_string(lo) + "," + to_string(hi) + "] is empty");
    return FamilyDesc(d, OrderInterval{std::move(lo), std::move(hi)});
}

FamilyDesc FamilyDesc::open_band(const Domain& d, ExtBound lo, ExtBound hi) {
    check_bound(d, lo);
    check_bound(d, hi);
    if (!bound_less(lo, hi, true, d))
        throw ConstructionError("band (" + to_string(lo) + "," + to_string(hi) + ") is empty somewhere");
    return FamilyDesc(d, OpenBand{std::move(lo), std::move(hi)});
}

FamilyDesc FamilyDesc::punctured(const PLFunc& g) { return FamilyDesc(g.domain(), Punctured{g}); }

FamilyDesc FamilyDesc::sliced(const Domain& d, std::vector<Slice> slices) {
    if (slices.empty()) throw ConstructionError("sliced union needs at least one slice");
    for (std::size_t i = 0; i < slices.size(); ++i) {
        const Slice& s = slices[i];
        check_bound(d, s.lo);
        check_bound(d, s.hi);
        if (!bound_less(s.lo, s.hi, true, d))
            throw ConstructionError("slice " + std::to_string(i) + " has an empty band");
        if (i > 0 && !bound_less(slices[i - 1].hi, s.lo, false, d))
            throw ConstructionError("slices " + std::to_string(i - 1) + " and " + std::to_string(i) + " overlap");
    }
    return FamilyDesc(d, SlicedUnion{std::move(slices)});
}

FamilyDesc FamilyDesc::finite(const Domain& d, std::vector<PLFunc> members) {
    if (members.empty()) throw ConstructionError("finite family needs a member; use the empty family");
    if (members.size() > 64) throw CapacityError("finite families hold at most 64 members");
    for (const auto& f : members) check_func(d, f);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return FamilyDesc(d, FiniteFamily{std::move(members)});
}

FamilyDesc FamilyDesc::synthetic(const Universe& grid, HFam target, DenseTagging tagging) {
    if (!grid.is_grid()) throw ConstructionError("synthetic families live on a finite grid");
    if (hfam_is_empty_family(target)) throw ConstructionError("synthetic family needs a nonempty target");
    return FamilyDesc(grid.domain(), SyntheticLeast{grid.points(), std::move(target), tagging});
}

std::string FamilyDesc::kind() const {
    static const char* names[] = {"Empty",     "Full",        "Singleton",    "OrderInterval", "OpenBand",
                                  "Punctured", "SlicedUnion", "FiniteFamily", "SyntheticLeast"};
    return names[v_.index()];
}

bool restricts(const FamilyDesc& G, const PLFunc& f, const RealSet& E) {
    if (!E.is_closed()) throw PreconditionError("restriction needs a closed set, got " + to_string(E));
    return restricts_subsets(G, f, E);
}

// Every variant's rule is a subset test that already holds for all closed
// subsets once it holds on the points and pairs of E, so the same formulas
// decide arbitrary sets.
bool restricts_subsets(const FamilyDesc& G, const PLFunc& f, const RealSet& E) {
    check_func(G.domain(), f);
    if (!(E.domain() == G.domain())) throw DomainError("set " + to_string(E) + " lives on another domain");
    return std::visit(
        overloaded{
            [](const EmptyFam&) { return false; },
            [](const FullFam&) { return true; },
            [&](const Singleton& s) { return E.subset_of(eq_set(f, s.g)); },
            [&](const OrderInterval& o) { return inside_on(o.lo, o.hi, f, E, false); },
            [&](const OpenBand& b) { return inside_on(b.lo, b.hi, f, E, true); },
            [&](const Punctured& p) {
                auto sp = sign_partition(f, p.g);
                return E.subset_of(sp.below) || E.subset_of(sp.above);
            },
            [&](const SlicedUnion& s) {
                return std::any_of(s.slices.begin(), s.slices.end(),
                                   [&](const Slice& sl) { return inside_on(sl.lo, sl.hi, f, E, true); });
            },
            [&](const FiniteFamily& fam) {
                return std::any_of(fam.members.begin(), fam.members.end(),
                                   [&](const PLFunc& g) { return E.subset_of(eq_set(f, g)); });
            },
            [&](const SyntheticLeast& s) { return hfam_contains(s.target, tagged_hits(s, f, E)); },
        },
        G.variant());
}

bool member(const FamilyDesc& G, const PLFunc& f) { return restricts(G, f, RealSet::whole(G.domain())); }

ValueSet value_set(const FamilyDesc& G, const Rat& x) {
    if (!G.domain().contains(x)) throw DomainError("point " + to_string(x) + " outside the domain");
    auto point = [](const Rat& y) { return ValueInterval{ExtRat(y), ExtRat(y), true, true}; };
    return std::visit(
        overloaded{
            [](const EmptyFam&) { return ValueSet::from_intervals({}); },
            [](const FullFam&) { return ValueSet::all(); },
            [&](const Singleton& s) { return ValueSet::from_intervals({point(s.g(x))}); },
            [&](const OrderInterval& o) { return ValueSet::from_intervals({band_values(o.lo, o.hi, x, true)}); },
            [&](const OpenBand& b) { return ValueSet::from_intervals({band_values(b.lo, b.hi, x, false)}); },
            [&](const Punctured& p) { return ValueSet::all().minus(ValueSet::from_intervals({point(p.g(x))})); },
            [&](const SlicedUnion& s) {
                std::vector<ValueInterval> parts;
                for (const auto& sl : s.slices) parts.push_back(band_values(sl.lo, sl.hi, x, false));
                return ValueSet::from_intervals(parts);
            },
            [&](const FiniteFamily& fam) {
                std::vector<ValueInterval> parts;
                for (const auto& g : fam.members) parts.push_back(point(g(x)));
                return ValueSet::from_intervals(parts);
            },
            [&](const SyntheticLeast& s) {
                bool on_grid = std::binary_search(s.grid.begin(), s.grid.end(), x);
                if (!on_grid || hfam_contains(s.target, RealSet::point(G.domain(), x))) return ValueSet::all();
                throw UnsupportedError("value set at " + to_string(x) + " is the complement of a dense set");
            },
        },
        G.variant());
}

PLFunc band_extend(const RealSet& E, const PLFunc& f, const ExtBound& lo, const ExtBound& hi) {
    const Domain& d = f.domain();
    if (!inside_on(lo, hi, f, E, true))
        throw PreconditionError("values leave the band (" + to_string(lo) + "," + to_string(hi) + ") on " +
                                to_string(E));
    if (!lo.finite() && !hi.finite()) return f;

    auto midline = [&](const Rat& t, const Rat& fallback) -> Rat {
        if (lo.finite() && hi.finite()) return midpoint(lo.func()(t), hi.func()(t));
        if (lo.finite()) return lo.func()(t) + 1;
        if (hi.finite()) return hi.func()(t) - 1;
        return fallback;
    };
    auto strictly_inside = [&](const Rat& t, const Rat& y) {
        ExtRat e(y);
        return lo.at(t) < e && e < hi.at(t);
    };
    std::vector<Rat> bxs = bound_xs(lo);
    auto hx = bound_xs(hi);
    bxs.insert(bxs.end(), hx.begin(), hx.end());
    std::sort(bxs.begin(), bxs.end());
    bxs.erase(std::unique(bxs.begin(), bxs.end()), bxs.end());

    std::vector<Breakpoint> out;
    // Fill the gap between a and b (exclusive) where `chord` is the
    // unconstrained candidate; `with_a`/`with_b` add a domain end as a node.
    auto fill_gap = [&](const Rat& a, const Rat& b, const std::function<Rat(const Rat&)>& chord, bool with_a,
                        bool with_b) {
        std::vector<Rat> nodes;
        if (with_a) nodes.push_back(a);
        for (const Rat& t : bxs)
            if (a < t && t < b) nodes.push_back(t);
        if (with_b) nodes.push_back(b);
        for (const Rat& t : nodes) {
            Rat c = chord(t);
            out.push_back({t, strictly_inside(t, c) ? c : midline(t, c)});
        }
    };

    const auto& comps = E.components();
    if (comps.empty()) {
        fill_gap(d.left(), d.right(), [&](const Rat& t) { return f(t); }, true, true);
        return PLFunc::make(std::move(out), d);
    }
    if (d.left() < comps.front().lo) {
        Rat v = f(comps.front().lo);
        fill_gap(d.left(), comps.front().lo, [v](const Rat&) { return v; }, true, false);
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const Interval& c = comps[i];
        out.push_back({c.lo, f(c.lo)});
        for (const auto& bp : f.breakpoints())
            if (c.lo < bp.x && bp.x < c.hi) out.push_back(bp);
        if (c.hi != c.lo) out.push_back({c.hi, f(c.hi)});
        if (i + 1 < comps.size()) {
            Rat a = c.hi, b = comps[i + 1].lo, fa = f(a), fb = f(b);
            fill_gap(a, b, [&](const Rat& t) -> Rat { return fa + (fb - fa) * (t - a) / (b - a); }, false, false);
        }
    }
    if (comps.back().hi < d.right()) {
        Rat v = f(comps.back().hi);
        fill_gap(comps.back().hi, d.right(), [v](const Rat&) { return v; }, false, true);
    }
    return PLFunc::make(std::move(out), d);
}

std::optional<PLFunc> extend_witness(const FamilyDesc& G, const PLFunc& f, const RealSet& E) {
    if (!restricts(G, f, E)) return std::nullopt;
    return std::visit(
        overloaded{
            [](const EmptyFam&) -> std::optional<PLFunc> { return std::nullopt; },
            [&](const FullFam&) -> std::optional<PLFunc> { return f; },
            [&](const Singleton& s) -> std::optional<PLFunc> { return s.g; },
            [&](const OrderInterval& o) -> std::optional<PLFunc> {
                // Clamp f itself into [lo, hi]; it is untouched on E.
                ExtBound c = bound_min(bound_max(f, o.lo), o.hi);
                return c.func();
            },
            [&](const OpenBand& b) -> std::optional<PLFunc> { return band_extend(E, f, b.lo, b.hi); },
            [&](const Punctured& p) -> std::optional<PLFunc> {
                auto sp = sign_partition(f, p.g);
                if (E.subset_of(sp.above)) return band_extend(E, f, p.g, ExtBound::pos_inf());
                return band_extend(E, f, ExtBound::neg_inf(), p.g);
            },
            [&](const SlicedUnion& s) -> std::optional<PLFunc> {
                for (const auto& sl : s.slices)
                    if (inside_on(sl.lo, sl.hi, f, E, true)) return band_extend(E, f, sl.lo, sl.hi);
                return std::nullopt;
            },
            [&](const FiniteFamily& fam) -> std::optional<PLFunc> {
                for (const auto& g : fam.members)
                    if (E.subset_of(eq_set(f, g))) return g;
                return std::nullopt;
            },
            [&](const SyntheticLeast& s) -> std::optional<PLFunc> { return synthetic_witness(s, f, E); },
        },
        G.variant());
}

Predicates predicates(const FamilyDesc& G) {
    const Domain& d = G.domain();
    auto both_infinite = [](const ExtBound& lo, const ExtBound& hi) { return !lo.finite() && !hi.finite(); };
    return std::visit(
        overloaded{
            [](const EmptyFam&) { return Predicates{true, true, false}; },
            [](const FullFam&) { return Predicates{true, true, true}; },
            [](const Singleton&) { return Predicates{true, true, true}; },
            [](const OrderInterval&) { return Predicates{true, true, true}; },
            [&](const OpenBand& b) { return Predicates{true, true, both_infinite(b.lo, b.hi)}; },
            [](const Punctured&) { return Predicates{true, false, false}; },
            [&](const SlicedUnion& s) {
                if (s.slices.size() == 1)
                    return Predicates{true, true, both_infinite(s.slices[0].lo, s.slices[0].hi)};
                return Predicates{true, false, false};
            },
            [&](const FiniteFamily& fam) {
                if (fam.members.size() == 1) return Predicates{true, true, true};
                return Predicates{finite_complete(d, fam.members), finite_connected(d, fam.members), false};
            },
            [](const SyntheticLeast&) -> Predicates {
                throw UnsupportedError("predicates are not decided for synthetic families");
            },
        },
        G.variant());
}

bool sim(const FamilyDesc& G, const Point2& a, const Point2& b) {
    const Domain& d = G.domain();
    if (!d.contains(a.first) || !d.contains(b.first)) throw DomainError("point outside the domain");
    if (auto fam = G.get_if<FiniteFamily>()) return finite_sim(fam->members, a, b);
    if (a.first == b.first)
        return a.second == b.second && restricts(G, PLFunc::constant(d, a.second), RealSet::point(d, a.first));
    auto [p, r] = std::minmax(a, b);
    PLFunc line = PLFunc::through(d, {{p.first, p.second}, {r.first, r.second}});
    std::vector<Rat> xs{a.first, b.first};
    return restricts(G, line, RealSet::points(d, xs));
}

RelationChecks relation_checks(const FamilyDesc& G) {
    if (G.get_if<SyntheticLeast>()) throw UnsupportedError("relation checks are not decided for synthetic families");
    if (auto fam = G.get_if<FiniteFamily>()) {
        // With finitely many members a sequence a_n ∼ b has infinitely many
        // terms on one member through b, which then passes through the limit.
        return {finite_transitive(G.domain(), fam->members), true};
    }
    // Open bands are functionally connected and their union's components are
    // the bands themselves, open in the plane.
    return {true, true};
}

std::string to_string(const FamilyDesc& G) {
    auto band = [](const ExtBound& lo, const ExtBound& hi) { return "(" + to_string(lo) + "," + to_string(hi) + ")"; };
    return std::visit(overloaded{
                          [](const EmptyFam&) { return std::string("empty"); },
                          [](const FullFam&) { return std::string("full"); },
                          [](const Singleton& s) { return "singleton(" + to_string(s.g) + ")"; },
                          [&](const OrderInterval& o) { return "interval" + band(o.lo, o.hi); },
                          [&](const OpenBand& b) { return "band" + band(b.lo, b.hi); },
                          [](const Punctured& p) { return "punctured(" + to_string(p.g) + ")"; },
                          [&](const SlicedUnion& s) {
                              std::string out = "sliced[";
                              for (std::size_t i = 0; i < s.slices.size(); ++i)
                                  out += (i ? "," : "") + std::string("band") + band(s.slices[i].lo, s.slices[i].hi);
                              return out + "]";
                          },
                          [](const FiniteFamily& f) {
                              std::string out = "finite{";
                              for (std::size_t i = 0; i < f.members.size(); ++i)
                                  out += (i ? "," : "") + to_string(f.members[i]);
                              return out + "}";
                          },
                          [](const SyntheticLeast& s) {
                              std::string rules;
                              if (!(s.tagging == DenseTagging{}))
                                  rules = "," + to_string(s.tagging.d0) + "," + to_string(s.tagging.d1);
                              return "synthetic(" + to_string(s.target) + rules + ")";
                          },
                      },
                      G.variant());
}

}  // namespace resgal
