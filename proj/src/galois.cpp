#include "resgal/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include <json.hpp>

#include "resgal/error.hpp"

namespace resgal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kPoolCap = std::size_t{1} << 16;
constexpr std::size_t kAssignmentCap = std::size_t{1} << 20;

struct UnionFind {
    std::vector<std::size_t> up;
    explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    std::size_t find(std::size_t a) { return up[a] == a ? a : up[a] = find(up[a]); }
    void join(std::size_t a, std::size_t b) { up[find(a)] = find(b); }
};

RealSet grid_set(const Universe& U) { return RealSet::points(U.domain(), U.points()); }

// Parts of E_fam, cut down to the grid when U is one.
std::vector<RealSet> parts_in(const HFam& E_fam, const Universe& U) {
    auto parts = hfam_parts(E_fam, U.domain());
    if (U.is_grid()) {
        RealSet g = grid_set(U);
        for (auto& p : parts) p = p.intersect(g);
    }
    return parts;
}

RealSet union_of(const std::vector<RealSet>& parts, const Domain& d) {
    RealSet u(d);
    for (const auto& p : parts) u = u.unite(p);
    return u;
}

// On a grid every family is reported as an explicit downset of its maximal
// sets, except separated unions which keep their part structure.
HFam canonical_on(HFam h, const Universe& U) {
    if (!U.is_grid()) return h;
    if (auto a = std::get_if<AllClosedSubsetsOf>(&h)) return ExplicitDownset{{a->set}};
    return h;
}

std::vector<std::pair<ExtBound, ExtBound>> bands_of(const FamilyDesc& G) {
    std::vector<std::pair<ExtBound, ExtBound>> out;
    if (auto p = G.get_if<Punctured>()) {
        out.emplace_back(ExtBound::neg_inf(), p->g);
        out.emplace_back(p->g, ExtBound::pos_inf());
    } else if (auto s = G.get_if<SlicedUnion>()) {
        for (const auto& sl : s->slices) out.emplace_back(sl.lo, sl.hi);
    }
    return out;
}

// Band i (below) and band j (above) can meet at z: the closures of two
// regions assigned to them share z, so f(z) is the common limit value.
bool bands_meet(const std::vector<std::pair<ExtBound, ExtBound>>& bands, std::size_t i, std::size_t j,
                const std::vector<Rat>& zs) {
    if (i == j) return true;
    if (i > j) std::swap(i, j);
    const ExtBound& top = bands[i].second;
    const ExtBound& bottom = bands[j].first;
    if (!top.finite() || !bottom.finite()) return false;
    return std::all_of(zs.begin(), zs.end(), [&](const Rat& z) { return top.func()(z) == bottom.func()(z); });
}

// Closure for a union of at least two disjoint open bands. Parts that are not
// separated must share a band; groups that touch only at boundary points
// must share a band unless two adjacent bands meet there. Groups that get
// the same band under every feasible assignment are merged.
HFam sliced_closure(const FamilyDesc& G, const std::vector<RealSet>& all_parts, const Domain& d) {
    auto bands = bands_of(G);
    std::vector<RealSet> parts;
    for (const auto& p : all_parts)
        if (!p.empty()) parts.push_back(p);
    if (parts.empty()) return hfam_from_parts({RealSet(d)}, d);

    UnionFind uf(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!separated(parts[i], parts[j])) uf.join(i, j);
    std::map<std::size_t, RealSet> by_root;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto [it, fresh] = by_root.emplace(uf.find(i), parts[i]);
        if (!fresh) it->second = it->second.unite(parts[i]);
    }
    std::vector<RealSet> groups;
    for (auto& [r, s] : by_root) groups.push_back(s);

    std::size_t m = groups.size();
    std::vector<std::vector<std::vector<Rat>>> contact(m, std::vector<std::vector<Rat>>(m));
    UnionFind touching(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            auto z = groups[a].closure().intersect(groups[b].closure());
            if (z.empty()) continue;
            contact[a][b] = contact[b][a] = z.as_points();
            touching.join(a, b);
        }

    UnionFind forced(m);
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t a = 0; a < m; ++a) comps[touching.find(a)].push_back(a);
    std::size_t k = bands.size();
    for (const auto& [root, members] : comps) {
        if (members.size() < 2) continue;
        std::size_t count = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (count > kAssignmentCap / k) throw CapacityError("too many band assignments to enumerate");
            count *= k;
        }
        std::size_t c = members.size();
        std::vector<std::vector<char>> may_differ(c, std::vector<char>(c, 0));
        std::vector<std::size_t> sigma(c, 0);
        for (std::size_t code = 0; code < count; ++code) {
            std::size_t rest = code;
            for (auto& s : sigma) {
                s = rest % k;
                rest /= k;
            }
            bool ok = true;
            for (std::size_t x = 0; x < c && ok; ++x)
                for (std::size_t y = x + 1; y < c && ok; ++y) {
                    const auto& zs = contact[members[x]][members[y]];
                    if (!zs.empty() && !bands_meet(bands, sigma[x], sigma[y], zs)) ok = false;
                }
            if (!ok) continue;
            for (std::size_t x = 0; x < c; ++x)
                for (std::size_t y = 0; y < c; ++y)
                    if (sigma[x] != sigma[y]) may_differ[x][y] = 1;
        }
        for (std::size_t x = 0; x < c; ++x)
            for (std::size_t y = x + 1; y < c; ++y)
                if (!may_differ[x][y]) forced.join(members[x], members[y]);
    }
    std::map<std::size_t, RealSet> merged;
    for (std::size_t a = 0; a < m; ++a) {
        auto [it, fresh] = merged.emplace(forced.find(a), groups[a]);
        if (!fresh) it->second = it->second.unite(groups[a]);
    }
    std::vector<RealSet> out;
    for (auto& [r, s] : merged) out.push_back(s);
    return hfam_from_parts(out, d);
}

// Per-function parts X with E_G({f}) = CL ∩ ⋃ P(X).
std::vector<RealSet> single_parts(const FamilyDesc& G, const PLFunc& f) {
    const Domain& d = G.domain();
    return std::visit(
        overloaded{
            [&](const EmptyFam&) { return std::vector<RealSet>{}; },
            [&](const FullFam&) { return std::vector<RealSet>{RealSet::whole(d)}; },
            [&](const Singleton& s) { return std::vector<RealSet>{eq_set(f, s.g)}; },
            [&](const OrderInterval& o) {
                return std::vector<RealSet>{where_bound_below(o.lo, f, false).intersect(where_bound_above(o.hi, f, false))};
            },
            [&](const OpenBand& b) {
                return std::vector<RealSet>{where_bound_below(b.lo, f, true).intersect(where_bound_above(b.hi, f, true))};
            },
            [&](const Punctured& p) {
                auto sp = sign_partition(f, p.g);
                return std::vector<RealSet>{sp.below, sp.above};
            },
            [&](const SlicedUnion& s) {
                std::vector<RealSet> out;
                for (const auto& sl : s.slices)
                    out.push_back(where_bound_below(sl.lo, f, true).intersect(where_bound_above(sl.hi, f, true)));
                return out;
            },
            [&](const FiniteFamily& fam) {
                std::vector<RealSet> out;
                for (const auto& g : fam.members) out.push_back(eq_set(f, g));
                return out;
            },
            [&](const SyntheticLeast&) -> std::vector<RealSet> {
                throw UnsupportedError("SyntheticLeast: E_G is only computed over a grid");
            },
        },
        G.variant());
}

bool pattern_variant(const FamilyDesc& G) { return G.get_if<FiniteFamily>() || G.get_if<SyntheticLeast>(); }

// E_G of the pool functions that lie in F_G(E_fam). Over a grid, f_member is
// containment of E_fam's table in f's profile.
HFam pool_closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U) {
    GridFamily want = GridFamily::of(E_fam, U);
    GridFamily acc = GridFamily::full(static_cast<unsigned>(U.points().size()));
    bool any = false;
    for (const auto& f : pattern_pool(G, U)) {
        GridFamily p = grid_profile(G, f, U);
        if (!want.subset_of(p)) continue;
        acc = acc.intersect(p);
        any = true;
    }
    return any ? acc.to_hfam(U) : HFam{FullFamily{}};
}

// On a finite set every variant restricts iff one "option" (a member, a
// band, a side of the puncture) holds at each point, so a grid profile only
// needs, per point, the mask of options that hold there.
std::optional<GridFamily> value_profile(const FamilyDesc& G, const std::vector<Rat>& fv, const Universe& U) {
    const auto& pts = U.points();
    unsigned n = static_cast<unsigned>(pts.size());
    if (fv.size() != n) throw PreconditionError("one value per grid point expected");
    GridFamily out(n);
    if (auto syn = G.get_if<SyntheticLeast>()) {
        std::uint32_t hits = 0;
        for (unsigned k = 0; k < n; ++k)
            if (syn->tagging.hits(pts[k], fv[k])) hits |= 1u << k;
        for (std::uint32_t m = 0; m < (1u << n); ++m) out.set(m, hfam_contains(syn->target, U.subset(m & hits)));
        return out;
    }
    auto inside = [](const ExtBound& lo, const ExtBound& hi, const Rat& x, const Rat& y, bool strict) {
        ExtRat e(y);
        return strict ? lo.at(x) < e && e < hi.at(x) : lo.at(x) <= e && e <= hi.at(x);
    };
    std::size_t options = 1;
    std::vector<std::uint64_t> at(n, 0);
    for (unsigned k = 0; k < n; ++k) {
        const Rat& x = pts[k];
        const Rat& y = fv[k];
        std::uint64_t bits = 0;
        std::visit(overloaded{
                       [&](const EmptyFam&) { options = 0; },
                       [&](const FullFam&) { bits = 1; },
                       [&](const Singleton& s) { bits = s.g(x) == y; },
                       [&](const OrderInterval& o) { bits = inside(o.lo, o.hi, x, y, false); },
                       [&](const OpenBand& b) { bits = inside(b.lo, b.hi, x, y, true); },
                       [&](const Punctured& p) {
                           options = 2;
                           Rat g = p.g(x);
                           bits = y < g ? 1u : (y > g ? 2u : 0u);
                       },
                       [&](const SlicedUnion& sl) {
                           options = sl.slices.size();
                           for (std::size_t i = 0; i < options; ++i)
                               if (inside(sl.slices[i].lo, sl.slices[i].hi, x, y, true)) bits |= std::uint64_t{1} << i;
                       },
                       [&](const FiniteFamily& fam) {
                           options = fam.members.size();
                           for (std::size_t i = 0; i < options; ++i)
                               if (fam.members[i](x) == y) bits |= std::uint64_t{1} << i;
                       },
                       [](const SyntheticLeast&) {},
                   },
                   G.variant());
        at[k] = bits;
    }
    if (options > 64) return std::nullopt;
    std::uint64_t all = options == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << options) - 1;
    std::vector<std::uint64_t> agree(std::size_t{1} << n, 0);
    agree[0] = all;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        agree[m] = agree[m & (m - 1)] & at[static_cast<unsigned>(__builtin_ctz(m))];
    for (std::uint32_t m = 0; m < (1u << n); ++m) out.set(m, agree[m] != 0);
    return out;
}

}  // namespace

GridFamily grid_profile_by_restriction(const FamilyDesc& G, const PLFunc& f, const Universe& U) {
    unsigned n = static_cast<unsigned>(U.points().size());
    GridFamily out(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool below_ok = true;
        for (unsigned i = 0; i < n && below_ok; ++i)
            if ((m >> i & 1u) && !out.contains(m & ~(1u << i))) below_ok = false;
        // Restriction is hereditary, so one excluded subset settles m.
        if (m == 0 || below_ok) out.set(m, restricts(G, f, U.subset(m)));
    }
    return out;
}

namespace {

PLFunc abs_around(const Domain& d, const Rat& a) {
    if (!d.contains(a)) throw DomainError("apex " + to_string(a) + " outside the domain");
    std::vector<Breakpoint> pts{{d.left(), a - d.left()}};
    if (d.left() < a && a < d.right()) pts.push_back({a, Rat(0)});
    pts.push_back({d.right(), d.right() - a});
    return PLFunc::make(std::move(pts), d);
}

// min(dist(x, S), 1), with dist to the empty set read as +inf.
Rat capped_distance(const RealSet& S, const Rat& x) {
    Rat best(1);
    for (const auto& c : S.components()) {
        Rat dist = x < c.lo ? Rat(c.lo - x) : (x > c.hi ? Rat(x - c.hi) : Rat(0));
        best = std::min(best, dist);
    }
    return best;
}

}  // namespace

bool relation(const FamilyDesc& G, const PLFunc& f, const RealSet& E) { return restricts(G, f, E); }

GridFamily grid_profile(const FamilyDesc& G, const PLFunc& f, const Universe& U) {
    if (!(f.domain() == U.domain())) throw DomainError("function " + to_string(f) + " lives on another domain");
    std::vector<Rat> fv;
    for (const Rat& p : U.points()) fv.push_back(f(p));
    if (auto fast = value_profile(G, fv, U)) return *fast;
    return grid_profile_by_restriction(G, f, U);
}

GridFamily grid_profile_of_values(const FamilyDesc& G, const std::vector<Rat>& values, const Universe& U) {
    if (auto fast = value_profile(G, values, U)) return *fast;
    std::vector<Breakpoint> bp;
    for (std::size_t i = 0; i < values.size(); ++i) bp.push_back({U.points()[i], values[i]});
    return grid_profile_by_restriction(G, PLFunc::through(U.domain(), std::move(bp)), U);
}

HFam e_of(const FamilyDesc& G, const std::vector<PLFunc>& F, const Universe& U) {
    if (F.empty()) return FullFamily{};
    const Domain& d = U.domain();
    if (U.is_grid()) {
        GridFamily acc = GridFamily::full(static_cast<unsigned>(U.points().size()));
        for (const auto& f : F) acc = acc.intersect(grid_profile(G, f, U));
        return acc.to_hfam(U);
    }
    std::vector<RealSet> acc{RealSet::whole(d)};
    for (const auto& f : F) {
        auto mine = single_parts(G, f);
        std::vector<RealSet> next;
        for (const auto& a : acc)
            for (const auto& b : mine) next.push_back(a.intersect(b));
        acc = hfam_parts(hfam_from_parts(std::move(next), d), d);
        if (acc.empty()) return EmptyFamily{};
    }
    return hfam_from_parts(std::move(acc), d);
}

bool f_member(const FamilyDesc& G, const HFam& E_fam, const PLFunc& f) {
    for (const auto& X : hfam_parts(E_fam, G.domain()))
        if (!restricts_subsets(G, f, X)) return false;
    return true;
}

HFam closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U) {
    const Domain& d = U.domain();
    if (!(G.domain() == d)) throw DomainError("family and universe live on different domains");
    bool nothing = hfam_is_empty_family(E_fam);
    if (G.get_if<EmptyFam>()) return nothing ? HFam{EmptyFamily{}} : HFam{FullFamily{}};
    if (G.get_if<FullFam>()) return FullFamily{};
    if (nothing) return least_element(G, U);
    if (pattern_variant(G)) {
        if (!U.is_grid()) throw UnsupportedError(G.kind() + ": closure is only computed over a grid");
        return pool_closure(G, E_fam, U);
    }
    auto parts = parts_in(E_fam, U);
    RealSet all = union_of(parts, d);
    auto both_infinite = [](const ExtBound& lo, const ExtBound& hi) { return !lo.finite() && !hi.finite(); };

    if (G.get_if<Singleton>()) return canonical_on(hfam_from_parts({all.closure()}, d), U);
    if (auto o = G.get_if<OrderInterval>()) {
        if (both_infinite(o->lo, o->hi)) return FullFamily{};
        return canonical_on(hfam_from_parts({all.closure()}, d), U);
    }
    if (auto b = G.get_if<OpenBand>()) {
        if (both_infinite(b->lo, b->hi)) return FullFamily{};
        return canonical_on(hfam_from_parts({all}, d), U);
    }
    if (auto s = G.get_if<SlicedUnion>(); s && s->slices.size() == 1) {
        if (both_infinite(s->slices[0].lo, s->slices[0].hi)) return FullFamily{};
        return canonical_on(hfam_from_parts({all}, d), U);
    }
    return canonical_on(sliced_closure(G, parts, d), U);
}

HFam least_element(const FamilyDesc& G, const Universe& U) {
    const Domain& d = U.domain();
    HFam just_empty = ExplicitDownset{{RealSet(d)}};
    return std::visit(
        overloaded{
            [&](const EmptyFam&) -> HFam { throw PreconditionError("the empty family has no least element"); },
            [&](const FullFam&) -> HFam { return FullFamily{}; },
            [&](const Singleton&) -> HFam { return just_empty; },
            [&](const OrderInterval& o) -> HFam {
                return !o.lo.finite() && !o.hi.finite() ? HFam{FullFamily{}} : just_empty;
            },
            [&](const OpenBand& b) -> HFam {
                return !b.lo.finite() && !b.hi.finite() ? HFam{FullFamily{}} : just_empty;
            },
            [&](const Punctured&) -> HFam { return just_empty; },
            [&](const SlicedUnion& s) -> HFam {
                bool whole = s.slices.size() == 1 && !s.slices[0].lo.finite() && !s.slices[0].hi.finite();
                return whole ? HFam{FullFamily{}} : just_empty;
            },
            [&](const FiniteFamily&) -> HFam {
                // Off a grid any nonempty E has a point where f avoids the
                // finitely many member values.
                if (!U.is_grid()) return just_empty;
                return e_of(G, pattern_pool(G, U), U);
            },
            [&](const SyntheticLeast&) -> HFam {
                if (!U.is_grid()) throw UnsupportedError("SyntheticLeast: least element is only computed over a grid");
                return e_of(G, pattern_pool(G, U), U);
            },
        },
        G.variant());
}

// On a grid only the values at grid points matter, and for these two
// variants only which class a value falls in: one of the member values (or
// none), resp. tagged hit or miss. One function per class pattern suffices.
std::vector<PLFunc> pattern_pool(const FamilyDesc& G, const Universe& U) {
    const auto& pts = U.points();
    const Domain& d = U.domain();
    std::vector<std::vector<Rat>> choices;
    if (auto fam = G.get_if<FiniteFamily>()) {
        for (const Rat& p : pts) {
            std::vector<Rat> vs;
            for (const auto& g : fam->members) vs.push_back(g(p));
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            vs.push_back(vs.back() + 1);
            choices.push_back(std::move(vs));
        }
    } else if (auto s = G.get_if<SyntheticLeast>()) {
        for (const Rat& p : pts)
            choices.push_back({dense_pick(s->tagging.rule_at(p), Rat(-1), Rat(1), Rat(0)), make_rat(1, 5)});
    } else {
        throw UnsupportedError(G.kind() + ": no value-pattern pool");
    }
    std::size_t total = 1;
    for (const auto& c : choices) {
        if (total > kPoolCap / c.size()) throw CapacityError("value-pattern pool exceeds 65536 functions");
        total *= c.size();
    }
    std::vector<PLFunc> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        std::vector<Breakpoint> bp;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            bp.push_back({pts[i], choices[i][rest % choices[i].size()]});
            rest /= choices[i].size();
        }
        out.push_back(PLFunc::through(d, std::move(bp)));
    }
    return out;
}

Lattice lattice(const FamilyDesc& G, const Universe& U) {
    if (!U.is_grid()) throw PreconditionError("lattices are enumerated over a grid only");
    unsigned n = static_cast<unsigned>(U.points().size());
    if (n > 5) throw CapacityError("lattice enumeration is limited to grids of 5 points");
    auto downsets = GridFamily::all_downsets(n);

    std::vector<GridFamily> fixed;
    if (pattern_variant(G)) {
        std::vector<GridFamily> profiles;
        for (const auto& f : pattern_pool(G, U)) profiles.push_back(grid_profile(G, f, U));
        for (const auto& D : downsets) {
            GridFamily c = GridFamily::full(n);
            for (const auto& p : profiles)
                if (D.subset_of(p)) c = c.intersect(p);
            if (c == D) fixed.push_back(D);
        }
    } else {
        for (const auto& D : downsets)
            if (GridFamily::of(closure(G, D.to_hfam(U), U), U) == D) fixed.push_back(D);
    }
    std::sort(fixed.begin(), fixed.end(), [](const GridFamily& a, const GridFamily& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });

    Lattice L;
    L.tables = fixed;
    for (const auto& t : fixed) L.elements.push_back(t.to_hfam(U));
    std::size_t k = fixed.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j || !fixed[i].subset_of(fixed[j])) continue;
            bool cover = true;
            for (std::size_t m = 0; m < k && cover; ++m)
                if (m != i && m != j && fixed[i].subset_of(fixed[m]) && fixed[m].subset_of(fixed[j])) cover = false;
            if (cover) L.hasse.emplace_back(i, j);
        }
    std::sort(L.hasse.begin(), L.hasse.end());
    L.least = 0;
    L.greatest = k - 1;
    L.meet_is_intersection = true;
    for (std::size_t i = 0; i < k && L.meet_is_intersection; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (std::find(fixed.begin(), fixed.end(), fixed[i].intersect(fixed[j])) == fixed.end()) {
                L.meet_is_intersection = false;
                break;
            }
    return L;
}

namespace {

nlohmann::ordered_json hfam_to_json(const HFam& h) {
    nlohmann::ordered_json j;
    j["kind"] = hfam_kind(h);
    auto sets = [](const std::vector<RealSet>& v) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& s : v) arr.push_back(to_string(s));
        return arr;
    };
    std::visit(overloaded{
                   [&](const ExplicitDownset& e) { j["maximal"] = sets(e.maximal); },
                   [&](const AllClosedSubsetsOf& a) { j["set"] = to_string(a.set); },
                   [&](const SeparatedUnion& s) { j["parts"] = sets(s.parts); },
                   [](const FullFamily&) {},
                   [](const EmptyFamily&) {},
               },
               h);
    j["text"] = to_string(h);
    return j;
}

}  // namespace

std::string hfam_json(const HFam& h) { return hfam_to_json(h).dump(2); }

std::string lattice_json(const Lattice& L) {
    nlohmann::ordered_json j;
    auto elems = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < L.elements.size(); ++i) {
        nlohmann::ordered_json e;
        e["index"] = i;
        e["sets"] = L.tables[i].count();
        e["family"] = hfam_to_json(L.elements[i]);
        elems.push_back(e);
    }
    j["elements"] = elems;
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : L.hasse) edges.push_back({a, b});
    j["hasse"] = edges;
    j["least"] = L.least;
    j["greatest"] = L.greatest;
    j["meet_is_intersection"] = L.meet_is_intersection;
    return j.dump(2);
}

std::string lattice_dot(const Lattice& L) {
    std::string out = "digraph K {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < L.elements.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + to_string(L.elements[i]) + "\"];\n";
    for (auto [a, b] : L.hasse) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

PLFunc cone(const PLFunc& g, const Rat& a) {
    return pl_combine(g, abs_around(g.domain(), a), CombineOp::Add);
}

PLFunc touch(const PLFunc& g, const Rat& z) { return cone(g, z); }

PLFunc sign_split(const PLFunc& g, const RealSet& U) {
    const Domain& d = g.domain();
    if (!(U.domain() == d)) throw DomainError("set " + to_string(U) + " lives on another domain");
    if (!U.is_regular_open()) throw PreconditionError("sign_split needs a regular open set, got " + to_string(U));
    RealSet outside = U.complement();
    // d(x) = min(dist(x, ∁U), 1) - min(dist(x, U), 1) is linear between
    // endpoints, midpoints of neighbouring endpoints and endpoints ± 1.
    std::vector<Rat> ends = U.endpoints();
    ends.push_back(d.left());
    ends.push_back(d.right());
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Rat> xs = ends;
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) xs.push_back(midpoint(ends[i], ends[i + 1]));
    for (const Rat& e : ends) {
        xs.push_back(e - 1);
        xs.push_back(e + 1);
    }
    std::vector<Rat> nodes;
    for (const Rat& x : xs)
        if (d.contains(x)) nodes.push_back(x);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::vector<Breakpoint> pts;
    for (const Rat& x : nodes) pts.push_back({x, capped_distance(outside, x) - capped_distance(U, x)});
    return pl_combine(g, PLFunc::make(std::move(pts), d), CombineOp::Add);
}

FamilyDesc synthetic_least_family(const Universe& U, const HFam& target, DenseTagging tagging) {
    if (hfam_is_empty_family(target)) throw PreconditionError("target must be a nonempty hereditary family");
    return FamilyDesc::synthetic(U, target, tagging);
}

PLFunc exclusion_witness(const FamilyDesc& G, const RealSet& E) {
    auto s = G.get_if<SyntheticLeast>();
    if (!s) throw PreconditionError("exclusion witnesses exist for synthetic families only");
    std::vector<Breakpoint> pts;
    for (const Rat& x : s->grid) {
        Rat y = E.contains(x) ? dense_pick(s->tagging.rule_at(x), Rat(-1), Rat(1), Rat(0)) : make_rat(1, 5);
        pts.push_back({x, y});
    }
    return PLFunc::through(G.domain(), std::move(pts));
}

// Stage α covers the α-th nonempty grid subset E_α with value y_α. Each
// member g_{α,p} equals y_α on every grid point except p, where a tent lifts
// it to a fresh value. The constant y_α then agrees with some member on E
// exactly when E misses a point of E_α.
FamilyDesc all_hereditary_generator(const Universe& U) {
    const auto& pts = U.points();
    unsigned n = static_cast<unsigned>(pts.size());
    if (n > 3) throw CapacityError("the generator is limited to grids of 3 points");
    const Domain& d = U.domain();
    Rat gap = (d.right() - d.left()) * 3 / 4;
    for (unsigned i = 0; i + 1 < n; ++i) gap = std::min(gap, Rat(pts[i + 1] - pts[i]));
    Rat r = gap / 3;
    long next = 2;
    auto fresh = [&]() -> Rat { return make_rat(1, next++); };
    std::vector<PLFunc> members;
    for (std::uint32_t alpha = 1; alpha < (1u << n); ++alpha) {
        Rat y = fresh();
        for (unsigned i = 0; i < n; ++i) {
            if (!(alpha >> i & 1u)) continue;
            Rat z = fresh();
            members.push_back(pl_combine(PLFunc::constant(d, y), pl_tent(d, pts[i], r, z - y), CombineOp::Add));
        }
    }
    if (members.empty()) members.push_back(PLFunc::constant(d, fresh()));
    return FamilyDesc::finite(d, std::move(members));
}

}  // namespace resgal
