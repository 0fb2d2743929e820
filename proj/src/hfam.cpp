#include "resgal/hfam.hpp"

#include <algorithm>
#include <bit>

#include "resgal/error.hpp"

namespace resgal {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

Universe Universe::grid(const Domain& d, std::vector<Rat> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() > 16) throw CapacityError("grid universes hold at most 16 points");
    for (const Rat& p : points)
        if (!d.contains(p)) throw DomainError("grid point " + to_string(p) + " outside the domain");
    return Universe(d, std::move(points));
}

const std::vector<Rat>& Universe::points() const {
    if (!grid_) throw PreconditionError("universe is not a finite grid");
    return *grid_;
}

RealSet Universe::subset(std::uint32_t mask) const {
    const auto& pts = points();
    std::vector<Rat> chosen;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1u) chosen.push_back(pts[i]);
    return RealSet::points(domain_, chosen);
}

std::uint32_t Universe::mask_of(const RealSet& finite) const {
    const auto& pts = points();
    std::uint32_t mask = 0;
    for (const Rat& p : finite.as_points()) {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        if (it == pts.end() || *it != p) throw DomainError("point " + to_string(p) + " is not on the grid");
        mask |= 1u << (it - pts.begin());
    }
    return mask;
}

std::vector<RealSet> hfam_parts(const HFam& h, const Domain& d) {
    return std::visit(overloaded{
                          [](const ExplicitDownset& e) { return e.maximal; },
                          [](const AllClosedSubsetsOf& a) { return std::vector<RealSet>{a.set}; },
                          [](const SeparatedUnion& s) { return s.parts; },
                          [&](const FullFamily&) { return std::vector<RealSet>{RealSet::whole(d)}; },
                          [](const EmptyFamily&) { return std::vector<RealSet>{}; },
                      },
                      h);
}

bool hfam_is_empty_family(const HFam& h) {
    if (std::holds_alternative<EmptyFamily>(h)) return true;
    if (auto* e = std::get_if<ExplicitDownset>(&h)) return e->maximal.empty();
    if (auto* s = std::get_if<SeparatedUnion>(&h)) return s->parts.empty();
    return false;
}

HFam hfam_from_parts(std::vector<RealSet> parts, const Domain& d) {
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<RealSet> kept;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = 0; j < parts.size() && !subsumed; ++j)
            subsumed = i != j && parts[i].subset_of(parts[j]);
        if (!subsumed) kept.push_back(parts[i]);
    }
    if (kept.empty()) return EmptyFamily{};
    if (kept.size() == 1) {
        if (kept.front() == RealSet::whole(d)) return FullFamily{};
        if (kept.front().empty()) return ExplicitDownset{kept};
        return AllClosedSubsetsOf{kept.front()};
    }
    if (family_separated(kept)) return SeparatedUnion{kept};
    return ExplicitDownset{kept};
}

bool hfam_contains(const HFam& h, const RealSet& e) {
    auto any_part = [&](const std::vector<RealSet>& ps) {
        return std::any_of(ps.begin(), ps.end(), [&](const RealSet& p) { return e.subset_of(p); });
    };
    return std::visit(overloaded{
                          [&](const ExplicitDownset& x) { return any_part(x.maximal); },
                          [&](const AllClosedSubsetsOf& a) { return e.subset_of(a.set); },
                          [&](const SeparatedUnion& s) { return any_part(s.parts); },
                          [](const FullFamily&) { return true; },
                          [](const EmptyFamily&) { return false; },
                      },
                      h);
}

std::string hfam_kind(const HFam& h) {
    static const char* names[] = {"ExplicitDownset", "AllClosedSubsetsOf", "SeparatedUnion", "FullFamily",
                                  "EmptyFamily"};
    return names[h.index()];
}

namespace {
std::string join_sets(const std::vector<RealSet>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ",";
        out += to_string(sets[i]);
    }
    return out;
}
}  // namespace

std::string to_string(const HFam& h) {
    return std::visit(overloaded{
                          [](const ExplicitDownset& x) { return "downset{" + join_sets(x.maximal) + "}"; },
                          [](const AllClosedSubsetsOf& a) { return "closed-subsets(" + to_string(a.set) + ")"; },
                          [](const SeparatedUnion& s) { return "separated[" + join_sets(s.parts) + "]"; },
                          [](const FullFamily&) { return std::string("full"); },
                          [](const EmptyFamily&) { return std::string("empty"); },
                      },
                      h);
}

GridFamily GridFamily::full(unsigned n) {
    GridFamily g(n);
    std::fill(g.in_.begin(), g.in_.end(), 1);
    return g;
}

GridFamily GridFamily::of(const HFam& h, const Universe& u) {
    unsigned n = static_cast<unsigned>(u.points().size());
    GridFamily g(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) g.in_[m] = hfam_contains(h, u.subset(m));
    return g;
}

std::vector<GridFamily> GridFamily::all_downsets(unsigned n) {
    if (n > 5) throw CapacityError("downset enumeration is limited to 5 points");
    std::vector<GridFamily> out;
    GridFamily cur(n);
    std::uint32_t total = 1u << n;
    // Masks are decided in increasing order, so every subset of m is settled
    // before m itself.
    auto go = [&](auto&& self, std::uint32_t m) -> void {
        if (m == total) {
            out.push_back(cur);
            return;
        }
        bool allowed = true;
        for (unsigned i = 0; i < n && allowed; ++i)
            if ((m >> i & 1u) && !cur.in_[m & ~(1u << i)]) allowed = false;
        if (m == 0) allowed = true;
        cur.in_[m] = 0;
        self(self, m + 1);
        if (allowed) {
            cur.in_[m] = 1;
            self(self, m + 1);
            cur.in_[m] = 0;
        }
    };
    go(go, 0);
    return out;
}

bool GridFamily::empty() const { return std::none_of(in_.begin(), in_.end(), [](char c) { return c != 0; }); }

bool GridFamily::subset_of(const GridFamily& o) const {
    for (std::size_t m = 0; m < in_.size(); ++m)
        if (in_[m] && !o.in_[m]) return false;
    return true;
}

GridFamily GridFamily::intersect(const GridFamily& o) const {
    GridFamily g(n_);
    for (std::size_t m = 0; m < in_.size(); ++m) g.in_[m] = in_[m] && o.in_[m];
    return g;
}

bool GridFamily::is_downward_closed() const {
    for (std::uint32_t m = 0; m < in_.size(); ++m) {
        if (!in_[m]) continue;
        for (unsigned i = 0; i < n_; ++i)
            if ((m >> i & 1u) && !in_[m & ~(1u << i)]) return false;
    }
    return true;
}

std::vector<std::uint32_t> GridFamily::maximal() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < in_.size(); ++m) {
        if (!in_[m]) continue;
        bool top = true;
        for (unsigned i = 0; i < n_ && top; ++i)
            if (!(m >> i & 1u) && in_[m | (1u << i)]) top = false;
        if (top) out.push_back(m);
    }
    return out;
}

std::size_t GridFamily::count() const {
    return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), 1));
}

HFam GridFamily::to_hfam(const Universe& u) const {
    auto tops = maximal();
    if (tops.empty()) return EmptyFamily{};
    ExplicitDownset e;
    for (std::uint32_t m : tops) e.maximal.push_back(u.subset(m));
    std::sort(e.maximal.begin(), e.maximal.end());
    return e;
}

}  // namespace resgal
