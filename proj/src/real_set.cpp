#include "resgal/real_set.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "resgal/error.hpp"

namespace resgal {

Domain::Domain(Rat left, Rat right) : left_(std::move(left)), right_(std::move(right)) {
    if (!(left_ < right_)) throw ConstructionError("domain needs left < right");
}

bool Interval::contains(const Rat& x) const {
    bool above = x > lo || (lo_closed && x == lo);
    bool below = x < hi || (hi_closed && x == hi);
    return above && below;
}

namespace {

void sort_unique(std::vector<Rat>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// The line cut at sorted distinct critical points into single points and the
// open gaps between them. A bounded cut covers [crit.front(), crit.back()];
// an unbounded one adds the two infinite end gaps.
struct Pieces {
    std::vector<Rat> crit;
    bool unbounded = false;
    std::vector<char> pt;
    std::vector<char> gap;

    std::size_t gap_count() const {
        if (unbounded) return crit.size() + 1;
        return crit.empty() ? 0 : crit.size() - 1;
    }

    Rat gap_sample(std::size_t g) const {
        if (!unbounded) return midpoint(crit[g], crit[g + 1]);
        if (crit.empty()) return Rat(0);
        if (g == 0) return Rat(crit.front() - 1);
        if (g == crit.size()) return Rat(crit.back() + 1);
        return midpoint(crit[g - 1], crit[g]);
    }

    // Gap indices to the left/right of point i; -1 when absent.
    long left_gap(std::size_t i) const {
        if (unbounded) return static_cast<long>(i);
        return i == 0 ? -1 : static_cast<long>(i) - 1;
    }
    long right_gap(std::size_t i) const {
        if (unbounded) return static_cast<long>(i) + 1;
        return i + 1 == crit.size() ? -1 : static_cast<long>(i);
    }

    void fill(const std::function<bool(const Rat&)>& in) {
        pt.assign(crit.size(), 0);
        gap.assign(gap_count(), 0);
        for (std::size_t i = 0; i < crit.size(); ++i) pt[i] = in(crit[i]);
        for (std::size_t g = 0; g < gap.size(); ++g) gap[g] = in(gap_sample(g));
    }

    std::vector<ValueInterval> build() const {
        struct Piece {
            ExtRat lo, hi;
            bool included;
        };
        std::vector<Piece> seq;
        auto gap_piece = [&](std::size_t g) {
            ExtRat lo = ExtRat::neg_inf(), hi = ExtRat::pos_inf();
            if (unbounded) {
                if (g > 0) lo = crit[g - 1];
                if (g < crit.size()) hi = crit[g];
            } else {
                lo = crit[g];
                hi = crit[g + 1];
            }
            seq.push_back({lo, hi, gap[g] != 0});
        };
        if (unbounded) gap_piece(0);
        for (std::size_t i = 0; i < crit.size(); ++i) {
            seq.push_back({crit[i], crit[i], pt[i] != 0});
            long r = right_gap(i);
            if (r >= 0) gap_piece(static_cast<std::size_t>(r));
        }
        std::vector<ValueInterval> out;
        bool open_run = false;
        for (const Piece& p : seq) {
            bool is_point = p.lo == p.hi;
            if (!p.included) {
                open_run = false;
                continue;
            }
            if (!open_run) {
                out.push_back({p.lo, p.hi, is_point, is_point});
                open_run = true;
            } else {
                out.back().hi = p.hi;
                out.back().hi_closed = is_point;
            }
        }
        return out;
    }
};

Pieces bounded_pieces(const Domain& d, std::vector<Rat> crit, const std::function<bool(const Rat&)>& in) {
    crit.push_back(d.left());
    crit.push_back(d.right());
    sort_unique(crit);
    Pieces p;
    p.crit = std::move(crit);
    p.fill(in);
    return p;
}

std::vector<Interval> to_intervals(const std::vector<ValueInterval>& vs) {
    std::vector<Interval> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back({v.lo.value(), v.hi.value(), v.lo_closed, v.hi_closed});
    return out;
}

void check_same_domain(const RealSet& a, const RealSet& b) {
    if (!(a.domain() == b.domain())) throw DomainError("sets live on different domains");
}

}  // namespace

RealSet RealSet::whole(const Domain& d) { return interval(d, d.left(), d.right(), true, true); }

RealSet RealSet::point(const Domain& d, const Rat& p) { return interval(d, p, p, true, true); }

RealSet RealSet::points(const Domain& d, std::span<const Rat> ps) {
    std::vector<Interval> parts;
    for (const Rat& p : ps) parts.push_back({p, p, true, true});
    return from_intervals(d, std::move(parts));
}

RealSet RealSet::interval(const Domain& d, const Rat& lo, const Rat& hi, bool lo_closed, bool hi_closed) {
    return from_intervals(d, {Interval{lo, hi, lo_closed, hi_closed}});
}

RealSet RealSet::from_intervals(const Domain& d, std::vector<Interval> parts) {
    std::vector<Rat> crit;
    for (const Interval& iv : parts) {
        if (iv.lo > iv.hi || (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed)))
            throw ConstructionError("empty or reversed interval");
        if (!d.contains(iv.lo) || !d.contains(iv.hi)) throw DomainError("interval leaves the domain");
        crit.push_back(iv.lo);
        crit.push_back(iv.hi);
    }
    auto in = [&](const Rat& x) {
        return std::any_of(parts.begin(), parts.end(), [&](const Interval& iv) { return iv.contains(x); });
    };
    RealSet out(d);
    out.parts_ = to_intervals(bounded_pieces(d, std::move(crit), in).build());
    return out;
}

RealSet RealSet::from_predicate(const Domain& d, std::vector<Rat> cuts,
                                const std::function<bool(const Rat&)>& in) {
    for (const Rat& c : cuts)
        if (!d.contains(c)) throw DomainError("cut point outside the domain");
    RealSet out(d);
    out.parts_ = to_intervals(bounded_pieces(d, std::move(cuts), in).build());
    return out;
}

bool RealSet::contains(const Rat& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& iv) { return iv.contains(x); });
}

bool RealSet::subset_of(const RealSet& other) const { return minus(other).empty(); }

bool RealSet::intersects(const RealSet& other) const { return !intersect(other).empty(); }

bool RealSet::is_finite() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const Interval& iv) { return iv.is_point(); });
}

std::vector<Rat> RealSet::as_points() const {
    std::vector<Rat> out;
    for (const Interval& iv : parts_) {
        if (!iv.is_point()) throw PreconditionError("set is not finite");
        out.push_back(iv.lo);
    }
    return out;
}

std::vector<Rat> RealSet::endpoints() const {
    std::vector<Rat> out;
    for (const Interval& iv : parts_) {
        out.push_back(iv.lo);
        out.push_back(iv.hi);
    }
    sort_unique(out);
    return out;
}

RealSet set_algebra(const RealSet& a, const RealSet& b, SetOp op) {
    check_same_domain(a, b);
    std::vector<Rat> crit = a.endpoints();
    auto eb = b.endpoints();
    crit.insert(crit.end(), eb.begin(), eb.end());
    auto in = [&](const Rat& x) {
        bool ia = a.contains(x), ib = b.contains(x);
        switch (op) {
            case SetOp::Union: return ia || ib;
            case SetOp::Intersect: return ia && ib;
            default: return ia && !ib;
        }
    };
    std::vector<Interval> parts = to_intervals(bounded_pieces(a.domain(), std::move(crit), in).build());
    return RealSet::from_intervals(a.domain(), std::move(parts));
}

RealSet RealSet::unite(const RealSet& o) const { return set_algebra(*this, o, SetOp::Union); }
RealSet RealSet::intersect(const RealSet& o) const { return set_algebra(*this, o, SetOp::Intersect); }
RealSet RealSet::minus(const RealSet& o) const { return set_algebra(*this, o, SetOp::Diff); }
RealSet RealSet::complement() const { return whole(domain_).minus(*this); }

RealSet RealSet::closure() const {
    Pieces p = bounded_pieces(domain_, endpoints(), [&](const Rat& x) { return contains(x); });
    for (std::size_t i = 0; i < p.crit.size(); ++i) {
        long l = p.left_gap(i), r = p.right_gap(i);
        if ((l >= 0 && p.gap[l]) || (r >= 0 && p.gap[r])) p.pt[i] = 1;
    }
    RealSet out(domain_);
    out.parts_ = to_intervals(p.build());
    return out;
}

RealSet RealSet::interior() const {
    Pieces p = bounded_pieces(domain_, endpoints(), [&](const Rat& x) { return contains(x); });
    for (std::size_t i = 0; i < p.crit.size(); ++i) {
        long l = p.left_gap(i), r = p.right_gap(i);
        // Domain endpoints only need their inner side.
        if ((l >= 0 && !p.gap[l]) || (r >= 0 && !p.gap[r])) p.pt[i] = 0;
    }
    RealSet out(domain_);
    out.parts_ = to_intervals(p.build());
    return out;
}

bool RealSet::is_regular_open() const {
    if (!is_open()) return false;
    RealSet ends = RealSet::points(domain_, std::vector<Rat>{domain_.left(), domain_.right()});
    return closure().interior().minus(ends) == minus(ends);
}

bool operator<(const RealSet& a, const RealSet& b) {
    auto key = [](const Interval& iv) { return std::make_tuple(iv.lo, !iv.lo_closed, iv.hi, iv.hi_closed); };
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                        [&](const Interval& x, const Interval& y) { return key(x) < key(y); });
}

RealSet topo(const RealSet& a, TopoOp op) {
    switch (op) {
        case TopoOp::Closure: return a.closure();
        case TopoOp::Interior: return a.interior();
        default: return a.complement();
    }
}

Classification classify(const RealSet& a) { return {a.is_closed(), a.is_open(), a.is_regular_open()}; }

bool separated(const RealSet& a, const RealSet& b) {
    return !a.closure().intersects(b) && !a.intersects(b.closure());
}

bool family_separated(std::span<const RealSet> sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!(sets[i] == sets[j]) && !separated(sets[i], sets[j])) return false;
    return true;
}

std::string to_string(const RealSet& s) {
    if (s.empty()) return "{}";
    std::string out;
    const auto& parts = s.components();
    for (std::size_t i = 0; i < parts.size();) {
        if (!out.empty()) out += " | ";
        if (parts[i].is_point()) {
            out += "{";
            bool first = true;
            for (; i < parts.size() && parts[i].is_point(); ++i) {
                if (!first) out += ",";
                out += to_string(parts[i].lo);
                first = false;
            }
            out += "}";
            continue;
        }
        const Interval& iv = parts[i++];
        out += iv.lo_closed ? "[" : "(";
        out += to_string(iv.lo) + "," + to_string(iv.hi);
        out += iv.hi_closed ? "]" : ")";
    }
    return out;
}

bool ValueInterval::contains(const Rat& y) const {
    ExtRat e(y);
    bool above = e > lo || (lo_closed && e == lo);
    bool below = e < hi || (hi_closed && e == hi);
    return above && below;
}

namespace {

ValueSet value_sweep(std::vector<Rat> crit, const std::function<bool(const Rat&)>& in) {
    sort_unique(crit);
    Pieces p;
    p.crit = std::move(crit);
    p.unbounded = true;
    p.fill(in);
    return ValueSet::from_intervals(p.build());
}

std::vector<Rat> finite_ends(const std::vector<ValueInterval>& parts) {
    std::vector<Rat> crit;
    for (const auto& v : parts) {
        if (v.lo.finite()) crit.push_back(v.lo.value());
        if (v.hi.finite()) crit.push_back(v.hi.value());
    }
    return crit;
}

}  // namespace

ValueSet ValueSet::all() {
    ValueSet s;
    s.parts_.push_back({ExtRat::neg_inf(), ExtRat::pos_inf(), false, false});
    return s;
}

ValueSet ValueSet::from_intervals(std::vector<ValueInterval> parts) {
    for (auto& v : parts) {
        if (v.lo > v.hi || (v.lo == v.hi && !(v.lo_closed && v.hi_closed)))
            throw ConstructionError("empty or reversed value interval");
        if (!v.lo.finite()) v.lo_closed = false;
        if (!v.hi.finite()) v.hi_closed = false;
    }
    std::vector<Rat> crit = finite_ends(parts);
    sort_unique(crit);
    Pieces p;
    p.crit = std::move(crit);
    p.unbounded = true;
    p.fill([&](const Rat& y) {
        return std::any_of(parts.begin(), parts.end(), [&](const ValueInterval& v) { return v.contains(y); });
    });
    ValueSet s;
    s.parts_ = p.build();
    return s;
}

bool ValueSet::is_all() const { return *this == all(); }

bool ValueSet::contains(const Rat& y) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const ValueInterval& v) { return v.contains(y); });
}

ValueSet ValueSet::unite(const ValueSet& o) const {
    std::vector<Rat> crit = finite_ends(parts_);
    auto more = finite_ends(o.parts_);
    crit.insert(crit.end(), more.begin(), more.end());
    return value_sweep(std::move(crit), [&](const Rat& y) { return contains(y) || o.contains(y); });
}

ValueSet ValueSet::minus(const ValueSet& o) const {
    std::vector<Rat> crit = finite_ends(parts_);
    auto more = finite_ends(o.parts_);
    crit.insert(crit.end(), more.begin(), more.end());
    return value_sweep(std::move(crit), [&](const Rat& y) { return contains(y) && !o.contains(y); });
}

std::string to_string(const ValueSet& s) {
    if (s.empty()) return "{}";
    std::string out;
    for (const auto& v : s.components()) {
        if (!out.empty()) out += " | ";
        if (v.lo == v.hi) {
            out += "{" + to_string(v.lo) + "}";
            continue;
        }
        out += v.lo_closed ? "[" : "(";
        out += to_string(v.lo) + "," + to_string(v.hi);
        out += v.hi_closed ? "]" : ")";
    }
    return out;
}

}  // namespace resgal
