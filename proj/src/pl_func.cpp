#include "resgal/pl_func.hpp"

#include <algorithm>
#include <tuple>

#include "resgal/error.hpp"

namespace resgal {

namespace {

void check_same_domain(const PLFunc& f, const PLFunc& g) {
    if (!(f.domain() == g.domain())) throw DomainError("functions live on different domains");
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Rat> merged_xs(const PLFunc& f, const PLFunc& g) {
    std::vector<Rat> xs = f.xs();
    auto gx = g.xs();
    xs.insert(xs.end(), gx.begin(), gx.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Abscissae where f - g changes sign strictly inside a linear piece.
std::vector<Rat> crossings(const PLFunc& f, const PLFunc& g, const std::vector<Rat>& xs) {
    std::vector<Rat> out;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        Rat d0 = f(xs[i]) - g(xs[i]);
        Rat d1 = f(xs[i + 1]) - g(xs[i + 1]);
        if (sign(d0) * sign(d1) < 0) out.push_back(Rat(xs[i] + d0 * (xs[i + 1] - xs[i]) / (d0 - d1)));
    }
    return out;
}

}  // namespace

PLFunc PLFunc::make(std::vector<Breakpoint> pts, const Domain& d) {
    if (pts.empty()) throw ConstructionError("no breakpoints");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].x < pts[i + 1].x)) throw ConstructionError("breakpoints not increasing");
    if (pts.front().x != d.left() || pts.back().x != d.right())
        throw ConstructionError("breakpoints do not span the domain");
    std::vector<Breakpoint> canon;
    canon.reserve(pts.size());
    for (auto& p : pts) {
        while (canon.size() >= 2 && collinear(canon[canon.size() - 2], canon.back(), p)) canon.pop_back();
        canon.push_back(std::move(p));
    }
    return PLFunc(d, std::move(canon));
}

PLFunc PLFunc::constant(const Domain& d, const Rat& c) { return make({{d.left(), c}, {d.right(), c}}, d); }

PLFunc PLFunc::through(const Domain& d, std::vector<Breakpoint> pts) {
    if (pts.empty()) throw ConstructionError("no points to interpolate");
    if (pts.front().x != d.left()) pts.insert(pts.begin(), {d.left(), pts.front().y});
    if (pts.back().x != d.right()) pts.push_back({d.right(), pts.back().y});
    return make(std::move(pts), d);
}

std::vector<Rat> PLFunc::xs() const {
    std::vector<Rat> out;
    out.reserve(pts_.size());
    for (const auto& p : pts_) out.push_back(p.x);
    return out;
}

Rat PLFunc::operator()(const Rat& x) const {
    if (!domain_.contains(x)) throw DomainError("evaluation point " + to_string(x) + " outside the domain");
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x, [](const Breakpoint& p, const Rat& v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Breakpoint& b = *it;
    const Breakpoint& a = *(it - 1);
    return Rat(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x));
}

bool operator<(const PLFunc& a, const PLFunc& b) {
    auto key = [](const Breakpoint& p) { return std::tie(p.x, p.y); };
    return std::lexicographical_compare(a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
                                        [&](const Breakpoint& p, const Breakpoint& q) { return key(p) < key(q); });
}

Rat pl_eval(const PLFunc& f, const Rat& x) { return f(x); }

PLFunc pl_combine(const PLFunc& f, const PLFunc& g, CombineOp op) {
    check_same_domain(f, g);
    std::vector<Rat> xs = merged_xs(f, g);
    if (op == CombineOp::Min || op == CombineOp::Max) {
        auto cr = crossings(f, g, xs);
        xs.insert(xs.end(), cr.begin(), cr.end());
        std::sort(xs.begin(), xs.end());
    }
    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (const Rat& x : xs) {
        Rat a = f(x), b = g(x);
        Rat y;
        switch (op) {
            case CombineOp::Add: y = a + b; break;
            case CombineOp::Sub: y = a - b; break;
            case CombineOp::Min: y = std::min(a, b); break;
            case CombineOp::Max: y = std::max(a, b); break;
        }
        pts.push_back({x, y});
    }
    return PLFunc::make(std::move(pts), f.domain());
}

PLFunc pl_scale(const PLFunc& f, const Rat& k) {
    std::vector<Breakpoint> pts = f.breakpoints();
    for (auto& p : pts) p.y *= k;
    return PLFunc::make(std::move(pts), f.domain());
}

PLFunc pl_shift(const PLFunc& f, const Rat& c) {
    std::vector<Breakpoint> pts = f.breakpoints();
    for (auto& p : pts) p.y += c;
    return PLFunc::make(std::move(pts), f.domain());
}

SignPartition sign_partition(const PLFunc& f, const PLFunc& g) {
    check_same_domain(f, g);
    std::vector<Rat> xs = merged_xs(f, g);
    auto cr = crossings(f, g, xs);
    xs.insert(xs.end(), cr.begin(), cr.end());
    const Domain& d = f.domain();
    auto side = [&](int s) {
        return RealSet::from_predicate(d, xs, [&](const Rat& x) { return sign(f(x) - g(x)) == s; });
    };
    return {side(-1), side(0), side(1)};
}

RealSet eq_set(const PLFunc& f, const PLFunc& g) { return sign_partition(f, g).equal; }

std::string to_string(const PLFunc& f) {
    std::string out = "pl[";
    bool first = true;
    for (const auto& p : f.breakpoints()) {
        if (!first) out += ",";
        out += "(" + to_string(p.x) + "," + to_string(p.y) + ")";
        first = false;
    }
    return out + "]";
}

const PLFunc& ExtBound::func() const {
    if (!f_) throw PreconditionError("infinite bound has no function");
    return *f_;
}

ExtRat ExtBound::at(const Rat& x) const {
    switch (kind_) {
        case Kind::NegInf: return ExtRat::neg_inf();
        case Kind::PosInf: return ExtRat::pos_inf();
        default: return (*f_)(x);
    }
}

bool operator==(const ExtBound& a, const ExtBound& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || *a.f_ == *b.f_;
}

std::string to_string(const ExtBound& b) {
    switch (b.kind()) {
        case ExtBound::Kind::NegInf: return "-inf";
        case ExtBound::Kind::PosInf: return "+inf";
        default: return to_string(b.func());
    }
}

RealSet where_bound_below(const ExtBound& b, const PLFunc& f, bool strict) {
    const Domain& d = f.domain();
    if (b.kind() == ExtBound::Kind::NegInf) return RealSet::whole(d);
    if (b.kind() == ExtBound::Kind::PosInf) return RealSet(d);
    auto sp = sign_partition(b.func(), f);
    return strict ? sp.below : sp.below.unite(sp.equal);
}

RealSet where_bound_above(const ExtBound& b, const PLFunc& f, bool strict) {
    const Domain& d = f.domain();
    if (b.kind() == ExtBound::Kind::PosInf) return RealSet::whole(d);
    if (b.kind() == ExtBound::Kind::NegInf) return RealSet(d);
    auto sp = sign_partition(b.func(), f);
    return strict ? sp.above : sp.above.unite(sp.equal);
}

bool bound_less(const ExtBound& a, const ExtBound& b, bool strict, const Domain& d) {
    using K = ExtBound::Kind;
    if (a.kind() == K::NegInf) return b.kind() != K::NegInf || !strict;
    if (a.kind() == K::PosInf) return b.kind() == K::PosInf && !strict;
    if (b.kind() == K::NegInf) return false;
    if (b.kind() == K::PosInf) return true;
    auto sp = sign_partition(a.func(), b.func());
    return strict ? sp.below == RealSet::whole(d) : sp.above.empty();
}

std::vector<Rat> bound_xs(const ExtBound& b) {
    if (!b.finite()) return {};
    return b.func().xs();
}

ExtBound bound_min(const ExtBound& a, const ExtBound& b) {
    using K = ExtBound::Kind;
    if (a.kind() == K::NegInf || b.kind() == K::NegInf) return ExtBound::neg_inf();
    if (a.kind() == K::PosInf) return b;
    if (b.kind() == K::PosInf) return a;
    return pl_combine(a.func(), b.func(), CombineOp::Min);
}

ExtBound bound_max(const ExtBound& a, const ExtBound& b) {
    using K = ExtBound::Kind;
    if (a.kind() == K::PosInf || b.kind() == K::PosInf) return ExtBound::pos_inf();
    if (a.kind() == K::NegInf) return b;
    if (b.kind() == K::NegInf) return a;
    return pl_combine(a.func(), b.func(), CombineOp::Max);
}

PLFunc pl_tent(const Domain& d, const Rat& p, const Rat& r, const Rat& h) {
    if (r <= 0) throw PreconditionError("tent radius must be positive");
    if (!d.contains(p)) throw DomainError("tent apex " + to_string(p) + " outside the domain");
    auto height = [&](const Rat& x) -> Rat {
        Rat t = abs(Rat(x - p));
        return t >= r ? Rat(0) : Rat(h * (r - t) / r);
    };
    std::vector<Breakpoint> bp;
    for (Rat x : {d.left(), Rat(p - r), p, Rat(p + r), d.right()}) {
        if (x < d.left() || x > d.right()) continue;
        if (!bp.empty() && bp.back().x == x) continue;
        bp.push_back({x, height(x)});
    }
    if (bp.size() == 1) bp.push_back({d.right(), height(d.right())});
    return PLFunc::make(std::move(bp), d);
}

}  // namespace resgal
