#pragma once

#include <string>
#include <optional>
#include <vector>

#include "resgal/rational.hpp"
#include "resgal/real_set.hpp"

namespace resgal {

struct Breakpoint {
    Rat x;
    Rat y;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous piecewise-linear function on a Domain. Stored in canonical form
// (no collinear interior breakpoints), so == is equality of functions.
class PLFunc {
public:
    // Breakpoints must be strictly increasing in x and span the domain
    // exactly; throws ConstructionError otherwise.
    static PLFunc make(std::vector<Breakpoint> pts, const Domain& d);
    static PLFunc constant(const Domain& d, const Rat& c);
    // Interpolates sorted interior points and continues constantly to the
    // domain ends.
    static PLFunc through(const Domain& d, std::vector<Breakpoint> pts);

    const Domain& domain() const { return domain_; }
    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    std::vector<Rat> xs() const;

    // Throws DomainError outside the domain.
    Rat operator()(const Rat& x) const;

    friend bool operator==(const PLFunc& a, const PLFunc& b) { return a.domain_ == b.domain_ && a.pts_ == b.pts_; }
    friend bool operator<(const PLFunc& a, const PLFunc& b);

private:
    PLFunc(Domain d, std::vector<Breakpoint> pts) : domain_(std::move(d)), pts_(std::move(pts)) {}
    Domain domain_;
    std::vector<Breakpoint> pts_;
};

enum class CombineOp { Add, Sub, Min, Max };

Rat pl_eval(const PLFunc& f, const Rat& x);
PLFunc pl_combine(const PLFunc& f, const PLFunc& g, CombineOp op);
PLFunc pl_scale(const PLFunc& f, const Rat& k);
PLFunc pl_shift(const PLFunc& f, const Rat& c);

struct SignPartition {
    RealSet below;  // f < g
    RealSet equal;
    RealSet above;  // f > g
};

SignPartition sign_partition(const PLFunc& f, const PLFunc& g);
RealSet eq_set(const PLFunc& f, const PLFunc& g);

// "pl[(x1,y1),(x2,y2),...]"
std::string to_string(const PLFunc& f);

// An element of C(R, R*): a finite PL function or one of the two infinite
// constants. Mixed finite/infinite functions are not represented.
class ExtBound {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtBound(PLFunc f) : kind_(Kind::Finite), f_(std::move(f)) {}  // NOLINT(implicit)
    static ExtBound neg_inf() { return ExtBound(Kind::NegInf); }
    static ExtBound pos_inf() { return ExtBound(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const PLFunc& func() const;
    ExtRat at(const Rat& x) const;

    friend bool operator==(const ExtBound& a, const ExtBound& b);

private:
    explicit ExtBound(Kind k) : kind_(k) {}
    Kind kind_;
    std::optional<PLFunc> f_;
};

std::string to_string(const ExtBound& b);

// {x : b(x) < f(x)} and the like, each a RealSet on f's domain.
RealSet where_bound_below(const ExtBound& b, const PLFunc& f, bool strict);
RealSet where_bound_above(const ExtBound& b, const PLFunc& f, bool strict);

// Pointwise a < b (strict) or a <= b over the whole domain. A finite side
// against the matching infinity is always fine; -inf vs -inf is not strict.
bool bound_less(const ExtBound& a, const ExtBound& b, bool strict, const Domain& d);

// Breakpoint abscissae of every finite bound.
std::vector<Rat> bound_xs(const ExtBound& b);

// Pointwise min/max in C(R, R*).
ExtBound bound_min(const ExtBound& a, const ExtBound& b);
ExtBound bound_max(const ExtBound& a, const ExtBound& b);

// Zero outside (p-r, p+r), linear up to height h at p; clipped to the domain.
PLFunc pl_tent(const Domain& d, const Rat& p, const Rat& r, const Rat& h);

}  // namespace resgal
