#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "resgal/rational.hpp"

namespace resgal {

// Closed window [left, right] standing in for the real line. Every function
// and set of an instance lives inside one Domain; topology is taken in the
// subspace topology of this window.
class Domain {
public:
    Domain(Rat left, Rat right);

    const Rat& left() const { return left_; }
    const Rat& right() const { return right_; }
    bool contains(const Rat& x) const { return left_ <= x && x <= right_; }

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    Rat left_;
    Rat right_;
};

struct Interval {
    Rat lo;
    Rat hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class SetOp { Union, Intersect, Diff };
enum class TopoOp { Closure, Interior, Complement };

struct Classification {
    bool is_closed = false;
    bool is_open = false;
    bool is_regular_open = false;
};

// A finite union of intervals and points inside a Domain, kept in the unique
// canonical form: sorted, pairwise disjoint, no two components mergeable.
class RealSet {
public:
    explicit RealSet(Domain d) : domain_(std::move(d)) {}

    static RealSet whole(const Domain& d);
    static RealSet point(const Domain& d, const Rat& p);
    static RealSet points(const Domain& d, std::span<const Rat> ps);
    static RealSet interval(const Domain& d, const Rat& lo, const Rat& hi, bool lo_closed, bool hi_closed);
    // Components may overlap or touch; throws DomainError if one leaves the
    // domain and ConstructionError if one is empty or reversed.
    static RealSet from_intervals(const Domain& d, std::vector<Interval> parts);
    // Builds {x : in(x)} for a predicate that is constant on every open gap
    // between consecutive cut points (domain ends are added automatically).
    static RealSet from_predicate(const Domain& d, std::vector<Rat> cuts,
                                  const std::function<bool(const Rat&)>& in);

    const Domain& domain() const { return domain_; }
    const std::vector<Interval>& components() const { return parts_; }

    bool empty() const { return parts_.empty(); }
    bool contains(const Rat& x) const;
    bool subset_of(const RealSet& other) const;
    bool intersects(const RealSet& other) const;
    // True when every component is a single point.
    bool is_finite() const;
    std::vector<Rat> as_points() const;
    // Every endpoint of every component, sorted.
    std::vector<Rat> endpoints() const;

    RealSet unite(const RealSet& o) const;
    RealSet intersect(const RealSet& o) const;
    RealSet minus(const RealSet& o) const;
    RealSet complement() const;
    RealSet closure() const;
    RealSet interior() const;

    bool is_closed() const { return closure() == *this; }
    bool is_open() const { return interior() == *this; }
    // Open, and equal to the interior of its closure away from the two domain
    // ends; at an end the window edge is not treated as a boundary point.
    bool is_regular_open() const;

    friend bool operator==(const RealSet& a, const RealSet& b) {
        return a.domain_ == b.domain_ && a.parts_ == b.parts_;
    }
    // Lexicographic on components; used only for canonical output ordering.
    friend bool operator<(const RealSet& a, const RealSet& b);

private:
    Domain domain_;
    std::vector<Interval> parts_;
};

RealSet set_algebra(const RealSet& a, const RealSet& b, SetOp op);
RealSet topo(const RealSet& a, TopoOp op);
Classification classify(const RealSet& a);

// Topological separation: cl(A)∩B = A∩cl(B) = ∅.
bool separated(const RealSet& a, const RealSet& b);
// Pairwise separation of every two distinct members.
bool family_separated(std::span<const RealSet> sets);

// DSL literal form, e.g. "[0,1) | {2}"; the empty set prints as "{}".
std::string to_string(const RealSet& s);

struct ValueInterval {
    ExtRat lo;
    ExtRat hi;
    bool lo_closed = false;
    bool hi_closed = false;
    bool contains(const Rat& y) const;
    friend bool operator==(const ValueInterval&, const ValueInterval&) = default;
};

// A subset of the value axis: finite union of intervals with possibly
// infinite ends. Canonical in the same sense as RealSet.
class ValueSet {
public:
    ValueSet() = default;
    static ValueSet all();
    static ValueSet from_intervals(std::vector<ValueInterval> parts);

    const std::vector<ValueInterval>& components() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool is_all() const;
    bool contains(const Rat& y) const;

    ValueSet unite(const ValueSet& o) const;
    ValueSet minus(const ValueSet& o) const;

    friend bool operator==(const ValueSet&, const ValueSet&) = default;

private:
    std::vector<ValueInterval> parts_;
};

std::string to_string(const ValueSet& s);

}  // namespace resgal
