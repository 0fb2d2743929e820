#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "resgal/real_set.hpp"

namespace resgal {

// Hereditary families of closed sets. Every non-empty variant denotes a
// family of the form CL ∩ ⋃_i P(X_i) for a list of "parts" X_i.
struct ExplicitDownset {
    std::vector<RealSet> maximal;  // ⊆-antichain; over a grid, finite point sets
    friend bool operator==(const ExplicitDownset&, const ExplicitDownset&) = default;
};
struct AllClosedSubsetsOf {
    RealSet set;
    friend bool operator==(const AllClosedSubsetsOf&, const AllClosedSubsetsOf&) = default;
};
struct SeparatedUnion {
    std::vector<RealSet> parts;  // pairwise separated
    friend bool operator==(const SeparatedUnion&, const SeparatedUnion&) = default;
};
struct FullFamily {
    friend bool operator==(FullFamily, FullFamily) { return true; }
};
struct EmptyFamily {
    friend bool operator==(EmptyFamily, EmptyFamily) { return true; }
};

using HFam = std::variant<ExplicitDownset, AllClosedSubsetsOf, SeparatedUnion, FullFamily, EmptyFamily>;

// The closed-set universe a computation quantifies over: all subsets of a
// finite grid, or every closed PL-definable subset of the domain.
class Universe {
public:
    static Universe grid(const Domain& d, std::vector<Rat> points);
    static Universe pl(const Domain& d) { return Universe(d, std::nullopt); }

    const Domain& domain() const { return domain_; }
    bool is_grid() const { return grid_.has_value(); }
    const std::vector<Rat>& points() const;

    // Grid subset encoded by a bitmask over the sorted points.
    RealSet subset(std::uint32_t mask) const;
    std::uint32_t mask_of(const RealSet& finite) const;

private:
    Universe(Domain d, std::optional<std::vector<Rat>> g) : domain_(std::move(d)), grid_(std::move(g)) {}
    Domain domain_;
    std::optional<std::vector<Rat>> grid_;
};

// Parts X_i of the CL ∩ ⋃ P(X_i) form; FullFamily yields the whole domain
// and EmptyFamily no parts at all.
std::vector<RealSet> hfam_parts(const HFam& h, const Domain& d);
bool hfam_is_empty_family(const HFam& h);

// Most specific descriptor for CL ∩ ⋃ P(X_i): subsumed parts are dropped,
// then a single part becomes AllClosedSubsetsOf (or FullFamily for the whole
// domain), pairwise separated parts a SeparatedUnion, anything else an
// ExplicitDownset.
HFam hfam_from_parts(std::vector<RealSet> parts, const Domain& d);

// E must be closed.
bool hfam_contains(const HFam& h, const RealSet& e);

std::string hfam_kind(const HFam& h);
std::string to_string(const HFam& h);

// A hereditary family restricted to the subsets of a grid of n ≤ 16 points,
// stored as membership by bitmask.
class GridFamily {
public:
    explicit GridFamily(unsigned n) : n_(n), in_(std::size_t{1} << n, 0) {}
    static GridFamily full(unsigned n);
    static GridFamily of(const HFam& h, const Universe& u);
    // Every downward-closed family over n points (the empty family included),
    // in depth-first order.
    static std::vector<GridFamily> all_downsets(unsigned n);

    unsigned size() const { return n_; }
    bool contains(std::uint32_t mask) const { return in_[mask] != 0; }
    void set(std::uint32_t mask, bool v = true) { in_[mask] = v; }

    bool empty() const;
    bool subset_of(const GridFamily& o) const;
    GridFamily intersect(const GridFamily& o) const;
    bool is_downward_closed() const;
    std::vector<std::uint32_t> maximal() const;
    std::size_t count() const;

    // ExplicitDownset of the maximal sets; EmptyFamily when nothing is in.
    HFam to_hfam(const Universe& u) const;

    friend bool operator==(const GridFamily&, const GridFamily&) = default;
    friend bool operator<(const GridFamily& a, const GridFamily& b) { return a.in_ < b.in_; }

private:
    unsigned n_;
    std::vector<char> in_;
};

}  // namespace resgal
