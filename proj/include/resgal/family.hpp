#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "resgal/dense.hpp"
#include "resgal/hfam.hpp"
#include "resgal/pl_func.hpp"
#include "resgal/real_set.hpp"

namespace resgal {

struct EmptyFam {};
struct FullFam {};
struct Singleton {
    PLFunc g;
};
// [lo, hi]
struct OrderInterval {
    ExtBound lo, hi;
};
// (lo, hi)
struct OpenBand {
    ExtBound lo, hi;
};
// (-inf, g) ∪ (g, +inf)
struct Punctured {
    PLFunc g;
};
// One open band of a sliced system; h_minus/h_plus are filled in by
// sliced_normalize.
struct Slice {
    ExtBound lo, hi;
    std::optional<ExtBound> h_minus, h_plus;
};
struct SlicedUnion {
    std::vector<Slice> slices;  // band i lies pointwise below band i+1
};
struct FiniteFamily {
    std::vector<PLFunc> members;  // sorted, distinct
};
// g is a member iff the grid points x where g(x) ∈ D_{tag(x)} form a set in
// the target downset.
struct SyntheticLeast {
    std::vector<Rat> grid;
    HFam target;
    DenseTagging tagging;
};

using FamilyVariant = std::variant<EmptyFam, FullFam, Singleton, OrderInterval, OpenBand, Punctured, SlicedUnion,
                                   FiniteFamily, SyntheticLeast>;

// A family G ⊆ C(R,R) on a fixed domain. The factories validate and throw
// ConstructionError on empty or ill-ordered bands.
class FamilyDesc {
public:
    static FamilyDesc empty(const Domain& d) { return FamilyDesc(d, EmptyFam{}); }
    static FamilyDesc full(const Domain& d) { return FamilyDesc(d, FullFam{}); }
    static FamilyDesc singleton(const PLFunc& g);
    static FamilyDesc order_interval(const Domain& d, ExtBound lo, ExtBound hi);
    static FamilyDesc open_band(const Domain& d, ExtBound lo, ExtBound hi);
    static FamilyDesc punctured(const PLFunc& g);
    static FamilyDesc sliced(const Domain& d, std::vector<Slice> slices);
    static FamilyDesc finite(const Domain& d, std::vector<PLFunc> members);
    static FamilyDesc synthetic(const Universe& grid, HFam target, DenseTagging tagging = {});

    const Domain& domain() const { return domain_; }
    const FamilyVariant& variant() const { return v_; }
    template <class T>
    const T* get_if() const { return std::get_if<T>(&v_); }
    std::string kind() const;

private:
    FamilyDesc(Domain d, FamilyVariant v) : domain_(std::move(d)), v_(std::move(v)) {}
    Domain domain_;
    FamilyVariant v_;
};

bool member(const FamilyDesc& G, const PLFunc& f);

// G[x]. Throws UnsupportedError for SyntheticLeast at a grid point whose
// singleton is excluded (the value set is then not a finite union).
ValueSet value_set(const FamilyDesc& G, const Rat& x);

// (f, E) ∈ R_G: some g ∈ G agrees with f on the closed set E.
bool restricts(const FamilyDesc& G, const PLFunc& f, const RealSet& E);
// Every closed subset of X is restricted to; X need not be closed.
bool restricts_subsets(const FamilyDesc& G, const PLFunc& f, const RealSet& X);

// A member g with g = f on E, or nullopt when restricts is false.
std::optional<PLFunc> extend_witness(const FamilyDesc& G, const PLFunc& f, const RealSet& E);

struct Predicates {
    bool complete = false;
    bool connected = false;
    bool order_interval = false;
};
Predicates predicates(const FamilyDesc& G);

using Point2 = std::pair<Rat, Rat>;
// a ∼ b: a single member passes through both points.
bool sim(const FamilyDesc& G, const Point2& a, const Point2& b);

struct RelationChecks {
    bool transitive = false;
    bool sequential = false;
};
RelationChecks relation_checks(const FamilyDesc& G);

// Refined-grid band extension: g = f on E and lo < g < hi everywhere.
// Requires lo < f < hi on E (PreconditionError otherwise).
PLFunc band_extend(const RealSet& E, const PLFunc& f, const ExtBound& lo, const ExtBound& hi);

std::string to_string(const FamilyDesc& G);

}  // namespace resgal
