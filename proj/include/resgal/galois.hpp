#pragma once

#include <string>
#include <vector>

#include "resgal/family.hpp"
#include "resgal/hfam.hpp"

namespace resgal {

// (f, E) ∈ R_G.
bool relation(const FamilyDesc& G, const PLFunc& f, const RealSet& E);

// E_G(F) = {E in U : (f, E) ∈ R_G for every f ∈ F}. On a grid the result is
// an ExplicitDownset of maximal sets; on the PL universe the most specific
// parts form. Empty F gives FullFamily.
HFam e_of(const FamilyDesc& G, const std::vector<PLFunc>& F, const Universe& U);

// f ∈ F_G(E_fam), decided part by part: every closed subset of a part X
// restricts iff the variant's condition holds on all of X.
bool f_member(const FamilyDesc& G, const HFam& E_fam, const PLFunc& f);

// E_G(F_G(E_fam)) from the closed forms per variant. FiniteFamily and
// SyntheticLeast are handled on grids only, by exhaustive value patterns.
HFam closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U);

// E_G(C(R,R)). Throws PreconditionError for the empty family.
HFam least_element(const FamilyDesc& G, const Universe& U);

// E_G({f}) over a grid, as a membership table, from f's grid values.
GridFamily grid_profile(const FamilyDesc& G, const PLFunc& f, const Universe& U);
// The profile of any function taking these values at the grid points.
GridFamily grid_profile_of_values(const FamilyDesc& G, const std::vector<Rat>& values, const Universe& U);
// The same table from one restricts call per subset; slower, kept as a check.
GridFamily grid_profile_by_restriction(const FamilyDesc& G, const PLFunc& f, const Universe& U);

// Functions whose grid values run over every relevant pattern for FiniteFamily
// (member values or a miss) and SyntheticLeast (tagged hit or a miss).
std::vector<PLFunc> pattern_pool(const FamilyDesc& G, const Universe& U);

struct Lattice {
    std::vector<HFam> elements;         // sorted by size, then membership table
    std::vector<GridFamily> tables;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper)
    std::size_t least = 0, greatest = 0;
    bool meet_is_intersection = false;
};

// Fixed points of closure among all downsets of a grid of at most 5 points.
Lattice lattice(const FamilyDesc& G, const Universe& U);

std::string lattice_json(const Lattice& L);
std::string lattice_dot(const Lattice& L);
std::string hfam_json(const HFam& h);

// g + |x - a|
PLFunc cone(const PLFunc& g, const Rat& a);
PLFunc touch(const PLFunc& g, const Rat& z);
// g + d with d > 0 on U, d < 0 off cl U, d = 0 on the boundary. U must be
// regular open.
PLFunc sign_split(const PLFunc& g, const RealSet& U);

// The SyntheticLeast family whose least element on the grid is `target`.
FamilyDesc synthetic_least_family(const Universe& U, const HFam& target, DenseTagging tagging = {});
// f with f(x) ∈ D_{tag(x)} on E and misses elsewhere on the grid; shows that
// no member restricts to f on E when E is outside the target.
PLFunc exclusion_witness(const FamilyDesc& G, const RealSet& E);

// Finite family over a grid of at most 3 points whose K_G holds every
// nonempty downset of the grid.
FamilyDesc all_hereditary_generator(const Universe& U);

}  // namespace resgal
