#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resgal/family.hpp"
#include "resgal/galois.hpp"
#include "resgal/hfam.hpp"

namespace resgal {

// Candidate function values for brute-force search: sorted, distinct,
// nonempty.
class ValueLattice {
public:
    explicit ValueLattice(std::vector<Rat> values);
    const std::vector<Rat>& values() const { return values_; }

private:
    std::vector<Rat> values_;
};

// Values of the family's member and bound functions at the grid points,
// their pairwise midpoints, and one value beyond each end.
ValueLattice default_lattice(const FamilyDesc& G, const Universe& U);

constexpr std::size_t kDefaultBudget = 200000;

// Every PL function with breakpoints on the grid and values in the lattice.
// Throws CapacityError when |values|^|grid| exceeds the budget.
std::vector<PLFunc> enum_pl(const Universe& U, const ValueLattice& values, std::size_t budget = kDefaultBudget);

// Every downward-closed family over the grid (at most 5 points).
std::vector<HFam> enum_downsets(const Universe& U);

struct LabelledFunc {
    PLFunc f;
    std::string label;  // cone, touch, tent, sign_split, band, lattice
};

// The separating functions of the closure proofs, instantiated on the grid.
std::vector<LabelledFunc> witness_pool(const FamilyDesc& G, const Universe& U);

struct BruteClosure {
    HFam upper;
    GridFamily table;
    std::map<std::uint32_t, LabelledFunc> certificates;  // excluded grid set -> excluding member of F_G(E_fam)
    std::size_t pool_size = 0;
};

// e_of over the pool functions (witnesses first, then the lattice) that lie
// in F_G(E_fam). E_fam may be a PL family; the result lives on the grid.
BruteClosure brute_closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U, const ValueLattice& values,
                           std::size_t budget = kDefaultBudget);
BruteClosure brute_closure(const FamilyDesc& G, const HFam& E_fam, const Universe& U);

struct OracleReport {
    bool pass = false;
    GridFamily theorem;
    BruteClosure brute;
    std::string detail;
};

// Theorem closure against the brute upper bound: passes when they agree and
// every excluded set carries a valid certificate. `closure_universe` is
// where the theorem closure is computed (the grid itself, or the PL universe
// restricted to the grid afterwards).
OracleReport oracle_verify(const FamilyDesc& G, const HFam& E_fam, const Universe& grid, const Universe& closure_universe,
                           const ValueLattice& values, std::size_t budget = kDefaultBudget);

}  // namespace resgal
