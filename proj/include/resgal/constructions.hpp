#pragma once

#include <optional>
#include <vector>

#include "resgal/dense.hpp"
#include "resgal/family.hpp"
#include "resgal/pl_func.hpp"

namespace resgal {

struct BijectionConstraint {
    Rat x;           // interior point of the source interval
    DenseRule rule;  // f(x) must land in this dense set
};

// Strictly increasing PL bijection [i_lo,i_hi] -> [j_lo,j_hi] with
// f(x_n) in A_n for every constraint. Starts from the linear bijection f0 and
// moves the value at x_n inside its current piece, stage by stage, keeping
// f - f0/2 strictly increasing and each move below 2^-n.
PLFunc incr_bijection(const Rat& i_lo, const Rat& i_hi, const Rat& j_lo, const Rat& j_hi,
                      const std::vector<BijectionConstraint>& constraints);

// g = values on E and lo < g < hi everywhere.
PLFunc band_extension(const RealSet& E, const PLFunc& values, const ExtBound& lo, const ExtBound& hi);

// max - min of f over [a, b].
Rat oscillation(const PLFunc& f, const Rat& a, const Rat& b);

// Fills h_minus/h_plus by the inductive max/min formulas. Each input slice's
// lo/hi are read as the separators g⁻_i, g⁺_i of a sliced system. `order` is
// the enumeration i(0), i(1), ... (default: list order).
std::vector<Slice> sliced_normalize(const Domain& d, std::vector<Slice> slices,
                                    std::optional<std::vector<std::size_t>> order = std::nullopt);

// The band that members of slice i are confined to by all separators:
// (max(g⁻_i, g⁺_j for j<i), min(g⁺_i, g⁻_k for k>i)).
std::pair<ExtBound, ExtBound> effective_band(const std::vector<Slice>& slices, std::size_t i);

// Splits a complete, transitive, sequential family into its sliced system of
// open bands, with midline separators between neighbouring bands.
FamilyDesc slice_decompose(const FamilyDesc& G);

}  // namespace resgal
