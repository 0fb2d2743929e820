#pragma once

#include <optional>
#include <string>

#include "resgal/rational.hpp"

namespace resgal {

// Decidable dense sets of rationals, each a union of arithmetic lattices
// offset + m * step with the step shrinking level by level.
enum class DenseRule {
    Dyadic,            // m / 2^k
    DyadicPlusThird,   // m / 2^k + 1/3
    OddDenominator,    // m / 3^k
    EvenDenominator,   // odd m / 2^(k+1)
};

bool dense_contains(DenseRule r, const Rat& y);

// Element of the rule's set in the open interval (lo, hi) nearest to target,
// taken from the coarsest lattice level that meets the interval; ties go
// downward. Throws PreconditionError if lo >= hi.
Rat dense_pick(DenseRule r, const Rat& lo, const Rat& hi, const Rat& target);

std::string to_string(DenseRule r);
std::optional<DenseRule> parse_dense_rule(const std::string& name);

// Two disjoint dense sets D0, D1 and a tag map whose fibres are both dense:
// tag(x) = 0 for odd denominators, 1 for even ones.
struct DenseTagging {
    DenseRule d0 = DenseRule::Dyadic;
    DenseRule d1 = DenseRule::DyadicPlusThird;

    int tag(const Rat& x) const;
    DenseRule rule_at(const Rat& x) const { return tag(x) == 0 ? d0 : d1; }
    // y ∈ D_{tag(x)}
    bool hits(const Rat& x, const Rat& y) const { return dense_contains(rule_at(x), y); }

    friend bool operator==(const DenseTagging&, const DenseTagging&) = default;
};

}  // namespace resgal
