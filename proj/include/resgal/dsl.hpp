#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgal/error.hpp"
#include "resgal/family.hpp"
#include "resgal/hfam.hpp"

namespace resgal {

struct Instance {
    std::optional<Domain> domain;
    std::optional<Universe> grid;
    std::string grid_name;
    std::map<std::string, PLFunc> fns;
    std::map<std::string, RealSet> sets;
    std::map<std::string, FamilyDesc> families;
    std::map<std::string, HFam> efams;
    std::vector<std::string> order;  // declaration order

    const Domain& dom() const;
    const PLFunc& fn(const std::string& name) const;
    const RealSet& set(const std::string& name) const;
    const FamilyDesc& family(const std::string& name) const;
    const HFam& efam(const std::string& name) const;
    // The grid when declared, else the PL universe; `which` forces one.
    Universe universe(const std::optional<std::string>& which = std::nullopt) const;
};

//   domain [a,b]
//   grid P = {x1,...}
//   fn f = pl[(x,y),...]
//   set S = [0,1) | {2}
//   family G = band(lo,hi) | interval(lo,hi) | singleton(f) | punctured(f)
//            | sliced[band(..),...] | finite{f,...} | synthetic(efam[,rule,rule])
//            | full | empty
//   efam E = downset{{0,1},{3}} | closed-subsets(S) | separated[S,...] | full | empty
// Bounds are +inf, -inf, a function name, a pl literal or a rational
// constant. '#' starts a comment.
Instance parse_instance(std::string_view text);

// Single expressions against an instance's names, for command arguments:
// a declared name or an inline literal.
PLFunc parse_fn_arg(const Instance& inst, std::string_view text);
ExtBound parse_bound_arg(const Instance& inst, std::string_view text);
RealSet parse_set_arg(const Instance& inst, std::string_view text);
FamilyDesc parse_family_arg(const Instance& inst, std::string_view text);
HFam parse_efam_arg(const Instance& inst, std::string_view text);

// Canonical DSL text; parse_instance(print_instance(I)) reproduces I.
std::string print_instance(const Instance& inst);

}  // namespace resgal
