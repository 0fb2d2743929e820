#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resgal/dsl.hpp"
#include "resgal/oracle.hpp"

namespace resgal {

struct CommandArgs {
    std::string command;  // closure, lattice, least, check, witness, oracle-verify, construct
    std::vector<std::string> args;
    std::optional<std::string> format;    // json, dot or text; each command has its default
    std::optional<std::string> universe;  // grid or pl
    std::size_t budget = kDefaultBudget;
    std::optional<unsigned> seed;     // check --oracle: sample instead of enumerating
    std::size_t samples = 20;
    bool oracle = false;
};

struct CommandResult {
    std::string text;
    int status = 0;  // nonzero when a verification failed
};

// Errors from the engine propagate as resgal::Error.
CommandResult run_command(const Instance& inst, const CommandArgs& a);

}  // namespace resgal
