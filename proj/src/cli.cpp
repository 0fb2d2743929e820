#include "resgal/cli.hpp"

#include <random>

#include <json.hpp>

#include "resgal/constructions.hpp"
#include "resgal/error.hpp"
#include "resgal/galois.hpp"

namespace resgal {

namespace {

using json = nlohmann::ordered_json;

void need_args(const CommandArgs& a, std::size_t lo, std::size_t hi, const std::string& usage) {
    if (a.args.size() < lo || a.args.size() > hi) throw PreconditionError("usage: " + usage);
}

std::string format_of(const CommandArgs& a, const std::string& fallback, std::initializer_list<const char*> allowed) {
    std::string f = a.format.value_or(fallback);
    for (const char* ok : allowed)
        if (f == ok) return f;
    throw PreconditionError("format '" + f + "' is not available for " + a.command);
}

std::string render(const HFam& h, const std::string& fmt) { return fmt == "json" ? hfam_json(h) + "\n" : to_string(h) + "\n"; }

std::string slice_lines(const std::vector<Slice>& slices) {
    std::string out;
    for (const auto& s : slices) {
        out += "band(" + to_string(s.lo) + "," + to_string(s.hi) + ")";
        if (s.h_minus) out += " h-=" + to_string(*s.h_minus);
        if (s.h_plus) out += " h+=" + to_string(*s.h_plus);
        out += "\n";
    }
    return out;
}

CommandResult cmd_closure(const Instance& inst, const CommandArgs& a) {
    need_args(a, 2, 2, "closure FAMILY EFAM");
    auto G = parse_family_arg(inst, a.args[0]);
    auto E = parse_efam_arg(inst, a.args[1]);
    return {render(closure(G, E, inst.universe(a.universe)), format_of(a, "json", {"json", "text"}))};
}

CommandResult cmd_least(const Instance& inst, const CommandArgs& a) {
    need_args(a, 1, 1, "least FAMILY");
    auto G = parse_family_arg(inst, a.args[0]);
    return {render(least_element(G, inst.universe(a.universe)), format_of(a, "json", {"json", "text"}))};
}

CommandResult cmd_lattice(const Instance& inst, const CommandArgs& a) {
    need_args(a, 1, 1, "lattice FAMILY");
    auto G = parse_family_arg(inst, a.args[0]);
    Lattice L = lattice(G, inst.universe(a.universe ? a.universe : std::optional<std::string>("grid")));
    std::string fmt = format_of(a, "json", {"json", "dot", "text"});
    if (fmt == "json") return {lattice_json(L) + "\n"};
    if (fmt == "dot") return {lattice_dot(L)};
    std::string out;
    for (std::size_t i = 0; i < L.elements.size(); ++i) out += std::to_string(i) + " " + to_string(L.elements[i]) + "\n";
    for (auto [lo, hi] : L.hasse) out += std::to_string(lo) + " < " + std::to_string(hi) + "\n";
    return {out};
}

json oracle_json(const OracleReport& rep, const Universe& grid) {
    json j;
    j["result"] = rep.pass ? "PASS" : "FAIL";
    j["detail"] = rep.detail;
    j["theorem"] = to_string(rep.theorem.to_hfam(grid));
    j["brute"] = to_string(rep.brute.upper);
    j["pool"] = rep.brute.pool_size;
    json certs = json::array();
    for (const auto& [mask, lf] : rep.brute.certificates)
        certs.push_back({{"set", to_string(grid.subset(mask))}, {"kind", lf.label}, {"function", to_string(lf.f)}});
    j["certificates"] = certs;
    return j;
}

CommandResult cmd_check(const Instance& inst, const CommandArgs& a) {
    need_args(a, 1, 1, "check FAMILY [--oracle]");
    format_of(a, "json", {"json"});
    auto G = parse_family_arg(inst, a.args[0]);
    json j;
    j["family"] = to_string(G);
    j["kind"] = G.kind();
    try {
        auto p = predicates(G);
        j["predicates"] = {{"complete", p.complete}, {"connected", p.connected}, {"order_interval", p.order_interval}};
    } catch (const UnsupportedError& e) {
        j["predicates"] = std::string("unsupported: ") + e.what();
    }
    try {
        auto r = relation_checks(G);
        j["relation"] = {{"transitive", r.transitive}, {"sequential", r.sequential}};
    } catch (const UnsupportedError& e) {
        j["relation"] = std::string("unsupported: ") + e.what();
    }
    int status = 0;
    if (a.oracle) {
        Universe U = inst.universe("grid");
        auto downs = enum_downsets(U);
        std::vector<HFam> chosen;
        if (a.seed) {
            std::mt19937 rng(*a.seed);
            std::uniform_int_distribution<std::size_t> pick(0, downs.size() - 1);
            for (std::size_t i = 0; i < a.samples; ++i) chosen.push_back(downs[pick(rng)]);
        } else {
            chosen = downs;
        }
        ValueLattice values = default_lattice(G, U);
        std::size_t failed = 0;
        json fails = json::array();
        for (const auto& E : chosen) {
            auto rep = oracle_verify(G, E, U, U, values, a.budget);
            if (!rep.pass) {
                ++failed;
                fails.push_back({{"efam", to_string(E)}, {"report", oracle_json(rep, U)}});
            }
        }
        j["oracle"] = {{"checked", chosen.size()}, {"failed", failed}, {"failures", fails}};
        if (failed) status = 1;
    }
    return {j.dump(2) + "\n", status};
}

CommandResult cmd_witness(const Instance& inst, const CommandArgs& a) {
    need_args(a, 3, 3, "witness cone|touch|sign_split FUNCTION POINT|SET");
    std::string fmt = format_of(a, "text", {"text", "json"});
    const std::string& kind = a.args[0];
    PLFunc g = parse_fn_arg(inst, a.args[1]);
    PLFunc w = g;
    if (kind == "cone" || kind == "touch") {
        Rat p = parse_rat(a.args[2]);
        w = kind == "cone" ? cone(g, p) : touch(g, p);
    } else if (kind == "sign_split") {
        w = sign_split(g, parse_set_arg(inst, a.args[2]));
    } else {
        throw PreconditionError("unknown witness kind '" + kind + "'");
    }
    if (fmt == "json") return {json{{"kind", kind}, {"function", to_string(w)}}.dump(2) + "\n"};
    return {to_string(w) + "\n"};
}

CommandResult cmd_oracle(const Instance& inst, const CommandArgs& a) {
    need_args(a, 2, 2, "oracle-verify FAMILY EFAM");
    std::string fmt = format_of(a, "text", {"text", "json"});
    auto G = parse_family_arg(inst, a.args[0]);
    auto E = parse_efam_arg(inst, a.args[1]);
    Universe grid = inst.universe("grid");
    Universe theorem_u = inst.universe(a.universe ? a.universe : std::optional<std::string>("grid"));
    auto rep = oracle_verify(G, E, grid, theorem_u, default_lattice(G, grid), a.budget);
    int status = rep.pass ? 0 : 1;
    if (fmt == "json") return {oracle_json(rep, grid).dump(2) + "\n", status};
    std::string out = rep.pass ? "PASS\n" : "FAIL: " + rep.detail + "\n";
    out += "theorem: " + to_string(rep.theorem.to_hfam(grid)) + "\n";
    out += "brute:   " + to_string(rep.brute.upper) + "\n";
    for (const auto& [mask, lf] : rep.brute.certificates)
        out += "  excluded " + to_string(grid.subset(mask)) + " by " + lf.label + " " + to_string(lf.f) + "\n";
    return {out, status};
}

CommandResult cmd_construct(const Instance& inst, const CommandArgs& a) {
    if (a.args.empty()) throw PreconditionError("usage: construct bijection|extend|normalize|decompose ...");
    const std::string& what = a.args[0];
    std::vector<std::string> rest(a.args.begin() + 1, a.args.end());
    if (what == "bijection") {
        if (rest.size() < 4) throw PreconditionError("usage: construct bijection I_LO I_HI J_LO J_HI [X:RULE ...]");
        std::vector<BijectionConstraint> cs;
        for (std::size_t i = 4; i < rest.size(); ++i) {
            auto colon = rest[i].find(':');
            if (colon == std::string::npos) throw PreconditionError("constraint '" + rest[i] + "' is not X:RULE");
            auto rule = parse_dense_rule(rest[i].substr(colon + 1));
            if (!rule) throw PreconditionError("unknown dense rule '" + rest[i].substr(colon + 1) + "'");
            cs.push_back({parse_rat(rest[i].substr(0, colon)), *rule});
        }
        return {to_string(incr_bijection(parse_rat(rest[0]), parse_rat(rest[1]), parse_rat(rest[2]), parse_rat(rest[3]), cs)) +
                "\n"};
    }
    if (what == "extend") {
        if (rest.size() != 4) throw PreconditionError("usage: construct extend FUNCTION SET LO HI");
        return {to_string(band_extension(parse_set_arg(inst, rest[1]), parse_fn_arg(inst, rest[0]),
                                         parse_bound_arg(inst, rest[2]), parse_bound_arg(inst, rest[3]))) +
                "\n"};
    }
    if (what == "normalize" || what == "decompose") {
        if (rest.size() != 1) throw PreconditionError("usage: construct " + what + " FAMILY");
        auto G = parse_family_arg(inst, rest[0]);
        if (what == "decompose") {
            auto out = slice_decompose(G);
            return {to_string(out) + "\n" + slice_lines(out.get_if<SlicedUnion>()->slices)};
        }
        auto s = G.get_if<SlicedUnion>();
        if (!s) throw PreconditionError("normalize needs a sliced family");
        return {slice_lines(sliced_normalize(G.domain(), s->slices))};
    }
    throw PreconditionError("unknown construction '" + what + "'");
}

}  // namespace

CommandResult run_command(const Instance& inst, const CommandArgs& a) {
    if (a.command == "closure") return cmd_closure(inst, a);
    if (a.command == "lattice") return cmd_lattice(inst, a);
    if (a.command == "least") return cmd_least(inst, a);
    if (a.command == "check") return cmd_check(inst, a);
    if (a.command == "witness") return cmd_witness(inst, a);
    if (a.command == "oracle-verify") return cmd_oracle(inst, a);
    if (a.command == "construct") return cmd_construct(inst, a);
    throw PreconditionError("unknown command '" + a.command + "'");
}

}  // namespace resgal
