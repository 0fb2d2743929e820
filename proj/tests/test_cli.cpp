#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include "resgal/cli.hpp"
#include "resgal/error.hpp"
#include "support.hpp"

using namespace resgal;
using namespace resgal::test;

namespace {

const char* kPunctured = R"(# punctured zero on a four-point grid
domain [0,4]
grid P = {0,1,2,3}
fn z = pl[(0,0),(4,0)]
fn g = pl[(0,0),(4,0)]
family G = punctured(z)
efam E = downset{{0,1},{3}}
)";

const char* kMixed = R"(domain [0,4]
grid P = {0,1/2,3}
fn lo = pl[(0,-1),(2,1),(4,-1)]
fn hi = pl[(0,3),(4,3)]
set S = [0,1) | {2} | (3,4]
set T = (1,2)
family B = band(lo,hi)
family I = interval(-inf,hi)
family C = singleton(pl[(0,1),(4,1)])
family K = sliced[band(-inf,lo),band(hi,+inf)]
family F = finite{lo,hi}
efam A = closed-subsets(S)
efam U = separated[T,[3,4]]
efam X = full
efam Y = downset{{0},{0,1/2}}
family Z = synthetic(Y,dyadic,triadic)
)";

CommandResult run(const Instance& inst, std::string cmd, std::vector<std::string> args,
                  std::optional<std::string> fmt = std::nullopt) {
    CommandArgs a;
    a.command = std::move(cmd);
    a.args = std::move(args);
    a.format = std::move(fmt);
    return run_command(inst, a);
}

std::size_t error_column(std::string_view text, std::size_t* line = nullptr) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        if (line) *line = e.line();
        return e.column();
    }
    FAIL("expected a parse error");
    return 0;
}

}  // namespace

TEST_CASE("parse a band family") {
    auto inst = parse_instance("domain [0,4]\nfn g = pl[(0,0),(4,0)]\nfamily G = band(g,+inf)");
    CHECK(inst.fns.size() == 1);
    CHECK(inst.families.size() == 1);
    CHECK(inst.family("G").kind() == "OpenBand");
    CHECK(inst.fn("g") == cst(dom(0, 4), q(0)));
    CHECK_FALSE(inst.grid);
}

TEST_CASE("non-increasing breakpoints are a parse error") {
    std::size_t line = 0;
    error_column("domain [0,4]\nfn f = pl[(2,0),(1,1)]", &line);
    CHECK(line == 2);
    CHECK_THROWS_AS(parse_instance("fn f = pl[(2,0),(1,1)]"), ParseError);
}

TEST_CASE("downset over a grid") {
    auto inst = parse_instance("domain [0,4]\ngrid P = {0,1,3}\nefam E = downset{{0,1},{3},{0}}");
    const auto& E = inst.efam("E");
    REQUIRE(std::holds_alternative<ExplicitDownset>(E));
    auto D = dom(0, 4);
    CHECK(std::get<ExplicitDownset>(E).maximal == std::vector<RealSet>{pts(D, {q(0), q(1)}), pts(D, {q(3)})});
}

TEST_CASE("errors carry line and column") {
    std::size_t line = 0;
    CHECK(error_column("domain [0,4]\nfamily G = band(nope,+inf)", &line) == 17);
    CHECK(line == 2);
    CHECK(error_column("domain [0,4]\nfn f = pl[(0,0),(4,0)]\nfn f = 1", &line) == 4);
    CHECK(line == 3);
    CHECK(error_column("domain [0,4]\nfn f = pl[(0,0) (4,0)]", &line) == 17);
    CHECK_THROWS_WITH_AS(parse_instance("domain [0,4]\nfamily G = band(nope,+inf)"), doctest::Contains("nope"),
                         ParseError);
    CHECK_THROWS_AS(parse_instance("domain [0,4]\nfn f = pl[(0,0),(5,0)]"), ParseError);
    CHECK_THROWS_AS(parse_instance("domain [0,4]\nefam E = downset{{7}}"), ParseError);
    CHECK_THROWS_AS(parse_instance("domain [0,4]\nfamily G = wobble(1)"), ParseError);
}

TEST_CASE("print and reparse") {
    for (const char* text : {kPunctured, kMixed}) {
        auto a = parse_instance(text);
        auto printed = print_instance(a);
        auto b = parse_instance(printed);
        CHECK(print_instance(b) == printed);
        CHECK(a.order == b.order);
        CHECK(a.fns == b.fns);
        CHECK(a.sets == b.sets);
        CHECK(a.efams == b.efams);
        REQUIRE(a.families.size() == b.families.size());
        for (const auto& [name, fam] : a.families) CHECK(to_string(fam) == to_string(b.family(name)));
    }
}

TEST_CASE("closure command") {
    auto inst = parse_instance(kPunctured);
    auto out = run(inst, "closure", {"G", "E"});
    CHECK(out.status == 0);
    auto j = nlohmann::json::parse(out.text);
    CHECK(j["kind"] == "SeparatedUnion");
    CHECK(j["parts"] == nlohmann::json::array({"{0,1}", "{3}"}));
    CHECK(run(inst, "closure", {"G", "E"}, "text").text == "separated[{0,1},{3}]\n");
    CHECK_THROWS_AS(run(inst, "closure", {"G", "E"}, "dot"), PreconditionError);
    CHECK_THROWS_AS(run(inst, "closure", {"G", "missing"}), ParseError);
}

TEST_CASE("lattice command") {
    auto inst = parse_instance("domain [0,4]\ngrid P = {0,1,2}\nfn g = pl[(0,0),(4,0)]\nfamily S = singleton(g)");
    auto j = nlohmann::json::parse(run(inst, "lattice", {"S"}).text);
    CHECK(j["elements"].size() == 8);
    CHECK(j["hasse"].size() == 12);
    auto dot = run(inst, "lattice", {"S"}, "dot").text;
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 12);
    CHECK(run(inst, "lattice", {"S"}).text == run(inst, "lattice", {"S"}).text);
}

TEST_CASE("witness command") {
    auto inst = parse_instance(kPunctured);
    CHECK(run(inst, "witness", {"cone", "g", "2"}).text == "pl[(0,2),(2,0),(4,2)]\n");
    CHECK(run(inst, "witness", {"touch", "g", "2"}).text == "pl[(0,2),(2,0),(4,2)]\n");
    CHECK(run(inst, "witness", {"sign_split", "g", "(1,2)"}).text == "pl[(0,-1),(3/2,1/2),(3,-1),(4,-1)]\n");
    CHECK_THROWS_AS(run(inst, "witness", {"cone", "g", "5"}), Error);
}

TEST_CASE("oracle-verify and check") {
    auto inst = parse_instance(kPunctured);
    auto out = run(inst, "oracle-verify", {"G", "E"});
    CHECK(out.status == 0);
    CHECK(out.text.rfind("PASS\n", 0) == 0);
    CHECK(out.text.find("excluded {0,3} by sign_split") != std::string::npos);

    CommandArgs a;
    a.command = "check";
    a.args = {"G"};
    a.oracle = true;
    a.seed = 7;
    a.samples = 10;
    auto chk = run_command(inst, a);
    CHECK(chk.status == 0);
    auto j = nlohmann::json::parse(chk.text);
    CHECK(j["oracle"]["checked"] == 10);
    CHECK(j["oracle"]["failed"] == 0);
    CHECK(j["predicates"]["complete"] == true);
}

TEST_CASE("construct command") {
    auto inst = parse_instance(kPunctured);
    auto dec = run(inst, "construct", {"decompose", "G"}).text;
    CHECK(dec.rfind("sliced[band(-inf,pl[(0,0),(4,0)]),band(pl[(0,0),(4,0)],+inf)]\n", 0) == 0);
    CHECK(run(inst, "construct", {"bijection", "0", "1", "0", "1", "1/2:dyadic"}).text == "pl[(0,0),(1,1)]\n");
    CHECK_THROWS_AS(run(inst, "construct", {"bijection", "0", "1", "0", "1", "1/2:nope"}), PreconditionError);
}
