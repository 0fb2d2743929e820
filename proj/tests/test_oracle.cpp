#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resgal/error.hpp"
#include "resgal/oracle.hpp"
#include "support.hpp"

using namespace resgal;
using namespace resgal::test;

namespace {

const Domain D = dom(0, 4);
const PLFunc ZERO = cst(D, q(0));
const PLFunc V = pl(D, {{q(0), q(1)}, {q(2), q(-1)}, {q(4), q(1)}});

HFam downset(std::initializer_list<RealSet> sets) { return ExplicitDownset{std::vector<RealSet>(sets)}; }

}  // namespace

TEST_CASE("enum_pl counts") {
    CHECK(enum_pl(Universe::grid(D, {q(0), q(1), q(2)}), ValueLattice({q(-1), q(0), q(1)})).size() == 27);
    auto one = enum_pl(Universe::grid(D, {q(0)}), ValueLattice({q(5)}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == cst(D, q(5)));
    CHECK(enum_pl(Universe::grid(D, {q(0), q(1), q(2), q(3), q(4)}), ValueLattice({q(0), q(1), q(2), q(3)})).size() ==
          1024);
    CHECK_THROWS_AS(enum_pl(Universe::grid(D, {q(0), q(1), q(2)}), ValueLattice({q(0), q(1), q(2)}), 20), CapacityError);
    CHECK_THROWS_AS(ValueLattice({}), ConstructionError);
}

TEST_CASE("enum_downsets") {
    CHECK(enum_downsets(Universe::grid(D, {q(0)})).size() == 3);
    CHECK(enum_downsets(Universe::grid(D, {q(0), q(1)})).size() == 6);
    auto three = enum_downsets(Universe::grid(D, {q(0), q(1), q(2)}));
    CHECK(three.size() == 20);
    CHECK(std::count_if(three.begin(), three.end(), [](const HFam& h) { return std::holds_alternative<EmptyFamily>(h); }) == 1);
}

TEST_CASE("default lattice") {
    auto L = default_lattice(FamilyDesc::open_band(D, ZERO, ExtBound::pos_inf()), Universe::grid(D, {q(0), q(1)}));
    CHECK(L.values() == std::vector<Rat>{q(-1), q(0), q(1)});
    auto S = default_lattice(FamilyDesc::singleton(V), Universe::grid(D, {q(0), q(2)}));
    CHECK(S.values() == std::vector<Rat>{q(-2), q(-1), q(0), q(1), q(2)});
}

TEST_CASE("brute_closure examples") {
    Universe g3 = Universe::grid(D, {q(0), q(1), q(2)});
    auto s = brute_closure(FamilyDesc::singleton(ZERO), downset({pts(D, {q(0)}), pts(D, {q(2)})}), g3);
    CHECK(to_string(s.upper) == "downset{{0,2}}");

    auto band = FamilyDesc::open_band(D, ZERO, ExtBound::pos_inf());
    HFam E = downset({pts(D, {q(1)})});
    auto b = brute_closure(band, E, g3);
    CHECK(to_string(b.upper) == "downset{{1}}");
    std::uint32_t m01 = g3.mask_of(pts(D, {q(0), q(1)}));
    REQUIRE(b.certificates.count(m01));
    CHECK(b.certificates.at(m01).label == "cone");
    CHECK(b.certificates.at(m01).f == cone(ZERO, q(0)));

    auto punct = FamilyDesc::punctured(ZERO);
    auto p = brute_closure(punct, downset({pts(D, {q(0), q(1)}), pts(D, {q(2)})}), g3);
    CHECK(GridFamily::of(p.upper, g3) == GridFamily::of(SeparatedUnion{{pts(D, {q(0), q(1)}), pts(D, {q(2)})}}, g3));
    std::uint32_t m12 = g3.mask_of(pts(D, {q(1), q(2)}));
    REQUIRE(p.certificates.count(m12));
    CHECK(p.certificates.at(m12).label == "sign_split");
}

TEST_CASE("soundness, exactness and certificates on small grids") {
    std::vector<FamilyDesc> fams{
        FamilyDesc::empty(D),
        FamilyDesc::full(D),
        FamilyDesc::singleton(ZERO),
        FamilyDesc::singleton(V),
        FamilyDesc::order_interval(D, ZERO, cst(D, q(2))),
        FamilyDesc::open_band(D, ZERO, ExtBound::pos_inf()),
        FamilyDesc::open_band(D, V, pl(D, {{q(0), q(2)}, {q(2), q(3, 5)}, {q(4), q(2)}})),
        FamilyDesc::punctured(ZERO),
        FamilyDesc::punctured(V),
        FamilyDesc::sliced(D, {{cst(D, q(0)), cst(D, q(1)), {}, {}}, {cst(D, q(2)), cst(D, q(3)), {}, {}}}),
        FamilyDesc::sliced(D, {{ExtBound::neg_inf(), V, {}, {}}, {V, cst(D, q(2)), {}, {}}, {cst(D, q(2)), ExtBound::pos_inf(), {}, {}}}),
        FamilyDesc::finite(D, {V, ZERO}),
    };
    std::mt19937 rng(17);
    for (unsigned n = 1; n <= 4; ++n) {
        std::vector<Rat> ps;
        for (unsigned i = 0; i < n; ++i) ps.push_back(q(i));
        Universe U = Universe::grid(D, ps);
        auto downs = enum_downsets(U);
        std::uniform_int_distribution<std::size_t> pick(0, downs.size() - 1);
        for (const auto& G : fams)
            for (int t = 0; t < 6; ++t) {
                const HFam& E = downs[pick(rng)];
                auto rep = oracle_verify(G, E, U, U, default_lattice(G, U));
                INFO(G.kind(), " n=", n, " E=", to_string(E), " ", rep.detail);
                CHECK(rep.pass);
            }
    }
}

TEST_CASE("PL families checked on their grid restriction") {
    Universe U = Universe::grid(D, {q(0), q(1), q(2), q(3)});
    Universe P = Universe::pl(D);
    HFam E = AllClosedSubsetsOf{iv(D, q(0), q(1), true, false)};
    for (const auto& G : {FamilyDesc::singleton(V), FamilyDesc::open_band(D, ZERO, ExtBound::pos_inf()),
                          FamilyDesc::punctured(ZERO)}) {
        auto rep = oracle_verify(G, E, U, P, default_lattice(G, U));
        INFO(G.kind(), " ", rep.detail);
        CHECK(rep.pass);
    }
}
