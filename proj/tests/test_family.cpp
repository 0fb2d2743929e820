#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resgal/error.hpp"
#include "resgal/family.hpp"
#include "support.hpp"

using namespace resgal;
using namespace resgal::test;

namespace {

const Domain D = dom(0, 4);
const PLFunc ID = pl(D, {{q(0), q(0)}, {q(4), q(4)}});
const PLFunc V = pl(D, {{q(0), q(1)}, {q(2), q(-1)}, {q(4), q(1)}});
const PLFunc X_MINUS_1 = pl(D, {{q(0), q(-1)}, {q(4), q(3)}});

ExtBound inf() { return ExtBound::pos_inf(); }
ExtBound ninf() { return ExtBound::neg_inf(); }

// All symbolic variants on D, for property sweeps.
std::vector<FamilyDesc> catalogue() {
    PLFunc zero = cst(D, q(0));
    return {
        FamilyDesc::empty(D),
        FamilyDesc::full(D),
        FamilyDesc::singleton(zero),
        FamilyDesc::singleton(V),
        FamilyDesc::order_interval(D, cst(D, q(0)), cst(D, q(2))),
        FamilyDesc::order_interval(D, V, inf()),
        FamilyDesc::open_band(D, zero, inf()),
        FamilyDesc::open_band(D, ninf(), ID),
        FamilyDesc::open_band(D, V, pl(D, {{q(0), q(2)}, {q(2), q(3, 5)}, {q(4), q(2)}})),
        FamilyDesc::punctured(zero),
        FamilyDesc::punctured(V),
        FamilyDesc::sliced(D, {{cst(D, q(0)), cst(D, q(1)), {}, {}}, {cst(D, q(2)), cst(D, q(3)), {}, {}}}),
        FamilyDesc::sliced(D, {{ninf(), V, {}, {}}, {V, cst(D, q(2)), {}, {}}, {cst(D, q(2)), inf(), {}, {}}}),
        FamilyDesc::finite(D, {ID, pl(D, {{q(0), q(4)}, {q(4), q(0)}})}),
        FamilyDesc::finite(D, {ID, cst(D, q(2)), V}),
    };
}

RealSet random_closed(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    RealSet s = random_set(rng, D);
    if (kind(rng) == 0) {
        std::uniform_int_distribution<int> pos(0, 8), cnt(0, 3);
        std::vector<Rat> ps;
        for (int i = cnt(rng); i > 0; --i) ps.push_back(q(pos(rng), 2));
        return RealSet::points(D, ps);
    }
    return s.closure();
}

}  // namespace

TEST_CASE("member") {
    CHECK(member(FamilyDesc::open_band(D, cst(D, q(0)), inf()), cst(D, q(1))));
    CHECK_FALSE(member(FamilyDesc::open_band(D, cst(D, q(0)), inf()), V));
    CHECK(member(FamilyDesc::singleton(V), V));
    CHECK_THROWS_AS(FamilyDesc::open_band(D, cst(D, q(1)), cst(D, q(1))), ConstructionError);
    CHECK_THROWS_AS(FamilyDesc::order_interval(D, cst(D, q(2)), cst(D, q(1))), ConstructionError);
    CHECK_THROWS_AS(FamilyDesc::sliced(D, {{cst(D, q(0)), cst(D, q(2)), {}, {}}, {cst(D, q(1)), inf(), {}, {}}}),
                    ConstructionError);
}

TEST_CASE("value_set") {
    auto band = FamilyDesc::open_band(D, cst(D, q(0)), inf());
    CHECK(to_string(value_set(band, q(3))) == "(0,+inf)");
    CHECK(to_string(value_set(FamilyDesc::punctured(cst(D, q(0))), q(1))) == "(-inf,0) | (0,+inf)");
    CHECK(to_string(value_set(FamilyDesc::order_interval(D, cst(D, q(0)), cst(D, q(2))), q(1))) == "[0,2]");
    CHECK(value_set(FamilyDesc::full(D), q(1)).is_all());
    CHECK(value_set(FamilyDesc::empty(D), q(1)).empty());
}

TEST_CASE("restricts") {
    CHECK(restricts(FamilyDesc::singleton(cst(D, q(0))), V, pts(D, {q(1), q(3)})));
    auto band = FamilyDesc::open_band(D, cst(D, q(0)), inf());
    CHECK_FALSE(restricts(band, X_MINUS_1, pts(D, {q(0)})));
    CHECK(restricts(band, X_MINUS_1, pts(D, {q(2)})));
    PLFunc zig = pl(D, {{q(0), q(2)}, {q(1), q(2)}, {q(3), q(-2)}, {q(4), q(-2)}});
    CHECK_FALSE(restricts(FamilyDesc::punctured(cst(D, q(0))), zig, pts(D, {q(1), q(3)})));
    CHECK(restricts(FamilyDesc::punctured(cst(D, q(0))), zig, pts(D, {q(1)})));
    CHECK_FALSE(restricts(FamilyDesc::empty(D), ID, RealSet(D)));
    CHECK_THROWS_AS(restricts(band, ID, iv(D, q(1), q(2), false, false)), PreconditionError);
}

TEST_CASE("extend_witness") {
    auto oi = FamilyDesc::order_interval(D, cst(D, q(1)), cst(D, q(3)));
    auto w = extend_witness(oi, ID, pts(D, {q(2)}));
    REQUIRE(w);
    CHECK(*w == pl(D, {{q(0), q(1)}, {q(1), q(1)}, {q(3), q(3)}, {q(4), q(3)}}));
    CHECK((*w)(q(0)) == q(1));

    auto band = FamilyDesc::open_band(D, cst(D, q(0)), inf());
    PLFunc f = pl(D, {{q(0), q(0)}, {q(1), q(1)}, {q(3), q(2)}, {q(4), q(0)}});
    auto b = extend_witness(band, f, pts(D, {q(1), q(3)}));
    REQUIRE(b);
    CHECK(*b == pl(D, {{q(0), q(1)}, {q(1), q(1)}, {q(3), q(2)}, {q(4), q(2)}}));
    CHECK((*b)(q(2)) == q(3, 2));

    CHECK_FALSE(extend_witness(band, X_MINUS_1, pts(D, {q(0)})));
}

TEST_CASE("band_extend leaves a chord that exits the band") {
    PLFunc hi = pl(D, {{q(0), q(2)}, {q(2), q(3, 5)}, {q(4), q(2)}});
    PLFunc g = band_extend(pts(D, {q(1), q(3)}), cst(D, q(6, 5)), cst(D, q(0)), hi);
    CHECK(g(q(2)) == q(3, 10));
    CHECK(g(q(1)) == q(6, 5));
    CHECK(g(q(3)) == q(6, 5));
    CHECK(member(FamilyDesc::open_band(D, cst(D, q(0)), hi), g));
    CHECK_THROWS_AS(band_extend(pts(D, {q(1)}), cst(D, q(-1)), cst(D, q(0)), inf()), PreconditionError);
}

TEST_CASE("predicates") {
    auto p = predicates(FamilyDesc::open_band(D, cst(D, q(0)), inf()));
    CHECK(p.complete);
    CHECK(p.connected);
    CHECK_FALSE(p.order_interval);
    CHECK_FALSE(predicates(FamilyDesc::punctured(cst(D, q(0)))).connected);
    CHECK(predicates(FamilyDesc::punctured(cst(D, q(0)))).complete);

    auto cross = FamilyDesc::finite(D, {ID, pl(D, {{q(0), q(4)}, {q(4), q(0)}})});
    CHECK_FALSE(predicates(cross).complete);
    CHECK_FALSE(predicates(cross).connected);

    // Two parallel lines never meet: every selection follows one of them.
    auto parallel = FamilyDesc::finite(D, {ID, pl(D, {{q(0), q(1)}, {q(4), q(5)}})});
    CHECK(predicates(parallel).complete);
    CHECK_FALSE(predicates(parallel).connected);
    // Touching at a single point without crossing still allows a switch.
    auto touching = FamilyDesc::finite(D, {V, cst(D, q(-1))});
    CHECK_FALSE(predicates(touching).complete);
    CHECK(predicates(FamilyDesc::finite(D, {V})).order_interval);
    CHECK(predicates(FamilyDesc::order_interval(D, V, inf())).order_interval);
}

TEST_CASE("sim") {
    auto band01 = FamilyDesc::open_band(D, cst(D, q(0)), cst(D, q(1)));
    CHECK(sim(band01, {q(0), q(1, 2)}, {q(1), q(1, 2)}));
    auto two = FamilyDesc::sliced(D, {{cst(D, q(0)), cst(D, q(1)), {}, {}}, {cst(D, q(2)), cst(D, q(3)), {}, {}}});
    CHECK_FALSE(sim(two, {q(0), q(1, 2)}, {q(1), q(5, 2)}));
    CHECK(sim(two, {q(0), q(5, 2)}, {q(1), q(5, 2)}));
    auto fam = FamilyDesc::finite(D, {ID, cst(D, q(2))});
    CHECK_FALSE(sim(fam, {q(0), q(0)}, {q(3), q(2)}));
    CHECK(sim(fam, {q(0), q(0)}, {q(2), q(2)}));
}

TEST_CASE("relation_checks") {
    auto two = FamilyDesc::sliced(D, {{cst(D, q(0)), cst(D, q(1)), {}, {}}, {cst(D, q(2)), cst(D, q(3)), {}, {}}});
    CHECK(relation_checks(two).transitive);
    CHECK(relation_checks(two).sequential);
    auto fam = FamilyDesc::finite(D, {ID, cst(D, q(2))});
    CHECK_FALSE(relation_checks(fam).transitive);
    CHECK(relation_checks(fam).sequential);
    CHECK(relation_checks(FamilyDesc::singleton(V)).transitive);
    CHECK(relation_checks(FamilyDesc::finite(D, {cst(D, q(0)), cst(D, q(1))})).transitive);
}

TEST_CASE("family invariants on random functions and sets") {
    std::mt19937 rng(5);
    auto fams = catalogue();
    for (int trial = 0; trial < 120; ++trial) {
        PLFunc f = random_pl(rng, D);
        RealSet E = random_closed(rng);
        RealSet sub = E.intersect(random_closed(rng));
        for (const auto& G : fams) {
            CAPTURE(to_string(G));
            CAPTURE(to_string(f));
            CAPTURE(to_string(E));
            bool r = restricts(G, f, E);
            auto w = extend_witness(G, f, E);
            CHECK(r == w.has_value());
            if (w) {
                CHECK(member(G, *w));
                CHECK(E.subset_of(eq_set(f, *w)));
                CHECK(restricts(G, f, sub));
            }
            for (const Rat& x : {q(0), q(1, 2), q(2), q(7, 3), q(4)})
                CHECK(value_set(G, x).contains(f(x)) == restricts(G, f, RealSet::point(D, x)));
        }
    }
}
