#include "resgal/dense.hpp"

#include "resgal/error.hpp"

namespace resgal {

namespace {

bool power_of(const mpz_class& n, unsigned long b) {
    mpz_class m = n;
    while (m % b == 0) m /= b;
    return m == 1;
}

// Level k of a rule as offset + m * step.
std::pair<Rat, Rat> level(DenseRule r, unsigned k) {
    switch (r) {
        case DenseRule::Dyadic: {
            Rat step(1);
            for (unsigned i = 0; i < k; ++i) step /= 2;
            return {Rat(0), step};
        }
        case DenseRule::DyadicPlusThird: {
            Rat step(1);
            for (unsigned i = 0; i < k; ++i) step /= 2;
            return {make_rat(1, 3), step};
        }
        case DenseRule::OddDenominator: {
            Rat step(1);
            for (unsigned i = 0; i < k; ++i) step /= 3;
            return {Rat(0), step};
        }
        case DenseRule::EvenDenominator: {
            Rat step(1);
            for (unsigned i = 0; i < k; ++i) step /= 2;
            return {Rat(step / 2), step};
        }
    }
    throw PreconditionError("unknown dense rule");
}

mpz_class floor_div(const Rat& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

}  // namespace

bool dense_contains(DenseRule r, const Rat& y) {
    switch (r) {
        case DenseRule::Dyadic:
            return power_of(y.get_den(), 2);
        case DenseRule::DyadicPlusThird:
            return power_of(Rat(y - make_rat(1, 3)).get_den(), 2);
        case DenseRule::OddDenominator:
            return power_of(y.get_den(), 3);
        case DenseRule::EvenDenominator:
            return y.get_den() % 2 == 0 && power_of(y.get_den(), 2);
    }
    return false;
}

Rat dense_pick(DenseRule r, const Rat& lo, const Rat& hi, const Rat& target) {
    if (!(lo < hi)) throw PreconditionError("dense_pick needs a non-degenerate interval");
    Rat t = target;
    if (t <= lo || t >= hi) t = midpoint(lo, hi);
    for (unsigned k = 0;; ++k) {
        auto [off, step] = level(r, k);
        mpz_class m = floor_div(Rat((t - off) / step));
        // t lies strictly inside, so the two lattice neighbours of t are
        // the only candidates that can be nearest.
        std::optional<Rat> best;
        for (mpz_class c : {mpz_class(m), mpz_class(m + 1)}) {
            Rat v = off + Rat(c) * step;
            if (!(lo < v && v < hi)) continue;
            if (!best || abs(Rat(v - t)) < abs(Rat(*best - t))) best = v;
        }
        if (best) return *best;
    }
}

std::string to_string(DenseRule r) {
    switch (r) {
        case DenseRule::Dyadic: return "dyadic";
        case DenseRule::DyadicPlusThird: return "dyadic+1/3";
        case DenseRule::OddDenominator: return "triadic";
        case DenseRule::EvenDenominator: return "even-den";
    }
    return "?";
}

std::optional<DenseRule> parse_dense_rule(const std::string& name) {
    for (DenseRule r : {DenseRule::Dyadic, DenseRule::DyadicPlusThird, DenseRule::OddDenominator,
                        DenseRule::EvenDenominator})
        if (to_string(r) == name) return r;
    return std::nullopt;
}

int DenseTagging::tag(const Rat& x) const { return x.get_den() % 2 == 0 ? 1 : 0; }

}  // namespace resgal
