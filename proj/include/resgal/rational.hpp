#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace resgal {

// Exact rational; mpq_class keeps numerator/denominator reduced with a
// positive denominator after every arithmetic operation.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws ConstructionError on malformed input
// or a zero denominator.
Rat parse_rat(std::string_view text);

// Integers print without "/1".
std::string to_string(const Rat& r);

Rat midpoint(const Rat& a, const Rat& b);
Rat abs(const Rat& r);
int sign(const Rat& r);
bool is_dyadic(const Rat& r);

std::strong_ordering compare(const Rat& a, const Rat& b);

// A point of the extended line R ∪ {-inf, +inf}.
class ExtRat {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRat(const Rat& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)
    static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
    static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rat& value() const { return value_; }

    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);
    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    explicit ExtRat(Kind k) : kind_(k) {}
    Kind kind_;
    Rat value_;
};

std::string to_string(const ExtRat& r);

}  // namespace resgal
