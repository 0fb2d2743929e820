#include "resgal/rational.hpp"

#include <cctype>

#include "resgal/error.hpp"

namespace resgal {

Rat make_rat(long num, long den) {
    if (den == 0) throw ConstructionError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw ConstructionError("malformed rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw ConstructionError("zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat midpoint(const Rat& a, const Rat& b) { return Rat((a + b) / 2); }

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

int sign(const Rat& r) { return sgn(r); }

bool is_dyadic(const Rat& r) {
    mpz_class d = r.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
}

std::strong_ordering compare(const Rat& a, const Rat& b) {
    int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
    if (a.kind_ != b.kind_ || !a.finite()) return a.kind_ <=> b.kind_;
    return compare(a.value_, b.value_);
}

std::string to_string(const ExtRat& r) {
    switch (r.kind()) {
        case ExtRat::Kind::NegInf: return "-inf";
        case ExtRat::Kind::PosInf: return "+inf";
        default: return to_string(r.value());
    }
}

}  // namespace resgal
