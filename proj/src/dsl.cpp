#include "resgal/dsl.hpp"

#include <cctype>
#include <functional>

namespace resgal {

namespace {

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw PreconditionError(std::string("unknown ") + what + " '" + name + "'");
    return it->second;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}
    Parser(std::string_view text, Instance inst) : s_(text), inst_(std::move(inst)) {}

    // One whole-text expression.
    template <class T>
    T single(T (Parser::*item)()) {
        T out = (this->*item)();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "' after expression");
        return out;
    }

    Instance run() {
        while (true) {
            skip_blank_lines();
            if (at_end()) break;
            statement();
        }
        return std::move(inst_);
    }

public:
    PLFunc fn_arg() { return fn_ref(); }
    ExtBound bound_arg() { return bound(); }
    RealSet set_arg() { return set_expr(); }
    FamilyDesc family_arg() { return family_expr(); }
    HFam efam_arg() { return efam_expr(); }

private:
    std::string_view s_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    Instance inst_;

    struct Mark {
        std::size_t line, col;
    };

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    Mark mark() const { return {line_, col_}; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
    [[noreturn]] void fail_at(Mark m, const std::string& msg) const { throw ParseError(m.line, m.col, msg); }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    // Spaces, tabs and a trailing comment; stops at the newline.
    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void skip_blank_lines() {
        while (true) {
            skip_ws();
            if (peek() == '\n') {
                advance();
                continue;
            }
            break;
        }
    }

    bool starts_with(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            if (at_end() || peek() == '\n') fail(std::string("expected '") + c + "' before end of line");
            fail(std::string("expected '") + c + "', found '" + peek() + "'");
        }
        advance();
    }

    bool ident_start() const { return std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'; }

    std::string ident() {
        skip_ws();
        if (!ident_start()) fail("expected a name");
        std::string out;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
            out += peek();
            advance();
        }
        return out;
    }

    // Run of characters up to a delimiter, for rule names like dyadic+1/3.
    std::string word() {
        skip_ws();
        std::string out;
        while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ',' && peek() != ')') {
            out += peek();
            advance();
        }
        if (out.empty()) fail("expected a word");
        return out;
    }

    bool number_start() const {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if ((c == '-' || c == '+') && pos_ + 1 < s_.size()) return std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
        return false;
    }

    Rat number() {
        skip_ws();
        Mark m = mark();
        std::string text;
        if (peek() == '-' || peek() == '+') {
            text += peek();
            advance();
        }
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
            text += peek();
            advance();
        }
        try {
            return parse_rat(text);
        } catch (const Error& e) {
            fail_at(m, e.what());
        }
    }

    void end_of_statement() {
        skip_ws();
        if (!at_end() && peek() != '\n') fail(std::string("unexpected '") + peek() + "' after statement");
    }

    const Domain& need_domain(Mark m) const {
        if (!inst_.domain) fail_at(m, "no domain declared yet");
        return *inst_.domain;
    }

    // Semantic errors from the core, re-positioned at the construct.
    template <class F>
    auto guarded(Mark m, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail_at(m, e.what());
        }
    }

    void declare(Mark m, const std::string& name) {
        if (inst_.fns.count(name) || inst_.sets.count(name) || inst_.families.count(name) || inst_.efams.count(name) ||
            name == inst_.grid_name)
            fail_at(m, "name '" + name + "' is already declared");
        inst_.order.push_back(name);
    }

    std::vector<Rat> point_list() {
        std::vector<Rat> out;
        expect('{');
        if (accept('}')) return out;
        do out.push_back(number());
        while (accept(','));
        expect('}');
        return out;
    }

    PLFunc pl_literal() {
        Mark m = mark();
        const Domain& d = need_domain(m);
        for (char c : std::string_view("pl")) {
            if (peek() != c) fail("expected pl[...]");
            advance();
        }
        expect('[');
        std::vector<Breakpoint> bp;
        if (!accept(']')) {
            do {
                expect('(');
                Rat x = number();
                expect(',');
                Rat y = number();
                expect(')');
                bp.push_back({x, y});
            } while (accept(','));
            expect(']');
        }
        return guarded(m, [&] { return PLFunc::make(std::move(bp), d); });
    }

    PLFunc fn_ref() {
        skip_ws();
        Mark m = mark();
        if (starts_with("pl[") || starts_with("pl [")) return pl_literal();
        if (number_start()) {
            Rat c = number();
            return PLFunc::constant(need_domain(m), c);
        }
        std::string name = ident();
        return guarded(m, [&] { return lookup(inst_.fns, name, "function"); });
    }

    ExtBound bound() {
        skip_ws();
        if (starts_with("+inf")) {
            for (int i = 0; i < 4; ++i) advance();
            return ExtBound::pos_inf();
        }
        if (starts_with("-inf")) {
            for (int i = 0; i < 4; ++i) advance();
            return ExtBound::neg_inf();
        }
        return fn_ref();
    }

    RealSet set_expr() {
        skip_ws();
        Mark m = mark();
        const Domain& d = need_domain(m);
        if (ident_start()) {
            std::string name = ident();
            return guarded(m, [&] { return lookup(inst_.sets, name, "set"); });
        }
        std::vector<Interval> parts;
        do {
            skip_ws();
            if (peek() == '{') {
                for (const Rat& p : point_list()) parts.push_back({p, p, true, true});
            } else if (peek() == '[' || peek() == '(') {
                bool lc = peek() == '[';
                advance();
                Rat a = number();
                expect(',');
                Rat b = number();
                skip_ws();
                if (peek() != ']' && peek() != ')') fail("expected ']' or ')'");
                bool rc = peek() == ']';
                advance();
                parts.push_back({a, b, lc, rc});
            } else {
                fail("expected a set: {points}, an interval or a set name");
            }
        } while (accept('|'));
        return guarded(m, [&] { return RealSet::from_intervals(d, parts); });
    }

    template <class T>
    std::vector<T> list(char open, char close, const std::function<T()>& item) {
        expect(open);
        std::vector<T> out;
        if (accept(close)) return out;
        do out.push_back(item());
        while (accept(','));
        expect(close);
        return out;
    }

    HFam efam_expr() {
        skip_ws();
        Mark m = mark();
        need_domain(m);
        std::string kw = ident();
        if (kw == "full") return FullFamily{};
        if (kw == "empty") return EmptyFamily{};
        if (kw == "downset") {
            auto sets = list<RealSet>('{', '}', [&] { return set_expr(); });
            return guarded(m, [&]() -> HFam {
                // Keep the antichain of maximal sets.
                std::vector<RealSet> top;
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    bool below = false;
                    for (std::size_t j = 0; j < sets.size() && !below; ++j)
                        if (i != j && sets[i].subset_of(sets[j]) && !(sets[i] == sets[j] && i < j)) below = true;
                    if (!below) top.push_back(sets[i]);
                }
                std::sort(top.begin(), top.end());
                top.erase(std::unique(top.begin(), top.end()), top.end());
                if (top.empty()) return EmptyFamily{};
                return ExplicitDownset{top};
            });
        }
        if (kw == "closed-subsets") {
            expect('(');
            RealSet x = set_expr();
            expect(')');
            return AllClosedSubsetsOf{x};
        }
        if (kw == "separated") {
            auto parts = list<RealSet>('[', ']', [&] { return set_expr(); });
            if (!family_separated(parts)) fail_at(m, "parts of a separated union must be pairwise separated");
            std::sort(parts.begin(), parts.end());
            parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
            return SeparatedUnion{parts};
        }
        if (inst_.efams.count(kw)) return inst_.efams.at(kw);
        fail_at(m, "unknown set family '" + kw + "'");
    }

    Slice slice() {
        Mark m = mark();
        std::string kw = ident();
        if (kw != "band") fail_at(m, "sliced unions hold band(lo,hi) slices, found '" + kw + "'");
        expect('(');
        ExtBound lo = bound();
        expect(',');
        ExtBound hi = bound();
        expect(')');
        return {lo, hi, {}, {}};
    }

    FamilyDesc family_expr() {
        skip_ws();
        Mark m = mark();
        const Domain& d = need_domain(m);
        std::string kw = ident();
        if (kw == "full") return FamilyDesc::full(d);
        if (kw == "empty") return FamilyDesc::empty(d);
        if (kw == "singleton" || kw == "punctured") {
            expect('(');
            PLFunc g = fn_ref();
            expect(')');
            return kw == "singleton" ? FamilyDesc::singleton(g) : FamilyDesc::punctured(g);
        }
        if (kw == "band" || kw == "interval") {
            expect('(');
            ExtBound lo = bound();
            expect(',');
            ExtBound hi = bound();
            expect(')');
            return guarded(m, [&] {
                return kw == "band" ? FamilyDesc::open_band(d, lo, hi) : FamilyDesc::order_interval(d, lo, hi);
            });
        }
        if (kw == "sliced") {
            auto slices = list<Slice>('[', ']', [&] { return slice(); });
            return guarded(m, [&] { return FamilyDesc::sliced(d, slices); });
        }
        if (kw == "finite") {
            auto members = list<PLFunc>('{', '}', [&] { return fn_ref(); });
            return guarded(m, [&] { return FamilyDesc::finite(d, members); });
        }
        if (kw == "synthetic") {
            if (!inst_.grid) fail_at(m, "synthetic families need a grid declaration");
            expect('(');
            HFam target = efam_expr();
            DenseTagging t;
            if (accept(',')) {
                Mark rm = mark();
                auto r0 = parse_dense_rule(word());
                expect(',');
                auto r1 = parse_dense_rule(word());
                if (!r0 || !r1) fail_at(rm, "unknown dense rule");
                t = {*r0, *r1};
            }
            expect(')');
            return guarded(m, [&] { return FamilyDesc::synthetic(*inst_.grid, target, t); });
        }
        if (inst_.families.count(kw)) return inst_.families.at(kw);
        fail_at(m, "unknown family '" + kw + "'");
    }

    void statement() {
        Mark m = mark();
        std::string kw = ident();
        if (kw == "domain") {
            if (inst_.domain) fail_at(m, "domain declared twice");
            expect('[');
            Rat a = number();
            expect(',');
            Rat b = number();
            expect(']');
            inst_.domain = guarded(m, [&] { return Domain(a, b); });
            end_of_statement();
            return;
        }
        if (kw != "grid" && kw != "fn" && kw != "set" && kw != "family" && kw != "efam")
            fail_at(m, "unknown statement '" + kw + "'");
        need_domain(m);
        skip_ws();
        Mark nm = mark();
        std::string name = ident();
        declare(nm, name);
        expect('=');
        if (kw == "grid") {
            if (inst_.grid) fail_at(m, "grid declared twice");
            auto ps = point_list();
            inst_.grid = guarded(m, [&] { return Universe::grid(*inst_.domain, ps); });
            inst_.grid_name = name;
        } else if (kw == "fn") {
            skip_ws();
            inst_.fns.emplace(name, pl_literal());
        } else if (kw == "set") {
            inst_.sets.emplace(name, set_expr());
        } else if (kw == "family") {
            inst_.families.emplace(name, family_expr());
        } else {
            inst_.efams.emplace(name, efam_expr());
        }
        end_of_statement();
    }
};

std::string points_text(const std::vector<Rat>& ps) {
    std::string out = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + to_string(ps[i]);
    return out + "}";
}

}  // namespace

const Domain& Instance::dom() const {
    if (!domain) throw PreconditionError("instance declares no domain");
    return *domain;
}
const PLFunc& Instance::fn(const std::string& name) const { return lookup(fns, name, "function"); }
const RealSet& Instance::set(const std::string& name) const { return lookup(sets, name, "set"); }
const FamilyDesc& Instance::family(const std::string& name) const { return lookup(families, name, "family"); }
const HFam& Instance::efam(const std::string& name) const { return lookup(efams, name, "set family"); }

Universe Instance::universe(const std::optional<std::string>& which) const {
    if (which && *which == "pl") return Universe::pl(dom());
    if (which && *which != "grid") throw PreconditionError("universe must be 'grid' or 'pl', got '" + *which + "'");
    if (grid) return *grid;
    if (which) throw PreconditionError("instance declares no grid");
    return Universe::pl(dom());
}

Instance parse_instance(std::string_view text) { return Parser(text).run(); }

PLFunc parse_fn_arg(const Instance& inst, std::string_view text) { return Parser(text, inst).single(&Parser::fn_arg); }
ExtBound parse_bound_arg(const Instance& inst, std::string_view text) {
    return Parser(text, inst).single(&Parser::bound_arg);
}
RealSet parse_set_arg(const Instance& inst, std::string_view text) { return Parser(text, inst).single(&Parser::set_arg); }
FamilyDesc parse_family_arg(const Instance& inst, std::string_view text) {
    return Parser(text, inst).single(&Parser::family_arg);
}
HFam parse_efam_arg(const Instance& inst, std::string_view text) { return Parser(text, inst).single(&Parser::efam_arg); }

std::string print_instance(const Instance& inst) {
    std::string out;
    if (inst.domain) out += "domain [" + to_string(inst.domain->left()) + "," + to_string(inst.domain->right()) + "]\n";
    for (const auto& name : inst.order) {
        if (name == inst.grid_name && inst.grid) out += "grid " + name + " = " + points_text(inst.grid->points()) + "\n";
        else if (inst.fns.count(name)) out += "fn " + name + " = " + to_string(inst.fns.at(name)) + "\n";
        else if (inst.sets.count(name)) out += "set " + name + " = " + to_string(inst.sets.at(name)) + "\n";
        else if (inst.families.count(name)) out += "family " + name + " = " + to_string(inst.families.at(name)) + "\n";
        else if (inst.efams.count(name)) out += "efam " + name + " = " + to_string(inst.efams.at(name)) + "\n";
    }
    return out;
}

}  // namespace resgal
