#include "semideal/cli.hpp"

#include "semideal/error.hpp"
#include "semideal/spectrum.hpp"

#include <cctype>

namespace semideal::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAst parse() {
        ExprAst e = parse_add();
        skip();
        if (pos_ != text_.size()) fail({"'+'", "'&'", "'*'", "end of input"});
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw SyntaxError(pos_ + 1, std::move(expected), found);
    }

    void expect(char c) {
        if (peek() != c) fail({"'" + std::string(1, c) + "'"});
        ++pos_;
    }

    static ExprAst binary(ExprAst::Kind kind, ExprAst lhs, ExprAst rhs) {
        ExprAst n;
        n.kind = kind;
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    ExprAst parse_add() {
        ExprAst lhs = parse_mul();
        while (peek() == '+' || peek() == '&') {
            auto kind = text_[pos_] == '+' ? ExprAst::Kind::sum : ExprAst::Kind::intersect;
            ++pos_;
            lhs = binary(kind, std::move(lhs), parse_mul());
        }
        return lhs;
    }

    ExprAst parse_mul() {
        ExprAst lhs = parse_pow();
        while (peek() == '*') {
            ++pos_;
            lhs = binary(ExprAst::Kind::product, std::move(lhs), parse_pow());
        }
        return lhs;
    }

    std::string digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
        return d;
    }

    ExprAst parse_pow() {
        ExprAst base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::string d = digits();
            if (d.empty() || d.size() > 9) fail({"NAT"});
            ExprAst n;
            n.kind = ExprAst::Kind::power;
            n.exponent = std::stoul(d);
            n.children.push_back(std::move(base));
            return n;
        }
        return base;
    }

    Rat parse_rat() {
        skip();
        std::size_t start = pos_;
        std::string p = digits();
        if (p.empty()) fail({"RAT"});
        std::string q;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            q = digits();
            if (q.empty()) fail({"NAT"});
        }
        if (!q.empty() && Int(q) == 0) {
            pos_ = start;
            fail({"RAT"});
        }
        return parse_rational(q.empty() ? p : p + "/" + q);
    }

    ExprAst parse_atom() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            ExprAst a = parse_add();
            expect(':');
            ExprAst b = parse_add();
            expect(']');
            return binary(ExprAst::Kind::quotient, std::move(a), std::move(b));
        }
        if (c == '(') {
            ++pos_;
            ExprAst e = parse_add();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ident += text_[pos_++];
            if (ident == "I" && peek() == '(') {
                ++pos_;
                ExprAst lit;
                lit.kind = ExprAst::Kind::literal;
                lit.values.push_back(parse_rat());
                while (peek() == ',') {
                    ++pos_;
                    lit.values.push_back(parse_rat());
                }
                if (peek() != ')') fail({"','", "')'"});
                ++pos_;
                return lit;
            }
            if (ident == "inv") {
                ExprAst n;
                n.kind = ExprAst::Kind::invert;
                n.children.push_back(parse_atom());
                return n;
            }
            if (ident == "I") {
                pos_ = start + 1;
                fail({"'('"});
            }
            ExprAst n;
            n.kind = ExprAst::Kind::label;
            n.label = ident;
            return n;
        }
        fail({"'I('", "'['", "'('", "'inv'", "LABEL"});
    }
};

int level(const ExprAst& a) {
    switch (a.kind) {
    case ExprAst::Kind::sum:
    case ExprAst::Kind::intersect: return 1;
    case ExprAst::Kind::product: return 2;
    case ExprAst::Kind::power: return 3;
    default: return 4;
    }
}

std::string print_at(const ExprAst& a, int min_level);

std::string print_raw(const ExprAst& a) {
    switch (a.kind) {
    case ExprAst::Kind::literal: {
        std::string s = "I(";
        for (std::size_t i = 0; i < a.values.size(); ++i) s += (i ? "," : "") + semideal::to_string(a.values[i]);
        return s + ")";
    }
    case ExprAst::Kind::label: return a.label;
    case ExprAst::Kind::sum: return print_at(a.children[0], 1) + " + " + print_at(a.children[1], 2);
    case ExprAst::Kind::intersect: return print_at(a.children[0], 1) + " & " + print_at(a.children[1], 2);
    case ExprAst::Kind::product: return print_at(a.children[0], 2) + "*" + print_at(a.children[1], 3);
    case ExprAst::Kind::power: return print_at(a.children[0], 4) + "^" + std::to_string(a.exponent);
    case ExprAst::Kind::quotient: return "[" + print_at(a.children[0], 1) + ":" + print_at(a.children[1], 1) + "]";
    case ExprAst::Kind::invert: return "inv " + print_at(a.children[0], 4);
    }
    return "";
}

std::string print_at(const ExprAst& a, int min_level) {
    std::string s = print_raw(a);
    return level(a) < min_level ? "(" + s + ")" : s;
}

Value label_value(const std::string& text, const Instance& inst) {
    Ideal i = text == "S" ? Ideal::unit(inst) : label_ideal(inst, PrimeLabel::parse(inst.id(), text));
    if (inst.has_fractions()) return FractionalIdeal::from_ideal(i);
    return i;
}

Value literal_value(const std::vector<Rat>& values, const Instance& inst) {
    if (inst.has_fractions()) return frac_from(inst, values);
    std::vector<Element> gens;
    for (const auto& v : values) {
        if (v == 0) gens.push_back(Element::lagrassa(LaGrassa::zero));
        else if (v == 1) gens.push_back(Element::lagrassa(LaGrassa::one));
        else raise(Errc::InvalidArgument, "lagrassa literals are 0 and 1; use U for (u)");
    }
    return ideal_from_generators(inst, gens);
}

} // namespace

SyntaxError::SyntaxError(std::size_t column, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at column " + std::to_string(column) + ": expected " + join(expected) +
                         ", found " + found),
      column_(column),
      expected_(std::move(expected)) {}

ExprAst parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const ExprAst& ast) { return print_at(ast, 1); }

Value evaluate(const ExprAst& ast, const Instance& inst) {
    using Kind = ExprAst::Kind;
    switch (ast.kind) {
    case Kind::literal: return literal_value(ast.values, inst);
    case Kind::label: return label_value(ast.label, inst);
    default: break;
    }
    std::vector<Value> args;
    for (const auto& c : ast.children) args.push_back(evaluate(c, inst));
    if (inst.has_fractions()) {
        const auto& a = std::get<FractionalIdeal>(args[0]);
        switch (ast.kind) {
        case Kind::sum: return frac_sum(a, std::get<FractionalIdeal>(args[1]));
        case Kind::product: return frac_product(a, std::get<FractionalIdeal>(args[1]));
        case Kind::intersect: return frac_intersect(a, std::get<FractionalIdeal>(args[1]));
        case Kind::quotient: return frac_quotient(a, std::get<FractionalIdeal>(args[1]));
        case Kind::power: return frac_power(a, ast.exponent);
        case Kind::invert: {
            auto inv = invert(a);
            if (!inv) raise(Errc::NotInvertible, a.to_string() + " times [S:" + a.to_string() + "] is not S");
            return inv->inverse;
        }
        default: break;
        }
    } else {
        const auto& a = std::get<Ideal>(args[0]);
        switch (ast.kind) {
        case Kind::sum: return ideal_sum(a, std::get<Ideal>(args[1]));
        case Kind::product: return ideal_product(a, std::get<Ideal>(args[1]));
        case Kind::intersect: return ideal_intersect(a, std::get<Ideal>(args[1]));
        case Kind::quotient: return ideal_quotient(a, std::get<Ideal>(args[1]));
        case Kind::power: return ideal_power(a, ast.exponent);
        case Kind::invert:
            if (!is_invertible(a)) raise(Errc::NotInvertible, a.to_string() + " is not invertible");
            return a;
        default: break;
        }
    }
    raise(Errc::InternalError, "unhandled expression node");
}

std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

Ideal as_ideal(const Value& v) {
    if (const auto* i = std::get_if<Ideal>(&v)) return *i;
    return std::get<FractionalIdeal>(v).to_ideal();
}

} // namespace semideal::cli
