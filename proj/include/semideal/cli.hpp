#pragma once

#include "semideal/fractional.hpp"
#include "semideal/laws.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace semideal::cli {

/// expr := add ; add := mul (('+'|'&') mul)* ; mul := pow ('*' pow)* ;
/// pow := atom ('^' NAT)? ;
/// atom := 'I(' RAT (',' RAT)* ')' | '[' expr ':' expr ']' | 'inv' atom
///       | '(' expr ')' | LABEL
/// LABEL names a prime of the instance (MAX, 7N0, T, U, P2, P3.1, p7) or S.
struct ExprAst {
    enum class Kind { literal, label, sum, product, intersect, power, quotient, invert };

    Kind kind = Kind::literal;
    std::vector<Rat> values;   // literal
    std::string label;         // label
    unsigned long exponent = 0;   // power
    std::vector<ExprAst> children;

    friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t column, std::vector<std::string> expected, const std::string& found);

    std::size_t column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t column_;
    std::vector<std::string> expected_;
};

/// Throws SyntaxError with a 1-based column and the expected token set.
ExprAst parse_expr(std::string_view text);
/// Minimal parenthesization; parse_expr(print_expr(a)) == a.
std::string print_expr(const ExprAst& ast);

/// Fractional ideal, or an integral ideal for lagrassa (no fractions there).
using Value = std::variant<FractionalIdeal, Ideal>;

Value evaluate(const ExprAst& ast, const Instance& inst);
std::string to_string(const Value& v);
/// Integral ideal a value denotes; NotIntegral otherwise.
Ideal as_ideal(const Value& v);

struct SuiteEntry {
    std::string law;   // a LawId name or "semidomain"
    Instance instance = Instance::gcd();
    std::uint64_t trials = 200;
    std::uint64_t seed = 1;
    std::uint64_t bound = 64;
    bool expect_fail = false;
};

struct SuiteConfig {
    std::vector<SuiteEntry> entries;
    bool json = false;
};

/// Line format: law <id> instance <id> trials <n> seed <n> [bound <n>] [expect fail]
/// plus "output json|text" and '#' comments. Throws InvalidArgument naming the line.
SuiteConfig parse_suite_config(std::string_view text);

/// Full command line (argv[0] included). Exit codes: 0 pass, 1 a predicted
/// law failed or an expected failure passed, 2 usage, 3 unsupported.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace semideal::cli
