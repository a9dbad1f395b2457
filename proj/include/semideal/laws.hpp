#pragma once

#include "semideal/ideal.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semideal {

/// dedekind2-law-1   a * [(x) : a] = (x) for a nonzero x in a (a is invertible)
/// dedekind2-law-2   a(b & c) = ab & ac
/// dedekind2-law-3   (a + b)(a & b) = ab
/// dedekind2-law-4   [(a + b) : c] = [a : c] + [b : c]
/// dedekind2-law-5   [a : b] + [b : a] = S
/// dedekind2-law-6   [c : a & b] = [c : a] + [c : b]
enum class LawId {
    dedekind_identity,
    dedekind2_law_1,
    dedekind2_law_2,
    dedekind2_law_3,
    dedekind2_law_4,
    dedekind2_law_5,
    dedekind2_law_6,
    distributive_lattice,
    coprime_identities,
    reyes,
    quotient_absorb,
    contains_iff_divides,
};

std::string_view to_string(LawId law) noexcept;
/// Throws UnknownLaw.
LawId parse_law(std::string_view text);
const std::vector<LawId>& all_laws();

/// Laws that hold in every semiring; the rest are characteristic of
/// Dedekind semidomains and may fail elsewhere.
bool law_is_universal(LawId law) noexcept;

std::size_t law_arity(LawId law) noexcept;

struct LawWitness {
    std::vector<std::string> inputs;   // "a = (2)", ...
    std::string lhs;
    std::string rhs;
    std::string clause;
    std::vector<Ideal> ideals;
    std::vector<Element> elements;
};

enum class LawStatus { pass, fail };

struct LawReport {
    std::string law;
    std::string instance;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t skipped = 0;
    LawStatus status = LawStatus::pass;
    std::optional<LawWitness> witness;

    bool passed() const noexcept { return status == LawStatus::pass; }
};

struct LawBudget {
    std::uint64_t trials = 200;
    std::uint64_t seed = 1;
};

struct LawOutcome {
    bool skipped = false;
    std::optional<LawWitness> violation;
};

/// One exact evaluation on the given tuple (law_arity entries). Not for
/// coprime-identities, whose inputs are exponent vectors.
LawOutcome evaluate_law(LawId law, std::span<const Ideal> inputs);

/// Coprime clauses for A = prod m_k^e_k and B = prod m_k^f_k over distinct
/// maximal ideals: A+B, A&B and AB have exponents min, max and e+f.
std::optional<LawWitness> coprime_check(std::span<const Ideal> maximals, std::span<const unsigned> e,
                                        std::span<const unsigned> f);

/// Enumerates a fixed pool of small ideals, then budget.trials seeded random
/// tuples; stops at the first violation and shrinks it.
LawReport check_law(const Instance& inst, LawId law, const LawBudget& budget);

/// Searches a, b, c in enumerate_elements(bound) with a != 0, b != c and ab = ac.
LawReport check_semidomain(const Instance& inst, std::uint64_t bound);

} // namespace semideal
