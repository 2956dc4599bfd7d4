#pragma once

#include <aectk/tarski/forbidden.hpp>

#include <memory>
#include <string>
#include <vector>

namespace aectk
{
    struct Term
    {
        /// Variable index when `symbol` is empty.
        int variable = -1;
        std::string symbol;
        std::vector<Term> args;
    };

    struct Literal
    {
        enum class Kind
        {
            relation,
            equality
        };
        Kind kind = Kind::relation;
        bool negated = false;
        std::string symbol;
        /// Relation arguments, or the two sides of an equality.
        std::vector<Term> args;
    };

    /// ∀x0 .. x(k-1) ¬(l1 ∧ .. ∧ lm); an empty conjunction is ⊤.
    struct Sentence
    {
        int variables = 0;
        std::vector<Literal> conjuncts;
    };

    struct UniversalTheory
    {
        int certified_scale = 0;
        std::vector<Sentence> sentences;
    };

    /// One sentence per basis member: the negated atomic diagram of its shape plus pairwise distinctness.
    auto theory_of(const ForbiddenBasis & basis) -> UniversalTheory;

    auto render_sentence(const Sentence & s) -> std::string;

    /// Header `# certified-scale: n`, then one sentence per line.
    auto render_theory(const UniversalTheory & t) -> std::string;
    auto emit_universal_theory(const ForbiddenBasis & basis) -> std::string;

    /// Parses the rendered form back. Symbols are checked against `vocab`; throws InvariantViolation on bad input.
    auto parse_theory(const std::string & text, const Vocabulary & vocab) -> UniversalTheory;

    /// Direct expansion of the universal quantifiers over the universe of `m`.
    auto satisfies(const Structure & m, const Sentence & s) -> bool;
    auto satisfies(const Structure & m, const UniversalTheory & t) -> bool;
}
