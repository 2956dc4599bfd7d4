#pragma once

#include <aectk/classes/checks.hpp>
#include <aectk/expansions/expanded_class.hpp>

#include <optional>

namespace aectk
{
    /// How a strong M_s ⊇ s is chosen for each subset s of a member.
    enum class MsPolicy
    {
        /// closure when the class admits intersections, otherwise greedy
        automatic,
        /// M_s = cl(s)
        closure,
        /// least strong superset (by size, then mask) of s and every M_t, t ⊊ s
        greedy,
        /// M_s = the whole member; monotone but ignores s
        top
    };

    /// M_s for every subset s of `m`, indexed by mask.
    auto choose_ms(const StructureClass & c, const Structure & m, MsPolicy policy) -> std::vector<ElementSet>;

    /// Name of f_i^α.
    auto shelah_symbol(int i, int alpha) -> std::string;

    /// τ' = τ plus f_i^α for i < ls.worst() and α < scale; f_i^α(ā) is the i-th element of M_ran(ā).
    auto shelah_expansion(const StructureClass & c, const LsEstimate & ls, MsPolicy policy = MsPolicy::automatic)
        -> ExpandedClass;

    /// Reduct is a member and the closure of every set under the new functions is strong in the reduct.
    auto in_k_prime(const StructureClass & base, const Structure & expanded) -> bool;

    /// In K' and every strong subset of the reduct is closed under the new functions.
    auto in_k_double_prime(const StructureClass & base, const Structure & expanded) -> bool;

    struct KDoublePrimeViolation
    {
        Structure expanded;
        /// Strong in the reduct but not closed under the new functions.
        ElementSet strong_set;
    };

    struct KDoublePrimeResult
    {
        ExpandedClass repaired;
        std::vector<KDoublePrimeViolation> violations;
    };

    /// Reports members of a Shelah expansion outside K'' and rebuilds it with M_s = cl(s).
    auto k_double_prime(const ExpandedClass & e) -> KDoublePrimeResult;

    struct PullbackFullWitness
    {
        Structure c;
        std::vector<ElementSet> family;
        Structure a;
        /// The common composite A -> reduct of C.
        ElementMap h;
    };

    struct PullbackFullReport
    {
        bool pass = true;
        int max_family = 2;
        std::size_t instances_checked = 0;
        std::optional<PullbackFullWitness> witness;
    };

    /// Families of up to `max_family` closed substructures B_i ⊆ C of a constructed expansion C, and every
    /// compatible family of K-embeddings A -> B_i: the maps must lift to embeddings of an expansion of A.
    auto check_pullback_full(const ExpandedClass & e, int max_family = 2) -> PullbackFullReport;

    struct ReductFunctorReport
    {
        bool objects_in_domain = true;
        bool surjective_on_objects = true;
        bool faithful = true;
        bool preserves_directed_colimits = true;
        std::size_t members_checked = 0;

        auto pass() const -> bool
        {
            return objects_in_domain && surjective_on_objects && faithful && preserves_directed_colimits;
        }
    };

    auto check_reduct_functor(const ExpandedClass & e) -> ReductFunctorReport;
}
