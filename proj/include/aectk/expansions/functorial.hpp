#pragma once

#include <aectk/classes/checks.hpp>
#include <aectk/expansions/expanded_class.hpp>

#include <optional>

namespace aectk
{
    /// A ≡-class of pairs (ā b, M): the closure of ā b in M up to isomorphism fixing the tuple.
    struct PointedIsoClass
    {
        /// Canonical representative of cl(ā b) and the canonical image of ā b (b last).
        Structure shape;
        Tuple point;
        CanonicalCode code;
        /// Length of ā.
        int arity = 0;
        /// b lies in the closure of ā.
        bool codes_closure = false;
    };

    /// Largest |A0| needed so that every b in cl(A) lies in cl(A0) for some A0 ⊆ A, over members at scale.
    auto local_character_bound(const StructureClass & c) -> int;

    /// The ≡-class of (tuple, m); `tuple` is ā followed by b.
    auto pointed_iso_class(const StructureClass & c, const Structure & m, const Tuple & tuple) -> PointedIsoClass;

    /// Every ≡-class realized at scale by an injective ā of length <= local_character_bound and any b,
    /// sorted by code.
    auto realized_classes(const StructureClass & c) -> std::vector<PointedIsoClass>;

    /// Adds one function symbol `fc<i>` per class coding closure (numbered in code order).
    /// Requires a pseudo-universal class without the empty structure.
    auto functorial_expansion_universal(const StructureClass & c) -> ExpandedClass;

    /// The coding-closure classes behind the symbols of a functorial expansion, in symbol order.
    auto coding_classes(const StructureClass & c) -> std::vector<PointedIsoClass>;

    struct ExpansionContractReport
    {
        bool objects_bijective = true;
        bool homs_bijective = true;
        std::size_t pairs_checked = 0;
        std::optional<std::string> failure;

        auto pass() const -> bool { return objects_bijective && homs_bijective; }
    };

    /// Reduct is a bijection on objects and on hom-sets between expanded members at scale.
    auto check_expansion_contract(const ExpandedClass & e) -> ExpansionContractReport;

    struct ExpandedUniversalReport
    {
        bool pass = true;
        std::size_t subsets_checked = 0;
        std::optional<Structure> ambient;
        ElementSet subset;
    };

    /// Every subset of an expanded member closed under the new vocabulary is strong in the reduct.
    auto check_expansion_universal(const ExpandedClass & e) -> ExpandedUniversalReport;
}
