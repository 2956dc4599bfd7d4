#pragma once

#include <aectk/classes/structure_class.hpp>
#include <aectk/core/diagram_type.hpp>

#include <vector>

namespace aectk
{
    /// Minimal forbidden configurations of a class, complete for structures of size <= scale.
    struct ForbiddenBasis
    {
        std::vector<DiagramType> gamma;
        int scale = 0;
    };

    /// The shape of `d` embeds into `m`. Throws VocabularyMismatch.
    auto pointed_embeds(const DiagramType & d, const Structure & m) -> bool;

    /// Canonical non-members at scale all of whose proper substructures are members, sorted by code.
    /// Requires the class to pass check_universal.
    auto minimal_forbidden(const StructureClass & c) -> ForbiddenBasis;

    auto omits(const Structure & m, const ForbiddenBasis & basis) -> bool;

    /// Pairs (i, j) with gamma[i] embedding into gamma[j], i != j. Empty for a minimal basis.
    auto antichain_violations(const ForbiddenBasis & basis) -> std::vector<std::pair<std::size_t, std::size_t>>;
}
