#pragma once

#include <aectk/core/structure.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace aectk
{
    using CanonicalCode = std::vector<std::uint8_t>;

    /// Isomorphism-invariant key of a (possibly pointed) structure plus the relabelling that realizes it.
    struct CanonicalForm
    {
        /// Equal codes iff isomorphic (pointwise on the point tuple, when one is given).
        CanonicalCode code;
        /// witness[x] is the canonical label of element x; an isomorphism onto the canonical representative.
        ElementMap witness;
    };

    /// Canonical form by colour refinement plus individualization, keeping the lexicographically least
    /// encoding among the leaves of the search tree.
    auto canonical_form(const Structure & m) -> CanonicalForm;

    /// Canonical form of `m` with the elements of `point` fixed as distinguished constants, position by position.
    auto canonical_form(const Structure & m, std::span<const Element> point) -> CanonicalForm;

    /// `m` relabelled along `witness` (a bijection onto 0..n-1).
    auto relabel(const Structure & m, const ElementMap & witness) -> Structure;

    /// The canonical representative of `m`'s isomorphism class.
    auto canonical_structure(const Structure & m) -> Structure;

    auto is_isomorphic(const Structure & a, const Structure & b) -> bool;

    /// Hex rendering of a code, for reports and debugging.
    auto code_to_hex(const CanonicalCode & code) -> std::string;
}
