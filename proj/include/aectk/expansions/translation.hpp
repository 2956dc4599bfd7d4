#pragma once

#include <aectk/core/morphism.hpp>

namespace aectk
{
    /// Adds `not_R` for each relation R and a binary `neq`, so that homomorphisms of translates are
    /// exactly embeddings of the originals.
    struct EmbModTranslation
    {
        VocabularyPtr source;
        VocabularyPtr target;

        auto structure(const Structure & m) const -> Structure;
        auto morphism(const ElementMap & f) const -> ElementMap { return f; }
    };

    /// Throws InvariantViolation when a new symbol name is already taken.
    auto emb_to_mod_translation(const VocabularyPtr & v) -> EmbModTranslation;
}
