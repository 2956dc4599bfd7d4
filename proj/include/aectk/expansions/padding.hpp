#pragma once

#include <aectk/classes/structure_class.hpp>

namespace aectk
{
    /// `m` with a fresh last element interpreting the new constant: every tuple touching it holds and every
    /// function applied to a tuple touching it returns it.
    auto pad_structure(const Structure & m, const VocabularyPtr & padded_vocab) -> Structure;

    /// The vocabulary of `v` plus the constant `constant`. Throws InvariantViolation if it is taken.
    auto padded_vocabulary(const Vocabulary & v, const std::string & constant = "c") -> VocabularyPtr;

    /// Explicit class of padded members at scale + 1, ordered by padded strong inclusions fixing the constant.
    auto pad_nonempty(const StructureClass & c, const std::string & constant = "c") -> StructureClass;
}
