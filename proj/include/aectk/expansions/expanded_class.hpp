#pragma once

#include <aectk/classes/structure_class.hpp>

#include <functional>
#include <string>
#include <vector>

namespace aectk
{
    enum class Provenance
    {
        functorial,
        shelah,
        padded
    };

    /// A base member together with its expansion to the new vocabulary.
    struct ExpansionEntry
    {
        Structure base;
        Structure expanded;
    };

    /// Expansion of a class to a larger vocabulary. The reduct map back to `base` is the functor under study.
    struct ExpandedClass
    {
        StructureClass base;
        VocabularyPtr vocab;
        Provenance provenance = Provenance::functorial;
        /// Expands any member of the base class (not only the ones in the table).
        std::function<Structure(const Structure &)> expand;
        /// Membership in the expanded class.
        std::function<bool(const Structure &)> member;
        /// Every canonical base member at scale, in code order.
        std::vector<ExpansionEntry> table;
        std::vector<std::string> log;
    };

    /// Symbols of `vocab` not in `base`, as (name, arity), functions only.
    auto added_functions(const Vocabulary & vocab, const Vocabulary & base) -> std::vector<SymbolDecl>;

    /// Ensures none of `names` is already a symbol of `v`; throws InvariantViolation otherwise.
    void require_fresh(const Vocabulary & v, const std::vector<std::string> & names);
}
