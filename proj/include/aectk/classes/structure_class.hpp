#pragma once

#include <aectk/core/diagram_type.hpp>
#include <aectk/core/enumerate.hpp>
#include <aectk/core/morphism.hpp>
#include <aectk/core/structure.hpp>

#include <memory>
#include <string>
#include <vector>

namespace aectk
{
    enum class Presentation
    {
        explicit_list,
        forbid
    };

    enum class OrderKind
    {
        substructure,
        explicit_pairs
    };

    /// `image(inclusion)` is declared a strong substructure of `upper`.
    struct OrderPair
    {
        Structure lower;
        Structure upper;
        ElementMap inclusion;
    };

    /// Everything needed to build a StructureClass; plain data, as produced by the workspace parser.
    struct ClassDefinition
    {
        std::string name;
        VocabularyPtr vocab;
        Presentation presentation = Presentation::explicit_list;
        std::vector<Structure> members;
        std::vector<DiagramType> forbidden;
        OrderKind order = OrderKind::substructure;
        std::vector<OrderPair> pairs;
        int scale = 4;
        std::uint64_t enumeration_ceiling = default_enumeration_ceiling;
    };

    /// An abstract class (K, ≤K) together with the size bound for every bounded quantifier over it.
    ///
    /// Strong substructures are handled as element sets of a member: S is strong in N when the substructure
    /// induced on S is ≤K N. Explicit pair orders are closed under identity, composition and automorphisms
    /// when the class is built. Copies share their caches; nothing observable ever mutates.
    class StructureClass
    {
    public:
        explicit StructureClass(ClassDefinition definition);

        auto definition() const -> const ClassDefinition &;
        auto name() const -> const std::string & { return definition().name; }
        auto vocabulary_ptr() const -> const VocabularyPtr & { return definition().vocab; }
        auto vocabulary() const -> const Vocabulary & { return *definition().vocab; }
        auto scale() const -> int { return definition().scale; }
        auto presentation() const -> Presentation { return definition().presentation; }
        auto order_kind() const -> OrderKind { return definition().order; }

        auto with_scale(int scale) const -> StructureClass;

        /// Throws VocabularyMismatch when `m` is over another signature.
        auto member(const Structure & m) const -> bool;

        /// Canonical representatives of all members of size <= scale, sorted by code.
        auto members() const -> const std::vector<CanonicalStructure> &;
        /// Members of size <= k; cached per k, without enumerating up to the full scale.
        auto members_up_to(int k) const -> const std::vector<CanonicalStructure> &;

        /// Strong element sets of the member `n`, ascending by mask. Throws PreconditionFailed for non-members.
        auto strong_sets(const Structure & n) const -> std::vector<ElementSet>;
        auto is_strong(const Structure & n, ElementSet s) const -> bool;

        /// An embedding whose image is strong in the target.
        auto is_k_embedding(const Structure & m, const Structure & n, const ElementMap & f) const -> bool;
        auto k_embeddings(const Structure & m, const Structure & n) const -> std::vector<ElementMap>;

        auto contains_empty_member() const -> bool;

        struct State;

    private:
        std::shared_ptr<State> state_;
    };
}
