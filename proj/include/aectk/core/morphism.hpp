#pragma once

#include <aectk/core/structure.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    enum class MorphismKind
    {
        homomorphism,
        embedding
    };

    /// A map between two structures over a shared vocabulary, tagged with what it is claimed to be.
    struct Morphism
    {
        StructurePtr source;
        StructurePtr target;
        ElementMap map;
        MorphismKind kind = MorphismKind::embedding;
    };

    /// Why a candidate map is not a homomorphism / embedding.
    struct MapViolation
    {
        enum class Kind
        {
            not_total,
            out_of_range,
            not_injective,
            function_not_preserved,
            relation_not_preserved,
            relation_not_reflected
        };

        Kind kind;
        std::string symbol;
        /// The offending tuple of source elements (for not_injective: the two colliding elements).
        Tuple tuple;

        auto describe() const -> std::string;
    };

    struct MapCheck
    {
        bool ok = true;
        std::optional<MapViolation> violation;

        explicit operator bool() const { return ok; }
    };

    auto check_homomorphism(const Structure & m, const Structure & n, const ElementMap & map) -> MapCheck;
    auto check_embedding(const Structure & m, const Structure & n, const ElementMap & map) -> MapCheck;

    /// Embedding check on a tagged morphism; throws VocabularyMismatch.
    auto is_embedding(const Morphism & f) -> MapCheck;

    /// All embeddings m -> n, lexicographic in the map.
    auto enumerate_embeddings(const Structure & m, const Structure & n) -> std::vector<ElementMap>;
    auto enumerate_homomorphisms(const Structure & m, const Structure & n) -> std::vector<ElementMap>;
    auto exists_embedding(const Structure & m, const Structure & n) -> bool;

    /// Morphism-level wrappers of the above.
    auto embeddings(const StructurePtr & m, const StructurePtr & n) -> std::vector<Morphism>;

    auto identity_map(int n) -> ElementMap;
    auto identity(const StructurePtr & m) -> Morphism;

    /// f ∘ g as maps (apply g first).
    auto compose_maps(const ElementMap & f, const ElementMap & g) -> ElementMap;

    /// f ∘ g; requires target(g) == source(f). The result is an embedding iff both are.
    auto compose(const Morphism & f, const Morphism & g) -> Morphism;

    /// Inverse of an injective map on its image; entries outside the image are -1.
    auto partial_inverse(const ElementMap & map, int target_size) -> ElementMap;

    auto render_map(const ElementMap & map) -> std::string;
}
