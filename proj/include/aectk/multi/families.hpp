#pragma once

#include <aectk/classes/checks.hpp>
#include <aectk/limits/limits.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    enum class FamilyKind
    {
        multiinitial,
        polyinitial
    };

    /// Candidate initial objects, certified against every member of size <= scale.
    struct ObjectFamily
    {
        std::vector<CanonicalStructure> objects;
        FamilyKind kind = FamilyKind::multiinitial;
        int scale = 0;
        std::size_t members_checked = 0;
    };

    struct FamilyViolation
    {
        Structure member;
        /// Family objects with at least one K-embedding into `member`, and the total number of such maps.
        std::size_t sources = 0;
        std::size_t morphisms = 0;
        std::string reason;
    };

    struct FamilyOutcome
    {
        std::optional<ObjectFamily> family;
        /// The ≤K-minimal members; any certified family must consist of exactly these.
        std::vector<CanonicalStructure> candidates;
        std::optional<FamilyViolation> violation;

        explicit operator bool() const { return family.has_value(); }
    };

    /// Members whose only strong set is the whole universe.
    auto minimal_members(const StructureClass & c) -> std::vector<CanonicalStructure>;

    auto multiinitial_family(const StructureClass & c) -> FamilyOutcome;
    auto polyinitial_family(const StructureClass & c) -> FamilyOutcome;

    /// Objects and K-embeddings between them; edges need not commute with anything.
    struct Diagram
    {
        struct Edge
        {
            int from = 0;
            int to = 0;
            ElementMap map;
        };
        std::vector<StructurePtr> objects;
        std::vector<Edge> edges;
    };

    /// Every cocone over `d` whose apex is a member at scale, legs lexicographic per apex, apexes by code.
    auto enumerate_cocones(const StructureClass & c, const Diagram & d) -> std::vector<Cone>;

    /// K-embeddings h between apexes with h ∘ from.legs[i] = to.legs[i] for every i.
    auto cocone_morphisms(const StructureClass & c, const Cone & from, const Cone & to) -> std::vector<ElementMap>;

    struct MulticolimitOutcome
    {
        bool exists = false;
        std::vector<Cone> family;
        std::size_t cocones_checked = 0;
        std::optional<Cone> violating;
        std::size_t sources = 0;
        std::size_t morphisms = 0;

        explicit operator bool() const { return exists; }
    };

    /// The multiinitial family in the category of cocones over `d` with apexes at scale.
    auto multicolimit(const StructureClass & c, const Diagram & d) -> MulticolimitOutcome;

    /// A minimum-size set A with cl(A) the whole of `m`, if one of size < bound exists.
    auto is_generated(const StructureClass & c, const Structure & m, int bound) -> std::optional<ElementSet>;
}
