#pragma once

#include <aectk/classes/checks.hpp>
#include <aectk/core/morphism.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aectk
{
    /// An apex with one leg per diagram node.
    struct Cone
    {
        Structure apex;
        std::vector<ElementMap> legs;
    };

    /// A competing cone and the map from its apex to the limit apex that factors it.
    struct MediatingRecord
    {
        Structure competitor;
        std::vector<ElementMap> legs;
        ElementMap mediator;
    };

    /// The limit cone plus the factorization of every competing cone found at scale.
    struct LimitCertificate
    {
        Cone cone;
        std::vector<MediatingRecord> log = {};
        /// Competitors are members of size <= apex size: injectivity bounds any competitor by the apex.
        int competitor_bound = 0;
        bool verified = true;
        std::optional<std::string> failure = {};
    };

    struct LimitOutcome
    {
        std::optional<LimitCertificate> certificate;
        /// On NONE: why, the agreement set or intersection, and its closure.
        std::string reason;
        ElementSet offending;
        ElementSet closure;

        explicit operator bool() const { return certificate.has_value(); }
    };

    /// Equalizer of two K-embeddings f, g: M -> N.
    auto equalizer(const StructureClass & c, const Morphism & f, const Morphism & g) -> LimitOutcome;

    /// Limit of a family of K-embeddings into one member.
    auto wide_pullback(const StructureClass & c, const std::vector<Morphism> & legs) -> LimitOutcome;

    struct DirectedSystem
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

    struct ColimitReport
    {
        Cone cocone;
        int top = 0;
        /// Finite directed systems have a greatest index, so the colimit is that object.
        bool degenerate = true;
        std::size_t upper_bounds_checked = 0;
        bool smooth = true;
    };

    /// Throws PreconditionFailed for non-directed systems, non-K-embedding maps or non-commuting diagrams.
    auto directed_colimit(const StructureClass & c, const DirectedSystem & system) -> ColimitReport;

    struct PullbackExistenceReport
    {
        bool pass = true;
        std::size_t pairs_checked = 0;
        std::optional<Structure> ambient;
        ElementSet first;
        ElementSet second;
        ElementSet intersection;
    };

    /// Pairwise intersections of strong sets in every member; finite families follow by induction.
    auto check_wide_pullbacks_exist(const StructureClass & c) -> PullbackExistenceReport;
}
