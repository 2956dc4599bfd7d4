#pragma once

// Literal readings of the class-level definitions, quantifying over everything at scale.

#include <aectk/classes/structure_class.hpp>

#include "support/oracles.hpp"

namespace oracle
{
    using namespace aectk;

    /// Intersection of every strong superset of a, scanning the whole powerset.
    inline auto closure_by_definition(const StructureClass & c, const Structure & n, ElementSet a) -> ElementSet
    {
        auto out = n.universe();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n.size()); ++bits) {
            ElementSet s{bits};
            if (a.subset_of(s) && c.is_strong(n, s))
                out = out & s;
        }
        return out;
    }

    inline auto k_embeddings_by_filter(const StructureClass & c, const Structure & m, const Structure & n)
        -> std::vector<ElementMap>
    {
        std::vector<ElementMap> out;
        for (auto & f : embeddings_by_filter(m, n))
            if (c.is_strong(n, image(f)))
                out.push_back(f);
        return out;
    }

    /// Every pair of members, every pair of K-embeddings, every A they agree on.
    inline auto pseudo_universal_by_definition(const StructureClass & c) -> bool
    {
        for (const auto & m : c.members())
            for (const auto & n : c.members()) {
                auto ks = k_embeddings_by_filter(c, m.structure, n.structure);
                for (const auto & f : ks)
                    for (const auto & g : ks) {
                        ElementSet agree;
                        for (int i = 0; i < m.structure.size(); ++i)
                            if (f[i] == g[i])
                                agree.insert(i);
                        for (auto a : subsets_of(agree)) {
                            auto cl = closure_by_definition(c, m.structure, a);
                            for (auto x : cl.elements())
                                if (f[x] != g[x])
                                    return false;
                        }
                    }
            }
        return true;
    }

    inline auto admits_intersections_by_definition(const StructureClass & c) -> bool
    {
        for (const auto & m : c.members())
            for (auto a : subsets_of(m.structure.universe()))
                if (! c.is_strong(m.structure, closure_by_definition(c, m.structure, a)))
                    return false;
        return true;
    }
}
