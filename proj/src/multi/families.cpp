#include <aectk/multi/families.hpp>

#include <aectk/core/error.hpp>

#include <algorithm>

namespace aectk
{
    namespace
    {
        auto is_automorphism(const StructureClass & c, const Structure & m, const ElementMap & h) -> bool
        {
            return std::none_of(h.begin(), h.end(), [](Element e) { return e < 0; }) && c.is_k_embedding(m, m, h);
        }

        auto certify(const StructureClass & c, std::vector<CanonicalStructure> candidates, FamilyKind kind) -> FamilyOutcome
        {
            FamilyOutcome out;
            out.candidates = candidates;
            ObjectFamily family{std::move(candidates), kind, c.scale(), 0};
            for (const auto & m : c.members()) {
                ++family.members_checked;
                FamilyViolation v{m.structure, 0, 0, {}};
                bool related = true;
                for (const auto & f : family.objects) {
                    auto ks = c.k_embeddings(f.structure, m.structure);
                    if (ks.empty())
                        continue;
                    ++v.sources;
                    v.morphisms += ks.size();
                    if (kind == FamilyKind::polyinitial)
                        for (const auto & a : ks)
                            for (const auto & b : ks)
                                related = related
                                       && is_automorphism(c, f.structure,
                                                          compose_maps(partial_inverse(a, m.structure.size()), b));
                }
                if (v.sources == 0)
                    v.reason = "no family object maps into it";
                else if (v.sources > 1)
                    v.reason = "several family objects map into it";
                else if (kind == FamilyKind::multiinitial && v.morphisms > 1)
                    v.reason = "the family object maps into it in several ways";
                else if (! related)
                    v.reason = "two maps from the family object differ by no automorphism";
                else
                    continue;
                out.violation = std::move(v);
                return out;
            }
            out.family = std::move(family);
            return out;
        }

        void require_diagram(const StructureClass & c, const Diagram & d)
        {
            for (const auto & o : d.objects)
                if (! o || ! c.member(*o))
                    throw PreconditionFailed("diagram object is not a member of " + c.name());
            auto k = static_cast<int>(d.objects.size());
            for (const auto & e : d.edges) {
                if (e.from < 0 || e.from >= k || e.to < 0 || e.to >= k)
                    throw PreconditionFailed("diagram edge out of range");
                if (! c.is_k_embedding(*d.objects[e.from], *d.objects[e.to], e.map))
                    throw PreconditionFailed("diagram edge " + std::to_string(e.from) + ">" + std::to_string(e.to)
                                             + " is not a K-embedding");
            }
        }

        auto restrict_legs(const Structure & n, const Substructure & sub, const std::vector<ElementMap> & legs)
            -> std::vector<ElementMap>
        {
            auto back = partial_inverse(sub.inclusion, n.size());
            std::vector<ElementMap> out;
            for (const auto & l : legs)
                out.push_back(compose_maps(back, l));
            return out;
        }

        /// No proper strong set of the apex carries the cocone.
        auto is_minimal_cocone(const StructureClass & c, const Diagram & d, const Cone & cone) -> bool
        {
            ElementSet covered;
            for (const auto & l : cone.legs)
                covered = covered | image(l);
            for (auto s : c.strong_sets(cone.apex)) {
                if (s == cone.apex.universe() || ! covered.subset_of(s))
                    continue;
                auto sub = induced_substructure(cone.apex, s);
                auto legs = restrict_legs(cone.apex, sub, cone.legs);
                bool carried = true;
                for (std::size_t i = 0; i < legs.size() && carried; ++i)
                    carried = c.is_k_embedding(*d.objects[i], sub.structure, legs[i]);
                if (carried)
                    return false;
            }
            return true;
        }
    }

    auto minimal_members(const StructureClass & c) -> std::vector<CanonicalStructure>
    {
        std::vector<CanonicalStructure> out;
        for (const auto & m : c.members())
            if (c.strong_sets(m.structure).size() == 1)
                out.push_back(m);
        return out;
    }

    auto multiinitial_family(const StructureClass & c) -> FamilyOutcome
    {
        return certify(c, minimal_members(c), FamilyKind::multiinitial);
    }

    auto polyinitial_family(const StructureClass & c) -> FamilyOutcome
    {
        return certify(c, minimal_members(c), FamilyKind::polyinitial);
    }

    auto enumerate_cocones(const StructureClass & c, const Diagram & d) -> std::vector<Cone>
    {
        require_diagram(c, d);
        std::vector<Cone> out;
        auto k = d.objects.size();
        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            std::vector<std::vector<ElementMap>> options;
            for (const auto & o : d.objects)
                options.push_back(c.k_embeddings(*o, n));
            std::vector<ElementMap> legs;
            auto extend = [&](auto & self) -> void {
                if (legs.size() == k) {
                    out.push_back(Cone{n, legs});
                    return;
                }
                auto i = static_cast<int>(legs.size());
                for (const auto & l : options[i]) {
                    legs.push_back(l);
                    bool commutes = true;
                    for (const auto & e : d.edges)
                        if (std::max(e.from, e.to) == i)
                            commutes = commutes && compose_maps(legs[e.to], e.map) == legs[e.from];
                    if (commutes)
                        self(self);
                    legs.pop_back();
                }
            };
            extend(extend);
        }
        return out;
    }

    auto cocone_morphisms(const StructureClass & c, const Cone & from, const Cone & to) -> std::vector<ElementMap>
    {
        std::vector<ElementMap> out;
        for (auto & h : c.k_embeddings(from.apex, to.apex)) {
            bool commutes = true;
            for (std::size_t i = 0; i < from.legs.size() && commutes; ++i)
                commutes = compose_maps(h, from.legs[i]) == to.legs[i];
            if (commutes)
                out.push_back(std::move(h));
        }
        return out;
    }

    auto multicolimit(const StructureClass & c, const Diagram & d) -> MulticolimitOutcome
    {
        MulticolimitOutcome out;
        auto cocones = enumerate_cocones(c, d);
        for (const auto & x : cocones) {
            if (! is_minimal_cocone(c, d, x))
                continue;
            // minimal cocones related by a morphism are isomorphic
            bool seen = std::any_of(out.family.begin(), out.family.end(),
                                    [&](const Cone & f) { return ! cocone_morphisms(c, f, x).empty(); });
            if (! seen)
                out.family.push_back(x);
        }
        for (const auto & x : cocones) {
            ++out.cocones_checked;
            std::size_t sources = 0, morphisms = 0;
            for (const auto & f : out.family) {
                auto hs = cocone_morphisms(c, f, x);
                sources += ! hs.empty();
                morphisms += hs.size();
            }
            if (sources == 1 && morphisms == 1)
                continue;
            out.violating = x;
            out.sources = sources;
            out.morphisms = morphisms;
            return out;
        }
        out.exists = true;
        return out;
    }

    auto is_generated(const StructureClass & c, const Structure & m, int bound) -> std::optional<ElementSet>
    {
        auto strong = c.strong_sets(m);
        auto candidates = subsets_of(m.universe());
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
        for (auto a : candidates) {
            if (a.size() >= bound)
                break;
            auto cl = m.universe();
            for (auto s : strong)
                if (a.subset_of(s))
                    cl = cl & s;
            if (cl == m.universe())
                return a;
        }
        return std::nullopt;
    }
}
