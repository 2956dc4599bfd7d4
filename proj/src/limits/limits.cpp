#include <aectk/limits/limits.hpp>

#include <aectk/core/error.hpp>

#include <algorithm>
#include <set>

namespace aectk
{
    namespace
    {
        auto defined(const ElementMap & m) -> bool
        {
            return std::none_of(m.begin(), m.end(), [](Element e) { return e < 0; });
        }

        void require_k_embedding(const StructureClass & c, const Morphism & f, const char * what)
        {
            if (! f.source || ! f.target)
                throw PreconditionFailed(std::string(what) + ": morphism without source or target");
            if (! c.member(*f.source) || ! c.member(*f.target))
                throw PreconditionFailed(std::string(what) + ": morphism between non-members");
            if (! c.is_k_embedding(*f.source, *f.target, f.map))
                throw PreconditionFailed(std::string(what) + ": " + render_map(f.map) + " is not a K-embedding");
        }

        struct PullbackCone
        {
            Substructure apex;
            std::vector<ElementMap> legs;
        };

        /// The intersection of the leg images, with its legs, or the reason it is not a cone.
        auto intersection_cone(const StructureClass & c, const Structure & n, const std::vector<const Structure *> & sources,
                               const std::vector<ElementMap> & maps, std::string & reason, ElementSet & where)
            -> std::optional<PullbackCone>
        {
            auto meet = n.universe();
            for (const auto & m : maps)
                meet = meet & image(m);
            where = meet;
            if (! is_function_closed(n, meet)) {
                reason = "intersection is not closed under the functions";
                return std::nullopt;
            }
            PullbackCone cone{induced_substructure(n, meet), {}};
            if (! c.member(cone.apex.structure)) {
                reason = "intersection is not a member";
                return std::nullopt;
            }
            for (std::size_t i = 0; i < maps.size(); ++i) {
                auto leg = compose_maps(partial_inverse(maps[i], n.size()), cone.apex.inclusion);
                if (! c.is_k_embedding(cone.apex.structure, *sources[i], leg)) {
                    reason = "intersection is not strong in leg " + std::to_string(i);
                    return std::nullopt;
                }
                cone.legs.push_back(std::move(leg));
            }
            return cone;
        }
    }

    auto equalizer(const StructureClass & c, const Morphism & f, const Morphism & g) -> LimitOutcome
    {
        require_k_embedding(c, f, "equalizer");
        require_k_embedding(c, g, "equalizer");
        if (! (*f.source == *g.source) || ! (*f.target == *g.target))
            throw PreconditionFailed("equalizer: morphisms are not parallel");
        const auto & m = *f.source;

        LimitOutcome out;
        ElementSet agree;
        for (int x = 0; x < m.size(); ++x)
            if (f.map[x] == g.map[x])
                agree.insert(x);
        auto cl = cl_k(c, m, agree);
        out.offending = agree;
        out.closure = cl.elements;
        if (cl.elements != agree || ! cl.strong) {
            out.reason = cl.strong ? "agreement set is not closed" : "closure of the agreement set is not strong";
            return out;
        }

        auto apex = induced_substructure(m, agree);
        LimitCertificate cert{.cone = Cone{apex.structure, {apex.inclusion}}};
        cert.competitor_bound = agree.size();
        auto back = partial_inverse(apex.inclusion, m.size());
        // a competitor as large as the apex maps onto it, so only the apex's own class can occur there
        auto apex_code = canonical_form(apex.structure).code;
        for (const auto & x : c.members_up_to(cert.competitor_bound)) {
            if (x.structure.size() == cert.competitor_bound && x.code != apex_code)
                continue;
            for (const auto & h : c.k_embeddings(x.structure, m)) {
                if (compose_maps(f.map, h) != compose_maps(g.map, h))
                    continue;
                auto u = compose_maps(back, h);
                if (! defined(u) || ! c.is_k_embedding(x.structure, apex.structure, u)) {
                    cert.verified = false;
                    cert.failure = "competitor " + render_map(h) + " does not factor";
                    out.certificate = std::move(cert);
                    return out;
                }
                cert.log.push_back({x.structure, {h}, u});
            }
        }
        out.certificate = std::move(cert);
        return out;
    }

    auto wide_pullback(const StructureClass & c, const std::vector<Morphism> & legs) -> LimitOutcome
    {
        if (legs.empty())
            throw PreconditionFailed("wide pullback of an empty family");
        for (const auto & l : legs) {
            require_k_embedding(c, l, "wide pullback");
            if (! (*l.target == *legs.front().target))
                throw PreconditionFailed("wide pullback: legs do not share a target");
        }
        const auto & n = *legs.front().target;
        std::vector<const Structure *> sources;
        std::vector<ElementMap> maps;
        for (const auto & l : legs) {
            sources.push_back(l.source.get());
            maps.push_back(l.map);
        }

        LimitOutcome out;
        auto cone = intersection_cone(c, n, sources, maps, out.reason, out.offending);
        out.closure = out.offending;
        if (! cone)
            return out;

        LimitCertificate cert{.cone = Cone{cone->apex.structure, cone->legs}};
        cert.competitor_bound = cone->apex.structure.size();
        auto back = partial_inverse(cone->apex.inclusion, n.size());
        std::vector<ElementMap> inverse;
        for (const auto & m : maps)
            inverse.push_back(partial_inverse(m, n.size()));

        for (const auto & x : c.members_up_to(cert.competitor_bound)) {
            for (const auto & x0 : c.k_embeddings(x.structure, *sources[0])) {
                auto into_n = compose_maps(maps[0], x0);
                std::vector<ElementMap> xs;
                bool is_cone = true;
                for (std::size_t i = 0; i < maps.size() && is_cone; ++i) {
                    auto xi = compose_maps(inverse[i], into_n);
                    is_cone = defined(xi) && c.is_k_embedding(x.structure, *sources[i], xi);
                    xs.push_back(std::move(xi));
                }
                if (! is_cone)
                    continue;
                auto u = compose_maps(back, into_n);
                bool factors = defined(u) && c.is_k_embedding(x.structure, cone->apex.structure, u);
                for (std::size_t i = 0; i < maps.size() && factors; ++i)
                    factors = compose_maps(cone->legs[i], u) == xs[i];
                if (! factors) {
                    cert.verified = false;
                    cert.failure = "competitor " + render_map(x0) + " does not factor";
                    break;
                }
                cert.log.push_back({x.structure, xs, u});
            }
        }
        out.certificate = std::move(cert);
        return out;
    }

    auto directed_colimit(const StructureClass & c, const DirectedSystem & system) -> ColimitReport
    {
        auto k = static_cast<int>(system.objects.size());
        if (k == 0)
            throw PreconditionFailed("directed colimit of an empty system");
        std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
        std::vector<std::vector<const DirectedSystem::Edge *>> out_edges(k);
        for (int i = 0; i < k; ++i)
            reach[i][i] = 1;
        for (const auto & e : system.edges) {
            if (e.from < 0 || e.from >= k || e.to < 0 || e.to >= k || e.from == e.to)
                throw PreconditionFailed("directed colimit: bad edge");
            if (! c.is_k_embedding(*system.objects[e.from], *system.objects[e.to], e.map))
                throw PreconditionFailed("directed colimit: edge " + std::to_string(e.from) + ">" + std::to_string(e.to)
                                         + " is not a K-embedding");
            reach[e.from][e.to] = 1;
            out_edges[e.from].push_back(&e);
        }
        for (int m = 0; m < k; ++m)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (reach[i][m] && reach[m][j])
                        reach[i][j] = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (reach[i][j] && reach[j][i])
                    throw PreconditionFailed("directed colimit: index is not a partial order");
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                bool bounded = false;
                for (int m = 0; m < k && ! bounded; ++m)
                    bounded = reach[i][m] && reach[j][m];
                if (! bounded)
                    throw PreconditionFailed("directed colimit: index is not directed");
            }

        int top_index = 0;
        for (int t = 0; t < k; ++t)
            if (std::all_of(reach.begin(), reach.end(), [&](const auto & row) { return row[t] != 0; }))
                top_index = t;
        const auto & top = *system.objects[top_index];
        ColimitReport report{.cocone = Cone{top, {}}, .top = top_index};

        // composites along every path into the top must coincide
        for (int i = 0; i < k; ++i) {
            std::set<ElementMap> composites;
            auto walk = [&](auto & self, int at, const ElementMap & so_far) -> void {
                if (at == report.top) {
                    composites.insert(so_far);
                    return;
                }
                for (const auto * e : out_edges[at])
                    self(self, e->to, compose_maps(e->map, so_far));
            };
            walk(walk, i, identity_map(system.objects[i]->size()));
            if (composites.size() != 1)
                throw PreconditionFailed("directed colimit: diagram does not commute");
            report.cocone.legs.push_back(*composites.begin());
        }

        for (const auto & n : c.members()) {
            if (n.structure.size() < top.size())
                continue;
            for (const auto & g : c.k_embeddings(top, n.structure)) {
                ++report.upper_bounds_checked;
                for (int i = 0; i < k; ++i)
                    if (! c.is_k_embedding(*system.objects[i], n.structure, compose_maps(g, report.cocone.legs[i])))
                        report.smooth = false;
            }
        }
        return report;
    }

    auto check_wide_pullbacks_exist(const StructureClass & c) -> PullbackExistenceReport
    {
        PullbackExistenceReport report;
        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            auto strong = c.strong_sets(n);
            std::vector<Substructure> subs;
            for (auto s : strong)
                subs.push_back(induced_substructure(n, s));
            for (std::size_t i = 0; i < strong.size(); ++i)
                for (std::size_t j = i; j < strong.size(); ++j) {
                    ++report.pairs_checked;
                    std::string reason;
                    ElementSet meet;
                    if (intersection_cone(c, n, {&subs[i].structure, &subs[j].structure},
                                          {subs[i].inclusion, subs[j].inclusion}, reason, meet))
                        continue;
                    report.pass = false;
                    report.ambient = n;
                    report.first = strong[i];
                    report.second = strong[j];
                    report.intersection = meet;
                    return report;
                }
        }
        return report;
    }
}
