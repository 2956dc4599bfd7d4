#include <aectk/classes/checks.hpp>

#include <aectk/core/error.hpp>

#include <algorithm>

namespace aectk
{
    namespace
    {
        auto preimage(const ElementMap & inclusion, ElementSet s) -> ElementSet
        {
            ElementSet out;
            for (std::size_t i = 0; i < inclusion.size(); ++i)
                if (s.contains(inclusion[i]))
                    out.insert(static_cast<Element>(i));
            return out;
        }

        auto closure_from(const std::vector<ElementSet> & strong, ElementSet universe, ElementSet a) -> Closure
        {
            Closure out;
            out.elements = universe;
            for (auto s : strong) {
                if (! a.subset_of(s))
                    continue;
                out.elements = out.elements & s;
                ++out.family_size;
            }
            if (out.family_size == 0)
                return out;
            out.strong = std::binary_search(strong.begin(), strong.end(), out.elements);
            return out;
        }
    }

    auto cl_k(const StructureClass & c, const Structure & n, ElementSet a) -> Closure
    {
        if (! a.subset_of(n.universe()))
            throw PreconditionFailed("closure of a set outside the universe");
        return closure_from(c.strong_sets(n), n.universe(), a);
    }

    auto strong_subs(const StructureClass & c, const Structure & n) -> std::vector<Substructure>
    {
        std::vector<Substructure> out;
        for (auto s : c.strong_sets(n))
            out.push_back(induced_substructure(n, s));
        return out;
    }

    auto check_coherence(const StructureClass & c) -> CoherenceReport
    {
        CoherenceReport report;
        for (const auto & m2 : c.members()) {
            auto strong = c.strong_sets(m2.structure);
            for (auto s1 : strong) {
                auto sub = induced_substructure(m2.structure, s1);
                for (auto s0 : strong) {
                    if (! s0.subset_of(s1))
                        continue;
                    ++report.triples_checked;
                    if (c.is_strong(sub.structure, preimage(sub.inclusion, s0)))
                        continue;
                    report.pass = false;
                    report.witness = CoherenceWitness{m2.structure, s0, s1};
                    return report;
                }
            }
        }
        return report;
    }

    auto check_chain_axioms(const StructureClass & c, int max_length) -> ChainReport
    {
        ChainReport report;
        report.structurally_certified = c.presentation() == Presentation::forbid;

        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            auto strong = c.strong_sets(n);
            // le[i][j]: strong[i] is a proper strong subset of the structure induced on strong[j]
            std::vector<std::vector<char>> le(strong.size(), std::vector<char>(strong.size(), 0));
            for (std::size_t j = 0; j < strong.size(); ++j) {
                auto sub = induced_substructure(n, strong[j]);
                for (std::size_t i = 0; i < strong.size(); ++i)
                    if (strong[i].proper_subset_of(strong[j]))
                        le[i][j] = c.is_strong(sub.structure, preimage(sub.inclusion, strong[i]));
            }

            std::vector<std::size_t> chain;
            auto fail = [&](const char * clause) {
                report.pass = false;
                std::vector<ElementSet> sets;
                for (auto i : chain)
                    sets.push_back(strong[i]);
                report.witness = ChainWitness{n, sets, clause};
            };
            auto visit = [&](auto & self) -> bool {
                ++report.chains_checked;
                report.longest_chain = std::max(report.longest_chain, static_cast<int>(chain.size()));
                auto top = strong[chain.back()];
                auto top_sub = induced_substructure(n, top);
                // union of the chain is its top; it must be a member above every stage
                if (! c.member(top_sub.structure)) {
                    fail("union");
                    return false;
                }
                for (auto i : chain)
                    if (! c.is_strong(top_sub.structure, preimage(top_sub.inclusion, strong[i]))) {
                        fail("stage-below-union");
                        return false;
                    }
                // smoothness: every stage is strong in n, so the union must be too
                if (! c.is_strong(n, top)) {
                    fail("smoothness");
                    return false;
                }
                if (static_cast<int>(chain.size()) == max_length)
                    return true;
                for (std::size_t j = 0; j < strong.size(); ++j) {
                    if (! le[chain.back()][j])
                        continue;
                    chain.push_back(j);
                    bool ok = self(self);
                    chain.pop_back();
                    if (! ok)
                        return false;
                }
                return true;
            };
            for (std::size_t i = 0; i < strong.size(); ++i) {
                chain = {i};
                if (! visit(visit))
                    return report;
            }
        }
        report.vacuous = report.longest_chain < 2;
        return report;
    }

    auto estimate_ls(const StructureClass & c) -> LsEstimate
    {
        LsEstimate est;
        est.raw.assign(c.scale() + 1, 0);
        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            auto strong = c.strong_sets(n);
            for (auto a : subsets_of(n.universe())) {
                int best = -1;
                for (auto s : strong)
                    if (a.subset_of(s) && (best < 0 || s.size() < best))
                        best = s.size();
                if (best < 0) {
                    est.failed = true;
                    est.witness = LsWitness{n, a};
                    return est;
                }
                est.raw[a.size()] = std::max(est.raw[a.size()], best);
            }
        }
        est.bound = est.raw;
        for (std::size_t a = 1; a < est.bound.size(); ++a)
            est.bound[a] = std::max(est.bound[a], est.bound[a - 1]);
        return est;
    }

    auto check_admits_intersections(const StructureClass & c) -> IntersectionReport
    {
        IntersectionReport report;
        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            auto strong = c.strong_sets(n);
            for (auto a : subsets_of(n.universe())) {
                auto cl = closure_from(strong, n.universe(), a);
                if (cl.strong)
                    continue;
                report.pass = false;
                report.witness = IntersectionWitness{n, a, cl};
                return report;
            }
        }
        return report;
    }

    auto check_pseudo_universal(const StructureClass & c) -> PseudoUniversalReport
    {
        PseudoUniversalReport report;
        if (auto pre = check_admits_intersections(c); ! pre.pass) {
            report.status = PseudoUniversalReport::Status::precondition_failed;
            report.precondition_witness = pre.witness;
            return report;
        }
        // f may be taken to be an inclusion of a strong set; A may be taken to be the whole agreement set
        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            for (auto s : c.strong_sets(n)) {
                auto sub = induced_substructure(n, s);
                auto sub_strong = c.strong_sets(sub.structure);
                for (const auto & g : c.k_embeddings(sub.structure, n)) {
                    ++report.pairs_checked;
                    ElementSet agree;
                    for (std::size_t i = 0; i < g.size(); ++i)
                        if (g[i] == sub.inclusion[i])
                            agree.insert(static_cast<Element>(i));
                    auto cl = closure_from(sub_strong, sub.structure.universe(), agree);
                    if (cl.elements.subset_of(agree))
                        continue;
                    report.status = PseudoUniversalReport::Status::fail;
                    report.witness = PseudoUniversalWitness{sub.structure, n, sub.inclusion, g, agree, cl.elements};
                    return report;
                }
            }
        }
        return report;
    }

    auto check_universal(const StructureClass & c) -> UniversalReport
    {
        UniversalReport report;
        report.structurally_certified = c.presentation() == Presentation::forbid;
        for (const auto & m : c.members()) {
            const auto & n = m.structure;
            for (auto s : subsets_of(n.universe())) {
                if (! is_function_closed(n, s))
                    continue;
                auto sub = induced_substructure(n, s);
                std::optional<UniversalWitness::Kind> kind;
                if (! c.member(sub.structure))
                    kind = UniversalWitness::Kind::substructure_not_member;
                else if (! c.is_strong(n, s))
                    kind = UniversalWitness::Kind::substructure_not_strong;
                if (! kind)
                    continue;
                report.pass = false;
                report.witness = UniversalWitness{*kind, n, s, sub.structure};
                return report;
            }
        }
        return report;
    }

    auto local_character(const StructureClass & c, const Structure & n, ElementSet a, ElementSet b) -> ElementSet
    {
        auto strong = c.strong_sets(n);
        auto full = closure_from(strong, n.universe(), a);
        if (! full.strong)
            throw PreconditionFailed("local character needs a strong closure of A");
        if (! b.subset_of(full.elements))
            throw PreconditionFailed("B is not inside the closure of A");
        auto candidates = subsets_of(a);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
        for (auto a0 : candidates)
            if (b.subset_of(closure_from(strong, n.universe(), a0).elements))
                return a0;
        return a;
    }
}
