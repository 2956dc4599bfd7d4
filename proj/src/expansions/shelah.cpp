#include <aectk/expansions/shelah.hpp>

#include <aectk/core/canonical.hpp>
#include <aectk/core/error.hpp>

#include <algorithm>

namespace aectk
{
    namespace
    {
        auto resolve(const StructureClass & c, MsPolicy policy) -> MsPolicy
        {
            if (policy != MsPolicy::automatic)
                return policy;
            return check_admits_intersections(c).pass ? MsPolicy::closure : MsPolicy::greedy;
        }

        auto policy_name(MsPolicy p) -> const char *
        {
            switch (p) {
            case MsPolicy::closure:
                return "closure";
            case MsPolicy::greedy:
                return "greedy";
            case MsPolicy::top:
                return "top";
            default:
                return "automatic";
            }
        }

        /// Pull the structure of `c` on image(h) back along h.
        auto pull_back(const Structure & c, const ElementMap & h, int size) -> Structure
        {
            const auto & v = c.vocabulary();
            Structure out(c.vocabulary_ptr(), size);
            auto back = partial_inverse(h, c.size());
            for (std::size_t r = 0; r < v.relations().size(); ++r)
                for_each_tuple(size, v.relations()[r].arity,
                               [&](const Tuple & t) { out.set_relation(r, t, c.holds(r, compose_maps(h, t))); });
            for (std::size_t f = 0; f < v.functions().size(); ++f)
                for_each_tuple(size, v.functions()[f].arity,
                               [&](const Tuple & t) { out.set_function(f, t, back[c.apply(f, compose_maps(h, t))]); });
            return out;
        }
    }

    auto choose_ms(const StructureClass & c, const Structure & m, MsPolicy policy) -> std::vector<ElementSet>
    {
        policy = resolve(c, policy);
        auto strong = c.strong_sets(m);
        auto u = m.universe();
        std::vector<ElementSet> ms(std::size_t{1} << m.size());
        auto order = subsets_of(u);
        std::stable_sort(order.begin(), order.end(), [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
        for (auto s : order) {
            ElementSet chosen = u;
            switch (policy) {
            case MsPolicy::closure:
                for (auto t : strong)
                    if (s.subset_of(t))
                        chosen = chosen & t;
                if (! std::binary_search(strong.begin(), strong.end(), chosen))
                    throw PreconditionFailed("closure of " + s.to_string() + " is not strong");
                break;
            case MsPolicy::greedy: {
                auto need = s;
                for (auto x : s.elements()) {
                    auto t = s;
                    t.erase(x);
                    need = need | ms[t.bits()];
                }
                for (auto t : strong)
                    if (need.subset_of(t) && t.size() < chosen.size())
                        chosen = t;
                break;
            }
            default:
                break;
            }
            ms[s.bits()] = chosen;
        }
        return ms;
    }

    auto shelah_symbol(int i, int alpha) -> std::string
    {
        return "f" + std::to_string(i) + "_" + std::to_string(alpha);
    }

    auto in_k_prime(const StructureClass & base, const Structure & expanded) -> bool
    {
        auto r = reduct(expanded, base.vocabulary_ptr());
        if (! base.member(r))
            return false;
        for (auto a : subsets_of(expanded.universe()))
            if (! base.is_strong(r, closure_under_functions(expanded, a)))
                return false;
        return true;
    }

    auto in_k_double_prime(const StructureClass & base, const Structure & expanded) -> bool
    {
        if (! in_k_prime(base, expanded))
            return false;
        for (auto s : base.strong_sets(reduct(expanded, base.vocabulary_ptr())))
            if (! is_function_closed(expanded, s))
                return false;
        return true;
    }

    auto shelah_expansion(const StructureClass & c, const LsEstimate & ls, MsPolicy policy) -> ExpandedClass
    {
        if (ls.failed)
            throw PreconditionFailed("the Lowenheim-Skolem estimate of " + c.name() + " failed");
        if (c.contains_empty_member())
            throw PreconditionFailed("class " + c.name() + " contains the empty structure; pad it first");
        if (! check_coherence(c).pass)
            throw PreconditionFailed("class " + c.name() + " is not coherent at scale");
        policy = resolve(c, policy);

        int width = std::max(1, ls.worst());
        int arity_cap = c.scale();
        auto functions = c.vocabulary().functions();
        std::vector<std::string> names;
        struct Symbol
        {
            int i;
            int alpha;
        };
        std::vector<Symbol> symbols;
        for (int alpha = 0; alpha < arity_cap; ++alpha)
            for (int i = 0; i < width; ++i) {
                names.push_back(shelah_symbol(i, alpha));
                functions.push_back({names.back(), alpha});
                symbols.push_back({i, alpha});
            }
        require_fresh(c.vocabulary(), names);
        auto vocab = make_vocabulary(c.vocabulary().name() + "-prime", c.vocabulary().relations(), functions);
        auto base_functions = c.vocabulary().functions().size();

        ExpandedClass e{c, vocab, Provenance::shelah, {}, {}, {}, {}};
        e.expand = [c, vocab, symbols, base_functions, policy](const Structure & m) {
            auto ms = choose_ms(c, m, policy);
            int n = m.size();
            Structure out(vocab, n);
            const auto & v = m.vocabulary();
            for (std::size_t r = 0; r < v.relations().size(); ++r)
                for_each_tuple(n, v.relations()[r].arity, [&](const Tuple & t) { out.set_relation(r, t, m.holds(r, t)); });
            for (std::size_t f = 0; f < base_functions; ++f)
                for_each_tuple(n, v.functions()[f].arity, [&](const Tuple & t) { out.set_function(f, t, m.apply(f, t)); });
            for (std::size_t k = 0; k < symbols.size(); ++k)
                for_each_tuple(n, symbols[k].alpha, [&](const Tuple & t) {
                    auto elems = ms[ElementSet::of(t).bits()].elements();
                    auto i = std::min<std::size_t>(symbols[k].i, elems.size() - 1);
                    out.set_function(base_functions + k, t, elems[i]);
                });
            return out;
        };
        e.member = [c](const Structure & m) { return in_k_prime(c, m); };

        std::size_t oversized = 0;
        for (const auto & m : c.members()) {
            e.table.push_back({m.structure, e.expand(m.structure)});
            auto ms = choose_ms(c, m.structure, policy);
            for (auto s : subsets_of(m.structure.universe()))
                if (ms[s.bits()].size() > ls.bound[std::min<std::size_t>(s.size(), ls.bound.size() - 1)])
                    ++oversized;
        }
        e.log.push_back(std::string("choice of M_s: ") + policy_name(policy));
        e.log.push_back("new symbols " + std::to_string(symbols.size()) + " (width " + std::to_string(width)
                        + ", arities below " + std::to_string(arity_cap) + ")");
        e.log.push_back("M_s above the estimate: " + std::to_string(oversized));
        return e;
    }

    auto k_double_prime(const ExpandedClass & e) -> KDoublePrimeResult
    {
        if (e.provenance != Provenance::shelah)
            throw PreconditionFailed("the K'' refinement applies to Shelah expansions");
        if (auto ai = check_admits_intersections(e.base); ! ai.pass)
            throw PreconditionFailed("class " + e.base.name() + " does not admit intersections");
        std::vector<KDoublePrimeViolation> violations;
        for (const auto & entry : e.table)
            for (auto s : e.base.strong_sets(entry.base))
                if (! is_function_closed(entry.expanded, s)) {
                    violations.push_back({entry.expanded, s});
                    break;
                }
        auto repaired = shelah_expansion(e.base, estimate_ls(e.base), MsPolicy::closure);
        repaired.member = [base = e.base](const Structure & m) { return in_k_double_prime(base, m); };
        repaired.log.push_back("K'' repair: " + std::to_string(violations.size()) + " members rebuilt");
        return {std::move(repaired), std::move(violations)};
    }

    auto check_pullback_full(const ExpandedClass & e, int max_family) -> PullbackFullReport
    {
        PullbackFullReport report;
        report.max_family = max_family;
        const auto & base = e.base;
        for (const auto & entry : e.table) {
            const auto & c = entry.expanded;
            std::vector<Substructure> closed;
            std::vector<ElementSet> closed_sets;
            for (auto s : subsets_of(c.universe())) {
                if (! is_function_closed(c, s))
                    continue;
                auto sub = induced_substructure(c, s);
                if (! e.member(sub.structure))
                    continue;
                closed.push_back(std::move(sub));
                closed_sets.push_back(s);
            }

            // families as non-decreasing index sequences of length 1..max_family
            std::vector<std::size_t> family;
            auto run = [&](const std::vector<std::size_t> & fam) -> bool {
                auto meet = c.universe();
                for (auto i : fam)
                    meet = meet & closed_sets[i];
                for (const auto & a : base.members()) {
                    if (a.structure.size() > meet.size())
                        continue;
                    for (const auto & h : base.k_embeddings(a.structure, entry.base)) {
                        if (! image(h).subset_of(meet))
                            continue;
                        std::vector<ElementMap> legs;
                        bool valid = true;
                        for (auto i : fam) {
                            auto g = compose_maps(partial_inverse(closed[i].inclusion, c.size()), h);
                            valid = valid
                                 && base.is_k_embedding(a.structure,
                                                        reduct(closed[i].structure, base.vocabulary_ptr()), g);
                            legs.push_back(std::move(g));
                        }
                        if (! valid)
                            continue;
                        ++report.instances_checked;
                        bool lifts = is_function_closed(c, image(h));
                        if (lifts) {
                            auto lifted = pull_back(c, h, a.structure.size());
                            lifts = reduct(lifted, base.vocabulary_ptr()) == a.structure && e.member(lifted);
                            for (std::size_t j = 0; j < fam.size() && lifts; ++j)
                                lifts = check_embedding(lifted, closed[fam[j]].structure, legs[j]).ok;
                        }
                        if (lifts)
                            continue;
                        std::vector<ElementSet> sets;
                        for (auto i : fam)
                            sets.push_back(closed_sets[i]);
                        report.pass = false;
                        report.witness = PullbackFullWitness{c, sets, a.structure, h};
                        return false;
                    }
                }
                return true;
            };
            auto extend = [&](auto & self, std::size_t from) -> bool {
                if (! family.empty() && ! run(family))
                    return false;
                if (static_cast<int>(family.size()) == max_family)
                    return true;
                for (std::size_t i = from; i < closed.size(); ++i) {
                    family.push_back(i);
                    bool ok = self(self, i);
                    family.pop_back();
                    if (! ok)
                        return false;
                }
                return true;
            };
            if (! extend(extend, 0))
                return report;
        }
        return report;
    }

    auto check_reduct_functor(const ExpandedClass & e) -> ReductFunctorReport
    {
        ReductFunctorReport report;
        const auto & bv = e.base.vocabulary_ptr();
        for (const auto & entry : e.table) {
            ++report.members_checked;
            report.objects_in_domain = report.objects_in_domain && e.member(entry.expanded);
            report.surjective_on_objects = report.surjective_on_objects && reduct(entry.expanded, bv) == entry.base;
            // a greatest-element system has the top as colimit; its reduct is the reduct of the top
            for (auto s : e.base.strong_sets(entry.base)) {
                if (! is_function_closed(entry.expanded, s))
                    continue;
                auto up = reduct(induced_substructure(entry.expanded, s).structure, bv);
                report.preserves_directed_colimits
                    = report.preserves_directed_colimits && up == induced_substructure(entry.base, s).structure;
            }
        }
        return report;
    }
}
