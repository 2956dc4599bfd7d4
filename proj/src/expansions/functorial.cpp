#include <aectk/expansions/functorial.hpp>

#include <aectk/core/canonical.hpp>
#include <aectk/core/error.hpp>

#include <algorithm>
#include <map>

namespace aectk
{
    namespace
    {
        auto closure(const std::vector<ElementSet> & strong, ElementSet universe, ElementSet a) -> ElementSet
        {
            for (auto s : strong)
                if (a.subset_of(s))
                    universe = universe & s;
            return universe;
        }

        auto injective(const Tuple & t) -> bool
        {
            return ElementSet::of(t).size() == static_cast<int>(t.size());
        }

        auto class_of(const Structure & m, const std::vector<ElementSet> & strong, const Tuple & tuple)
            -> PointedIsoClass
        {
            Tuple a(tuple.begin(), tuple.end() - 1);
            auto b = tuple.back();
            auto sub = induced_substructure(m, closure(strong, m.universe(), ElementSet::of(tuple)));
            auto local = compose_maps(partial_inverse(sub.inclusion, m.size()), tuple);
            auto form = canonical_form(sub.structure, local);
            return PointedIsoClass{relabel(sub.structure, form.witness), compose_maps(form.witness, local), form.code,
                                   static_cast<int>(a.size()),
                                   closure(strong, m.universe(), ElementSet::of(a)).contains(b)};
        }

        /// Calls fn(ā) for every injective tuple of length k over 0..n-1.
        template <typename Fn>
        void for_each_injective(int n, int k, Fn && fn)
        {
            for_each_tuple(n, k, [&](const Tuple & t) {
                if (injective(t))
                    fn(t);
            });
        }

        auto with(Tuple t, Element b) -> Tuple
        {
            t.push_back(b);
            return t;
        }
    }

    auto local_character_bound(const StructureClass & c) -> int
    {
        int bound = 0;
        for (const auto & m : c.members()) {
            auto strong = c.strong_sets(m.structure);
            auto u = m.structure.universe();
            for (auto a : subsets_of(u)) {
                auto smaller = subsets_of(a);
                std::stable_sort(smaller.begin(), smaller.end(),
                                 [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
                for (auto b : closure(strong, u, a).elements())
                    for (auto a0 : smaller)
                        if (closure(strong, u, a0).contains(b)) {
                            bound = std::max(bound, a0.size());
                            break;
                        }
            }
        }
        return bound;
    }

    auto pointed_iso_class(const StructureClass & c, const Structure & m, const Tuple & tuple) -> PointedIsoClass
    {
        if (tuple.empty())
            throw PreconditionFailed("a pointed class needs at least the element b");
        return class_of(m, c.strong_sets(m), tuple);
    }

    auto realized_classes(const StructureClass & c) -> std::vector<PointedIsoClass>
    {
        auto bound = local_character_bound(c);
        std::map<CanonicalCode, PointedIsoClass> found;
        for (const auto & m : c.members()) {
            const auto & s = m.structure;
            auto strong = c.strong_sets(s);
            for (int k = 0; k <= std::min(bound, s.size()); ++k)
                for_each_injective(s.size(), k, [&](const Tuple & a) {
                    for (int b = 0; b < s.size(); ++b) {
                        auto cls = class_of(s, strong, with(a, b));
                        found.try_emplace(cls.code, std::move(cls));
                    }
                });
        }
        std::vector<PointedIsoClass> out;
        for (auto & [code, cls] : found)
            out.push_back(std::move(cls));
        return out;
    }

    auto coding_classes(const StructureClass & c) -> std::vector<PointedIsoClass>
    {
        auto all = realized_classes(c);
        std::erase_if(all, [](const PointedIsoClass & x) { return ! x.codes_closure; });
        return all;
    }

    auto functorial_expansion_universal(const StructureClass & c) -> ExpandedClass
    {
        if (c.contains_empty_member())
            throw PreconditionFailed("class " + c.name() + " contains the empty structure; pad it first");
        if (auto pu = check_pseudo_universal(c); ! pu.pass())
            throw PreconditionFailed("class " + c.name() + " is not pseudo-universal at scale");

        auto classes = std::make_shared<const std::vector<PointedIsoClass>>(coding_classes(c));
        std::vector<std::string> names;
        auto functions = c.vocabulary().functions();
        std::map<CanonicalCode, std::size_t> symbol_of;
        for (std::size_t i = 0; i < classes->size(); ++i) {
            names.push_back("fc" + std::to_string(i));
            functions.push_back({names.back(), (*classes)[i].arity});
            symbol_of.emplace((*classes)[i].code, i);
        }
        require_fresh(c.vocabulary(), names);
        auto vocab = make_vocabulary(c.vocabulary().name() + "-hat", c.vocabulary().relations(), functions);
        auto base_functions = c.vocabulary().functions().size();

        ExpandedClass e{c, vocab, Provenance::functorial, {}, {}, {}, {}};
        e.expand = [c, vocab, classes, symbol_of, base_functions](const Structure & m) {
            auto strong = c.strong_sets(m);
            int n = m.size();
            Structure out(vocab, n);
            const auto & v = m.vocabulary();
            for (std::size_t r = 0; r < v.relations().size(); ++r)
                for_each_tuple(n, v.relations()[r].arity, [&](const Tuple & t) { out.set_relation(r, t, m.holds(r, t)); });
            for (std::size_t f = 0; f < base_functions; ++f)
                for_each_tuple(n, v.functions()[f].arity, [&](const Tuple & t) { out.set_function(f, t, m.apply(f, t)); });

            // default value: the element realizing the least coding class of a lone element
            std::optional<std::pair<CanonicalCode, Element>> fallback;
            for (int b = 0; b < n; ++b) {
                auto cls = class_of(m, strong, Tuple{b});
                if (cls.codes_closure && (! fallback || cls.code < fallback->first))
                    fallback = std::pair{cls.code, b};
            }
            if (! fallback)
                throw PreconditionFailed("the closure of the empty set is empty");

            int max_arity = 0;
            for (const auto & cls : *classes)
                max_arity = std::max(max_arity, cls.arity);
            std::vector<std::map<Tuple, Element>> value(classes->size());
            for (int k = 0; k <= std::min(max_arity, n); ++k)
                for_each_injective(n, k, [&](const Tuple & a) {
                    for (int b = 0; b < n; ++b) {
                        auto it = symbol_of.find(class_of(m, strong, with(a, b)).code);
                        if (it == symbol_of.end())
                            continue;
                        if (value[it->second].contains(a))
                            throw InvariantViolation("two elements realize one closure-coding class");
                        value[it->second][a] = b;
                    }
                });
            for (std::size_t i = 0; i < classes->size(); ++i)
                for_each_tuple(n, (*classes)[i].arity, [&](const Tuple & a) {
                    auto it = value[i].find(a);
                    out.set_function(base_functions + i, a, it == value[i].end() ? fallback->second : it->second);
                });
            return out;
        };
        e.member = [c, expand = e.expand](const Structure & m) {
            auto r = reduct(m, c.vocabulary_ptr());
            return c.member(r) && expand(r) == m;
        };
        for (const auto & m : c.members())
            e.table.push_back({m.structure, e.expand(m.structure)});
        e.log.push_back("local character bound " + std::to_string(local_character_bound(c)));
        e.log.push_back("closure-coding classes " + std::to_string(classes->size()));
        return e;
    }

    auto check_expansion_contract(const ExpandedClass & e) -> ExpansionContractReport
    {
        ExpansionContractReport report;
        std::map<CanonicalCode, std::size_t> seen;
        for (std::size_t i = 0; i < e.table.size(); ++i) {
            const auto & entry = e.table[i];
            if (! (reduct(entry.expanded, e.base.vocabulary_ptr()) == entry.base) || ! e.member(entry.expanded)
                || ! seen.emplace(canonical_form(entry.expanded).code, i).second) {
                report.objects_bijective = false;
                report.failure = "object " + std::to_string(i) + " is not matched one-to-one";
                return report;
            }
        }
        for (const auto & from : e.table)
            for (const auto & to : e.table) {
                ++report.pairs_checked;
                auto base = e.base.k_embeddings(from.base, to.base);
                auto expanded = enumerate_embeddings(from.expanded, to.expanded);
                std::sort(base.begin(), base.end());
                std::sort(expanded.begin(), expanded.end());
                if (base != expanded) {
                    report.homs_bijective = false;
                    report.failure = "hom-sets differ between " + std::to_string(from.base.size()) + "- and "
                                   + std::to_string(to.base.size()) + "-element members";
                    return report;
                }
            }
        return report;
    }

    auto check_expansion_universal(const ExpandedClass & e) -> ExpandedUniversalReport
    {
        ExpandedUniversalReport report;
        for (const auto & entry : e.table)
            for (auto s : subsets_of(entry.expanded.universe())) {
                if (! is_function_closed(entry.expanded, s))
                    continue;
                ++report.subsets_checked;
                if (e.base.is_strong(entry.base, s))
                    continue;
                report.pass = false;
                report.ambient = entry.expanded;
                report.subset = s;
                return report;
            }
        return report;
    }
}
