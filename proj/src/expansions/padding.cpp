#include <aectk/expansions/padding.hpp>

#include <aectk/expansions/expanded_class.hpp>

#include <algorithm>

namespace aectk
{
    auto padded_vocabulary(const Vocabulary & v, const std::string & constant) -> VocabularyPtr
    {
        require_fresh(v, {constant});
        auto functions = v.functions();
        functions.push_back({constant, 0});
        return make_vocabulary(v.name() + "-padded", v.relations(), functions);
    }

    auto pad_structure(const Structure & m, const VocabularyPtr & padded_vocab) -> Structure
    {
        const auto & v = m.vocabulary();
        int n = m.size();
        Element bar = n;
        Structure out(padded_vocab, n + 1);
        auto touches = [&](const Tuple & t) { return std::find(t.begin(), t.end(), bar) != t.end(); };
        for (std::size_t r = 0; r < v.relations().size(); ++r)
            for_each_tuple(n + 1, v.relations()[r].arity,
                           [&](const Tuple & t) { out.set_relation(r, t, touches(t) || m.holds(r, t)); });
        for (std::size_t f = 0; f < v.functions().size(); ++f)
            for_each_tuple(n + 1, v.functions()[f].arity,
                           [&](const Tuple & t) { out.set_function(f, t, touches(t) ? bar : m.apply(f, t)); });
        out.set_function(v.functions().size(), Tuple{}, bar);
        return out;
    }

    auto pad_nonempty(const StructureClass & c, const std::string & constant) -> StructureClass
    {
        auto pv = padded_vocabulary(c.vocabulary(), constant);
        ClassDefinition d;
        d.name = c.name() + "-padded";
        d.vocab = pv;
        d.order = OrderKind::explicit_pairs;
        d.scale = c.scale() + 1;
        d.enumeration_ceiling = c.definition().enumeration_ceiling;
        for (const auto & m : c.members()) {
            auto upper = pad_structure(m.structure, pv);
            d.members.push_back(upper);
            for (auto s : c.strong_sets(m.structure)) {
                if (s == m.structure.universe())
                    continue;
                auto sub = induced_substructure(m.structure, s);
                auto inclusion = sub.inclusion;
                inclusion.push_back(m.structure.size());
                d.pairs.push_back({pad_structure(sub.structure, pv), upper, inclusion});
            }
        }
        return StructureClass{std::move(d)};
    }
}
