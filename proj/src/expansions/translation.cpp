#include <aectk/expansions/translation.hpp>

#include <aectk/core/error.hpp>
#include <aectk/expansions/expanded_class.hpp>

namespace aectk
{
    auto emb_to_mod_translation(const VocabularyPtr & v) -> EmbModTranslation
    {
        std::vector<std::string> fresh{"neq"};
        auto relations = v->relations();
        for (const auto & r : v->relations()) {
            fresh.push_back("not_" + r.name);
            relations.push_back({"not_" + r.name, r.arity});
        }
        relations.push_back({"neq", 2});
        require_fresh(*v, fresh);
        return {v, make_vocabulary(v->name() + "-mod", relations, v->functions())};
    }

    auto EmbModTranslation::structure(const Structure & m) const -> Structure
    {
        if (! source->same_signature(m.vocabulary()))
            throw VocabularyMismatch("structure is not over " + source->name());
        const auto & v = *source;
        auto k = v.relations().size();
        Structure out(target, m.size());
        for (std::size_t r = 0; r < k; ++r)
            for_each_tuple(m.size(), v.relations()[r].arity, [&](const Tuple & t) {
                bool holds = m.holds(r, t);
                out.set_relation(r, t, holds);
                out.set_relation(k + r, t, ! holds);
            });
        for_each_tuple(m.size(), 2, [&](const Tuple & t) { out.set_relation(2 * k, t, t[0] != t[1]); });
        for (std::size_t f = 0; f < v.functions().size(); ++f)
            for_each_tuple(m.size(), v.functions()[f].arity,
                           [&](const Tuple & t) { out.set_function(f, t, m.apply(f, t)); });
        return out;
    }
}
