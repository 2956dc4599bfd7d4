#include <aectk/classes/structure_class.hpp>

#include <aectk/core/canonical.hpp>
#include <aectk/core/error.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace aectk
{
    struct StructureClass::State
    {
        ClassDefinition def;
        std::map<CanonicalCode, std::size_t> explicit_codes;
        // strong sets of each explicit member, in its canonical labelling
        std::map<CanonicalCode, std::vector<ElementSet>> pair_strong;

        std::once_flag members_once;
        std::vector<CanonicalStructure> members;

        std::mutex smaller_mutex;
        std::map<int, std::vector<CanonicalStructure>> smaller;
    };

    namespace
    {
        auto preimage(const ElementMap & witness, ElementSet labels) -> ElementSet
        {
            ElementSet out;
            for (std::size_t x = 0; x < witness.size(); ++x)
                if (labels.contains(witness[x]))
                    out.insert(static_cast<Element>(x));
            return out;
        }

        void close_pairs(StructureClass::State & st, const std::map<CanonicalCode, Structure> & reps);
    }

    StructureClass::StructureClass(ClassDefinition definition) : state_(std::make_shared<State>())
    {
        auto & st = *state_;
        st.def = std::move(definition);
        auto & def = st.def;
        if (! def.vocab)
            throw InvariantViolation("class " + def.name + " has no vocabulary");
        if (def.scale < 0 || def.scale > max_universe)
            throw InvariantViolation("class " + def.name + ": scale out of range");
        if (def.presentation == Presentation::forbid && def.order != OrderKind::substructure)
            throw InvariantViolation("class " + def.name + ": forbid presentations use the substructure order");

        for (const auto & d : def.forbidden)
            if (! def.vocab->same_signature(d.shape().vocabulary()))
                throw VocabularyMismatch("class " + def.name + ": forbidden structure over another vocabulary");

        std::map<CanonicalCode, Structure> reps;
        if (def.presentation == Presentation::explicit_list) {
            for (const auto & m : def.members) {
                if (! def.vocab->same_signature(m.vocabulary()))
                    throw VocabularyMismatch("class " + def.name + ": member over another vocabulary");
                auto form = canonical_form(m);
                if (! reps.contains(form.code))
                    reps.emplace(form.code, relabel(m, form.witness));
            }
            def.members.clear();
            for (auto & [code, m] : reps) {
                st.explicit_codes.emplace(code, def.members.size());
                def.members.push_back(m);
            }
        }

        if (def.order == OrderKind::explicit_pairs) {
            if (def.presentation != Presentation::explicit_list)
                throw InvariantViolation("class " + def.name + ": pair orders need an explicit member list");
            close_pairs(st, reps);
        }
    }

    namespace
    {
        void close_pairs(StructureClass::State & st, const std::map<CanonicalCode, Structure> & reps)
        {
            const auto & def = st.def;
            std::map<CanonicalCode, std::set<ElementSet>> strong;
            for (const auto & [code, m] : reps)
                strong[code].insert(m.universe());

            for (const auto & p : def.pairs) {
                auto lower = canonical_form(p.lower);
                auto upper = canonical_form(p.upper);
                if (! st.explicit_codes.contains(lower.code) || ! st.explicit_codes.contains(upper.code))
                    throw InvariantViolation("class " + def.name + ": order pair between non-members");
                if (auto c = check_embedding(p.lower, p.upper, p.inclusion); ! c)
                    throw InvariantViolation("class " + def.name + ": order pair map is not an embedding: "
                                             + c.violation->describe());
                strong[upper.code].insert(image(upper.witness, image(p.inclusion)));
            }

            std::map<CanonicalCode, std::vector<ElementMap>> automorphisms;
            for (const auto & [code, m] : reps)
                automorphisms[code] = enumerate_embeddings(m, m);

            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto & [code, m] : reps) {
                    auto & sets = strong[code];
                    std::vector<ElementSet> current(sets.begin(), sets.end());
                    for (auto s : current) {
                        for (const auto & sigma : automorphisms[code])
                            changed |= sets.insert(image(sigma, s)).second;
                        auto sub = induced_substructure(m, s);
                        auto form = canonical_form(sub.structure);
                        if (! st.explicit_codes.contains(form.code))
                            throw InvariantViolation("class " + def.name + ": strong substructure "
                                                     + s.to_string() + " is not a member");
                        for (auto t : strong[form.code])
                            changed |= sets.insert(image(sub.inclusion, preimage(form.witness, t))).second;
                    }
                }
            }
            for (auto & [code, sets] : strong)
                st.pair_strong[code] = std::vector<ElementSet>(sets.begin(), sets.end());
        }
    }

    auto StructureClass::definition() const -> const ClassDefinition &
    {
        return state_->def;
    }

    auto StructureClass::with_scale(int scale) const -> StructureClass
    {
        auto def = state_->def;
        def.scale = scale;
        return StructureClass{std::move(def)};
    }

    auto StructureClass::member(const Structure & m) const -> bool
    {
        const auto & def = state_->def;
        if (! def.vocab->same_signature(m.vocabulary()))
            throw VocabularyMismatch("structure is not over the vocabulary of class " + def.name);
        if (def.presentation == Presentation::explicit_list)
            return state_->explicit_codes.contains(canonical_form(m).code);
        return std::none_of(def.forbidden.begin(), def.forbidden.end(),
                            [&](const DiagramType & d) { return exists_embedding(d.shape(), m); });
    }

    auto StructureClass::members() const -> const std::vector<CanonicalStructure> &
    {
        auto & st = *state_;
        std::call_once(st.members_once, [&] {
            const auto & def = st.def;
            if (def.presentation == Presentation::explicit_list) {
                for (const auto & [code, index] : st.explicit_codes)
                    if (def.members[index].size() <= def.scale)
                        st.members.push_back({code, def.members[index]});
                return;
            }
            auto all = enumerate_structures(def.vocab, def.scale, def.enumeration_ceiling);
            for (const auto & s : *all)
                if (member(s.structure))
                    st.members.push_back(s);
        });
        return st.members;
    }

    auto StructureClass::members_up_to(int k) const -> const std::vector<CanonicalStructure> &
    {
        if (k >= scale())
            return members();
        auto & st = *state_;
        std::lock_guard lock(st.smaller_mutex);
        auto it = st.smaller.find(k);
        if (it == st.smaller.end())
            it = st.smaller.emplace(k, with_scale(k).members()).first;
        return it->second;
    }

    auto StructureClass::is_strong(const Structure & n, ElementSet s) const -> bool
    {
        if (! s.subset_of(n.universe()))
            return false;
        const auto & def = state_->def;
        if (def.order == OrderKind::substructure) {
            if (! is_function_closed(n, s))
                return false;
            return def.presentation == Presentation::forbid || member(induced_substructure(n, s).structure);
        }
        auto form = canonical_form(n);
        auto it = state_->pair_strong.find(form.code);
        if (it == state_->pair_strong.end())
            return false;
        return std::binary_search(it->second.begin(), it->second.end(), image(form.witness, s));
    }

    auto StructureClass::strong_sets(const Structure & n) const -> std::vector<ElementSet>
    {
        if (! member(n))
            throw PreconditionFailed("strong substructures requested of a non-member of " + name());
        std::vector<ElementSet> out;
        if (order_kind() == OrderKind::substructure) {
            for (auto s : subsets_of(n.universe()))
                if (is_strong(n, s))
                    out.push_back(s);
            return out;
        }
        auto form = canonical_form(n);
        for (auto t : state_->pair_strong.at(form.code))
            out.push_back(preimage(form.witness, t));
        std::sort(out.begin(), out.end());
        return out;
    }

    auto StructureClass::is_k_embedding(const Structure & m, const Structure & n, const ElementMap & f) const -> bool
    {
        return check_embedding(m, n, f).ok && is_strong(n, image(f));
    }

    auto StructureClass::k_embeddings(const Structure & m, const Structure & n) const -> std::vector<ElementMap>
    {
        auto strong = strong_sets(n);
        std::vector<ElementMap> out;
        for (auto & f : enumerate_embeddings(m, n))
            if (std::binary_search(strong.begin(), strong.end(), image(f)))
                out.push_back(std::move(f));
        return out;
    }

    auto StructureClass::contains_empty_member() const -> bool
    {
        if (vocabulary().has_constants())
            return false;
        return member(Structure{vocabulary_ptr(), 0});
    }
}
