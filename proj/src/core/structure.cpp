#include <aectk/core/structure.hpp>
#include <aectk/core/error.hpp>

#include <string>

namespace aectk
{
    auto table_size(int n, int arity) -> std::size_t
    {
        std::size_t r = 1;
        for (int i = 0; i < arity; ++i)
            r *= static_cast<std::size_t>(n);
        return r;
    }

    auto tuple_index(std::span<const Element> tuple, int n) -> std::size_t
    {
        std::size_t idx = 0;
        for (auto e : tuple)
            idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(e);
        return idx;
    }

    auto decode_tuple(std::size_t index, int arity, int n) -> Tuple
    {
        Tuple t(arity, 0);
        for (int p = arity - 1; p >= 0; --p) {
            t[p] = static_cast<Element>(index % static_cast<std::size_t>(n));
            index /= static_cast<std::size_t>(n);
        }
        return t;
    }

    Structure::Structure(VocabularyPtr vocab, int size) :
        vocab_(std::move(vocab)),
        size_(size)
    {
        if (size_ < 0 || size_ > max_universe)
            throw InvariantViolation("universe size " + std::to_string(size_) + " outside 0.." + std::to_string(max_universe));
        for (auto & r : vocab_->relations())
            relations_.emplace_back(table_size(size_, r.arity), 0);
        for (auto & f : vocab_->functions()) {
            if (f.arity == 0 && size_ == 0)
                throw InvariantViolation("constant '" + f.name + "' cannot be interpreted in the empty structure");
            functions_.emplace_back(table_size(size_, f.arity), 0);
        }
    }

    void Structure::check_tuple(std::span<const Element> tuple, int arity) const
    {
        if (static_cast<int>(tuple.size()) != arity)
            throw InvariantViolation("tuple of length " + std::to_string(tuple.size()) + " for a symbol of arity " + std::to_string(arity));
        for (auto e : tuple)
            if (e < 0 || e >= size_)
                throw InvariantViolation("element " + std::to_string(e) + " outside universe of size " + std::to_string(size_));
    }

    void Structure::set_relation(std::size_t relation, std::span<const Element> tuple, bool value)
    {
        check_tuple(tuple, vocab_->relations().at(relation).arity);
        relations_[relation][tuple_index(tuple, size_)] = value ? 1 : 0;
    }

    void Structure::set_function(std::size_t function, std::span<const Element> tuple, Element value)
    {
        check_tuple(tuple, vocab_->functions().at(function).arity);
        if (value < 0 || value >= size_)
            throw InvariantViolation("function value " + std::to_string(value) + " outside universe of size " + std::to_string(size_));
        functions_[function][tuple_index(tuple, size_)] = value;
    }

    auto operator==(const Structure & a, const Structure & b) -> bool
    {
        return a.size_ == b.size_ && a.vocab_->same_signature(*b.vocab_) && a.relations_ == b.relations_ && a.functions_ == b.functions_;
    }

    void require_same_signature(const Structure & a, const Structure & b, const char * what)
    {
        if (! a.vocabulary().same_signature(b.vocabulary()))
            throw VocabularyMismatch(std::string(what) + ": vocabularies '" + a.vocabulary().name() + "' and '" + b.vocabulary().name() + "' differ");
    }

    auto closure_under_functions(const Structure & m, ElementSet seed) -> ElementSet
    {
        auto & fns = m.vocabulary().functions();
        ElementSet current = seed;
        for (std::size_t f = 0; f < fns.size(); ++f)
            if (fns[f].arity == 0)
                current.insert(m.function_table(f)[0]);

        bool changed = true;
        while (changed) {
            changed = false;
            auto elems = current.elements();
            int k = static_cast<int>(elems.size());
            for (std::size_t f = 0; f < fns.size(); ++f) {
                int arity = fns[f].arity;
                if (arity == 0)
                    continue;
                for_each_tuple(k, arity, [&] (const Tuple & pos) {
                    Tuple t(arity);
                    for (int i = 0; i < arity; ++i)
                        t[i] = elems[pos[i]];
                    auto v = m.apply(f, t);
                    if (! current.contains(v)) {
                        current.insert(v);
                        changed = true;
                    }
                });
            }
        }
        return current;
    }

    auto is_function_closed(const Structure & m, ElementSet s) -> bool
    {
        return closure_under_functions(m, s) == s;
    }

    auto induced_substructure(const Structure & m, ElementSet s) -> Substructure
    {
        if (! is_function_closed(m, s))
            throw PreconditionFailed("induced substructure on " + s.to_string() + " is not closed under the functions");
        auto elems = s.elements();
        int k = static_cast<int>(elems.size());
        std::vector<Element> back(m.size(), -1);
        for (int i = 0; i < k; ++i)
            back[elems[i]] = i;

        Structure sub(m.vocabulary_ptr(), k);
        auto & voc = m.vocabulary();
        for (std::size_t r = 0; r < voc.relations().size(); ++r)
            for_each_tuple(k, voc.relations()[r].arity, [&] (const Tuple & t) {
                Tuple outer(t.size());
                for (std::size_t i = 0; i < t.size(); ++i)
                    outer[i] = elems[t[i]];
                if (m.holds(r, outer))
                    sub.set_relation(r, t, true);
            });
        for (std::size_t f = 0; f < voc.functions().size(); ++f)
            for_each_tuple(k, voc.functions()[f].arity, [&] (const Tuple & t) {
                Tuple outer(t.size());
                for (std::size_t i = 0; i < t.size(); ++i)
                    outer[i] = elems[t[i]];
                sub.set_function(f, t, back[m.apply(f, outer)]);
            });
        return Substructure{std::move(sub), std::move(elems)};
    }

    auto generated_substructure(const Structure & m, ElementSet seed) -> Substructure
    {
        if (! seed.subset_of(m.universe()))
            throw PreconditionFailed("generating set " + seed.to_string() + " is not inside the universe");
        return induced_substructure(m, closure_under_functions(m, seed));
    }

    auto reduct(const Structure & m, const VocabularyPtr & sub) -> Structure
    {
        auto & voc = m.vocabulary();
        if (! voc.contains_signature(*sub))
            throw VocabularyMismatch("reduct: vocabulary '" + sub->name() + "' is not a sub-signature of '" + voc.name() + "'");
        Structure r(sub, m.size());
        for (std::size_t i = 0; i < sub->relations().size(); ++i) {
            auto src = *voc.find_relation(sub->relations()[i].name);
            for_each_tuple(m.size(), sub->relations()[i].arity, [&] (const Tuple & t) {
                if (m.holds(src, t))
                    r.set_relation(i, t, true);
            });
        }
        for (std::size_t i = 0; i < sub->functions().size(); ++i) {
            auto src = *voc.find_function(sub->functions()[i].name);
            for_each_tuple(m.size(), sub->functions()[i].arity, [&] (const Tuple & t) { r.set_function(i, t, m.apply(src, t)); });
        }
        return r;
    }

    auto image(const ElementMap & map, ElementSet s) -> ElementSet
    {
        ElementSet out;
        for (auto e : s.elements())
            out.insert(map[e]);
        return out;
    }

    auto image(const ElementMap & map) -> ElementSet
    {
        ElementSet out;
        for (auto e : map)
            out.insert(e);
        return out;
    }

    namespace
    {
        auto render_tuple(const Tuple & t) -> std::string
        {
            std::string s = "(";
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i)
                    s += ",";
                s += std::to_string(t[i]);
            }
            return s + ")";
        }
    }

    auto to_dsl(const Structure & m, const std::string & name) -> std::string
    {
        auto & voc = m.vocabulary();
        std::string out = "structure " + name + " : " + voc.name() + " {\n";
        out += "    universe " + std::to_string(m.size()) + ";\n";
        for (std::size_t r = 0; r < voc.relations().size(); ++r) {
            std::string line;
            for_each_tuple(m.size(), voc.relations()[r].arity, [&] (const Tuple & t) {
                if (m.holds(r, t))
                    line += " " + render_tuple(t);
            });
            if (! line.empty())
                out += "    rel " + voc.relations()[r].name + ":" + line + ";\n";
        }
        for (std::size_t f = 0; f < voc.functions().size(); ++f) {
            std::string line;
            for_each_tuple(m.size(), voc.functions()[f].arity, [&] (const Tuple & t) {
                line += " " + render_tuple(t) + "->" + std::to_string(m.apply(f, t));
            });
            if (! line.empty())
                out += "    fun " + voc.functions()[f].name + ":" + line + ";\n";
        }
        return out + "}\n";
    }
}
