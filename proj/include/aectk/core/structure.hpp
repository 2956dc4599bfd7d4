#pragma once

#include <aectk/core/element_set.hpp>
#include <aectk/core/vocabulary.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace aectk
{
    using Tuple = std::vector<Element>;
    using ElementMap = std::vector<Element>;

    /// n^arity, the number of argument tuples of an `arity`-place symbol over an n-element universe.
    auto table_size(int n, int arity) -> std::size_t;

    /// Lexicographic rank of `tuple` among all tuples over 0..n-1 of its length.
    auto tuple_index(std::span<const Element> tuple, int n) -> std::size_t;

    auto decode_tuple(std::size_t index, int arity, int n) -> Tuple;

    /// Calls `fn(tuple)` for every tuple of length `arity` over 0..n-1 in lexicographic order.
    template <typename Fn>
    void for_each_tuple(int n, int arity, Fn && fn)
    {
        Tuple t(arity, 0);
        if (arity > 0 && n == 0)
            return;
        while (true) {
            fn(std::as_const(t));
            int p = arity - 1;
            while (p >= 0 && ++t[p] == n) {
                t[p] = 0;
                --p;
            }
            if (p < 0)
                return;
        }
    }

    /// A finite structure with universe 0..size-1 and total interpretations of every symbol.
    class Structure
    {
    public:
        /// All relations empty; all functions map to element 0.
        Structure(VocabularyPtr vocab, int size);

        auto vocabulary() const -> const Vocabulary & { return *vocab_; }
        auto vocabulary_ptr() const -> const VocabularyPtr & { return vocab_; }
        auto size() const -> int { return size_; }
        auto universe() const -> ElementSet { return ElementSet::full(size_); }

        auto holds(std::size_t relation, std::span<const Element> tuple) const -> bool
        {
            return relations_[relation][tuple_index(tuple, size_)] != 0;
        }

        auto apply(std::size_t function, std::span<const Element> tuple) const -> Element
        {
            return functions_[function][tuple_index(tuple, size_)];
        }

        void set_relation(std::size_t relation, std::span<const Element> tuple, bool value);
        void set_function(std::size_t function, std::span<const Element> tuple, Element value);

        auto relation_table(std::size_t r) const -> const std::vector<std::uint8_t> & { return relations_[r]; }
        auto function_table(std::size_t f) const -> const std::vector<Element> & { return functions_[f]; }

        friend auto operator==(const Structure & a, const Structure & b) -> bool;

    private:
        void check_tuple(std::span<const Element> tuple, int arity) const;

        VocabularyPtr vocab_;
        int size_;
        std::vector<std::vector<std::uint8_t>> relations_;
        std::vector<std::vector<Element>> functions_;
    };

    using StructurePtr = std::shared_ptr<const Structure>;

    inline auto share(Structure s) -> StructurePtr
    {
        return std::make_shared<const Structure>(std::move(s));
    }

    /// Throws VocabularyMismatch unless `a` and `b` share a signature.
    void require_same_signature(const Structure & a, const Structure & b, const char * what);

    /// Least superset of `seed` closed under every function of `m` (constants included).
    auto closure_under_functions(const Structure & m, ElementSet seed) -> ElementSet;

    auto is_function_closed(const Structure & m, ElementSet s) -> bool;

    struct Substructure
    {
        Structure structure;
        /// inclusion[i] is the element of the ambient structure that became element i.
        ElementMap inclusion;
    };

    /// The substructure induced on `s`, relabelled in increasing element order. `s` must be function-closed.
    auto induced_substructure(const Structure & m, ElementSet s) -> Substructure;

    /// The substructure generated by `seed`, together with its inclusion.
    auto generated_substructure(const Structure & m, ElementSet seed) -> Substructure;

    /// Same universe, interpretations restricted to the symbols of `sub`.
    auto reduct(const Structure & m, const VocabularyPtr & sub) -> Structure;

    /// Image of `s` under `map`.
    auto image(const ElementMap & map, ElementSet s) -> ElementSet;
    auto image(const ElementMap & map) -> ElementSet;

    /// Renders `structure NAME : VOCAB { ... }` in the workspace syntax.
    auto to_dsl(const Structure & m, const std::string & name) -> std::string;
}
