#pragma once

// Small structure builders shared by the unit and acceptance suites.

#include <aectk/core/structure.hpp>
#include <aectk/core/vocabulary.hpp>

#include <utility>
#include <vector>

namespace fixtures
{
    using namespace aectk;

    inline auto graph_vocab() -> VocabularyPtr { return make_vocabulary("graph", {{"E", 2}}, {}); }
    inline auto set_vocab() -> VocabularyPtr { return make_vocabulary("set", {}, {}); }
    inline auto order_vocab() -> VocabularyPtr { return make_vocabulary("order", {{"lt", 2}}, {}); }
    inline auto monoid_vocab() -> VocabularyPtr { return make_vocabulary("monoid", {}, {{"mul", 2}, {"e", 0}}); }
    inline auto group_vocab() -> VocabularyPtr { return make_vocabulary("group", {}, {{"mul", 2}, {"e", 0}, {"inv", 1}}); }
    inline auto unary_fn_vocab() -> VocabularyPtr { return make_vocabulary("unary", {}, {{"s", 1}}); }

    /// Symmetric edges.
    inline auto graph(const VocabularyPtr & v, int n, const std::vector<std::pair<int, int>> & edges) -> Structure
    {
        Structure g(v, n);
        for (auto [a, b] : edges) {
            g.set_relation(0, Tuple{a, b}, true);
            g.set_relation(0, Tuple{b, a}, true);
        }
        return g;
    }

    inline auto complete_graph(const VocabularyPtr & v, int n) -> Structure
    {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                e.emplace_back(a, b);
        return graph(v, n, e);
    }

    inline auto cycle_graph(const VocabularyPtr & v, int n) -> Structure
    {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n; ++a)
            e.emplace_back(a, (a + 1) % n);
        return graph(v, n, e);
    }

    inline auto path_graph(const VocabularyPtr & v, int n) -> Structure
    {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a + 1 < n; ++a)
            e.emplace_back(a, a + 1);
        return graph(v, n, e);
    }

    inline auto pure_set(const VocabularyPtr & v, int n) -> Structure { return Structure(v, n); }

    /// Strict linear order 0 < 1 < ... < n-1.
    inline auto chain(const VocabularyPtr & v, int n) -> Structure
    {
        Structure c(v, n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                c.set_relation(0, Tuple{a, b}, true);
        return c;
    }

    /// Group from a multiplication table; identity must be element 0. Adds inv when the vocabulary has it.
    inline auto group_from_table(const VocabularyPtr & v, const std::vector<std::vector<int>> & table) -> Structure
    {
        int n = static_cast<int>(table.size());
        Structure g(v, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                g.set_function(0, Tuple{a, b}, table[a][b]);
        g.set_function(1, Tuple{}, 0);
        if (v->functions().size() > 2)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (table[a][b] == 0)
                        g.set_function(2, Tuple{a}, b);
        return g;
    }

    inline auto cyclic_group(const VocabularyPtr & v, int n) -> Structure
    {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t[a][b] = (a + b) % n;
        return group_from_table(v, t);
    }

    /// Z_p x Z_q with (a, b) encoded as a * q + b.
    inline auto product_group(const VocabularyPtr & v, int p, int q) -> Structure
    {
        int n = p * q;
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                t[x][y] = ((x / q + y / q) % p) * q + (x % q + y % q) % q;
        return group_from_table(v, t);
    }

    /// S3 as permutations of {0,1,2}, identity first.
    inline auto symmetric_group_3(const VocabularyPtr & v) -> Structure
    {
        std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        int n = 6;
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<int> c(3);
                for (int i = 0; i < 3; ++i)
                    c[i] = perms[a][perms[b][i]];
                for (int k = 0; k < n; ++k)
                    if (perms[k] == c)
                        t[a][b] = k;
            }
        return group_from_table(v, t);
    }

    /// Unary successor on an n-cycle.
    inline auto successor_cycle(const VocabularyPtr & v, int n) -> Structure
    {
        Structure c(v, n);
        for (int a = 0; a < n; ++a)
            c.set_function(0, Tuple{a}, (a + 1) % n);
        return c;
    }
}
