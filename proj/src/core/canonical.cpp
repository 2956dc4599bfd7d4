#include <aectk/core/canonical.hpp>

#include <algorithm>
#include <map>

namespace aectk
{
    namespace
    {
        using Colouring = std::vector<int>;

        auto colour_count(const Colouring & c) -> int
        {
            int k = 0;
            for (auto x : c)
                k = std::max(k, x + 1);
            return c.empty() ? 0 : k;
        }

        /// Replaces each colour by the rank of (old colour, signature) so the cell order only ever refines.
        auto rerank(const Colouring & old, const std::vector<std::vector<int>> & keys) -> Colouring
        {
            std::vector<std::vector<int>> full(old.size());
            for (std::size_t x = 0; x < old.size(); ++x) {
                full[x].reserve(keys[x].size() + 1);
                full[x].push_back(old[x]);
                full[x].insert(full[x].end(), keys[x].begin(), keys[x].end());
            }
            auto sorted = full;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            Colouring out(old.size());
            for (std::size_t x = 0; x < old.size(); ++x)
                out[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), full[x]) - sorted.begin());
            return out;
        }

        /// Iterated refinement: an element's signature lists, for every tuple it occurs in, the symbol,
        /// the positions it occupies and the colours of the whole tuple.
        auto refine(const Structure & m, Colouring c) -> Colouring
        {
            auto & voc = m.vocabulary();
            int n = m.size();
            while (true) {
                std::vector<std::vector<std::vector<int>>> entries(n);
                auto note = [&] (int sym, const Tuple & t, int extra_tag, int extra_colour, Element value) {
                    for (int x = 0; x < n; ++x) {
                        int mask = 0;
                        for (std::size_t p = 0; p < t.size(); ++p)
                            if (t[p] == x)
                                mask |= 1 << p;
                        bool is_value = (value == x);
                        if (mask == 0 && ! is_value)
                            continue;
                        std::vector<int> e;
                        e.reserve(t.size() + 5);
                        e.push_back(sym);
                        e.push_back(mask);
                        e.push_back(extra_tag);
                        e.push_back(extra_colour);
                        e.push_back(is_value ? 1 : 0);
                        for (auto y : t)
                            e.push_back(c[y]);
                        entries[x].push_back(std::move(e));
                    }
                };
                int sym = 0;
                for (std::size_t r = 0; r < voc.relations().size(); ++r, ++sym)
                    for_each_tuple(n, voc.relations()[r].arity, [&] (const Tuple & t) {
                        if (! t.empty() && m.holds(r, t))
                            note(sym, t, 0, 0, -1);
                    });
                for (std::size_t f = 0; f < voc.functions().size(); ++f, ++sym)
                    for_each_tuple(n, voc.functions()[f].arity, [&] (const Tuple & t) {
                        auto v = m.apply(f, t);
                        note(sym, t, 1, c[v], v);
                    });

                std::vector<std::vector<int>> keys(n);
                for (int x = 0; x < n; ++x) {
                    auto & es = entries[x];
                    std::sort(es.begin(), es.end());
                    for (auto & e : es) {
                        keys[x].push_back(static_cast<int>(e.size()));
                        keys[x].insert(keys[x].end(), e.begin(), e.end());
                    }
                }
                auto next = rerank(c, keys);
                if (colour_count(next) == colour_count(c))
                    return next;
                c = std::move(next);
            }
        }

        auto encode(const Structure & m, std::span<const Element> point, const ElementMap & label) -> CanonicalCode
        {
            int n = m.size();
            auto & voc = m.vocabulary();
            ElementMap at(n);
            for (int x = 0; x < n; ++x)
                at[label[x]] = x;

            CanonicalCode code;
            code.push_back(static_cast<std::uint8_t>(n));
            code.push_back(static_cast<std::uint8_t>(point.size()));
            for (auto p : point)
                code.push_back(static_cast<std::uint8_t>(label[p]));
            for (std::size_t r = 0; r < voc.relations().size(); ++r) {
                // bits packed eight to a byte, tuples in lexicographic order of canonical labels
                std::uint8_t acc = 0;
                int filled = 0;
                for_each_tuple(n, voc.relations()[r].arity, [&] (const Tuple & t) {
                    Tuple orig(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        orig[i] = at[t[i]];
                    acc = static_cast<std::uint8_t>((acc << 1) | (m.holds(r, orig) ? 1 : 0));
                    if (++filled == 8) {
                        code.push_back(acc);
                        acc = 0;
                        filled = 0;
                    }
                });
                if (filled > 0)
                    code.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
            }
            for (std::size_t f = 0; f < voc.functions().size(); ++f)
                for_each_tuple(n, voc.functions()[f].arity, [&] (const Tuple & t) {
                    Tuple orig(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        orig[i] = at[t[i]];
                    code.push_back(static_cast<std::uint8_t>(label[m.apply(f, orig)]));
                });
            return code;
        }

        struct Search
        {
            const Structure & m;
            std::span<const Element> point;
            CanonicalForm best;
            bool have_best = false;

            void run(Colouring c)
            {
                c = refine(m, std::move(c));
                int n = m.size();
                std::vector<int> count(n, 0);
                for (auto x : c)
                    ++count[x];
                int target = -1;
                for (int k = 0; k < n; ++k)
                    if (count[k] > 1) {
                        target = k;
                        break;
                    }
                if (target < 0) {
                    auto code = encode(m, point, c);
                    if (! have_best || code < best.code) {
                        best.code = std::move(code);
                        best.witness = c;
                        have_best = true;
                    }
                    return;
                }
                for (int x = 0; x < n; ++x) {
                    if (c[x] != target)
                        continue;
                    // x keeps the cell's colour; the rest of the cell moves just after it
                    Colouring next(c);
                    for (int y = 0; y < n; ++y)
                        if (c[y] > target || (c[y] == target && y != x))
                            ++next[y];
                    run(std::move(next));
                }
            }
        };
    }

    auto canonical_form(const Structure & m, std::span<const Element> point) -> CanonicalForm
    {
        int n = m.size();
        // initial colour: the positions an element occupies in the point tuple
        std::vector<std::vector<int>> keys(n);
        for (std::size_t p = 0; p < point.size(); ++p)
            keys[point[p]].push_back(static_cast<int>(p));
        Colouring zero(n, 0);
        for (int x = 0; x < n; ++x)
            if (! keys[x].empty())
                keys[x].insert(keys[x].begin(), 1);
        Colouring initial = rerank(zero, keys);

        Search search{m, point, {}, false};
        if (n == 0) {
            search.best.code = encode(m, point, {});
            return search.best;
        }
        search.run(std::move(initial));
        return search.best;
    }

    auto canonical_form(const Structure & m) -> CanonicalForm
    {
        return canonical_form(m, std::span<const Element>{});
    }

    auto relabel(const Structure & m, const ElementMap & witness) -> Structure
    {
        int n = m.size();
        auto & voc = m.vocabulary();
        ElementMap at(n);
        for (int x = 0; x < n; ++x)
            at[witness[x]] = x;
        Structure out(m.vocabulary_ptr(), n);
        for (std::size_t r = 0; r < voc.relations().size(); ++r)
            for_each_tuple(n, voc.relations()[r].arity, [&] (const Tuple & t) {
                Tuple orig(t.size());
                for (std::size_t i = 0; i < t.size(); ++i)
                    orig[i] = at[t[i]];
                if (m.holds(r, orig))
                    out.set_relation(r, t, true);
            });
        for (std::size_t f = 0; f < voc.functions().size(); ++f)
            for_each_tuple(n, voc.functions()[f].arity, [&] (const Tuple & t) {
                Tuple orig(t.size());
                for (std::size_t i = 0; i < t.size(); ++i)
                    orig[i] = at[t[i]];
                out.set_function(f, t, witness[m.apply(f, orig)]);
            });
        return out;
    }

    auto canonical_structure(const Structure & m) -> Structure
    {
        return relabel(m, canonical_form(m).witness);
    }

    auto is_isomorphic(const Structure & a, const Structure & b) -> bool
    {
        return a.vocabulary().same_signature(b.vocabulary()) && canonical_form(a).code == canonical_form(b).code;
    }

    auto code_to_hex(const CanonicalCode & code) -> std::string
    {
        static const char * digits = "0123456789abcdef";
        std::string s;
        for (auto b : code) {
            s += digits[b >> 4];
            s += digits[b & 15];
        }
        return s;
    }
}
