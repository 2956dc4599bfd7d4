#include <aectk/core/morphism.hpp>
#include <aectk/core/error.hpp>

#include <algorithm>

namespace aectk
{
    auto MapViolation::describe() const -> std::string
    {
        std::string t = "(";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            t += (i ? "," : "") + std::to_string(tuple[i]);
        t += ")";
        switch (kind) {
            case Kind::not_total: return "map is not total on the source universe";
            case Kind::out_of_range: return "map sends " + t + " outside the target universe";
            case Kind::not_injective: return "map is not injective: " + t + " collide";
            case Kind::function_not_preserved: return "function " + symbol + " not preserved at " + t;
            case Kind::relation_not_preserved: return "relation " + symbol + " not preserved at " + t;
            case Kind::relation_not_reflected: return "relation " + symbol + " not reflected at " + t;
        }
        return "unknown violation";
    }

    namespace
    {
        auto check_map(const Structure & m, const Structure & n, const ElementMap & map, bool embedding) -> MapCheck
        {
            if (static_cast<int>(map.size()) != m.size())
                return {false, MapViolation{MapViolation::Kind::not_total, "", {}}};
            for (int x = 0; x < m.size(); ++x)
                if (map[x] < 0 || map[x] >= n.size())
                    return {false, MapViolation{MapViolation::Kind::out_of_range, "", {x}}};
            if (embedding)
                for (int x = 0; x < m.size(); ++x)
                    for (int y = x + 1; y < m.size(); ++y)
                        if (map[x] == map[y])
                            return {false, MapViolation{MapViolation::Kind::not_injective, "", {x, y}}};

            auto & voc = m.vocabulary();
            for (std::size_t f = 0; f < voc.functions().size(); ++f) {
                std::optional<MapViolation> bad;
                for_each_tuple(m.size(), voc.functions()[f].arity, [&] (const Tuple & t) {
                    if (bad)
                        return;
                    Tuple img(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        img[i] = map[t[i]];
                    if (map[m.apply(f, t)] != n.apply(f, img))
                        bad = MapViolation{MapViolation::Kind::function_not_preserved, voc.functions()[f].name, t};
                });
                if (bad)
                    return {false, bad};
            }
            for (std::size_t r = 0; r < voc.relations().size(); ++r) {
                std::optional<MapViolation> bad;
                for_each_tuple(m.size(), voc.relations()[r].arity, [&] (const Tuple & t) {
                    if (bad)
                        return;
                    Tuple img(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        img[i] = map[t[i]];
                    bool src = m.holds(r, t), tgt = n.holds(r, img);
                    if (src && ! tgt)
                        bad = MapViolation{MapViolation::Kind::relation_not_preserved, voc.relations()[r].name, t};
                    else if (embedding && tgt && ! src)
                        bad = MapViolation{MapViolation::Kind::relation_not_reflected, voc.relations()[r].name, t};
                });
                if (bad)
                    return {false, bad};
            }
            return {};
        }

        /// A single check that becomes decidable once every element up to some index is assigned.
        struct Constraint
        {
            bool is_function;
            std::size_t symbol;
            Tuple tuple;
            Element value; // function value in the source; unused for relations
            bool holds;    // relation value in the source
        };

        /// Backtracking search for homomorphisms / embeddings, assigning source elements in order.
        class MapSearch
        {
        public:
            MapSearch(const Structure & m, const Structure & n, bool embedding) :
                m_(m), n_(n), embedding_(embedding), by_level_(std::max(m.size(), 1))
            {
                auto & voc = m.vocabulary();
                for (std::size_t r = 0; r < voc.relations().size(); ++r)
                    for_each_tuple(m.size(), voc.relations()[r].arity, [&] (const Tuple & t) {
                        bool h = m.holds(r, t);
                        if (! h && ! embedding)
                            return;
                        by_level_[level(t, -1)].push_back(Constraint{false, r, t, 0, h});
                    });
                for (std::size_t f = 0; f < voc.functions().size(); ++f)
                    for_each_tuple(m.size(), voc.functions()[f].arity, [&] (const Tuple & t) {
                        auto v = m.apply(f, t);
                        by_level_[level(t, v)].push_back(Constraint{true, f, t, v, false});
                    });
                nullary_ok_ = true;
                // nullary relations have no elements to wait for
                for (std::size_t r = 0; r < voc.relations().size(); ++r)
                    if (voc.relations()[r].arity == 0) {
                        bool a = m.holds(r, {}), b = n.holds(r, {});
                        if ((a && ! b) || (embedding && b && ! a))
                            nullary_ok_ = false;
                    }
            }

            template <typename Visit>
            void run(Visit && visit)
            {
                if (! nullary_ok_)
                    return;
                if (m_.size() == 0) {
                    visit(ElementMap{});
                    return;
                }
                map_.assign(m_.size(), -1);
                used_.assign(n_.size(), false);
                stop_ = false;
                extend(0, visit);
            }

        private:
            static auto level(const Tuple & t, Element extra) -> int
            {
                int l = extra;
                for (auto e : t)
                    l = std::max(l, e);
                return std::max(l, 0);
            }

            auto consistent(int k) const -> bool
            {
                for (auto & c : by_level_[k]) {
                    if (! c.is_function && c.tuple.empty())
                        continue;
                    Tuple img(c.tuple.size());
                    for (std::size_t i = 0; i < c.tuple.size(); ++i)
                        img[i] = map_[c.tuple[i]];
                    if (c.is_function) {
                        if (map_[c.value] != n_.apply(c.symbol, img))
                            return false;
                    }
                    else {
                        bool tgt = n_.holds(c.symbol, img);
                        if (c.holds ? ! tgt : tgt)
                            return false;
                    }
                }
                return true;
            }

            template <typename Visit>
            void extend(int k, Visit & visit)
            {
                if (k == m_.size()) {
                    if (! visit(std::as_const(map_)))
                        stop_ = true;
                    return;
                }
                for (Element y = 0; y < n_.size() && ! stop_; ++y) {
                    if (embedding_ && used_[y])
                        continue;
                    map_[k] = y;
                    if (consistent(k)) {
                        used_[y] = true;
                        extend(k + 1, visit);
                        used_[y] = false;
                    }
                }
                map_[k] = -1;
            }

            const Structure & m_;
            const Structure & n_;
            bool embedding_;
            bool nullary_ok_ = true;
            bool stop_ = false;
            std::vector<std::vector<Constraint>> by_level_;
            ElementMap map_;
            std::vector<bool> used_;
        };
    }

    auto check_homomorphism(const Structure & m, const Structure & n, const ElementMap & map) -> MapCheck
    {
        require_same_signature(m, n, "check_homomorphism");
        return check_map(m, n, map, false);
    }

    auto check_embedding(const Structure & m, const Structure & n, const ElementMap & map) -> MapCheck
    {
        require_same_signature(m, n, "check_embedding");
        return check_map(m, n, map, true);
    }

    auto is_embedding(const Morphism & f) -> MapCheck
    {
        return check_embedding(*f.source, *f.target, f.map);
    }

    auto enumerate_embeddings(const Structure & m, const Structure & n) -> std::vector<ElementMap>
    {
        require_same_signature(m, n, "enumerate_embeddings");
        std::vector<ElementMap> out;
        if (m.size() > n.size())
            return out;
        MapSearch search(m, n, true);
        search.run([&] (const ElementMap & f) { out.push_back(f); return true; });
        return out;
    }

    auto enumerate_homomorphisms(const Structure & m, const Structure & n) -> std::vector<ElementMap>
    {
        require_same_signature(m, n, "enumerate_homomorphisms");
        std::vector<ElementMap> out;
        MapSearch search(m, n, false);
        search.run([&] (const ElementMap & f) { out.push_back(f); return true; });
        return out;
    }

    auto exists_embedding(const Structure & m, const Structure & n) -> bool
    {
        require_same_signature(m, n, "exists_embedding");
        if (m.size() > n.size())
            return false;
        bool found = false;
        MapSearch search(m, n, true);
        search.run([&] (const ElementMap &) { found = true; return false; });
        return found;
    }

    auto embeddings(const StructurePtr & m, const StructurePtr & n) -> std::vector<Morphism>
    {
        std::vector<Morphism> out;
        for (auto & f : enumerate_embeddings(*m, *n))
            out.push_back(Morphism{m, n, f, MorphismKind::embedding});
        return out;
    }

    auto identity_map(int n) -> ElementMap
    {
        ElementMap id(n);
        for (int i = 0; i < n; ++i)
            id[i] = i;
        return id;
    }

    auto identity(const StructurePtr & m) -> Morphism
    {
        return Morphism{m, m, identity_map(m->size()), MorphismKind::embedding};
    }

    auto compose_maps(const ElementMap & f, const ElementMap & g) -> ElementMap
    {
        ElementMap out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            out[i] = f[g[i]];
        return out;
    }

    auto compose(const Morphism & f, const Morphism & g) -> Morphism
    {
        if (! (*g.target == *f.source))
            throw PreconditionFailed("compose: target of the first map is not the source of the second");
        auto kind = (f.kind == MorphismKind::embedding && g.kind == MorphismKind::embedding) ? MorphismKind::embedding : MorphismKind::homomorphism;
        return Morphism{g.source, f.target, compose_maps(f.map, g.map), kind};
    }

    auto partial_inverse(const ElementMap & map, int target_size) -> ElementMap
    {
        ElementMap inv(target_size, -1);
        for (std::size_t i = 0; i < map.size(); ++i)
            inv[map[i]] = static_cast<Element>(i);
        return inv;
    }

    auto render_map(const ElementMap & map) -> std::string
    {
        std::string s = "[";
        for (std::size_t i = 0; i < map.size(); ++i)
            s += (i ? "," : "") + std::to_string(i) + "->" + std::to_string(map[i]);
        return s + "]";
    }
}
