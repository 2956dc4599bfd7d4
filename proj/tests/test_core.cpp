#include <doctest.h>

#include <aectk/core/canonical.hpp>
#include <aectk/core/enumerate.hpp>
#include <aectk/core/error.hpp>
#include <aectk/core/morphism.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace aectk;
using namespace fixtures;

TEST_CASE("is_embedding: identity, collapse and reflection failures")
{
    auto v = graph_vocab();
    auto k3 = share(complete_graph(v, 3));
    CHECK(is_embedding(identity(k3)).ok);

    auto k2 = share(complete_graph(v, 2));
    auto collapse = is_embedding(Morphism{k2, k3, {1, 1}, MorphismKind::embedding});
    REQUIRE_FALSE(collapse.ok);
    CHECK(collapse.violation->kind == MapViolation::Kind::not_injective);
    CHECK(collapse.violation->tuple == Tuple{0, 1});

    auto empty2 = share(Structure(v, 2));
    auto edge2 = share(complete_graph(v, 2));
    auto reflect = is_embedding(Morphism{empty2, edge2, {0, 1}, MorphismKind::embedding});
    REQUIRE_FALSE(reflect.ok);
    CHECK(reflect.violation->kind == MapViolation::Kind::relation_not_reflected);
}

TEST_CASE("is_embedding agrees with the definition on every pair of 2-vertex digraphs and every map")
{
    auto v = graph_vocab();
    auto graphs = oracle::labelled_structures(v, 2);
    REQUIRE(graphs.size() == 16);
    int reflection_witnesses = 0;
    for (auto & a : graphs)
        for (auto & b : graphs)
            for (auto & f : oracle::all_maps(2, 2)) {
                auto check = check_embedding(a, b, f);
                CHECK(check.ok == oracle::is_embedding_by_definition(a, b, f));
                if (! check.ok && check.violation->kind == MapViolation::Kind::relation_not_reflected)
                    ++reflection_witnesses;
            }
    CHECK(reflection_witnesses > 0);
}

TEST_CASE("is_embedding rejects mismatched vocabularies")
{
    auto a = share(Structure(graph_vocab(), 1));
    auto b = share(Structure(set_vocab(), 1));
    CHECK_THROWS_AS(is_embedding(Morphism{a, b, {0}, MorphismKind::embedding}), VocabularyMismatch);
    CHECK_THROWS_AS(enumerate_embeddings(*a, *b), VocabularyMismatch);
}

TEST_CASE("enumerate_embeddings examples")
{
    auto s = set_vocab();
    CHECK(enumerate_embeddings(pure_set(s, 1), pure_set(s, 3)).size() == 3);

    auto g = graph_vocab();
    auto k2 = complete_graph(g, 2), k3 = complete_graph(g, 3);
    auto found = enumerate_embeddings(k2, k3);
    CHECK(found.size() == 6);
    CHECK(found == oracle::embeddings_by_filter(k2, k3));
    CHECK(std::is_sorted(found.begin(), found.end()));

    auto cv = make_vocabulary("pointed", {{"P", 1}}, {{"c", 0}});
    Structure m(cv, 1);
    m.set_relation(0, Tuple{0}, true);
    Structure n(cv, 2);
    CHECK(enumerate_embeddings(m, n).empty());
}

TEST_CASE("enumerate_embeddings equals the filtered set of all maps")
{
    SUBCASE("one unary relation, all pairs up to size 4")
    {
        auto v = make_vocabulary("unary", {{"P", 1}}, {});
        auto all = enumerate_structures(v, 4);
        for (auto & a : *all)
            for (auto & b : *all)
                CHECK(enumerate_embeddings(a.structure, b.structure) == oracle::embeddings_by_filter(a.structure, b.structure));
    }
    SUBCASE("digraphs, all pairs up to size 3, and small sources into size 4")
    {
        auto v = graph_vocab();
        auto all = enumerate_structures(v, 4);
        for (auto & a : *all)
            for (auto & b : *all) {
                if (a.structure.size() > 3 || (b.structure.size() > 3 && a.structure.size() > 1))
                    continue;
                CHECK(enumerate_embeddings(a.structure, b.structure) == oracle::embeddings_by_filter(a.structure, b.structure));
            }
    }
    SUBCASE("with functions")
    {
        auto v = unary_fn_vocab();
        auto all = enumerate_structures(v, 3);
        for (auto & a : *all)
            for (auto & b : *all) {
                CHECK(enumerate_embeddings(a.structure, b.structure) == oracle::embeddings_by_filter(a.structure, b.structure));
                CHECK(enumerate_homomorphisms(a.structure, b.structure) == oracle::homomorphisms_by_filter(a.structure, b.structure));
            }
    }
}

TEST_CASE("generated_substructure examples")
{
    auto cyc = successor_cycle(unary_fn_vocab(), 4);
    CHECK(generated_substructure(cyc, ElementSet::of({0})).inclusion == ElementMap{0, 1, 2, 3});

    auto g = cycle_graph(graph_vocab(), 5);
    auto none = generated_substructure(g, ElementSet{});
    CHECK(none.structure.size() == 0);

    auto cv = make_vocabulary("const", {}, {{"c", 0}});
    Structure m(cv, 4);
    m.set_function(0, Tuple{}, 2);
    auto sub = generated_substructure(m, ElementSet::of({0}));
    CHECK(sub.inclusion == ElementMap{0, 2});
    CHECK(sub.structure.apply(0, Tuple{}) == 1);
    CHECK(check_embedding(sub.structure, m, sub.inclusion).ok);
}

TEST_CASE("generated_substructure is extensive, monotone and idempotent")
{
    auto v = make_vocabulary("fs", {}, {{"s", 1}, {"c", 0}});
    auto all = enumerate_structures(v, 4);
    for (auto & cs : *all) {
        auto & m = cs.structure;
        auto subsets = subsets_of(m.universe());
        for (auto a : subsets) {
            auto ca = closure_under_functions(m, a);
            CHECK(a.subset_of(ca));
            CHECK(closure_under_functions(m, ca) == ca);
            for (auto b : subsets)
                if (a.subset_of(b))
                    CHECK(ca.subset_of(closure_under_functions(m, b)));
        }
    }
}

TEST_CASE("canonical_form examples")
{
    auto v = graph_vocab();
    auto empty = canonical_form(Structure(v, 0));
    CHECK(empty.code == CanonicalCode{0, 0});

    auto p3 = path_graph(v, 3);
    auto p3b = graph(v, 3, {{0, 2}, {2, 1}});
    CHECK(canonical_form(p3).code == canonical_form(p3b).code);

    auto k3 = complete_graph(v, 3);
    CHECK(canonical_form(p3).code != canonical_form(k3).code);
    CHECK_FALSE(oracle::isomorphic_by_permutation(p3, k3));
}

TEST_CASE("canonical_form: equal codes iff isomorphic (brute force), and idempotent")
{
    auto v = graph_vocab();
    auto labelled = oracle::labelled_structures(v, 3);
    for (std::size_t i = 0; i < labelled.size(); i += 3)
        for (std::size_t j = 0; j < labelled.size(); j += 5) {
            bool same = canonical_form(labelled[i]).code == canonical_form(labelled[j]).code;
            CHECK(same == oracle::isomorphic_by_permutation(labelled[i], labelled[j]));
        }

    std::mt19937 rng(7);
    auto four = oracle::labelled_structures(v, 4);
    std::uniform_int_distribution<std::size_t> pick(0, four.size() - 1);
    for (int k = 0; k < 400; ++k) {
        auto & a = four[pick(rng)];
        auto & b = four[pick(rng)];
        CHECK((canonical_form(a).code == canonical_form(b).code) == oracle::isomorphic_by_permutation(a, b));
        // a random relabelling is always isomorphic
        ElementMap perm = identity_map(4);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(a, perm)).code == canonical_form(a).code);
    }

    for (auto & s : four) {
        auto form = canonical_form(s);
        auto canon = relabel(s, form.witness);
        CHECK(canonical_form(canon).code == form.code);
        CHECK(check_embedding(s, canon, form.witness).ok);
    }
}

TEST_CASE("canonical_form handles groups and pointed structures")
{
    auto mv = monoid_vocab();
    auto z33 = product_group(mv, 3, 3);
    auto z9 = cyclic_group(mv, 9);
    CHECK(canonical_form(z33).code != canonical_form(z9).code);
    ElementMap swap_coords(9);
    for (int x = 0; x < 9; ++x)
        swap_coords[x] = (x % 3) * 3 + x / 3;
    CHECK(canonical_form(relabel(z33, swap_coords)).code == canonical_form(z33).code);

    auto z3 = cyclic_group(mv, 3);
    // (1) and (2) are swapped by the inversion automorphism; (1,2) and (2,1) as well
    CHECK(canonical_form(z3, Tuple{1}).code == canonical_form(z3, Tuple{2}).code);
    CHECK(canonical_form(z3, Tuple{1, 2}).code == canonical_form(z3, Tuple{2, 1}).code);
    CHECK(canonical_form(z3, Tuple{1, 2}).code != canonical_form(z3, Tuple{1, 1}).code);
    CHECK(canonical_form(z3, Tuple{0}).code != canonical_form(z3, Tuple{1}).code);
}

TEST_CASE("enumerate_structures examples")
{
    CHECK(enumerate_structures(set_vocab(), 3)->size() == 4);

    auto unary = make_vocabulary("unary", {{"P", 1}}, {});
    int expected = 0;
    for (int n = 0; n <= 2; ++n)
        expected += oracle::count_classes(oracle::labelled_structures(unary, n));
    CHECK(expected == 6);
    CHECK(static_cast<int>(enumerate_structures(unary, 2)->size()) == expected);

    auto v = graph_vocab();
    auto simple = [] (const Structure & s) {
        for (int a = 0; a < s.size(); ++a) {
            if (s.holds(0, Tuple{a, a}))
                return false;
            for (int b = 0; b < s.size(); ++b)
                if (s.holds(0, Tuple{a, b}) != s.holds(0, Tuple{b, a}))
                    return false;
        }
        return true;
    };
    int simple_oracle = 0;
    for (int n = 0; n <= 3; ++n) {
        std::vector<Structure> keep;
        for (auto & s : oracle::labelled_structures(v, n))
            if (simple(s))
                keep.push_back(s);
        simple_oracle += oracle::count_classes(keep);
    }
    auto all = enumerate_structures(v, 3);
    auto simple_count = std::count_if(all->begin(), all->end(), [&] (const CanonicalStructure & c) { return simple(c.structure); });
    CHECK(simple_oracle == 8);
    CHECK(simple_count == 8);

    // digraphs with loops: 1 + 2 + 10 + 104 classes up to size 3
    CHECK(all->size() == 117);
    CHECK(std::is_sorted(all->begin(), all->end(), [] (auto & a, auto & b) { return a.code < b.code; }));
}

TEST_CASE("enumerate_structures resource guard")
{
    auto v = make_vocabulary("magma", {}, {{"mul", 2}});
    CHECK_THROWS_AS(enumerate_structures(v, 4), ResourceLimit);
    CHECK_NOTHROW(enumerate_structures(v, 2));
}

TEST_CASE("reduct examples")
{
    auto gv = group_vocab();
    auto z3 = cyclic_group(gv, 3);
    CHECK(reduct(z3, gv) == z3);
    auto mv = monoid_vocab();
    auto r = reduct(z3, mv);
    CHECK(r.size() == 3);
    CHECK(r == cyclic_group(mv, 3));
    auto bad = make_vocabulary("bad", {}, {{"mul", 1}});
    CHECK_THROWS_AS(reduct(z3, bad), VocabularyMismatch);
}

TEST_CASE("compose: units, associativity, kinds")
{
    auto v = graph_vocab();
    auto all = enumerate_structures(v, 2);
    std::vector<StructurePtr> objs;
    for (auto & c : *all)
        objs.push_back(share(c.structure));
    objs.push_back(share(path_graph(v, 3)));
    for (auto & a : objs)
        for (auto & b : objs)
            for (auto & f : embeddings(a, b)) {
                CHECK(compose(f, identity(a)).map == f.map);
                CHECK(compose(identity(b), f).map == f.map);
                for (auto & c : objs)
                    for (auto & g : embeddings(b, c)) {
                        auto gf = compose(g, f);
                        CHECK(gf.kind == MorphismKind::embedding);
                        CHECK(is_embedding(gf).ok);
                        for (auto & d : objs)
                            for (auto & h : embeddings(c, d))
                                CHECK(compose(h, compose(g, f)).map == compose(compose(h, g), f).map);
                    }
            }

    auto p3 = share(path_graph(v, 3));
    auto k1 = share(Structure(v, 1));
    auto hom = Morphism{k1, p3, {0}, MorphismKind::homomorphism};
    CHECK(compose(identity(p3), hom).kind == MorphismKind::homomorphism);
    CHECK_THROWS_AS(compose(hom, hom), PreconditionFailed);

    // two inclusions compose to the inclusion
    auto p2 = share(path_graph(v, 2));
    Morphism i12{k1, p2, {1}, MorphismKind::embedding};
    Morphism i23{p2, p3, {1, 2}, MorphismKind::embedding};
    CHECK(compose(i23, i12).map == ElementMap{2});
}
