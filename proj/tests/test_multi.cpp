#include <doctest.h>

#include <aectk/core/error.hpp>
#include <aectk/multi/families.hpp>

#include "support/class_oracles.hpp"
#include "support/classes.hpp"

using namespace aectk;
using namespace fixtures;

namespace
{
    auto constants_class(int count, int scale) -> StructureClass
    {
        std::vector<SymbolDecl> fs;
        for (int i = 0; i < count; ++i)
            fs.push_back({std::string(1, static_cast<char>('c' + i)), 0});
        return forbid_class("constants", make_vocabulary("constants", {}, fs), {}, scale);
    }

    auto sample_classes() -> std::vector<StructureClass>
    {
        return {pure_sets(0, 3, 3), pure_sets(1, 3, 3), initial_segments(0, 4), initial_segments(1, 4), pairs_class(),
                involution_class(), cycles_class(3), small_groups(4), triangle_free(3), constants_class(2, 3)};
    }

    /// Counts maps into each member by filtering all maps; exactly one source object and one map each.
    auto multiinitial_by_definition(const StructureClass & c, const std::vector<CanonicalStructure> & family) -> bool
    {
        for (const auto & m : c.members()) {
            int sources = 0;
            std::size_t maps = 0;
            for (const auto & f : family) {
                auto ks = oracle::k_embeddings_by_filter(c, f.structure, m.structure);
                sources += ! ks.empty();
                maps += ks.size();
            }
            if (sources != 1 || maps != 1)
                return false;
        }
        return true;
    }

    auto cocone_maps_by_filter(const StructureClass & c, const Cone & from, const Cone & to) -> int
    {
        int count = 0;
        for (const auto & h : oracle::k_embeddings_by_filter(c, from.apex, to.apex)) {
            bool ok = true;
            for (std::size_t i = 0; i < from.legs.size(); ++i)
                ok &= compose_maps(h, from.legs[i]) == to.legs[i];
            count += ok;
        }
        return count;
    }
}

TEST_CASE("multiinitial families")
{
    auto one = multiinitial_family(constants_class(1, 3));
    REQUIRE(one);
    REQUIRE(one.family->objects.size() == 1);
    CHECK(one.family->objects[0].structure.size() == 1);

    auto two_constants = constants_class(2, 3);
    auto two = multiinitial_family(two_constants);
    REQUIRE(two);
    REQUIRE(two.family->objects.size() == 2);
    CHECK(two.family->objects[0].structure.size() == 1);
    CHECK(two.family->objects[1].structure.size() == 2);
    CHECK(multiinitial_by_definition(two_constants, two.family->objects));

    auto nonempty = multiinitial_family(pure_sets(1, 3, 3));
    CHECK_FALSE(nonempty);
    REQUIRE(nonempty.violation);
    CHECK(nonempty.violation->member.size() == 2);
    CHECK(nonempty.violation->morphisms == 2);

    CHECK_FALSE(multiinitial_family(pairs_class()));

    for (const auto & c : sample_classes()) {
        CAPTURE(c.name());
        auto fam = multiinitial_family(c);
        CHECK(bool(fam) == multiinitial_by_definition(c, fam.candidates));
    }
}

TEST_CASE("polyinitial families")
{
    CHECK(polyinitial_family(constants_class(1, 3)));
    CHECK_FALSE(polyinitial_family(pure_sets(1, 3, 3)));

    // a single two-element object with a swap: polyinitial, not multiinitial
    for (const auto & c : {pairs_class(), involution_class()}) {
        CHECK_FALSE(multiinitial_family(c));
        auto poly = polyinitial_family(c);
        REQUIRE(poly);
        CHECK(poly.family->objects.size() == 1);
        CHECK(poly.family->kind == FamilyKind::polyinitial);
    }

    for (const auto & c : sample_classes()) {
        CAPTURE(c.name());
        if (multiinitial_family(c))
            CHECK(polyinitial_family(c));
    }
}

TEST_CASE("family objects form an antichain")
{
    for (const auto & c : sample_classes()) {
        auto fam = polyinitial_family(c);
        if (! fam)
            continue;
        const auto & objs = fam.family->objects;
        for (std::size_t i = 0; i < objs.size(); ++i)
            for (std::size_t j = 0; j < objs.size(); ++j)
                if (i != j) {
                    CHECK_FALSE(is_isomorphic(objs[i].structure, objs[j].structure));
                    CHECK(c.k_embeddings(objs[i].structure, objs[j].structure).empty());
                }
    }
}

TEST_CASE("multicolimits")
{
    for (const auto & c : sample_classes()) {
        CAPTURE(c.name());
        auto empty = multicolimit(c, {});
        auto fam = multiinitial_family(c);
        CHECK(empty.exists == bool(fam));
        if (fam)
            CHECK(empty.family.size() == fam.family->objects.size());
        if (check_pseudo_universal(c).pass())
            CHECK(empty.exists);
    }

    auto seg = initial_segments(0, 4);
    auto c2 = share(chain(order_vocab(), 2));
    auto single = multicolimit(seg, {{c2}, {}});
    REQUIRE(single);
    REQUIRE(single.family.size() == 1);
    CHECK(single.family[0].apex.size() == 2);
    CHECK(single.family[0].legs[0] == ElementMap{0, 1});

    // span of two edges over a shared vertex, triangle-free digraphs
    auto tf = triangle_free(3);
    auto gv = graph_vocab();
    auto point = share(Structure(gv, 1));
    auto edge = share(complete_graph(gv, 2));
    Diagram span{{point, edge, edge}, {{0, 1, {0}}, {0, 2, {0}}}};
    auto mc = multicolimit(tf, span);
    REQUIRE(mc);
    auto cocones = enumerate_cocones(tf, span);
    CHECK(mc.cocones_checked == cocones.size());
    for (const auto & x : cocones) {
        int total = 0;
        for (const auto & f : mc.family)
            total += cocone_maps_by_filter(tf, f, x);
        CHECK(total == 1);
    }
    // amalgams: the two edges coincide, or they share only the vertex with the far ends related somehow
    CHECK(mc.family.size() > 2);

    auto pairs = multicolimit(pairs_class(), {});
    CHECK_FALSE(pairs);
    REQUIRE(pairs.violating);
    CHECK(pairs.morphisms == 2);

    CHECK_THROWS_AS(multicolimit(seg, {{share(chain(order_vocab(), 5))}, {}}), PreconditionFailed);
}

TEST_CASE("generation")
{
    auto gv = graph_vocab();
    auto all_graphs = forbid_class("all-graphs", gv, {}, 3);
    CHECK(is_generated(all_graphs, Structure(gv, 1), 3) == ElementSet::of({0}));

    auto constants = constants_class(1, 3);
    CHECK(is_generated(constants, Structure(constants.vocabulary_ptr(), 1), 3) == ElementSet{});

    auto groups = small_groups(6);
    CHECK(is_generated(groups, cyclic_group(monoid_vocab(), 3), 3) == ElementSet::of({1}));
    CHECK(is_generated(groups, product_group(monoid_vocab(), 2, 2), 3)->size() == 2);
    CHECK_FALSE(is_generated(groups, product_group(monoid_vocab(), 2, 2), 2));

    auto pv = make_vocabulary("points", {{"P", 1}}, {});
    Structure antichain(pv, 3);
    for (int i = 0; i < 3; ++i)
        antichain.set_relation(0, Tuple{i}, true);
    auto unary = forbid_class("unary", pv, {}, 3);
    CHECK(is_generated(unary, antichain, 4) == antichain.universe());
    CHECK_FALSE(is_generated(unary, antichain, 3));

    // a member generated by sets of size < n is the union of the closures of such sets
    for (const auto & c : sample_classes()) {
        if (! check_admits_intersections(c).pass)
            continue;
        for (const auto & m : c.members()) {
            for (int n = 1; n <= m.structure.size() + 1; ++n) {
                if (! is_generated(c, m.structure, n))
                    continue;
                ElementSet all;
                for (auto a : subsets_of(m.structure.universe()))
                    if (a.size() < n)
                        all = all | cl_k(c, m.structure, a).elements;
                CHECK(all == m.structure.universe());
            }
        }
    }
}
