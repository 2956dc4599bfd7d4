#include <doctest.h>

#include <aectk/classes/checks.hpp>
#include <aectk/core/canonical.hpp>
#include <aectk/core/error.hpp>

#include "support/class_oracles.hpp"
#include "support/classes.hpp"

using namespace aectk;
using namespace fixtures;

namespace
{
    auto has_triangle(const Structure & g) -> bool
    {
        int n = g.size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (a == b || b == c || a == c)
                        continue;
                    auto e = [&](int x, int y) { return g.holds(0, Tuple{x, y}); };
                    // embeddings reflect relations, so a looped triangle is no copy of K3
                    if (e(a, a) || e(b, b) || e(c, c))
                        continue;
                    if (e(a, b) && e(b, a) && e(b, c) && e(c, b) && e(a, c) && e(c, a))
                        return true;
                }
        return false;
    }

    auto is_initial_segment(ElementSet s, int n) -> bool
    {
        return s == ElementSet::full(s.size()) && s.size() <= n;
    }

    auto sample_classes() -> std::vector<StructureClass>
    {
        return {pure_sets(0, 3, 3), pure_sets(1, 3, 3), initial_segments(0, 4), initial_segments(1, 4), pairs_class(),
                involution_class(), cycles_class(3), small_groups(4), triangle_free(3)};
    }
}

TEST_CASE("membership in forbid and explicit classes")
{
    auto tf = triangle_free(4);
    auto v = graph_vocab();
    CHECK(tf.member(path_graph(v, 3)));
    CHECK_FALSE(tf.member(complete_graph(v, 3)));
    CHECK_FALSE(tf.member(complete_graph(v, 4)));
    CHECK(tf.member(cycle_graph(v, 4)));

    // every member at scale 3 is triangle-free, and every triangle-free digraph is a member
    int members = 0;
    for (int n = 0; n <= 3; ++n)
        for (const auto & g : oracle::labelled_structures(v, n)) {
            CHECK(tf.member(g) == ! has_triangle(g));
            members += tf.member(g);
        }
    CHECK(members > 0);

    auto gv = group_vocab();
    auto z3 = explicit_class("z3", gv, {cyclic_group(gv, 3)}, 3);
    CHECK(z3.member(relabel(cyclic_group(gv, 3), {0, 2, 1})));
    CHECK_FALSE(z3.member(cyclic_group(gv, 2)));
    CHECK_THROWS_AS(z3.member(complete_graph(v, 2)), VocabularyMismatch);
}

TEST_CASE("strong substructures")
{
    auto sets = pure_sets(0, 3, 3);
    CHECK(strong_subs(sets, pure_set(set_vocab(), 2)).size() == 4);

    auto seg = initial_segments(0, 4);
    auto three = chain(order_vocab(), 3);
    auto strong = seg.strong_sets(three);
    CHECK(strong == std::vector<ElementSet>{ElementSet{0b000}, ElementSet{0b001}, ElementSet{0b011}, ElementSet{0b111}});
    for (auto s : subsets_of(three.universe()))
        CHECK(seg.is_strong(three, s) == is_initial_segment(s, 3));

    auto tf = triangle_free(3);
    for (const auto & m : tf.members())
        CHECK(tf.strong_sets(m.structure).size() == subsets_of(m.structure.universe()).size());

    CHECK_THROWS_AS(tf.strong_sets(complete_graph(graph_vocab(), 3)), PreconditionFailed);
}

TEST_CASE("pair orders are closed under composition and isomorphism")
{
    // only consecutive pairs are given; the rest follow by transitivity
    auto v = order_vocab();
    ClassDefinition d;
    d.name = "consecutive";
    d.vocab = v;
    d.order = OrderKind::explicit_pairs;
    d.scale = 4;
    for (int n = 1; n <= 4; ++n)
        d.members.push_back(chain(v, n));
    for (int n = 1; n < 4; ++n)
        d.pairs.push_back({chain(v, n), chain(v, n + 1), identity_map(n)});
    StructureClass c{d};
    CHECK(c.strong_sets(chain(v, 4)).size() == 4);

    // relabelled ambient: the order becomes 2 < 0 < 1
    auto relabelled = relabel(chain(v, 3), {2, 0, 1});
    auto strong = c.strong_sets(relabelled);
    REQUIRE(strong.size() == 3);
    CHECK(strong[0] == ElementSet::of({2}));
    CHECK(strong[1] == ElementSet::of({0, 2}));

    auto bad = d;
    bad.pairs.push_back({Structure(v, 0), chain(v, 2), {}});
    CHECK_THROWS_AS(StructureClass{bad}, InvariantViolation);

    ClassDefinition forbid_pairs;
    forbid_pairs.name = "x";
    forbid_pairs.vocab = v;
    forbid_pairs.presentation = Presentation::forbid;
    forbid_pairs.order = OrderKind::explicit_pairs;
    CHECK_THROWS_AS(StructureClass{forbid_pairs}, InvariantViolation);
}

TEST_CASE("cl_k")
{
    auto tf = triangle_free(3);
    for (const auto & m : tf.members())
        for (auto a : subsets_of(m.structure.universe())) {
            auto cl = cl_k(tf, m.structure, a);
            CHECK(cl.strong);
            CHECK(cl.elements == closure_under_functions(m.structure, a));
        }

    auto seg = initial_segments(0, 4);
    auto cl = cl_k(seg, chain(order_vocab(), 3), ElementSet::of({1}));
    CHECK(cl.elements == ElementSet::of({0, 1}));
    CHECK(cl.strong);
    CHECK(cl.family_size == 2);

    auto nonempty = pure_sets(1, 3, 3);
    auto empty_cl = cl_k(nonempty, pure_set(set_vocab(), 2), ElementSet{});
    CHECK(empty_cl.elements.empty());
    CHECK_FALSE(empty_cl.strong);
    CHECK(empty_cl.family_size == 3);

    for (const auto & c : sample_classes())
        for (const auto & m : c.members())
            for (auto a : subsets_of(m.structure.universe()))
                CHECK(cl_k(c, m.structure, a).elements == oracle::closure_by_definition(c, m.structure, a));
}

TEST_CASE("cl_k is extensive, monotone and idempotent when intersections exist")
{
    for (const auto & c : sample_classes()) {
        if (! check_admits_intersections(c).pass)
            continue;
        for (const auto & m : c.members()) {
            auto subsets = subsets_of(m.structure.universe());
            for (auto a : subsets) {
                auto ca = cl_k(c, m.structure, a).elements;
                CHECK(a.subset_of(ca));
                CHECK(cl_k(c, m.structure, ca).elements == ca);
                for (auto b : subsets)
                    if (a.subset_of(b))
                        CHECK(ca.subset_of(cl_k(c, m.structure, b).elements));
            }
        }
    }
}

TEST_CASE("closure computed in a strong substructure agrees with the ambient closure")
{
    for (const auto & c : sample_classes()) {
        if (! check_admits_intersections(c).pass)
            continue;
        for (const auto & n : c.members())
            for (auto s : c.strong_sets(n.structure)) {
                auto sub = induced_substructure(n.structure, s);
                for (auto a : subsets_of(sub.structure.universe())) {
                    auto inner = image(sub.inclusion, cl_k(c, sub.structure, a).elements);
                    CHECK(inner == cl_k(c, n.structure, image(sub.inclusion, a)).elements);
                }
            }
    }
}

TEST_CASE("coherence")
{
    CHECK(check_coherence(triangle_free(3)).pass);
    CHECK(check_coherence(initial_segments(0, 4)).pass);

    auto broken = initial_segments(1, 3, {1, 2});
    auto report = check_coherence(broken);
    REQUIRE_FALSE(report.pass);
    CHECK(report.witness->ambient.size() == 3);
    CHECK(report.witness->m0.size() == 1);
    CHECK(report.witness->m1.size() == 2);
    CHECK(report.witness->m0.subset_of(report.witness->m1));
}

TEST_CASE("chain axioms")
{
    auto tf = check_chain_axioms(triangle_free(3));
    CHECK(tf.pass);
    CHECK(tf.structurally_certified);

    auto seg = check_chain_axioms(initial_segments(0, 4));
    CHECK(seg.pass);
    CHECK(seg.longest_chain == 3);
    CHECK_FALSE(seg.vacuous);
    CHECK(seg.degenerate);

    auto v = set_vocab();
    auto one_three = check_chain_axioms(explicit_class("one-three", v, {pure_set(v, 1), pure_set(v, 3)}, 3));
    CHECK(one_three.pass);
    CHECK(one_three.degenerate);
    CHECK_FALSE(one_three.structurally_certified);

    auto pairs = check_chain_axioms(pairs_class());
    CHECK(pairs.pass);
    CHECK(pairs.vacuous);
}

TEST_CASE("Lowenheim-Skolem estimate")
{
    auto graphs = estimate_ls(simple_graphs(3));
    CHECK(graphs.bound == std::vector<int>{0, 1, 2, 3});

    auto cycles = estimate_ls(cycles_class(4));
    CHECK(cycles.bound[1] == 4);

    auto seg = estimate_ls(initial_segments(0, 4));
    CHECK(seg.bound == std::vector<int>{0, 4, 4, 4, 4});
    CHECK(seg.worst() == 4);

    // raw bound for initial segments: largest position of max(A), over all A of each size
    std::vector<int> expected(5, 0);
    for (int n = 0; n <= 4; ++n)
        for (auto a : subsets_of(ElementSet::full(n))) {
            auto elems = a.elements();
            int top = elems.empty() ? 0 : elems.back() + 1;
            expected[a.size()] = std::max(expected[a.size()], top);
        }
    CHECK(seg.raw == expected);

    for (const auto & c : sample_classes()) {
        auto est = estimate_ls(c);
        CHECK_FALSE(est.failed);
        CHECK(std::is_sorted(est.bound.begin(), est.bound.end()));
    }
}

TEST_CASE("admits intersections")
{
    CHECK(check_admits_intersections(triangle_free(3)).pass);
    CHECK(check_admits_intersections(initial_segments(0, 4)).pass);

    auto report = check_admits_intersections(pure_sets(1, 4, 4));
    REQUIRE_FALSE(report.pass);
    CHECK(report.witness->ambient.size() == 2);
    CHECK(report.witness->a.empty());

    for (const auto & c : sample_classes())
        CHECK(check_admits_intersections(c).pass == oracle::admits_intersections_by_definition(c));
}

TEST_CASE("pseudo-universality")
{
    CHECK(check_pseudo_universal(small_groups(6)).pass());
    CHECK(check_pseudo_universal(triangle_free(3)).pass());

    auto pairs = check_pseudo_universal(pairs_class());
    REQUIRE(pairs.status == PseudoUniversalReport::Status::fail);
    CHECK(pairs.witness->a.empty());
    CHECK(pairs.witness->closure == ElementSet::full(2));
    CHECK(pairs.witness->f != pairs.witness->g);

    CHECK(check_pseudo_universal(involution_class()).status == PseudoUniversalReport::Status::fail);

    auto refused = check_pseudo_universal(pure_sets(1, 3, 3));
    CHECK(refused.status == PseudoUniversalReport::Status::precondition_failed);
    CHECK(refused.precondition_witness.has_value());

    for (const auto & c : sample_classes()) {
        auto report = check_pseudo_universal(c);
        if (report.status == PseudoUniversalReport::Status::precondition_failed)
            continue;
        CAPTURE(c.name());
        CHECK(report.pass() == oracle::pseudo_universal_by_definition(c));
    }
}

TEST_CASE("universality")
{
    auto tf = check_universal(triangle_free(3));
    CHECK(tf.pass);
    CHECK(tf.structurally_certified);

    auto gv = group_vocab();
    CHECK(check_universal(explicit_class("z3", gv, {cyclic_group(gv, 3), cyclic_group(gv, 1)}, 3)).pass);

    auto missing = check_universal(explicit_class("z3-only", gv, {cyclic_group(gv, 3)}, 3));
    REQUIRE_FALSE(missing.pass);
    CHECK(missing.witness->kind == UniversalWitness::Kind::substructure_not_member);
    CHECK(missing.witness->missing.size() == 1);

    // universal implies pseudo-universal implies admits intersections
    for (const auto & c : sample_classes()) {
        CAPTURE(c.name());
        bool universal = check_universal(c).pass;
        bool pseudo = check_pseudo_universal(c).pass();
        bool intersections = check_admits_intersections(c).pass;
        CHECK((! universal || pseudo));
        CHECK((! pseudo || intersections));
        if (universal)
            for (const auto & m : c.members())
                for (auto a : subsets_of(m.structure.universe()))
                    CHECK(cl_k(c, m.structure, a).elements == closure_under_functions(m.structure, a));
    }
}

TEST_CASE("local character")
{
    auto seg = initial_segments(0, 4);
    auto four = chain(order_vocab(), 4);
    CHECK(local_character(seg, four, ElementSet::of({1, 3}), ElementSet::of({0})) == ElementSet::of({1}));
    CHECK(local_character(seg, four, ElementSet::of({1, 3}), ElementSet::of({3})) == ElementSet::of({3}));

    auto groups = small_groups(4);
    auto z4 = cyclic_group(monoid_vocab(), 4);
    CHECK(local_character(groups, z4, ElementSet::of({1, 2}), ElementSet::of({0})).empty());

    CHECK_THROWS_AS(local_character(seg, four, ElementSet::of({1}), ElementSet::of({2})), PreconditionFailed);

    // the answer is inclusion-minimal
    for (auto a : subsets_of(four.universe()))
        for (auto b : subsets_of(cl_k(seg, four, a).elements)) {
            auto a0 = local_character(seg, four, a, b);
            CHECK(a0.subset_of(a));
            CHECK(b.subset_of(cl_k(seg, four, a0).elements));
            for (auto smaller : subsets_of(a0))
                if (smaller != a0)
                    CHECK_FALSE(b.subset_of(cl_k(seg, four, smaller).elements));
        }
}
