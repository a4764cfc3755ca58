#include <oddwalk/closure.hh>
#include <oddwalk/errors.hh>

#include "corpus.hh"
#include "oracles.hh"

#include <doctest.h>

#include <set>

using namespace oddwalk;

namespace
{
    GraphHom wrap(int big, int small)
    {
        std::vector<Vertex> map(big);
        for (int i = 0; i < big; ++i)
            map[i] = i % small;
        return GraphHom::make(named::cycle(big), named::cycle(small), map);
    }

    Graph k4_with_tail()
    {
        return parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n4 5\n");
    }
}

TEST_CASE("homomorphism validation and text format")
{
    auto g = named::cycle(10);
    auto phi = wrap(10, 5);
    CHECK(phi.is_valid());
    CHECK(parse_hom(serialize_hom(phi), g, named::cycle(5)).map == phi.map);
    CHECK_THROWS_AS(GraphHom::make(named::complete(3), named::complete(3), {0, 0, 1}), ViolationError);
    CHECK_THROWS(parse_hom("0 -> 0\n", g, named::cycle(5)));
    CHECK(! GraphHom{named::path(2), named::complete(2), {0, 0}}.is_valid());
}

TEST_CASE("C4 partition examples")
{
    CHECK(c4_partition(named::cycle(5)).count() == 5);
    CHECK(c4_partition(named::complete(4)).count() == 1);
    CHECK(c4_partition(named::homotopy_example()).count() == 1);
    CHECK(c4_partition(named::homotopy_example()).classes[0].size() == 11);
}

TEST_CASE("C4 partition agrees with the fixpoint oracle")
{
    for (auto & [name, g] : corpus::fixed()) {
        CAPTURE(name);
        CHECK(oracle::same_partition(c4_partition(g).class_of, oracle::c4_labels(g)));
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = named::random(9, 0.3, seed);
        CHECK(oracle::same_partition(c4_partition(g).class_of, oracle::c4_labels(g)));
    }
}

TEST_CASE("phi partition examples and oracle")
{
    CHECK(phi_partition(GraphHom::identity(named::complete(4))).count() == 1);
    CHECK(phi_partition(GraphHom::identity(named::cycle(5))).count() == 5);
    CHECK(phi_partition(wrap(10, 5)).count() == 10);
    auto k4 = named::complete(4);
    SplitMix64 rng(4);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = named::random(8, 0.35, seed);
        // a random proper 4-colouring gives a homomorphism into K4
        auto hom = oracle::hom(g, k4);
        if (! hom)
            continue;
        auto phi = GraphHom::make(g, k4, *hom);
        CHECK(oracle::same_partition(phi_partition(phi).class_of, oracle::phi_labels(phi)));
        auto id = GraphHom::identity(g);
        CHECK(oracle::same_partition(phi_partition(id).class_of, oracle::phi_labels(id)));
    }
    auto folded = GraphHom::make(named::cycle(10), named::cycle(5), wrap(10, 5).map);
    CHECK(oracle::same_partition(phi_partition(folded).class_of, oracle::phi_labels(folded)));
    CHECK(format_partition(named::complete(4), c4_partition(named::complete(4))).starts_with("class 0:"));
}

TEST_CASE("invariant examples")
{
    auto k4 = named::complete(4);
    auto id = GraphHom::identity(k4);
    auto all = InvariantSpec::all_edges(k4);
    CHECK(eval_invariant(all, EdgeMultiset::of_walk(k4, Walk({0, 1, 2, 0})), id) == 1);
    CHECK(eval_invariant(all, EdgeMultiset::of_walk(k4, Walk({0, 1, 0})), id) == 0);
    auto anchored = InvariantSpec::all_edges(k4, 0);
    CHECK(eval_invariant(anchored, EdgeMultiset::of_walk(k4, Walk({0, 1, 2, 3, 0})), id) == 0);
    CHECK(eval_invariant(anchored, EdgeMultiset::of_walk(k4, Walk({1, 2, 3, 1})), id) == 0);
    CHECK(eval_invariant(anchored, EdgeMultiset::of_walk(k4, Walk({0, 1, 2, 0})), id) == 0);

    auto c5 = named::cycle(5);
    auto part = phi_partition(GraphHom::identity(c5));
    InvariantSpec split{{0, 1}, std::nullopt};
    CHECK(stability_violation(split, part) == "");
    auto k4part = phi_partition(id);
    CHECK(stability_violation(InvariantSpec{{0}, std::nullopt}, k4part) != "");
    CHECK_THROWS_AS(eval_invariant(InvariantSpec{{0}, std::nullopt}, EdgeMultiset::of_walk(k4, Walk({0, 1, 0})), id), RefusalError);
}

TEST_CASE("invariants agree with the counting oracle")
{
    SplitMix64 rng(17);
    for (auto & [name, g] : corpus::fixed()) {
        CAPTURE(name);
        auto id = GraphHom::identity(g);
        auto part = phi_partition(id);
        for (int t = 0; t < 30; ++t) {
            auto w = corpus::random_closed_walk(g, rng, 3 + static_cast<int>(rng.below(8)));
            auto f = EdgeMultiset::of_walk(g, Walk(w));
            for (int c = 0; c < part.count(); ++c) {
                std::set<int> a(part.classes[c].begin(), part.classes[c].end());
                CHECK(eval_invariant(InvariantSpec::of_class(part, c), f, id, part) == oracle::invariant(id, a, std::nullopt, w));
                Vertex u = static_cast<Vertex>(rng.below(g.order()));
                CHECK(eval_invariant(InvariantSpec::of_class(part, c, u), f, id, part) == oracle::invariant(id, a, u, w));
            }
        }
    }
}

TEST_CASE("Eulerian decomposition and odd cycle extraction")
{
    auto k4 = named::complete(4);
    std::vector<int> mult(k4.size(), 0);
    for (int i = 0; i < static_cast<int>(k4.size()); ++i)
        mult[i] = 2;
    auto walks = eulerian_decomposition(k4, mult);
    int total = 0;
    for (auto & w : walks) {
        CHECK(w.closed());
        CHECK(w.is_walk_in(k4));
        total += w.length();
    }
    CHECK(total == 12);
    std::vector<int> odd(k4.size(), 0);
    odd[0] = 1;
    CHECK_THROWS_AS(eulerian_decomposition(k4, odd), InputError);

    auto p = named::petersen();
    SplitMix64 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto w = corpus::random_closed_walk(p, rng, 5 + 2 * static_cast<int>(rng.below(5)));
        if (Walk(w).parity() == 0)
            continue;
        auto c = odd_cycle_in_closed_walk(Walk(w));
        CHECK(c.is_cycle_in(p));
        CHECK(c.parity() == 1);
        for (Vertex v : c.vertices)
            CHECK(std::find(w.begin(), w.end(), v) != w.end());
    }
}

TEST_CASE("pivot edge examples")
{
    auto k4 = named::complete(4);
    auto id = GraphHom::identity(k4);
    auto r = find_pivot_edge(id, EdgeMultiset::of_walk(k4, Walk({0, 1, 2, 0})));
    CHECK(r.odd_cycle.length() == 3);
    CHECK(r.odd_cycle.is_cycle_in(k4));
    CHECK(r.spec.stable_set.size() == 6);

    auto c5 = named::cycle(5);
    auto rc = find_pivot_edge(GraphHom::identity(c5), EdgeMultiset::of_walk(c5, Walk({0, 1, 2, 3, 4, 0})));
    CHECK(rc.odd_cycle.length() == 5);
    CHECK(rc.spec.stable_set.size() == 1);

    CHECK_THROWS_AS(find_pivot_edge(id, EdgeMultiset(k4)), HypothesisError);
}

TEST_CASE("bipartite complement examples")
{
    auto k4 = named::complete(4);
    auto id = GraphHom::identity(k4);
    CHECK(verify_bipartite_complement(id, InvariantSpec::all_edges(k4), Walk({0, 1, 2, 0})));

    auto tail = k4_with_tail();
    auto idt = GraphHom::identity(tail);
    auto part = phi_partition(idt);
    int k4class = part.class_of[tail.edge_index_of(0, 1)];
    CHECK(verify_bipartite_complement(idt, InvariantSpec::of_class(part, k4class), Walk({0, 1, 2, 0})));

    auto c5 = named::cycle(5);
    auto idc = GraphHom::identity(c5);
    auto pc = phi_partition(idc);
    CHECK(verify_bipartite_complement(idc, InvariantSpec::of_class(pc, 0), Walk({0, 1, 2, 3, 4, 0})));
}
