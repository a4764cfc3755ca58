#include <oddwalk/errors.hh>
#include <oddwalk/pipeline.hh>

#include "corpus.hh"
#include "oracles.hh"

#include <doctest.h>

#include <set>

using namespace oddwalk;

namespace
{
    StableSplit split_by(const Graph & g, std::initializer_list<std::pair<Vertex, Vertex>> a_edges)
    {
        StableSplit s;
        std::set<int> a;
        for (auto [u, v] : a_edges)
            a.insert(g.edge_index_of(u, v));
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            (a.contains(i) ? s.a : s.b).push_back(i);
        return s;
    }

    Coloring gamma(int n, int palette, std::initializer_list<std::pair<Vertex, int>> values)
    {
        Coloring c(n, palette);
        for (auto [v, col] : values)
            c.color[v] = col;
        return c;
    }

    // Symmetric difference of edge index sets.
    std::vector<int> sym(const std::vector<int> & x, const std::vector<int> & y)
    {
        std::vector<int> out;
        std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        return out;
    }
}

TEST_CASE("extend_coloring examples")
{
    auto g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n");
    auto phi = GraphHom::identity(g);
    auto ext = extend_coloring(phi, split_by(g, {{0, 1}, {1, 2}, {0, 2}}), gamma(5, 3, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK(ext.coloring.is_proper(g));
    CHECK(ext.coloring.color[0] == 0);
    CHECK(ext.coloring.color[1] == 1);
    CHECK(ext.coloring.color[2] == 2);
    CHECK(ext.coloring.color[3] != 2);
    CHECK(ext.provenance[4].root == 2);
    CHECK(ext.provenance[4].distance == 2);
    CHECK(ext.coloring.color[4] == ext.coloring.color[2]);

    auto k3 = named::complete(3);
    auto same = extend_coloring(GraphHom::identity(k3), split_by(k3, {{0, 1}, {1, 2}, {0, 2}}), gamma(3, 3, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK(same.coloring.color == std::vector<int>{0, 1, 2});

    auto two = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n");
    auto bad = split_by(two, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(extend_coloring(GraphHom::identity(two), bad, gamma(6, 3, {{0, 0}, {1, 1}, {2, 2}})), HypothesisError);
    try {
        extend_coloring(GraphHom::identity(two), bad, gamma(6, 3, {{0, 0}, {1, 1}, {2, 2}}));
    }
    catch (const HypothesisError & e) {
        CHECK(! e.certificate.empty());
    }
}

TEST_CASE("split validation")
{
    auto k4 = named::complete(4);
    auto id = GraphHom::identity(k4);
    CHECK(split_violation(id, StableSplit::of_class(id, phi_partition(id), 0)) == "");
    CHECK(split_violation(id, split_by(k4, {{0, 1}})) != "");
}

TEST_CASE("color_ball examples")
{
    auto c7 = named::cycle(7);
    auto c = color_ball(c7, 0, 3);
    CHECK(c.is_proper(c7));
    CHECK(c.colors_used() <= 12);
    CHECK(c.color[3] != c.color[4]);

    auto k4 = named::complete(4);
    auto ck = color_ball(k4, 0, 2);
    CHECK(ck.is_proper(k4));
    CHECK(ck.colors_used() <= 8);

    auto star = named::star(5);
    auto cs = color_ball(star, 0, 1);
    CHECK(cs.is_proper(star));
    CHECK(cs.colors_used() == 2);

    // only the ball is coloured
    auto p = named::path(8);
    auto cp = color_ball(p, 0, 2);
    for (Vertex v = 0; v < 8; ++v)
        CHECK(cp.colored(v) == (v <= 2));
    CHECK(cp.is_proper_partial(p));
}

TEST_CASE("color_ball on random C5-free graphs")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = named::random(12, 0.25, seed);
        if (has_cycle_of_length(g, 5).status != SearchStatus::no)
            continue;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto c = color_ball(g, v, 2);
            CHECK(c.is_proper_partial(g));
            CHECK(c.colors_used() <= 8);
            auto d = bfs_distances(g, v);
            for (Vertex w = 0; w < g.order(); ++w)
                CHECK(c.colored(w) == (d[w] != -1 && d[w] <= 2));
        }
    }
}

TEST_CASE("color_closure_subgraph examples")
{
    auto k4 = named::complete(4);
    auto cc = color_closure_subgraph(k4, EdgeId(0, 1), 2);
    CHECK(cc.cycle.length() == 3);
    CHECK(cc.coloring.is_proper(k4));
    CHECK(cc.coloring.palette_size <= 24);

    auto g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n5 6\n6 7\n");
    auto c5 = color_closure_subgraph(g, EdgeId(0, 1), 3);
    CHECK(c5.closure.size() == 1);
    CHECK(c5.coloring.palette_size <= 60);
    CHECK(c5.coloring.is_proper_partial(g));
    for (Vertex v = 0; v < 5; ++v)
        CHECK(c5.coloring.colored(v));

    CHECK_THROWS_AS(color_closure_subgraph(named::cycle(6), EdgeId(0, 1), 2), HypothesisError);
}

TEST_CASE("pipeline on K4")
{
    auto k4 = named::complete(4);
    auto phi = GraphHom::identity(k4);
    auto t = bounded_coloring_pipeline(phi, Walk({0, 1, 2, 0}), 2, TopologyAssertion::simply_connected);
    CHECK(t.coloring.is_proper(k4));
    CHECK(t.coloring.palette_size < 32);
    CHECK(validate_trace(phi, t) == "");
    if (t.branch == PipelineBranch::product_4color)
        CHECK(t.coloring.palette_size <= 4);
    else
        CHECK(t.coloring.palette_size <= 24);
}

TEST_CASE("pipeline refusals and hypothesis failures")
{
    auto k4 = named::complete(4);
    auto phi = GraphHom::identity(k4);
    CHECK_THROWS_AS(bounded_coloring_pipeline(phi, Walk({0, 1, 2, 0}), 2, TopologyAssertion::none), RefusalError);

    auto c7 = named::cycle(7);
    CHECK_THROWS_AS(bounded_coloring_pipeline(GraphHom::identity(c7), Walk({0, 1, 2, 3, 4, 5, 6, 0}), 2,
                        TopologyAssertion::simply_connected),
        HypothesisError);

    // a C5 target is not C5-free
    auto c5 = named::cycle(5);
    CHECK_THROWS_AS(bounded_coloring_pipeline(GraphHom::identity(c5), Walk({0, 1, 2, 3, 4, 0}), 2,
                        TopologyAssertion::simply_connected),
        HypothesisError);
}

TEST_CASE("pipeline through a folding map")
{
    // C9 -> C3 wraps three times; the image is a triangle, C5-free
    std::vector<Vertex> map(9);
    for (int i = 0; i < 9; ++i)
        map[i] = i % 3;
    auto phi = GraphHom::make(named::cycle(9), named::complete(3), map);
    // C9 is not simply connected, pi1 is cyclic
    auto t = bounded_coloring_pipeline(phi, Walk({0, 1, 2, 3, 4, 5, 6, 7, 8, 0}), 2, TopologyAssertion::cyclic_pi1);
    CHECK(t.coloring.is_proper(phi.source));
    CHECK(t.coloring.palette_size < 32);
    CHECK(validate_trace(phi, t) == "");
}

TEST_CASE("ear chain examples")
{
    auto k4 = named::complete(4);
    Walk c({0, 1, 2, 0});
    auto chain = ear_chain_witness(k4, c, EdgeId(0, 1), EdgeId(2, 3), 2);
    REQUIRE(! chain.steps.empty());
    auto & last = chain.steps.back();
    CHECK(last.ear.path.length() == 2);
    CHECK(ear_violation(k4, last.ear) == "");
    CHECK(ear_cycle(last.ear).length() == 3);
    CHECK(chain.chain.back() == EdgeId(2, 3));

    auto none = ear_chain_witness(k4, c, EdgeId(0, 1), EdgeId(1, 2), 2);
    CHECK(none.steps.empty());
    CHECK(none.chain.size() == 1);

    auto c5 = named::cycle(5);
    CHECK(ear_chain_witness(c5, Walk({0, 1, 2, 3, 4, 0}), EdgeId(0, 1), EdgeId(2, 3), 3).steps.empty());
    auto tail = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n4 5\n");
    CHECK_THROWS_AS(ear_chain_witness(tail, Walk({0, 1, 2, 3, 4, 0}), EdgeId(0, 1), EdgeId(4, 5), 3), InputError);
}

TEST_CASE("ear chains on random graphs keep every ear short")
{
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 400 && checked < 60; ++seed) {
        auto h = named::random(10, 0.3, seed);
        auto og = odd_girth(h);
        if (! og || *og > 5)
            continue;
        int r = (*og + 1) / 2 + 1;
        if (has_cycle_of_length(h, 2 * r + 1).status != SearchStatus::no)
            continue;
        auto b = is_bipartite(h);
        auto cyc = has_cycle_of_length(h, *og);
        Walk c(cyc.cycle);
        EdgeId e0(c.vertices[0], c.vertices[1]);
        auto part = c4_partition(h);
        int cls = part.class_of[h.edge_index_of(e0.u, e0.v)];
        for (int i : part.classes[cls]) {
            auto e = h.edge(i);
            auto chain = ear_chain_witness(h, c, e0, e, r);
            int prev = c.length();
            for (auto & s : chain.steps) {
                CHECK(ear_violation(h, s.ear) == "");
                CHECK(s.odd_cycle.is_cycle_in(h));
                CHECK(s.odd_cycle.length() < 2 * r + 1);
                if (! s.intermediate) {
                    CHECK(s.odd_cycle.length() <= prev + 2);
                    prev = s.odd_cycle.length();
                }
            }
            ++checked;
        }
        (void) b;
    }
    CHECK(checked > 0);
}

TEST_CASE("symmetric difference bound")
{
    auto h = named::petersen();
    Walk c({0, 1, 2, 3, 4, 0});
    auto cycles = oracle::simple_cycles(h);
    std::vector<std::vector<int>> odd;
    for (auto & cy : cycles) {
        if ((cy.size() - 1) % 2 == 0)
            continue;
        std::vector<int> es;
        for (std::size_t i = 0; i + 1 < cy.size(); ++i)
            es.push_back(h.edge_index_of(cy[i], cy[i + 1]));
        std::sort(es.begin(), es.end());
        odd.push_back(es);
    }
    for (std::size_t i = 0; i < odd.size(); i += 7)
        for (std::size_t j = 0; j < odd.size(); j += 5) {
            CHECK(is_eulerian_set(h, odd[i]));
            CHECK(symmetric_difference_bound(h, c, odd[i], odd[j]));
            std::set<int> on_c;
            for (int k = 0; k < c.length(); ++k)
                on_c.insert(h.edge_index_of(c.vertices[k], c.vertices[k + 1]));
            std::set<int> x1, y1;
            for (int e : odd[i])
                if (! on_c.contains(e))
                    x1.insert(e);
            for (int e : odd[j])
                if (! on_c.contains(e))
                    y1.insert(e);
            std::size_t fresh = 0;
            for (int e : y1)
                fresh += ! x1.contains(e);
            CHECK(odd[j].size() <= odd[i].size() + 2 * fresh);
        }
    CHECK(is_eulerian_set(h, sym(odd[0], odd[1])));
    CHECK(! is_eulerian_set(h, {0}));
}

TEST_CASE("connected pieces of a BFS layer have a low degree vertex")
{
    int graphs = 0;
    for (int r : {2, 3})
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            auto g = named::random(r == 2 ? 10 : 12, 0.3, seed);
            if (has_cycle_of_length(g, 2 * r + 1).status != SearchStatus::no)
                continue;
            ++graphs;
            for (Vertex v = 0; v < g.order(); ++v) {
                auto layers = bfs_layers(g, v);
                for (int s = 1; s <= r && s < static_cast<int>(layers.size()); ++s) {
                    auto & layer = layers[s];
                    int m = static_cast<int>(layer.size());
                    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
                        std::vector<Vertex> piece;
                        for (int i = 0; i < m; ++i)
                            if (mask >> i & 1)
                                piece.push_back(layer[i]);
                        auto sub = induced_subgraph(g, piece);
                        if (! is_connected(sub.graph))
                            continue;
                        CHECK(sub.graph.min_degree() < 2 * r);
                    }
                }
            }
        }
    CHECK(graphs > 10);
}
