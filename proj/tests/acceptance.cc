// One line per acceptance criterion. Exit status is the number of failures.
// Usage: acceptance [criterion ...]

#include <oddwalk/cli.hh>
#include <oddwalk/closure.hh>
#include <oddwalk/errors.hh>
#include <oddwalk/homotopy.hh>
#include <oddwalk/homsearch.hh>
#include <oddwalk/kernels.hh>
#include <oddwalk/ncomplex.hh>
#include <oddwalk/pipeline.hh>
#include <oddwalk/rng.hh>
#include <oddwalk/sphere.hh>

#include "corpus.hh"
#include "oracles.hh"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace oddwalk;
using std::string;
using std::vector;

namespace
{
    const double pi = std::numbers::pi;

    struct Outcome
    {
        bool pass = true;
        string detail;
    };

    struct Criterion
    {
        int id;
        string title;
        double limit;           // seconds, <= 0 for none
        std::function<Outcome()> run;
    };

    string fmt(const char * f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, f, args...);
        return buf;
    }

    // Every stable spec of the identity map: all edges and each class, each
    // with no anchor and with every anchor.
    vector<InvariantSpec> every_spec(const Graph & g, const ClosurePartition & part)
    {
        vector<InvariantSpec> out;
        vector<std::optional<Vertex>> anchors{std::nullopt};
        for (Vertex u = 0; u < g.order(); ++u)
            anchors.push_back(u);
        for (auto & a : anchors) {
            out.push_back(InvariantSpec::all_edges(g, a));
            for (int c = 0; c < part.count(); ++c)
                out.push_back(InvariantSpec::of_class(part, c, a));
        }
        return out;
    }

    Outcome worked_example()
    {
        auto g = named::homotopy_example();
        auto p = make_walk(g, {0, 1, 2, 0});
        vector<Move> moves{Move::ins(2, 4), Move::sub(2, 3), Move::sub(1, 5), Move::sub(4, 6), Move::sub(3, 5), Move::del(2)};
        auto end = replay_moves(g, p, moves);
        Outcome o;
        o.pass = end.vertices == vector<Vertex>{0, 5, 6, 0};
        auto q = make_walk(g, {0, 5, 6, 0});
        auto v = are_homotopic(g, p, q);
        bool replays = v.status == HomotopyStatus::homotopic && replay_moves(g, p, v.moves) == q;
        o.pass = o.pass && replays;
        o.detail = "printed sequence ends at " + format_walk(end) + "; search " + to_string(v.status) + " with " +
            std::to_string(v.moves.size()) + " moves, replay " + (replays ? "ok" : "failed");
        return o;
    }

    Outcome invariance_suite()
    {
        SplitMix64 rng(2024);
        auto graphs = corpus::fixed();
        long applications = 0, violations = 0, evaluations = 0;
        for (auto & [name, g] : graphs) {
            auto id = GraphHom::identity(g);
            auto part = phi_partition(id);
            auto specs = every_spec(g, part);
            int per_graph = 10'000 / static_cast<int>(graphs.size()) + 1;
            int done = 0;
            while (done < per_graph) {
                bool closed = rng.below(2);
                int len = 1 + static_cast<int>(rng.below(8));
                vector<Vertex> w = closed ? corpus::random_closed_walk(g, rng, len)
                                          : corpus::random_walk(g, rng, static_cast<Vertex>(rng.below(g.order())), len);
                // a short chain of moves from each start
                for (int step = 0; step < 5 && done < per_graph; ++step) {
                    auto options = oracle::all_moves(g, w);
                    auto & pick = options[rng.below(options.size())];
                    Walk before(w), after = apply_move(g, before, pick.move);
                    ++applications;
                    ++done;
                    bool bad = after.vertices != pick.walk || after.front() != before.front() || after.back() != before.back() ||
                        after.parity() != before.parity();
                    auto fb = EdgeMultiset::of_walk(g, before), fa = EdgeMultiset::of_walk(g, after);
                    for (auto & s : specs) {
                        ++evaluations;
                        if (eval_invariant(s, fb, id, part) != eval_invariant(s, fa, id, part))
                            bad = true;
                    }
                    violations += bad;
                    w = after.vertices;
                }
            }
        }
        Outcome o;
        o.pass = violations == 0 && applications >= 10'000;
        o.detail = fmt("%ld applications over %zu graphs, %ld invariant comparisons, %ld violations", applications,
            graphs.size(), evaluations, violations);
        return o;
    }

    // Every vertex sequence of the given length that is a closed walk.
    void closed_walks(const Graph & g, int length, const std::function<void(const vector<Vertex> &)> & fn)
    {
        vector<Vertex> w;
        std::function<void()> rec = [&]() {
            if (static_cast<int>(w.size()) == length) {
                if (g.adjacent(w.back(), w.front())) {
                    w.push_back(w.front());
                    fn(w);
                    w.pop_back();
                }
                return;
            }
            for (Vertex x : g.neighbours(w.back())) {
                w.push_back(x);
                rec();
                w.pop_back();
            }
        };
        for (Vertex s = 0; s < g.order(); ++s) {
            w = {s};
            rec();
        }
    }

    Outcome additivity_suite()
    {
        vector<std::pair<string, Graph>> graphs;
        for (auto & [name, g] : corpus::fixed())
            if (g.order() <= 8)
                graphs.emplace_back(name, g);
        graphs.emplace_back("random8a", corpus::random_connected(8, 0.4, 31));
        graphs.emplace_back("random8b", corpus::random_connected(8, 0.5, 32));
        SplitMix64 rng(77);
        long checks = 0, violations = 0, walks = 0;
        for (auto & [name, g] : graphs) {
            auto id = GraphHom::identity(g);
            auto part = phi_partition(id);
            auto specs = every_spec(g, part);
            for (int length : {2, 4})
                closed_walks(g, length, [&](const vector<Vertex> & w) {
                    ++walks;
                    auto f = EdgeMultiset::of_walk(g, Walk(w));
                    for (auto & s : specs) {
                        ++checks;
                        violations += eval_invariant(s, f, id, part) != 0;
                    }
                });
            for (int t = 0; t < 200; ++t) {
                auto a = EdgeMultiset::of_walk(g, Walk(corpus::random_walk(g, rng, rng.below(g.order()), 1 + rng.below(9))));
                auto b = EdgeMultiset::of_walk(g, Walk(corpus::random_walk(g, rng, rng.below(g.order()), 1 + rng.below(9))));
                auto sum = a + b;
                for (auto & s : specs) {
                    ++checks;
                    violations += eval_invariant(s, sum, id, part) != (eval_invariant(s, a, id, part) ^ eval_invariant(s, b, id, part));
                }
            }
        }
        Outcome o;
        o.pass = violations == 0;
        o.detail = fmt("%zu graphs of <= 8 vertices, %ld closed walks of length 2 and 4, %ld checks, %ld violations",
            graphs.size(), walks, checks, violations);
        return o;
    }

    std::optional<GraphHom> some_hom(const Graph & g, int kind, SplitMix64 & rng)
    {
        if (kind == 0)
            return GraphHom::identity(g);
        if (kind == 1) {
            FoldOptions opt;
            opt.seed = 1 + rng.below(1000);
            opt.stop_at = std::max(3, g.order() - 1 - static_cast<int>(rng.below(4)));
            auto t = fold_search(g, {}, opt);
            return fold_hom(g, t);
        }
        for (int k = 3; k <= 5; ++k) {
            auto r = hom_exists(g, named::complete(k));
            if (r.status == HomSearchStatus::found)
                return r.hom;
        }
        return std::nullopt;
    }

    Outcome pivot_suite()
    {
        SplitMix64 rng(404);
        int instances = 0, violations = 0, max_rounds = 0, deeper = 0;
        std::uint64_t seed = 1;
        while (instances < 100) {
            int n = 6 + static_cast<int>(rng.below(5));
            auto g = corpus::random_connected(n, 0.35, seed++);
            auto phi = some_hom(g, instances % 3, rng);
            if (! phi)
                continue;
            // one odd closed walk plus a few even ones
            vector<vector<Vertex>> walks;
            vector<Vertex> w;
            do
                w = corpus::random_closed_walk(g, rng, 3 + 2 * static_cast<int>(rng.below(5)));
            while ((w.size() - 1) % 2 == 0);
            walks.push_back(w);
            for (int extra = static_cast<int>(rng.below(4)); extra > 0; --extra) {
                auto x = corpus::random_closed_walk(g, rng, 2 + 2 * static_cast<int>(rng.below(4)));
                if ((x.size() - 1) % 2 == 0)
                    walks.push_back(x);
            }
            auto inv = [&](const std::set<int> & a, std::optional<Vertex> u) {
                int sum = 0;
                for (auto & x : walks)
                    sum += oracle::invariant(*phi, a, u, x);
                return sum % 2;
            };
            // the hypotheses, checked by the oracle
            std::set<int> all;
            for (int e = 0; e < static_cast<int>(g.size()); ++e)
                all.insert(e);
            bool hyp = inv(all, std::nullopt) == 1;
            for (Vertex u = 0; u < phi->target.order(); ++u)
                hyp = hyp && inv(all, u) == 0;
            if (! hyp)
                continue;
            ++instances;
            EdgeMultiset f(g);
            for (auto & x : walks)
                f = f + EdgeMultiset::of_walk(g, Walk(x));
            bool ok = true;
            try {
                auto r = find_pivot_edge(*phi, f);
                std::set<int> a(r.spec.stable_set.begin(), r.spec.stable_set.end());
                ok = inv(a, r.spec.anchor) == 1;
                ok = ok && eval_invariant(r.spec, f, *phi) == 1;
                ok = ok && r.edge >= 0 && f.count[r.edge] > 0;
                ok = ok && r.odd_cycle.is_cycle_in(phi->target) && r.odd_cycle.length() % 2 == 1;
                std::set<int> image;
                for (int e = 0; e < static_cast<int>(g.size()); ++e)
                    if (f.count[e] > 0)
                        image.insert(phi->image_edge(e));
                for (int i = 0; i < r.odd_cycle.length(); ++i)
                    ok = ok && image.contains(phi->target.edge_index_of(r.odd_cycle.vertices[i], r.odd_cycle.vertices[i + 1]));
                int img = phi->image_edge(r.edge);
                bool through = false;
                for (int i = 0; i < r.odd_cycle.length(); ++i)
                    through = through || phi->target.edge_index_of(r.odd_cycle.vertices[i], r.odd_cycle.vertices[i + 1]) == img;
                ok = ok && through;
                for (std::size_t i = 1; i < r.sizes.size(); ++i)
                    ok = ok && r.sizes[i] < r.sizes[i - 1];
                max_rounds = std::max(max_rounds, r.rounds);
                deeper += r.rounds > 1;
            }
            catch (const Error & e) {
                ok = false;
            }
            violations += ! ok;
        }
        Outcome o;
        o.pass = violations == 0;
        o.detail = fmt("%d instances (identity, fold quotients, complete-graph maps), %d violations, %d recursed, deepest %d rounds",
            instances, violations, deeper, max_rounds);
        return o;
    }

    bool check_pipeline(const GraphHom & phi, const Walk & c, string & why)
    {
        auto t = bounded_coloring_pipeline(phi, c, 2, TopologyAssertion::simply_connected);
        bool proper = true;
        for (auto & e : phi.source.edges())
            proper = proper && t.coloring.color[e.u] != t.coloring.color[e.v];
        for (int x : t.coloring.color)
            proper = proper && x >= 0 && x < t.coloring.palette_size;
        auto trace = validate_trace(phi, t);
        why = fmt("%d colours in a palette of %d, branch %s, trace %s", t.coloring.colors_used(), t.coloring.palette_size,
            to_string(t.branch).c_str(), trace.empty() ? "valid" : trace.c_str());
        return proper && t.coloring.palette_size < 32 && trace.empty();
    }

    // A (2r+3)-cycle through both ends of some colliding pair, in a graph of
    // odd girth 2r+3: a short path P from v to v', then a walk of the other
    // parity avoiding the interior of P. Their union is an odd closed walk of
    // length 2r+3 and hence a cycle.
    std::optional<Walk> collision_cycle(const GraphHom & phi, int r)
    {
        const Graph & g = phi.source;
        const int len = 2 * r + 3;
        std::map<Vertex, vector<Vertex>> fibres;
        for (Vertex v = 0; v < g.order(); ++v)
            fibres[phi.map[v]].push_back(v);
        auto close = [&](const vector<Vertex> & path) -> std::optional<Walk> {
            Vertex s = path.front(), t = path.back();
            int want = len - (static_cast<int>(path.size()) - 1);
            vector<char> banned(g.order(), 0);
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                banned[path[i]] = 1;
            // BFS over (vertex, parity)
            vector<int> dist(2 * g.order(), -1), from(2 * g.order(), -1);
            vector<int> queue{2 * s};
            dist[2 * s] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                int x = queue[i];
                if (dist[x] >= want)
                    break;
                for (Vertex y : g.neighbours(x / 2)) {
                    int z = 2 * y + (1 - x % 2);
                    if (banned[y] || dist[z] != -1)
                        continue;
                    dist[z] = dist[x] + 1;
                    from[z] = x;
                    queue.push_back(z);
                }
            }
            int goal = 2 * t + want % 2;
            if (dist[goal] != want)
                return std::nullopt;
            vector<Vertex> back;
            for (int x = goal; x != -1; x = from[x])
                back.push_back(x / 2);
            vector<Vertex> cyc = path;
            for (std::size_t i = 1; i < back.size(); ++i)
                cyc.push_back(back[i]);
            Walk w(cyc);
            if (! w.is_cycle_in(g) || w.length() != len)
                return std::nullopt;
            return w;
        };
        for (auto & [img, vs] : fibres)
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    Vertex v = vs[i], w = vs[j];
                    for (Vertex a : g.neighbours(v)) {
                        if (g.adjacent(a, w))
                            if (auto c = close({v, a, w}))
                                return c;
                        for (Vertex b : g.neighbours(w))
                            if (b != a && a != w && b != v && g.adjacent(a, b))
                                if (auto c = close({v, a, b, w}))
                                    return c;
                    }
                }
        return std::nullopt;
    }

    constexpr int kFineN = 150, kCoarseN = 20;
    constexpr std::uint64_t kFineSeed = 1, kCoarseSeed = 2;

    Outcome pipeline_contract()
    {
        Outcome o;
        using clock = std::chrono::steady_clock;
        string why;

        auto t0 = clock::now();
        auto k4 = named::complete(4);
        bool a = check_pipeline(GraphHom::identity(k4), Walk({0, 1, 2, 0}), why);
        double ta = std::chrono::duration<double>(clock::now() - t0).count();
        o.detail = "(a) K4 " + string(a ? "pass" : "fail") + ": " + why + fmt(", %.3f s", ta);

        t0 = clock::now();
        auto fine = sample_approximation(2, pi / 5, kFineN, kFineSeed);
        auto coarse = sample_approximation(2, pi / 5, kCoarseN, kCoarseSeed);
        bool b = false;
        try {
            auto phi = nearest_vertex_hom(fine, coarse);
            auto nc = find_noninjective_c2r3(fine, phi, 2);
            b = check_pipeline(phi, nc.cycle, why);
            o.detail += "; (b) nearest-vertex map " + string(b ? "pass" : "fail") + ": " + why;
        }
        catch (const Error & e) {
            o.detail += "; (b) nearest-vertex map from " + std::to_string(fine.graph.order()) + " to " +
                std::to_string(coarse.graph.order()) + " vertices rejected: " + e.what();
        }
        double tb = std::chrono::duration<double>(clock::now() - t0).count();
        o.detail += fmt(", %.3f s", tb);

        // Not counted: the same fine sample through its own C5-free fold quotient.
        t0 = clock::now();
        try {
            FoldOptions opt;
            opt.budget = 2000;
            opt.seed = kFineSeed;
            auto t = fold_search(fine.graph, {5}, opt);
            auto phi = fold_hom(fine.graph, t);
            o.detail += fmt("; substitute, not counted: fold quotient on %d vertices, ", t.quotient.order());
            std::optional<Walk> cycle;
            try {
                cycle = find_noninjective_c2r3(fine, phi, 2).cycle;
                o.detail += "7-cycle from the great-circle construction, ";
            }
            catch (const HypothesisError & e) {
                cycle = collision_cycle(phi, 2);
                o.detail += string("great-circle construction found nothing (") + e.certificate + "), " +
                    (cycle ? "7-cycle through a colliding pair by search: " : "no 7-cycle through a colliding pair");
            }
            if (cycle) {
                bool s = check_pipeline(phi, *cycle, why);
                o.detail += (s ? "pipeline pass: " : "pipeline fail: ") + why;
            }
        }
        catch (const Error & e) {
            o.detail += "; substitute, not counted: failed: " + string(e.what());
        }
        o.detail += fmt(", %.3f s", std::chrono::duration<double>(clock::now() - t0).count());
        o.pass = a && b && ta < 60 && tb < 60;
        return o;
    }

    Outcome borsuk_samples()
    {
        const double mu = cap_measure(2, pi / 5);
        Outcome o;
        o.detail = fmt("mu %.6f", mu);
        bool symmetric = true, girth = true;
        for (auto [N, tol] : {std::pair{500, 0.25}, std::pair{2000, 0.10}}) {
            double lo = 1, hi = 0, sum = 0;
            int min_girth = 1 << 30, within = 0;
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto g = sample_approximation(2, pi / 5, N, seed);
                for (auto & e : g.graph.edges())
                    symmetric = symmetric && g.graph.adjacent(SphereSample::antipode(e.u), SphereSample::antipode(e.v));
                auto og = kernels::odd_girth(g.graph);
                if (og) {
                    girth = girth && *og >= 7;
                    min_girth = std::min(min_girth, *og);
                }
                double ratio = min_degree_ratio(g.graph);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                sum += ratio;
                within += std::abs(ratio - mu) <= tol * mu;
            }
            o.pass = o.pass && within == 5;
            o.detail += fmt("; N=%d: ratio %.4f..%.4f mean %.4f (%.1f%%..%.1f%% of mu), %d/5 within %.0f%%, odd girth >= %d", N,
                lo, hi, sum / 5, 100 * lo / mu, 100 * hi / mu, within, 100 * tol, min_girth);
        }
        o.pass = o.pass && symmetric && girth;
        o.detail += string("; antipodal symmetry ") + (symmetric ? "exact" : "broken");
        return o;
    }

    Outcome cap_measure_suite()
    {
        double worst_half = 0, worst_grid = 0;
        for (int n = 1; n <= 10; ++n)
            worst_half = std::max(worst_half, std::abs(cap_measure(n, pi / 2) - 0.5));
        for (int i = 1; i <= 100; ++i) {
            double e = i * pi / 100;
            worst_grid = std::max(worst_grid, std::abs(cap_measure(2, e) - (1 - std::cos(e)) / 2));
        }
        Outcome o;
        o.pass = worst_half <= 1e-10 && worst_grid <= 1e-10;
        o.detail = fmt("max error at pi/2 over n=1..10: %.2e; over 100 grid points on S^2: %.2e (tolerance 1e-10)", worst_half,
            worst_grid);
        return o;
    }

    Outcome topology_suite()
    {
        Outcome o;
        auto check_h1 = [&](const string & name, const SimplicialComplex & k, const string & want) {
            auto h = h1_homology(k);
            bool ok = h.describe() == want && h.free_rank == oracle::betti1(k, 2) && h.free_rank == oracle::betti1(k, 1'000'003);
            o.pass = o.pass && ok;
            o.detail += name + " " + h.describe() + (ok ? "" : " (expected " + want + ")") + "; ";
        };
        check_h1("H1 N(K3)", build_ncomplex(named::complete(3)), "Z");
        check_h1("H1 N(K4)", build_ncomplex(named::complete(4)), "0");
        check_h1("H1 N(C5)", build_ncomplex(named::cycle(5)), "Z");
        auto c6 = build_ncomplex(named::cycle(6));
        auto parts = c6.components();
        o.pass = o.pass && parts.size() == 2;
        o.detail += fmt("N(C6) %zu components; ", parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            check_h1("component " + std::to_string(i), parts[i], "Z");

        auto pres = edge_path_presentation(build_ncomplex(named::complete(4)), 0);
        auto t = tietze_simplify(pres.presentation);
        o.pass = o.pass && t.status == GroupStatus::trivial;
        o.detail += "edge-path group of N(K4) " + to_string(t.status) + "; ";

        SplitMix64 rng(99);
        auto graphs = corpus::fixed();
        int fuzzed = 0, failures = 0;
        while (fuzzed < 1000) {
            auto & g = graphs[rng.below(graphs.size())].second;
            auto w = corpus::random_closed_walk(g, rng, 2 * (1 + static_cast<int>(rng.below(7))));
            if ((w.size() - 1) % 2)
                continue;
            ++fuzzed;
            Walk walk(w);
            auto q = walk_to_edgepath(g, walk);
            auto back = edgepath_to_walk(q, g);
            bool ok = q.is_valid_in(build_ncomplex(g)) && back.is_walk_in(g) && walk_to_edgepath(g, back) == q &&
                edgepath_to_walk(walk_to_edgepath(g, back), g) == back && back.length() == walk.length();
            failures += ! ok;
        }
        o.pass = o.pass && failures == 0;
        o.detail += fmt("round trip on %d even closed walks, %d failures", fuzzed, failures);
        return o;
    }

    Outcome hom_suite()
    {
        vector<Graph> sources{named::complete(3), named::complete(4), named::complete(5), named::cycle(4), named::cycle(5),
            named::cycle(6), named::path(5), named::star(4), corpus::random_connected(6, 0.4, 1),
            corpus::random_connected(6, 0.55, 2)};
        vector<Graph> targets{named::complete(2), named::complete(3), named::complete(4), named::cycle(4), named::path(3)};
        int pairs = 0, disagreements = 0;
        for (auto & g : sources)
            for (auto & h : targets) {
                ++pairs;
                auto want = oracle::hom(g, h);
                auto got = hom_exists(g, h);
                bool ok = got.status == (want ? HomSearchStatus::found : HomSearchStatus::none);
                if (got.hom)
                    ok = ok && oracle::is_hom(g, h, got.hom->map);
                disagreements += ! ok;
            }
        auto pet = hom_exists(named::petersen(), named::cycle(5));
        auto c7 = hom_exists(named::cycle(7), named::cycle(5));
        Outcome o;
        o.pass = disagreements == 0 && pet.status == HomSearchStatus::none && c7.status == HomSearchStatus::found &&
            c7.hom && oracle::is_hom(named::cycle(7), named::cycle(5), c7.hom->map);
        o.detail = fmt("%d pairs, %d disagreements with enumeration; Petersen->C5 %s; C7->C5 %s", pairs, disagreements,
            to_string(pet.status).c_str(), to_string(c7.status).c_str());
        return o;
    }

    // Fundamental cycles of a BFS tree, as edge-index sets.
    vector<vector<char>> cycle_basis(const Graph & g)
    {
        int n = g.order();
        vector<int> parent_edge(n, -1), depth(n, -1);
        vector<Vertex> parent(n, -1), queue{0};
        depth[0] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            auto nb = g.neighbours(v);
            auto ie = g.incident_edges(v);
            for (std::size_t k = 0; k < nb.size(); ++k)
                if (depth[nb[k]] == -1) {
                    depth[nb[k]] = depth[v] + 1;
                    parent[nb[k]] = v;
                    parent_edge[nb[k]] = ie[k];
                    queue.push_back(nb[k]);
                }
        }
        vector<vector<char>> basis;
        for (int e = 0; e < static_cast<int>(g.size()); ++e) {
            Vertex a = g.edge(e).u, b = g.edge(e).v;
            if (parent_edge[a] == e || parent_edge[b] == e)
                continue;
            vector<char> c(g.size(), 0);
            c[e] = 1;
            while (a != b) {
                if (depth[a] < depth[b])
                    std::swap(a, b);
                c[parent_edge[a]] ^= 1;
                a = parent[a];
            }
            basis.push_back(c);
        }
        return basis;
    }

    Outcome symmetric_difference_suite()
    {
        SplitMix64 rng(4545);
        int pairs = 0, violations = 0, disagreements = 0, graphs = 0;
        std::uint64_t seed = 500;
        while (pairs < 1000) {
            int n = 5 + static_cast<int>(rng.below(6));
            auto h = corpus::random_connected(n, 0.3 + 0.3 * rng.uniform(), seed++);
            ++graphs;
            auto og = oracle::odd_girth(h);
            auto c = has_cycle_of_length(h, *og);
            Walk cyc(c.cycle);
            vector<char> on_c(h.size(), 0);
            for (int i = 0; i < cyc.length(); ++i)
                on_c[h.edge_index_of(cyc.vertices[i], cyc.vertices[i + 1])] = 1;
            auto basis = cycle_basis(h);
            auto random_set = [&]() {
                vector<char> s(h.size(), 0);
                for (auto & b : basis)
                    if (rng.below(2))
                        for (std::size_t e = 0; e < s.size(); ++e)
                            s[e] ^= b[e];
                return s;
            };
            for (int t = 0; t < 50 && pairs < 1000; ++t) {
                auto x = random_set(), y = random_set();
                auto count = [](const vector<char> & s) { return std::count(s.begin(), s.end(), 1); };
                if ((count(x) - count(y)) % 2)
                    for (std::size_t e = 0; e < y.size(); ++e)
                        y[e] ^= on_c[e];
                ++pairs;
                long fresh = 0;
                for (std::size_t e = 0; e < y.size(); ++e)
                    fresh += y[e] && ! on_c[e] && ! x[e];
                bool holds = count(y) <= count(x) + 2 * fresh;
                violations += ! holds;
                vector<int> xi, yi;
                for (int e = 0; e < static_cast<int>(h.size()); ++e) {
                    if (x[e])
                        xi.push_back(e);
                    if (y[e])
                        yi.push_back(e);
                }
                disagreements += ! is_eulerian_set(h, xi) || ! is_eulerian_set(h, yi) ||
                    symmetric_difference_bound(h, cyc, xi, yi) != holds;
            }
        }
        Outcome o;
        o.pass = violations == 0 && disagreements == 0;
        o.detail = fmt("%d pairs over %d graphs of <= 10 vertices, %d violations, %d disagreements with the library check",
            pairs, graphs, violations, disagreements);
        return o;
    }

    Outcome determinism()
    {
        auto dir = std::filesystem::temp_directory_path() / "oddwalk_acceptance";
        std::filesystem::create_directories(dir);
        auto run = [&](vector<string> args, const string & out) {
            args.insert(args.begin(), "oddwalk");
            args.insert(args.end(), {"--out", (dir / out).string(), "--json"});
            std::ostringstream o, e;
            int code = run_cli(args, o, e);
            return std::pair{code, strip_timing(Json::parse(o.str())).dump()};
        };
        vector<string> gen{"gen-borsuk", "--n", "2", "--r", "2", "--N", "1000", "--seed", "7"};
        vector<string> exp{"experiment-dhom", "--n", "2", "--r", "2", "--N", "100,200", "--seeds", "1,2,3",
            "--budget", "300"};
        auto g1 = run(gen, "g1.el"), g2 = run(gen, "g2.el");
        auto e1 = run(exp, "e1.json"), e2 = run(exp, "e2.json");
        bool graphs = read_file((dir / "g1.el").string()) == read_file((dir / "g2.el").string());
        bool reports = read_file((dir / "e1.json").string()) == read_file((dir / "e2.json").string());
        bool stdout_same = g1.second == g2.second && e1.second == e2.second;
        Outcome o;
        o.pass = g1.first == 0 && g2.first == 0 && e1.first == 0 && e2.first == 0 && graphs && reports && stdout_same;
        o.detail = fmt("gen-borsuk edge lists %s, experiment-dhom reports %s, JSON on stdout modulo timing %s",
            graphs ? "identical" : "differ", reports ? "identical" : "differ", stdout_same ? "identical" : "differs");
        return o;
    }
}

int main(int argc, char ** argv)
{
    vector<Criterion> all{
        {1, "worked homotopy example", 1, worked_example},
        {2, "invariance under homotopy moves", 30, invariance_suite},
        {3, "additivity and vanishing on short closed walks", 30, additivity_suite},
        {4, "pivot edge contract", 10, pivot_suite},
        {5, "colouring pipeline at r=2", 120, pipeline_contract},
        {6, "Borsuk sample properties", 120, borsuk_samples},
        {7, "cap measure", 5, cap_measure_suite},
        {8, "topology suite", 30, topology_suite},
        {9, "homomorphism search completeness", 60, hom_suite},
        {10, "symmetric difference inequality", 30, symmetric_difference_suite},
        {11, "determinism of generated graphs and reports", 120, determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (auto & c : all) {
        if (! only.empty() && ! only.contains(c.id))
            continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.pass = false;
            o.detail = string("threw: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit <= 0 || secs < c.limit;
        bool pass = o.pass && in_time;
        failures += ! pass;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " " << c.title << " | " << o.detail
                  << fmt(" | %.2f s (limit %.0f s)%s", secs, c.limit, in_time ? "" : " over time") << std::endl;
    }
    return failures;
}
