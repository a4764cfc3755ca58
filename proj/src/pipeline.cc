#include <oddwalk/pipeline.hh>
#include <oddwalk/errors.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace oddwalk
{
    namespace
    {
        string edge_str(const EdgeId & e)
        {
            return std::to_string(e.u) + "-" + std::to_string(e.v);
        }

        string vertices_str(const vector<Vertex> & vs)
        {
            string s;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i)
                    s += ",";
                s += std::to_string(vs[i]);
            }
            return s;
        }

        vector<char> touched_vertices(const Graph & g, const vector<int> & edges)
        {
            vector<char> in(g.order(), 0);
            for (int e : edges) {
                in[g.edge(e).u] = 1;
                in[g.edge(e).v] = 1;
            }
            return in;
        }

        // walk from x back to its BFS root
        vector<Vertex> climb(Vertex x, const vector<Vertex> & parent)
        {
            vector<Vertex> w{x};
            while (parent[x] != -1) {
                x = parent[x];
                w.push_back(x);
            }
            return w;
        }

        int image_size(const GraphHom & phi, const Walk & c)
        {
            std::set<Vertex> img;
            for (int i = 0; i < c.length(); ++i)
                img.insert(phi.map[c.vertices[i]]);
            return static_cast<int>(img.size());
        }
    }

    StableSplit StableSplit::of_class(const GraphHom & phi, const ClosurePartition & part, int class_id)
    {
        StableSplit s;
        s.a = part.classes.at(class_id);
        for (int i = 0; i < static_cast<int>(phi.source.size()); ++i)
            if (part.class_of[i] != class_id)
                s.b.push_back(i);
        return s;
    }

    string split_violation(const GraphHom & phi, const StableSplit & split)
    {
        const auto m = phi.source.size();
        vector<int> seen(m, 0);
        for (int e : split.a)
            if (e < 0 || e >= static_cast<int>(m))
                return "edge index " + std::to_string(e) + " out of range";
            else
                ++seen[e];
        for (int e : split.b)
            if (e < 0 || e >= static_cast<int>(m))
                return "edge index " + std::to_string(e) + " out of range";
            else
                ++seen[e];
        for (std::size_t i = 0; i < m; ++i)
            if (seen[i] != 1)
                return "edge " + edge_str(phi.source.edge(i)) + " is in " + std::to_string(seen[i]) + " parts";
        auto part = phi_partition(phi);
        for (auto * side : {&split.a, &split.b}) {
            InvariantSpec spec;
            spec.stable_set = *side;
            std::sort(spec.stable_set.begin(), spec.stable_set.end());
            auto why = stability_violation(spec, part);
            if (! why.empty())
                return (side == &split.a ? "A: " : "B: ") + why;
        }
        return {};
    }

    Extension extend_coloring(const GraphHom & phi, const StableSplit & split, const Coloring & gamma0)
    {
        const Graph & g = phi.source;
        const int n = g.order();
        if (auto why = split_violation(phi, split); ! why.empty())
            throw InputError("not a stable split: " + why);
        if (static_cast<int>(gamma0.color.size()) != n)
            throw InputError("gamma0 has the wrong size");
        const int r = gamma0.palette_size;
        if (r < 2)
            throw InputError("extension needs at least two colours");

        auto in_a = touched_vertices(g, split.a);
        Graph ga = g.edge_subgraph(split.a);
        {
            auto comp = connected_components(ga);
            int label = -1;
            for (Vertex v = 0; v < n; ++v)
                if (in_a[v]) {
                    if (label == -1)
                        label = comp[v];
                    else if (comp[v] != label)
                        throw InputError("G_A is not connected");
                }
            if (label == -1)
                throw InputError("A is empty");
            if (is_bipartite(ga).bipartite)
                throw InputError("G_A is bipartite");
        }
        std::map<Vertex, int> fiber_color;
        for (Vertex v = 0; v < n; ++v) {
            if (! in_a[v])
                continue;
            int c = gamma0.color[v];
            if (c < 0 || c >= r)
                throw InputError("gamma0 leaves vertex " + std::to_string(v) + " of G_A uncoloured");
            auto [it, fresh] = fiber_color.emplace(phi.map[v], c);
            if (! fresh && it->second != c)
                throw InputError("gamma0 is not constant on the fiber of " + std::to_string(phi.map[v]));
        }
        for (int e : split.a)
            if (gamma0.color[g.edge(e).u] == gamma0.color[g.edge(e).v])
                throw InputError("gamma0 is not proper on edge " + edge_str(g.edge(e)));

        Graph gb = g.edge_subgraph(split.b);
        Extension out;
        out.provenance.assign(n, Provenance{});
        vector<Vertex> parent(n, -1);
        vector<char> reached(n, 0);
        std::deque<Vertex> q;
        for (Vertex v = 0; v < n; ++v)
            if (in_a[v]) {
                reached[v] = 1;
                out.provenance[v] = {v, 0};
                q.push_back(v);
            }

        auto bfs = [&]() {
            while (! q.empty()) {
                Vertex x = q.front();
                q.pop_front();
                for (Vertex y : gb.neighbours(x))
                    if (! reached[y]) {
                        reached[y] = 1;
                        parent[y] = x;
                        out.provenance[y] = {out.provenance[x].root, out.provenance[x].distance + 1};
                        q.push_back(y);
                    }
            }
        };
        bfs();
        // components of G that never meet A only carry B-edges
        for (Vertex v = 0; v < n; ++v)
            if (! reached[v]) {
                reached[v] = 1;
                out.provenance[v] = {-1, 0};
                q.push_back(v);
                bfs();
            }

        for (int e : split.b) {
            Vertex x = g.edge(e).u, y = g.edge(e).v;
            auto & px = out.provenance[x];
            auto & py = out.provenance[y];
            bool parity_ok = (px.distance + py.distance) % 2 == 1;
            bool fiber_ok = px.root == -1 || py.root == -1 || phi.map[px.root] == phi.map[py.root];
            if (parity_ok && fiber_ok)
                continue;
            auto wx = climb(x, parent);
            auto wy = climb(y, parent);
            std::ostringstream cert;
            cert << "walk " << vertices_str(wx) << "\nwalk " << vertices_str(wy) << "\njoined by B-edge " << edge_str(g.edge(e));
            string what = parity_ok ?
                "B-walks from " + std::to_string(x) + " reach different fibers" :
                "B-walks through " + edge_str(g.edge(e)) + " disagree in parity";
            throw HypothesisError("extension is not well defined: " + what, cert.str());
        }

        out.coloring = Coloring(n, r);
        for (Vertex v = 0; v < n; ++v) {
            auto & p = out.provenance[v];
            int base = p.root == -1 ? 0 : gamma0.color[p.root];
            out.coloring.color[v] = p.distance % 2 == 0 ? base : (base + 1) % r;
        }
        if (! out.coloring.is_proper(g))
            throw ViolationError("extended colouring is not proper");
        return out;
    }

    Coloring color_ball(const Graph & h, Vertex v, int r, std::int64_t budget)
    {
        if (! h.contains(v))
            throw InputError("vertex out of range");
        if (r < 1)
            throw InputError("radius must be positive");
        auto layers = bfs_layers(h, v);
        if (static_cast<int>(layers.size()) > r + 1)
            layers.resize(r + 1);

        Coloring out(h.order(), 4 * r);
        for (int s = 0; s < static_cast<int>(layers.size()); ++s) {
            auto sub = induced_subgraph(h, layers[s]);
            auto local = degeneracy_coloring(sub.graph);
            if (local.colors_used() > 2 * r) {
                vector<Vertex> ball;
                for (auto & l : layers)
                    ball.insert(ball.end(), l.begin(), l.end());
                std::sort(ball.begin(), ball.end());
                auto bsub = induced_subgraph(h, ball);
                auto odd = has_cycle_of_length(bsub.graph, 2 * r + 1, budget);
                std::ostringstream msg;
                msg << "layer " << s << " of the ball around " << v << " needs " << local.colors_used() << " > " << 2 * r
                    << " colours; layer edges:";
                for (auto & e : sub.graph.edges())
                    msg << " " << sub.original[e.u] << "-" << sub.original[e.v];
                if (odd.status == SearchStatus::yes) {
                    vector<Vertex> cyc;
                    for (Vertex x : odd.cycle)
                        cyc.push_back(bsub.original[x]);
                    msg << "; the ball contains the " << 2 * r + 1 << "-cycle " << vertices_str(cyc);
                }
                throw ViolationError(msg.str());
            }
            const int offset = (s % 2) * 2 * r;
            for (Vertex x = 0; x < sub.graph.order(); ++x)
                out.color[sub.original[x]] = offset + local.color[x];
        }
        if (! out.is_proper_partial(h))
            throw ViolationError("ball colouring is not proper");
        return out;
    }

    ClosureColoring color_closure_subgraph(const Graph & h, EdgeId f, int r, std::int64_t budget)
    {
        if (r < 2)
            throw InputError("r must be at least 2");
        const int fi = h.edge_index_of(f.u, f.v);
        ClosureColoring out;
        auto part = c4_partition(h);
        out.closure = part.classes[part.class_of[fi]];

        // shortest odd cycle through an edge of the class; smallest (length, edge) wins
        optional<vector<Vertex>> best;
        bool unsure = false;
        for (int len = 3; len <= 2 * r - 1 && ! best; len += 2)
            for (int e : out.closure) {
                auto found = has_cycle_through_edge(h, len, h.edge(e), budget);
                if (found.status == SearchStatus::yes) {
                    best = found.cycle;
                    break;
                }
                if (found.status == SearchStatus::unknown)
                    unsure = true;
            }
        if (! best) {
            if (unsure)
                throw RefusalError("odd cycle search through the closure ran out of budget");
            throw HypothesisError("no odd cycle of length at most " + std::to_string(2 * r - 1) + " meets the closure of " +
                edge_str(f));
        }
        out.cycle = Walk(*best);
        const int len = out.cycle.length();

        out.h1_edges = out.closure;
        for (int i = 0; i < len; ++i)
            out.h1_edges.push_back(h.edge_index_of(out.cycle.vertices[i], out.cycle.vertices[i + 1]));
        std::sort(out.h1_edges.begin(), out.h1_edges.end());
        out.h1_edges.erase(std::unique(out.h1_edges.begin(), out.h1_edges.end()), out.h1_edges.end());
        Graph h1 = h.edge_subgraph(out.h1_edges);

        // nearest cycle vertex in H_1, earlier positions win ties
        const int n = h.order();
        vector<int> dist(n, -1);
        out.assigned.assign(n, -1);
        std::deque<Vertex> q;
        for (int j = 0; j < len; ++j) {
            Vertex x = out.cycle.vertices[j];
            dist[x] = 0;
            out.assigned[x] = j;
            q.push_back(x);
        }
        while (! q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : h1.neighbours(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    out.assigned[y] = out.assigned[x];
                    q.push_back(y);
                }
        }
        auto in_h1 = touched_vertices(h, out.h1_edges);
        for (Vertex x = 0; x < n; ++x)
            if (in_h1[x] && (dist[x] == -1 || dist[x] > r - 1))
                throw ViolationError("closure vertex " + std::to_string(x) + " is at distance " +
                    (dist[x] == -1 ? string("infinity") : std::to_string(dist[x])) + " > " + std::to_string(r - 1) +
                    " from the cycle " + vertices_str(out.cycle.vertices));
            else if (! in_h1[x])
                out.assigned[x] = -1;

        out.coloring = Coloring(n, len * 4 * r);
        for (int j = 0; j < len; ++j) {
            auto ball = color_ball(h1, out.cycle.vertices[j], r, budget);
            for (Vertex x = 0; x < n; ++x)
                if (out.assigned[x] == j) {
                    if (! ball.colored(x))
                        throw ViolationError("vertex " + std::to_string(x) + " outside the ball that should colour it");
                    out.coloring.color[x] = j * 4 * r + ball.color[x];
                }
        }
        if (! out.coloring.is_proper_partial(h1))
            throw ViolationError("closure colouring is not proper on H_1");
        return out;
    }

    string to_string(TopologyAssertion a)
    {
        switch (a) {
            case TopologyAssertion::none: return "none";
            case TopologyAssertion::simply_connected: return "simply_connected";
            case TopologyAssertion::cyclic_pi1: return "cyclic_pi1";
        }
        return "?";
    }

    string to_string(PipelineBranch b)
    {
        return b == PipelineBranch::product_4color ? "PRODUCT_4COLOR" : "EXTENSION";
    }

    PipelineTrace bounded_coloring_pipeline(const GraphHom & phi, const Walk & c, int r, TopologyAssertion assertion,
        std::int64_t budget)
    {
        if (assertion == TopologyAssertion::none)
            throw RefusalError("the pipeline needs G asserted simply connected or with cyclic fundamental group");
        if (r < 2)
            throw InputError("r must be at least 2");
        if (! phi.is_valid())
            throw InputError("map is not a homomorphism");
        const Graph & g = phi.source;
        if (! c.is_cycle_in(g) || c.length() % 2 == 0)
            throw InputError("the given walk is not an odd cycle of G");

        PipelineTrace t;
        t.cycle = c;
        t.r = r;
        t.assertion = assertion;
        t.image_size = image_size(phi, c);
        if (t.image_size > 2 * r + 2)
            throw HypothesisError("the cycle has " + std::to_string(t.image_size) + " > " + std::to_string(2 * r + 2) +
                " image vertices", format_walk(c));

        auto odd = has_cycle_of_length(phi.target, 2 * r + 1, budget);
        t.target_freeness = odd.status;
        if (odd.status == SearchStatus::yes)
            throw HypothesisError("the target contains a " + std::to_string(2 * r + 1) + "-cycle",
                vertices_str(odd.cycle));

        t.pivot = find_pivot_edge(phi, EdgeMultiset::of_walk(g, c));
        if (t.pivot.odd_cycle.length() > 2 * r - 1)
            throw HypothesisError("the pivot cycle has length " + std::to_string(t.pivot.odd_cycle.length()) +
                ", so the target is not C" + std::to_string(2 * r + 1) + "-free", format_walk(t.pivot.odd_cycle));
        auto part = phi_partition(phi);
        t.split = StableSplit::of_class(phi, part, part.class_of[t.pivot.edge]);

        Graph gb = g.edge_subgraph(t.split.b);
        auto bip_b = is_bipartite(gb);
        if (! bip_b.bipartite)
            throw HypothesisError("G minus the pivot class is not bipartite, so the topology assertion is false",
                "odd closed walk in B: " + vertices_str(bip_b.odd_closed_walk));

        Graph ga = g.edge_subgraph(t.split.a);
        auto bip_a = is_bipartite(ga);
        if (bip_a.bipartite) {
            t.branch = PipelineBranch::product_4color;
            t.a_side = bip_a.two_coloring;
            t.b_side = bip_b.two_coloring;
            t.coloring = Coloring(g.order(), 4);
            for (Vertex v = 0; v < g.order(); ++v)
                t.coloring.color[v] = 2 * t.a_side.color[v] + t.b_side.color[v];
        }
        else {
            t.branch = PipelineBranch::extension;
            EdgeId f(phi.map[t.pivot.e.u], phi.map[t.pivot.e.v]);
            t.closure = color_closure_subgraph(phi.target, f, r, budget);
            t.gamma0 = Coloring(g.order(), t.closure->coloring.palette_size);
            auto in_a = touched_vertices(g, t.split.a);
            for (Vertex v = 0; v < g.order(); ++v)
                if (in_a[v]) {
                    if (! t.closure->coloring.colored(phi.map[v]))
                        throw ViolationError("image of " + std::to_string(v) + " is not in H_1");
                    t.gamma0.color[v] = t.closure->coloring.color[phi.map[v]];
                }
            auto ext = extend_coloring(phi, t.split, t.gamma0);
            t.coloring = std::move(ext.coloring);
            t.provenance = std::move(ext.provenance);
        }

        if (! t.coloring.is_proper(g))
            throw ViolationError("pipeline colouring is not proper");
        if (t.coloring.palette_size >= 8 * r * r)
            throw ViolationError("pipeline palette " + std::to_string(t.coloring.palette_size) + " is not below 8r^2");
        return t;
    }

    string validate_trace(const GraphHom & phi, const PipelineTrace & t)
    {
        const Graph & g = phi.source;
        const int n = g.order();
        if (static_cast<int>(t.coloring.color.size()) != n || ! t.coloring.is_proper(g))
            return "final colouring is not proper";
        if (t.coloring.palette_size >= 8 * t.r * t.r)
            return "palette is not below 8r^2";
        if (t.image_size != image_size(phi, t.cycle) || t.image_size > 2 * t.r + 2)
            return "cycle image size does not match";
        if (auto why = split_violation(phi, t.split); ! why.empty())
            return "split: " + why;
        auto part = phi_partition(phi);
        if (t.pivot.edge < 0 || part.classes[part.class_of[t.pivot.edge]] != t.split.a)
            return "A is not the closure class of the pivot edge";
        if (eval_invariant(t.pivot.spec, EdgeMultiset::of_walk(g, t.cycle), phi, part) != 1)
            return "pivot invariant does not evaluate to 1 on the cycle";
        auto & pc = t.pivot.odd_cycle;
        if (! pc.is_cycle_in(phi.target) || pc.length() % 2 == 0)
            return "pivot cycle is not an odd cycle of the target";
        {
            EdgeId fe(phi.map[t.pivot.e.u], phi.map[t.pivot.e.v]);
            bool on = false;
            for (int i = 0; i < pc.length(); ++i)
                on = on || EdgeId(pc.vertices[i], pc.vertices[i + 1]) == fe;
            if (! on)
                return "pivot cycle does not carry the image of the pivot edge";
        }
        if (! is_bipartite(g.edge_subgraph(t.split.b)).bipartite)
            return "B is not bipartite";

        if (t.branch == PipelineBranch::product_4color) {
            if (t.coloring.palette_size > 4)
                return "product branch uses more than 4 colours";
            for (int e : t.split.a)
                if (t.a_side.color[g.edge(e).u] == t.a_side.color[g.edge(e).v])
                    return "A-side colouring is not proper";
            for (int e : t.split.b)
                if (t.b_side.color[g.edge(e).u] == t.b_side.color[g.edge(e).v])
                    return "B-side colouring is not proper";
            for (Vertex v = 0; v < n; ++v)
                if (t.coloring.color[v] != 2 * t.a_side.color[v] + t.b_side.color[v])
                    return "product colour mismatch at " + std::to_string(v);
            return {};
        }

        if (! t.closure)
            return "extension branch without a closure colouring";
        auto & cc = *t.closure;
        if (! cc.coloring.is_proper_partial(phi.target.edge_subgraph(cc.h1_edges)))
            return "closure colouring is not proper on H_1";
        if (cc.cycle.length() > 2 * t.r - 1 || cc.coloring.palette_size != cc.cycle.length() * 4 * t.r)
            return "closure cycle or palette out of bounds";
        auto in_a = touched_vertices(g, t.split.a);
        const int r = t.gamma0.palette_size;
        for (Vertex v = 0; v < n; ++v) {
            if (in_a[v]) {
                if (t.gamma0.color[v] != cc.coloring.color[phi.map[v]])
                    return "gamma0 is not the pullback at " + std::to_string(v);
                if (t.coloring.color[v] != t.gamma0.color[v])
                    return "extension disagrees with gamma0 at " + std::to_string(v);
            }
            auto & p = t.provenance[v];
            if (p.root != -1 && ! in_a[p.root])
                return "provenance root of " + std::to_string(v) + " is not in G_A";
            int base = p.root == -1 ? 0 : t.gamma0.color[p.root];
            int want = p.distance % 2 == 0 ? base : (base + 1) % r;
            if (t.coloring.color[v] != want)
                return "colour of " + std::to_string(v) + " does not follow its provenance";
        }
        return {};
    }
}
