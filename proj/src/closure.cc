#include <oddwalk/closure.hh>
#include <oddwalk/errors.hh>
#include <oddwalk/union_find.hh>

#include <algorithm>
#include <map>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace oddwalk
{
    namespace
    {
        string edge_str(const EdgeId & e)
        {
            return std::to_string(e.u) + "-" + std::to_string(e.v);
        }

        ClosurePartition from_union_find(UnionFind & uf, ClosurePartition::Kind kind)
        {
            ClosurePartition out;
            out.kind = kind;
            int k = 0;
            out.class_of = uf.labels(&k);
            out.classes.resize(k);
            for (int i = 0; i < static_cast<int>(out.class_of.size()); ++i)
                out.classes[out.class_of[i]].push_back(i);
            return out;
        }
    }

    GraphHom GraphHom::make(Graph source, Graph target, vector<Vertex> map)
    {
        if (static_cast<int>(map.size()) != source.order())
            throw InputError("map has " + std::to_string(map.size()) + " entries for " + std::to_string(source.order()) + " source vertices");
        for (std::size_t v = 0; v < map.size(); ++v)
            if (! target.contains(map[v]))
                throw InputError("vertex " + std::to_string(v) + " maps outside the target");
        GraphHom phi{std::move(source), std::move(target), std::move(map)};
        if (auto bad = phi.first_violation())
            throw ViolationError("edge " + edge_str(*bad) + " maps to " + std::to_string(phi.map[bad->u]) + " " +
                std::to_string(phi.map[bad->v]) + ", which is not an edge of the target");
        return phi;
    }

    GraphHom GraphHom::identity(const Graph & g)
    {
        vector<Vertex> m(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            m[v] = v;
        return GraphHom{g, g, std::move(m)};
    }

    optional<EdgeId> GraphHom::first_violation() const
    {
        for (auto & e : source.edges())
            if (! target.adjacent(map[e.u], map[e.v]))
                return e;
        return std::nullopt;
    }

    bool GraphHom::is_valid() const
    {
        if (static_cast<int>(map.size()) != source.order())
            return false;
        for (Vertex x : map)
            if (! target.contains(x))
                return false;
        return ! first_violation();
    }

    int GraphHom::image_edge(int source_edge) const
    {
        auto & e = source.edge(source_edge);
        return target.edge_index_of(map[e.u], map[e.v]);
    }

    GraphHom parse_hom(string_view text, Graph source, Graph target)
    {
        vector<Vertex> m(source.order(), -1);
        std::istringstream in{string(text)};
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            string first;
            if (! (ls >> first) || first.front() == '#')
                continue;
            std::istringstream ls2(line);
            long long u = -1, x = -1;
            string arrow, extra;
            if (! (ls2 >> u >> arrow >> x) || arrow != "->" || (ls2 >> extra))
                throw ParseError(line_no, "expected \"u -> x\"");
            if (u < 0 || u >= source.order())
                throw ParseError(line_no, "source vertex out of range");
            if (x < 0 || x >= target.order())
                throw ParseError(line_no, "target vertex out of range");
            if (m[u] != -1)
                throw ParseError(line_no, "vertex " + std::to_string(u) + " mapped twice");
            m[u] = static_cast<Vertex>(x);
        }
        for (Vertex v = 0; v < source.order(); ++v)
            if (m[v] == -1)
                throw InputError("vertex " + std::to_string(v) + " has no image");
        return GraphHom::make(std::move(source), std::move(target), std::move(m));
    }

    string serialize_hom(const GraphHom & phi)
    {
        std::ostringstream out;
        for (std::size_t v = 0; v < phi.map.size(); ++v)
            out << v << " -> " << phi.map[v] << '\n';
        return out.str();
    }

    EdgeMultiset EdgeMultiset::of_walk(const Graph & owner, const Walk & p)
    {
        EdgeMultiset f(owner);
        for (int i = 0; i < p.length(); ++i)
            ++f.count[owner.edge_index_of(p.vertices[i], p.vertices[i + 1])];
        return f;
    }

    long long EdgeMultiset::total() const
    {
        long long t = 0;
        for (int c : count)
            t += c;
        return t;
    }

    EdgeMultiset EdgeMultiset::operator+(const EdgeMultiset & other) const
    {
        if (count.size() != other.count.size())
            throw InputError("edge multisets over different graphs");
        EdgeMultiset out = *this;
        for (std::size_t i = 0; i < count.size(); ++i)
            out.count[i] += other.count[i];
        return out;
    }

    ClosurePartition c4_partition(const Graph & h)
    {
        UnionFind uf(static_cast<int>(h.size()));
        // common[w] collects N(u) cap N(w) for the current u, w > u
        vector<vector<Vertex>> common(h.order());
        vector<Vertex> touched;
        for (Vertex u = 0; u < h.order(); ++u) {
            for (Vertex x : h.neighbours(u))
                for (Vertex w : h.neighbours(x))
                    if (w > u) {
                        if (common[w].empty())
                            touched.push_back(w);
                        common[w].push_back(x);
                    }
            for (Vertex w : touched) {
                auto & c = common[w];
                if (c.size() >= 2) {
                    int anchor = *h.edge_index(u, c[0]);
                    for (Vertex x : c) {
                        uf.unite(anchor, *h.edge_index(u, x));
                        uf.unite(anchor, *h.edge_index(w, x));
                    }
                }
                c.clear();
            }
            touched.clear();
        }
        return from_union_find(uf, ClosurePartition::Kind::c4_in_target);
    }

    ClosurePartition phi_partition(const GraphHom & phi)
    {
        auto c4 = c4_partition(phi.target);
        const auto & g = phi.source;
        vector<int> key(g.size());
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            key[i] = c4.class_of[phi.image_edge(i)];
        UnionFind uf(static_cast<int>(g.size()));
        // edges sharing a vertex with the same target class are in one component
        std::map<int, int> first_with_key;
        for (Vertex v = 0; v < g.order(); ++v) {
            first_with_key.clear();
            for (int e : g.incident_edges(v)) {
                auto [it, fresh] = first_with_key.emplace(key[e], e);
                if (! fresh)
                    uf.unite(it->second, e);
            }
        }
        return from_union_find(uf, ClosurePartition::Kind::phi_in_source);
    }

    string format_partition(const Graph & g, const ClosurePartition & p)
    {
        std::ostringstream out;
        for (int c = 0; c < p.count(); ++c) {
            out << "class " << c << ":";
            for (int e : p.classes[c])
                out << ' ' << edge_str(g.edge(e));
            out << '\n';
        }
        return out.str();
    }

    InvariantSpec InvariantSpec::all_edges(const Graph & source, optional<Vertex> anchor)
    {
        InvariantSpec s;
        s.stable_set.resize(source.size());
        for (int i = 0; i < static_cast<int>(source.size()); ++i)
            s.stable_set[i] = i;
        s.anchor = anchor;
        return s;
    }

    InvariantSpec InvariantSpec::of_class(const ClosurePartition & phi_part, int class_id, optional<Vertex> anchor)
    {
        InvariantSpec s;
        s.stable_set = phi_part.classes.at(class_id);
        s.anchor = anchor;
        return s;
    }

    string stability_violation(const InvariantSpec & spec, const ClosurePartition & phi_part)
    {
        vector<char> in_a(phi_part.class_of.size(), 0);
        for (int e : spec.stable_set) {
            if (e < 0 || e >= static_cast<int>(in_a.size()))
                return "edge index " + std::to_string(e) + " out of range";
            in_a[e] = 1;
        }
        for (int e : spec.stable_set)
            for (int other : phi_part.classes[phi_part.class_of[e]])
                if (! in_a[other])
                    return "edge " + std::to_string(e) + " is in A but edge " + std::to_string(other) + " of its closure class is not";
        return {};
    }

    int eval_invariant(const InvariantSpec & spec, const EdgeMultiset & f, const GraphHom & phi, const ClosurePartition & phi_part)
    {
        if (f.count.size() != phi.source.size())
            throw InputError("multiset is not over the source graph");
        if (auto why = stability_violation(spec, phi_part); ! why.empty())
            throw RefusalError("set is not stable: " + why);
        long long total = 0;
        for (int e : spec.stable_set) {
            if (spec.anchor) {
                auto & ed = phi.source.edge(e);
                if (phi.map[ed.u] != *spec.anchor && phi.map[ed.v] != *spec.anchor)
                    continue;
            }
            total += f.count[e];
        }
        return static_cast<int>(total & 1);
    }

    int eval_invariant(const InvariantSpec & spec, const EdgeMultiset & f, const GraphHom & phi)
    {
        return eval_invariant(spec, f, phi, phi_partition(phi));
    }

    vector<Walk> eulerian_decomposition(const Graph & g, const vector<int> & multiplicity)
    {
        const int n = g.order();
        // darts: per vertex, (neighbour, instance id) sorted by neighbour
        struct Dart
        {
            Vertex to;
            int instance;
        };
        vector<vector<Dart>> darts(n);
        int instances = 0;
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            for (int c = 0; c < multiplicity[i]; ++c) {
                auto [u, v] = g.edge(i);
                darts[u].push_back({v, instances});
                darts[v].push_back({u, instances});
                ++instances;
            }
        for (Vertex v = 0; v < n; ++v) {
            if (darts[v].size() % 2)
                throw InputError("vertex " + std::to_string(v) + " has odd degree");
            std::stable_sort(darts[v].begin(), darts[v].end(), [](const Dart & a, const Dart & b) { return a.to < b.to; });
        }

        vector<char> used(instances, 0);
        vector<std::size_t> next(n, 0);
        auto take = [&](Vertex v) -> optional<Vertex> {
            while (next[v] < darts[v].size() && used[darts[v][next[v]].instance])
                ++next[v];
            if (next[v] == darts[v].size())
                return std::nullopt;
            auto d = darts[v][next[v]++];
            used[d.instance] = 1;
            return d.to;
        };

        vector<Walk> out;
        for (Vertex s = 0; s < n; ++s) {
            // iterative Hierholzer from s
            vector<Vertex> stack{s}, circuit;
            bool any = false;
            while (! stack.empty()) {
                Vertex v = stack.back();
                if (auto w = take(v)) {
                    any = true;
                    stack.push_back(*w);
                }
                else {
                    circuit.push_back(v);
                    stack.pop_back();
                }
            }
            if (any) {
                std::reverse(circuit.begin(), circuit.end());
                out.emplace_back(std::move(circuit));
            }
        }
        return out;
    }

    Walk odd_cycle_in_closed_walk(const Walk & w)
    {
        if (! w.closed() || w.length() % 2 == 0)
            throw InputError("not an odd closed walk");
        vector<Vertex> cur = w.vertices;
        while (true) {
            const int k = static_cast<int>(cur.size()) - 1;
            std::map<Vertex, int> seen;
            int i = -1, j = -1;
            for (int t = 0; t < k; ++t) {
                auto [it, fresh] = seen.emplace(cur[t], t);
                if (! fresh) {
                    i = it->second;
                    j = t;
                    break;
                }
            }
            if (i == -1)
                return Walk(std::move(cur));
            // cur[i..j] closed of length j - i; the rest closed of length k - (j - i)
            if ((j - i) % 2 == 1)
                cur = vector<Vertex>(cur.begin() + i, cur.begin() + j + 1);
            else {
                vector<Vertex> rest(cur.begin(), cur.begin() + i + 1);
                rest.insert(rest.end(), cur.begin() + j + 1, cur.end());
                cur = std::move(rest);
            }
        }
    }

    namespace
    {
        // All anchored invariants over A = E(G) vanish iff every target vertex has
        // even multidegree in phi(f).
        vector<int> image_degrees(const GraphHom & phi, const EdgeMultiset & f)
        {
            vector<int> deg(phi.target.order(), 0);
            for (int i = 0; i < static_cast<int>(f.count.size()); ++i)
                if (f.count[i]) {
                    auto & e = phi.source.edge(i);
                    deg[phi.map[e.u]] += f.count[i];
                    deg[phi.map[e.v]] += f.count[i];
                }
            return deg;
        }

        void check_pivot_hypotheses(const GraphHom & phi, const EdgeMultiset & f, bool internal)
        {
            auto fail = [&](const string & what) {
                if (internal)
                    throw ViolationError("pivot recursion lost its hypothesis: " + what);
                throw HypothesisError(what);
            };
            if (f.total() % 2 != 1)
                fail("I_E(G)(F) = 0, need 1 (|F| = " + std::to_string(f.total()) + ")");
            auto deg = image_degrees(phi, f);
            for (Vertex u = 0; u < phi.target.order(); ++u)
                if (deg[u] % 2)
                    fail("I_E(G),u(F) = 1 at u = " + std::to_string(u) + ", need 0");
        }
    }

    PivotResult find_pivot_edge(const GraphHom & phi, const EdgeMultiset & f)
    {
        if (f.count.size() != phi.source.size())
            throw InputError("multiset is not over the source graph");
        check_pivot_hypotheses(phi, f, false);

        auto part = phi_partition(phi);
        EdgeMultiset cur = f;
        PivotResult out;
        while (true) {
            ++out.rounds;
            out.sizes.push_back(cur.total());

            vector<int> mult(phi.target.size(), 0);
            for (int i = 0; i < static_cast<int>(cur.count.size()); ++i)
                if (cur.count[i])
                    mult[phi.image_edge(i)] += cur.count[i];
            auto tours = eulerian_decomposition(phi.target, mult);
            const Walk * odd = nullptr;
            for (auto & t : tours)
                if (t.length() % 2 == 1) {
                    odd = &t;
                    break;
                }
            if (! odd)
                throw ViolationError("no odd closed walk in the image decomposition");
            Walk cycle = odd_cycle_in_closed_walk(*odd);

            // smallest image edge on the cycle, lifted to the smallest preimage in F
            int f_star = -1;
            for (int t = 0; t < cycle.length(); ++t) {
                int idx = phi.target.edge_index_of(cycle.vertices[t], cycle.vertices[t + 1]);
                if (f_star == -1 || idx < f_star)
                    f_star = idx;
            }
            int e = -1;
            for (int i = 0; i < static_cast<int>(cur.count.size()) && e == -1; ++i)
                if (cur.count[i] && phi.image_edge(i) == f_star)
                    e = i;

            int cls = part.class_of[e];
            vector<optional<Vertex>> anchors{std::nullopt};
            vector<Vertex> fiber_hits;
            for (int a : part.classes[cls]) {
                auto & ed = phi.source.edge(a);
                fiber_hits.push_back(phi.map[ed.u]);
                fiber_hits.push_back(phi.map[ed.v]);
            }
            std::sort(fiber_hits.begin(), fiber_hits.end());
            fiber_hits.erase(std::unique(fiber_hits.begin(), fiber_hits.end()), fiber_hits.end());
            for (Vertex u : fiber_hits)
                anchors.push_back(u);

            for (auto & anchor : anchors) {
                auto spec = InvariantSpec::of_class(part, cls, anchor);
                if (eval_invariant(spec, cur, phi, part) == 1) {
                    if (eval_invariant(spec, f, phi, part) != 1)
                        throw ViolationError("pivot invariant is 1 on the reduced multiset but not on F");
                    out.edge = e;
                    out.e = phi.source.edge(e);
                    out.spec = std::move(spec);
                    out.odd_cycle = std::move(cycle);
                    return out;
                }
            }

            // every invariant of the class vanishes: drop the class and recurse
            for (int a : part.classes[cls])
                cur.count[a] = 0;
            if (cur.total() >= out.sizes.back())
                throw ViolationError("pivot recursion did not shrink F");
            check_pivot_hypotheses(phi, cur, true);
        }
    }

    bool verify_bipartite_complement(const GraphHom & phi, const InvariantSpec & spec, const Walk & c)
    {
        if (! c.is_cycle_in(phi.source) || c.length() % 2 == 0)
            throw InputError("not an odd cycle of the source");
        if (eval_invariant(spec, EdgeMultiset::of_walk(phi.source, c), phi) != 1)
            throw InputError("invariant is 0 on the given cycle");
        vector<char> in_a(phi.source.size(), 0);
        for (int e : spec.stable_set)
            in_a[e] = 1;
        vector<int> rest;
        for (int i = 0; i < static_cast<int>(phi.source.size()); ++i)
            if (! in_a[i])
                rest.push_back(i);
        return is_bipartite(phi.source.edge_subgraph(rest)).bipartite;
    }
}
