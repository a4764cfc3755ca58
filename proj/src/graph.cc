#include <oddwalk/errors.hh>
#include <oddwalk/graph.hh>
#include <oddwalk/kernels.hh>
#include <oddwalk/rng.hh>

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <sstream>

using std::optional;
using std::pair;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace oddwalk
{
    Graph::Graph(int n) : adj_(n), adj_edge_(n) {}

    Graph Graph::from_edges(int n, span<const EdgeId> edges)
    {
        if (n < 0)
            throw InputError("negative vertex count");
        vector<EdgeId> sorted(edges.begin(), edges.end());
        for (auto & e : sorted) {
            if (e.u == e.v)
                throw InputError("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= n)
                throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " outside [0, " + std::to_string(n) + ")");
        }
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        Graph g(n);
        g.edges_ = std::move(sorted);
        for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
            auto [u, v] = g.edges_[i];
            g.adj_[u].push_back(v);
            g.adj_edge_[u].push_back(i);
            g.adj_[v].push_back(u);
            g.adj_edge_[v].push_back(i);
        }
        // Edges are sorted by (u, v), so adj_[u] gets its larger neighbours in
        // order but the smaller ones arrive interleaved; sort both lists together.
        for (int v = 0; v < n; ++v) {
            auto & a = g.adj_[v];
            auto & e = g.adj_edge_[v];
            vector<int> idx(a.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                idx[i] = static_cast<int>(i);
            std::sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x] < a[y]; });
            vector<Vertex> a2(a.size());
            vector<int> e2(e.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
                a2[i] = a[idx[i]];
                e2[i] = e[idx[i]];
            }
            a = std::move(a2);
            e = std::move(e2);
        }
        return g;
    }

    Graph Graph::from_edges(int n, span<const pair<Vertex, Vertex>> edges)
    {
        vector<EdgeId> es;
        es.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a == b)
                throw InputError("self-loop at vertex " + std::to_string(a));
            es.emplace_back(a, b);
        }
        return from_edges(n, es);
    }

    int Graph::min_degree() const
    {
        int best = 0;
        for (int v = 0; v < order(); ++v)
            best = (v == 0) ? degree(v) : std::min(best, degree(v));
        return best;
    }

    optional<int> Graph::edge_index(Vertex a, Vertex b) const
    {
        if (! contains(a) || ! contains(b))
            return std::nullopt;
        const auto & n = adj_[a];
        auto it = std::lower_bound(n.begin(), n.end(), b);
        if (it == n.end() || *it != b)
            return std::nullopt;
        return adj_edge_[a][it - n.begin()];
    }

    bool Graph::adjacent(Vertex a, Vertex b) const
    {
        return edge_index(a, b).has_value();
    }

    int Graph::edge_index_of(Vertex a, Vertex b) const
    {
        auto e = edge_index(a, b);
        if (! e)
            throw InputError(std::to_string(a) + " " + std::to_string(b) + " is not an edge");
        return *e;
    }

    Graph Graph::edge_subgraph(span<const int> edge_indices) const
    {
        vector<EdgeId> es;
        es.reserve(edge_indices.size());
        for (int i : edge_indices)
            es.push_back(edges_[i]);
        return from_edges(order(), es);
    }

    InducedSubgraph induced_subgraph(const Graph & g, span<const Vertex> vertices)
    {
        InducedSubgraph out;
        out.local.assign(g.order(), -1);
        for (Vertex v : vertices) {
            if (out.local[v] == -1) {
                out.local[v] = static_cast<int>(out.original.size());
                out.original.push_back(v);
            }
        }
        vector<EdgeId> es;
        for (Vertex v : out.original)
            for (Vertex w : g.neighbours(v))
                if (v < w && out.local[w] != -1)
                    es.emplace_back(out.local[v], out.local[w]);
        out.graph = Graph::from_edges(static_cast<int>(out.original.size()), es);
        return out;
    }

    int Coloring::colors_used() const
    {
        vector<int> seen;
        for (int c : color)
            if (c != kUncoloured)
                seen.push_back(c);
        std::sort(seen.begin(), seen.end());
        return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }

    bool Coloring::is_proper(const Graph & g) const
    {
        if (static_cast<int>(color.size()) != g.order())
            return false;
        for (int c : color)
            if (c < 0 || c >= palette_size)
                return false;
        for (auto [u, v] : g.edges())
            if (color[u] == color[v])
                return false;
        return true;
    }

    bool Coloring::is_proper_partial(const Graph & g) const
    {
        if (static_cast<int>(color.size()) != g.order())
            return false;
        for (int c : color)
            if (c != kUncoloured && (c < 0 || c >= palette_size))
                return false;
        for (auto [u, v] : g.edges())
            if (color[u] != kUncoloured && color[u] == color[v])
                return false;
        return true;
    }

    namespace
    {
        string_view trim(string_view s)
        {
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
                s.remove_prefix(1);
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        }

        vector<string_view> split_ws(string_view s)
        {
            vector<string_view> out;
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                    ++i;
                std::size_t j = i;
                while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                    ++j;
                if (j > i)
                    out.push_back(s.substr(i, j - i));
                i = j;
            }
            return out;
        }

        optional<long long> parse_int(string_view s)
        {
            long long x = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
            if (ec != std::errc() || p != s.data() + s.size())
                return std::nullopt;
            return x;
        }
    }

    Graph parse_graph(string_view text)
    {
        optional<long long> declared;
        vector<EdgeId> edges;
        long long max_id = -1;
        int line_no = 0;
        bool seen_content = false;

        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == string_view::npos)
                nl = text.size();
            string_view line = trim(text.substr(pos, nl - pos));
            pos = nl + 1;
            ++line_no;

            if (line.empty() || line.front() == '#')
                continue;
            auto tok = split_ws(line);
            if (! seen_content && tok.size() == 2 && tok[0] == "n") {
                seen_content = true;
                declared = parse_int(tok[1]);
                if (! declared || *declared < 0)
                    throw ParseError(line_no, "bad vertex count header");
                continue;
            }
            seen_content = true;
            if (tok.size() != 2)
                throw ParseError(line_no, "expected \"u v\"");
            auto a = parse_int(tok[0]), b = parse_int(tok[1]);
            if (! a || ! b || *a < 0 || *b < 0 || *a > (1LL << 30) || *b > (1LL << 30))
                throw ParseError(line_no, "expected two nonnegative integers");
            if (*a == *b)
                throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(*a));
            if (declared && (*a >= *declared || *b >= *declared))
                throw ParseError(line_no, "vertex id exceeds declared count");
            max_id = std::max({max_id, *a, *b});
            edges.emplace_back(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
        }

        long long n = std::max(declared.value_or(0), max_id + 1);
        return Graph::from_edges(static_cast<int>(n), edges);
    }

    string serialize_graph(const Graph & g)
    {
        std::ostringstream out;
        out << "n " << g.order() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    optional<int> odd_girth(const Graph & g)
    {
        return kernels::odd_girth(g);
    }

    namespace
    {
        // Depth-first search for a simple path of exactly `length` edges from
        // `from` to `to` through allowed vertices. When from == to the search
        // closes a cycle. Prunes with BFS distance to `to` inside the allowed set.
        // Length of a shortest odd closed walk through v, -1 if none. An odd
        // cycle of length k through v needs this to be at most k.
        int odd_walk_through(const Graph & g, Vertex v)
        {
            vector<int> dist(2 * g.order(), -1);
            std::deque<int> q{2 * v};
            dist[2 * v] = 0;
            while (! q.empty()) {
                int state = q.front();
                q.pop_front();
                for (Vertex y : g.neighbours(state / 2)) {
                    int next = 2 * y + (1 - state % 2);
                    if (dist[next] != -1)
                        continue;
                    dist[next] = dist[state] + 1;
                    if (next == 2 * v + 1)
                        return dist[next];
                    q.push_back(next);
                }
            }
            return -1;
        }

        class PathSearch
        {
            public:
                PathSearch(const Graph & g, std::function<bool(Vertex)> allowed, std::int64_t budget) :
                    g_(g), allowed_(std::move(allowed)), budget_(budget), on_path_(g.order(), 0), dist_(g.order(), -1)
                {
                }

                SearchStatus run(Vertex from, Vertex to, int length, const optional<EdgeId> & forbidden_edge = std::nullopt)
                {
                    forbidden_ = forbidden_edge;
                    // distances to `to` restricted to allowed vertices
                    std::fill(dist_.begin(), dist_.end(), -1);
                    std::deque<Vertex> q;
                    dist_[to] = 0;
                    q.push_back(to);
                    while (! q.empty()) {
                        Vertex x = q.front();
                        q.pop_front();
                        for (Vertex y : g_.neighbours(x))
                            if (dist_[y] == -1 && allowed_(y)) {
                                dist_[y] = dist_[x] + 1;
                                q.push_back(y);
                            }
                    }
                    path_.clear();
                    path_.push_back(from);
                    on_path_[from] = 1;
                    to_ = to;
                    length_ = length;
                    exhausted_ = false;
                    bool found = dfs(from, 0);
                    on_path_[from] = 0;
                    if (found)
                        return SearchStatus::yes;
                    return exhausted_ ? SearchStatus::unknown : SearchStatus::no;
                }

                const vector<Vertex> & path() const { return path_; }
                std::int64_t expansions() const { return expansions_; }

            private:
                bool dfs(Vertex x, int depth)
                {
                    if (++expansions_ > budget_) {
                        exhausted_ = true;
                        return false;
                    }
                    int remaining = length_ - depth;
                    for (Vertex y : g_.neighbours(x)) {
                        if (forbidden_ && EdgeId(x, y) == *forbidden_)
                            continue;
                        if (y == to_) {
                            if (remaining == 1) {
                                path_.push_back(y);
                                return true;
                            }
                            continue;
                        }
                        if (remaining <= 1 || on_path_[y] || ! allowed_(y))
                            continue;
                        if (dist_[y] == -1 || dist_[y] > remaining - 1)
                            continue;
                        on_path_[y] = 1;
                        path_.push_back(y);
                        if (dfs(y, depth + 1))
                            return true;
                        path_.pop_back();
                        on_path_[y] = 0;
                        if (exhausted_)
                            return false;
                    }
                    return false;
                }

                const Graph & g_;
                std::function<bool(Vertex)> allowed_;
                std::int64_t budget_;
                std::int64_t expansions_ = 0;
                vector<char> on_path_;
                vector<int> dist_;
                vector<Vertex> path_;
                optional<EdgeId> forbidden_;
                Vertex to_ = 0;
                int length_ = 0;
                bool exhausted_ = false;
        };
    }

    CycleSearch has_cycle_of_length(const Graph & g, int k, std::int64_t budget)
    {
        if (k < 3)
            throw InputError("cycle length must be at least 3");
        CycleSearch result;
        if (k % 2 == 1) {
            auto og = odd_girth(g);
            if (! og || *og > k)
                return result;
        }
        bool any_unknown = false;
        std::int64_t left = budget;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (g.degree(s) < 2)
                continue;
            PathSearch search(g, [s](Vertex y) { return y > s; }, left);
            auto status = search.run(s, s, k);
            result.expansions += search.expansions();
            left = budget - result.expansions;
            if (status == SearchStatus::yes) {
                result.status = SearchStatus::yes;
                result.cycle = search.path();
                return result;
            }
            if (status == SearchStatus::unknown) {
                any_unknown = true;
                break;
            }
        }
        result.status = any_unknown ? SearchStatus::unknown : SearchStatus::no;
        return result;
    }

    CycleSearch has_cycle_through_vertex(const Graph & g, int k, Vertex v, std::int64_t budget)
    {
        if (k < 3)
            throw InputError("cycle length must be at least 3");
        CycleSearch result;
        if (k % 2 == 1) {
            int w = odd_walk_through(g, v);
            if (w == -1 || w > k)
                return result;
        }
        PathSearch search(g, [](Vertex) { return true; }, budget);
        result.status = search.run(v, v, k);
        result.expansions = search.expansions();
        if (result.status == SearchStatus::yes)
            result.cycle = search.path();
        return result;
    }

    CycleSearch has_cycle_through_edge(const Graph & g, int k, EdgeId e, std::int64_t budget)
    {
        if (k < 3)
            throw InputError("cycle length must be at least 3");
        if (! g.adjacent(e.u, e.v))
            throw InputError("edge not in graph");
        CycleSearch result;
        if (k % 2 == 1) {
            int w = odd_walk_through(g, e.u);
            if (w == -1 || w > k)
                return result;
        }
        // path v -> ... -> u of k-1 edges avoiding uv, closed by uv
        PathSearch search(g, [](Vertex) { return true; }, budget);
        result.status = search.run(e.v, e.u, k - 1, e);
        result.expansions = search.expansions();
        if (result.status == SearchStatus::yes) {
            result.cycle = search.path();
            result.cycle.push_back(e.v);
        }
        return result;
    }

    vector<int> bfs_distances(const Graph & g, Vertex v)
    {
        vector<int> dist(g.order(), -1);
        std::deque<Vertex> q{v};
        dist[v] = 0;
        while (! q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbours(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
        }
        return dist;
    }

    vector<vector<Vertex>> bfs_layers(const Graph & g, Vertex v)
    {
        if (! g.contains(v))
            throw InputError("vertex out of range");
        auto dist = bfs_distances(g, v);
        vector<vector<Vertex>> layers;
        for (Vertex x = 0; x < g.order(); ++x) {
            if (dist[x] < 0)
                continue;
            if (static_cast<int>(layers.size()) <= dist[x])
                layers.resize(dist[x] + 1);
            layers[dist[x]].push_back(x);
        }
        return layers;
    }

    Degeneracy degeneracy_order(const Graph & g)
    {
        const int n = g.order();
        Degeneracy out;
        if (n == 0)
            return out;
        vector<int> deg(n);
        int maxdeg = 0;
        for (Vertex v = 0; v < n; ++v) {
            deg[v] = g.degree(v);
            maxdeg = std::max(maxdeg, deg[v]);
        }
        // bucket queue, lowest id first within a bucket for determinism
        vector<vector<Vertex>> buckets(maxdeg + 1);
        for (Vertex v = n - 1; v >= 0; --v)
            buckets[deg[v]].push_back(v);
        vector<char> removed(n, 0);
        int cur = 0;
        for (int step = 0; step < n; ++step) {
            cur = std::max(0, cur - 1);
            Vertex v = -1;
            while (v == -1) {
                while (buckets[cur].empty())
                    ++cur;
                Vertex cand = buckets[cur].back();
                buckets[cur].pop_back();
                if (! removed[cand] && deg[cand] == cur)
                    v = cand;
            }
            removed[v] = 1;
            out.order.push_back(v);
            out.degeneracy = std::max(out.degeneracy, cur);
            for (Vertex w : g.neighbours(v))
                if (! removed[w]) {
                    --deg[w];
                    buckets[deg[w]].push_back(w);
                }
        }
        return out;
    }

    Coloring greedy_coloring(const Graph & g, span<const Vertex> order)
    {
        Coloring c(g.order(), 0);
        vector<int> mark(g.order() + 1, -1);
        for (Vertex v : order) {
            for (Vertex w : g.neighbours(v))
                if (c.color[w] != Coloring::kUncoloured)
                    mark[c.color[w]] = v;
            int col = 0;
            while (mark[col] == v)
                ++col;
            c.color[v] = col;
            c.palette_size = std::max(c.palette_size, col + 1);
        }
        return c;
    }

    Coloring degeneracy_coloring(const Graph & g)
    {
        auto d = degeneracy_order(g);
        std::reverse(d.order.begin(), d.order.end());
        return greedy_coloring(g, d.order);
    }

    Bipartition is_bipartite(const Graph & g)
    {
        const int n = g.order();
        Bipartition out;
        out.two_coloring = Coloring(n, 2);
        auto & side = out.two_coloring.color;
        vector<Vertex> parent(n, -1);
        vector<int> dist(n, -1);
        for (Vertex root = 0; root < n; ++root) {
            if (side[root] != Coloring::kUncoloured)
                continue;
            side[root] = 0;
            dist[root] = 0;
            std::deque<Vertex> q{root};
            while (! q.empty()) {
                Vertex x = q.front();
                q.pop_front();
                for (Vertex y : g.neighbours(x)) {
                    if (side[y] == Coloring::kUncoloured) {
                        side[y] = 1 - side[x];
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        q.push_back(y);
                    }
                    else if (side[y] == side[x]) {
                        // dist[x] == dist[y]; climb to the common ancestor
                        vector<Vertex> left{x}, right{y};
                        Vertex a = x, b = y;
                        while (a != b) {
                            a = parent[a];
                            b = parent[b];
                            left.push_back(a);
                            right.push_back(b);
                        }
                        // left: x .. lca, right: y .. lca
                        vector<Vertex> walk(left.rbegin(), left.rend());
                        right.pop_back();
                        for (Vertex v : right)
                            walk.push_back(v);
                        walk.push_back(walk.front());
                        out.bipartite = false;
                        out.odd_closed_walk = std::move(walk);
                        out.two_coloring = Coloring();
                        return out;
                    }
                }
            }
        }
        return out;
    }

    vector<int> connected_components(const Graph & g, int * count)
    {
        vector<int> comp(g.order(), -1);
        int next = 0;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (comp[s] != -1)
                continue;
            comp[s] = next;
            std::deque<Vertex> q{s};
            while (! q.empty()) {
                Vertex x = q.front();
                q.pop_front();
                for (Vertex y : g.neighbours(x))
                    if (comp[y] == -1) {
                        comp[y] = next;
                        q.push_back(y);
                    }
            }
            ++next;
        }
        if (count)
            *count = next;
        return comp;
    }

    bool is_connected(const Graph & g)
    {
        int k = 0;
        connected_components(g, &k);
        return k <= 1;
    }

    vector<Vertex> greedy_clique(const Graph & g)
    {
        vector<Vertex> best;
        for (Vertex s = 0; s < g.order(); ++s) {
            vector<Vertex> clique{s};
            vector<Vertex> cand(g.neighbours(s).begin(), g.neighbours(s).end());
            while (! cand.empty()) {
                // pick the candidate with most neighbours among the candidates
                Vertex pick = cand.front();
                int pick_score = -1;
                for (Vertex c : cand) {
                    int score = 0;
                    for (Vertex d : cand)
                        if (g.adjacent(c, d))
                            ++score;
                    if (score > pick_score) {
                        pick_score = score;
                        pick = c;
                    }
                }
                clique.push_back(pick);
                vector<Vertex> next;
                for (Vertex c : cand)
                    if (c != pick && g.adjacent(c, pick))
                        next.push_back(c);
                cand = std::move(next);
            }
            if (clique.size() > best.size())
                best = std::move(clique);
        }
        return best;
    }

    namespace
    {
        // DSATUR backtracking for a k-colouring.
        class KColorer
        {
            public:
                KColorer(const Graph & g, int k) : g_(g), k_(k), color_(g.order(), -1), used_(g.order(), vector<int>(k, 0)) {}

                bool run() { return extend(0, 0); }

            private:
                bool extend(int colored, int max_used)
                {
                    if (colored == g_.order())
                        return true;
                    Vertex pick = -1;
                    int best_sat = -1, best_deg = -1;
                    for (Vertex v = 0; v < g_.order(); ++v) {
                        if (color_[v] != -1)
                            continue;
                        int sat = 0;
                        for (int c = 0; c < k_; ++c)
                            sat += used_[v][c] > 0;
                        if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
                            best_sat = sat;
                            best_deg = g_.degree(v);
                            pick = v;
                        }
                    }
                    int limit = std::min(k_, max_used + 1);
                    for (int c = 0; c < limit; ++c) {
                        if (used_[pick][c])
                            continue;
                        color_[pick] = c;
                        for (Vertex w : g_.neighbours(pick))
                            ++used_[w][c];
                        if (extend(colored + 1, std::max(max_used, c + 1)))
                            return true;
                        for (Vertex w : g_.neighbours(pick))
                            --used_[w][c];
                        color_[pick] = -1;
                    }
                    return false;
                }

                const Graph & g_;
                int k_;
                vector<int> color_;
                vector<vector<int>> used_;
        };
    }

    int exact_chromatic(const Graph & g, int vertex_cap)
    {
        if (g.order() > vertex_cap)
            throw RefusalError("exact chromatic number refused for " + std::to_string(g.order()) + " vertices (cap " +
                std::to_string(vertex_cap) + "); use degeneracy and clique bounds instead");
        if (g.order() == 0)
            return 0;
        int lower = static_cast<int>(greedy_clique(g).size());
        int upper = degeneracy_coloring(g).palette_size;
        for (int k = lower; k < upper; ++k)
            if (KColorer(g, k).run())
                return k;
        return upper;
    }

    namespace named
    {
        Graph complete(int n)
        {
            vector<EdgeId> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    es.emplace_back(i, j);
            return Graph::from_edges(n, es);
        }

        Graph cycle(int n)
        {
            vector<EdgeId> es;
            for (int i = 0; i < n; ++i)
                es.emplace_back(i, (i + 1) % n);
            return Graph::from_edges(n, es);
        }

        Graph path(int n)
        {
            vector<EdgeId> es;
            for (int i = 0; i + 1 < n; ++i)
                es.emplace_back(i, i + 1);
            return Graph::from_edges(n, es);
        }

        Graph star(int leaves)
        {
            vector<EdgeId> es;
            for (int i = 1; i <= leaves; ++i)
                es.emplace_back(0, i);
            return Graph::from_edges(leaves + 1, es);
        }

        Graph petersen()
        {
            vector<EdgeId> es;
            for (int i = 0; i < 5; ++i) {
                es.emplace_back(i, (i + 1) % 5);
                es.emplace_back(i, i + 5);
                es.emplace_back(i + 5, (i + 2) % 5 + 5);
            }
            return Graph::from_edges(10, es);
        }

        Graph homotopy_example()
        {
            const pair<Vertex, Vertex> es[] = {{0, 1}, {0, 2}, {0, 5}, {0, 6}, {1, 2}, {1, 3},
                {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
            return Graph::from_edges(7, es);
        }

        Graph random(int n, double p, std::uint64_t seed)
        {
            SplitMix64 rng(seed);
            vector<EdgeId> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.uniform() < p)
                        es.emplace_back(i, j);
            return Graph::from_edges(n, es);
        }
    }
}
