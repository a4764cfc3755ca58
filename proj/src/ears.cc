#include <oddwalk/pipeline.hh>
#include <oddwalk/errors.hh>

#include <algorithm>
#include <deque>
#include <set>

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

        bool on_cycle(const Walk & c, Vertex v)
        {
            return std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end();
        }

        bool has_edge(const Walk & w, EdgeId e)
        {
            for (int i = 0; i < w.length(); ++i)
                if (EdgeId(w.vertices[i], w.vertices[i + 1]) == e)
                    return true;
            return false;
        }

        int position(const vector<Vertex> & w, Vertex v)
        {
            auto it = std::find(w.begin(), w.end(), v);
            return it == w.end() ? -1 : static_cast<int>(it - w.begin());
        }

        // Splice or attach along the edge x y2, given the ear carries x y1.
        // Returns the new path.
        vector<Vertex> attach(const Walk & c, vector<Vertex> w, Vertex x, Vertex y1, Vertex y2, string & how)
        {
            const int m = static_cast<int>(w.size()) - 1;
            if (w[m] == x || w[m] == y1)
                std::reverse(w.begin(), w.end());
            const int i = position(w, x);
            if (i < 0)
                throw ViolationError("ear does not pass through " + std::to_string(x));
            const int j = position(w, y2);
            vector<Vertex> out;
            if (j >= 0 && j < i) {
                out.assign(w.begin(), w.begin() + j + 1);
                out.insert(out.end(), w.begin() + i, w.end());
                how = "splice back";
            }
            else if (j > i) {
                out.assign(w.begin(), w.begin() + i + 1);
                out.insert(out.end(), w.begin() + j, w.end());
                how = "splice forward";
            }
            else if (on_cycle(c, y2)) {
                out.assign(w.begin(), w.begin() + i + 1);
                out.push_back(y2);
                how = "land on cycle";
            }
            else
                throw ViolationError("attach target " + std::to_string(y2) + " is neither on the ear nor on the cycle");
            return out;
        }

        // Replace the consecutive pair (a, b) of w, in either orientation,
        // by a, mid..., b.
        vector<Vertex> detour(vector<Vertex> w, Vertex a, Vertex b, const vector<Vertex> & mid)
        {
            for (std::size_t k = 0; k + 1 < w.size(); ++k) {
                if (w[k] == a && w[k + 1] == b) {
                    w.insert(w.begin() + k + 1, mid.begin(), mid.end());
                    return w;
                }
                if (w[k] == b && w[k + 1] == a) {
                    w.insert(w.begin() + k + 1, mid.rbegin(), mid.rend());
                    return w;
                }
            }
            throw ViolationError("ear has no subpath " + std::to_string(a) + std::to_string(b));
        }

        bool has_subpath3(const vector<Vertex> & w, Vertex a, Vertex b, Vertex c)
        {
            for (std::size_t k = 0; k + 2 < w.size(); ++k)
                if (w[k + 1] == b && ((w[k] == a && w[k + 2] == c) || (w[k] == c && w[k + 2] == a)))
                    return true;
            return false;
        }

        struct Built
        {
            vector<Vertex> path;
            EdgeId edge;
            string how;
            bool intermediate;
        };

        // One step across a square between adjacent edges e1, e2.
        vector<Built> adjacent_step(const Walk & c, const vector<Vertex> & q1, const vector<Vertex> & sq, EdgeId e1, EdgeId e2)
        {
            Vertex x2 = e1.touches(e2.u) ? e2.u : e2.v;
            Vertex x1 = e1.other(x2), x3 = e2.other(x2);
            Vertex x4 = -1;
            for (Vertex v : sq)
                if (v != x1 && v != x2 && v != x3)
                    x4 = v;

            std::set<Vertex> w(q1.begin(), q1.end());
            w.insert(c.vertices.begin(), c.vertices.end());
            vector<Built> out;
            if (w.count(x3)) {
                Built b{{}, e2, {}, false};
                b.path = attach(c, q1, x2, x1, x3, b.how);
                out.push_back(std::move(b));
            }
            else if (! w.count(x4)) {
                out.push_back({detour(q1, x1, x2, {x4, x3}), e2, "square detour", false});
            }
            else {
                Built q4{{}, EdgeId(x4, x1), {}, true};
                q4.path = attach(c, q1, x1, x2, x4, q4.how);
                out.push_back(q4);
                if (has_subpath3(q4.path, x4, x1, x2)) {
                    auto p = q4.path;
                    std::replace(p.begin(), p.end(), x1, x3);
                    out.push_back({p, e2, "substitute", false});
                }
                else
                    out.push_back({detour(q4.path, x1, x4, {x2, x3}), e2, "square detour via " + edge_str(EdgeId(x4, x1)), false});
            }
            return out;
        }
    }

    string ear_violation(const Graph & h, const CEar & q)
    {
        auto & c = q.base_cycle;
        if (! c.is_cycle_in(h))
            return "base is not a cycle of the graph";
        auto & p = q.path.vertices;
        if (q.path.length() < 2)
            return "ear is shorter than 2";
        if (! q.path.is_walk_in(h))
            return "ear is not a walk of the graph";
        std::set<Vertex> seen(p.begin(), p.end());
        if (seen.size() != p.size())
            return "ear repeats a vertex";
        if (! on_cycle(c, p.front()) || ! on_cycle(c, p.back()))
            return "an endpoint is off the cycle";
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (on_cycle(c, p[i]))
                return "interior vertex " + std::to_string(p[i]) + " is on the cycle";
        return {};
    }

    Walk ear_cycle(const CEar & q)
    {
        auto & cv = q.base_cycle.vertices;
        const int len = q.base_cycle.length();
        const int m = q.path.length();
        const int ia = position(cv, q.path.front());
        const int ib = position(cv, q.path.back());
        const int fwd = ((ia - ib) % len + len) % len;     // b -> a going forward
        vector<Vertex> out = q.path.vertices;
        if ((m + fwd) % 2 == 1)
            for (int k = 1; k <= fwd; ++k)
                out.push_back(cv[(ib + k) % len]);
        else
            for (int k = 1; k <= len - fwd; ++k)
                out.push_back(cv[((ib - k) % len + len) % len]);
        return Walk(std::move(out));
    }

    EarChain ear_chain_witness(const Graph & h, const Walk & c, EdgeId e0, EdgeId e, int r)
    {
        if (r < 2)
            throw InputError("r must be at least 2");
        if (! c.is_cycle_in(h) || c.length() % 2 == 0)
            throw InputError("c is not an odd cycle of the graph");
        if (c.length() >= 2 * r + 1)
            throw InputError("c is not shorter than 2r+1");
        auto og = odd_girth(h);
        if (! og || *og != c.length())
            throw InputError("c is not a shortest odd cycle");
        if (! has_edge(c, e0))
            throw InputError("e0 is not on c");
        const int ie = h.edge_index_of(e.u, e.v);
        const int ie0 = h.edge_index_of(e0.u, e0.v);

        EarChain out;
        if (has_edge(c, e)) {
            out.chain = {e};
            return out;
        }
        auto part = c4_partition(h);
        if (part.class_of[ie] != part.class_of[ie0])
            throw InputError("edge " + edge_str(e) + " is not in the C4 closure of " + edge_str(e0));

        // shortest chain from any cycle edge in the edge graph
        const int m = static_cast<int>(h.size());
        vector<int> parent(m, -2);
        vector<vector<Vertex>> via(m);
        std::deque<int> q;
        for (int i = 0; i < c.length(); ++i) {
            int k = h.edge_index_of(c.vertices[i], c.vertices[i + 1]);
            parent[k] = -1;
            q.push_back(k);
        }
        while (! q.empty() && parent[ie] == -2) {
            int k = q.front();
            q.pop_front();
            Vertex x = h.edge(k).u, y = h.edge(k).v;
            for (Vertex a : h.neighbours(x)) {
                if (a == y)
                    continue;
                for (Vertex b : h.neighbours(y)) {
                    if (b == x || b == a || ! h.adjacent(a, b))
                        continue;
                    vector<Vertex> sq{x, y, b, a};
                    for (int t = 0; t < 4; ++t) {
                        int j = h.edge_index_of(sq[t], sq[(t + 1) % 4]);
                        if (parent[j] == -2) {
                            parent[j] = k;
                            via[j] = sq;
                            q.push_back(j);
                        }
                    }
                }
            }
        }
        if (parent[ie] == -2)
            throw ViolationError("closure edge not reached by the square chain search");
        vector<int> idx;
        for (int k = ie; k != -1; k = parent[k])
            idx.push_back(k);
        std::reverse(idx.begin(), idx.end());
        for (int k : idx)
            out.chain.push_back(h.edge(k));
        for (std::size_t i = 1; i < idx.size(); ++i)
            out.squares.push_back(via[idx[i]]);

        auto record = [&](vector<Vertex> path, EdgeId carried, const vector<Vertex> & sq, bool inter, const string & how) {
            EarStep s;
            s.ear = CEar{Walk(std::move(path)), c};
            if (auto why = ear_violation(h, s.ear); ! why.empty())
                throw ViolationError("constructed ear " + format_walk(s.ear.path) + " (" + how + "): " + why);
            if (! has_edge(s.ear.path, carried))
                throw ViolationError("constructed ear " + format_walk(s.ear.path) + " misses " + edge_str(carried));
            s.odd_cycle = ear_cycle(s.ear);
            int prev = out.steps.empty() ? c.length() : out.steps.back().odd_cycle.length();
            int len = s.odd_cycle.length();
            if (len == 2 * r + 1)
                throw HypothesisError("an ear closes a " + std::to_string(len) + "-cycle", format_walk(s.odd_cycle));
            if (len > prev + 2 || len > 2 * r + 1)
                throw ViolationError("odd cycle grew from " + std::to_string(prev) + " to " + std::to_string(len));
            s.edge = carried;
            s.square = sq;
            s.intermediate = inter;
            s.construction = how;
            out.steps.push_back(std::move(s));
        };

        // base: the part of D_1 minus e_0 around e_1 between cycle vertices
        {
            auto & d = out.squares[0];
            const EdgeId first = out.chain[0], e1 = out.chain[1];
            int k = 0;
            while (EdgeId(d[k], d[(k + 1) % 4]) != first)
                ++k;
            vector<Vertex> p{d[(k + 1) % 4], d[(k + 2) % 4], d[(k + 3) % 4], d[k]};
            int t = 0;
            while (EdgeId(p[t], p[t + 1]) != e1)
                ++t;
            int lo = t, hi = t + 1;
            while (! on_cycle(c, p[lo]))
                --lo;
            while (! on_cycle(c, p[hi]))
                ++hi;
            record(vector<Vertex>(p.begin() + lo, p.begin() + hi + 1), e1, d, false, "square minus cycle edge");
        }

        for (std::size_t i = 1; i + 1 < out.chain.size(); ++i) {
            const EdgeId e1 = out.chain[i], e2 = out.chain[i + 1];
            auto & sq = out.squares[i];
            vector<std::pair<EdgeId, EdgeId>> hops;
            bool adjacent = e1.touches(e2.u) || e1.touches(e2.v);
            if (adjacent)
                hops.push_back({e1, e2});
            else {
                // opposite edges: go through the smaller edge adjacent to both
                vector<EdgeId> mids;
                for (int t = 0; t < 4; ++t) {
                    EdgeId s(sq[t], sq[(t + 1) % 4]);
                    if (s != e1 && s != e2)
                        mids.push_back(s);
                }
                EdgeId mid = *std::min_element(mids.begin(), mids.end());
                hops.push_back({e1, mid});
                hops.push_back({mid, e2});
            }
            for (std::size_t hdx = 0; hdx < hops.size(); ++hdx) {
                auto built = adjacent_step(c, out.steps.back().ear.path.vertices, sq, hops[hdx].first, hops[hdx].second);
                for (auto & b : built)
                    record(b.path, b.edge, sq, b.intermediate || (! adjacent && hdx == 0), b.how);
            }
        }
        return out;
    }

    bool is_eulerian_set(const Graph & h, const vector<int> & edges)
    {
        vector<int> deg(h.order(), 0);
        for (int e : edges) {
            ++deg[h.edge(e).u];
            ++deg[h.edge(e).v];
        }
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
    }

    bool symmetric_difference_bound(const Graph & h, const Walk & c, const vector<int> & x, const vector<int> & y)
    {
        vector<char> on_c(h.size(), 0);
        for (int i = 0; i < c.length(); ++i)
            on_c[h.edge_index_of(c.vertices[i], c.vertices[i + 1])] = 1;
        std::set<int> x1;
        for (int e : x)
            if (! on_c[e])
                x1.insert(e);
        long long y1_minus_x1 = 0;
        for (int e : std::set<int>(y.begin(), y.end()))
            if (! on_c[e] && ! x1.count(e))
                ++y1_minus_x1;
        return static_cast<long long>(y.size()) <= static_cast<long long>(x.size()) + 2 * y1_minus_x1;
    }
}
