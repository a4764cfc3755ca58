#include "bidirectional.hh"

#include <oddwalk/errors.hh>
#include <oddwalk/ncomplex.hh>
#include <oddwalk/snf.hh>
#include <oddwalk/union_find.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

using std::array;
using std::pair;
using std::string;
using std::vector;

namespace oddwalk
{
    SimplicialComplex::SimplicialComplex(int vertex_count, vector<vector<Vertex>> faces) :
        vertex_count_(vertex_count), present_(vertex_count, 0), faces_of_(vertex_count)
    {
        for (auto & f : faces) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (Vertex v : f)
                if (v < 0 || v >= vertex_count)
                    throw InputError("face vertex out of range");
        }
        // larger faces first so containment only needs checking against earlier ones
        std::sort(faces.begin(), faces.end(), [](const auto & a, const auto & b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        vector<vector<int>> containing(vertex_count);
        for (auto & f : faces) {
            if (f.empty())
                continue;
            // candidate supersets all contain f[0]
            bool contained = false;
            for (int id : containing[f[0]])
                if (std::includes(faces_[id].begin(), faces_[id].end(), f.begin(), f.end())) {
                    contained = true;
                    break;
                }
            if (contained)
                continue;
            int id = static_cast<int>(faces_.size());
            faces_.push_back(f);
            for (Vertex v : f)
                containing[v].push_back(id);
        }
        std::sort(faces_.begin(), faces_.end());
        for (int id = 0; id < static_cast<int>(faces_.size()); ++id)
            for (Vertex v : faces_[id]) {
                present_[v] = 1;
                faces_of_[v].push_back(id);
            }
    }

    vector<Vertex> SimplicialComplex::vertices() const
    {
        vector<Vertex> out;
        for (Vertex v = 0; v < vertex_count_; ++v)
            if (present_[v])
                out.push_back(v);
        return out;
    }

    bool SimplicialComplex::is_face(vector<Vertex> s) const
    {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            return true;
        if (! present(s[0]))
            return false;
        for (int id : faces_of_[s[0]])
            if (std::includes(faces_[id].begin(), faces_[id].end(), s.begin(), s.end()))
                return true;
        return false;
    }

    vector<pair<Vertex, Vertex>> SimplicialComplex::edges() const
    {
        vector<pair<Vertex, Vertex>> out;
        for (auto & f : faces_)
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    out.emplace_back(f[i], f[j]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    vector<array<Vertex, 3>> SimplicialComplex::triangles() const
    {
        vector<array<Vertex, 3>> out;
        for (auto & f : faces_)
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    for (std::size_t l = j + 1; l < f.size(); ++l)
                        out.push_back({f[i], f[j], f[l]});
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    vector<array<Vertex, 3>> SimplicialComplex::fan_triangles() const
    {
        vector<array<Vertex, 3>> out;
        for (auto & f : faces_)
            for (std::size_t j = 1; j < f.size(); ++j)
                for (std::size_t l = j + 1; l < f.size(); ++l)
                    out.push_back({f[0], f[j], f[l]});
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    vector<int> SimplicialComplex::component_labels(int * count) const
    {
        UnionFind uf(vertex_count_);
        for (auto & f : faces_)
            for (Vertex v : f)
                uf.unite(f[0], v);
        vector<int> root_label(vertex_count_, -1), out(vertex_count_, -1);
        int next = 0;
        for (Vertex v = 0; v < vertex_count_; ++v) {
            if (! present_[v])
                continue;
            int r = uf.find(v);
            if (root_label[r] == -1)
                root_label[r] = next++;
            out[v] = root_label[r];
        }
        if (count)
            *count = next;
        return out;
    }

    bool SimplicialComplex::connected() const
    {
        int k = 0;
        component_labels(&k);
        return k == 1;
    }

    vector<SimplicialComplex> SimplicialComplex::components() const
    {
        int k = 0;
        auto label = component_labels(&k);
        vector<vector<vector<Vertex>>> parts(k);
        for (auto & f : faces_)
            parts[label[f[0]]].push_back(f);
        vector<SimplicialComplex> out;
        for (auto & p : parts)
            out.emplace_back(vertex_count_, std::move(p));
        return out;
    }

    SimplicialComplex build_ncomplex(const Graph & g)
    {
        vector<vector<Vertex>> faces;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) > 0)
                faces.emplace_back(g.neighbours(v).begin(), g.neighbours(v).end());
        return SimplicialComplex(g.order(), std::move(faces));
    }

    string format_complex(const SimplicialComplex & k)
    {
        std::ostringstream out;
        for (auto & f : k.maximal_faces()) {
            for (std::size_t i = 0; i < f.size(); ++i)
                out << (i ? " " : "") << f[i];
            out << '\n';
        }
        return out.str();
    }

    AbelianGroup h1_homology(const SimplicialComplex & k, std::int64_t entry_cap)
    {
        if (! k.connected())
            throw RefusalError("complex is disconnected; compute H1 per component");
        auto verts = k.vertices();
        auto edges = k.edges();
        auto tris = k.triangles();
        const std::int64_t e = edges.size(), t = tris.size(), v = verts.size();
        if (v * e > entry_cap || e * t > entry_cap)
            throw RefusalError("boundary matrices too large for dense Smith normal form (" + std::to_string(e) + " edges, " +
                std::to_string(t) + " triangles); abelianise the simplified edge-path presentation instead");

        vector<int> vid(k.vertex_count(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            vid[verts[i]] = static_cast<int>(i);
        std::map<pair<Vertex, Vertex>, int> eid;
        for (std::size_t i = 0; i < edges.size(); ++i)
            eid[edges[i]] = static_cast<int>(i);

        IntMatrix d1(static_cast<int>(v), static_cast<int>(e));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            d1.at(vid[edges[i].first], i) -= 1;
            d1.at(vid[edges[i].second], i) += 1;
        }
        IntMatrix d2(static_cast<int>(e), static_cast<int>(t));
        for (std::size_t i = 0; i < tris.size(); ++i) {
            auto [a, b, c] = tris[i];
            d2.at(eid[{a, b}], i) += 1;
            d2.at(eid[{b, c}], i) += 1;
            d2.at(eid[{a, c}], i) -= 1;
        }
        auto s1 = smith_normal_form(d1);
        auto s2 = smith_normal_form(d2);
        AbelianGroup h;
        h.free_rank = static_cast<int>(e) - s1.rank - s2.rank;
        for (auto & d : s2.invariant_factors)
            if (d > 1)
                h.torsion.push_back(d);
        return h;
    }

    EdgePathPresentation edge_path_presentation(const SimplicialComplex & k, Vertex v0, RelatorSet rel)
    {
        if (! k.connected())
            throw RefusalError("complex is disconnected");
        if (! k.present(v0))
            throw InputError("basepoint " + std::to_string(v0) + " is not a vertex of the complex");
        auto edges = k.edges();
        vector<vector<pair<Vertex, int>>> adj(k.vertex_count());
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            adj[edges[i].first].emplace_back(edges[i].second, i);
            adj[edges[i].second].emplace_back(edges[i].first, i);
        }
        vector<char> tree(edges.size(), 0), seen(k.vertex_count(), 0);
        std::deque<Vertex> q{v0};
        seen[v0] = 1;
        while (! q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (auto [y, i] : adj[x])
                if (! seen[y]) {
                    seen[y] = 1;
                    tree[i] = 1;
                    q.push_back(y);
                }
        }

        EdgePathPresentation out;
        out.basepoint = v0;
        vector<int> gen(edges.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (! tree[i]) {
                out.generator_edges.push_back(edges[i]);
                gen[i] = static_cast<int>(out.generator_edges.size());
            }
        out.presentation.generators = static_cast<int>(out.generator_edges.size());

        auto index_of = [&](Vertex a, Vertex b) {
            auto it = std::lower_bound(edges.begin(), edges.end(), pair<Vertex, Vertex>{a, b});
            return static_cast<int>(it - edges.begin());
        };
        auto letter = [&](Vertex x, Vertex y, Word & w) {
            int g = x < y ? gen[index_of(x, y)] : gen[index_of(y, x)];
            if (g)
                w.push_back(x < y ? g : -g);
        };
        auto tris = rel == RelatorSet::all_triangles ? k.triangles() : k.fan_triangles();
        for (auto [a, b, c] : tris) {
            Word w;
            letter(a, b, w);
            letter(b, c, w);
            letter(c, a, w);
            out.presentation.relators.push_back(std::move(w));
        }
        return out;
    }

    bool EdgePath::is_valid_in(const SimplicialComplex & k) const
    {
        if (vertices.empty())
            return false;
        for (Vertex v : vertices)
            if (! k.present(v))
                return false;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (! k.is_face({vertices[i], vertices[i + 1]}))
                return false;
        return true;
    }

    EdgePath walk_to_edgepath(const Graph & g, const Walk & p)
    {
        if (! p.is_walk_in(g))
            throw InputError("not a walk of the graph");
        if (! p.closed() || p.length() % 2)
            throw InputError("walk must be closed and of even length");
        EdgePath q;
        for (int i = 0; i <= p.length(); i += 2)
            q.vertices.push_back(p.vertices[i]);
        return q;
    }

    Walk edgepath_to_walk(const EdgePath & q, const Graph & g)
    {
        if (q.vertices.empty())
            throw InputError("empty edge path");
        Walk w;
        w.vertices.push_back(q.vertices[0]);
        for (std::size_t i = 0; i + 1 < q.vertices.size(); ++i) {
            Vertex a = q.vertices[i], b = q.vertices[i + 1];
            if (! g.contains(a) || ! g.contains(b))
                throw InputError("edge path vertex out of range");
            {
                auto na = g.neighbours(a), nb = g.neighbours(b);
                vector<Vertex> common;
                std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
                if (common.empty())
                    throw InputError("edge path step " + std::to_string(i) + ": " + std::to_string(a) + " and " + std::to_string(b) +
                        " have no common neighbour");
                w.vertices.push_back(common.front());
            }
            w.vertices.push_back(b);
        }
        return w;
    }

    string format_edgepath_move(const EdgePathMove & m)
    {
        switch (m.kind) {
            case EdgePathMove::Kind::ins1: return "ins1 " + std::to_string(m.index);
            case EdgePathMove::Kind::del1: return "del1 " + std::to_string(m.index);
            case EdgePathMove::Kind::ins2: return "ins2 " + std::to_string(m.index) + " " + std::to_string(m.vertex);
            case EdgePathMove::Kind::del2: return "del2 " + std::to_string(m.index);
        }
        return {};
    }

    EdgePath apply_edgepath_move(const SimplicialComplex & k, const EdgePath & q, const EdgePathMove & m)
    {
        const auto & v = q.vertices;
        const int len = static_cast<int>(v.size()) - 1;
        const int i = m.index;
        auto fail = [&](const string & why) { throw InputError(format_edgepath_move(m) + ": " + why); };
        EdgePath out = q;
        switch (m.kind) {
            case EdgePathMove::Kind::ins1:
                if (i < 0 || i > len)
                    fail("needs 0 <= i <= k");
                out.vertices.insert(out.vertices.begin() + i, v[i]);
                break;
            case EdgePathMove::Kind::del1:
                if (i < 0 || i >= len || v[i] != v[i + 1])
                    fail("needs q[i] == q[i+1]");
                out.vertices.erase(out.vertices.begin() + i + 1);
                break;
            case EdgePathMove::Kind::ins2:
                if (i < 0 || i >= len)
                    fail("needs 0 <= i < k");
                if (! k.is_face({v[i], m.vertex, v[i + 1]}))
                    fail("q[i], v', q[i+1] not in one simplex");
                out.vertices.insert(out.vertices.begin() + i + 1, m.vertex);
                break;
            case EdgePathMove::Kind::del2:
                if (i < 0 || i + 2 > len)
                    fail("needs 0 <= i <= k-2");
                if (! k.is_face({v[i], v[i + 1], v[i + 2]}))
                    fail("q[i], q[i+1], q[i+2] not in one simplex");
                out.vertices.erase(out.vertices.begin() + i + 1);
                break;
        }
        return out;
    }

    vector<EdgePathMove> transport_move(const Graph & g, const Walk & p, const Move & m)
    {
        if (! p.closed() || p.length() % 2)
            throw InputError("walk must be closed and of even length");
        if (auto why = move_violation(g, p, m); ! why.empty())
            throw InputError(format_move(m) + ": " + why);
        using K = EdgePathMove::Kind;
        const int i = m.index;
        switch (m.kind) {
            case Move::Kind::ins:
                if (i % 2 == 0)
                    return {{K::ins1, i / 2, 0}};
                return {{K::ins2, (i - 1) / 2, m.vertex}};
            case Move::Kind::del:
                if (i % 2 == 1)
                    return {{K::del1, (i - 1) / 2, 0}};
                return {{K::del2, i / 2 - 1, 0}};
            case Move::Kind::sub:
                if (i % 2 == 1)
                    return {};
                return {{K::ins2, i / 2 - 1, m.vertex}, {K::del2, i / 2, 0}};
        }
        return {};
    }

    EdgePathSearch edgepaths_equivalent(const SimplicialComplex & k, const EdgePath & a, const EdgePath & b,
        int length_cap, std::int64_t state_cap)
    {
        using K = EdgePathMove::Kind;
        auto verts = k.vertices();
        auto expand = [&](const detail::Seq & s, auto && emit) {
            const int len = static_cast<int>(s.size()) - 1;
            for (int i = 0; i < len; ++i) {
                if (s[i] == s[i + 1]) {
                    detail::Seq n = s;
                    n.erase(n.begin() + i + 1);
                    emit(EdgePathMove{K::del1, i, 0}, std::move(n));
                }
                if (i + 2 <= len && k.is_face({s[i], s[i + 1], s[i + 2]})) {
                    detail::Seq n = s;
                    n.erase(n.begin() + i + 1);
                    emit(EdgePathMove{K::del2, i, 0}, std::move(n));
                }
            }
            if (len + 1 > length_cap)
                return;
            for (int i = 0; i <= len; ++i) {
                detail::Seq n = s;
                n.insert(n.begin() + i, s[i]);
                emit(EdgePathMove{K::ins1, i, 0}, std::move(n));
            }
            for (int i = 0; i < len; ++i)
                for (Vertex w : verts)
                    if (k.is_face({s[i], w, s[i + 1]})) {
                        detail::Seq n = s;
                        n.insert(n.begin() + i + 1, w);
                        emit(EdgePathMove{K::ins2, i, w}, std::move(n));
                    }
        };
        auto invert = [](const detail::Seq & before, const EdgePathMove & m, const detail::Seq &) -> EdgePathMove {
            switch (m.kind) {
                case K::ins1: return {K::del1, m.index, 0};
                case K::del1: return {K::ins1, m.index, 0};
                case K::ins2: return {K::del2, m.index, 0};
                case K::del2: return {K::ins2, m.index, before[m.index + 1]};
            }
            return m;
        };
        auto r = detail::bidirectional_search<EdgePathMove>(a.vertices, b.vertices, expand, invert, state_cap);
        EdgePathSearch out;
        out.states = r.states;
        if (r.found) {
            EdgePath cur = a;
            for (auto & m : r.moves)
                cur = apply_edgepath_move(k, cur, m);
            if (cur != b)
                throw ViolationError("edge-path witness does not replay");
            out.status = EquivalenceStatus::equivalent;
            out.moves = std::move(r.moves);
        }
        return out;
    }
}
