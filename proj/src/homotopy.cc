#include "bidirectional.hh"

#include <oddwalk/closure.hh>
#include <oddwalk/errors.hh>
#include <oddwalk/homotopy.hh>
#include <oddwalk/ncomplex.hh>

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <unordered_map>

using std::string;
using std::vector;

namespace oddwalk
{
    string to_string(HomotopyStatus s)
    {
        switch (s) {
            case HomotopyStatus::homotopic: return "HOMOTOPIC";
            case HomotopyStatus::not_homotopic: return "NOT_HOMOTOPIC";
            case HomotopyStatus::unknown: return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    string to_string(SimpleConnectivity s)
    {
        switch (s) {
            case SimpleConnectivity::simply_connected: return "SIMPLY_CONNECTED";
            case SimpleConnectivity::not_simply_connected: return "NOT";
            case SimpleConnectivity::unknown: return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    namespace
    {
        using detail::Seq;

        // Every applicable move, in a fixed order: del, sub, then ins.
        template <typename Emit>
        void expand_moves(const Graph & g, const Seq & s, int length_cap, Emit && emit)
        {
            const int k = static_cast<int>(s.size()) - 1;
            for (int i = 1; i < k; ++i)
                if (s[i - 1] == s[i + 1]) {
                    Seq n = s;
                    n.erase(n.begin() + i, n.begin() + i + 2);
                    emit(Move::del(i), std::move(n));
                }
            for (int i = 1; i < k; ++i) {
                auto a = g.neighbours(s[i - 1]), b = g.neighbours(s[i + 1]);
                auto ia = a.begin(), ib = b.begin();
                while (ia != a.end() && ib != b.end()) {
                    if (*ia < *ib)
                        ++ia;
                    else if (*ib < *ia)
                        ++ib;
                    else {
                        if (*ia != s[i]) {
                            Seq n = s;
                            n[i] = *ia;
                            emit(Move::sub(i, *ia), std::move(n));
                        }
                        ++ia;
                        ++ib;
                    }
                }
            }
            if (k + 2 > length_cap)
                return;
            for (int i = 0; i <= k; ++i)
                for (Vertex w : g.neighbours(s[i])) {
                    Seq n = s;
                    n.insert(n.begin() + i + 1, {w, s[i]});
                    emit(Move::ins(i, w), std::move(n));
                }
        }

        Move invert_move(const Seq & before, const Move & m, const Seq &)
        {
            switch (m.kind) {
                case Move::Kind::sub: return Move::sub(m.index, before[m.index]);
                case Move::Kind::ins: return Move::del(m.index + 1);
                case Move::Kind::del: return Move::ins(m.index - 1, before[m.index]);
            }
            return m;
        }

        // Parities of |E(P) cap K| and |E(P) cap K_u| over closure classes K.
        std::map<std::pair<int, int>, int> invariant_profile(const Graph & g, const ClosurePartition & part, const Walk & p)
        {
            std::map<std::pair<int, int>, int> prof;
            for (int i = 0; i < p.length(); ++i) {
                int e = g.edge_index_of(p.vertices[i], p.vertices[i + 1]);
                int c = part.class_of[e];
                prof[{c, -1}] ^= 1;
                prof[{c, p.vertices[i]}] ^= 1;
                prof[{c, p.vertices[i + 1]}] ^= 1;
            }
            return prof;
        }

        struct Contraction
        {
            bool found = false;
            vector<Move> moves;
            std::int64_t states = 0;
        };

        // Best-first contraction of a closed walk to its basepoint, ordered by
        // (length, total distance to the basepoint).
        Contraction contract_to_basepoint(const Graph & g, const Seq & start, int length_cap, std::int64_t state_cap)
        {
            Contraction out;
            const Vertex base = start.front();
            auto dist = bfs_distances(g, base);
            auto potential = [&](const Seq & s) {
                long long t = 0;
                for (Vertex v : s)
                    t += dist[v];
                return t;
            };

            vector<Seq> seqs{start};
            vector<int> parent{-1};
            vector<Move> via{Move{}};
            std::unordered_map<Seq, int, detail::SeqHash> index{{start, 0}};
            using Key = std::tuple<int, long long, int>;
            std::priority_queue<Key, vector<Key>, std::greater<>> open;
            open.emplace(static_cast<int>(start.size()), potential(start), 0);
            int goal = -1;
            while (! open.empty() && goal == -1) {
                auto [len, pot, id] = open.top();
                open.pop();
                if (len == 1) {
                    goal = id;
                    break;
                }
                Seq cur = seqs[id];
                bool capped = false;
                expand_moves(g, cur, length_cap, [&](const Move & m, Seq && n) {
                    if (capped || index.count(n))
                        return;
                    // insertions only when they pull towards the basepoint
                    if (m.kind == Move::Kind::ins && dist[m.vertex] >= dist[cur[m.index]])
                        return;
                    if (static_cast<std::int64_t>(seqs.size()) >= state_cap) {
                        capped = true;
                        return;
                    }
                    int nid = static_cast<int>(seqs.size());
                    index.emplace(n, nid);
                    open.emplace(static_cast<int>(n.size()), potential(n), nid);
                    seqs.push_back(std::move(n));
                    parent.push_back(id);
                    via.push_back(m);
                });
                if (capped)
                    break;
            }
            out.states = static_cast<std::int64_t>(seqs.size());
            if (goal == -1)
                return out;
            for (int x = goal; parent[x] != -1; x = parent[x])
                out.moves.push_back(via[x]);
            std::reverse(out.moves.begin(), out.moves.end());
            out.found = true;
            return out;
        }
    }

    HomotopyVerdict are_homotopic(const Graph & g, const Walk & p, const Walk & q, const HomotopyCaps & caps)
    {
        if (! p.is_walk_in(g))
            throw InputError("first walk is not a walk of the graph");
        if (! q.is_walk_in(g))
            throw InputError("second walk is not a walk of the graph");

        HomotopyVerdict out;
        if (p.front() != q.front() || p.back() != q.back()) {
            out.status = HomotopyStatus::not_homotopic;
            out.separation = "endpoints";
            return out;
        }
        if (p.parity() != q.parity()) {
            out.status = HomotopyStatus::not_homotopic;
            out.separation = "parity";
            return out;
        }

        auto id = GraphHom::identity(g);
        auto part = phi_partition(id);
        auto pp = invariant_profile(g, part, p), pq = invariant_profile(g, part, q);
        for (auto & [key, bit] : pq)
            pp[key] ^= bit;
        for (auto & [key, bit] : pp)
            if (bit) {
                auto [cls, u] = key;
                auto spec = InvariantSpec::of_class(part, cls, u == -1 ? std::nullopt : std::optional<Vertex>(u));
                int a = eval_invariant(spec, EdgeMultiset::of_walk(g, p), id, part);
                int b = eval_invariant(spec, EdgeMultiset::of_walk(g, q), id, part);
                if (a == b)
                    throw ViolationError("invariant profile disagrees with direct evaluation");
                out.status = HomotopyStatus::not_homotopic;
                out.separation = u == -1 ? "I_A, A = closure class " + std::to_string(cls)
                                         : "I_A,u, A = closure class " + std::to_string(cls) + ", u = " + std::to_string(u);
                return out;
            }

        if (p == q) {
            out.status = HomotopyStatus::homotopic;
            out.method = "identical";
            return out;
        }

        const int cap = caps.length_cap >= 0 ? caps.length_cap : std::max(p.length(), q.length()) + 6;
        auto r = detail::bidirectional_search<Move>(
            p.vertices, q.vertices,
            [&](const Seq & s, auto && emit) { expand_moves(g, s, cap, emit); },
            invert_move, caps.state_cap);
        out.states = r.states;
        if (r.found) {
            out.moves = std::move(r.moves);
            out.method = "bfs";
        }
        else if (caps.contraction_state_cap > 0) {
            // p ~ p q^-1 q by insertions; then contract the closed prefix p q^-1
            Walk loop = p.concat(q.reversed());
            auto c = contract_to_basepoint(g, loop.vertices, loop.length() + caps.contraction_slack, caps.contraction_state_cap);
            out.states += c.states;
            if (c.found) {
                const int k = p.length(), m = q.length();
                for (int j = 0; j < m; ++j)
                    out.moves.push_back(Move::ins(k + j, q.vertices[m - 1 - j]));
                out.moves.insert(out.moves.end(), c.moves.begin(), c.moves.end());
                out.method = "contraction";
            }
        }
        if (out.method.empty())
            return out;

        Walk replayed = replay_moves(g, p, out.moves);
        if (replayed != q)
            throw ViolationError("homotopy witness does not replay to the target walk");
        out.status = HomotopyStatus::homotopic;
        return out;
    }

    SimpleConnectivityReport check_simply_connected(const Graph & g, std::int64_t budget)
    {
        if (g.order() == 0 || ! is_connected(g))
            throw RefusalError("graph is disconnected");
        if (is_bipartite(g).bipartite)
            throw RefusalError("graph is bipartite");
        auto k = build_ncomplex(g);
        auto verts = k.vertices();
        auto pres = edge_path_presentation(k, verts.front(), RelatorSet::fan_triangles);
        auto t = tietze_simplify(pres.presentation, budget);

        SimpleConnectivityReport out;
        out.h1 = t.abelian;
        out.group_status = t.status;
        out.generators_before = pres.presentation.generators;
        out.relators_before = static_cast<int>(pres.presentation.relators.size());
        out.generators_after = t.simplified.generators;
        out.relators_after = static_cast<int>(t.simplified.relators.size());
        out.steps = t.steps;
        if (! t.abelian.trivial())
            out.status = SimpleConnectivity::not_simply_connected;
        else if (t.status == GroupStatus::trivial)
            out.status = SimpleConnectivity::simply_connected;
        return out;
    }
}
