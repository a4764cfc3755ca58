#include <oddwalk/homsearch.hh>
#include <oddwalk/errors.hh>
#include <oddwalk/rng.hh>

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <tuple>

using std::int64_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace oddwalk
{
    string to_string(HomSearchStatus s)
    {
        switch (s) {
            case HomSearchStatus::found: return "FOUND";
            case HomSearchStatus::none: return "NONE";
            case HomSearchStatus::timeout: return "TIMEOUT";
        }
        return "?";
    }

    namespace
    {
        using Bits = vector<uint64_t>;

        int popcount(const Bits & b)
        {
            int c = 0;
            for (auto w : b)
                c += std::popcount(w);
            return c;
        }

        bool test(const Bits & b, int i)
        {
            return (b[i >> 6] >> (i & 63)) & 1;
        }

        class HomSearcher
        {
            public:
                HomSearcher(const Graph & g, const Graph & h, int64_t budget) :
                    g_(g), h_(h), budget_(budget), words_((h.order() + 63) / 64),
                    dom_(g.order(), Bits(words_, 0)), adj_(h.order(), Bits(words_, 0)), assigned_(g.order(), -1)
                {
                    for (Vertex x = 0; x < h.order(); ++x)
                        for (Vertex y : h.neighbours(x))
                            adj_[x][y >> 6] |= uint64_t{1} << (y & 63);
                    values_.resize(h.order());
                    std::iota(values_.begin(), values_.end(), 0);
                    std::stable_sort(values_.begin(), values_.end(),
                        [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
                    for (Vertex v = 0; v < g.order(); ++v)
                        for (Vertex x = 0; x < h.order(); ++x)
                            if (g.degree(v) == 0 || h.degree(x) > 0)
                                dom_[v][x >> 6] |= uint64_t{1} << (x & 63);
                }

                HomSearchStatus run()
                {
                    for (auto & d : dom_)
                        if (popcount(d) == 0)
                            return HomSearchStatus::none;
                    return search();
                }

                const vector<Vertex> & assignment() const { return assigned_; }
                int64_t nodes() const { return nodes_; }

            private:
                HomSearchStatus search()
                {
                    Vertex var = -1;
                    int best = 0;
                    for (Vertex v = 0; v < g_.order(); ++v) {
                        if (assigned_[v] != -1)
                            continue;
                        int size = popcount(dom_[v]);
                        if (var == -1 || size < best || (size == best && g_.degree(v) > g_.degree(var))) {
                            var = v;
                            best = size;
                        }
                    }
                    if (var == -1)
                        return HomSearchStatus::found;

                    for (Vertex x : values_) {
                        if (! test(dom_[var], x))
                            continue;
                        if (++nodes_ > budget_)
                            return HomSearchStatus::timeout;
                        assigned_[var] = x;
                        vector<std::pair<Vertex, Bits>> trail;
                        bool wipeout = false;
                        for (Vertex w : g_.neighbours(var)) {
                            if (assigned_[w] != -1)
                                continue;
                            Bits next = dom_[w];
                            bool changed = false;
                            for (int k = 0; k < words_; ++k) {
                                uint64_t m = next[k] & adj_[x][k];
                                changed = changed || m != next[k];
                                next[k] = m;
                            }
                            if (! changed)
                                continue;
                            trail.emplace_back(w, std::move(dom_[w]));
                            dom_[w] = std::move(next);
                            if (popcount(dom_[w]) == 0) {
                                wipeout = true;
                                break;
                            }
                        }
                        auto result = wipeout ? HomSearchStatus::none : search();
                        if (result == HomSearchStatus::found)
                            return result;
                        for (auto it = trail.rbegin(); it != trail.rend(); ++it)
                            dom_[it->first] = std::move(it->second);
                        assigned_[var] = -1;
                        if (result == HomSearchStatus::timeout)
                            return result;
                    }
                    return HomSearchStatus::none;
                }

                const Graph & g_;
                const Graph & h_;
                int64_t budget_;
                int words_;
                vector<Bits> dom_;
                vector<Bits> adj_;
                vector<Vertex> assigned_;
                vector<Vertex> values_;
                int64_t nodes_ = 0;
        };
    }

    HomSearchResult hom_exists(const Graph & g, const Graph & h, int64_t node_budget)
    {
        auto start = std::chrono::steady_clock::now();
        HomSearchResult out;
        if (g.order() > 0 && h.order() == 0)
            out.status = HomSearchStatus::none;
        else {
            HomSearcher s(g, h, node_budget);
            out.status = s.run();
            out.nodes = s.nodes();
            if (out.status == HomSearchStatus::found) {
                auto phi = GraphHom{g, h, s.assignment()};
                if (! verify_hom(phi))
                    throw ViolationError("search returned a map that is not a homomorphism");
                out.hom = std::move(phi);
            }
        }
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    }

    bool verify_hom(const GraphHom & phi)
    {
        if (static_cast<int>(phi.map.size()) != phi.source.order())
            return false;
        for (Vertex x : phi.map)
            if (! phi.target.contains(x))
                return false;
        return phi.is_valid();
    }

    namespace
    {
        struct FoldState
        {
            vector<int> cls;            // original -> quotient id
            vector<Vertex> rep;         // quotient id -> smallest original
            Graph q;
            bool free = false;
            vector<FoldStep> steps;
        };

        FoldState merged(const Graph & g, const FoldState & s, Vertex a, Vertex b)
        {
            FoldState t;
            t.cls.resize(s.cls.size());
            auto relabel = [&](int c) {
                if (c == b)
                    c = a;
                return c > b ? c - 1 : c;
            };
            for (std::size_t v = 0; v < s.cls.size(); ++v)
                t.cls[v] = relabel(s.cls[v]);
            t.rep = s.rep;
            t.rep[a] = std::min(s.rep[a], s.rep[b]);
            t.rep.erase(t.rep.begin() + b);
            vector<EdgeId> edges;
            edges.reserve(g.size());
            for (auto & e : s.q.edges())
                edges.emplace_back(relabel(e.u), relabel(e.v));
            t.q = Graph::from_edges(s.q.order() - 1, edges);
            t.steps = s.steps;
            return t;
        }

        // Fisher-Yates with the seeded stream, identity for seed 0.
        vector<Vertex> vertex_order(int n, uint64_t seed, int level)
        {
            vector<Vertex> out(n);
            std::iota(out.begin(), out.end(), 0);
            if (seed == 0)
                return out;
            SplitMix64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(level));
            for (int i = n - 1; i > 0; --i)
                std::swap(out[i], out[rng.below(i + 1)]);
            return out;
        }
    }

    FoldTrace fold_search(const Graph & g, const std::set<int> & forbidden, const FoldOptions & opt)
    {
        for (int k : forbidden)
            if (k < 3)
                throw InputError("forbidden cycle lengths must be at least 3");
        if (opt.beam < 1)
            throw InputError("beam must be positive");

        FoldState start;
        start.cls.resize(g.order());
        std::iota(start.cls.begin(), start.cls.end(), 0);
        start.rep = start.cls;
        start.q = g;
        start.free = true;
        for (int k : forbidden)
            if (has_cycle_of_length(g, k, opt.check_budget).status != SearchStatus::no)
                start.free = false;

        FoldTrace out;
        out.input_free = start.free;
        vector<FoldState> beam{start};
        std::optional<FoldState> best;
        if (start.free)
            best = start;

        for (int level = 0; ; ++level) {
            if (best && opt.stop_at > 0 && best->q.order() <= opt.stop_at)
                break;
            vector<FoldState> pool;
            for (auto & s : beam) {
                const Graph & q = s.q;
                int taken = 0;
                vector<int> common(q.order(), 0);
                for (Vertex a : vertex_order(q.order(), opt.seed, level)) {
                    if (taken >= opt.beam || out.budget_exhausted)
                        break;
                    // partners at distance two first, most common neighbours first
                    std::fill(common.begin(), common.end(), 0);
                    for (Vertex x : q.neighbours(a))
                        for (Vertex y : q.neighbours(x))
                            ++common[y];
                    vector<std::tuple<int, Vertex>> partners;
                    for (Vertex b = 0; b < q.order(); ++b)
                        if (b != a && ! q.adjacent(a, b))
                            partners.emplace_back(-common[b], b);
                    std::sort(partners.begin(), partners.end());
                    for (auto [negc, b] : partners) {
                        if (taken >= opt.beam)
                            break;
                        if (out.attempts >= opt.budget) {
                            out.budget_exhausted = true;
                            break;
                        }
                        ++out.attempts;
                        Vertex lo = std::min(a, b), hi = std::max(a, b);
                        FoldState child = merged(g, s, lo, hi);
                        FoldStep step{s.rep[lo], s.rep[hi], child.q.order(), {}};
                        bool ok = true;
                        for (int k : forbidden) {
                            FoldCheck c;
                            c.length = k;
                            c.incremental = s.free;
                            auto r = s.free ? has_cycle_through_vertex(child.q, k, lo, opt.check_budget) :
                                has_cycle_of_length(child.q, k, opt.check_budget);
                            c.status = r.status;
                            c.expansions = r.expansions;
                            step.checks.push_back(c);
                            if (r.status != SearchStatus::no) {
                                ok = false;
                                break;
                            }
                        }
                        if (! ok) {
                            ++out.rejected;
                            continue;
                        }
                        child.free = true;
                        child.steps.push_back(std::move(step));
                        pool.push_back(std::move(child));
                        ++taken;
                    }
                }
                if (out.budget_exhausted)
                    break;
            }
            if (pool.empty())
                break;
            std::sort(pool.begin(), pool.end(), [](const FoldState & x, const FoldState & y) {
                return std::make_tuple(x.q.size(), x.cls) < std::make_tuple(y.q.size(), y.cls);
            });
            pool.erase(std::unique(pool.begin(), pool.end(), [](const FoldState & x, const FoldState & y) { return x.cls == y.cls; }),
                pool.end());
            if (static_cast<int>(pool.size()) > opt.beam)
                pool.resize(opt.beam);
            beam = std::move(pool);
            best = beam.front();
            if (out.budget_exhausted)
                break;
        }

        if (! best)
            throw InputError("the graph has a forbidden cycle and no merge removes it");
        out.steps = std::move(best->steps);
        out.quotient = std::move(best->q);
        out.map = std::move(best->cls);
        if (! verify_hom(fold_hom(g, out)))
            throw ViolationError("fold quotient map is not a homomorphism");
        return out;
    }

    GraphHom fold_hom(const Graph & g, const FoldTrace & t)
    {
        return GraphHom{g, t.quotient, t.map};
    }
}
