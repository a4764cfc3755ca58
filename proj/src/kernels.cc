#include <oddwalk/kernels.hh>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

using std::optional;
using std::span;
using std::vector;

namespace oddwalk::kernels
{
    namespace
    {
        inline double dot(const double * a, const double * b, int dim)
        {
            double s = 0.0;
            for (int k = 0; k < dim; ++k)
                s += a[k] * b[k];
            return s;
        }

        inline double geodesic_from_dot(double d)
        {
            return std::acos(std::clamp(d, -1.0, 1.0));
        }

        void adjacency_row(span<const double> points, int dim, double threshold, int i, vector<Vertex> & row)
        {
            const int n = static_cast<int>(points.size()) / dim;
            const double * pi = points.data() + static_cast<std::size_t>(i) * dim;
            for (int j = 0; j < n; ++j)
                if (j != i && dot(pi, points.data() + static_cast<std::size_t>(j) * dim, dim) < threshold)
                    row.push_back(j);
        }

        int nearest_one(const double * q, span<const double> sites, int dim)
        {
            const int m = static_cast<int>(sites.size()) / dim;
            int best = -1;
            double best_dot = -std::numeric_limits<double>::infinity();
            for (int j = 0; j < m; ++j) {
                double d = dot(q, sites.data() + static_cast<std::size_t>(j) * dim, dim);
                if (d > best_dot) {
                    best_dot = d;
                    best = j;
                }
            }
            return best;
        }

        // Shortest (s,0) -> (s,1) distance in the double cover, giving up at
        // depth >= bound. Returns -1 if not reached.
        // Shortest odd closed walk seen from s: an edge inside BFS level d
        // closes one of length 2d + 1. Levels with 2d + 1 >= bound are skipped.
        int level_bfs(const Graph & g, Vertex s, int bound, vector<int> & dist, vector<Vertex> & queue)
        {
            queue.clear();
            queue.push_back(s);
            dist[s] = 0;
            int found = -1;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex x = queue[head];
                int d = dist[x];
                if (2 * d + 1 >= bound || (found != -1 && 2 * d + 1 >= found))
                    break;
                for (Vertex y : g.neighbours(x)) {
                    if (dist[y] == -1) {
                        dist[y] = d + 1;
                        queue.push_back(y);
                    }
                    else if (dist[y] == d) {
                        found = 2 * d + 1;
                        break;
                    }
                }
            }
            for (Vertex v : queue)
                dist[v] = -1;
            return found;
        }
    }

    vector<vector<Vertex>> dot_below_adjacency(span<const double> points, int dim, double threshold)
    {
        const int n = static_cast<int>(points.size()) / dim;
        vector<vector<Vertex>> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
        for (int i = 0; i < n; ++i)
            adjacency_row(points, dim, threshold, i, rows[i]);
        return rows;
    }

    vector<vector<Vertex>> dot_below_adjacency_serial(span<const double> points, int dim, double threshold)
    {
        const int n = static_cast<int>(points.size()) / dim;
        vector<vector<Vertex>> rows(n);
        for (int i = 0; i < n; ++i)
            adjacency_row(points, dim, threshold, i, rows[i]);
        return rows;
    }

    vector<int> nearest_sites(span<const double> queries, span<const double> sites, int dim)
    {
        const int n = static_cast<int>(queries.size()) / dim;
        vector<int> out(n);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i)
            out[i] = nearest_one(queries.data() + static_cast<std::size_t>(i) * dim, sites, dim);
        return out;
    }

    vector<int> nearest_sites_serial(span<const double> queries, span<const double> sites, int dim)
    {
        const int n = static_cast<int>(queries.size()) / dim;
        vector<int> out(n);
        for (int i = 0; i < n; ++i)
            out[i] = nearest_one(queries.data() + static_cast<std::size_t>(i) * dim, sites, dim);
        return out;
    }

    double max_nearest_distance(span<const double> queries, span<const double> sites, int dim)
    {
        const int n = static_cast<int>(queries.size()) / dim;
        double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
        for (int i = 0; i < n; ++i) {
            const double * q = queries.data() + static_cast<std::size_t>(i) * dim;
            int j = nearest_one(q, sites, dim);
            worst = std::max(worst, geodesic_from_dot(dot(q, sites.data() + static_cast<std::size_t>(j) * dim, dim)));
        }
        return worst;
    }

    double max_nearest_distance_serial(span<const double> queries, span<const double> sites, int dim)
    {
        const int n = static_cast<int>(queries.size()) / dim;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const double * q = queries.data() + static_cast<std::size_t>(i) * dim;
            int j = nearest_one(q, sites, dim);
            worst = std::max(worst, geodesic_from_dot(dot(q, sites.data() + static_cast<std::size_t>(j) * dim, dim)));
        }
        return worst;
    }

    optional<int> odd_girth(const Graph & g)
    {
        const int n = g.order();
        std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel
        {
            vector<int> dist(n, -1);
            vector<Vertex> queue;
#pragma omp for schedule(dynamic, 8)
            for (Vertex s = 0; s < n; ++s) {
                int bound = best.load(std::memory_order_relaxed);
                int d = level_bfs(g, s, bound, dist, queue);
                if (d != -1) {
                    int cur = best.load(std::memory_order_relaxed);
                    while (d < cur && ! best.compare_exchange_weak(cur, d, std::memory_order_relaxed))
                        ;
                }
            }
        }
        int b = best.load();
        if (b == std::numeric_limits<int>::max())
            return std::nullopt;
        return b;
    }

    optional<int> odd_girth_serial(const Graph & g)
    {
        const int n = g.order();
        vector<int> dist(n, -1);
        vector<Vertex> queue;
        optional<int> best;
        for (Vertex s = 0; s < n; ++s) {
            int d = level_bfs(g, s, best ? *best : std::numeric_limits<int>::max(), dist, queue);
            if (d != -1 && (! best || d < *best))
                best = d;
        }
        return best;
    }
}
