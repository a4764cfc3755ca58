#include <oddwalk/sphere.hh>
#include <oddwalk/errors.hh>
#include <oddwalk/kernels.hh>
#include <oddwalk/rng.hh>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

using std::span;
using std::string;
using std::vector;

namespace oddwalk
{
    namespace
    {
        double dot(span<const double> a, span<const double> b)
        {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k)
                s += a[k] * b[k];
            return s;
        }

        void normalise(vector<double> & x)
        {
            double s = 0.0;
            for (double c : x)
                s += c * c;
            s = std::sqrt(s);
            if (s == 0.0)
                throw InputError("cannot normalise the zero vector");
            for (double & c : x)
                c /= s;
        }

        void push_pair(vector<double> & coords, const vector<double> & x)
        {
            coords.insert(coords.end(), x.begin(), x.end());
            for (double c : x)
                coords.push_back(-c);
        }

        vector<double> random_point(SplitMix64 & rng, int dim)
        {
            vector<double> x(dim);
            double s;
            do {
                s = 0.0;
                for (double & c : x) {
                    c = rng.gaussian();
                    s += c * c;
                }
            } while (s == 0.0);
            normalise(x);
            return x;
        }

        double sin_power_integral(int n, double upper)
        {
            if (upper <= 0.0)
                return 0.0;
            auto f = [n](double t) { return std::pow(std::sin(t), n - 1); };
            double err = 0.0;
            return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 15, 1e-13, &err);
        }
    }

    double cap_measure(int n, double eps)
    {
        constexpr double pi = std::numbers::pi;
        if (n < 1 || ! (eps >= 0.0 && eps <= pi))
            throw InputError("cap_measure: need n >= 1 and 0 <= eps <= pi");
        // total: integral of sin^{n-1} over [0, pi]
        const double total = std::sqrt(pi) * std::tgamma(n / 2.0) / std::tgamma((n + 1) / 2.0);
        if (eps <= pi / 2)
            return std::clamp(sin_power_integral(n, eps) / total, 0.0, 1.0);
        return std::clamp(1.0 - sin_power_integral(n, pi - eps) / total, 0.0, 1.0);
    }

    SphereSample SphereSample::from_points(int n, const vector<vector<double>> & points)
    {
        SphereSample s;
        s.n = n;
        for (auto x : points) {
            if (static_cast<int>(x.size()) != n + 1)
                throw InputError("point has the wrong dimension");
            normalise(x);
            push_pair(s.coords, x);
        }
        return s;
    }

    double geodesic(span<const double> a, span<const double> b)
    {
        return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    }

    ApproxGraph build_approximation(SphereSample s, double epsilon)
    {
        if (! (epsilon > 0.0 && epsilon <= std::numbers::pi))
            throw InputError("epsilon must lie in (0, pi]");
        ApproxGraph g;
        auto rows = kernels::dot_below_adjacency(s.coords, s.dim(), -std::cos(epsilon));
        vector<EdgeId> edges;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (Vertex j : rows[i])
                if (j > i)
                    edges.emplace_back(i, j);
        g.graph = Graph::from_edges(s.size(), edges);
        g.sample = std::move(s);
        g.epsilon = epsilon;
        return g;
    }

    ApproxGraph sample_approximation(int n, double epsilon, int N, std::uint64_t seed)
    {
        if (n < 1 || N < 1)
            throw InputError("need n >= 1 and N >= 1");
        SplitMix64 rng(seed);
        SphereSample s;
        s.n = n;
        s.seed = seed;
        s.coords.reserve(static_cast<std::size_t>(2) * N * (n + 1));
        for (int k = 0; k < N; ++k)
            push_pair(s.coords, random_point(rng, n + 1));
        return build_approximation(std::move(s), epsilon);
    }

    double covering_radius_estimate(const SphereSample & s, int probes, std::uint64_t seed)
    {
        if (s.size() == 0)
            throw InputError("empty sample");
        if (probes < 1)
            throw InputError("need at least one probe");
        SplitMix64 rng(seed);
        vector<double> q;
        q.reserve(static_cast<std::size_t>(probes) * s.dim());
        for (int k = 0; k < probes; ++k) {
            auto x = random_point(rng, s.dim());
            q.insert(q.end(), x.begin(), x.end());
        }
        return kernels::max_nearest_distance(q, s.coords, s.dim());
    }

    GraphHom nearest_vertex_hom(const ApproxGraph & fine, const ApproxGraph & coarse)
    {
        if (fine.sample.n != coarse.sample.n)
            throw InputError("samples live on spheres of different dimension");
        auto map = kernels::nearest_sites(fine.sample.coords, coarse.sample.coords, fine.sample.dim());
        return GraphHom::make(fine.graph, coarse.graph, vector<Vertex>(map.begin(), map.end()));
    }

    Walk bracket_walk(const ApproxGraph & s, const vector<Vertex> & ids)
    {
        if (ids.empty())
            throw InputError("empty vertex sequence");
        const double c = std::cos(s.epsilon);
        for (Vertex v : ids)
            if (! s.graph.contains(v))
                throw InputError("vertex " + std::to_string(v) + " out of range");
        vector<Vertex> w;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i + 1 < ids.size() && ! (dot(s.sample.point(ids[i]), s.sample.point(ids[i + 1])) > c))
                throw InputError("points at index " + std::to_string(i) + " and " + std::to_string(i + 1) +
                    " are not within epsilon");
            w.push_back(i % 2 == 0 ? ids[i] : SphereSample::antipode(ids[i]));
        }
        return make_walk(s.graph, std::move(w));
    }

    namespace
    {
        // The great-circle construction for one colliding pair; empty walk
        // if the snapped sequence is not a cycle through both.
        Walk circle_cycle(const ApproxGraph & g, Vertex v, Vertex vp, int r)
        {
            const int dim = g.sample.dim();
            auto pv = g.sample.point(v), pw = g.sample.point(vp);
            const double ct = std::clamp(dot(pv, pw), -1.0, 1.0);
            const double theta = std::acos(ct);
            const double st = std::sin(theta);
            if (st < 1e-9)
                return {};
            vector<double> e2(dim);
            for (int k = 0; k < dim; ++k)
                e2[k] = (ct * pv[k] - pw[k]) / st;
            auto at = [&](double t, vector<double> & out) {
                for (int k = 0; k < dim; ++k)
                    out.push_back(std::cos(t) * pv[k] + std::sin(t) * e2[k]);
            };
            vector<double> xs;
            const double pi = std::numbers::pi;
            for (int i = 0; i <= 2 * r + 1; ++i)
                at(i * (pi - theta) / (2 * r + 1), xs);
            at(pi - theta / 2, xs);
            at(pi, xs);
            auto snapped = kernels::nearest_sites(xs, g.sample.coords, dim);
            vector<Vertex> ids(snapped.begin(), snapped.end());
            const double c = std::cos(g.epsilon);
            vector<Vertex> w;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i + 1 < ids.size() && ! (dot(g.sample.point(ids[i]), g.sample.point(ids[i + 1])) > c))
                    return {};
                w.push_back(i % 2 == 0 ? ids[i] : SphereSample::antipode(ids[i]));
            }
            Walk walk(std::move(w));
            if (! walk.is_cycle_in(g.graph) || walk.length() != 2 * r + 3)
                return {};
            auto & wv = walk.vertices;
            if (std::find(wv.begin(), wv.end(), v) == wv.end() || std::find(wv.begin(), wv.end(), vp) == wv.end())
                return {};
            return walk;
        }
    }

    NoninjectiveCycle find_noninjective_c2r3(const ApproxGraph & g, const GraphHom & phi, int r, const NoninjectiveOptions & opt)
    {
        if (r < 1)
            throw InputError("r must be positive");
        if (std::abs(g.epsilon - std::numbers::pi / (2 * r + 1)) > 1e-12)
            throw InputError("epsilon must be pi/(2r+1)");
        if (phi.source.order() != g.graph.order() || ! (phi.source == g.graph))
            throw InputError("the map does not start at the sampled graph");

        NoninjectiveCycle out;
        out.delta_hat = opt.delta_hat >= 0.0 ? opt.delta_hat : covering_radius_estimate(g.sample, opt.probes, opt.probe_seed);
        out.delta1 = (4 * r + 2) * out.delta_hat;
        out.delta2 = g.epsilon - 2 * out.delta_hat;

        std::map<Vertex, vector<Vertex>> fibers;
        for (Vertex v = 0; v < g.graph.order(); ++v)
            fibers[phi.map[v]].push_back(v);

        struct Pair
        {
            double theta;
            Vertex a, b;
        };
        vector<Pair> regime, relaxed;
        std::int64_t collisions = 0;
        double closest = std::numbers::pi, farthest = 0.0;
        for (auto & [img, vs] : fibers)
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    double th = geodesic(g.sample.point(vs[i]), g.sample.point(vs[j]));
                    ++collisions;
                    closest = std::min(closest, th);
                    farthest = std::max(farthest, th);
                    if (th >= out.delta1 && th <= 2 * out.delta2)
                        regime.push_back({th, vs[i], vs[j]});
                    else if (th > 0.0 && th < 2 * g.epsilon)
                        relaxed.push_back({th, vs[i], vs[j]});
                }
        auto order = [](const Pair & x, const Pair & y) {
            return std::tie(x.theta, x.a, x.b) > std::tie(y.theta, y.a, y.b);
        };
        std::sort(regime.begin(), regime.end(), order);
        std::sort(relaxed.begin(), relaxed.end(), order);

        for (auto * list : {&regime, &relaxed})
            for (auto & p : *list) {
                if (out.pairs_tried >= opt.pair_cap)
                    break;
                ++out.pairs_tried;
                for (auto [a, b] : {std::pair{p.a, p.b}, std::pair{p.b, p.a}}) {
                    Walk w = circle_cycle(g, a, b, r);
                    if (w.vertices.empty())
                        continue;
                    out.cycle = std::move(w);
                    out.v = a;
                    out.v_prime = b;
                    out.theta = p.theta;
                    out.route = list == &regime ? "proof_regime" : "relaxed";
                    return out;
                }
            }

        std::ostringstream cert;
        cert << "colliding pairs " << collisions << ", in regime " << regime.size() << ", relaxed " << relaxed.size()
             << ", closest " << closest << ", farthest " << farthest << ", delta_hat " << out.delta_hat << ", delta1 "
             << out.delta1 << ", 2*delta2 " << 2 * out.delta2;
        throw HypothesisError("no colliding pair yields a noninjective " + std::to_string(2 * r + 3) + "-cycle", cert.str());
    }

    double min_degree_ratio(const Graph & g)
    {
        if (g.order() < 1)
            throw InputError("empty graph");
        return static_cast<double>(g.min_degree()) / g.order();
    }

    string format_sample(const ApproxGraph & g)
    {
        std::ostringstream out;
        out.precision(17);
        out << g.sample.n << " " << g.epsilon << " " << g.sample.size() / 2 << " " << g.sample.seed << "\n";
        for (int i = 0; i < g.sample.size(); ++i) {
            auto p = g.sample.point(i);
            for (std::size_t k = 0; k < p.size(); ++k)
                out << (k ? " " : "") << p[k];
            out << "\n";
        }
        return out.str();
    }

    string format_xref(const ApproxGraph & g)
    {
        string out;
        for (int i = 0; i < g.sample.size(); ++i)
            out += std::to_string(i) + " " + std::to_string(i) + "\n";
        return out;
    }

    double parse_epsilon(std::string_view text, int r)
    {
        const double pi = std::numbers::pi;
        if (text == "pi/(2r+1)") {
            if (r < 1)
                throw InputError("epsilon pi/(2r+1) needs r");
            return pi / (2 * r + 1);
        }
        if (text.starts_with("pi/")) {
            auto rest = text.substr(3);
            double d = 0.0;
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
            if (ec != std::errc{} || ptr != rest.data() + rest.size() || d <= 0.0)
                throw InputError("bad epsilon '" + string(text) + "'");
            return pi / d;
        }
        double d = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw InputError("bad epsilon '" + string(text) + "'");
        return d;
    }
}
