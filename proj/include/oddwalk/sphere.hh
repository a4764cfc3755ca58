#ifndef ODDWALK_SPHERE_HH
#define ODDWALK_SPHERE_HH 1

#include <oddwalk/closure.hh>
#include <oddwalk/graph.hh>
#include <oddwalk/walk.hh>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddwalk
{
    inline constexpr double kNormTolerance = 1e-12;

    // Normalised surface measure of a radius-eps cap on S^n.
    double cap_measure(int n, double eps);

    /**
     * Antipodally closed point set on S^n. Point 2k and 2k+1 are a point and
     * its exactly negated copy, so antipode(i) = i ^ 1.
     */
    struct SphereSample
    {
        int n = 0;                      // sphere dimension; points have n+1 coordinates
        std::uint64_t seed = 0;
        std::vector<double> coords;     // row-major

        int dim() const { return n + 1; }
        int size() const { return dim() ? static_cast<int>(coords.size()) / dim() : 0; }
        std::span<const double> point(int i) const { return {coords.data() + static_cast<std::size_t>(i) * dim(), static_cast<std::size_t>(dim())}; }
        static int antipode(int i) { return i ^ 1; }

        // Normalises each given point and appends its antipode.
        static SphereSample from_points(int n, const std::vector<std::vector<double>> & points);
    };

    double geodesic(std::span<const double> a, std::span<const double> b);

    struct ApproxGraph
    {
        SphereSample sample;
        double epsilon = 0.0;
        Graph graph;        // i ~ j iff <p_i, p_j> < -cos(epsilon)
    };

    ApproxGraph build_approximation(SphereSample s, double epsilon);

    // N uniform points from normalised Gaussian vectors, plus antipodes.
    ApproxGraph sample_approximation(int n, double epsilon, int N, std::uint64_t seed);

    // Max over uniform probes of the distance to the nearest sample point.
    double covering_radius_estimate(const SphereSample & s, int probes, std::uint64_t seed);

    // Each fine vertex to its nearest coarse vertex; ViolationError on a
    // non-edge image.
    GraphHom nearest_vertex_hom(const ApproxGraph & fine, const ApproxGraph & coarse);

    // v0, -v1, v2, -v3, ...; InputError naming the first index i with
    // d(p_i, p_{i+1}) >= epsilon.
    Walk bracket_walk(const ApproxGraph & s, const std::vector<Vertex> & ids);

    struct NoninjectiveCycle
    {
        Walk cycle;                     // length 2r+3, through v and v'
        Vertex v = -1, v_prime = -1;    // phi(v) == phi(v')
        double theta = 0.0;             // d(v, v')
        double delta_hat = 0.0;
        double delta1 = 0.0, delta2 = 0.0;
        std::string route;              // "proof_regime" or "relaxed"
        std::int64_t pairs_tried = 0;
    };

    struct NoninjectiveOptions
    {
        int probes = 20000;
        std::uint64_t probe_seed = 1;
        double delta_hat = -1.0;        // < 0: estimate with the probes
        std::int64_t pair_cap = 200000;
    };

    // InputError if eps != pi/(2r+1); HypothesisError with collision statistics
    // when no colliding pair gives a valid cycle.
    NoninjectiveCycle find_noninjective_c2r3(const ApproxGraph & g, const GraphHom & phi, int r, const NoninjectiveOptions & opt = {});

    double min_degree_ratio(const Graph & g);

    // Header "n eps N seed", then one point per line.
    std::string format_sample(const ApproxGraph & g);
    // "vertex point" per line.
    std::string format_xref(const ApproxGraph & g);

    // pi/(2r+1) written as "pi/(2r+1)", "pi/5", or a plain decimal.
    double parse_epsilon(std::string_view text, int r = 0);
}

#endif
