#ifndef ODDWALK_KERNELS_HH
#define ODDWALK_KERNELS_HH 1

#include <oddwalk/graph.hh>

#include <optional>
#include <span>
#include <vector>

// The data-parallel inner loops. Every kernel has an OpenMP version and a
// plain serial version; the serial ones are the reference the tests compare
// against and the baseline the benchmark measures.
namespace oddwalk::kernels
{
    // Points are stored row-major, `dim` coordinates per point.

    // Row i lists every j != i with <p_i, p_j> < threshold, ascending.
    std::vector<std::vector<Vertex>> dot_below_adjacency(std::span<const double> points, int dim, double threshold);
    std::vector<std::vector<Vertex>> dot_below_adjacency_serial(std::span<const double> points, int dim, double threshold);

    // For each query, the index of the site with the largest inner product
    // (nearest in geodesic distance); ties go to the lowest index.
    std::vector<int> nearest_sites(std::span<const double> queries, std::span<const double> sites, int dim);
    std::vector<int> nearest_sites_serial(std::span<const double> queries, std::span<const double> sites, int dim);

    // max over queries of min over sites of the geodesic distance.
    double max_nearest_distance(std::span<const double> queries, std::span<const double> sites, int dim);
    double max_nearest_distance_serial(std::span<const double> queries, std::span<const double> sites, int dim);

    // One BFS per source, looking for an edge inside a level. The parallel
    // version splits sources across threads; both stop each BFS once its
    // levels cannot beat the best length found so far.
    std::optional<int> odd_girth(const Graph & g);
    std::optional<int> odd_girth_serial(const Graph & g);
}

#endif
