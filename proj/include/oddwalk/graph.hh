#ifndef ODDWALK_GRAPH_HH
#define ODDWALK_GRAPH_HH 1

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddwalk
{
    using Vertex = int;

    // Canonical undirected edge, u < v.
    struct EdgeId
    {
        Vertex u = 0, v = 0;

        EdgeId() = default;
        EdgeId(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

        auto operator<=>(const EdgeId &) const = default;

        Vertex other(Vertex x) const { return x == u ? v : u; }
        bool touches(Vertex x) const { return x == u || x == v; }
    };

    /**
     * Undirected simple graph on dense ids 0..n-1. Immutable once built;
     * adjacency lists are sorted and every edge has an index into edges(),
     * which is sorted lexicographically.
     */
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(int n);

            // Deduplicates; throws InputError on self-loops or out-of-range ids.
            static Graph from_edges(int n, std::span<const EdgeId> edges);
            static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

            int order() const { return static_cast<int>(adj_.size()); }
            std::size_t size() const { return edges_.size(); }

            std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
            // Edge indices parallel to neighbours(v).
            std::span<const int> incident_edges(Vertex v) const { return adj_edge_[v]; }
            int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
            int min_degree() const;

            bool adjacent(Vertex a, Vertex b) const;
            std::optional<int> edge_index(Vertex a, Vertex b) const;
            // Throws InputError if ab is not an edge.
            int edge_index_of(Vertex a, Vertex b) const;

            const std::vector<EdgeId> & edges() const { return edges_; }
            const EdgeId & edge(int index) const { return edges_[index]; }

            bool contains(Vertex v) const { return v >= 0 && v < order(); }

            // Same vertex set, only the listed edges.
            Graph edge_subgraph(std::span<const int> edge_indices) const;

            bool operator==(const Graph & other) const { return edges_ == other.edges_ && order() == other.order(); }

        private:
            std::vector<std::vector<Vertex>> adj_;
            std::vector<std::vector<int>> adj_edge_;
            std::vector<EdgeId> edges_;
    };

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> original;   // new id -> old id
        std::vector<int> local;         // old id -> new id, or -1
    };

    InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> vertices);

    /**
     * Vertex colouring; entries may be kUncoloured for partial colourings.
     * Properness is a predicate, never assumed.
     */
    struct Coloring
    {
        static constexpr int kUncoloured = -1;

        std::vector<int> color;
        int palette_size = 0;

        Coloring() = default;
        Coloring(int n, int palette) : color(n, kUncoloured), palette_size(palette) {}

        bool colored(Vertex v) const { return color[v] != kUncoloured; }
        int colors_used() const;
        // Every vertex coloured within the palette and every edge bichromatic.
        bool is_proper(const Graph & g) const;
        // Only edges with both endpoints coloured are checked.
        bool is_proper_partial(const Graph & g) const;
    };

    // Edge-list format: optional "n <count>" header, "u v" per line, '#' comments.
    Graph parse_graph(std::string_view text);
    std::string serialize_graph(const Graph & g);

    // Shortest odd cycle length; nullopt iff bipartite. Uses the OpenMP kernel.
    std::optional<int> odd_girth(const Graph & g);

    enum class SearchStatus
    {
        yes,
        no,
        unknown
    };

    struct CycleSearch
    {
        SearchStatus status = SearchStatus::no;
        std::vector<Vertex> cycle;          // closed: front() == back()
        std::int64_t expansions = 0;
    };

    inline constexpr std::int64_t kDefaultCycleBudget = 10'000'000;

    CycleSearch has_cycle_of_length(const Graph & g, int k, std::int64_t budget = kDefaultCycleBudget);
    CycleSearch has_cycle_through_vertex(const Graph & g, int k, Vertex v, std::int64_t budget = kDefaultCycleBudget);
    CycleSearch has_cycle_through_edge(const Graph & g, int k, EdgeId e, std::int64_t budget = kDefaultCycleBudget);

    std::vector<std::vector<Vertex>> bfs_layers(const Graph & g, Vertex v);
    // -1 for unreachable.
    std::vector<int> bfs_distances(const Graph & g, Vertex v);

    struct Degeneracy
    {
        std::vector<Vertex> order;      // removal order, minimum degree first
        int degeneracy = 0;
    };

    Degeneracy degeneracy_order(const Graph & g);

    // Smallest free colour, vertices visited in the given order.
    Coloring greedy_coloring(const Graph & g, std::span<const Vertex> order);
    // Greedy along the reverse degeneracy order; uses at most degeneracy+1 colours.
    Coloring degeneracy_coloring(const Graph & g);

    struct Bipartition
    {
        bool bipartite = true;
        Coloring two_coloring;              // valid when bipartite
        std::vector<Vertex> odd_closed_walk; // valid when not; front() == back()
    };

    Bipartition is_bipartite(const Graph & g);

    std::vector<int> connected_components(const Graph & g, int * count = nullptr);
    bool is_connected(const Graph & g);

    std::vector<Vertex> greedy_clique(const Graph & g);

    inline constexpr int kDefaultChromaticCap = 30;

    // Branch and bound; RefusalError beyond vertex_cap.
    int exact_chromatic(const Graph & g, int vertex_cap = kDefaultChromaticCap);

    namespace named
    {
        Graph complete(int n);
        Graph cycle(int n);
        Graph path(int n);
        Graph star(int leaves);
        Graph petersen();
        // The seven-vertex worked example for homotopy moves.
        Graph homotopy_example();
        // Uniform G(n, p) from a seeded stream.
        Graph random(int n, double p, std::uint64_t seed);
    }
}

#endif
