#ifndef ODDWALK_NCOMPLEX_HH
#define ODDWALK_NCOMPLEX_HH 1

#include <oddwalk/graph.hh>
#include <oddwalk/group.hh>
#include <oddwalk/walk.hh>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oddwalk
{
    /**
     * Simplicial complex given by its maximal faces (sorted vertex lists).
     * Vertices are ids in [0, vertex_count); only those lying in some face
     * are present.
     */
    class SimplicialComplex
    {
        public:
            SimplicialComplex() = default;
            // Drops duplicates and faces contained in others.
            SimplicialComplex(int vertex_count, std::vector<std::vector<Vertex>> faces);

            int vertex_count() const { return vertex_count_; }
            const std::vector<std::vector<Vertex>> & maximal_faces() const { return faces_; }
            std::vector<Vertex> vertices() const;
            bool present(Vertex v) const { return v >= 0 && v < vertex_count_ && present_[v]; }

            // Is the set (any order, repeats allowed) inside one maximal face?
            bool is_face(std::vector<Vertex> s) const;

            // 1-skeleton, sorted (u < v).
            std::vector<std::pair<Vertex, Vertex>> edges() const;
            // Every 2-simplex, sorted, deduplicated.
            std::vector<std::array<Vertex, 3>> triangles() const;
            // Per maximal face only the triangles through its least vertex; these
            // generate the same relations since each simplex is a cone on that vertex.
            std::vector<std::array<Vertex, 3>> fan_triangles() const;

            // Component label per vertex (-1 if absent).
            std::vector<int> component_labels(int * count = nullptr) const;
            bool connected() const;
            // One subcomplex per component, same vertex numbering.
            std::vector<SimplicialComplex> components() const;

        private:
            int vertex_count_ = 0;
            std::vector<std::vector<Vertex>> faces_;
            std::vector<char> present_;
            std::vector<std::vector<int>> faces_of_;     // vertex -> maximal face ids
    };

    // Maximal faces are the maximal neighbourhoods N(v).
    SimplicialComplex build_ncomplex(const Graph & g);

    // One maximal face per line as sorted ids.
    std::string format_complex(const SimplicialComplex & k);

    // H1 of a connected complex from the boundary matrices of its 2-skeleton.
    // RefusalError if disconnected or if the matrices exceed entry_cap entries.
    inline constexpr std::int64_t kDefaultBoundaryEntryCap = 4'000'000;
    AbelianGroup h1_homology(const SimplicialComplex & k, std::int64_t entry_cap = kDefaultBoundaryEntryCap);

    enum class RelatorSet
    {
        all_triangles,
        fan_triangles
    };

    struct EdgePathPresentation
    {
        GroupPresentation presentation;
        Vertex basepoint = 0;
        std::vector<std::pair<Vertex, Vertex>> generator_edges;     // generator i+1 is edge i, oriented u -> v
    };

    // Spanning tree of the 1-skeleton by BFS from v0; one generator per
    // non-tree edge, one relator per triangle. RefusalError if disconnected.
    EdgePathPresentation edge_path_presentation(const SimplicialComplex & k, Vertex v0, RelatorSet rel = RelatorSet::all_triangles);

    struct EdgePath
    {
        std::vector<Vertex> vertices;

        bool is_valid_in(const SimplicialComplex & k) const;
        auto operator<=>(const EdgePath &) const = default;
    };

    // Even-index subsequence. InputError unless p is an even closed walk of g.
    EdgePath walk_to_edgepath(const Graph & g, const Walk & p);
    // Interleave the smallest common neighbour. InputError if a pair has none.
    Walk edgepath_to_walk(const EdgePath & q, const Graph & g);

    struct EdgePathMove
    {
        enum class Kind
        {
            ins1,
            del1,
            ins2,
            del2
        };

        Kind kind = Kind::ins1;
        int index = 0;
        Vertex vertex = 0;      // ins2 only

        auto operator<=>(const EdgePathMove &) const = default;
    };

    std::string format_edgepath_move(const EdgePathMove & m);
    // InputError naming the violated condition.
    EdgePath apply_edgepath_move(const SimplicialComplex & k, const EdgePath & q, const EdgePathMove & m);

    // The edge-path moves that carry walk_to_edgepath(p) to
    // walk_to_edgepath(apply_move(p, m)), for an even closed walk p.
    std::vector<EdgePathMove> transport_move(const Graph & g, const Walk & p, const Move & m);

    enum class EquivalenceStatus
    {
        equivalent,
        unknown
    };

    struct EdgePathSearch
    {
        EquivalenceStatus status = EquivalenceStatus::unknown;
        std::vector<EdgePathMove> moves;
        std::int64_t states = 0;
    };

    // Bidirectional BFS over edge paths of length <= length_cap.
    EdgePathSearch edgepaths_equivalent(const SimplicialComplex & k, const EdgePath & a, const EdgePath & b,
        int length_cap, std::int64_t state_cap);
}

#endif
