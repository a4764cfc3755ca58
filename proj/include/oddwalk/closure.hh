#ifndef ODDWALK_CLOSURE_HH
#define ODDWALK_CLOSURE_HH 1

#include <oddwalk/graph.hh>
#include <oddwalk/walk.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddwalk
{
    // A vertex map between two graphs. Holds copies of both graphs; validity
    // is checked by is_valid(), and make() refuses invalid maps.
    struct GraphHom
    {
        Graph source;
        Graph target;
        std::vector<Vertex> map;

        // Throws InputError on size mismatch and ViolationError naming the
        // first source edge whose image is not an edge.
        static GraphHom make(Graph source, Graph target, std::vector<Vertex> map);
        static GraphHom identity(const Graph & g);

        bool is_valid() const;
        // Index of the image edge in target.
        int image_edge(int source_edge) const;
        // First offending source edge, if any.
        std::optional<EdgeId> first_violation() const;
    };

    // "u -> x" per line, every source vertex exactly once.
    GraphHom parse_hom(std::string_view text, Graph source, Graph target);
    std::string serialize_hom(const GraphHom & phi);

    // Multiset of edges of one graph, stored as a count per edge index.
    struct EdgeMultiset
    {
        std::vector<int> count;

        EdgeMultiset() = default;
        explicit EdgeMultiset(const Graph & owner) : count(owner.size(), 0) {}

        static EdgeMultiset of_walk(const Graph & owner, const Walk & p);

        long long total() const;
        bool empty() const { return total() == 0; }
        EdgeMultiset operator+(const EdgeMultiset & other) const;
    };

    struct ClosurePartition
    {
        enum class Kind
        {
            c4_in_target,
            phi_in_source
        };

        Kind kind = Kind::c4_in_target;
        std::vector<int> class_of;              // edge index -> class id
        std::vector<std::vector<int>> classes;  // class id -> sorted edge indices

        int count() const { return static_cast<int>(classes.size()); }
    };

    // Edges sharing a 4-cycle are merged, transitively.
    ClosurePartition c4_partition(const Graph & h);

    // Components of the pullback of each C4 class of the target.
    ClosurePartition phi_partition(const GraphHom & phi);

    // "class <id>: u-v u-v ..."
    std::string format_partition(const Graph & g, const ClosurePartition & p);

    // The edge set A (source edge indices, sorted) and an optional anchor u.
    struct InvariantSpec
    {
        std::vector<int> stable_set;
        std::optional<Vertex> anchor;

        static InvariantSpec all_edges(const Graph & source, std::optional<Vertex> anchor = std::nullopt);
        static InvariantSpec of_class(const ClosurePartition & phi_part, int class_id, std::optional<Vertex> anchor = std::nullopt);
    };

    // Empty if A is a union of whole classes, else a description of a split class.
    std::string stability_violation(const InvariantSpec & spec, const ClosurePartition & phi_part);

    // |f cap A| or |f cap A_u| mod 2. RefusalError if A is not stable.
    int eval_invariant(const InvariantSpec & spec, const EdgeMultiset & f, const GraphHom & phi);
    int eval_invariant(const InvariantSpec & spec, const EdgeMultiset & f, const GraphHom & phi, const ClosurePartition & phi_part);

    // Decomposes a multigraph with all degrees even into closed walks, one
    // per component; darts are taken smallest neighbour first. InputError on
    // an odd degree. Edges are target edge indices with multiplicities.
    std::vector<Walk> eulerian_decomposition(const Graph & g, const std::vector<int> & multiplicity);

    // An odd closed walk contains an odd cycle; split at the first repeated
    // vertex and keep the odd half until no vertex repeats.
    Walk odd_cycle_in_closed_walk(const Walk & w);

    struct PivotResult
    {
        int edge = -1;                  // source edge index
        EdgeId e;
        InvariantSpec spec;
        Walk odd_cycle;                 // in the target, contains phi(e)
        int rounds = 0;                 // recursion depth reached
        std::vector<long long> sizes;   // |F| at each round, strictly decreasing
    };

    // HypothesisError if I_{E(G)}(f) != 1 or some I_{E(G),u}(f) != 0.
    PivotResult find_pivot_edge(const GraphHom & phi, const EdgeMultiset & f);

    // Is source minus A bipartite? InputError if c is not an odd cycle of the
    // source on which the invariant is 1.
    bool verify_bipartite_complement(const GraphHom & phi, const InvariantSpec & spec, const Walk & c);
}

#endif
