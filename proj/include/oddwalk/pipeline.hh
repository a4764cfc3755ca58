#ifndef ODDWALK_PIPELINE_HH
#define ODDWALK_PIPELINE_HH 1

#include <oddwalk/closure.hh>
#include <oddwalk/graph.hh>
#include <oddwalk/walk.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oddwalk
{
    // E(source) = A + B, both unions of phi-closure classes.
    struct StableSplit
    {
        std::vector<int> a;         // source edge indices, sorted
        std::vector<int> b;

        static StableSplit of_class(const GraphHom & phi, const ClosurePartition & part, int class_id);
    };

    // Empty if a and b partition E(source) into stable sets, else what is wrong.
    std::string split_violation(const GraphHom & phi, const StableSplit & split);

    // How extend_coloring coloured one vertex: the root in V(G_A) reached by
    // B-edges and the parity of that walk. Vertices of G_A are their own root.
    struct Provenance
    {
        Vertex root = -1;           // -1: component without A-vertices, 2-coloured
        int distance = 0;
    };

    struct Extension
    {
        Coloring coloring;
        std::vector<Provenance> provenance;
    };

    // gamma0 is indexed by source vertex; only V(G_A) is read. Its
    // palette_size is the r of the extension rule. HypothesisError carrying two
    // B-walks when the colour is not well defined.
    Extension extend_coloring(const GraphHom & phi, const StableSplit & split, const Coloring & gamma0);

    // Whole-graph indexed colouring of N_{<=r}(v); other vertices uncoloured.
    // ViolationError if a layer needs more than 2r colours; the message names a
    // C_{2r+1} in the ball when one is found within the budget.
    Coloring color_ball(const Graph & h, Vertex v, int r, std::int64_t budget = kDefaultCycleBudget);

    struct ClosureColoring
    {
        Coloring coloring;              // over V(h); V(H_1) coloured
        std::vector<int> closure;       // the C4 class of f, edge indices
        Walk cycle;                     // shortest odd cycle meeting the class
        std::vector<int> h1_edges;      // E(cycle) + closure
        std::vector<int> assigned;      // vertex -> position on cycle whose ball coloured it, or -1
    };

    // HypothesisError if no odd cycle of length <= 2r-1 meets the closure of f;
    // ViolationError naming a closure vertex farther than r-1 from the cycle.
    ClosureColoring color_closure_subgraph(const Graph & h, EdgeId f, int r, std::int64_t budget = kDefaultCycleBudget);

    // What the caller vouches for about the source graph. The pipeline cannot
    // check either; a false claim shows up as a HypothesisError certificate.
    enum class TopologyAssertion
    {
        none,
        simply_connected,
        cyclic_pi1
    };

    std::string to_string(TopologyAssertion a);

    enum class PipelineBranch
    {
        product_4color,
        extension
    };

    std::string to_string(PipelineBranch b);

    struct PipelineTrace
    {
        Walk cycle;                             // the odd cycle of G
        int r = 0;
        TopologyAssertion assertion = TopologyAssertion::none;
        SearchStatus target_freeness = SearchStatus::unknown;
        int image_size = 0;                     // |phi(V(cycle))|

        PivotResult pivot;
        StableSplit split;
        PipelineBranch branch = PipelineBranch::product_4color;

        // extension branch
        std::optional<ClosureColoring> closure;
        Coloring gamma0;
        std::vector<Provenance> provenance;

        // product branch
        Coloring a_side, b_side;

        Coloring coloring;
    };

    // Runs the constructive proof end to end. RefusalError when assertion is
    // none; HypothesisError when a precondition or a sub-step hypothesis fails.
    PipelineTrace bounded_coloring_pipeline(const GraphHom & phi, const Walk & c, int r, TopologyAssertion assertion,
        std::int64_t budget = kDefaultCycleBudget);

    // Re-checks every recorded step; empty if all pass.
    std::string validate_trace(const GraphHom & phi, const PipelineTrace & t);

    // A path of h with distinct endpoints on the base cycle, interior off it,
    // length at least 2.
    struct CEar
    {
        Walk path;
        Walk base_cycle;
    };

    std::string ear_violation(const Graph & h, const CEar & q);
    // The odd one of the two cycles the ear closes with an arc of the base cycle.
    Walk ear_cycle(const CEar & q);

    struct EarStep
    {
        CEar ear;
        Walk odd_cycle;                 // ear_cycle(ear)
        EdgeId edge;                    // the chain edge this ear carries
        std::vector<Vertex> square;     // the 4-cycle joining it to the previous edge
        bool intermediate = false;      // an auxiliary ear of the case analysis
        std::string construction;
    };

    struct EarChain
    {
        std::vector<EdgeId> chain;      // e_0, e_1, ..., e_m
        std::vector<std::vector<Vertex>> squares;   // D_1, ..., D_m
        std::vector<EarStep> steps;     // consecutive odd cycles grow by at most 2
    };

    // Empty chain if e is on c. InputError if e is outside the C4 closure of e0
    // or the preconditions on c fail; HypothesisError with the cycle if an
    // ear closes a C_{2r+1}.
    EarChain ear_chain_witness(const Graph & h, const Walk & c, EdgeId e0, EdgeId e, int r);

    // Every vertex of even degree in the edge set.
    bool is_eulerian_set(const Graph & h, const std::vector<int> & edges);
    // |Y| <= |X| + 2|Y1 \ X1| with Xi = X \ E(c); sets are edge indices.
    bool symmetric_difference_bound(const Graph & h, const Walk & c, const std::vector<int> & x, const std::vector<int> & y);
}

#endif
