#ifndef ODDWALK_HOMSEARCH_HH
#define ODDWALK_HOMSEARCH_HH 1

#include <oddwalk/closure.hh>
#include <oddwalk/graph.hh>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oddwalk
{
    enum class HomSearchStatus
    {
        found,
        none,
        timeout
    };

    std::string to_string(HomSearchStatus s);

    struct HomSearchResult
    {
        HomSearchStatus status = HomSearchStatus::timeout;
        std::optional<GraphHom> hom;
        std::int64_t nodes = 0;
        double seconds = 0.0;
    };

    inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

    // Backtracking with forward checking; smallest domain first, values by
    // descending target degree.
    HomSearchResult hom_exists(const Graph & g, const Graph & h, std::int64_t node_budget = kDefaultNodeBudget);

    bool verify_hom(const GraphHom & phi);

    struct FoldCheck
    {
        int length = 0;
        SearchStatus status = SearchStatus::unknown;
        std::int64_t expansions = 0;
        bool incremental = false;       // only cycles through the merged vertex were searched
    };

    struct FoldStep
    {
        Vertex a = -1, b = -1;          // smallest original vertex of each merged class
        int order_after = 0;
        std::vector<FoldCheck> checks;
    };

    struct FoldTrace
    {
        std::vector<FoldStep> steps;
        Graph quotient;
        std::vector<Vertex> map;        // original vertex -> quotient vertex
        std::int64_t attempts = 0;
        std::int64_t rejected = 0;
        bool budget_exhausted = false;
        bool input_free = true;         // the input itself had no forbidden cycle
    };

    struct FoldOptions
    {
        int beam = 2;
        std::int64_t budget = 20'000;               // admissibility checks in total
        std::int64_t check_budget = 200'000;        // expansions per cycle search
        std::uint64_t seed = 0;                     // 0: plain vertex order
        int stop_at = 0;                            // stop once the quotient has this many vertices
    };

    // Beam search over merges of non-adjacent pairs keeping the quotient free
    // of the forbidden cycle lengths. InputError if g has a forbidden cycle and
    // no merge reaches a free quotient.
    FoldTrace fold_search(const Graph & g, const std::set<int> & forbidden_lengths, const FoldOptions & opt = {});

    GraphHom fold_hom(const Graph & g, const FoldTrace & t);
}

#endif
