#ifndef ODDWALK_HOMOTOPY_HH
#define ODDWALK_HOMOTOPY_HH 1

#include <oddwalk/graph.hh>
#include <oddwalk/group.hh>
#include <oddwalk/walk.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace oddwalk
{
    enum class HomotopyStatus
    {
        homotopic,
        not_homotopic,
        unknown
    };

    std::string to_string(HomotopyStatus s);

    struct HomotopyVerdict
    {
        HomotopyStatus status = HomotopyStatus::unknown;
        std::vector<Move> moves;        // homotopic: replays p into q
        std::string separation;         // not_homotopic: which invariant differs
        std::string method;             // "identical", "bfs", "contraction"
        std::int64_t states = 0;
    };

    struct HomotopyCaps
    {
        int length_cap = -1;                    // -1: max(|p|, |q|) + 6
        std::int64_t state_cap = 1'000'000;
        // Second phase: contract the closed walk p q^-1 to its basepoint by a
        // best-first search; 0 disables it.
        std::int64_t contraction_state_cap = 200'000;
        int contraction_slack = 4;              // extra length allowed above |p| + |q|
    };

    HomotopyVerdict are_homotopic(const Graph & g, const Walk & p, const Walk & q, const HomotopyCaps & caps = {});

    enum class SimpleConnectivity
    {
        simply_connected,
        not_simply_connected,
        unknown
    };

    std::string to_string(SimpleConnectivity s);

    struct SimpleConnectivityReport
    {
        SimpleConnectivity status = SimpleConnectivity::unknown;
        AbelianGroup h1;                    // abelianisation of the simplified presentation
        GroupStatus group_status = GroupStatus::unknown;
        int generators_before = 0, relators_before = 0;
        int generators_after = 0, relators_after = 0;
        std::int64_t steps = 0;
    };

    // RefusalError if g is disconnected or bipartite.
    SimpleConnectivityReport check_simply_connected(const Graph & g, std::int64_t budget = kDefaultTietzeBudget);
}

#endif
