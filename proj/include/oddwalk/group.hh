#ifndef ODDWALK_GROUP_HH
#define ODDWALK_GROUP_HH 1

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oddwalk
{
    // Letters are signed 1-based generator indices: +i is g_i, -i its inverse.
    using Word = std::vector<int>;

    struct GroupPresentation
    {
        int generators = 0;
        std::vector<Word> relators;

        bool is_empty() const { return generators == 0; }
        // Every letter within range and nonzero.
        bool is_well_formed() const;
    };

    // "gens k" then one relator per line as signed indices.
    std::string format_presentation(const GroupPresentation & p);
    GroupPresentation parse_presentation(std::string_view text);

    // Free reduction, then cyclic reduction.
    Word cyclically_reduce(Word w);

    struct AbelianGroup
    {
        int free_rank = 0;
        std::vector<mpz_class> torsion;     // all > 1, each dividing the next

        bool trivial() const { return free_rank == 0 && torsion.empty(); }
        std::string describe() const;       // "0", "Z", "Z^2 + Z/2", ...
    };

    // Exponent-sum matrix through Smith normal form.
    AbelianGroup abelianization(const GroupPresentation & p);

    enum class GroupStatus
    {
        trivial,
        cyclic,
        unknown_nontrivial_abelianization,
        unknown
    };

    std::string to_string(GroupStatus s);

    struct TietzeResult
    {
        GroupPresentation simplified;
        GroupStatus status = GroupStatus::unknown;
        AbelianGroup abelian;
        std::int64_t steps = 0;
        bool budget_exhausted = false;
    };

    inline constexpr std::int64_t kDefaultTietzeBudget = 100'000;

    // Deterministic order: free-reduce, drop generators killed by length-1
    // relators, identify generators through length-2 relators, then eliminate a
    // generator occurring once in the shortest relator that has one. One pass
    // over the relators or one elimination is one step.
    TietzeResult tietze_simplify(const GroupPresentation & p, std::int64_t budget = kDefaultTietzeBudget);
}

#endif
