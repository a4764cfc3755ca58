#ifndef ODDWALK_TESTS_CORPUS_HH
#define ODDWALK_TESTS_CORPUS_HH 1

#include <oddwalk/graph.hh>
#include <oddwalk/rng.hh>
#include <oddwalk/walk.hh>

#include <string>
#include <utility>
#include <vector>

namespace corpus
{
    using oddwalk::Graph;
    using oddwalk::Vertex;

    // Connected non-bipartite G(n, p) draws, seed-pinned.
    inline Graph random_connected(int n, double p, std::uint64_t seed)
    {
        for (std::uint64_t s = seed; ; s += 1000) {
            auto g = oddwalk::named::random(n, p, s);
            if (oddwalk::is_connected(g) && ! oddwalk::is_bipartite(g).bipartite)
                return g;
        }
    }

    inline std::vector<std::pair<std::string, Graph>> fixed()
    {
        using namespace oddwalk::named;
        return {{"K4", complete(4)}, {"C5", cycle(5)}, {"C7", cycle(7)}, {"Petersen", petersen()},
            {"figure", homotopy_example()}, {"random9", random_connected(9, 0.35, 11)},
            {"random11", random_connected(11, 0.3, 12)}, {"random12", random_connected(12, 0.25, 13)}};
    }

    inline std::vector<Vertex> random_walk(const Graph & g, oddwalk::SplitMix64 & rng, Vertex start, int length)
    {
        std::vector<Vertex> w{start};
        for (int i = 0; i < length; ++i) {
            auto nb = g.neighbours(w.back());
            if (nb.empty())
                break;
            w.push_back(nb[rng.below(nb.size())]);
        }
        return w;
    }

    // Random walk of the given length that returns to its start, by
    // walking out and back along a random tail when needed.
    inline std::vector<Vertex> random_closed_walk(const Graph & g, oddwalk::SplitMix64 & rng, int length)
    {
        Vertex s = static_cast<Vertex>(rng.below(g.order()));
        for (int tries = 0; tries < 2000; ++tries) {
            auto w = random_walk(g, rng, s, length);
            if (w.back() == s)
                return w;
        }
        auto half = random_walk(g, rng, s, length / 2);
        std::vector<Vertex> w = half;
        for (int i = static_cast<int>(half.size()) - 2; i >= 0; --i)
            w.push_back(half[i]);
        return w;
    }
}

#endif
