#ifndef ODDWALK_SRC_BIDIRECTIONAL_HH
#define ODDWALK_SRC_BIDIRECTIONAL_HH 1

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace oddwalk::detail
{
    using Seq = std::vector<int>;

    struct SeqHash
    {
        std::size_t operator()(const Seq & s) const
        {
            std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
            for (int x : s) {
                h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
                h *= 0x100000001b3ULL;
                h ^= h >> 29;
            }
            return static_cast<std::size_t>(h);
        }
    };

    template <typename MoveT>
    struct BidirResult
    {
        bool found = false;
        bool exhausted = false;     // both sides ran out of new states
        std::vector<MoveT> moves;
        std::int64_t states = 0;
    };

    // Level-synchronous BFS from both ends, always growing the smaller
    // frontier. expand(seq, emit) calls emit(move, next) for every neighbour;
    // invert(before, move, after) returns the move taking after back to before.
    template <typename MoveT, typename Expand, typename Invert>
    BidirResult<MoveT> bidirectional_search(const Seq & a, const Seq & b, Expand && expand, Invert && invert, std::int64_t state_cap)
    {
        BidirResult<MoveT> out;
        if (a == b) {
            out.found = true;
            return out;
        }

        struct Side
        {
            std::vector<Seq> seqs;
            std::vector<int> parent;
            std::vector<MoveT> move;
            std::unordered_map<Seq, int, SeqHash> index;
            std::vector<int> frontier;
        };
        Side sides[2];
        for (int s = 0; s < 2; ++s) {
            const Seq & root = s == 0 ? a : b;
            sides[s].seqs.push_back(root);
            sides[s].parent.push_back(-1);
            sides[s].move.push_back(MoveT{});
            sides[s].index.emplace(root, 0);
            sides[s].frontier.push_back(0);
        }
        out.states = 2;

        int meet_side = -1, meet_id = -1, meet_other = -1;
        while (meet_side == -1) {
            if (sides[0].frontier.empty() && sides[1].frontier.empty()) {
                out.exhausted = true;
                return out;
            }
            int s = sides[0].frontier.empty() ? 1
                : sides[1].frontier.empty()   ? 0
                : (sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1);
            Side & me = sides[s];
            Side & other = sides[1 - s];
            std::vector<int> next_frontier;
            bool capped = false;
            for (int id : me.frontier) {
                Seq cur = me.seqs[id];
                expand(cur, [&](const MoveT & m, Seq && nxt) {
                    if (meet_side != -1 || capped)
                        return;
                    if (me.index.count(nxt))
                        return;
                    if (out.states >= state_cap) {
                        capped = true;
                        return;
                    }
                    int nid = static_cast<int>(me.seqs.size());
                    me.index.emplace(nxt, nid);
                    me.parent.push_back(id);
                    me.move.push_back(m);
                    ++out.states;
                    if (auto it = other.index.find(nxt); it != other.index.end()) {
                        meet_side = s;
                        meet_id = nid;
                        meet_other = it->second;
                    }
                    me.seqs.push_back(std::move(nxt));
                    next_frontier.push_back(nid);
                });
                if (meet_side != -1 || capped)
                    break;
            }
            if (meet_side == -1 && capped)
                return out;
            me.frontier = std::move(next_frontier);
        }

        int id0 = meet_side == 0 ? meet_id : meet_other;
        int id1 = meet_side == 0 ? meet_other : meet_id;
        // a -> meet
        std::vector<MoveT> head;
        for (int x = id0; sides[0].parent[x] != -1; x = sides[0].parent[x])
            head.push_back(sides[0].move[x]);
        std::reverse(head.begin(), head.end());
        // meet -> b, inverting the moves recorded from b's side
        for (int x = id1; sides[1].parent[x] != -1; x = sides[1].parent[x]) {
            int p = sides[1].parent[x];
            head.push_back(invert(sides[1].seqs[p], sides[1].move[x], sides[1].seqs[x]));
        }
        out.found = true;
        out.moves = std::move(head);
        return out;
    }
}

#endif
