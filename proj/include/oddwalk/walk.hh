#ifndef ODDWALK_WALK_HH
#define ODDWALK_WALK_HH 1

#include <oddwalk/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace oddwalk
{
    /**
     * A walk v_0 ... v_k. The owning graph is passed to the operations that
     * need it; validity against a graph is a predicate.
     */
    struct Walk
    {
        std::vector<Vertex> vertices;

        Walk() = default;
        explicit Walk(std::vector<Vertex> v) : vertices(std::move(v)) {}

        int length() const { return static_cast<int>(vertices.size()) - 1; }
        bool closed() const { return ! vertices.empty() && vertices.front() == vertices.back(); }
        int parity() const { return length() & 1; }
        Vertex front() const { return vertices.front(); }
        Vertex back() const { return vertices.back(); }

        // Every consecutive pair adjacent in g.
        bool is_walk_in(const Graph & g) const;
        // Closed with no repeated vertex other than the endpoints, length >= 3.
        bool is_cycle_in(const Graph & g) const;

        Walk reversed() const;
        // this followed by other; other must start where this ends.
        Walk concat(const Walk & other) const;

        auto operator<=>(const Walk &) const = default;
    };

    // Throws InputError naming the first non-edge.
    Walk make_walk(const Graph & g, std::vector<Vertex> vertices);

    struct Move
    {
        enum class Kind
        {
            sub,
            ins,
            del
        };

        Kind kind = Kind::sub;
        int index = 0;
        Vertex vertex = 0;      // unused for del

        static Move sub(int i, Vertex v) { return {Kind::sub, i, v}; }
        static Move ins(int i, Vertex w) { return {Kind::ins, i, w}; }
        static Move del(int i) { return {Kind::del, i, 0}; }

        auto operator<=>(const Move &) const = default;
    };

    // Empty string if m applies to p in g, otherwise the violated condition.
    std::string move_violation(const Graph & g, const Walk & p, const Move & m);

    // Throws InputError naming the violated condition.
    Walk apply_move(const Graph & g, const Walk & p, const Move & m);

    // Throws InputError "step <i>: ..." at the first inapplicable move.
    Walk replay_moves(const Graph & g, const Walk & p, const std::vector<Move> & ms);

    // "0,1,2,0"
    Walk parse_walk(std::string_view text);
    std::string format_walk(const Walk & p);

    // One move per line: "sub i v", "ins i w", "del i".
    std::vector<Move> parse_moves(std::string_view text);
    std::string format_move(const Move & m);
    std::string format_moves(const std::vector<Move> & ms);
}

#endif
