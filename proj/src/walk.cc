#include <oddwalk/errors.hh>
#include <oddwalk/walk.hh>

#include <algorithm>
#include <charconv>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace oddwalk
{
    bool Walk::is_walk_in(const Graph & g) const
    {
        if (vertices.empty())
            return false;
        for (Vertex v : vertices)
            if (! g.contains(v))
                return false;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (! g.adjacent(vertices[i], vertices[i + 1]))
                return false;
        return true;
    }

    bool Walk::is_cycle_in(const Graph & g) const
    {
        if (! closed() || length() < 3 || ! is_walk_in(g))
            return false;
        vector<Vertex> inner(vertices.begin(), vertices.end() - 1);
        std::sort(inner.begin(), inner.end());
        return std::adjacent_find(inner.begin(), inner.end()) == inner.end();
    }

    Walk Walk::reversed() const
    {
        return Walk(vector<Vertex>(vertices.rbegin(), vertices.rend()));
    }

    Walk Walk::concat(const Walk & other) const
    {
        if (vertices.empty())
            return other;
        if (other.vertices.empty() || other.front() != back())
            throw InputError("concatenated walks do not meet");
        Walk out = *this;
        out.vertices.insert(out.vertices.end(), other.vertices.begin() + 1, other.vertices.end());
        return out;
    }

    Walk make_walk(const Graph & g, vector<Vertex> vertices)
    {
        if (vertices.empty())
            throw InputError("empty walk");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (! g.contains(vertices[i]))
                throw InputError("walk vertex " + std::to_string(vertices[i]) + " at index " + std::to_string(i) + " not in graph");
            if (i > 0 && ! g.adjacent(vertices[i - 1], vertices[i]))
                throw InputError("walk step " + std::to_string(i - 1) + ": " + std::to_string(vertices[i - 1]) + " " +
                    std::to_string(vertices[i]) + " is not an edge");
        }
        return Walk(std::move(vertices));
    }

    string move_violation(const Graph & g, const Walk & p, const Move & m)
    {
        const int k = p.length();
        const auto & v = p.vertices;
        const int i = m.index;
        switch (m.kind) {
            case Move::Kind::sub:
                if (i <= 0 || i >= k)
                    return "sub needs 0 < i < k";
                if (! g.contains(m.vertex) || ! g.adjacent(v[i - 1], m.vertex) || ! g.adjacent(m.vertex, v[i + 1]))
                    return "sub vertex not a common neighbour of v[i-1] and v[i+1]";
                return {};
            case Move::Kind::ins:
                if (i < 0 || i > k)
                    return "ins needs 0 <= i <= k";
                if (! g.contains(m.vertex) || ! g.adjacent(v[i], m.vertex))
                    return "ins vertex not a neighbour of v[i]";
                return {};
            case Move::Kind::del:
                if (i <= 0 || i >= k)
                    return "del needs 0 < i < k";
                if (v[i - 1] != v[i + 1])
                    return "del needs v[i-1] == v[i+1]";
                return {};
        }
        return "unknown move";
    }

    Walk apply_move(const Graph & g, const Walk & p, const Move & m)
    {
        if (auto why = move_violation(g, p, m); ! why.empty())
            throw InputError(format_move(m) + ": " + why);
        Walk out = p;
        auto & v = out.vertices;
        switch (m.kind) {
            case Move::Kind::sub:
                v[m.index] = m.vertex;
                break;
            case Move::Kind::ins:
                v.insert(v.begin() + m.index + 1, {m.vertex, v[m.index]});
                break;
            case Move::Kind::del:
                v.erase(v.begin() + m.index, v.begin() + m.index + 2);
                break;
        }
        return out;
    }

    Walk replay_moves(const Graph & g, const Walk & p, const vector<Move> & ms)
    {
        Walk cur = p;
        for (std::size_t s = 0; s < ms.size(); ++s) {
            if (auto why = move_violation(g, cur, ms[s]); ! why.empty())
                throw InputError("step " + std::to_string(s) + ": " + format_move(ms[s]) + ": " + why);
            cur = apply_move(g, cur, ms[s]);
        }
        return cur;
    }

    namespace
    {
        int parse_nonneg(string_view s, const string & what)
        {
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            int x = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
            if (s.empty() || ec != std::errc() || p != s.data() + s.size() || x < 0)
                throw InputError("bad " + what + " \"" + string(s) + "\"");
            return x;
        }
    }

    Walk parse_walk(string_view text)
    {
        Walk out;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            out.vertices.push_back(parse_nonneg(text.substr(pos, comma == string_view::npos ? string_view::npos : comma - pos), "walk vertex"));
            if (comma == string_view::npos)
                break;
            pos = comma + 1;
        }
        return out;
    }

    string format_walk(const Walk & p)
    {
        string out;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(p.vertices[i]);
        }
        return out;
    }

    vector<Move> parse_moves(string_view text)
    {
        vector<Move> out;
        std::istringstream in{string(text)};
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            string kind;
            if (! (ls >> kind) || kind.front() == '#')
                continue;
            long long i = -1, v = -1;
            if (kind == "sub" || kind == "ins") {
                if (! (ls >> i >> v) || i < 0 || v < 0)
                    throw ParseError(line_no, "expected \"" + kind + " i v\"");
                out.push_back(kind == "sub" ? Move::sub(static_cast<int>(i), static_cast<Vertex>(v))
                                            : Move::ins(static_cast<int>(i), static_cast<Vertex>(v)));
            }
            else if (kind == "del") {
                if (! (ls >> i) || i < 0)
                    throw ParseError(line_no, "expected \"del i\"");
                out.push_back(Move::del(static_cast<int>(i)));
            }
            else
                throw ParseError(line_no, "unknown move \"" + kind + "\"");
            string extra;
            if (ls >> extra)
                throw ParseError(line_no, "trailing text");
        }
        return out;
    }

    string format_move(const Move & m)
    {
        switch (m.kind) {
            case Move::Kind::sub: return "sub " + std::to_string(m.index) + " " + std::to_string(m.vertex);
            case Move::Kind::ins: return "ins " + std::to_string(m.index) + " " + std::to_string(m.vertex);
            case Move::Kind::del: return "del " + std::to_string(m.index);
        }
        return {};
    }

    string format_moves(const vector<Move> & ms)
    {
        string out;
        for (auto & m : ms)
            out += format_move(m) + '\n';
        return out;
    }
}
