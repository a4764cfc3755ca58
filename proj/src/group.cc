#include <oddwalk/errors.hh>
#include <oddwalk/group.hh>
#include <oddwalk/snf.hh>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

using std::string;
using std::vector;

namespace oddwalk
{
    bool GroupPresentation::is_well_formed() const
    {
        for (auto & r : relators)
            for (int x : r)
                if (x == 0 || std::abs(x) > generators)
                    return false;
        return true;
    }

    string format_presentation(const GroupPresentation & p)
    {
        std::ostringstream out;
        out << "gens " << p.generators << '\n';
        for (auto & r : p.relators) {
            for (std::size_t i = 0; i < r.size(); ++i)
                out << (i ? " " : "") << r[i];
            out << '\n';
        }
        return out.str();
    }

    GroupPresentation parse_presentation(std::string_view text)
    {
        std::istringstream in{string(text)};
        string line;
        GroupPresentation p;
        int line_no = 0;
        bool header = false;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            if (! header) {
                string kw;
                if (! (ls >> kw))
                    continue;
                if (kw != "gens" || ! (ls >> p.generators) || p.generators < 0)
                    throw ParseError(line_no, "expected \"gens k\"");
                header = true;
                continue;
            }
            Word w;
            int x;
            while (ls >> x) {
                if (x == 0 || std::abs(x) > p.generators)
                    throw ParseError(line_no, "letter " + std::to_string(x) + " out of range");
                w.push_back(x);
            }
            if (! ls.eof())
                throw ParseError(line_no, "expected signed integers");
            p.relators.push_back(std::move(w));
        }
        if (! header)
            throw ParseError(line_no, "missing \"gens k\" header");
        return p;
    }

    Word cyclically_reduce(Word w)
    {
        Word s;
        s.reserve(w.size());
        for (int x : w) {
            if (! s.empty() && s.back() == -x)
                s.pop_back();
            else
                s.push_back(x);
        }
        std::size_t lo = 0, hi = s.size();
        while (hi - lo >= 2 && s[lo] == -s[hi - 1]) {
            ++lo;
            --hi;
        }
        return Word(s.begin() + lo, s.begin() + hi);
    }

    string AbelianGroup::describe() const
    {
        if (trivial())
            return "0";
        string out;
        if (free_rank == 1)
            out = "Z";
        else if (free_rank > 1)
            out = "Z^" + std::to_string(free_rank);
        for (auto & t : torsion) {
            if (! out.empty())
                out += " + ";
            out += "Z/" + t.get_str();
        }
        return out;
    }

    AbelianGroup abelianization(const GroupPresentation & p)
    {
        IntMatrix m(static_cast<int>(p.relators.size()), p.generators);
        for (int r = 0; r < m.rows; ++r)
            for (int x : p.relators[r])
                m.at(r, std::abs(x) - 1) += (x > 0 ? 1 : -1);
        auto snf = smith_normal_form(m);
        AbelianGroup g;
        g.free_rank = p.generators - snf.rank;
        for (auto & d : snf.invariant_factors)
            if (d > 1)
                g.torsion.push_back(d);
        return g;
    }

    string to_string(GroupStatus s)
    {
        switch (s) {
            case GroupStatus::trivial: return "TRIVIAL";
            case GroupStatus::cyclic: return "CYCLIC";
            case GroupStatus::unknown_nontrivial_abelianization: return "UNKNOWN_NONTRIVIAL_ABELIANIZATION";
            case GroupStatus::unknown: return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    namespace
    {
        class Simplifier
        {
            public:
                explicit Simplifier(const GroupPresentation & p) :
                    n_(p.generators), parent_(n_), sign_(n_, 1), dead_(n_, 0), word_(n_), relators_(p.relators)
                {
                    for (int i = 0; i < n_; ++i)
                        parent_[i] = i;
                }

                TietzeResult run(std::int64_t budget)
                {
                    TietzeResult out;
                    while (true) {
                        if (out.steps >= budget) {
                            out.budget_exhausted = true;
                            break;
                        }
                        ++out.steps;
                        rewrite_all();
                        if (short_relator_pass())
                            continue;
                        if (out.steps >= budget) {
                            out.budget_exhausted = true;
                            break;
                        }
                        ++out.steps;
                        if (! eliminate_once())
                            break;
                    }
                    rewrite_all();
                    out.simplified = renumbered();
                    out.abelian = abelianization(out.simplified);
                    if (out.simplified.generators == 0)
                        out.status = GroupStatus::trivial;
                    else if (out.simplified.generators == 1)
                        out.status = GroupStatus::cyclic;
                    else if (! out.abelian.trivial())
                        out.status = GroupStatus::unknown_nontrivial_abelianization;
                    else
                        out.status = GroupStatus::unknown;
                    return out;
                }

            private:
                std::pair<int, int> find(int g)
                {
                    int s = 1, x = g;
                    while (parent_[x] != x) {
                        s *= sign_[x];
                        x = parent_[x];
                    }
                    // compress
                    int cur = g, cs = s;
                    while (parent_[cur] != cur) {
                        int next = parent_[cur], ns = cs * sign_[cur];
                        parent_[cur] = x;
                        sign_[cur] = cs;
                        cur = next;
                        cs = ns;
                    }
                    return {x, s};
                }

                void expand(int letter, Word & out)
                {
                    int g = std::abs(letter) - 1, s = letter > 0 ? 1 : -1;
                    auto [root, p] = find(g);
                    s *= p;
                    if (dead_[root])
                        return;
                    if (word_[root]) {
                        const Word & w = *word_[root];
                        if (s > 0)
                            for (int x : w)
                                expand(x, out);
                        else
                            for (auto it = w.rbegin(); it != w.rend(); ++it)
                                expand(-*it, out);
                        return;
                    }
                    out.push_back(s * (root + 1));
                }

                void rewrite_all()
                {
                    vector<Word> next;
                    next.reserve(relators_.size());
                    for (auto & r : relators_) {
                        Word w;
                        for (int x : r)
                            expand(x, w);
                        w = cyclically_reduce(std::move(w));
                        if (! w.empty())
                            next.push_back(canonical(std::move(w)));
                    }
                    std::sort(next.begin(), next.end());
                    next.erase(std::unique(next.begin(), next.end()), next.end());
                    relators_ = std::move(next);
                }

                // Least rotation of w or of its inverse, so duplicates collapse.
                static Word canonical(Word w)
                {
                    Word best = w;
                    Word inv(w.rbegin(), w.rend());
                    for (int & x : inv)
                        x = -x;
                    for (const Word * base : {&w, &inv}) {
                        Word rot = *base;
                        for (std::size_t i = 0; i < rot.size(); ++i) {
                            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                            if (rot < best)
                                best = rot;
                        }
                    }
                    return best;
                }

                bool short_relator_pass()
                {
                    bool changed = false;
                    for (auto & r : relators_) {
                        if (r.size() == 1) {
                            auto [root, p] = find(std::abs(r[0]) - 1);
                            if (! dead_[root] && ! word_[root]) {
                                dead_[root] = 1;
                                changed = true;
                            }
                        }
                        else if (r.size() == 2) {
                            auto [ra, pa] = find(std::abs(r[0]) - 1);
                            auto [rb, pb] = find(std::abs(r[1]) - 1);
                            if (ra == rb || dead_[ra] || dead_[rb] || word_[ra] || word_[rb])
                                continue;
                            int sa = pa * (r[0] > 0 ? 1 : -1), sb = pb * (r[1] > 0 ? 1 : -1);
                            // ra^sa rb^sb = 1, so ra = rb^(-sb*sa)
                            parent_[ra] = rb;
                            sign_[ra] = -sb * sa;
                            changed = true;
                        }
                    }
                    return changed;
                }

                bool eliminate_once()
                {
                    // shortest relator with a generator occurring exactly once
                    int best_r = -1, best_g = -1;
                    for (int i = 0; i < static_cast<int>(relators_.size()); ++i) {
                        auto & r = relators_[i];
                        if (best_r != -1 && r.size() >= relators_[best_r].size())
                            continue;
                        std::map<int, int> occ;
                        for (int x : r)
                            ++occ[std::abs(x)];
                        for (auto [g, c] : occ)
                            if (c == 1) {
                                best_r = i;
                                best_g = g;
                                break;
                            }
                    }
                    if (best_r == -1)
                        return false;
                    // r = u x^s v  =>  x = (v u)^(-s)
                    Word r = relators_[best_r];
                    std::size_t pos = 0;
                    while (std::abs(r[pos]) != best_g)
                        ++pos;
                    int s = r[pos] > 0 ? 1 : -1;
                    Word vu(r.begin() + pos + 1, r.end());
                    vu.insert(vu.end(), r.begin(), r.begin() + pos);
                    Word w;
                    if (s > 0) {
                        for (auto it = vu.rbegin(); it != vu.rend(); ++it)
                            w.push_back(-*it);
                    }
                    else
                        w = vu;
                    word_[best_g - 1] = std::move(w);
                    relators_.erase(relators_.begin() + best_r);
                    return true;
                }

                GroupPresentation renumbered()
                {
                    vector<int> id(n_, 0);
                    int k = 0;
                    for (int g = 0; g < n_; ++g)
                        if (parent_[g] == g && ! dead_[g] && ! word_[g])
                            id[g] = ++k;
                    GroupPresentation out;
                    out.generators = k;
                    for (auto & r : relators_) {
                        Word w;
                        for (int x : r)
                            w.push_back((x > 0 ? 1 : -1) * id[std::abs(x) - 1]);
                        out.relators.push_back(std::move(w));
                    }
                    return out;
                }

                int n_;
                vector<int> parent_, sign_;
                vector<char> dead_;
                vector<std::optional<Word>> word_;
                vector<Word> relators_;
        };
    }

    TietzeResult tietze_simplify(const GroupPresentation & p, std::int64_t budget)
    {
        if (! p.is_well_formed())
            throw InputError("relator letter out of range");
        return Simplifier(p).run(budget);
    }
}
