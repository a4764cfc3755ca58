#include <oddwalk/report.hh>

using std::string;

namespace oddwalk
{
    Json report_header(const string & subcommand, Json config)
    {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["toolkit"] = kToolkitVersion;
        j["subcommand"] = subcommand;
        j["config"] = std::move(config);
        return j;
    }

    Json strip_timing(Json j)
    {
        if (j.is_object()) {
            j.erase("timing");
            for (auto & [k, v] : j.items())
                v = strip_timing(v);
        }
        else if (j.is_array())
            for (auto & v : j)
                v = strip_timing(v);
        return j;
    }

    Json to_json(const EdgeId & e)
    {
        return Json::array({e.u, e.v});
    }

    Json to_json(const Walk & w)
    {
        return Json(w.vertices);
    }

    Json to_json(const Graph & g)
    {
        Json edges = Json::array();
        for (auto & e : g.edges())
            edges.push_back(to_json(e));
        return Json{{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
    }

    Json to_json(const Coloring & c)
    {
        return Json{{"palette_size", c.palette_size}, {"colors_used", c.colors_used()}, {"color", c.color}};
    }

    Json to_json(const GraphHom & phi)
    {
        return Json{{"source_order", phi.source.order()}, {"target_order", phi.target.order()}, {"map", phi.map}};
    }

    Json to_json(const InvariantSpec & s)
    {
        Json j{{"stable_set", s.stable_set}};
        j["anchor"] = s.anchor ? Json(*s.anchor) : Json(nullptr);
        return j;
    }

    Json to_json(const AbelianGroup & a)
    {
        Json torsion = Json::array();
        for (auto & t : a.torsion)
            torsion.push_back(t.get_str());
        return Json{{"free_rank", a.free_rank}, {"torsion", torsion}, {"describe", a.describe()}};
    }

    Json to_json(const GroupPresentation & p)
    {
        return Json{{"generators", p.generators}, {"relators", p.relators}};
    }

    Json to_json(const HomotopyVerdict & v)
    {
        Json moves = Json::array();
        for (auto & m : v.moves)
            moves.push_back(format_move(m));
        return Json{{"status", to_string(v.status)}, {"method", v.method}, {"separation", v.separation}, {"moves", moves},
            {"states", v.states}};
    }

    Json to_json(const PipelineTrace & t)
    {
        Json j;
        j["cycle"] = to_json(t.cycle);
        j["r"] = t.r;
        j["assertion"] = to_string(t.assertion);
        j["target_freeness"] = t.target_freeness == SearchStatus::no ? "verified" :
            t.target_freeness == SearchStatus::unknown ? "unknown" : "violated";
        j["image_size"] = t.image_size;
        j["pivot"] = Json{{"edge", to_json(t.pivot.e)}, {"spec", to_json(t.pivot.spec)}, {"odd_cycle", to_json(t.pivot.odd_cycle)},
            {"rounds", t.pivot.rounds}, {"sizes", t.pivot.sizes}};
        j["split"] = Json{{"a", t.split.a}, {"b_size", t.split.b.size()}};
        j["branch"] = to_string(t.branch);
        if (t.branch == PipelineBranch::product_4color)
            j["sides"] = Json{{"a", t.a_side.color}, {"b", t.b_side.color}};
        else {
            auto & c = *t.closure;
            j["closure"] = Json{{"class", c.closure}, {"cycle", to_json(c.cycle)}, {"h1_edges", c.h1_edges},
                {"palette", c.coloring.palette_size}, {"assigned", c.assigned}};
            j["gamma0"] = t.gamma0.color;
            Json prov = Json::array();
            for (auto & p : t.provenance)
                prov.push_back(Json::array({p.root, p.distance}));
            j["provenance"] = prov;
        }
        j["coloring"] = to_json(t.coloring);
        return j;
    }

    Json to_json(const FoldTrace & t)
    {
        Json steps = Json::array();
        for (auto & s : t.steps) {
            Json checks = Json::array();
            for (auto & c : s.checks)
                checks.push_back(Json{{"length", c.length},
                    {"status", c.status == SearchStatus::no ? "absent" : c.status == SearchStatus::yes ? "present" : "unknown"},
                    {"expansions", c.expansions}, {"incremental", c.incremental}});
            steps.push_back(Json{{"merge", Json::array({s.a, s.b})}, {"order_after", s.order_after}, {"checks", checks}});
        }
        return Json{{"steps", steps}, {"quotient", to_json(t.quotient)}, {"map", t.map}, {"attempts", t.attempts},
            {"rejected", t.rejected}, {"budget_exhausted", t.budget_exhausted}, {"input_free", t.input_free}};
    }

    Json to_json(const EarChain & c)
    {
        Json chain = Json::array();
        for (auto & e : c.chain)
            chain.push_back(to_json(e));
        Json steps = Json::array();
        for (auto & s : c.steps)
            steps.push_back(Json{{"ear", to_json(s.ear.path)}, {"odd_cycle_length", s.odd_cycle.length()},
                {"odd_cycle", to_json(s.odd_cycle)}, {"edge", to_json(s.edge)}, {"square", s.square},
                {"intermediate", s.intermediate}, {"construction", s.construction}});
        return Json{{"chain", chain}, {"squares", c.squares}, {"steps", steps}};
    }

    string format_coloring(const Coloring & c)
    {
        string out;
        for (std::size_t v = 0; v < c.color.size(); ++v)
            if (c.color[v] != Coloring::kUncoloured)
                out += std::to_string(v) + " " + std::to_string(c.color[v]) + "\n";
        return out;
    }
}
