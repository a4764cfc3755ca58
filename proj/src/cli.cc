#include <oddwalk/cli.hh>
#include <oddwalk/errors.hh>
#include <oddwalk/homotopy.hh>
#include <oddwalk/kernels.hh>
#include <oddwalk/ncomplex.hh>
#include <oddwalk/pipeline.hh>
#include <oddwalk/sphere.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

using std::string;
using std::uint64_t;
using std::vector;

namespace oddwalk
{
    string read_file(const string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write_file(const string & path, std::string_view text)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InputError("cannot write " + path);
        out << text;
    }

    namespace
    {
        int to_int(const string & s, const string & what)
        {
            try {
                std::size_t used = 0;
                int v = std::stoi(s, &used);
                if (used != s.size())
                    throw std::invalid_argument(s);
                return v;
            }
            catch (const std::exception &) {
                throw UsageError("bad " + what + " '" + s + "'");
            }
        }

        template <typename T>
        vector<T> parse_list(const string & text, const string & what)
        {
            vector<T> out;
            std::stringstream ss(text);
            string item;
            while (std::getline(ss, item, ','))
                out.push_back(static_cast<T>(to_int(item, what)));
            if (out.empty())
                throw UsageError("empty " + what + " list");
            return out;
        }

        EdgeId parse_edge(const string & s)
        {
            auto dash = s.find('-');
            if (dash == string::npos)
                throw UsageError("edge must be written u-v, got '" + s + "'");
            return EdgeId(to_int(s.substr(0, dash), "edge"), to_int(s.substr(dash + 1), "edge"));
        }

        struct Common
        {
            uint64_t seed = 1;
            std::int64_t budget = -1;
            string out;
            bool json = false;
            string report;
        };

        void add_common(CLI::App * sub, Common & c)
        {
            sub->add_option("--seed", c.seed, "random seed");
            sub->add_option("--budget", c.budget, "search budget");
            sub->add_option("--out", c.out, "artifact output file");
            sub->add_flag("--json", c.json, "print the JSON report");
            sub->add_option("--report", c.report, "write the JSON report to a file");
        }

        struct Outcome
        {
            Json report;
            string summary;
            int code = 0;
        };

        Json graph_summary(const Graph & g)
        {
            return Json{{"order", g.order()}, {"size", g.size()}};
        }

        bool antipodally_symmetric(const ApproxGraph & g)
        {
            for (auto & e : g.graph.edges())
                if (! g.graph.adjacent(SphereSample::antipode(e.u), SphereSample::antipode(e.v)))
                    return false;
            return true;
        }

        GraphHom load_hom(const string & path, const Graph & g, const Graph & h)
        {
            return parse_hom(read_file(path), g, h);
        }
    }

    Graph load_graph(const string & spec)
    {
        if (spec.starts_with("named:")) {
            auto rest = spec.substr(6);
            auto colon = rest.find(':');
            string name = rest.substr(0, colon);
            int k = colon == string::npos ? 0 : to_int(rest.substr(colon + 1), "graph size");
            if (name == "petersen")
                return named::petersen();
            if (name == "homotopy_example")
                return named::homotopy_example();
            if (name == "complete" && k > 0)
                return named::complete(k);
            if (name == "cycle" && k >= 3)
                return named::cycle(k);
            if (name == "path" && k > 0)
                return named::path(k);
            if (name == "star" && k > 0)
                return named::star(k);
            throw UsageError("unknown named graph '" + spec + "'");
        }
        return parse_graph(read_file(spec));
    }

    Json experiment_dhom_floor(const DhomConfig & cfg)
    {
        if (cfg.n < 1 || cfg.r < 1 || cfg.sizes.empty() || cfg.seeds.empty())
            throw UsageError("experiment needs n >= 1, r >= 1 and non-empty N and seed lists");
        for (int N : cfg.sizes)
            if (N < 1)
                throw UsageError("N must be positive");
        const double eps = std::numbers::pi / (2 * cfg.r + 1);
        const double mu = cap_measure(cfg.n, eps);
        Json config{{"n", cfg.n}, {"r", cfg.r}, {"epsilon", eps}, {"N", cfg.sizes}, {"seeds", cfg.seeds}, {"fold", cfg.fold},
            {"beam", cfg.fold_options.beam}, {"fold_budget", cfg.fold_options.budget}, {"stop_at", cfg.fold_options.stop_at}};
        Json report = report_header("experiment-dhom", config);
        report["cap_measure"] = mu;

        Json rows = Json::array(), timing = Json::array(), summary = Json::array();
        for (int N : cfg.sizes) {
            double lo = 1.0, hi = 0.0, sum = 0.0;
            int floor_lo = -1, floor_hi = -1;
            for (uint64_t seed : cfg.seeds) {
                auto t0 = std::chrono::steady_clock::now();
                auto g = sample_approximation(cfg.n, eps, N, seed);
                double ratio = min_degree_ratio(g.graph);
                auto og = kernels::odd_girth(g.graph);
                Json row{{"N", N}, {"seed", seed}, {"order", g.graph.order()}, {"size", g.graph.size()},
                    {"min_degree", g.graph.min_degree()}, {"min_degree_ratio", ratio}, {"ratio_over_mu", ratio / mu},
                    {"odd_girth", og ? Json(*og) : Json(nullptr)}, {"antipodal_symmetric", antipodally_symmetric(g)}};
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                sum += ratio;
                if (cfg.fold) {
                    auto opt = cfg.fold_options;
                    opt.seed = seed;
                    auto t = fold_search(g.graph, {2 * cfg.r + 1}, opt);
                    int floor = t.quotient.order();
                    row["fold_floor"] = floor;
                    row["fold_steps"] = t.steps.size();
                    row["fold_attempts"] = t.attempts;
                    row["fold_budget_exhausted"] = t.budget_exhausted;
                    row["fold_hom_verified"] = verify_hom(fold_hom(g.graph, t));
                    floor_lo = floor_lo == -1 ? floor : std::min(floor_lo, floor);
                    floor_hi = std::max(floor_hi, floor);
                }
                rows.push_back(row);
                timing.push_back(Json{{"N", N}, {"seed", seed},
                    {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}});
            }
            Json s{{"N", N}, {"ratio_min", lo}, {"ratio_max", hi}, {"ratio_mean", sum / cfg.seeds.size()},
                {"mean_over_mu", sum / cfg.seeds.size() / mu}};
            if (cfg.fold) {
                s["floor_min"] = floor_lo;
                s["floor_max"] = floor_hi;
            }
            summary.push_back(s);
        }
        report["rows"] = rows;
        report["summary"] = summary;
        report["timing"] = Json{{"runs", timing}};
        return report;
    }


    int run_cli(const vector<string> & args, std::ostream & out, std::ostream & err)
    {
        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }

    namespace
    {
        string status_word(SearchStatus s)
        {
            return s == SearchStatus::no ? "absent" : s == SearchStatus::yes ? "present" : "unknown";
        }

        Json error_report(const string & subcommand, const string & kind, const string & message, const string & cert)
        {
            Json r = report_header(subcommand, Json::object());
            r["error"] = Json{{"kind", kind}, {"message", message}};
            if (! cert.empty())
                r["error"]["certificate"] = cert;
            return r;
        }
    }

    int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
    {
        CLI::App app{"Odd cycles, walk homotopy and Borsuk graph experiments", "oddwalk"};
        app.require_subcommand(1);
        Common common;
        vector<std::pair<CLI::App *, std::function<Outcome()>>> commands;

        auto budget_or = [&](std::int64_t fallback) { return common.budget >= 0 ? common.budget : fallback; };

        // gen-borsuk
        int gb_n = 2, gb_r = 2, gb_N = 1000;
        string gb_eps = "pi/(2r+1)", gb_sample, gb_xref;
        auto * gb = app.add_subcommand("gen-borsuk", "sample an antipodally closed Borsuk graph approximation");
        gb->add_option("--n", gb_n, "sphere dimension");
        gb->add_option("--r", gb_r, "odd cycle parameter");
        gb->add_option("--eps", gb_eps, "pi/(2r+1), pi/k or a decimal");
        gb->add_option("--N", gb_N, "number of random points, doubled by antipodes");
        gb->add_option("--sample", gb_sample, "write the point dump");
        gb->add_option("--xref", gb_xref, "write the vertex to point map");
        add_common(gb, common);
        commands.emplace_back(gb, [&]() -> Outcome {
            if (gb_n < 1 || gb_N < 1 || gb_r < 0)
                throw UsageError("gen-borsuk needs n >= 1 and N >= 1");
            double eps = parse_epsilon(gb_eps, gb_r);
            auto t0 = std::chrono::steady_clock::now();
            auto g = sample_approximation(gb_n, eps, gb_N, common.seed);
            Json r = report_header("gen-borsuk", Json{{"n", gb_n}, {"r", gb_r}, {"eps", gb_eps}, {"N", gb_N}, {"seed", common.seed}});
            double mu = cap_measure(gb_n, eps);
            double ratio = min_degree_ratio(g.graph);
            auto og = kernels::odd_girth(g.graph);
            bool sym = antipodally_symmetric(g);
            r["epsilon"] = eps;
            r["graph"] = graph_summary(g.graph);
            r["cap_measure"] = mu;
            r["min_degree_ratio"] = ratio;
            r["odd_girth"] = og ? Json(*og) : Json(nullptr);
            r["verification"] = Json{{"antipodal_symmetric", sym}};
            r["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            if (! common.out.empty())
                write_file(common.out, serialize_graph(g.graph));
            if (! gb_sample.empty())
                write_file(gb_sample, format_sample(g));
            if (! gb_xref.empty())
                write_file(gb_xref, format_xref(g));
            std::ostringstream s;
            s << "vertices " << g.graph.order() << " edges " << g.graph.size() << " min_degree_ratio " << ratio
              << " cap_measure " << mu << " odd_girth " << (og ? std::to_string(*og) : "none") << "\n";
            return {r, s.str(), sym ? 0 : 1};
        });

        // odd-girth
        string og_graph;
        auto * ogc = app.add_subcommand("odd-girth", "length of a shortest odd cycle");
        ogc->add_option("--graph", og_graph, "edge list or named:...")->required();
        add_common(ogc, common);
        commands.emplace_back(ogc, [&]() -> Outcome {
            auto g = load_graph(og_graph);
            Json r = report_header("odd-girth", Json{{"graph", og_graph}});
            auto og = kernels::odd_girth(g);
            r["graph"] = graph_summary(g);
            r["odd_girth"] = og ? Json(*og) : Json(nullptr);
            bool ok = true;
            if (og) {
                auto c = has_cycle_of_length(g, *og, budget_or(kDefaultCycleBudget));
                ok = c.status != SearchStatus::no;
                if (c.status == SearchStatus::yes) {
                    ok = make_walk(g, c.cycle).is_cycle_in(g);
                    r["cycle"] = c.cycle;
                }
                r["verification"] = Json{{"cycle_found", status_word(c.status)}, {"serial_agrees", odd_girth(g) == og}};
                ok = ok && odd_girth(g) == og;
            }
            else {
                ok = is_bipartite(g).bipartite;
                r["verification"] = Json{{"bipartite", ok}};
            }
            return {r, "odd_girth " + (og ? std::to_string(*og) : string("none")) + "\n", ok ? 0 : 1};
        });

        // closure
        string cl_graph, cl_target, cl_hom, cl_edge;
        auto * cl = app.add_subcommand("closure", "C4 closure classes of a graph, or the classes induced by a homomorphism");
        cl->add_option("--graph", cl_graph, "graph (the source when --hom is given)")->required();
        cl->add_option("--target", cl_target, "target graph");
        cl->add_option("--hom", cl_hom, "homomorphism file");
        cl->add_option("--edge", cl_edge, "report the class of this edge, written u-v");
        add_common(cl, common);
        commands.emplace_back(cl, [&]() -> Outcome {
            if (cl_hom.empty() != cl_target.empty())
                throw UsageError("--hom and --target go together");
            auto g = load_graph(cl_graph);
            Json r = report_header("closure", Json{{"graph", cl_graph}, {"target", cl_target}, {"hom", cl_hom}, {"edge", cl_edge}});
            ClosurePartition part;
            if (cl_hom.empty())
                part = c4_partition(g);
            else
                part = phi_partition(load_hom(cl_hom, g, load_graph(cl_target)));
            r["kind"] = part.kind == ClosurePartition::Kind::c4_in_target ? "c4" : "phi";
            r["classes"] = part.count();
            Json sizes = Json::array();
            for (auto & c : part.classes)
                sizes.push_back(c.size());
            r["class_sizes"] = sizes;
            std::size_t covered = 0;
            for (auto & c : part.classes)
                covered += c.size();
            bool ok = covered == static_cast<std::size_t>(g.size());
            r["verification"] = Json{{"partition_covers_edges", ok}};
            if (! cl_edge.empty()) {
                auto e = parse_edge(cl_edge);
                int id = part.class_of.at(g.edge_index_of(e.u, e.v));
                Json members = Json::array();
                for (int i : part.classes[id])
                    members.push_back(to_json(g.edge(i)));
                r["edge_class"] = Json{{"id", id}, {"edges", members}};
            }
            if (! common.out.empty())
                write_file(common.out, format_partition(g, part));
            return {r, format_partition(g, part), ok ? 0 : 1};
        });

        // invariants
        string in_g, in_h, in_hom, in_walk;
        auto * inv = app.add_subcommand("invariants", "intersection invariants of a closed walk");
        inv->add_option("--g", in_g, "source graph")->required();
        inv->set_help_flag("--help", "print this help and exit");
        inv->add_option("--h", in_h, "target graph");
        inv->add_option("--hom", in_hom, "homomorphism file, identity when omitted");
        inv->add_option("--walk", in_walk, "closed walk such as 0,1,2,0")->required();
        add_common(inv, common);
        commands.emplace_back(inv, [&]() -> Outcome {
            if (in_hom.empty() != in_h.empty())
                throw UsageError("--hom and --h go together");
            auto g = load_graph(in_g);
            auto phi = in_hom.empty() ? GraphHom::identity(g) : load_hom(in_hom, g, load_graph(in_h));
            auto w = make_walk(g, parse_walk(in_walk).vertices);
            Json r = report_header("invariants", Json{{"g", in_g}, {"h", in_h}, {"hom", in_hom}, {"walk", in_walk}});
            r["walk"] = Json{{"length", w.length()}, {"closed", w.closed()}, {"parity", w.parity()}};
            if (! w.closed())
                throw InputError("invariants need a closed walk");
            auto f = EdgeMultiset::of_walk(g, w);
            auto part = phi_partition(phi);
            Json values = Json::array();
            std::ostringstream s;
            auto record = [&](const string & name, const InvariantSpec & spec) {
                Json row{{"set", name}, {"value", eval_invariant(spec, f, phi, part)}};
                Json anchored = Json::array();
                for (Vertex u = 0; u < g.order(); ++u) {
                    InvariantSpec a = spec;
                    a.anchor = u;
                    anchored.push_back(eval_invariant(a, f, phi, part));
                }
                row["anchored"] = anchored;
                s << name << " " << row["value"].get<int>() << "\n";
                values.push_back(row);
            };
            record("all", InvariantSpec::all_edges(g));
            for (int c = 0; c < part.count(); ++c)
                record("class " + std::to_string(c), InvariantSpec::of_class(part, c));
            r["invariants"] = values;
            r["verification"] = Json{{"hom_valid", verify_hom(phi)}, {"walk_in_graph", w.is_walk_in(g)}};
            return {r, s.str(), 0};
        });

        // homotopy
        string ho_graph, ho_p, ho_q;
        int ho_length_cap = -1;
        auto * ho = app.add_subcommand("homotopy", "decide whether two walks are homotopic");
        ho->add_option("--graph", ho_graph, "graph")->required();
        ho->add_option("--p", ho_p, "first walk")->required();
        ho->add_option("--q", ho_q, "second walk")->required();
        ho->add_option("--length-cap", ho_length_cap, "longest intermediate walk");
        add_common(ho, common);
        commands.emplace_back(ho, [&]() -> Outcome {
            auto g = load_graph(ho_graph);
            auto p = make_walk(g, parse_walk(ho_p).vertices), q = make_walk(g, parse_walk(ho_q).vertices);
            HomotopyCaps caps;
            caps.length_cap = ho_length_cap;
            if (common.budget >= 0)
                caps.state_cap = common.budget;
            auto t0 = std::chrono::steady_clock::now();
            auto v = are_homotopic(g, p, q, caps);
            Json r = report_header("homotopy", Json{{"graph", ho_graph}, {"p", ho_p}, {"q", ho_q}, {"length_cap", ho_length_cap},
                {"state_cap", caps.state_cap}});
            r["verdict"] = to_json(v);
            bool ok = true;
            if (v.status == HomotopyStatus::homotopic) {
                ok = replay_moves(g, p, v.moves).vertices == q.vertices;
                r["verification"] = Json{{"replay_reaches_q", ok}};
                if (! common.out.empty())
                    write_file(common.out, format_moves(v.moves));
            }
            r["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            return {r, to_string(v.status) + "\n" + (v.status == HomotopyStatus::homotopic ? format_moves(v.moves) : ""), ok ? 0 : 1};
        });

        // simply-connected
        string sc_graph;
        auto * sc = app.add_subcommand("simply-connected", "simple connectivity through the neighbourhood complex");
        sc->add_option("--graph", sc_graph, "graph")->required();
        add_common(sc, common);
        commands.emplace_back(sc, [&]() -> Outcome {
            auto g = load_graph(sc_graph);
            auto t0 = std::chrono::steady_clock::now();
            auto rep = check_simply_connected(g, budget_or(kDefaultTietzeBudget));
            Json r = report_header("simply-connected", Json{{"graph", sc_graph}, {"budget", budget_or(kDefaultTietzeBudget)}});
            r["status"] = to_string(rep.status);
            r["group_status"] = to_string(rep.group_status);
            r["h1"] = to_json(rep.h1);
            r["presentation"] = Json{{"generators_before", rep.generators_before}, {"relators_before", rep.relators_before},
                {"generators_after", rep.generators_after}, {"relators_after", rep.relators_after}, {"steps", rep.steps}};
            r["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            return {r, to_string(rep.status) + " h1 " + rep.h1.describe() + "\n", 0};
        });

        // color-pipeline
        string cp_g, cp_h, cp_hom, cp_cycle, cp_trace;
        int cp_r = 2;
        bool cp_sc = false, cp_cyclic = false;
        auto * cp = app.add_subcommand("color-pipeline", "bounded colouring through a homomorphism to a C_{2r+1}-free graph");
        cp->add_option("--g", cp_g, "source graph")->required();
        cp->set_help_flag("--help", "print this help and exit");
        cp->add_option("--h", cp_h, "target graph")->required();
        cp->add_option("--hom", cp_hom, "homomorphism file")->required();
        cp->add_option("--cycle", cp_cycle, "odd cycle of the source, closed")->required();
        cp->add_option("--r", cp_r, "forbidden cycle C_{2r+1}");
        cp->add_flag("--assert-sc", cp_sc, "assert the source is simply connected");
        cp->add_flag("--assert-cyclic", cp_cyclic, "assert the source has cyclic fundamental group");
        cp->add_option("--trace", cp_trace, "write the trace JSON");
        add_common(cp, common);
        commands.emplace_back(cp, [&]() -> Outcome {
            if (cp_sc && cp_cyclic)
                throw UsageError("give at most one of --assert-sc and --assert-cyclic");
            auto g = load_graph(cp_g);
            auto phi = load_hom(cp_hom, g, load_graph(cp_h));
            auto c = make_walk(g, parse_walk(cp_cycle).vertices);
            auto assertion = cp_sc ? TopologyAssertion::simply_connected :
                cp_cyclic ? TopologyAssertion::cyclic_pi1 : TopologyAssertion::none;
            auto t0 = std::chrono::steady_clock::now();
            auto t = bounded_coloring_pipeline(phi, c, cp_r, assertion, budget_or(kDefaultCycleBudget));
            auto problem = validate_trace(phi, t);
            Json r = report_header("color-pipeline", Json{{"g", cp_g}, {"h", cp_h}, {"hom", cp_hom}, {"cycle", cp_cycle}, {"r", cp_r},
                {"assertion", to_string(assertion)}});
            r["trace"] = to_json(t);
            int bound = 8 * cp_r * cp_r;
            bool proper = t.coloring.is_proper(g);
            r["verification"] = Json{{"proper", proper}, {"colors_used", t.coloring.colors_used()},
                {"palette_size", t.coloring.palette_size}, {"bound", bound}, {"under_bound", t.coloring.palette_size < bound},
                {"trace_valid", problem.empty()}};
            if (! problem.empty())
                r["verification"]["problem"] = problem;
            r["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            if (! common.out.empty())
                write_file(common.out, format_coloring(t.coloring));
            if (! cp_trace.empty())
                write_file(cp_trace, strip_timing(r["trace"]).dump(2) + "\n");
            bool ok = proper && t.coloring.palette_size < bound && problem.empty();
            std::ostringstream s;
            s << "branch " << to_string(t.branch) << " palette " << t.coloring.palette_size << " used " << t.coloring.colors_used()
              << " bound " << bound << (ok ? " verified" : " FAILED") << "\n";
            return {r, s.str(), ok ? 0 : 1};
        });

        // ncomplex
        string nc_graph;
        auto * nc = app.add_subcommand("ncomplex", "neighbourhood complex");
        nc->add_option("--graph", nc_graph, "graph")->required();
        add_common(nc, common);
        commands.emplace_back(nc, [&]() -> Outcome {
            auto g = load_graph(nc_graph);
            auto k = build_ncomplex(g);
            int comps = 0;
            k.component_labels(&comps);
            Json r = report_header("ncomplex", Json{{"graph", nc_graph}});
            r["vertices"] = k.vertices().size();
            r["maximal_faces"] = k.maximal_faces().size();
            r["edges"] = k.edges().size();
            r["triangles"] = k.triangles().size();
            r["components"] = comps;
            if (! common.out.empty())
                write_file(common.out, format_complex(k));
            return {r, format_complex(k), 0};
        });

        // h1
        string h1_graph;
        auto * h1 = app.add_subcommand("h1", "first homology of the neighbourhood complex, per component");
        h1->add_option("--graph", h1_graph, "graph")->required();
        add_common(h1, common);
        commands.emplace_back(h1, [&]() -> Outcome {
            auto g = load_graph(h1_graph);
            auto k = build_ncomplex(g);
            auto t0 = std::chrono::steady_clock::now();
            Json comps = Json::array();
            std::ostringstream s;
            for (auto & part : k.components()) {
                auto group = h1_homology(part, budget_or(kDefaultBoundaryEntryCap));
                comps.push_back(Json{{"vertices", part.vertices()}, {"h1", to_json(group)}});
                s << "component of " << part.vertices().size() << " vertices: " << group.describe() << "\n";
            }
            Json r = report_header("h1", Json{{"graph", h1_graph}, {"entry_cap", budget_or(kDefaultBoundaryEntryCap)}});
            r["components"] = comps;
            r["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            return {r, s.str(), 0};
        });

        // hom-exists
        string he_g, he_h;
        auto * he = app.add_subcommand("hom-exists", "decide whether a homomorphism g -> h exists");
        he->add_option("--g", he_g, "source graph")->required();
        he->set_help_flag("--help", "print this help and exit");
        he->add_option("--h", he_h, "target graph")->required();
        add_common(he, common);
        commands.emplace_back(he, [&]() -> Outcome {
            auto g = load_graph(he_g), h = load_graph(he_h);
            auto res = hom_exists(g, h, budget_or(kDefaultNodeBudget));
            Json r = report_header("hom-exists", Json{{"g", he_g}, {"h", he_h}, {"node_budget", budget_or(kDefaultNodeBudget)}});
            r["status"] = to_string(res.status);
            r["nodes"] = res.nodes;
            bool ok = true;
            if (res.hom) {
                ok = verify_hom(*res.hom);
                r["map"] = res.hom->map;
                r["verification"] = Json{{"hom_valid", ok}};
                if (! common.out.empty())
                    write_file(common.out, serialize_hom(*res.hom));
            }
            r["timing"] = Json{{"seconds", res.seconds}};
            return {r, to_string(res.status) + "\n", ok ? 0 : 1};
        });

        // fold
        string fo_graph, fo_forbid = "5";
        FoldOptions fo_opt;
        auto * fo = app.add_subcommand("fold", "greedy beam search for small C_k-free homomorphic images");
        fo->add_option("--graph", fo_graph, "graph")->required();
        fo->add_option("--forbid", fo_forbid, "forbidden cycle lengths, comma separated");
        fo->add_option("--beam", fo_opt.beam, "beam width");
        fo->add_option("--stop-at", fo_opt.stop_at, "stop once the image has at most this many vertices");
        fo->add_option("--check-budget", fo_opt.check_budget, "expansions per cycle check");
        add_common(fo, common);
        commands.emplace_back(fo, [&]() -> Outcome {
            auto g = load_graph(fo_graph);
            auto lengths = parse_list<int>(fo_forbid, "cycle length");
            std::set<int> forbidden(lengths.begin(), lengths.end());
            auto opt = fo_opt;
            opt.seed = common.seed;
            if (common.budget >= 0)
                opt.budget = common.budget;
            auto t0 = std::chrono::steady_clock::now();
            auto t = fold_search(g, forbidden, opt);
            Json r = report_header("fold", Json{{"graph", fo_graph}, {"forbid", lengths}, {"beam", opt.beam}, {"budget", opt.budget},
                {"check_budget", opt.check_budget}, {"stop_at", opt.stop_at}, {"seed", opt.seed}});
            r["fold"] = to_json(t);
            bool ok = verify_hom(fold_hom(g, t));
            bool free = true;
            for (int k : forbidden)
                free = free && has_cycle_of_length(t.quotient, k, opt.check_budget).status == SearchStatus::no;
            r["verification"] = Json{{"hom_valid", ok}, {"quotient_free", free}};
            r["timing"] = Json{{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
            if (! common.out.empty())
                write_file(common.out, serialize_graph(t.quotient));
            std::ostringstream s;
            s << "quotient vertices " << t.quotient.order() << " edges " << t.quotient.size() << " merges " << t.steps.size() << "\n";
            return {r, s.str(), ok && free ? 0 : 1};
        });

        // experiment-dhom
        DhomConfig dh;
        string dh_sizes = "1000", dh_seeds = "1,2,3,4,5";
        bool dh_no_fold = false;
        auto * dx = app.add_subcommand("experiment-dhom", "min-degree ratios and fold floors of Borsuk graph samples");
        dx->add_option("--n", dh.n, "sphere dimension");
        dx->add_option("--r", dh.r, "odd cycle parameter");
        dx->add_option("--N", dh_sizes, "sample sizes, comma separated");
        dx->add_option("--seeds", dh_seeds, "seeds, comma separated");
        dx->add_option("--beam", dh.fold_options.beam, "fold beam width");
        dx->add_option("--stop-at", dh.fold_options.stop_at, "fold stop size");
        dx->add_flag("--no-fold", dh_no_fold, "skip the fold search");
        add_common(dx, common);
        commands.emplace_back(dx, [&]() -> Outcome {
            auto cfg = dh;
            cfg.sizes = parse_list<int>(dh_sizes, "N");
            for (int v : parse_list<int>(dh_seeds, "seed")) {
                if (v < 0)
                    throw UsageError("seeds must be non-negative");
                cfg.seeds.push_back(static_cast<uint64_t>(v));
            }
            cfg.fold = ! dh_no_fold;
            if (common.budget >= 0)
                cfg.fold_options.budget = common.budget;
            auto r = experiment_dhom_floor(cfg);
            if (! common.out.empty())
                write_file(common.out, strip_timing(r).dump(2) + "\n");
            std::ostringstream s;
            s << "N ratio_min ratio_max ratio_mean cap_measure" << (cfg.fold ? " floor_min floor_max" : "") << "\n";
            for (auto & row : r["summary"]) {
                s << row["N"].get<int>() << " " << row["ratio_min"].get<double>() << " " << row["ratio_max"].get<double>() << " "
                  << row["ratio_mean"].get<double>() << " " << r["cap_measure"].get<double>();
                if (cfg.fold)
                    s << " " << row["floor_min"].get<int>() << " " << row["floor_max"].get<int>();
                s << "\n";
            }
            bool ok = true;
            for (auto & row : r["rows"])
                ok = ok && row["antipodal_symmetric"].get<bool>() && (! cfg.fold || row["fold_hom_verified"].get<bool>());
            return {r, s.str(), ok ? 0 : 1};
        });

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        for (auto & [sub, action] : commands) {
            if (! sub->parsed())
                continue;
            string name = sub->get_name();
            auto emit = [&](const Json & r) {
                if (common.json)
                    out << r.dump(2) << "\n";
                if (! common.report.empty())
                    write_file(common.report, r.dump(2) + "\n");
            };
            try {
                auto o = action();
                emit(o.report);
                if (! common.json)
                    out << o.summary;
                return o.code;
            }
            catch (const UsageError & e) {
                err << "oddwalk " << name << ": usage: " << e.what() << "\n";
                return 2;
            }
            catch (const HypothesisError & e) {
                err << "oddwalk " << name << ": hypothesis failed: " << e.what() << "\n";
                if (! e.certificate.empty())
                    err << "certificate: " << e.certificate << "\n";
                emit(error_report(name, "hypothesis", e.what(), e.certificate));
                return 1;
            }
            catch (const Error & e) {
                string kind = dynamic_cast<const ParseError *>(&e) ? "parse" : dynamic_cast<const InputError *>(&e) ? "input" :
                    dynamic_cast<const RefusalError *>(&e) ? "refusal" : dynamic_cast<const ViolationError *>(&e) ? "violation" : "error";
                err << "oddwalk " << name << ": " << kind << ": " << e.what() << "\n";
                emit(error_report(name, kind, e.what(), ""));
                return 1;
            }
        }
        return 2;
    }
}
