#ifndef ODDWALK_REPORT_HH
#define ODDWALK_REPORT_HH 1

#include <oddwalk/closure.hh>
#include <oddwalk/graph.hh>
#include <oddwalk/group.hh>
#include <oddwalk/homotopy.hh>
#include <oddwalk/homsearch.hh>
#include <oddwalk/ncomplex.hh>
#include <oddwalk/pipeline.hh>
#include <oddwalk/walk.hh>

#include <json.hpp>

#include <string>

namespace oddwalk
{
    using Json = nlohmann::ordered_json;

    inline constexpr int kSchemaVersion = 1;
    inline constexpr const char * kToolkitVersion = "oddwalk 0.1.0";

    // schema_version, toolkit, subcommand, config, in that order.
    Json report_header(const std::string & subcommand, Json config);

    // Every key named "timing", at any depth, removed.
    Json strip_timing(Json j);

    Json to_json(const EdgeId & e);
    Json to_json(const Walk & w);
    Json to_json(const Graph & g);
    Json to_json(const Coloring & c);
    Json to_json(const GraphHom & phi);
    Json to_json(const InvariantSpec & s);
    Json to_json(const AbelianGroup & a);
    Json to_json(const GroupPresentation & p);
    Json to_json(const HomotopyVerdict & v);
    Json to_json(const PipelineTrace & t);
    Json to_json(const FoldTrace & t);
    Json to_json(const EarChain & c);

    // "v color" per line, coloured vertices only.
    std::string format_coloring(const Coloring & c);
}

#endif
