#ifndef ODDWALK_CLI_HH
#define ODDWALK_CLI_HH 1

#include <oddwalk/homsearch.hh>
#include <oddwalk/report.hh>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace oddwalk
{
    // Exit codes: 0 success, 1 hypothesis or verification failure, 2 usage.
    int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);
    int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

    struct DhomConfig
    {
        int n = 2;
        int r = 2;
        std::vector<int> sizes;                 // N values
        std::vector<std::uint64_t> seeds;
        bool fold = true;
        FoldOptions fold_options;
    };

    // One row per (N, seed) and a per-N summary.
    Json experiment_dhom_floor(const DhomConfig & cfg);

    // "named:petersen", "named:cycle:5", ... or an edge-list file.
    Graph load_graph(const std::string & spec);

    std::string read_file(const std::string & path);
    void write_file(const std::string & path, std::string_view text);
}

#endif
