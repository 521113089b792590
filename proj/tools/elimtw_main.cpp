#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elimtw.h"
#include "json.hpp"

namespace {

struct SolverFlags {
    std::string format = "auto";
    std::string dedup = "bloom";
    bool mmw = false;
    bool no_clique = false;
    bool no_improvement = false;
    int threads = 1;
    uint64_t max_layer_states = 10000000;
    int bloom_bits = 24;
    int bloom_hashes = 17;
    int start_k = -1;
};

int fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

etw_format to_format(const std::string& name) {
    if (name == "gr") return ETW_FORMAT_GR;
    if (name == "dimacs") return ETW_FORMAT_DIMACS;
    return ETW_FORMAT_AUTO;
}

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
    cmd->add_option("--format", flags.format, "input format")
        ->check(CLI::IsMember({"gr", "dimacs"}));
    cmd->add_option("--dedup", flags.dedup, "duplicate elimination strategy")
        ->check(CLI::IsMember({"bloom", "exact"}));
    cmd->add_flag("--mmw", flags.mmw, "prune with the minor-min-width bound");
    cmd->add_flag("--no-clique", flags.no_clique, "disable the clique suffix");
    cmd->add_flag("--no-improvement", flags.no_improvement,
                  "disable disjoint-path edge addition");
    cmd->add_option("--threads", flags.threads, "worker threads per layer");
    cmd->add_option("--max-layer-states", flags.max_layer_states,
                    "layer capacity before truncation");
    cmd->add_option("--bloom-bits", flags.bloom_bits, "Bloom bits per element");
    cmd->add_option("--bloom-hashes", flags.bloom_hashes, "Bloom probe count");
    cmd->add_option("--start-k", flags.start_k,
                    "first width to test, replacing the computed lower bound");
}

etw_options to_options(const CLI::App* cmd, const SolverFlags& flags, bool emit_order) {
    etw_options opts;
    etw_options_init(&opts);
    opts.dedup = flags.dedup == "exact" ? ETW_DEDUP_EXACT : ETW_DEDUP_BLOOM;
    if (opts.dedup == ETW_DEDUP_EXACT) {
        for (const char* name : {"--bloom-bits", "--bloom-hashes"}) {
            if (cmd->count(name) > 0)
                std::cerr << "warning: " << name << " is ignored with --dedup exact\n";
        }
    }
    opts.use_mmw = flags.mmw ? 1 : 0;
    opts.use_clique = flags.no_clique ? 0 : 1;
    opts.use_improvement = flags.no_improvement ? 0 : 1;
    opts.thread_count = flags.threads;
    opts.max_layer_states = flags.max_layer_states;
    opts.bloom_bits_per_element = flags.bloom_bits;
    opts.bloom_hashes = flags.bloom_hashes;
    opts.start_k = flags.start_k;
    opts.emit_order = emit_order ? 1 : 0;
    return opts;
}

etw_graph* parse_instance(const std::string& path, const std::string& format,
                          std::string& error) {
    std::string text;
    if (!read_file(path, text)) {
        error = "cannot read " + path;
        return nullptr;
    }
    etw_graph* g = nullptr;
    char err[512] = {0};
    if (etw_graph_parse(text.c_str(), text.size(), to_format(format), &g, err,
                        sizeof err) != ETW_OK) {
        error = path + ": " + err;
        return nullptr;
    }
    return g;
}

int run_solve(const CLI::App* cmd, const std::string& file, const SolverFlags& flags,
              const std::string& order_out, const std::string& stats_out) {
    std::string error;
    etw_graph* g = parse_instance(file, flags.format, error);
    if (g == nullptr) return fail(error);

    etw_options opts = to_options(cmd, flags, !order_out.empty());
    etw_result* r = nullptr;
    char err[512] = {0};
    if (etw_solve(g, &opts, &r, err, sizeof err) != ETW_OK) {
        etw_graph_free(g);
        return fail(err);
    }

    int code;
    if (etw_result_kind_of(r) == ETW_RESULT_EXACT) {
        std::cout << "treewidth = " << etw_result_value(r) << "\n";
        code = 0;
    } else {
        std::cout << "treewidth >= " << etw_result_value(r) << " (capacity exceeded)\n";
        code = 2;
    }

    if (!order_out.empty()) {
        if (etw_result_kind_of(r) != ETW_RESULT_EXACT) {
            std::cerr << "warning: no order written, result is only a lower bound\n";
        } else {
            std::ofstream out(order_out);
            const int* order = etw_result_order(r);
            size_t len = etw_result_order_len(r);
            for (size_t i = 0; i < len; ++i) out << (i > 0 ? " " : "") << order[i] + 1;
            out << "\n";
            if (!out) code = fail("cannot write " + order_out);
        }
    }
    if (!stats_out.empty()) {
        std::ofstream out(stats_out);
        out << etw_result_stats_json(r);
        if (!out) code = fail("cannot write " + stats_out);
    }

    etw_result_free(r);
    etw_graph_free(g);
    return code;
}

int run_verify(const std::string& graph_file, const std::string& order_file,
               const std::string& format) {
    std::string error;
    etw_graph* g = parse_instance(graph_file, format, error);
    if (g == nullptr) return fail(error);

    std::string text;
    if (!read_file(order_file, text)) {
        etw_graph_free(g);
        return fail("cannot read " + order_file);
    }
    std::istringstream in(text);
    std::vector<int> order;
    long long value = 0;
    while (in >> value) order.push_back(static_cast<int>(value - 1));
    if (!in.eof()) {
        etw_graph_free(g);
        return fail(order_file + ": order file contains a non-integer token");
    }

    int width = -1;
    int valid = 0;
    char err[512] = {0};
    etw_status st =
        etw_check_order(g, order.data(), order.size(), &width, &valid, err, sizeof err);
    etw_graph_free(g);
    if (st != ETW_OK) return fail(err);

    std::cout << "width = " << width << "\n";
    std::cout << (valid ? "decomposition valid" : "decomposition invalid") << "\n";
    return valid ? 0 : 1;
}

int run_bench(const CLI::App* cmd, const std::string& dir, const SolverFlags& flags) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return fail(dir + " is not a directory");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (ext == ".gr" || ext == ".col" || ext == ".dimacs")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cout << "no instances found in " << dir << "\n";
        return 0;
    }

    std::printf("%-24s %6s %8s %10s %14s\n", "name", "|V|", "tw", "time_s", "exp");
    etw_options opts = to_options(cmd, flags, false);
    int failures = 0;
    for (const auto& path : files) {
        std::string name = path.stem().string();
        std::string error;
        etw_graph* g = parse_instance(path.string(), flags.format, error);
        if (g == nullptr) {
            std::printf("%-24s failed: %s\n", name.c_str(), error.c_str());
            ++failures;
            continue;
        }
        etw_result* r = nullptr;
        char err[512] = {0};
        auto begin = std::chrono::steady_clock::now();
        etw_status st = etw_solve(g, &opts, &r, err, sizeof err);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - begin;
        if (st != ETW_OK) {
            std::printf("%-24s failed: %s\n", name.c_str(), err);
            etw_graph_free(g);
            ++failures;
            continue;
        }
        uint64_t emitted = 0;
        try {
            nlohmann::json stats = nlohmann::json::parse(etw_result_stats_json(r));
            emitted = stats["totals"]["emitted"].get<uint64_t>();
        } catch (const nlohmann::json::exception&) {
        }
        std::string tw = etw_result_kind_of(r) == ETW_RESULT_EXACT
                             ? std::to_string(etw_result_value(r))
                             : ">=" + std::to_string(etw_result_value(r));
        std::printf("%-24s %6d %8s %10.2f %14llu\n", name.c_str(),
                    etw_graph_vertex_count(g), tw.c_str(), elapsed.count(),
                    static_cast<unsigned long long>(emitted));
        etw_result_free(r);
        etw_graph_free(g);
    }
    if (failures > 0) {
        std::cerr << failures << " instance(s) failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact treewidth via layered elimination-ordering search"};
    app.set_version_flag("--version", etw_version());
    app.require_subcommand(1);

    std::string solve_file;
    std::string order_out;
    std::string stats_out;
    SolverFlags solve_flags;
    CLI::App* solve_cmd = app.add_subcommand("solve", "compute treewidth of one instance");
    solve_cmd->add_option("file", solve_file, "graph file")->required();
    add_solver_flags(solve_cmd, solve_flags);
    solve_cmd->add_option("--order-out", order_out,
                          "write an optimal elimination order here");
    solve_cmd->add_option("--stats-out", stats_out, "write the JSON run report here");

    std::string verify_graph;
    std::string verify_order_file;
    std::string verify_format = "auto";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check an elimination order against a graph");
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->add_option("order", verify_order_file, "order file, 1-indexed")
        ->required();
    verify_cmd->add_option("--format", verify_format, "input format")
        ->check(CLI::IsMember({"gr", "dimacs"}));

    std::string bench_dir;
    SolverFlags bench_flags;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "solve every instance in a directory");
    bench_cmd->add_option("dir", bench_dir, "instance directory")->required();
    add_solver_flags(bench_cmd, bench_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (solve_cmd->parsed())
        return run_solve(solve_cmd, solve_file, solve_flags, order_out, stats_out);
    if (verify_cmd->parsed())
        return run_verify(verify_graph, verify_order_file, verify_format);
    return run_bench(bench_cmd, bench_dir, bench_flags);
}
