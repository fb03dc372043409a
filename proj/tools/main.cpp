#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clubedit/cced.hpp"
#include "clubedit/ccedvs.hpp"
#include "clubedit/graph.hpp"
#include "clubedit/io.hpp"
#include "clubedit/metrics.hpp"
#include "clubedit/oracle.hpp"
#include "clubedit/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

struct Failure {
    int code;
    std::string message;
};

clubedit::Graph load_graph(const std::string& path, std::optional<double> min_weight) {
    std::ifstream in(path);
    if (!in)
        throw Failure{kExitInput, "cannot open input file '" + path + "'"};
    try {
        return clubedit::parse_edge_list(in, min_weight);
    } catch (const clubedit::ParseError& e) {
        throw Failure{kExitInput, path + ": " + e.what()};
    }
}

std::vector<std::set<clubedit::VertexId>> load_vertex_sets(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Failure{kExitInput, "cannot open file '" + path + "'"};
    try {
        return clubedit::read_vertex_sets(in);
    } catch (const clubedit::ParseError& e) {
        throw Failure{kExitInput, path + ": " + e.what()};
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Failure{kExitInput, "cannot open output file '" + path + "'"};
    return out;
}

struct ClusterArgs {
    std::string algo;
    std::string input;
    std::string output;
    std::string log_path;
    double min_weight = 0.0;
    bool has_min_weight = false;
};

int cmd_cluster(const ClusterArgs& a) {
    auto graph = load_graph(a.input, a.has_min_weight ? std::optional<double>(a.min_weight)
                                                      : std::nullopt);

    auto start = std::chrono::steady_clock::now();
    auto [clustering, log] =
        a.algo == "2cced" ? clubedit::run_2cced(graph) : clubedit::run_2ccedvs(graph);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::string why;
    if (!clubedit::verify_solution(graph, log, clustering, &why))
        throw Failure{kExitVerify, "internal verification failed: " + why};

    auto out = open_output(a.output);
    clubedit::write_vertex_sets(out, clustering.origin_clusters);
    std::string log_path = a.log_path.empty() ? a.output + ".log" : a.log_path;
    auto log_out = open_output(log_path);
    clubedit::write_edit_log(log_out, log);

    std::printf("cost=%zu clusters=%zu runtime_seconds=%.3f\n", log.size(), clustering.size(),
                elapsed.count());
    return kExitOk;
}

struct EvalArgs {
    std::string input;
    std::string clusters;
    std::string truth;
    std::string log_path;
    std::string output;
    double min_weight = 0.0;
    bool has_min_weight = false;
};

int cmd_eval(const EvalArgs& a) {
    auto graph = load_graph(a.input, a.has_min_weight ? std::optional<double>(a.min_weight)
                                                      : std::nullopt);
    auto clusters = load_vertex_sets(a.clusters);
    if (clusters.empty())
        throw Failure{kExitInput, "cluster file '" + a.clusters + "' is empty"};

    clubedit::QualityReport report;
    report.num_clusters = static_cast<long long>(clusters.size());
    try {
        auto intra = clubedit::intra_cluster_distance(graph, clusters);
        auto inter = clubedit::inter_cluster_distance(graph, clusters);
        if (intra.defined())
            report.intra_cd = intra.average;
        if (inter.defined())
            report.inter_cd = inter.average;
        report.excluded_pairs = intra.excluded + inter.excluded;
        if (!a.truth.empty()) {
            auto truth = load_vertex_sets(a.truth);
            report.f_score = clubedit::overlap_f_score(clusters, truth);
        }
    } catch (const std::invalid_argument& e) {
        throw Failure{kExitInput, e.what()};
    }
    if (!a.log_path.empty()) {
        std::ifstream log_in(a.log_path);
        if (!log_in)
            throw Failure{kExitInput, "cannot open log file '" + a.log_path + "'"};
        try {
            report.cost = clubedit::edit_cost(clubedit::read_edit_log(log_in));
        } catch (const clubedit::ParseError& e) {
            throw Failure{kExitInput, a.log_path + ": " + e.what()};
        }
    }

    std::string text = clubedit::format_report(report);
    if (a.output.empty()) {
        std::cout << text;
    } else {
        auto out = open_output(a.output);
        out << text;
    }
    return kExitOk;
}

struct GenerateArgs {
    clubedit::SynthParams params;
    std::string output;
    std::string truth;
};

int cmd_generate(const GenerateArgs& a) {
    try {
        auto [graph, truth] = clubedit::generate_planted(a.params);
        auto out = open_output(a.output);
        clubedit::write_edge_list(out, graph);
        auto truth_out = open_output(a.truth);
        clubedit::write_vertex_sets(truth_out, truth.communities);
    } catch (const std::invalid_argument& e) {
        throw Failure{kExitUsage, e.what()};
    }
    return kExitOk;
}

struct OracleArgs {
    std::string algo;
    std::string input;
    int kmax = 8;
};

int cmd_oracle(const OracleArgs& a) {
    auto graph = load_graph(a.input, std::nullopt);
    clubedit::OracleBudget budget;
    budget.kmax = a.kmax;
    try {
        auto result = a.algo == "2cced" ? clubedit::exact_2cced(graph, budget)
                                        : clubedit::exact_2ccedvs(graph, budget);
        if (result)
            std::printf("%d\n", *result);
        else
            std::printf("exceeds kmax\n");
    } catch (const clubedit::BudgetError& e) {
        throw Failure{kExitBudget, e.what()};
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edits a graph into a disjoint union of 2-clubs (diameter-2 clusters) by "
                 "edge deletion and vertex splitting; includes evaluation metrics, a planted "
                 "benchmark generator, and exact small-instance solvers."};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "Cluster a graph and write clusters + edit log");
    cluster->add_option("--algo", cluster_args.algo, "Algorithm: 2cced or 2ccedvs")
        ->required()
        ->check(CLI::IsMember({"2cced", "2ccedvs"}));
    cluster->add_option("--input", cluster_args.input, "Edge-list file")->required();
    cluster->add_option("--output", cluster_args.output, "Clusters file to write")->required();
    cluster->add_option("--log", cluster_args.log_path,
                        "Edit-log file to write (default: <output>.log)");
    auto* cmw = cluster->add_option("--min-weight", cluster_args.min_weight,
                                    "Drop input edges with weight below this");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Score a clusters file against a graph");
    eval->add_option("--input", eval_args.input, "Edge-list file")->required();
    eval->add_option("--clusters", eval_args.clusters, "Clusters file to score")->required();
    eval->add_option("--truth", eval_args.truth, "Ground-truth communities file");
    eval->add_option("--log", eval_args.log_path, "Edit-log file (reports its cost)");
    eval->add_option("--output", eval_args.output, "Report file (default: stdout)");
    auto* emw = eval->add_option("--min-weight", eval_args.min_weight,
                                 "Drop input edges with weight below this");

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "Generate a planted-community benchmark");
    generate->add_option("--vertices", gen_args.params.n, "Vertex count");
    generate->add_option("--communities", gen_args.params.communities, "Community count");
    generate->add_option("--overlap", gen_args.params.overlap_fraction,
                         "Fraction of vertices with a second community");
    generate->add_option("--p-in", gen_args.params.p_in, "Intra-community edge probability");
    generate->add_option("--p-out", gen_args.params.p_out, "Inter-community edge probability");
    generate->add_option("--seed", gen_args.params.seed, "RNG seed");
    generate->add_option("--output", gen_args.output, "Edge-list file to write")->required();
    generate->add_option("--truth", gen_args.truth, "Truth file to write")->required();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Exact minimum edit cost on a tiny graph");
    oracle->add_option("--algo", oracle_args.algo, "Problem: 2cced or 2ccedvs")
        ->required()
        ->check(CLI::IsMember({"2cced", "2ccedvs"}));
    oracle->add_option("--input", oracle_args.input, "Edge-list file")->required();
    oracle->add_option("--kmax", oracle_args.kmax, "Refuse answers above this cost")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cluster_args.has_min_weight = cmw->count() > 0;
    eval_args.has_min_weight = emw->count() > 0;

    try {
        if (cluster->parsed())
            return cmd_cluster(cluster_args);
        if (eval->parsed())
            return cmd_eval(eval_args);
        if (generate->parsed())
            return cmd_generate(gen_args);
        return cmd_oracle(oracle_args);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
