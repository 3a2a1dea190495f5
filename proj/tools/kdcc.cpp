// kdcc: k-diameter component connectivity from the command line.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "kdcc/commands.hpp"
#include "kdcc/io.hpp"

namespace {

using namespace kdcc;

struct Options {
    std::vector<std::string> target;
    std::string file;
    unsigned k = 2;
    std::uint64_t p = 0;
    std::size_t limit_n = OracleLimits{}.max_vertices;
    std::size_t limit_e = OracleLimits{}.max_edges;
    std::string json_path;
    std::string output;
    bool timing = false;
    bool greedy = false;
    bool mixed = false;
    std::string k_range = "2:6";
    std::uint64_t seed = 1;
    std::uint64_t count = 100;
    std::size_t n_max = 10;
};

FamilySpec parse_target(const std::vector<std::string>& target) {
    if (target.empty())
        throw std::invalid_argument("expected a family instance, e.g. 'Path 7'");
    std::vector<std::uint64_t> params;
    for (std::size_t i = 1; i < target.size(); ++i)
        params.push_back(Range::parse(target[i]).lo);
    return parse_family(target[0], params);
}

Instance parse_instance(const Options& o) {
    Instance in;
    if (!o.file.empty()) {
        if (!o.target.empty())
            throw std::invalid_argument("give either a family instance or --file, not both");
        in.file = o.file;
    } else {
        in.spec = parse_target(o.target);
    }
    return in;
}

void add_instance_args(CLI::App* cmd, Options& o) {
    cmd->add_option("target", o.target, "Family and parameters, e.g. Path 7 or CompleteBipartite 3 4");
    cmd->add_option("--file,-f", o.file, "Edge-list or DOT graph file (evaluated by the oracle)");
}

void add_limits(CLI::App* cmd, Options& o) {
    cmd->add_option("--limit-n", o.limit_n, "Oracle vertex limit")->envname("KDCC_LIMIT_N");
    cmd->add_option("--limit-e", o.limit_e, "Oracle edge limit");
}

void emit(const Json& report, const Options& o, double elapsed_ms) {
    Json out = report;
    if (o.timing)
        out["timing_ms"] = elapsed_ms;
    const std::string text = out.dump(2) + "\n";
    if (o.json_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.json_path);
    if (!file)
        throw std::runtime_error("cannot write " + o.json_path);
    file << text;
    std::cout << "report written to " << o.json_path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-diameter component connectivity: closed forms, witnesses and exact oracle"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Write the canonical edge list of a family instance");
    gen->add_option("target", o.target, "Family and parameters")->required();
    gen->add_option("--output,-o", o.output, "Output path (default: stdout)");

    auto* cv_cmd = app.add_subcommand("cv", "Vertex parameter CV_k");
    auto* cm_cmd = app.add_subcommand("cm", "Mixed parameter CM_k(G,p)");
    auto* curve_cmd = app.add_subcommand("curve", "All connectivity pairs (p, CM_k(G,p))");
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive vertex, edge and mixed search");
    auto* packing_cmd = app.add_subcommand("packing", "Vertex-disjoint geodesic k-path packing");
    for (auto* cmd : {cv_cmd, cm_cmd, curve_cmd, oracle_cmd, packing_cmd}) {
        add_instance_args(cmd, o);
        add_limits(cmd, o);
        cmd->add_option("--k", o.k, "Diameter threshold k")->required();
        cmd->add_option("--json", o.json_path, "Write the JSON report to this path");
        cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
    }
    cm_cmd->add_option("--p", o.p, "Number of deleted vertices")->required();
    auto* oracle_p = oracle_cmd->add_option("--p", o.p, "Also run the mixed search for this p");
    packing_cmd->add_flag("--greedy", o.greedy, "Greedy packing (not a certified maximum)");

    auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms with the oracle over a grid");
    verify_cmd->add_option("target", o.target,
                           "Family and parameter ranges, e.g. Path 1:12; or 'random' for the property driver")
        ->required();
    verify_cmd->add_option("--k", o.k_range, "k range LO:HI");
    verify_cmd->add_flag("--mixed", o.mixed, "Also compare the mixed parameter for every valid p");
    verify_cmd->add_option("--seed", o.seed, "Seed for the random property driver");
    verify_cmd->add_option("--count", o.count, "Number of random graphs");
    verify_cmd->add_option("--n-max", o.n_max, "Largest random graph");
    verify_cmd->add_option("--json", o.json_path, "Write the JSON report to this path");
    verify_cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
    add_limits(verify_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    const OracleLimits limits{o.limit_n, o.limit_e};

    try {
        if (gen->parsed()) {
            const std::string text = cmd_gen(parse_target(o.target));
            if (o.output.empty()) {
                std::cout << text;
            } else {
                std::ofstream file(o.output);
                if (!file)
                    throw std::runtime_error("cannot write " + o.output);
                file << text;
            }
            return exit_ok;
        }
        if (verify_cmd->parsed()) {
            const Range k = Range::parse(o.k_range);
            VerifyOutcome outcome;
            if (o.target.size() == 1 && (o.target[0] == "random" || o.target[0] == "Random")) {
                outcome = cmd_verify_random(o.count, o.seed, o.n_max, k, limits);
            } else {
                VerifyRequest req;
                req.family = o.target[0];
                for (std::size_t i = 1; i < o.target.size(); ++i)
                    req.params.push_back(Range::parse(o.target[i]));
                req.k = k;
                req.mixed = o.mixed;
                outcome = cmd_verify(req, limits);
            }
            emit(outcome.report, o, elapsed());
            const auto& summary = outcome.report["summary"];
            std::cerr << "matched " << summary["matched"] << ", mismatched " << summary["mismatched"]
                      << ", skipped " << summary["skipped"] << "\n";
            return outcome.mismatch ? exit_mismatch : exit_ok;
        }

        const Instance in = parse_instance(o);
        Json report;
        if (cv_cmd->parsed())
            report = cmd_cv(in, o.k, limits);
        else if (cm_cmd->parsed())
            report = cmd_cm(in, o.k, o.p, limits);
        else if (curve_cmd->parsed())
            report = cmd_curve(in, o.k, limits);
        else if (oracle_cmd->parsed())
            report = cmd_oracle(in, o.k, oracle_p->count() > 0 ? std::optional(o.p) : std::nullopt, limits);
        else
            report = cmd_packing(in, o.k, o.greedy, limits);
        emit(report, o, elapsed());
        return exit_ok;
    } catch (const LimitExceeded& e) {
        std::cerr << "kdcc: resource limit: " << e.what() << "\n";
        return exit_limit;
    } catch (const std::exception& e) {
        std::cerr << "kdcc: " << e.what() << "\n";
        return exit_usage;
    }
}
