#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "girthlab/analysis.hpp"
#include "girthlab/apfree.hpp"
#include "girthlab/bounds.hpp"
#include "girthlab/io.hpp"
#include "girthlab/matrix.hpp"
#include "girthlab/regular.hpp"
#include "girthlab/semiregular.hpp"
#include "girthlab/version.hpp"

using nlohmann::json;

namespace {

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Every run reports what it ran, on what, and what it produced.
struct Manifest {
    std::vector<std::string> argv;
    json parameters = json::object();
    json inputs = json::object();
    json outputs = json::object();

    void add_input(const std::string& path) {
        inputs[path] = fnv1a64_hex(read_file_bytes(path));
    }
    void add_output(const std::string& path) {
        outputs[path] = fnv1a64_hex(read_file_bytes(path));
    }

    json to_json() const {
        json j;
        j["argv"] = argv;
        j["parameters"] = parameters;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["version"] = girthlab::kVersion;
        j["timestamp_utc"] = utc_timestamp();
        return j;
    }
};

unsigned threads_from_env() {
    const char* env = std::getenv("GIRTHLAB_THREADS");
    if (!env) return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument("GIRTHLAB_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

void write_matrix_file(const girthlab::ParityCheckMatrix& h,
                       const std::string& path, const std::string& format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file: " + path);
    if (format == "alist")
        girthlab::write_alist(out, h);
    else if (format == "dense")
        girthlab::write_dense(out, h);
    else if (format == "csv")
        girthlab::write_csv_edges(out, h);
    else
        throw std::invalid_argument("unknown format: " + format);
    if (!out) throw std::runtime_error("write failed: " + path);
}

json stats_to_json(const girthlab::GraphStats& s) {
    json j;
    j["m"] = s.m;
    j["n"] = s.n;
    if (s.girth)
        j["girth"] = *s.girth;
    else
        j["girth"] = "acyclic";
    j["column_degree_set"] = s.column_degree_set;
    j["row_degree_set"] = s.row_degree_set;
    if (s.regular_pair)
        j["regular_pair"] = {s.regular_pair->first, s.regular_pair->second};
    else
        j["regular_pair"] = nullptr;
    return j;
}

json dmin_to_json(const girthlab::DistanceResult& d) {
    json j;
    j["kind"] = d.kind == girthlab::DistanceResult::Kind::exact ? "exact"
                                                                : "lower_bound";
    j["value"] = d.value;
    j["strategy"] = d.strategy == girthlab::DistanceResult::Strategy::kernel_enumeration
                        ? "kernel_enumeration"
                        : "weight_capped_search";
    if (d.witness) {
        j["witness"] = d.witness->support;
        j["witness_weight"] = d.witness->weight();
    }
    if (d.cap) j["cap"] = *d.cap;
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

girthlab::ApFreeSequence resolve_sequence(const std::string& source, long long t) {
    if (std::filesystem::exists(source)) {  // an actual file wins over keywords
        std::ifstream in(source);
        if (!in) throw std::runtime_error("cannot open file: " + source);
        return girthlab::read_sequence(in);
    }
    if (source == "greedy") return girthlab::greedy_3ap_free(t);
    if (source == "behrend") {
        long long M = std::max<long long>(10, 4 * t);
        for (;;) {
            auto seq = girthlab::behrend_sequence(M);
            if (seq.size() >= static_cast<std::size_t>(t)) return seq;
            M *= 2;
        }
    }
    throw std::runtime_error("cannot open file: " + source);
}

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"girth-8 bipartite graph constructions, verifiers, and check-node bounds"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a matrix and write it to a file");
    construct->require_subcommand(1);

    int wc = 2, wr = 2;
    std::string out_path, format = "alist", labels_path;
    auto* reg = construct->add_subcommand("regular", "girth-8 (wc, wr)-regular graph");
    reg->add_option("--wc", wc, "column weight")->required();
    reg->add_option("--wr", wr, "row weight")->required();
    reg->add_option("--out", out_path, "output file")->required();
    reg->add_option("--format", format, "alist|dense|csv");
    reg->add_option("--labels", labels_path, "also write column labels as CSV");

    long long t = 2;
    std::string sequence_source = "greedy";
    auto* semi = construct->add_subcommand(
        "semiregular", "girth-8 column-weight-3 graph from a 3-AP-free sequence");
    semi->add_option("--t", t, "side length, n = t^2")->required();
    semi->add_option("--sequence", sequence_source,
                     "greedy|behrend|<file> (file wins when it exists)");
    semi->add_option("--out", out_path, "output file")->required();
    semi->add_option("--format", format, "alist|dense|csv");

    // analyze
    std::string in_path;
    bool want_girth = false, want_stats = false, want_dmin = false;
    int dmin_cap = 10;
    std::string strategy_name = "auto";
    auto* analyze = app.add_subcommand("analyze", "verify properties of an alist matrix");
    analyze->add_option("input", in_path, "alist file")->required();
    analyze->add_flag("--girth", want_girth, "report the exact girth");
    analyze->add_flag("--stats", want_stats, "report dimensions, degrees, girth");
    analyze->add_flag("--dmin", want_dmin, "report the minimum distance");
    analyze->add_option("--dmin-cap", dmin_cap, "weight cap for the distance search");
    analyze->add_option("--strategy", strategy_name, "auto|kernel|capped");

    // bound
    int bound_girth = 8;
    long long bound_n = 1;
    int bound_wc = 2;
    auto* bound_cmd = app.add_subcommand("bound", "lower bound on check nodes for a girth");
    bound_cmd->add_option("--girth", bound_girth, "8|10|12|14|16")->required();
    bound_cmd->add_option("--wc", bound_wc, "column weight")->required();
    bound_cmd->add_option("--n", bound_n, "variable node count")->required();

    // sweep
    long long n_from = 0, n_to = 0;
    int points = 0;
    auto* sweep = app.add_subcommand("sweep", "bound over a geometric n grid, CSV output");
    sweep->add_option("--girth", bound_girth, "8|10|12|14|16")->required();
    sweep->add_option("--wc", bound_wc, "column weight")->required();
    sweep->add_option("--n-from", n_from, "grid start")->required();
    sweep->add_option("--n-to", n_to, "grid end")->required();
    sweep->add_option("--points", points, "grid size (>= 4)")->required();
    sweep->add_option("--out", out_path, "CSV file")->required();

    // convert
    auto* convert = app.add_subcommand("convert", "re-export an alist matrix");
    convert->add_option("input", in_path, "alist file")->required();
    convert->add_option("--out", out_path, "output file")->required();
    convert->add_option("--format", format, "alist|dense|csv")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    Manifest manifest;
    for (int i = 0; i < argc; ++i) manifest.argv.push_back(argv[i]);

    try {
        if (reg->parsed() || semi->parsed()) {
            girthlab::ParityCheckMatrix h = [&] {
                if (reg->parsed()) {
                    manifest.parameters = {{"kind", "regular"}, {"wc", wc},
                                           {"wr", wr},          {"format", format}};
                    auto g = girthlab::build_h_reg(wc, wr);
                    if (!labels_path.empty()) {
                        std::ofstream lout(labels_path, std::ios::binary);
                        if (!lout) throw std::runtime_error("cannot open file: " + labels_path);
                        girthlab::write_labels_csv(lout, g);
                    }
                    return g.matrix;
                }
                manifest.parameters = {{"kind", "semiregular"},
                                       {"t", t},
                                       {"sequence", sequence_source},
                                       {"format", format}};
                auto seq = resolve_sequence(sequence_source, t);
                return girthlab::build_h_s(t, seq);
            }();
            write_matrix_file(h, out_path, format);
            manifest.add_output(out_path);
            if (!labels_path.empty()) manifest.add_output(labels_path);

            json report = stats_to_json(girthlab::stats(h));
            report["command"] = "construct";
            report["out"] = out_path;
            report["format"] = format;
            report["manifest"] = manifest.to_json();
            emit(report);
        } else if (analyze->parsed()) {
            manifest.parameters = {{"dmin_cap", dmin_cap}, {"strategy", strategy_name}};
            manifest.add_input(in_path);
            std::ifstream in(in_path);
            if (!in) throw std::runtime_error("cannot open file: " + in_path);
            auto h = girthlab::read_alist(in);

            if (!want_girth && !want_stats && !want_dmin) want_stats = true;
            json report;
            report["command"] = "analyze";
            report["input"] = in_path;
            if (want_girth) {
                auto g = girthlab::girth(h);
                report["girth"] = g ? json(*g) : json("acyclic");
            }
            if (want_stats) report["stats"] = stats_to_json(girthlab::stats(h));
            if (want_dmin) {
                girthlab::DistanceStrategy strategy;
                if (strategy_name == "auto")
                    strategy = girthlab::DistanceStrategy::automatic;
                else if (strategy_name == "kernel")
                    strategy = girthlab::DistanceStrategy::kernel_enumeration;
                else if (strategy_name == "capped")
                    strategy = girthlab::DistanceStrategy::weight_capped_search;
                else
                    throw std::invalid_argument("unknown strategy: " + strategy_name);
                report["dmin"] = dmin_to_json(girthlab::min_distance(
                    h, dmin_cap, strategy, threads_from_env()));
            }
            report["manifest"] = manifest.to_json();
            emit(report);
        } else if (bound_cmd->parsed()) {
            manifest.parameters = {{"girth", bound_girth}, {"wc", bound_wc}, {"n", bound_n}};
            auto rep = girthlab::bounds::bound({bound_girth, bound_wc, bound_n});
            json report;
            report["command"] = "bound";
            report["girth"] = bound_girth;
            report["wc"] = bound_wc;
            report["n"] = bound_n;
            report["bound"] = rep.m_lower;
            report["bound_ceil"] = static_cast<long long>(std::ceil(rep.m_lower - 1e-12));
            report["root"] = rep.root ? json(*rep.root) : json(nullptr);
            report["residual"] = rep.residual;
            report["manifest"] = manifest.to_json();
            emit(report);
        } else if (sweep->parsed()) {
            manifest.parameters = {{"girth", bound_girth}, {"wc", bound_wc},
                                   {"n_from", n_from},     {"n_to", n_to},
                                   {"points", points}};
            if (n_from < 1 || n_from >= n_to)
                throw std::invalid_argument("need 1 <= n_from < n_to");
            if (points < 4) throw std::invalid_argument("need points >= 4");

            std::vector<long long> grid;
            for (int i = 0; i < points; ++i) {
                double f = static_cast<double>(i) / (points - 1);
                double v = std::exp(std::log(static_cast<double>(n_from)) * (1 - f) +
                                    std::log(static_cast<double>(n_to)) * f);
                long long ni = i == 0 ? n_from : (i == points - 1 ? n_to : std::llround(v));
                if (grid.empty() || ni > grid.back()) grid.push_back(ni);
            }
            if (grid.size() < 4) throw std::invalid_argument("grid too small");

            double slope = girthlab::bounds::scaling_exponent(bound_girth, bound_wc, grid);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open file: " + out_path);
            out << "n,bound,exponent_fit\n";
            for (long long n : grid) {
                auto rep = girthlab::bounds::bound({bound_girth, bound_wc, n});
                out << n << ',' << format_double(rep.m_lower) << ','
                    << format_double(slope) << '\n';
            }
            if (!out) throw std::runtime_error("write failed: " + out_path);
            manifest.add_output(out_path);

            json report;
            report["command"] = "sweep";
            report["exponent_fit"] = slope;
            report["points"] = grid.size();
            report["out"] = out_path;
            report["manifest"] = manifest.to_json();
            emit(report);
        } else if (convert->parsed()) {
            manifest.parameters = {{"format", format}};
            manifest.add_input(in_path);
            std::ifstream in(in_path);
            if (!in) throw std::runtime_error("cannot open file: " + in_path);
            auto h = girthlab::read_alist(in);
            write_matrix_file(h, out_path, format);
            manifest.add_output(out_path);

            json report;
            report["command"] = "convert";
            report["input"] = in_path;
            report["out"] = out_path;
            report["format"] = format;
            report["n"] = h.n();
            report["m"] = h.m();
            report["manifest"] = manifest.to_json();
            emit(report);
        }
    } catch (const girthlab::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
