// Command-line frontend: solve, oracle, verify, generate, render, bench, and
// capabilities. stdout carries exclusively the JSON/SVG payload; diagnostics
// go to stderr. Exit codes: 0 ok, 1 check failed, 2 unsupported, 3 input
// error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncm/dispatch.hpp"
#include "ncm/generate.hpp"
#include "ncm/io.hpp"
#include "ncm/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ncm::IOError("E_IO", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ncm::IOError("E_IO", "cannot open " + path + " for writing");
    out << data;
}

ncm::Kind parse_kind(const std::string& s) {
    if (s == "general") return ncm::Kind::General;
    if (s == "convex") return ncm::Kind::Convex;
    if (s == "circle") return ncm::Kind::Circle;
    if (s == "doubly_collinear") return ncm::Kind::DoublyCollinear;
    throw ncm::IOError("E_SCHEMA", "unknown kind: " + s);
}

struct BenchRow {
    long size;
    double median_seconds;
};

double fit_loglog_slope(const std::vector<BenchRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        double x = std::log(static_cast<double>(r.size));
        double y = std::log(std::max(r.median_seconds, 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct BenchSuite {
    ncm::GenConfig cfg_template;               // n is filled per size (= 2n points)
    ncm::VariantSpec variant;
    std::string algorithm = "auto";
};

BenchSuite bench_suite(const std::string& name) {
    using namespace ncm;
    if (name == "circle-maxmin") return {{Kind::Circle, Mode::Mono, 1, 0, "default"}, kMaxMin};
    if (name == "dc-minmin")
        return {{Kind::DoublyCollinear, Mode::Bi, 1, 0, "default"}, kMinMin};
    if (name == "convex-dp-maxmin")
        return {{Kind::Convex, Mode::Mono, 1, 0, "default"}, kMaxMin, "dp"};
    if (name == "general-minmin")
        return {{Kind::General, Mode::Mono, 1, 0, "fixed-hull"}, kMinMin};
    throw ncm::IOError("E_SCHEMA", "unknown bench suite: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"optimal non-crossing perfect matchings"};
    app.require_subcommand(1);

    // ---- solve / oracle
    std::string in_path, variant_s = "minmin", algorithm = "auto";
    bool emit_matching = false;
    std::size_t oracle_cap = ncm::kOracleDefaultCap;

    CLI::App* solve = app.add_subcommand("solve", "solve a variant on an instance");
    solve->add_option("--in", in_path, "instance file (or - for stdin)")->required();
    solve->add_option("--variant", variant_s, "minmin|maxmax|minmax|maxmin")->required();
    solve->add_option("--algorithm", algorithm, "auto|dp|oracle|specialized");
    solve->add_flag("--emit-matching", emit_matching, "include the matching in the output");
    solve->add_option("--oracle-cap", oracle_cap, "max points for --algorithm oracle");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solver");
    oracle->add_option("--in", in_path, "instance file (or - for stdin)")->required();
    oracle->add_option("--variant", variant_s, "minmin|maxmax|minmax|maxmin")->required();
    oracle->add_flag("--emit-matching", emit_matching, "include the matching in the output");
    oracle->add_option("--cap", oracle_cap, "enumeration cap (points)");

    // ---- verify
    std::string matching_path, claim;
    CLI::App* verify = app.add_subcommand("verify", "validate a matching file");
    verify->add_option("--in", in_path, "instance file")->required();
    verify->add_option("--matching", matching_path, "matching file")->required();
    verify->add_option("--variant", variant_s, "variant for --claim");
    verify->add_option("--claim", claim, "claimed objective value (exact rational)");

    // ---- generate
    std::string kind_s = "general", mode_s = "mono", family = "default", out_path = "-";
    int gen_n = 1;
    std::uint64_t seed = 0;
    CLI::App* generate = app.add_subcommand("generate", "emit a seeded random instance");
    generate->add_option("--kind", kind_s, "general|convex|circle|doubly_collinear")
        ->required();
    generate->add_option("--mode", mode_s, "mono|bi");
    generate->add_option("--n", gen_n, "number of pairs (2n points)")->required();
    generate->add_option("--seed", seed, "PRNG seed");
    generate->add_option("--family", family, "generator family");
    generate->add_option("--out", out_path, "output file (default stdout)");

    // ---- render
    bool solve_for_render = false;
    CLI::App* render = app.add_subcommand("render", "render an instance (and matching) as SVG");
    render->add_option("--in", in_path, "instance file")->required();
    render->add_option("--matching", matching_path, "matching file");
    render->add_option("--variant", variant_s, "solve this variant and highlight its witness");
    render->add_flag("--solve", solve_for_render, "solve --variant and render the result");
    render->add_option("--out", out_path, "output SVG file")->required();

    // ---- bench
    std::string suite_name, sizes_s;
    int repeats = 5;
    CLI::App* bench = app.add_subcommand("bench", "timing and scaling report");
    bench->add_option("--suite", suite_name,
                      "circle-maxmin|dc-minmin|convex-dp-maxmin|general-minmin")
        ->required();
    bench->add_option("--sizes", sizes_s, "comma-separated point counts (2n)")->required();
    bench->add_option("--repeats", repeats, "timed repetitions per size (median)");
    bench->add_option("--seed", seed, "PRNG seed");

    CLI::App* caps = app.add_subcommand("capabilities", "print the dispatch table");
    (void)caps;

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed() || oracle->parsed()) {
        ncm::Instance inst = ncm::parse_instance(read_file(in_path));
        ncm::VariantSpec v = ncm::parse_variant(variant_s);
        ncm::SolveOutcome out =
            oracle->parsed()
                ? ncm::solve_with_algorithm(inst, v, "oracle", true, oracle_cap)
                : ncm::solve_with_algorithm(inst, v, algorithm, true, oracle_cap);
        std::cout << ncm::serialize_outcome(inst, out, emit_matching);
        return 0;
    }

    if (verify->parsed()) {
        ncm::Instance inst = ncm::parse_instance(read_file(in_path));
        ncm::Matching m = ncm::parse_matching(read_file(matching_path));
        ncm::ValidationReport rep = ncm::validate_matching(inst, m);
        ncm::json j;
        j["perfect"] = rep.perfect;
        j["non_crossing"] = rep.non_crossing;
        j["color_ok"] = rep.color_ok;
        bool ok = rep.all();
        if (!claim.empty()) {
            bool value_match = false;
            if (ok) {
                ncm::VariantSpec v = ncm::parse_variant(variant_s);
                auto [val, w] = ncm::objective_value(inst, m, v.inner);
                value_match = val == ncm::parse_scalar(claim);
                j["value"] = ncm::to_string(val);
            }
            j["value_match"] = value_match;
            ok = ok && value_match;
        }
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    if (generate->parsed()) {
        ncm::GenConfig cfg;
        cfg.kind = parse_kind(kind_s);
        cfg.mode = kind_s == "doubly_collinear"
                       ? ncm::Mode::Bi
                       : (mode_s == "bi" ? ncm::Mode::Bi : ncm::Mode::Mono);
        cfg.n = gen_n;
        cfg.seed = seed;
        cfg.family = family;
        ncm::Instance inst = ncm::generate_instance(cfg);
        ncm::json j;
        j["generator"] = std::string(ncm::kGeneratorPrng) + " seed=" + std::to_string(seed) +
                         " family=" + family;
        ncm::json inst_json = ncm::instance_to_json(inst);
        for (auto& [k, val] : inst_json.items()) j[k] = std::move(val);
        write_file(out_path, j.dump(2) + "\n");
        return 0;
    }

    if (render->parsed()) {
        ncm::Instance inst = ncm::parse_instance(read_file(in_path));
        std::optional<ncm::Matching> m;
        ncm::IndexPair witness{-1, -1};
        if (!matching_path.empty()) {
            m = ncm::parse_matching(read_file(matching_path));
            if (render->count("--variant")) {
                auto [val, w] = ncm::objective_value(inst, *m,
                                                     ncm::parse_variant(variant_s).inner);
                witness = w;
            }
        } else if (solve_for_render || render->count("--variant")) {
            ncm::SolveOutcome out = ncm::solve_auto(inst, ncm::parse_variant(variant_s));
            m = out.matching;
            witness = out.witness;
        }
        write_file(out_path, ncm::render_svg(inst, m, witness));
        return 0;
    }

    if (bench->parsed()) {
        BenchSuite suite = bench_suite(suite_name);
        std::vector<long> sizes;
        {
            std::stringstream ss(sizes_s);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stol(tok));
        }
        if (sizes.empty()) throw ncm::IOError("E_SCHEMA", "empty --sizes");
        std::vector<BenchRow> rows;
        for (long n2 : sizes) {
            ncm::GenConfig cfg = suite.cfg_template;
            cfg.n = static_cast<int>(n2 / 2);
            cfg.seed = seed + static_cast<std::uint64_t>(n2);
            ncm::Instance inst = ncm::generate_instance(cfg);  // excluded from timing
            volatile int sink = 0;
            auto run_once = [&]() {
                ncm::SolveOutcome out = ncm::solve_with_algorithm(
                    inst, suite.variant, suite.algorithm, /*want_matching=*/false);
                sink = sink + out.witness.first;
            };
            run_once();  // warmup
            std::vector<double> times;
            for (int r = 0; r < repeats; ++r) {
                auto t0 = std::chrono::steady_clock::now();
                run_once();
                auto t1 = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration<double>(t1 - t0).count());
            }
            std::sort(times.begin(), times.end());
            rows.push_back({n2, times[times.size() / 2]});
            std::cerr << "bench " << suite_name << " 2n=" << n2 << " median="
                      << rows.back().median_seconds << "s\n";
        }
        ncm::json j;
        j["suite"] = suite_name;
        j["repeats"] = repeats;
        ncm::json table = ncm::json::array();
        for (const auto& r : rows) {
            ncm::json row;
            row["points"] = r.size;
            row["median_seconds"] = r.median_seconds;
            table.push_back(std::move(row));
        }
        j["table"] = std::move(table);
        j["loglog_slope"] = rows.size() >= 2 ? fit_loglog_slope(rows) : 0.0;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (caps->parsed()) {
        ncm::json arr = ncm::json::array();
        for (const ncm::Capability& c : ncm::capabilities()) {
            ncm::json row;
            row["kind"] = ncm::kind_name(c.kind);
            row["mode"] = c.mode == ncm::Mode::Mono ? "mono" : "bi";
            row["variant"] = ncm::variant_name(c.variant);
            row["supported"] = c.supported;
            if (c.supported) row["algorithm"] = c.algorithm;
            row["note"] = c.note;
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }

    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ncm::UnsupportedError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ncm::IOError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
