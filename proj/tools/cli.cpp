#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linex/bounds.hpp"
#include "linex/errors.hpp"
#include "linex/extractor.hpp"
#include "linex/linear_code.hpp"
#include "linex/matrix_io.hpp"
#include "linex/oracle.hpp"
#include "linex/reed_muller.hpp"
#include "linex/source.hpp"
#include "linex/stats.hpp"
#include "linex/sweep.hpp"

namespace linex::cli {
namespace {

struct CodeOptions {
    std::string code;
    std::string matrix;
    std::string weights;
    std::size_t cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

struct GridOptions {
    std::vector<double> eps;
    double eps_min;
    double eps_max;
    std::size_t steps;
};

void add_code_options(CLI::App* sub, CodeOptions& o, bool with_weights) {
    auto* code = sub->add_option("--code", o.code, "Code family selector, e.g. rm:2,4");
    auto* matrix = sub->add_option("--matrix", o.matrix, "Generator matrix file (\"k n\" header, k rows of 0/1)");
    code->excludes(matrix);
    if (with_weights) sub->add_option("--weights", o.weights, "Weight distribution file (\"n k\" header, \"l A_l\" lines)");
    sub->add_option("--cap", o.cap, "Largest dimension enumerated exhaustively")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1U, 256U));
}

void add_grid_options(CLI::App* sub, GridOptions& g) {
    sub->add_option("--eps", g.eps, "Explicit bias values (overrides the grid)")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--eps-min", g.eps_min, "Grid start")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    sub->add_option("--eps-max", g.eps_max, "Grid end")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    sub->add_option("--steps", g.steps, "Grid points, endpoints included")->capture_default_str();
}

std::vector<Bias> make_grid(const GridOptions& g) {
    if (g.eps.empty()) return linear_grid(g.eps_min, g.eps_max, g.steps);
    std::vector<Bias> grid;
    for (const auto e : g.eps) grid.emplace_back(e);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) throw ParameterError("--eps values must be strictly increasing");
    }
    return grid;
}

LinearCode parse_code_selector(const std::string& selector) {
    const std::string prefix = "rm:";
    if (selector.rfind(prefix, 0) != 0) {
        throw ParameterError("unknown code selector \"" + selector + "\" (expected rm:<r>,<m>)");
    }
    const auto body = selector.substr(prefix.size());
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw ParameterError("code selector \"" + selector + "\" must look like rm:<r>,<m>");
    unsigned r = 0;
    unsigned m = 0;
    try {
        std::size_t used = 0;
        r = static_cast<unsigned>(std::stoul(body.substr(0, comma), &used));
        if (used != comma) throw std::invalid_argument("r");
        const auto rest = body.substr(comma + 1);
        m = static_cast<unsigned>(std::stoul(rest, &used));
        if (used != rest.size()) throw std::invalid_argument("m");
    } catch (const std::logic_error&) {
        throw ParameterError("code selector \"" + selector + "\" must look like rm:<r>,<m>");
    }
    return rm_generator(r, m);
}

struct LoadedCode {
    std::optional<LinearCode> code;
    std::optional<WeightDistribution> external;
    std::string label;
    std::size_t n = 0;
    std::size_t k = 0;
};

LoadedCode load_code(const CodeOptions& o, bool need_generator) {
    LoadedCode lc;
    if (!o.code.empty()) {
        lc.code = parse_code_selector(o.code);
        lc.label = lc.code->label();
    } else if (!o.matrix.empty()) {
        lc.code = LinearCode(read_matrix_file(o.matrix), o.matrix);
        lc.label = o.matrix;
    }
    if (!o.weights.empty()) {
        lc.external = read_weights_file(o.weights);
        if (lc.code) lc.code->set_weights(*lc.external);
        if (lc.label.empty()) lc.label = o.weights;
    }
    if (!lc.code && !lc.external) throw ParameterError("no code given: use --code, --matrix or --weights");
    if (need_generator && !lc.code) throw ParameterError("a generator is required: use --code or --matrix");
    lc.n = lc.code ? lc.code->length() : lc.external->length();
    lc.k = lc.code ? lc.code->dimension() : lc.external->dimension();
    return lc;
}

ResolvedWeights resolve(const LoadedCode& lc, const CodeOptions& o) {
    if (lc.code) return resolve_weights(*lc.code, o.cap, o.threads);
    return {*lc.external, WeightSource::external};
}

void print_weights(std::ostream& out, const WeightDistribution& w) {
    for (std::size_t l = 0; l <= w.length(); ++l) {
        if (w[l] != 0) out << "A_" << l << " = " << w[l].str() << '\n';
    }
}

// ---- code-info -------------------------------------------------------------

struct CodeInfoOptions {
    CodeOptions code;
    std::string export_matrix;
    std::string export_weights;
};

int cmd_code_info(const CodeInfoOptions& o, std::ostream& out, std::ostream& err) {
    const auto lc = load_code(o.code, false);
    out << "code: " << lc.label << '\n';
    if (!o.export_matrix.empty()) {
        if (!lc.code) throw ParameterError("--export-matrix needs --code or --matrix");
        write_matrix_file(o.export_matrix, lc.code->generator());
    }

    std::optional<ResolvedWeights> resolved;
    try {
        resolved = resolve(lc, o.code);
    } catch (const InfeasibleError& e) {
        out << "n=" << lc.n << " k=" << lc.k << '\n';
        out << "weights: unavailable (requires external distribution, pass --weights)\n";
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    }

    const auto& w = resolved->weights;
    out << "n=" << w.length() << " k=" << w.dimension();
    if (w.dimension() > 0) out << " d=" << w.min_distance();
    out << '\n';
    out << "weights: " << to_string(resolved->source) << '\n';
    print_weights(out, w);
    if (!o.export_weights.empty()) write_weights_file(o.export_weights, w);
    return kSuccess;
}

// ---- sweep -------------------------------------------------------------------

struct SweepOptions {
    CodeOptions code;
    GridOptions grid{{}, 0.01, 0.5, 50};
    std::string variant = "standard";
    std::string out_path;
    std::string svg_path;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& /*err*/) {
    const auto lc = load_code(o.code, false);
    const auto resolved = resolve(lc, o.code);
    const auto grid = make_grid(o.grid);

    std::vector<BoundRow> rows;
    if (o.variant == "both") {
        rows = sweep(resolved.weights, grid, HVariant::standard);
        const auto printed = sweep(resolved.weights, grid, HVariant::as_printed);
        rows.insert(rows.end(), printed.begin(), printed.end());
    } else {
        rows = sweep(resolved.weights, grid, parse_h_variant(o.variant));
    }

    std::vector<std::string> comments;
    if (resolved.source == WeightSource::external) {
        comments.push_back("weights: " + o.code.weights + " (external distribution)");
    }

    if (o.out_path.empty()) {
        write_sweep_csv(out, rows, comments);
    } else {
        std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write " + o.out_path);
        write_sweep_csv(file, rows, comments);
        out << "wrote " << rows.size() << " rows to " << o.out_path << '\n';
    }

    if (!o.svg_path.empty()) {
        std::ofstream svg(o.svg_path, std::ios::binary | std::ios::trunc);
        if (!svg) throw std::runtime_error("cannot write " + o.svg_path);
        const auto n_plot = o.variant == "both" ? grid.size() : rows.size();
        const std::span<const BoundRow> plotted(rows.data(), n_plot);
        const auto title = "Entropy bounds, " + lc.label + " [" + std::to_string(lc.n) + "," + std::to_string(lc.k) +
                           "], h " + to_string(rows.front().variant);
        write_sweep_svg(svg, plotted, title);
    }
    return kSuccess;
}

// ---- generate ----------------------------------------------------------------

struct GenerateOptions {
    double eps = 0.0;
    std::uint64_t seed = 1;
    std::size_t bits = 0;
    std::string out_path;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& /*err*/) {
    const auto stream = generate({Bias(o.eps), o.seed}, o.bits);
    write_bitstream(o.out_path, stream);
    out << "bits=" << stream.size() << " ones=" << stream.count_ones() << '\n';
    return kSuccess;
}

// ---- extract -----------------------------------------------------------------

struct ExtractOptions {
    CodeOptions code;
    std::string in_path;
    std::string out_path;
    std::string baseline = "linear";
};

int cmd_extract(const ExtractOptions& o, std::ostream& out, std::ostream& err) {
    const auto input = read_bitstream(o.in_path);
    const auto start = std::chrono::steady_clock::now();

    BitStream output;
    if (o.baseline == "von-neumann") {
        output = von_neumann(input);
        out << "baseline=von-neumann input_bits=" << input.size() << " output_bits=" << output.size() << '\n';
    } else {
        const auto lc = load_code(o.code, true);
        const LinearExtractor extractor(lc.code->generator());
        output = extractor.extract(input, o.code.threads);
        const auto blocks = input.size() / extractor.input_block();
        out << "code=" << lc.label << " n=" << lc.n << " k=" << lc.k << " blocks=" << blocks
            << " input_bits=" << input.size() << " output_bits=" << output.size()
            << " discarded_bits=" << input.size() - blocks * lc.n << '\n';
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() > 0) {
        err << "throughput: " << format_real(static_cast<double>(input.size()) / elapsed.count() / 1e6)
            << " Mbit/s input\n";
    }
    write_bitstream(o.out_path, output);
    return kSuccess;
}

// ---- verify ------------------------------------------------------------------

struct VerifyOptions {
    CodeOptions code;
    GridOptions grid{{}, 0.05, 0.45, 9};
    std::size_t oracle_cap = kOracleCap;
    double tolerance = 1e-12;
};

struct Check {
    std::string name;
    double exact;
    double bound;
    bool upper;  // exact <= bound when true, exact >= bound otherwise
    bool gating;
};

void print_check(std::ostream& out, const Check& c, double tol, bool& ok) {
    const bool holds = c.upper ? c.exact <= c.bound + tol : c.exact >= c.bound - tol;
    const char* status = holds ? "PASS" : (c.gating ? "FAIL" : "VIOLATED");
    if (!holds && c.gating) ok = false;
    out << "  " << c.name;
    for (auto pad = c.name.size(); pad < 40; ++pad) out << ' ';
    out << "exact=" << format_real(c.exact) << (c.upper ? " <= " : " >= ")
        << format_real(c.bound) << "  " << status << (c.gating ? "" : " (info)") << '\n';
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    const auto lc = load_code(o.code, true);
    if (lc.n > o.oracle_cap) {
        err << "error: n=" << lc.n << " exceeds the exact-oracle cap " << o.oracle_cap
            << "; use `linex simulate` for a Monte-Carlo check\n";
        return kInfeasible;
    }
    const auto resolved = resolve(lc, o.code);
    const auto& w = resolved.weights;
    const auto k = w.dimension();
    const auto d = w.min_distance();
    const auto grid = make_grid(o.grid);

    out << "code: " << lc.label << " n=" << lc.n << " k=" << k << " d=" << d << " weights: "
        << to_string(resolved.source) << '\n';
    out << "tolerance: " << format_real(o.tolerance) << '\n';

    bool ok = true;
    for (const auto eps : grid) {
        const auto exact = exact_output_pmf(lc.code->generator(), eps, o.oracle_cap, o.code.threads);
        const auto row = evaluate_bounds(w, eps, HVariant::standard);
        const double max_bias = *std::max_element(exact.coord_biases.begin(), exact.coord_biases.end());

        out << "eps=" << format_real(eps.value()) << " delta=" << format_real(exact.delta)
            << " max_prob=" << format_real(exact.max_prob) << " H=" << format_real(exact.shannon)
            << " H_min=" << format_real(exact.min_entropy) << '\n';
        const std::vector<Check> checks = {
            {"coord bias <= eps^d", max_bias, row.bias_bound, true, true},
            {"max P <= 2^-k + eps^d", exact.max_prob, row.pointwise_bound, true, true},
            {"delta <= sum A_l eps^l", exact.delta, row.tvd_weight, true, true},
            {"delta <= 2^k eps^d", exact.delta, row.tvd_worst, true, true},
            {"H_min >= 1 - log(1 + 2^k eps^d)", exact.min_entropy, row.hmin.raw, false, true},
            {"H >= entropy_bound(exact delta)", exact.shannon,
             entropy_lower_bound(exact.delta, k, HVariant::standard).raw, false, true},
            {"H >= entropy_bound(weight bound)", exact.shannon, row.entropy_weight.raw, false, true},
            {"H >= entropy_bound(worst bound)", exact.shannon, row.entropy_worst.raw, false, true},
            {"H >= entropy_bound(weight, as-printed)", exact.shannon,
             entropy_lower_bound(row.tvd_weight, k, HVariant::as_printed).raw, false, false},
        };
        for (const auto& c : checks) print_check(out, c, o.tolerance, ok);
    }
    out << (ok ? "result: PASS" : "result: FAIL") << '\n';
    return ok ? kSuccess : kVerificationFailed;
}

// ---- simulate ----------------------------------------------------------------

struct SimulateOptions {
    CodeOptions code;
    double eps = 0.0;
    std::uint64_t seed = 1;
    std::size_t blocks = 1'000'000;
    bool marginal = false;
    std::size_t oracle_cap = kOracleCap;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
    const auto lc = load_code(o.code, true);
    const auto k = lc.k;
    if (!o.marginal && k > kMaxBinnedWidth) {
        err << "error: k=" << k << " is too wide to bin 2^k outcomes (max " << kMaxBinnedWidth
            << "); rerun with --marginal for per-coordinate biases only\n";
        return kInfeasible;
    }
    const auto resolved = resolve(lc, o.code);
    const auto& w = resolved.weights;
    const auto d = w.min_distance();
    const Bias eps(o.eps);
    const auto row = evaluate_bounds(w, eps, HVariant::standard);

    const LinearExtractor extractor(lc.code->generator());
    const auto input = generate({eps, o.seed}, o.blocks * lc.n);
    const auto output = extractor.extract(input, o.code.threads);

    out << "code: " << lc.label << " n=" << lc.n << " k=" << k << " d=" << d << '\n';
    out << "eps=" << format_real(eps.value()) << " seed=" << o.seed << " blocks=" << o.blocks << '\n';

    bool ok = true;
    const double samples = static_cast<double>(o.blocks);
    const double bias_tol = 3.0 / std::sqrt(samples);
    auto report = [&](const std::string& name, double value, double bound, double tol) {
        const bool holds = value <= bound + tol;
        if (!holds) ok = false;
        out << "  " << name;
        for (auto pad = name.size(); pad < 30; ++pad) out << ' ';
        out << "empirical=" << format_real(value) << " <= " << format_real(bound) << " + tol "
            << format_real(tol) << "  " << (holds ? "PASS" : "FAIL") << '\n';
    };

    if (o.marginal) {
        const auto biases = empirical_coordinate_biases(output, k);
        out << "samples=" << o.blocks << " mode=marginal bias_tolerance=" << format_real(bias_tol) << '\n';
        report("max coord bias vs eps^d", *std::max_element(biases.begin(), biases.end()), row.bias_bound, bias_tol);
    } else {
        const auto emp = empirical_stats(output, k);
        const auto& s = emp.stats;
        const double cell_tol = 3.0 * std::sqrt(std::min(1.0, row.pointwise_bound) / samples);
        out << "samples=" << emp.samples << " noise_floor_delta=" << format_real(emp.delta_noise_floor)
            << " noise_floor_tvd=" << format_real(emp.tvd_noise_floor) << " tolerance=3x\n";
        out << "empirical: tvd=" << format_real(s.tvd) << " max_prob=" << format_real(s.max_prob)
            << " H=" << format_real(s.shannon) << " H_min=" << format_real(s.min_entropy) << '\n';
        const double max_bias = *std::max_element(s.coord_biases.begin(), s.coord_biases.end());
        report("max coord bias vs eps^d", max_bias, row.bias_bound, bias_tol);
        report("max P vs 2^-k + eps^d", s.max_prob, row.pointwise_bound, cell_tol);
        report("delta vs sum A_l eps^l", s.delta, row.tvd_weight, 3.0 * emp.delta_noise_floor);

        if (lc.n <= o.oracle_cap) {
            const auto exact = exact_output_pmf(lc.code->generator(), eps, o.oracle_cap, o.code.threads);
            const double gap = std::abs(s.tvd - exact.tvd);
            const double tol = 3.0 * emp.tvd_noise_floor;
            const bool holds = gap <= tol;
            if (!holds) ok = false;
            out << "  |tvd - exact tvd|              " << format_real(gap) << " <= " << format_real(tol)
                << " (exact tvd=" << format_real(exact.tvd) << ")  " << (holds ? "PASS" : "FAIL") << '\n';
        }
    }
    out << (ok ? "result: PASS" : "result: FAIL") << '\n';
    return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear binary extractors: codes, bounds, extraction and verification", "linex"};
    app.require_subcommand(1);

    CodeInfoOptions info;
    auto* info_cmd = app.add_subcommand("code-info", "Show n, k, d and the weight distribution of a code");
    add_code_options(info_cmd, info.code, true);
    info_cmd->add_option("--export-matrix", info.export_matrix, "Write the generator matrix to this file");
    info_cmd->add_option("--export-weights", info.export_weights, "Write the weight distribution to this file");

    SweepOptions sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every bound over a grid of source biases (CSV)");
    add_code_options(sweep_cmd, sw.code, true);
    add_grid_options(sweep_cmd, sw.grid);
    sweep_cmd->add_option("--h-variant", sw.variant, "Entropy term: standard, as-printed or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"standard", "as-printed", "both"}));
    sweep_cmd->add_option("--out", sw.out_path, "CSV output path (default: stdout)");
    sweep_cmd->add_option("--svg", sw.svg_path, "Also draw the entropy curves as SVG");

    GenerateOptions gen;
    auto* gen_cmd = app.add_subcommand("generate", "Write bits from a seeded biased IID source");
    gen_cmd->add_option("--eps", gen.eps, "Source bias |P(1) - P(0)|")->required()->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    gen_cmd->add_option("--bits", gen.bits, "Number of bits")->required();
    gen_cmd->add_option("--out", gen.out_path, "Output bitstream file")->required();

    ExtractOptions ex;
    auto* extract_cmd = app.add_subcommand("extract", "Post-process a bitstream file");
    add_code_options(extract_cmd, ex.code, false);
    extract_cmd->add_option("--in", ex.in_path, "Input bitstream file")->required();
    extract_cmd->add_option("--out", ex.out_path, "Output bitstream file")->required();
    extract_cmd->add_option("--baseline", ex.baseline, "linear (default, needs a code) or von-neumann")
        ->capture_default_str()
        ->check(CLI::IsMember({"linear", "von-neumann"}));

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "Check every bound against the exact output distribution");
    add_code_options(verify_cmd, ver.code, true);
    add_grid_options(verify_cmd, ver.grid);
    verify_cmd->add_option("--oracle-cap", ver.oracle_cap, "Largest n for exact enumeration")->capture_default_str();
    verify_cmd->add_option("--tol", ver.tolerance, "Absolute slack per check")->capture_default_str();

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo check of the bounds on simulated output");
    add_code_options(sim_cmd, sim.code, true);
    sim_cmd->add_option("--eps", sim.eps, "Source bias")->required()->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--seed", sim.seed, "PRNG seed")->capture_default_str();
    sim_cmd->add_option("--blocks", sim.blocks, "Number of n-bit input blocks")->capture_default_str();
    sim_cmd->add_flag("--marginal", sim.marginal, "Per-coordinate biases only (for wide outputs)");
    sim_cmd->add_option("--oracle-cap", sim.oracle_cap, "Largest n compared against the exact oracle")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (info_cmd->parsed()) return cmd_code_info(info, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(sw, out, err);
        if (gen_cmd->parsed()) return cmd_generate(gen, out, err);
        if (extract_cmd->parsed()) return cmd_extract(ex, out, err);
        if (verify_cmd->parsed()) return cmd_verify(ver, out, err);
        if (sim_cmd->parsed()) return cmd_simulate(sim, out, err);
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace linex::cli
