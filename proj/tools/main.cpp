// zgame: exact engine for iterated Z(a,b) = ab/gcd(a,b)^2 triangles,
// their GF(2) exponent dynamics, derived sequences, and figure rendering.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zgame/bitseq.hpp"
#include "zgame/errors.hpp"
#include "zgame/factored.hpp"
#include "zgame/render.hpp"
#include "zgame/sequences.hpp"
#include "zgame/triangle.hpp"
#include "zgame/verify.hpp"

namespace {

using namespace zgame;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitRange = 3;

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::max(1u, std::min(8u, hw == 0 ? 1u : hw));
}

// Prime table with an optional disk cache; grown tables are written back
// on scope exit so repeated runs skip regeneration.
struct TableSession {
    PrimeTable table;
    std::string cache_file;
    size_t baseline = 0;

    explicit TableSession(const std::string& cache_dir) {
        if (!cache_dir.empty()) {
            cache_file = cache_dir + "/primes.zc";
            if (table.load_cache(cache_file)) baseline = table.count();
        }
    }
    ~TableSession() {
        // baseline stays 0 when no usable cache was found, so a fresh or
        // repaired file gets written on the way out
        if (!cache_file.empty() && table.count() > baseline) {
            try {
                table.save_cache(cache_file);
            } catch (...) {
                // cache is an optimization; losing it is not an error
            }
        }
    }
};

uint64_t parse_u64(const std::string& text, const std::string& what) {
    size_t pos = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": not a non-negative integer: " + text);
    }
    if (pos != text.size())
        throw std::invalid_argument(what + ": trailing characters in " + text);
    return v;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string basename_of(const std::string& path) {
    const size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::vector<FactoredInteger> make_start(const std::string& spec, size_t depth,
                                        PrimeTable& table) {
    if (spec == "primes") return primes_start(depth);
    if (spec == "naturals") return naturals_start(depth, table);
    if (spec.rfind("binomial:", 0) == 0) {
        const uint64_t n = parse_u64(spec.substr(9), "binomial start");
        auto start = binomial_start(n, table);
        if (depth > start.size())
            throw std::invalid_argument("triangle: depth exceeds binomial row length " +
                                        std::to_string(start.size()));
        return start;
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("triangle: cannot read start file " + path);
        std::vector<mpz_class> values;
        std::string token;
        while (in >> token) {
            try {
                values.emplace_back(token);
            } catch (const std::exception&) {
                throw std::invalid_argument("triangle: bad integer '" + token + "' in " + path);
            }
        }
        if (depth > values.size())
            throw std::invalid_argument("triangle: depth exceeds start length " +
                                        std::to_string(values.size()));
        return start_from_values(values, table);
    }
    throw std::invalid_argument("triangle: unknown start '" + spec +
                                "' (expected primes, naturals, binomial:N or file:PATH)");
}

int cmd_triangle(const std::string& start_spec, uint64_t depth, const std::string& format,
                 const std::string& out_path, unsigned threads, TableSession& session) {
    if (depth == 0) throw std::invalid_argument("triangle: depth must be positive");
    auto start = make_start(start_spec, static_cast<size_t>(depth), session.table);
    const TriangleSlice tri = build_triangle(std::move(start), static_cast<size_t>(depth), threads);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    if (format == "csv")
        write_triangle_csv(tri, session.table, out);
    else
        write_triangle_json(tri, out);
    return kExitOk;
}

int cmd_left_edge(uint64_t rows, const std::string& format, const std::string& out_path,
                  TableSession& session) {
    if (rows == 0) throw std::invalid_argument("left-edge: --rows must be positive");
    session.table.ensure_count(static_cast<size_t>(rows));
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    for (uint64_t m = 0; m < rows; ++m) {
        const LeftEdgeEntry e = left_edge(m, session.table);
        out << m << ' ' << e.value.decimal(session.table);
        if (format == "table") out << ' ' << e.value.factor_string(session.table);
        out << '\n';
    }
    return kExitOk;
}

int cmd_closed_form(uint64_t m, uint64_t n, TableSession& session) {
    session.table.ensure_count(static_cast<size_t>(n + m));
    const FactoredInteger e = entry_closed_form(m, n, session.table);
    std::cout << e.decimal(session.table) << ' ' << e.factor_string(session.table) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite, uint64_t bound, unsigned threads,
               TableSession& session) {
    std::vector<std::string> names;
    if (suite == "all") {
        if (bound != 0)
            std::cerr << "note: --bound is ignored with --suite all; defaults apply\n";
        names = suite_names();
        bound = 0;
    } else {
        names = {suite};
    }
    bool all_ok = true;
    for (const std::string& name : names) {
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteResult r = run_suite(name, bound, session.table, threads);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        if (r.passed)
            std::cout << "PASS " << r.name << " (" << r.checks << " checks)\n";
        else
            std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
        std::cerr << "# " << r.name << ": " << dt.count() << " s\n";
        all_ok = all_ok && r.passed;
    }
    if (!all_ok) {
        std::cerr << "error[verify]: at least one suite failed\n";
        return kExitVerify;
    }
    return kExitOk;
}

int cmd_cycles(const std::string& k_text, const std::string& support_csv, uint64_t budget) {
    BitSequence w;
    if (!k_text.empty()) {
        w = BitSequence::unit(parse_u64(k_text, "cycles --k"));
    } else {
        std::vector<uint64_t> support;
        std::stringstream ss(support_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) support.push_back(parse_u64(item, "cycles --support"));
        w = BitSequence(std::move(support));
    }
    const auto len = cycle_length(w, budget);
    if (!len) {
        std::cerr << "error[budget]: no return to the start within " << budget << " steps\n";
        return kExitRange;
    }
    std::cout << *len << '\n';
    return kExitOk;
}

int cmd_sequence(const std::string& name, uint64_t count, long long offset,
                 const std::string& out_path, TableSession& session) {
    if (count == 0) throw std::invalid_argument("sequence: --count must be positive");
    SequenceRecord rec;
    if (name == "delta") {
        rec = delta_sequence(static_cast<size_t>(count));
    } else if (name == "natural-left-edge") {
        rec = natural_left_edge(static_cast<size_t>(count), session.table);
    } else {  // natural-left-edge-sorted
        rec = sorted_dedup(natural_left_edge(static_cast<size_t>(count), session.table));
        const SequenceRecord base =
            count == 500 ? rec : sorted_dedup(natural_left_edge(500, session.table));
        const size_t probe = 12;
        bool stable = rec.terms.size() >= probe && base.terms.size() >= probe;
        for (size_t i = 0; stable && i < probe; ++i) stable = rec.terms[i] == base.terms[i];
        std::cerr << "note: first 12 sorted terms "
                  << (stable ? "match" : "do not match") << " the 500-term baseline\n";
    }
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    write_bfile(rec, offset, out);
    return kExitOk;
}

int cmd_stats(uint64_t from, uint64_t to, unsigned threads, TableSession& session) {
    const RangeExtrema ex = range_extrema(from, to, session.table, threads);
    const RangeSums sums = range_sums(from, to, session.table, threads);
    nlohmann::json doc{
        {"from", from},
        {"to", to},
        {"min_d", ex.min_d.get_str()},
        {"max_d", ex.max_d.get_str()},
        {"min_omega", ex.min_omega},
        {"max_omega", ex.max_omega},
        {"sum_d", sums.sum_d.get_str()},
        {"sum_omega", sums.sum_omega.get_str()},
        {"note", "exact values over the finite range, not asymptotic estimates"},
    };
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_render(const std::string& what, uint64_t size, uint64_t seed,
               const std::string& out_path, unsigned cell_px, const std::string& layout_str) {
    const GridLayout layout = layout_str == "square" ? GridLayout::Square : GridLayout::Offset;
    const Palette palette(seed);
    CellGrid grid;
    nlohmann::json params;
    std::string operation;
    if (what.rfind("p-slice:", 0) == 0) {
        const uint64_t k = parse_u64(what.substr(8), "render p-slice index");
        if (size == 0) throw std::invalid_argument("render: --size is required for p-slice");
        grid = p_slice_grid(static_cast<uint32_t>(k), static_cast<size_t>(size), layout);
        operation = "p-slice";
        params = {{"k", k}, {"size", size}, {"cell_px", cell_px}, {"layout", layout_str}};
    } else if (what.rfind("delta-square:", 0) == 0) {
        const uint64_t t = parse_u64(what.substr(13), "render delta-square order");
        grid = delta_square_grid(static_cast<unsigned>(t));
        operation = "delta-square";
        params = {{"t", t}, {"cell_px", cell_px}};
    } else if (what == "omega-triangle") {
        if (size == 0)
            throw std::invalid_argument("render: --size is required for omega-triangle");
        grid = omega_triangle_grid(static_cast<size_t>(size), layout);
        operation = "omega-triangle";
        params = {{"depth", size}, {"cell_px", cell_px}, {"layout", layout_str}};
    } else {
        throw std::invalid_argument(
            "render: unknown --what (expected p-slice:K, delta-square:T or omega-triangle)");
    }
    const bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
    const std::string bytes =
        svg ? to_svg(grid, palette, cell_px) : ppm_bytes(rasterize(grid, palette, cell_px));
    write_file(out_path, bytes);
    nlohmann::json meta{
        {"operation", operation},
        {"parameters", params},
        {"palette_seed", seed},
        {"format", svg ? "svg" : "ppm"},
        {"content_hash", "fnv1a64:" + hex64(fnv1a64(bytes.data(), bytes.size()))},
        {"output", basename_of(out_path)},
    };
    write_file(out_path + ".json", meta.dump(2) + "\n");
    return kExitOk;
}

int guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const limit_error& e) {
        std::cerr << "error[range]: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::out_of_range& e) {
        std::cerr << "error[range]: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error[usage]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Z(a,b) = ab/gcd(a,b)^2 triangle engine"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "zgame 1.0.0");

    unsigned threads = default_threads();
    const char* env_cache = std::getenv("ZGAME_CACHE_DIR");
    std::string cache_dir = env_cache ? env_cache : "";
    app.add_option("--threads", threads, "worker thread cap")->capture_default_str();
    app.add_option("--cache-dir", cache_dir,
                   "prime table cache directory (env ZGAME_CACHE_DIR)");

    auto* triangle = app.add_subcommand("triangle", "generate a triangle and export it");
    std::string tri_start = "primes", tri_format = "csv", tri_out;
    uint64_t tri_depth = 0;
    triangle->add_option("--start", tri_start,
                         "start row: primes, naturals, binomial:N or file:PATH")
        ->capture_default_str();
    triangle->add_option("--depth", tri_depth, "number of rows")->required();
    triangle->add_option("--format", tri_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    triangle->add_option("--out", tri_out, "output path (default stdout)");

    auto* ledge = app.add_subcommand("left-edge", "left edge of the prime triangle");
    uint64_t ledge_rows = 0;
    std::string ledge_format = "table", ledge_out;
    ledge->add_option("--rows", ledge_rows, "rows m = 0..M-1")->required();
    ledge->add_option("--format", ledge_format, "table (decimal + factorization) or bfile")
        ->check(CLI::IsMember({"table", "bfile"}))
        ->capture_default_str();
    ledge->add_option("--out", ledge_out, "output path (default stdout)");

    auto* closed = app.add_subcommand("closed-form", "one prime-triangle entry by formula");
    uint64_t cf_m = 0, cf_n = 0;
    closed->add_option("--m", cf_m, "row index (0-based)")->required();
    closed->add_option("--n", cf_n, "column index (1-based)")->required();

    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string verify_suite;
    uint64_t verify_bound = 0;
    {
        std::vector<std::string> choices = suite_names();
        choices.push_back("all");
        verify->add_option("--suite", verify_suite, "suite name or all")
            ->required()
            ->check(CLI::IsMember(choices));
    }
    verify->add_option("--bound", verify_bound, "override the suite default bound");

    auto* cycles = app.add_subcommand("cycles", "smallest return time under phi");
    std::string cyc_k, cyc_support;
    uint64_t cyc_budget = uint64_t(1) << 16;
    auto* opt_k = cycles->add_option("--k", cyc_k, "single-index start: unit(k)");
    auto* opt_support = cycles->add_option("--support", cyc_support,
                                           "comma-separated support indices");
    cycles->add_option("--budget", cyc_budget, "iteration budget")->capture_default_str();
    opt_k->excludes(opt_support);
    opt_support->excludes(opt_k);

    auto* sequence = app.add_subcommand("sequence", "derived sequences as OEIS b-files");
    std::string seq_name, seq_out;
    uint64_t seq_count = 500;
    long long seq_offset = 0;
    sequence->add_option("--name", seq_name, "delta, natural-left-edge or natural-left-edge-sorted")
        ->required()
        ->check(CLI::IsMember({"delta", "natural-left-edge", "natural-left-edge-sorted"}));
    sequence->add_option("--count", seq_count, "number of terms")->capture_default_str();
    std::string seq_format = "bfile";
    sequence->add_option("--format", seq_format, "bfile")
        ->check(CLI::IsMember({"bfile"}))
        ->capture_default_str();
    sequence->add_option("--offset", seq_offset, "b-file index of the first term")
        ->capture_default_str();
    sequence->add_option("--out", seq_out, "output path (default stdout)");

    auto* stats = app.add_subcommand("stats", "exact extrema and sums of d_m over a range");
    uint64_t stats_from = 0, stats_to = 0;
    stats->add_option("--from", stats_from, "first row index")->required();
    stats->add_option("--to", stats_to, "last row index")->required();

    auto* render = app.add_subcommand("render", "deterministic figure rendering");
    std::string ren_what, ren_out, ren_layout = "offset";
    uint64_t ren_size = 0, ren_seed = 1;
    unsigned ren_cell = 8;
    render->add_option("--what", ren_what, "p-slice:K, delta-square:T or omega-triangle")
        ->required();
    render->add_option("--size", ren_size, "figure size in cells (p-slice, omega-triangle)");
    render->add_option("--seed", ren_seed, "palette seed")->capture_default_str();
    render->add_option("--out", ren_out, "output path (.ppm or .svg)")->required();
    render->add_option("--cell-px", ren_cell, "pixels per cell")->capture_default_str();
    render->add_option("--layout", ren_layout, "offset or square")
        ->check(CLI::IsMember({"offset", "square"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[usage]: " << e.what() << '\n';
        return kExitUsage;
    }

    if (threads == 0) threads = 1;

    return guarded([&]() -> int {
        TableSession session(cache_dir);
        if (app.got_subcommand(triangle))
            return cmd_triangle(tri_start, tri_depth, tri_format, tri_out, threads, session);
        if (app.got_subcommand(ledge))
            return cmd_left_edge(ledge_rows, ledge_format, ledge_out, session);
        if (app.got_subcommand(closed)) return cmd_closed_form(cf_m, cf_n, session);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_suite, verify_bound, threads, session);
        if (app.got_subcommand(cycles)) {
            if (cyc_k.empty() && cyc_support.empty())
                throw std::invalid_argument("cycles: provide --k or --support");
            return cmd_cycles(cyc_k, cyc_support, cyc_budget);
        }
        if (app.got_subcommand(sequence))
            return cmd_sequence(seq_name, seq_count, seq_offset, seq_out, session);
        if (app.got_subcommand(stats)) {
            if (stats_from > stats_to)
                throw std::invalid_argument("stats: --from must not exceed --to");
            return cmd_stats(stats_from, stats_to, threads, session);
        }
        if (app.got_subcommand(render))
            return cmd_render(ren_what, ren_size, ren_seed, ren_out, ren_cell, ren_layout);
        throw std::invalid_argument("no subcommand given");
    });
}
