#include "sandpile/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "sandpile/cylindric.hpp"
#include "sandpile/genfunc.hpp"
#include "sandpile/json_io.hpp"
#include "sandpile/rank.hpp"
#include "sandpile/render.hpp"

namespace sandpile {

namespace {

using nlohmann::ordered_json;

// Scanning is linear in the sink value; past this it is skipped by --check.
constexpr Value kScanLimit = 1'000'000;

std::string join(const std::vector<Value>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

ordered_json as_json(const Configuration& u) { return ordered_json::parse(config_to_json(u)); }

Configuration read_input(const std::string& src, std::istream& in) {
    if (src.empty()) throw InputError("no input given (use -i PATH, -i - or -i '{...}')");
    std::string text;
    if (src == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else if (src.front() == '{') {
        text = src;
    } else {
        std::ifstream f(src);
        if (!f) throw InputError("cannot open input file '" + src + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return config_from_json(text);
}

Configuration require_sink(const Configuration& u) {
    if (!u.sink) throw InputError("missing field 'sink' (a full configuration is required)");
    return u;
}

Configuration sorted_partial(const Configuration& u) {
    Configuration v = u.sink ? sort_config(stabilize_equiv(u)) : sort_config(u);
    return v;
}

struct Options {
    std::string input;
    std::string format = "text";
    bool proof = false;
    bool check = false;
    bool cylindric = false;
    Value m = 0, n = 0;
    std::string table = "xy";
    int xymax = 10;
    Value dmin = -3;
    std::optional<Value> dmax;
    int wmax = 4, hmax = 4, gf_xymax = 6;
    std::vector<std::string> sizes;
    std::uint64_t seed = 1;
    int runs = 5;
};

int cmd_rank(const Options& o, std::istream& in, std::ostream& out) {
    Configuration u = require_sink(read_input(o.input, in));
    Configuration p = park_sort(u);
    RankSummands rs = rank_formula_detail(p);
    const Value rank = rs.rank;
    std::optional<GreedyResult> greedy;
    if (o.proof || o.check) greedy = rank_greedy(u);
    std::optional<Value> scan;
    bool agree = true;
    if (o.check) {
        if (*p.sink <= kScanLimit) scan = rank_scan(u);
        agree = greedy->rank == rank && (!scan || *scan == rank);
    }

    if (o.format == "json") {
        ordered_json doc;
        doc["rank"] = rank;
        doc["parking"] = as_json(p);
        doc["r_vector"] = r_vector(p).entries;
        doc["summands"] = rs.summands;
        if (o.proof) doc["proof"] = as_json(greedy->proof.f);
        if (o.check) {
            ordered_json c;
            c["greedy"] = greedy->rank;
            c["scan"] = scan ? ordered_json(*scan) : ordered_json(nullptr);
            c["agree"] = agree;
            doc["check"] = c;
        }
        out << doc.dump() << "\n";
    } else {
        out << "rank: " << rank << "\n";
        out << "parking: " << to_string(p) << "\n";
        out << "r-vector: " << join(r_vector(p).entries) << "\n";
        if (!rs.summands.empty()) out << "summands: " << join(rs.summands) << "\n";
        if (o.proof) out << "proof: " << to_string(greedy->proof.f) << "\n";
        if (o.check) {
            out << "check: greedy=" << greedy->rank << " scan=" << (scan ? std::to_string(*scan) : "skipped")
                << (agree ? " agree" : " DISAGREE") << "\n";
        }
    }
    return agree ? 0 : 1;
}

int cmd_config_op(const Options& o, std::istream& in, std::ostream& out, bool park) {
    Configuration u = read_input(o.input, in);
    Configuration v = park ? park_sort(require_sink(u)) : sort_config(u.sink ? stabilize_equiv(u) : u);
    if (o.format == "json")
        out << config_to_json(v) << "\n";
    else
        out << to_string(v) << "\n";
    return 0;
}

int cmd_rvector(const Options& o, std::istream& in, std::ostream& out) {
    Configuration u = sorted_partial(read_input(o.input, in));
    RVector r = r_vector(u);
    if (o.format == "json")
        out << ordered_json(r.entries).dump() << "\n";
    else
        out << join(r.entries) << "\n";
    return 0;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
    Configuration u = read_input(o.input, in);
    DiagramSpec d;
    if (o.cylindric) {
        Configuration p = park_sort(require_sink(u));
        d = cylindric_diagram(p);
    } else {
        d = diagram_of(sorted_partial(u));
    }
    out << (o.format == "svg" ? render_svg(d) : render_text(d));
    return 0;
}

// Rows from the top (largest y) down, so the table reads like the figures.
void print_grid(std::ostream& out, const char* corner, Value col_lo, Value col_hi, Value row_lo, Value row_hi,
                const std::function<std::string(Value, Value)>& cell) {
    out << corner;
    for (Value c = col_lo; c <= col_hi; ++c) out << "," << c;
    out << "\n";
    for (Value r = row_hi; r >= row_lo; --r) {
        out << r;
        for (Value c = col_lo; c <= col_hi; ++c) out << "," << cell(c, r);
        out << "\n";
    }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    GraphShape shape(o.m, o.n);
    if (o.table == "configs") {
        for (const Configuration& u : enumerate_parking_sorted(shape).configs) out << to_string(u) << "\n";
        return 0;
    }
    if (o.table == "xy") {
        Caps caps{{Var::x, o.xymax}, {Var::y, o.xymax}};
        TruncatedSeries s = k_xy_table(shape, caps);
        print_grid(out, "y\\x", 0, o.xymax, 0, o.xymax, [&](Value x, Value y) {
            return s.coefficient(exps({{Var::x, static_cast<int>(x)}, {Var::y, static_cast<int>(y)}})).str();
        });
        return 0;
    }
    const Value dmax = o.dmax.value_or(2 * (o.m - 1) * (o.n - 1) + 1);
    DegreeRankTable t = k_tilde_table(shape, o.dmin, dmax);
    Value rmax = -1;
    for (const auto& [k, c] : t) rmax = std::max(rmax, k.second);
    print_grid(out, "r\\d", o.dmin, dmax, -1, rmax, [&](Value d, Value r) {
        auto it = t.find({d, r});
        return std::to_string(it == t.end() ? 0 : it->second);
    });
    return 0;
}

int cmd_verify_gf(const Options& o, std::ostream& out) {
    Caps caps{{Var::x, o.gf_xymax}, {Var::y, o.gf_xymax}, {Var::w, o.wmax}, {Var::h, o.hmax}};
    GfReport r = verify_gf_theorem(caps);
    out << r.text() << "\n";
    return r.pass ? 0 : 1;
}

std::vector<GraphShape> parse_sizes(const std::vector<std::string>& items) {
    std::vector<GraphShape> shapes;
    for (const std::string& s : items) {
        auto x = s.find('x');
        try {
            if (x != std::string::npos) {
                shapes.emplace_back(std::stoll(s.substr(0, x)), std::stoll(s.substr(x + 1)));
            } else {
                Value total = std::stoll(s);
                if (total < 2) throw InputError("bench size must be at least 2");
                shapes.emplace_back(total / 2, total - total / 2);
            }
        } catch (const std::logic_error&) {
            throw InputError("bad bench size '" + s + "'");
        }
    }
    return shapes;
}

int cmd_bench(const Options& o, std::ostream& out) {
    std::vector<GraphShape> shapes;
    if (o.sizes.empty()) {
        for (Value t = 100'000; t <= 12'800'000; t *= 2) shapes.emplace_back(t / 2, t - t / 2);
    } else {
        shapes = parse_sizes(o.sizes);
    }
    BenchReport r;
    try {
        r = run_bench_shapes(shapes, o.seed, o.runs);
    } catch (const std::bad_alloc&) {
        throw Error("bench: out of memory at the requested sizes");
    }
    out << "m+n\tm\tn\tmedian_s\tratio\n";
    for (const BenchRow& row : r.rows) {
        out << row.shape.m + row.shape.n << "\t" << row.shape.m << "\t" << row.shape.n << "\t" << std::fixed
            << std::setprecision(6) << row.median_seconds << "\t" << std::setprecision(3) << row.ratio << "\n";
    }
    out << (r.pass ? "PASS" : "FAIL") << " max ratio " << std::setprecision(3) << r.max_ratio << "\n";
    return r.pass ? 0 : 1;
}

}  // namespace

Configuration random_bench_config(GraphShape shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Value m = shape.m, n = shape.n;
    const Value mn = checked_mul(m, n);
    std::uniform_int_distribution<Value> da(0, checked_mul(4, n)), db(0, checked_mul(4, m)),
        ds(-mn, checked_mul(3, mn));
    std::vector<Value> a(shape.a_len()), b(shape.b_len());
    for (Value& v : a) v = da(rng);
    for (Value& v : b) v = db(rng);
    Value sink = ds(rng);
    return Configuration(shape, std::move(a), sink, std::move(b));
}

BenchReport run_bench_shapes(const std::vector<GraphShape>& shapes, std::uint64_t seed, int runs) {
    if (runs < 1) throw InputError("bench needs at least one run");
    BenchReport report;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        std::vector<double> times;
        for (int k = 0; k < runs; ++k) {
            Configuration u = random_bench_config(shapes[i], seed + static_cast<std::uint64_t>(k));
            auto t0 = std::chrono::steady_clock::now();
            volatile Value rk = rank_of(u);
            (void)rk;
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        std::nth_element(times.begin(), times.begin() + runs / 2, times.end());
        BenchRow row{shapes[i], times[static_cast<std::size_t>(runs / 2)], 0};
        if (i > 0) {
            const BenchRow& prev = report.rows.back();
            row.ratio = row.median_seconds / prev.median_seconds;
            // Allowed growth is 1.5 times the size growth: 3 per doubling.
            double size_ratio = static_cast<double>(row.shape.m + row.shape.n) /
                                static_cast<double>(prev.shape.m + prev.shape.n);
            report.max_ratio = std::max(report.max_ratio, row.ratio);
            if (row.ratio > 1.5 * size_ratio) report.pass = false;
        }
        report.rows.push_back(row);
    }
    return report;
}

BenchReport run_bench(const std::vector<Value>& totals, std::uint64_t seed, int runs) {
    std::vector<GraphShape> shapes;
    for (Value t : totals) shapes.emplace_back(t / 2, t - t / 2);
    return run_bench_shapes(shapes, seed, runs);
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sandpile rank and parking tools for complete bipartite graphs", "sandpile"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* c) {
        c->add_option("-i,--input", o.input, "configuration JSON: a path, '-' for stdin, or inline")->required();
    };

    auto* rank = app.add_subcommand("rank", "rank, parking representative and r-vector");
    add_input(rank);
    rank->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    rank->add_flag("--proof", o.proof, "print a configuration f witnessing the rank");
    rank->add_flag("--check", o.check, "cross-check with the greedy and scanning algorithms");

    auto* park = app.add_subcommand("park", "sorted parking configuration equivalent to the input");
    add_input(park);
    park->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* sort = app.add_subcommand("sort", "stabilize (when the sink is given) and sort");
    add_input(sort);
    sort->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* rvec = app.add_subcommand("rvector", "r-vector of the sorted configuration");
    add_input(rvec);
    rvec->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* render = app.add_subcommand("render", "draw the path pair");
    add_input(render);
    render->add_option("--format", o.format)->check(CLI::IsMember({"text", "svg"}));
    render->add_flag("--cylindric", o.cylindric, "label the rolled diagram with 0..sink");

    auto* en = app.add_subcommand("enumerate", "tables over the parking sorted configurations of one shape");
    en->add_option("-m", o.m)->required()->check(CLI::Range(1, 64));
    en->add_option("-n", o.n)->required()->check(CLI::Range(1, 64));
    en->add_option("--table", o.table)->check(CLI::IsMember({"configs", "xy", "dr"}));
    en->add_option("--xymax", o.xymax)->check(CLI::Range(0, 200));
    en->add_option("--dmin", o.dmin);
    en->add_option("--dmax", o.dmax);

    auto* gf = app.add_subcommand("verify-gf", "compare both sides of the generating function identity");
    gf->add_option("--wmax", o.wmax)->check(CLI::Range(1, 12));
    gf->add_option("--hmax", o.hmax)->check(CLI::Range(1, 12));
    gf->add_option("--xymax", o.gf_xymax)->check(CLI::Range(0, 40));

    auto* bench = app.add_subcommand("bench", "time rank_of on random inputs of growing size");
    bench->add_option("--sizes", o.sizes, "m+n totals or MxN shapes")->delimiter(',');
    bench->add_option("--seed", o.seed);
    bench->add_option("--runs", o.runs)->check(CLI::Range(1, 101));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;  // --help is a ParseError with code 0
    }

    try {
        if (*rank) return cmd_rank(o, in, out);
        if (*park) return cmd_config_op(o, in, out, true);
        if (*sort) return cmd_config_op(o, in, out, false);
        if (*rvec) return cmd_rvector(o, in, out);
        if (*render) return cmd_render(o, in, out);
        if (*en) return cmd_enumerate(o, out);
        if (*gf) return cmd_verify_gf(o, out);
        if (*bench) return cmd_bench(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace sandpile
