// geosieve command-line front end.
//
// Exit codes: 0 pass, 1 check failed, 2 usage or input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <geosieve/asym.hpp>
#include <geosieve/brun.hpp>
#include <geosieve/dowling.hpp>
#include <geosieve/errors.hpp>
#include <geosieve/json_io.hpp>
#include <geosieve/matroid.hpp>
#include <geosieve/poset.hpp>
#include <geosieve/sieve.hpp>
#include <geosieve/verify.hpp>

namespace
{

using namespace geosieve;
using json = nlohmann::ordered_json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Globals {
    std::string format = "json";
    std::size_t cap_elements = io::default_cap_elements;
};

json to_json(std::span<const BigInt> v)
{
    auto out = json::array();
    for (const auto &x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

json to_json(std::span<const Rational> v)
{
    auto out = json::array();
    for (const auto &x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

std::string real_str(const Real &x, unsigned digits)
{
    return x.str(static_cast<std::streamsize>(digits));
}

// Flat key,value rendering for --format csv. Arrays are joined with ';'.
void print_csv(const json &j)
{
    std::cout << "key,value\n";
    for (const auto &[k, v] : j.items()) {
        std::cout << k << ',';
        if (v.is_array()) {
            bool first = true;
            for (const auto &e : v) {
                std::cout << (first ? "" : ";") << (e.is_string() ? e.get<std::string>() : e.dump());
                first = false;
            }
        } else if (v.is_string()) {
            std::cout << v.get<std::string>();
        } else {
            std::cout << v.dump();
        }
        std::cout << '\n';
    }
}

void emit(const Globals &g, const json &j)
{
    if (g.format == "csv") {
        print_csv(j);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

// Input problems map to the usage exit code; everything else is a failed check.
int exit_code_for(error_code c)
{
    switch (c) {
    case error_code::parse_error:
    case error_code::too_large:
    case error_code::bad_params:
    case error_code::index_out_of_range:
    case error_code::invalid_instance:
        return exit_usage;
    default:
        return exit_fail;
    }
}

int cmd_lattice_check(const Globals &g, const std::string &spec)
{
    const auto L = io::load_lattice(spec, g.cap_elements);
    json out;
    out["input"] = spec;
    out["size"] = L.size();
    out["rank"] = L.rank();
    const auto rep = is_geometric(L);
    out["geometric"] = rep.geometric;
    if (!rep.geometric) {
        out["violated_axiom"] = rep.violated_axiom;
        if (rep.witness) {
            out["witness"] = {rep.witness->first, rep.witness->second};
        }
        out["diagnostic"] = rep.diagnostic;
        emit(g, out);
        std::cerr << rep.violated_axiom << '\n';
        return exit_fail;
    }
    try {
        const auto brun = verify_brun(L);
        out["whitney_first"] = to_json(brun.whitney_first);
        out["partial_sums"] = to_json(brun.partial_sums);
        out["brun"] = "pass";
        emit(g, out);
        return exit_pass;
    } catch (const geosieve_error &e) {
        out["brun"] = "fail";
        out["diagnostic"] = e.what();
        emit(g, out);
        std::cerr << e.what() << '\n';
        return exit_fail;
    }
}

int cmd_lattice_mobius(const Globals &g, const std::string &spec)
{
    const auto L = io::load_lattice(spec, g.cap_elements);
    const auto w = whitney_first_lattice(L);
    json out;
    out["input"] = spec;
    out["mu_bottom_top"] = to_string(mobius(L, L.bottom())[L.top()]);
    out["whitney_first"] = to_json(w);
    out["whitney_second"] = to_json(whitney_second_lattice(L));
    emit(g, out);
    return exit_pass;
}

json sieve_report(const SieveInstance &inst, std::optional<std::size_t> cutoff, bool &ok)
{
    const auto exact = sifted_count_exact(inst);
    const auto via_mobius = sifted_count_mobius(inst);
    json out;
    out["tau"] = inst.tau();
    out["tau_rank"] = inst.lattice().rank(inst.tau());
    out["sifted_size"] = inst.sifted().size();
    out["exact"] = exact;
    out["mobius_count"] = to_string(via_mobius);
    out["main_term"] = to_string(sieve_main_term(inst));
    out["error_bound"] = to_string(sieve_error_bound(inst));
    ok = via_mobius == BigInt(exact);

    const std::size_t r_tau = inst.lattice().rank(inst.tau());
    std::size_t lo_k = 0;
    std::size_t hi_k = (r_tau + 1) / 2;
    if (cutoff) {
        lo_k = hi_k = *cutoff;
    }
    auto bounds = json::array();
    for (std::size_t k = lo_k; k <= hi_k; ++k) {
        const auto b = brun_bounds(inst, k);
        const bool sandwiched = b.lower <= exact && BigInt(exact) <= b.upper;
        ok = ok && sandwiched;
        bounds.push_back({{"cutoff", k},
                          {"lower", to_string(b.lower)},
                          {"upper", to_string(b.upper)},
                          {"sandwich", sandwiched}});
    }
    out["brun_bounds"] = bounds;
    out["status"] = ok ? "pass" : "fail";
    return out;
}

void emit_sieve(const Globals &g, const json &out)
{
    if (g.format != "csv") {
        emit(g, out);
        return;
    }
    json flat = out;
    flat.erase("brun_bounds");
    print_csv(flat);
    std::cout << "cutoff,lower,upper,sandwich\n";
    for (const auto &b : out["brun_bounds"]) {
        std::cout << b["cutoff"].get<std::size_t>() << ',' << b["lower"].get<std::string>() << ','
                  << b["upper"].get<std::string>() << ',' << (b["sandwich"].get<bool>() ? "true" : "false") << '\n';
    }
}

int cmd_sieve_run(const Globals &g, const std::string &path, std::optional<std::size_t> cutoff)
{
    const auto inst = io::sieve_from_json(io::read_file(path), g.cap_elements);
    bool ok = false;
    auto out = sieve_report(inst, cutoff, ok);
    emit_sieve(g, out);
    return ok ? exit_pass : exit_fail;
}

int cmd_sieve_dowling(const Globals &g, unsigned n, unsigned m, unsigned k, std::optional<std::size_t> cutoff)
{
    if (k > n) {
        raise(error_code::bad_params, "k must not exceed n");
    }
    const auto D = std::make_shared<const DowlingLattice>(build_Qn(n, m));
    const auto inst = dowling_sieve_instance(D, k);
    bool ok = false;
    auto out = sieve_report(inst, cutoff, ok);
    const auto closed = dowling_sieve_closed_form(m, n, k);
    out["closed_form"] = to_string(closed);
    ok = ok && closed == BigInt(out["exact"].get<std::size_t>());
    out["status"] = ok ? "pass" : "fail";
    emit_sieve(g, out);
    return ok ? exit_pass : exit_fail;
}

int cmd_verify(const Globals &g, const verify::Options &opts)
{
    const auto &known = verify::scopes();
    if (std::find(known.begin(), known.end(), opts.scope) == known.end()) {
        raise(error_code::bad_params, "unknown scope '" + opts.scope + "'");
    }
    const auto results = verify::run_checks(opts);
    bool all = true;
    if (g.format == "csv") {
        std::cout << "check,scope,status,detail\n";
    }
    auto arr = json::array();
    for (const auto &r : results) {
        all = all && r.passed;
        if (g.format == "csv") {
            std::cout << r.name << ',' << r.scope << ',' << (r.passed ? "PASS" : "FAIL") << ",\"" << r.detail
                      << "\"\n";
        } else {
            arr.push_back(
                {{"check", r.name}, {"scope", r.scope}, {"status", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
        }
    }
    if (g.format != "csv") {
        json out;
        out["scope"] = opts.scope;
        out["fast"] = opts.fast;
        out["checks"] = arr;
        out["status"] = all ? "pass" : "fail";
        std::cout << out.dump(2) << '\n';
    }
    if (!all) {
        for (const auto &r : results) {
            if (!r.passed) {
                std::cerr << "first failure: " << r.name << ": " << r.detail << '\n';
                break;
            }
        }
    }
    return all ? exit_pass : exit_fail;
}

int cmd_dowling_table(const Globals &g, const std::string &kind, unsigned m, unsigned r, unsigned nmax)
{
    WhitneyTriangle t;
    if (kind == "first") {
        t = whitney_first_table(m, nmax);
    } else if (kind == "second") {
        t = whitney_second_table(m, r, nmax);
    } else {
        raise(error_code::bad_params, "--kind must be first or second");
    }
    if (g.format == "json") {
        json out;
        out["kind"] = kind;
        out["m"] = t.m;
        out["r"] = t.r;
        auto rows = json::array();
        for (const auto &row : t.rows) {
            rows.push_back(to_json(row));
        }
        out["rows"] = rows;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << io::triangle_to_csv(t);
    }
    return exit_pass;
}

int cmd_dowling_build(const Globals &g, unsigned n, unsigned m, const std::string &path)
{
    const auto D = build_Qn(n, m);
    const auto text = io::lattice_to_json(D.lattice);
    if (path.empty() || path == "-") {
        std::cout << text << '\n';
        return exit_pass;
    }
    std::ofstream os(path);
    if (!os) {
        raise(error_code::parse_error, "cannot write '" + path + "'");
    }
    os << text << '\n';
    json out;
    out["n"] = n;
    out["m"] = m;
    out["elements"] = D.lattice.size();
    out["rank"] = D.lattice.rank();
    out["out"] = path;
    emit(g, out);
    return exit_pass;
}

int cmd_dowling_conv(const Globals &g, unsigned m, unsigned n, unsigned t, unsigned s)
{
    const auto value = shifted_convolution(m, n, t, s);
    const auto series = conv_series(m, n, t, s);
    const bool agrees = series[s] == value && conv_equals_rwhitney_check(m, n, t, s);
    json out;
    out["m"] = m;
    out["n"] = n;
    out["t"] = t;
    out["s"] = s;
    out["value"] = to_string(value);
    out["series_coefficient"] = to_string(series[s]);
    out["status"] = agrees ? "pass" : "fail";
    emit(g, out);
    return agrees ? exit_pass : exit_fail;
}

int cmd_dowling_numbers(const Globals &g, unsigned m, unsigned r, unsigned nmax)
{
    const auto v = r_dowling_numbers(m, r, nmax);
    if (g.format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t n = 0; n < v.size(); ++n) {
            std::cout << n << ',' << v[n] << '\n';
        }
        return exit_pass;
    }
    json out;
    out["m"] = m;
    out["r"] = r;
    out["values"] = to_json(v);
    std::cout << out.dump(2) << '\n';
    return exit_pass;
}

int cmd_asym(const Globals &g, unsigned m, unsigned r, unsigned n, bool compare, unsigned digits)
{
    json out;
    out["m"] = m;
    out["r"] = r;
    out["n"] = n;
    out["digits"] = digits;
    PrecisionGuard guard(digits);
    auto put_saddle = [&](const SaddleData &d) {
        out["delta"] = real_str(d.delta, digits);
        out["g0"] = real_str(d.g0, digits);
        out["g2"] = real_str(d.g2, digits);
        out["log_asymptotic"] = real_str(d.log_asymptotic, digits);
    };
    if (compare) {
        const auto c = compare_exact(m, r, n, digits);
        put_saddle(c.saddle);
        out["log_exact"] = real_str(c.log_exact, digits);
        out["ratio"] = real_str(c.ratio, digits);
        out["rel_err"] = real_str(c.rel_err, digits);
        out["normalized_err"] = real_str(c.normalized_err, digits);
    } else {
        put_saddle(saddle_values(m, r, n, digits));
    }
    emit(g, out);
    return exit_pass;
}

std::string sequence_text(const std::string &arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        return io::read_file(arg);
    }
    return arg;
}

int cmd_brun_check(const Globals &g, const std::string &arg)
{
    const auto seq = io::parse_sequence(sequence_text(arg));
    json out;
    out["length"] = seq.size();
    const auto uni = is_unimodal(seq);
    out["unimodal"] = uni.unimodal;
    if (uni.peak) {
        out["peak"] = *uni.peak;
    }
    const auto lc = is_log_concave(seq);
    out["log_concave"] = lc.log_concave;
    try {
        const auto rep = alternating_partial_sums_check(seq);
        out["partial_sums"] = to_json(rep.partial_sums);
        out["passed"] = rep.passed;
        if (rep.first_failure) {
            out["first_failure"] = *rep.first_failure;
        }
        emit(g, out);
        return rep.passed ? exit_pass : exit_fail;
    } catch (const geosieve_error &e) {
        if (e.code() != error_code::hypothesis_violated) {
            throw;
        }
        out["passed"] = false;
        out["diagnostic"] = e.what();
        emit(g, out);
        std::cerr << e.what() << '\n';
        return exit_fail;
    }
}

int cmd_matroid_charpoly(const Globals &g, const std::string &spec)
{
    const auto M = io::load_matroid(spec);
    json out;
    out["input"] = spec;
    out["kind"] = M.kind();
    out["ground_size"] = M.ground_size();
    out["rank"] = M.rank();
    out["simple"] = is_simple(M);
    out["coefficients"] = to_json(char_poly(M).coefficients);
    emit(g, out);
    return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact geometric-lattice sieve and Dowling lattice toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cap-elements", g.cap_elements, "Refuse to build lattices larger than this");

    std::function<int()> action;

    auto *lattice = app.add_subcommand("lattice", "Lattice checks");
    lattice->require_subcommand(1);
    std::string lattice_spec;
    auto *lcheck = lattice->add_subcommand("check", "Check geometricity and Brun's inequality");
    lcheck->add_option("input", lattice_spec, "Lattice JSON path or generator (boolean:3, dowling:3:2, ...)")
        ->required();
    lcheck->callback([&] { action = [&] { return cmd_lattice_check(g, lattice_spec); }; });
    auto *lmob = lattice->add_subcommand("whitney", "Print Whitney numbers of both kinds");
    lmob->add_option("input", lattice_spec, "Lattice JSON path or generator")->required();
    lmob->callback([&] { action = [&] { return cmd_lattice_mobius(g, lattice_spec); }; });

    auto *sieve = app.add_subcommand("sieve", "Sieve computations");
    sieve->require_subcommand(1);
    std::string sieve_path;
    std::optional<std::size_t> cutoff;
    auto *srun = sieve->add_subcommand("run", "Evaluate a sieve instance");
    srun->add_option("input", sieve_path, "Sieve instance JSON")->required();
    srun->add_option("--cutoff", cutoff, "Brun cutoff k (default: all useful cutoffs)");
    srun->callback([&] { action = [&] { return cmd_sieve_run(g, sieve_path, cutoff); }; });
    unsigned sd_n = 3, sd_m = 2, sd_k = 1;
    auto *sdow = sieve->add_subcommand("dowling", "Canonical sieve on Q_n(Z_m)");
    sdow->add_option("--n", sd_n)->required();
    sdow->add_option("--m", sd_m)->required();
    sdow->add_option("--k", sd_k)->required();
    sdow->add_option("--cutoff", cutoff);
    sdow->callback([&] { action = [&] { return cmd_sieve_dowling(g, sd_n, sd_m, sd_k, cutoff); }; });

    verify::Options vopts;
    auto *ver = app.add_subcommand("verify", "Run the built-in verification suite");
    ver->add_option("--scope", vopts.scope, "all|lattice|matroid|dowling|sieve|asym|oracles");
    ver->add_flag("--fast", vopts.fast, "Smaller grids; skip the n=400 asymptotic point");
    ver->add_option("--digits", vopts.digits, "Working precision for asymptotics");
    ver->callback([&] { action = [&] { return cmd_verify(g, vopts); }; });

    auto *dow = app.add_subcommand("dowling", "Dowling lattices and Whitney numbers");
    dow->require_subcommand(1);
    std::string kind = "first";
    unsigned d_m = 1, d_r = 1, d_n = 1, d_t = 0, d_s = 0, d_nmax = 10;
    std::string out_path;
    auto *dtab = dow->add_subcommand("table", "Whitney triangle");
    dtab->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
    dtab->add_option("--m", d_m)->required();
    dtab->add_option("--r", d_r);
    dtab->add_option("--nmax", d_nmax)->required();
    dtab->callback([&] {
        action = [&] {
            // The table command defaults to CSV as documented.
            Globals tg = g;
            if (!app.get_option("--format")->count()) {
                tg.format = "csv";
            }
            return cmd_dowling_table(tg, kind, d_m, d_r, d_nmax);
        };
    });
    auto *dbuild = dow->add_subcommand("build", "Write Q_n(Z_m) as lattice JSON");
    dbuild->add_option("--n", d_n)->required();
    dbuild->add_option("--m", d_m)->required();
    dbuild->add_option("--out", out_path);
    dbuild->callback([&] { action = [&] { return cmd_dowling_build(g, d_n, d_m, out_path); }; });
    auto *dconv = dow->add_subcommand("conv", "Shifted convolution of Whitney numbers");
    dconv->add_option("--m", d_m)->required();
    dconv->add_option("--n", d_n)->required();
    dconv->add_option("--t", d_t)->required();
    dconv->add_option("--s", d_s)->required();
    dconv->callback([&] { action = [&] { return cmd_dowling_conv(g, d_m, d_n, d_t, d_s); }; });
    auto *dnum = dow->add_subcommand("numbers", "r-Dowling numbers D_{m,r}(0..nmax)");
    dnum->add_option("--m", d_m)->required();
    dnum->add_option("--r", d_r)->required();
    dnum->add_option("--nmax", d_nmax)->required();
    dnum->callback([&] { action = [&] { return cmd_dowling_numbers(g, d_m, d_r, d_nmax); }; });

    auto *asym = app.add_subcommand("asym", "Saddle-point asymptotics");
    asym->require_subcommand(1);
    unsigned a_m = 1, a_r = 1, a_n = 100, a_digits = default_asym_digits;
    bool a_compare = false;
    auto *adow = asym->add_subcommand("dowling", "Asymptotic for D_{m,r}(n)");
    adow->add_option("--m", a_m)->required();
    adow->add_option("--r", a_r)->required();
    adow->add_option("--n", a_n)->required();
    adow->add_flag("--compare-exact", a_compare);
    adow->add_option("--digits", a_digits);
    adow->callback([&] { action = [&] { return cmd_asym(g, a_m, a_r, a_n, a_compare, a_digits); }; });

    auto *brun = app.add_subcommand("brun", "Sequence checks");
    brun->require_subcommand(1);
    std::string seq_arg;
    auto *bcheck = brun->add_subcommand("check", "Alternating partial sums of a unimodal sequence");
    bcheck->add_option("sequence", seq_arg, "JSON array, CSV row, or a file holding either")->required();
    bcheck->callback([&] { action = [&] { return cmd_brun_check(g, seq_arg); }; });

    auto *mat = app.add_subcommand("matroid", "Matroid utilities");
    mat->require_subcommand(1);
    std::string mat_spec;
    auto *mcp = mat->add_subcommand("charpoly", "Characteristic polynomial");
    mcp->add_option("input", mat_spec, "Matroid JSON path or generator (uniform:2:4, graphic:k4)")->required();
    mcp->callback([&] { action = [&] { return cmd_matroid_charpoly(g, mat_spec); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const geosieve_error &e) {
        std::cerr << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
