#include <geosieve/verify.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include <geosieve/asym.hpp>
#include <geosieve/brun.hpp>
#include <geosieve/dowling.hpp>
#include <geosieve/errors.hpp>
#include <geosieve/lattice_generators.hpp>
#include <geosieve/sieve.hpp>

namespace geosieve::verify
{

namespace
{

std::string join_failures(const std::vector<std::string> &failures)
{
    std::string s;
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) {
        s += (i ? "; " : "") + failures[i];
    }
    if (failures.size() > 5) {
        s += "; ... (" + std::to_string(failures.size()) + " total)";
    }
    return s;
}

CheckResult finish(std::string name, std::string scope, const std::vector<std::string> &failures,
                   const std::string &ok_detail)
{
    return CheckResult{std::move(name), std::move(scope), failures.empty(),
                       failures.empty() ? ok_detail : join_failures(failures)};
}

// Stirling numbers by their own recurrences, kept apart from the Whitney
// tables they are compared with.
std::vector<std::vector<BigInt>> stirling_first_unsigned(unsigned n_max)
{
    std::vector<std::vector<BigInt>> c(n_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
    c[0][0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            c[n][k] = c[n - 1][k - 1] + BigInt(n - 1) * c[n - 1][k];
        }
    }
    return c;
}

std::vector<std::vector<BigInt>> stirling_second(unsigned n_max)
{
    std::vector<std::vector<BigInt>> S(n_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
    S[0][0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            S[n][k] = S[n - 1][k - 1] + BigInt(k) * S[n - 1][k];
        }
    }
    return S;
}

std::vector<BigInt> bell_numbers(unsigned n_max)
{
    std::vector<BigInt> out{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (unsigned i = 1; i <= n_max; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto &v : row) {
            next.push_back(next.back() + v);
        }
        row = std::move(next);
        out.push_back(row.front());
    }
    return out;
}

CheckResult check_brun(const std::vector<ZooLattice> &zoo)
{
    std::vector<std::string> failures;
    for (const auto &z : zoo) {
        try {
            verify_brun(z.lattice);
        } catch (const geosieve_error &e) {
            failures.push_back(z.name + ": " + e.what());
        }
    }
    return finish("brun-inequality", "lattice", failures, std::to_string(zoo.size()) + " geometric lattices");
}

CheckResult check_alternating(const std::vector<ZooLattice> &zoo)
{
    std::vector<std::string> failures;
    std::size_t used = 0;
    for (const auto &z : zoo) {
        // A rank-0 lattice has |w| = (1); the alternating sum is chi(1) = 0
        // only from rank 1 on.
        if (z.lattice.rank() == 0) {
            continue;
        }
        ++used;
        const auto w = whitney_first_lattice(z.lattice);
        const auto a = absolute_whitney(w);
        bool brun_ok = true;
        try {
            verify_brun(z.lattice);
        } catch (const geosieve_error &) {
            brun_ok = false;
        }
        try {
            const auto rep = alternating_partial_sums_check(std::span<const BigInt>(a));
            if (rep.passed != brun_ok) {
                failures.push_back(z.name + ": verdicts disagree");
            }
        } catch (const geosieve_error &e) {
            failures.push_back(z.name + ": " + e.what());
        }
    }

    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<int> len(1, 12), step(0, 50), den(1, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        const int half = len(rng);
        std::vector<Rational> h;
        Rational v(step(rng), den(rng));
        for (int i = 0; i < half; ++i) {
            h.push_back(v);
            v += Rational(step(rng), den(rng));
        }
        // Mirroring an even-length sequence pairs each a_i with a_{n-i} of
        // opposite sign, so the alternating sum vanishes.
        std::vector<Rational> seq = h;
        seq.insert(seq.end(), h.rbegin(), h.rend());
        try {
            if (!alternating_partial_sums_check(std::span<const Rational>(seq)).passed) {
                failures.push_back("random sequence " + std::to_string(trial));
            }
        } catch (const geosieve_error &e) {
            failures.push_back("random sequence " + std::to_string(trial) + ": " + e.what());
        }
    }
    return finish("alternating-partial-sums", "lattice", failures,
                  std::to_string(used) + " zoo sequences + 1000 random");
}

CheckResult check_log_concave(const std::vector<ZooLattice> &zoo)
{
    std::vector<std::string> failures;
    for (const auto &z : zoo) {
        const auto a = absolute_whitney(whitney_first_lattice(z.lattice));
        if (!is_log_concave(std::span<const BigInt>(a)).log_concave || !is_unimodal(std::span<const BigInt>(a)).unimodal) {
            failures.push_back(z.name);
        }
    }
    for (unsigned m = 1; m <= 5; ++m) {
        const auto t = whitney_first_table(m, 40);
        for (unsigned n = 0; n <= 40; ++n) {
            std::vector<BigInt> row;
            for (const auto &v : t.rows[n]) {
                row.push_back(abs(v));
            }
            if (!is_log_concave(std::span<const BigInt>(row)).log_concave
                || !is_unimodal(std::span<const BigInt>(row)).unimodal) {
                failures.push_back("w_" + std::to_string(m) + " row " + std::to_string(n));
            }
        }
    }
    return finish("log-concavity", "lattice", failures, "zoo + w_m rows m<=5, n<=40");
}

CheckResult check_matroids()
{
    std::vector<std::string> failures;
    const auto zoo = matroid_zoo();
    for (const auto &z : zoo) {
        const auto chi = char_poly(z.matroid);
        const auto fl = flats_lattice(z.matroid);
        const auto mu = mobius(fl.lattice, fl.lattice.bottom());
        if (chi.coefficients != whitney_first_lattice(fl.lattice, mu)) {
            failures.push_back(z.name + ": char_poly != Whitney numbers of flats");
        }
        for (std::size_t i = 0; i < fl.flats.size(); ++i) {
            if (mobius_via_closure(z.matroid, fl.flats[i]) != mu[i]) {
                failures.push_back(z.name + ": closure formula fails at " + subset_to_string(fl.flats[i]));
                break;
            }
        }
    }
    return finish("matroid-lattice-consistency", "matroid", failures, std::to_string(zoo.size()) + " simple matroids");
}

CheckResult check_orthogonality()
{
    std::vector<std::string> failures;
    for (unsigned m = 1; m <= 5; ++m) {
        const auto rep = conv_orthogonality_check(m, 25);
        if (!rep.passed) {
            const auto [n, s, which] = *rep.counterexample;
            failures.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n) + " s=" + std::to_string(s)
                               + " identity " + std::to_string(which));
        }
    }
    return finish("whitney-orthogonality", "dowling", failures, "m<=5, n,s<=25");
}

CheckResult check_shifted_convolution()
{
    std::vector<std::string> failures;
    std::size_t triples = 0;
    for (unsigned m = 1; m <= 4; ++m) {
        const auto w = whitney_first_table(m, 8);
        const auto W = whitney_second_table(m, 1, 8 + 20);
        for (unsigned n = 0; n <= 8; ++n) {
            const auto Wr = whitney_second_table(m, 1 + m * n, 20);
            for (unsigned t = 0; t <= 12; ++t) {
                const auto series = conv_series(m, n, t, 20);
                for (unsigned s = 0; s <= 20; ++s) {
                    ++triples;
                    const auto c = shifted_convolution(w, W, n, t, s);
                    const BigInt expect = t < n ? BigInt(0) : Wr.at(s, static_cast<long>(t) - n);
                    if (c != series[s] || c != expect) {
                        failures.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n) + " t="
                                           + std::to_string(t) + " s=" + std::to_string(s));
                    }
                }
            }
        }
    }
    return finish("shifted-convolution", "dowling", failures, std::to_string(triples) + " triples");
}

std::vector<std::pair<unsigned, unsigned>> sieve_sizes()
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            out.emplace_back(n, m);
        }
    }
    out.emplace_back(5, 2);
    return out;
}

CheckResult check_sieve_closed_form()
{
    std::vector<std::string> failures;
    for (const auto &[n, m] : sieve_sizes()) {
        const auto D = std::make_shared<const DowlingLattice>(build_Qn(n, m));
        for (unsigned k = 0; k <= n; ++k) {
            const auto inst = dowling_sieve_instance(D, k);
            const BigInt exact(sifted_count_exact(inst));
            if (exact != dowling_sieve_closed_form(m, n, k)) {
                failures.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
        }
    }
    return finish("sieve-closed-form", "sieve", failures, "n<=4, m<=3 and (5,2), all k");
}

CheckResult check_brun_bounds()
{
    std::vector<std::string> failures;
    for (const auto &[n, m] : sieve_sizes()) {
        const auto D = std::make_shared<const DowlingLattice>(build_Qn(n, m));
        for (unsigned k = 0; k <= n; ++k) {
            const auto inst = dowling_sieve_instance(D, k);
            const BigInt exact(sifted_count_exact(inst));
            for (unsigned cut = 0; cut <= n; ++cut) {
                const auto b = brun_bounds(inst, cut);
                const bool settled = 2 * cut >= k;
                if (b.lower > exact || exact > b.upper || (settled && (b.lower != exact || b.upper != exact))) {
                    failures.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k)
                                       + " cutoff=" + std::to_string(cut));
                }
            }
        }
    }
    return finish("brun-bounds-sandwich", "sieve", failures, "all closed-form instances, every cutoff");
}

CheckResult check_asymptotics(const Options &opts)
{
    std::vector<std::string> failures;
    std::vector<unsigned> ns{50, 100, 200};
    if (!opts.fast) {
        ns.push_back(400);
    }
    std::ostringstream detail;
    for (const auto &[m, r] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}, {2, 3}}) {
        Real prev = -1;
        for (auto n : ns) {
            const auto c = compare_exact(m, r, n, opts.digits);
            if (prev >= 0 && !(c.rel_err < prev)) {
                failures.push_back("(m,r)=(" + std::to_string(m) + "," + std::to_string(r) + ") error not decreasing at n="
                                   + std::to_string(n));
            }
            prev = c.rel_err;
            if (m == 1 && r == 1 && n == 400 && !(c.rel_err < Real("0.05"))) {
                failures.push_back("(1,1) n=400 error " + c.rel_err.str(6));
            }
            if (m == 1 && r == 1) {
                detail << " n=" << n << ":" << c.rel_err.str(4);
            }
        }
    }
    return finish("saddle-point-asymptotic", "asym", failures, "(1,1) errors" + detail.str());
}

CheckResult check_oracles()
{
    std::vector<std::string> failures;
    constexpr unsigned N = 30;
    const auto c = stirling_first_unsigned(N + 1);
    const auto S = stirling_second(N + 1);
    const auto bell = bell_numbers(N + 1);
    const auto w1 = whitney_first_table(1, N);
    const auto W1 = whitney_second_table(1, 1, N);
    for (unsigned n = 0; n <= N; ++n) {
        if (dowling_number(1, n) != bell[n + 1]) {
            failures.push_back("D_1(" + std::to_string(n) + ")");
        }
        for (unsigned k = 0; k <= n; ++k) {
            if (abs(w1.at(n, k)) != c[n + 1][k + 1]) {
                failures.push_back("w_1(" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
            if (W1.at(n, k) != S[n + 1][k + 1]) {
                failures.push_back("W_1(" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
    }
    return finish("bell-stirling-oracles", "oracles", failures, "n<=30");
}

CheckResult check_dowling_tables()
{
    std::vector<std::string> failures;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            const auto D = build_Qn(n, m);
            if (!is_geometric(D.lattice).geometric) {
                failures.push_back("Q_" + std::to_string(n) + "(Z_" + std::to_string(m) + ") not geometric");
            }
            if (whitney_first_lattice(D.lattice) != rank_indexed_row(whitney_first_table(m, n), n)
                || whitney_second_lattice(D.lattice) != rank_indexed_row(whitney_second_table(m, 1, n), n)) {
                failures.push_back("Q_" + std::to_string(n) + "(Z_" + std::to_string(m) + ") Whitney mismatch");
            }
            for (std::size_t e = 0; e < D.lattice.size(); ++e) {
                if (!interval_profile_check(D, e).passed) {
                    failures.push_back("Q_" + std::to_string(n) + "(Z_" + std::to_string(m) + ") interval at "
                                       + D.elements[e].label());
                    break;
                }
            }
        }
    }
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned r = 0; r <= 4; ++r) {
            for (unsigned n = 0; n <= 12; ++n) {
                if (!r_whitney_definition_check(m, r, n)) {
                    failures.push_back("r-Whitney definition m=" + std::to_string(m) + " r=" + std::to_string(r)
                                       + " n=" + std::to_string(n));
                }
            }
        }
    }
    return finish("dowling-lattice-tables", "dowling", failures, "Q_n(Z_m) n<=4, m<=3; r-Whitney m<=4, r<=4, n<=12");
}

} // namespace

std::vector<ZooLattice> lattice_zoo()
{
    std::vector<ZooLattice> zoo;
    for (unsigned n = 1; n <= 8; ++n) {
        zoo.push_back({"B_" + std::to_string(n), boolean_lattice(n)});
    }
    for (unsigned n = 1; n <= 7; ++n) {
        zoo.push_back({"Pi_" + std::to_string(n), partition_lattice(n)});
    }
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            zoo.push_back({"Q_" + std::to_string(n) + "(Z_" + std::to_string(m) + ")", build_Qn(n, m).lattice});
        }
    }
    zoo.push_back({"Q_5(Z_2)", build_Qn(5, 2).lattice});
    for (const auto &z : matroid_zoo()) {
        zoo.push_back({"flats " + z.name, flats_lattice(z.matroid).lattice});
    }
    return zoo;
}

std::vector<ZooMatroid> matroid_zoo()
{
    std::vector<ZooMatroid> zoo;
    zoo.push_back({"U_{1,1}", Matroid::uniform(1, 1)});
    for (unsigned n = 2; n <= 8; ++n) {
        for (unsigned k = 2; k <= n; ++k) {
            zoo.push_back({"U_{" + std::to_string(k) + "," + std::to_string(n) + "}", Matroid::uniform(k, n)});
        }
    }
    zoo.push_back({"M(K_4)", Matroid::complete_graph(4)});
    zoo.push_back({"M(K_5)", Matroid::complete_graph(5)});
    return zoo;
}

const std::vector<std::string> &scopes()
{
    static const std::vector<std::string> s{"all", "lattice", "matroid", "dowling", "sieve", "asym", "oracles"};
    return s;
}

std::vector<CheckResult> run_checks(const Options &opts)
{
    if (std::find(scopes().begin(), scopes().end(), opts.scope) == scopes().end()) {
        raise(error_code::bad_params, "unknown scope '" + opts.scope + "'");
    }
    const auto wants = [&](const char *s) { return opts.scope == "all" || opts.scope == s; };

    std::vector<CheckResult> out;
    if (wants("lattice")) {
        const auto zoo = lattice_zoo();
        out.push_back(check_brun(zoo));
        out.push_back(check_alternating(zoo));
        out.push_back(check_log_concave(zoo));
    }
    if (wants("matroid")) {
        out.push_back(check_matroids());
    }
    if (wants("dowling")) {
        out.push_back(check_orthogonality());
        out.push_back(check_shifted_convolution());
        out.push_back(check_dowling_tables());
    }
    if (wants("sieve")) {
        out.push_back(check_sieve_closed_form());
        out.push_back(check_brun_bounds());
    }
    if (wants("asym")) {
        out.push_back(check_asymptotics(opts));
    }
    if (wants("oracles")) {
        out.push_back(check_oracles());
    }
    std::sort(out.begin(), out.end(), [](const CheckResult &a, const CheckResult &b) { return a.name < b.name; });
    return out;
}

} // namespace geosieve::verify
