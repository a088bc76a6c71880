// Command-line front end: exact tables and identity-verification sweeps.
//
// Exit codes: 0 all checks passed, 1 at least one identity instance failed,
// 2 usage or parameter error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "appell/appell_algebra.hpp"
#include "appell/identity.hpp"
#include "appell/moments.hpp"
#include "appell/oracle.hpp"
#include "appell/report.hpp"
#include "appell/seeded.hpp"
#include "appell/selftest.hpp"
#include "appell/stirling.hpp"

namespace {

using namespace appell;

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
        out.push_back(Rational::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<RandomVariable> parse_slot_list(const std::string& text, std::size_t m) {
    std::vector<RandomVariable> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        out.push_back(RandomVariable::parse(text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() == 1 && m > 1) out.assign(m, out[0]);
    if (out.size() != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " slot variables");
    return out;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
            os = &file;
        }
    }
};

struct SweepWriter {
    std::ostream& os;
    bool jsonl;
    bool any_failure = false;

    SweepWriter(std::ostream& stream, bool as_jsonl) : os(stream), jsonl(as_jsonl) {
        if (!jsonl) write_csv_header(os);
    }

    // Returns false after a failing record: the sweep stops so the failure
    // is the last record in the stream.
    bool add(const VerificationReport& rep) {
        if (jsonl)
            write_jsonl_row(os, rep);
        else
            write_csv_row(os, rep);
        if (!rep.equal) any_failure = true;
        return rep.equal;
    }
};

int run_table(const std::string& kind, unsigned n, std::optional<unsigned> r,
              const std::string& rv_name, const std::optional<std::string>& x_text,
              std::optional<unsigned> poly_degree, std::ostream& os) {
    if (kind == "bernoulli" || kind == "euler" || kind == "cauchy") {
        const AppellSeq seq = kind == "bernoulli" ? bernoulli_sequence(n)
                            : kind == "euler"     ? euler_sequence(n)
                                                  : cauchy_sequence(n);
        if (poly_degree) {
            if (*poly_degree > n) throw std::invalid_argument("--poly degree exceeds --n");
            const Poly p = appell_poly(seq, *poly_degree);
            for (std::size_t k = 0; k <= p.degree(); ++k)
                os << k << ' ' << p.coeff(k).str() << '\n';
        } else {
            seq.base.write_lines(os);
        }
        return 0;
    }
    if (kind == "stirling") {
        const auto table = classical_stirling_table(n);
        for (unsigned nn = 0; nn <= n; ++nn)
            for (unsigned rr = 0; rr <= nn; ++rr)
                os << nn << ' ' << rr << ' ' << table[nn][rr].str() << '\n';
        return 0;
    }
    if (kind == "stirling-y") {
        const RandomVariable rv = RandomVariable::parse(rv_name);
        const Rational x = x_text ? Rational::parse(*x_text) : Rational(0);
        if (r) {
            os << stirling_poly(rv, n, *r, x).str() << '\n';
        } else {
            const IidMomentTable sums(moments_of(rv, n), n);
            for (unsigned nn = 0; nn <= n; ++nn)
                for (unsigned rr = 0; rr <= nn; ++rr)
                    os << nn << ' ' << rr << ' ' << stirling_poly(sums, nn, rr, x).str() << '\n';
        }
        return 0;
    }
    throw CLI::ValidationError("table", "unknown table kind '" + kind + "'");
}

struct VerifyArgs {
    std::string identity;
    std::size_t m = 2;
    unsigned n_max = 8;
    std::string slots_text;
    std::string w_text;
    std::string alpha_text;
    std::string x_text;
    std::string y_text;
    std::string t_text;
    std::string rv_text;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = kDefaultSeed;
};

// Evaluation points: taken from --x when given (a single value broadcasts),
// otherwise drawn from the seeded pool, a fresh tuple per instance.
std::vector<Rational> instance_points(const VerifyArgs& a, std::size_t m, RationalPool& pool) {
    if (!a.x_text.empty()) {
        std::vector<Rational> xs = parse_rational_list(a.x_text);
        if (xs.size() == 1 && m > 1) xs.assign(m, xs[0]);
        if (xs.size() != m)
            throw std::invalid_argument("--x needs 1 or m values");
        return xs;
    }
    return pool.take(m);
}

MixedMomentOracle make_oracle(const VerifyArgs& a, std::size_t m) {
    const int given = int(!a.alpha_text.empty()) + int(!a.w_text.empty()) + int(!a.rv_text.empty());
    if (given != 1)
        throw std::invalid_argument("give exactly one of --alpha, --w, --rv to pick the weight vector");
    if (!a.alpha_text.empty()) {
        std::vector<Rational> alpha = parse_rational_list(a.alpha_text);
        if (alpha.size() != m) throw std::invalid_argument("--alpha needs m values");
        return MixedMomentOracle::dirichlet(std::move(alpha));
    }
    if (!a.w_text.empty()) {
        std::vector<Rational> w = parse_rational_list(a.w_text);
        if (w.size() != m) throw std::invalid_argument("--w needs m values");
        return MixedMomentOracle::deterministic(std::move(w));
    }
    return MixedMomentOracle::iid_product(RandomVariable::parse(a.rv_text), m);
}

int run_verify(const VerifyArgs& a, std::ostream& os) {
    RationalPool pool(a.seed);
    SweepWriter writer(os, a.format == "jsonl");

    const auto slots_or_default = [&](std::size_t m) {
        return a.slots_text.empty() ? std::vector<RandomVariable>(m, RandomVariable::uniform01())
                                    : parse_slot_list(a.slots_text, m);
    };

    if (a.identity == "theorem4") {
        const std::vector<RandomVariable> slots = slots_or_default(a.m);
        if (a.w_text.empty()) throw std::invalid_argument("theorem4 needs --w");
        const std::vector<Rational> w = parse_rational_list(a.w_text);
        if (w.size() != a.m) throw std::invalid_argument("--w needs m values");
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const std::vector<Rational> xs = instance_points(a, a.m, pool);
            appell::detail::Stopwatch clock;
            ConvolutionProblem p{slots, xs, MixedMomentOracle::deterministic(w), n};
            VerificationReport rep;
            rep.identity = "theorem4";
            rep.m = a.m;
            rep.n = n;
            rep.parameters = "slots=" + appell::detail::join_slots(slots) +
                             " w=" + appell::detail::join_rationals(w) +
                             " x=" + appell::detail::join_rationals(xs);
            rep.lhs = lhs_multinomial_sum(p);
            rep.rhs = theorem4_rhs(w, slots, xs, n);
            rep.equal = rep.lhs == rep.rhs;
            rep.lhs_route = "composition-sum";
            rep.rhs_route = "stirling+moment routes";
            rep.micros = clock.micros();
            if (!writer.add(rep)) break;
        }
    } else if (a.identity == "theorem5" || a.identity == "corollary41") {
        const std::vector<RandomVariable> slots = slots_or_default(a.m);
        MixedMomentOracle oracle = make_oracle(a, a.m);
        oracle.precompute(a.n_max);
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const std::vector<Rational> xs = instance_points(a, a.m, pool);
            appell::detail::Stopwatch clock;
            ConvolutionProblem p{slots, xs, oracle, n};
            VerificationReport rep;
            rep.identity = a.identity;
            rep.m = a.m;
            rep.n = n;
            rep.parameters = "slots=" + appell::detail::join_slots(slots) +
                             " oracle=" + oracle.descriptor() +
                             " x=" + appell::detail::join_rationals(xs);
            rep.lhs = lhs_multinomial_sum(p);
            rep.rhs = a.identity == "theorem5" ? theorem5_rhs(p) : corollary41_rhs(p);
            rep.equal = rep.lhs == rep.rhs;
            rep.lhs_route = "composition-sum";
            rep.rhs_route = a.identity;
            rep.micros = clock.micros();
            if (!writer.add(rep)) break;
        }
    } else if (a.identity == "corollary43") {
        if (a.alpha_text.empty()) throw std::invalid_argument("corollary43 needs --alpha");
        const std::vector<Rational> alpha = parse_rational_list(a.alpha_text);
        const std::size_t m = alpha.size();
        if (m < 2) throw std::invalid_argument("corollary43 needs at least two alpha entries");
        MixedMomentOracle oracle = MixedMomentOracle::dirichlet(alpha);
        oracle.precompute(a.n_max);
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const Rational x = a.x_text.empty() ? pool.next() : Rational::parse(a.x_text);
            appell::detail::Stopwatch clock;
            ConvolutionProblem p{std::vector<RandomVariable>(m, RandomVariable::uniform01()),
                                 std::vector<Rational>(m, x), oracle, n};
            VerificationReport rep;
            rep.identity = "corollary43";
            rep.m = m;
            rep.n = n;
            rep.parameters = "alpha=" + appell::detail::join_rationals(alpha) + " x=" + x.str();
            rep.lhs = lhs_multinomial_sum(p);
            rep.rhs = corollary43_rhs(alpha, n, x);
            rep.equal = rep.lhs == rep.rhs;
            rep.lhs_route = "composition-sum";
            rep.rhs_route = "dirichlet closed form";
            rep.micros = clock.micros();
            if (!writer.add(rep)) break;
        }
    } else if (a.identity == "corollary45") {
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const Rational x = a.x_text.empty() ? pool.next() : Rational::parse(a.x_text);
            appell::detail::Stopwatch clock;
            ConvolutionProblem p{std::vector<RandomVariable>(a.m, RandomVariable::uniform01()),
                                 std::vector<Rational>(a.m, x),
                                 MixedMomentOracle::iid_product(RandomVariable::exponential(), a.m), n};
            VerificationReport rep;
            rep.identity = "corollary45";
            rep.m = a.m;
            rep.n = n;
            rep.parameters = "x=" + x.str();
            rep.lhs = lhs_multinomial_sum(p);
            rep.rhs = corollary45_rhs(a.m, n, x);
            rep.equal = rep.lhs == rep.rhs;
            rep.lhs_route = "composition-sum";
            rep.rhs_route = "exponential closed form";
            rep.micros = clock.micros();
            if (!writer.add(rep)) break;
        }
    } else if (a.identity == "corollary46") {
        MixedMomentOracle oracle = MixedMomentOracle::iid_product(RandomVariable::std_normal(), a.m);
        oracle.precompute(a.n_max);
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const Rational x = a.x_text.empty() ? pool.next() : Rational::parse(a.x_text);
            appell::detail::Stopwatch clock;
            bool coeffs_ok = true;
            for_each_composition(n, a.m, [&](const MultiIndex& j) {
                if (normal_product_coefficient(j) != hermite_product_coefficient(j)) coeffs_ok = false;
            });
            ConvolutionProblem p{std::vector<RandomVariable>(a.m, RandomVariable::uniform01()),
                                 std::vector<Rational>(a.m, x), oracle, n};
            VerificationReport rep;
            rep.identity = "corollary46";
            rep.m = a.m;
            rep.n = n;
            rep.parameters = "x=" + x.str() + " coeff_routes_agree=" + (coeffs_ok ? "true" : "false");
            rep.lhs = lhs_multinomial_sum(p);
            rep.rhs = theorem5_rhs(p);
            rep.equal = coeffs_ok && rep.lhs == rep.rhs;
            rep.lhs_route = "composition-sum";
            rep.rhs_route = "theorem5 + hermite coefficients";
            rep.micros = clock.micros();
            if (!writer.add(rep)) break;
        }
    } else if (a.identity == "eq440") {
        for (unsigned n = 0; n <= a.n_max; ++n) {
            const Rational x = a.x_text.empty() ? pool.next() : Rational::parse(a.x_text);
            if (!writer.add(eq440_check(a.m, n, x))) break;
        }
    } else if (a.identity == "norlund") {
        for (unsigned n = 1; n <= a.n_max; ++n) {
            const Rational x = a.x_text.empty() ? pool.next() : Rational::parse(a.x_text);
            const Rational y = a.y_text.empty() ? pool.next() : Rational::parse(a.y_text);
            if (!writer.add(norlund_check(n, x, y))) break;
        }
    } else if (a.identity == "chu-vandermonde") {
        if (a.t_text.empty()) throw std::invalid_argument("chu-vandermonde needs --t");
        const std::vector<Rational> t = parse_rational_list(a.t_text);
        for (unsigned n = 0; n <= a.n_max; ++n)
            if (!writer.add(chu_vandermonde_check(t, n))) break;
    } else {
        throw std::invalid_argument("unknown identity '" + a.identity +
                                    "' (theorem4, theorem5, corollary41, corollary43, corollary45, "
                                    "corollary46, eq440, norlund, chu-vandermonde)");
    }

    return writer.any_failure ? 1 : 0;
}

int run_selftest(bool quick, bool inject_fault, std::uint64_t seed) {
    selftest::Options opt;
    opt.quick = quick;
    opt.corrupt_stirling = inject_fault;
    opt.seed = seed;
    const auto results = selftest::run_all(opt);
    bool all_pass = true;
    std::int64_t total = 0;
    for (const auto& r : results) {
        total += r.micros;
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  ("
                  << r.micros / 1000 << " ms, budget " << r.budget_ms << " ms)";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << '\n';
    }
    std::cout << (all_pass ? "selftest: all criteria passed" : "selftest: FAILURES present")
              << " in " << total / 1000 << " ms\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Appell-sequence tables and convolution-identity verification"};
    app.require_subcommand(1);

    // table
    std::string table_kind;
    unsigned table_n = 8;
    std::optional<unsigned> table_r;
    std::string table_rv = "uniform01";
    std::optional<std::string> table_x;
    std::optional<unsigned> table_poly;
    std::string table_out;
    CLI::App* table = app.add_subcommand("table", "emit an exact table");
    table->add_option("kind", table_kind, "bernoulli|euler|cauchy|stirling|stirling-y")->required();
    table->add_option("--n", table_n, "maximum order");
    table->add_option("--r", table_r, "stirling-y: fix the second index");
    table->add_option("--rv", table_rv, "stirling-y: associated random variable");
    table->add_option("--x", table_x, "stirling-y: evaluation point (default 0)");
    table->add_option("--poly", table_poly, "appell kinds: print coefficients of A_n for this n");
    table->add_option("--out", table_out, "output path (default stdout)");

    // verify
    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run an identity sweep and emit reports");
    verify->add_option("identity", va.identity, "identity name")->required();
    verify->add_option("--m", va.m, "arity (number of Appell slots)");
    verify->add_option("--n-max", va.n_max, "verify degrees 0..n-max");
    verify->add_option("--slots", va.slots_text, "comma list of slot variables (default uniform01)");
    verify->add_option("--w", va.w_text, "deterministic weight vector");
    verify->add_option("--alpha", va.alpha_text, "dirichlet parameters");
    verify->add_option("--rv", va.rv_text, "iid-product weight variable");
    verify->add_option("--x", va.x_text, "evaluation point(s); default seeded pool");
    verify->add_option("--y", va.y_text, "norlund: second evaluation point");
    verify->add_option("--t", va.t_text, "chu-vandermonde: parameter vector");
    verify->add_option("--format", va.format, "csv|jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    verify->add_option("--out", va.out_path, "output path (default stdout)");
    verify->add_option("--seed", va.seed, "seed for the rational pool");

    // selftest
    bool st_quick = false;
    bool st_fault = false;
    std::uint64_t st_seed = appell::kDefaultSeed;
    CLI::App* st = app.add_subcommand("selftest", "run the full invariant battery");
    st->add_flag("--quick", st_quick, "reduced sweep sizes");
    st->add_flag("--inject-fault", st_fault, "corrupt the stirling table (negative control)");
    st->add_option("--seed", st_seed, "seed for the rational pools");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // every usage error maps to the same code
    }

    try {
        if (table->parsed()) {
            OutputSink sink(table_out);
            return run_table(table_kind, table_n, table_r, table_rv, table_x, table_poly, *sink.os);
        }
        if (verify->parsed()) {
            OutputSink sink(va.out_path);
            return run_verify(va, *sink.os);
        }
        if (st->parsed()) return run_selftest(st_quick, st_fault, st_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
