#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <variant>

#include <CLI11.hpp>

#include "montdiv/mod_inverse.hpp"
#include "montdiv/pow2_mod.hpp"
#include "montdiv/quotient.hpp"
#include "montdiv/radix_power.hpp"
#include "montdiv/remainder.hpp"

namespace montdiv::cli {

namespace {

std::string render(const BigUint& v, bool hex) {
    return hex ? v.to_hex() : v.to_dec();
}

u64 pick_seed(const CLI::Option* opt, u64 flag_value) {
    if (opt->count()) return flag_value;
    if (const char* env = std::getenv("MONTDIV_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

BigUint random_dividend(size_t words, u64 seed) {
    std::mt19937_64 rng(seed);
    std::vector<u64> w(words);
    for (auto& v : w) v = rng();
    return BigUint(std::move(w));
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct BenchCfg {
    size_t words = 1u << 20;
    unsigned trials = 5;
    u64 seed = 1;
    BigUint q = BigUint::from_u64(16357897499336320049ULL);
};

void run_bench(const BenchCfg& cfg, std::ostream& out) {
    const BigUint x = random_dividend(cfg.words, cfg.seed);
    const DivisorSpec spec = make_divisor_spec(cfg.q);

    out << "op,fold,words,trials,ns_per_word,words_per_sec\n";
    for (const char* op : {"remainder", "divmod"}) {
        for (unsigned f : {1u, 2u, 4u}) {
            std::vector<double> ns_per_word;
            for (unsigned t = 0; t < cfg.trials; ++t) {
                const auto t0 = std::chrono::steady_clock::now();
                if (op[0] == 'r') {
                    volatile u64 sink = remainder(x, spec, f).word(0);
                    (void)sink;
                } else {
                    auto qr = div_rem(x, cfg.q, f);
                    volatile u64 sink = qr.first.word(0) ^ qr.second.word(0);
                    (void)sink;
                }
                const auto t1 = std::chrono::steady_clock::now();
                const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
                ns_per_word.push_back(ns / double(cfg.words));
            }
            const double npw = median(ns_per_word);
            out << op << ',' << f << ',' << cfg.words << ',' << cfg.trials << ','
                << npw << ',' << u64(1e9 / npw) << '\n';
        }
    }
}

} // namespace

BigUint parse_biguint(const std::string& text) {
    if (!text.empty() && text[0] == '@') return BigUint::read_limbs_file(text.substr(1));
    return BigUint::parse(text);
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Montgomery-multiply long division: remainder, quotient and "
                 "inverse-power-of-2 kernels for multiword dividends"};
    app.require_subcommand(1);

    std::string x_text, q_text;
    unsigned fold = 1;
    bool hex = false;
    u64 p = 0;
    unsigned findex = 0;
    bool inverse = false;
    u64 census_min = 6, census_max = u64(1) << 20;
    BenchCfg bench;

    auto* isdiv = app.add_subcommand("isdiv", "report whether q divides x");
    isdiv->add_option("--x", x_text, "dividend")->required();
    isdiv->add_option("--q", q_text, "divisor")->required();
    isdiv->add_option("--fold", fold, "folding factor (1, 2 or 4)");

    auto* divmod = app.add_subcommand("divmod", "remainder and quotient of x by q");
    divmod->add_option("--x", x_text, "dividend")->required();
    divmod->add_option("--q", q_text, "divisor")->required();
    divmod->add_option("--fold", fold, "folding factor (1, 2 or 4)");
    divmod->add_flag("--hex", hex, "hexadecimal output");

    auto* rem = app.add_subcommand("rem", "remainder of x by q");
    rem->add_option("--x", x_text, "dividend")->required();
    rem->add_option("--q", q_text, "divisor")->required();
    rem->add_option("--fold", fold, "folding factor (1, 2 or 4)");
    rem->add_flag("--hex", hex, "hexadecimal output");

    auto* pow2 = app.add_subcommand("pow2", "2^p or 2^-p modulo q");
    pow2->add_option("--p", p, "exponent")->required();
    pow2->add_option("--q", q_text, "odd modulus")->required();
    pow2->add_flag("--inverse", inverse, "compute 2^-p instead of 2^p");
    pow2->add_flag("--hex", hex, "hexadecimal output");

    auto* mers = app.add_subcommand("mersenne", "test whether q divides 2^p - 1");
    mers->add_option("--p", p, "Mersenne exponent")->required();
    mers->add_option("--q", q_text, "candidate divisor")->required();

    auto* ferm = app.add_subcommand("fermat", "test whether q divides 2^(2^f) + 1");
    ferm->add_option("--f", findex, "Fermat index")->required();
    ferm->add_option("--q", q_text, "candidate divisor")->required();

    auto* census = app.add_subcommand("census", "powering-bitmap set-bit statistics");
    census->add_option("--min", census_min, "lowest n (>= 6)");
    census->add_option("--max", census_max, "highest n, inclusive");

    auto* bcmd = app.add_subcommand("bench", "remainder/divmod throughput at fold 1, 2, 4");
    bcmd->add_option("--words", bench.words, "dividend size in 64-bit words");
    bcmd->add_option("--trials", bench.trials, "trials per configuration (median reported)");
    auto* seed_opt = bcmd->add_option("--seed", bench.seed, "PRNG seed (else MONTDIV_SEED, else 1)");
    std::string bench_q;
    bcmd->add_option("--q", bench_q, "divisor");

    std::reverse(args.begin(), args.end()); // CLI11 consumes back-to-front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*isdiv) {
            const BigUint x = parse_biguint(x_text);
            const BigUint q = parse_biguint(q_text);
            const BigUint r = remainder(x, make_divisor_spec(q), fold);
            const bool div = r.is_zero();
            out << (div ? "true" : "false") << "\n";
            return div ? 0 : 1;
        }
        if (*divmod) {
            const BigUint x = parse_biguint(x_text);
            const BigUint q = parse_biguint(q_text);
            const auto [y, r] = div_rem(x, q, fold);
            out << "remainder " << render(r, hex) << "\n";
            out << "quotient " << render(y, hex) << "\n";
            for (size_t i = 0; i < y.size(); ++i)
                out << "y[" << i << "] " << y.word(i) << "\n";
            return 0;
        }
        if (*rem) {
            const BigUint x = parse_biguint(x_text);
            const BigUint q = parse_biguint(q_text);
            out << "remainder " << render(remainder(x, make_divisor_spec(q), fold), hex) << "\n";
            return 0;
        }
        if (*pow2) {
            const CtxVariant ctx = make_ctx(parse_biguint(q_text));
            const BigUint v = std::visit(
                [&](const auto& c) {
                    using W = decltype(c.q);
                    const W s = inverse ? neg_pow2_mod(p, c) : pos_pow2_mod(p, c);
                    return BigUint::from_u128(u128(s));
                },
                ctx);
            out << render(v, hex) << "\n";
            return 0;
        }
        if (*mers) {
            const bool hit = mersenne_has_factor(p, parse_biguint(q_text));
            out << (hit ? "true" : "false") << "\n";
            return hit ? 0 : 1;
        }
        if (*ferm) {
            const bool hit = fermat_has_factor(findex, parse_biguint(q_text));
            out << (hit ? "true" : "false") << "\n";
            return hit ? 0 : 1;
        }
        if (*census) {
            const CensusResult res = bitmap_census(census_min, census_max);
            out << "pairs " << res.count << "\n";
            out << "sum " << res.sum << "\n";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10f", res.mean());
            out << "mean " << buf << "\n";
            out << "max " << res.max_diff << "\n";
            return 0;
        }
        if (*bcmd) {
            bench.seed = pick_seed(seed_opt, bench.seed);
            if (!bench_q.empty()) bench.q = parse_biguint(bench_q);
            run_bench(bench, out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace montdiv::cli
