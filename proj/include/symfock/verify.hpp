#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "symfock/fock.hpp"
#include "symfock/oracle.hpp"
#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"

namespace symfock {

/// Configuration of a verification suite run. negative_control swaps the
/// suite's designated perturbed operator in, which must make the suite fail;
/// a suite that cannot fail verifies nothing.
struct SuiteConfig {
    std::string suite;
    std::vector<int> p_values;
    int max_degree = 0;
    std::map<std::string, int> generator_bounds;
    unsigned long long seed = 20240809ull;
    bool negative_control = false;

    int bound(const std::string& key, int dflt) const {
        auto it = generator_bounds.find(key);
        return it == generator_bounds.end() ? dflt : it->second;
    }
};

struct VerificationFailure {
    std::string input;
    SymElt expected;
    SymElt got;
};

struct VerificationReport {
    std::string suite;
    SuiteConfig config;
    long cases_run = 0;
    std::vector<VerificationFailure> failures;
    std::chrono::duration<double> elapsed{};

    bool pass() const { return failures.empty(); }
};

/// Graded dimension of the twist-free factor: coefficients of
/// prod_{i >= 1, p does not divide i} (1 - q^i)^{-1}, i.e. the number of
/// partitions of n with no part divisible by p. This is the independent
/// yardstick for basic_rep_span.
inline std::vector<long long> character_oracle(int p, int max_degree) {
    if (p < 2) throw std::invalid_argument("character_oracle requires p >= 2");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    std::vector<long long> c(max_degree + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= max_degree; ++i) {
        if (i % p == 0) continue;
        for (int n = i; n <= max_degree; ++n) c[n] += c[n - i];
    }
    return c;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "heisenberg_p",     "heisenberg_eh",    "chevalley",
        "serre",            "adjointness",      "twist_commute",
        "twisted_binomial", "twisted_standard", "block_shift",
        "basic_rep_character", "conversions_roundtrip", "oracle_equivalence"};
    return names;
}

inline bool is_known_suite(const std::string& name) {
    auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

inline SuiteConfig default_config(const std::string& suite) {
    if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    SuiteConfig cfg;
    cfg.suite = suite;
    if (suite == "heisenberg_p" || suite == "heisenberg_eh") {
        cfg.p_values = {0, 2, 3};
        cfg.max_degree = 10;
        cfg.generator_bounds = {{"r", 4}, {"s", 4}};
    } else if (suite == "chevalley") {
        cfg.p_values = {0, 2, 3, 5};
        cfg.max_degree = 10;
    } else if (suite == "serre") {
        cfg.p_values = {2, 3};
        cfg.max_degree = 8;
    } else if (suite == "adjointness") {
        cfg.p_values = {0};
        cfg.max_degree = 8;
        cfg.generator_bounds = {{"triples", 200}};
    } else if (suite == "twist_commute") {
        cfg.p_values = {2, 3};
        cfg.max_degree = 8;
    } else if (suite == "twisted_binomial" || suite == "twisted_standard") {
        cfg.p_values = {2, 3};
        cfg.max_degree = 8;
        cfg.generator_bounds = {{"n", 3}, {"m", 3}};
    } else if (suite == "block_shift") {
        cfg.p_values = {2, 3};
        cfg.max_degree = 10;
    } else if (suite == "basic_rep_character") {
        cfg.p_values = {2, 3};
        cfg.max_degree = 8;
    } else if (suite == "conversions_roundtrip") {
        cfg.p_values = {0};
        cfg.max_degree = 10;
    } else if (suite == "oracle_equivalence") {
        cfg.p_values = {2, 3};
        cfg.max_degree = 6;
    }
    return cfg;
}

namespace detail {

struct SuiteRun {
    const SuiteConfig& cfg;
    VerificationReport& rep;

    void check(std::string input, const SymElt& expected, const SymElt& got) {
        ++rep.cases_run;
        if (!(expected == got)) rep.failures.push_back({std::move(input), expected, got});
    }
    void check_scalar(std::string input, const Rational& expected, const Rational& got) {
        check(std::move(input), SymElt::single(BasisTag::schur, Partition(), expected),
              SymElt::single(BasisTag::schur, Partition(), got));
    }
};

inline std::vector<long> residue_indices(int p, int max_degree) {
    std::vector<long> out;
    if (p >= 2)
        for (long i = 0; i < p; ++i) out.push_back(i);
    else
        for (long i = -(max_degree + 1); i <= max_degree + 1; ++i) out.push_back(i);
    return out;
}

/// Multiplication by p_r with every rim-hook height off by one: the
/// designated sign-error fixture.
inline SymElt perturbed_mul_p(int r, const SymElt& x) {
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& add : rim_hook_additions(lambda, r))
            out.add_term(add.result, (add.height + 1) % 2 ? -c : c);
    return out;
}

/// Adjoint of p_r with the rim-hook signs dropped.
inline SymElt unsigned_skew_p(int r, const SymElt& x) {
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& rem : rim_hook_removals(lambda, r)) out.add_term(rem.result, c);
    return out;
}

/// e_r-multiplication that double-counts strips touching the first row.
inline SymElt perturbed_mul_e(int r, const SymElt& x) {
    if (r == 0) return x;
    SymElt out(BasisTag::schur);
    for (auto& [lambda, c] : x.terms())
        for (auto& mu : vertical_strip_additions(lambda, r))
            out.add_term(mu, mu.part(1) > lambda.part(1) ? 2 * c : c);
    return out;
}

/// f_i that also adds boxes of residue i+1.
inline SymElt perturbed_apply_f(long i, const SymElt& v, int p) {
    return apply_f(i, v, p) + apply_f(i + 1, v, p);
}

inline SymElt perturbed_apply_e(long i, const SymElt& v, int p) {
    return apply_e(i, v, p) + apply_e(i + 1, v, p);
}

/// Twist with the exponent knocked off the sublattice: p_r -> p_{pr+1}.
inline SymElt perturbed_twist(const SymElt& x, int p) {
    SymElt xp = from_schur(to_schur(x), BasisTag::power);
    SymElt scaled(BasisTag::power);
    for (auto& [nu, c] : xp.terms()) {
        std::vector<int> parts = nu.parts();
        for (int& v : parts) v = v * p + 1;
        std::sort(parts.rbegin(), parts.rend());
        scaled.add_term(Partition(std::move(parts)), c);
    }
    return to_schur(scaled);
}

// -- suite runners ----------------------------------------------------------

inline void run_heisenberg_p(SuiteRun& run) {
    const auto& cfg = run.cfg;
    int R = cfg.bound("r", 4), S = cfg.bound("s", 4);
    auto lambdas = partitions_up_to(cfg.max_degree);
    for (int p : cfg.p_values) {
        validate_residue_modulus(p);
        for (int r = 1; r <= R; ++r)
            for (int s = 1; s <= S; ++s) {
                OperatorExpr adj_r = OperatorExpr::adj_by(SymElt::power_fn(r));
                OperatorExpr mul_s = OperatorExpr::mul_by(SymElt::power_fn(s));
                OperatorExpr comm = OperatorExpr::sum(
                    {OperatorExpr::compose(adj_r, mul_s),
                     OperatorExpr::scale(-1, OperatorExpr::compose(mul_s, adj_r))});
                for (auto& lambda : lambdas) {
                    FockElt v = SymElt::schur_fn(lambda);
                    FockElt got = cfg.negative_control
                                      ? skew_p(r, perturbed_mul_p(s, v)) - perturbed_mul_p(s, skew_p(r, v))
                                      : eval(comm, v, p);
                    FockElt expected = r == s ? Rational(s) * v : SymElt::zero();
                    run.check("p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                  " s=" + std::to_string(s) + " lambda=" + lambda.to_string(),
                              expected, got);
                }
            }
    }
}

inline void run_heisenberg_eh(SuiteRun& run) {
    const auto& cfg = run.cfg;
    int R = cfg.bound("r", 4), S = cfg.bound("s", 4);
    auto lambdas = partitions_up_to(cfg.max_degree);
    auto e_elt = [](int s) { return s == 0 ? SymElt::unit() : SymElt::elementary_fn(s); };
    auto h_elt = [](int r) { return r == 0 ? SymElt::unit() : SymElt::complete_fn(r); };
    auto mul_e_op = [&](int s, const SymElt& v) {
        return run.cfg.negative_control ? perturbed_mul_e(s, v) : mul(e_elt(s), v);
    };
    for (int p : cfg.p_values) {
        validate_residue_modulus(p);
        for (int r = 1; r <= R; ++r)
            for (int s = 1; s <= S; ++s)
                for (auto& lambda : lambdas) {
                    FockElt v = SymElt::schur_fn(lambda);
                    FockElt got = skew(h_elt(r), mul_e_op(s, v));
                    FockElt expected =
                        mul_e_op(s, skew(h_elt(r), v)) + mul_e_op(s - 1, skew(h_elt(r - 1), v));
                    run.check("p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                  " s=" + std::to_string(s) + " lambda=" + lambda.to_string(),
                              expected, got);
                }
    }
}

inline void run_chevalley(SuiteRun& run) {
    const auto& cfg = run.cfg;
    auto lambdas = partitions_up_to(cfg.max_degree);
    for (int p : cfg.p_values) {
        validate_residue_modulus(p);
        auto indices = residue_indices(p, cfg.max_degree);
        for (long i : indices)
            for (long j : indices) {
                OperatorExpr comm = OperatorExpr::sum(
                    {OperatorExpr::compose(OperatorExpr::e(i), OperatorExpr::f(j)),
                     OperatorExpr::scale(-1, OperatorExpr::compose(OperatorExpr::f(j), OperatorExpr::e(i)))});
                for (auto& lambda : lambdas) {
                    FockElt v = SymElt::schur_fn(lambda);
                    FockElt got = cfg.negative_control
                                      ? apply_e(i, perturbed_apply_f(j, v, p), p) -
                                            perturbed_apply_f(j, apply_e(i, v, p), p)
                                      : eval(comm, v, p);
                    FockElt expected = i == j ? apply_h(i, v, p) : SymElt::zero();
                    run.check("p=" + std::to_string(p) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j) + " lambda=" + lambda.to_string(),
                              expected, got);
                }
            }
    }
}

inline void run_serre(SuiteRun& run) {
    const auto& cfg = run.cfg;
    auto lambdas = partitions_up_to(cfg.max_degree);
    for (int p : cfg.p_values) {
        validate_residue_modulus(p);
        auto op = [&](bool raising, long i, const FockElt& v) {
            if (cfg.negative_control)
                return raising ? perturbed_apply_f(i, v, p) : perturbed_apply_e(i, v, p);
            return raising ? apply_f(i, v, p) : apply_e(i, v, p);
        };
        auto check_ad2 = [&](bool raising, long i, long j, const FockElt& v, const std::string& tag) {
            // x^2 y - 2 x y x + y x^2
            FockElt got = op(raising, i, op(raising, i, op(raising, j, v))) -
                          Rational(2) * op(raising, i, op(raising, j, op(raising, i, v))) +
                          op(raising, j, op(raising, i, op(raising, i, v)));
            run.check(tag, SymElt::zero(), got);
        };
        auto check_ad3 = [&](bool raising, long i, long j, const FockElt& v, const std::string& tag) {
            // x^3 y - 3 x^2 y x + 3 x y x^2 - y x^3
            auto X = [&](const FockElt& w) { return op(raising, i, w); };
            auto Y = [&](const FockElt& w) { return op(raising, j, w); };
            FockElt got = X(X(X(Y(v)))) - Rational(3) * X(X(Y(X(v)))) +
                          Rational(3) * X(Y(X(X(v)))) - Y(X(X(X(v))));
            run.check(tag, SymElt::zero(), got);
        };
        std::vector<std::pair<long, long>> adjacent;
        if (p == 2) {
            adjacent = {{0, 1}, {1, 0}};
        } else if (p >= 3) {
            for (long i = 0; i < p; ++i) {
                adjacent.push_back({i, (i + 1) % p});
                adjacent.push_back({i, (i - 1 + p) % p});
            }
            std::sort(adjacent.begin(), adjacent.end());
            adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
        } else {
            for (long i = -(cfg.max_degree + 1); i <= cfg.max_degree + 1; ++i) {
                adjacent.push_back({i, i + 1});
                adjacent.push_back({i, i - 1});
            }
        }
        for (auto [i, j] : adjacent)
            for (auto& lambda : lambdas) {
                FockElt v = SymElt::schur_fn(lambda);
                std::string base = "p=" + std::to_string(p) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j) + " lambda=" + lambda.to_string();
                if (p == 2) {
                    check_ad3(true, i, j, v, "serre3 f " + base);
                    check_ad3(false, i, j, v, "serre3 e " + base);
                } else {
                    check_ad2(true, i, j, v, "serre2 f " + base);
                    check_ad2(false, i, j, v, "serre2 e " + base);
                }
            }
    }
}

inline SymElt random_homogeneous(std::mt19937_64& rng, int degree, BasisTag basis) {
    auto parts = partitions_of(degree);
    auto pick = [&](unsigned long long n) { return static_cast<long>(rng() % n); };
    SymElt x(basis);
    int nterms = 1 + static_cast<int>(pick(2));
    for (int t = 0; t < nterms; ++t) {
        const Partition& la = parts[pick(parts.size())];
        long num = pick(7) - 3;
        if (num == 0) num = 1;
        long den = 1 + pick(2);
        x.add_term(la, Rational(num, den));
    }
    if (x.is_zero()) x.add_term(parts[0], 1);
    return x;
}

inline void run_adjointness(SuiteRun& run) {
    const auto& cfg = run.cfg;
    int triples = cfg.bound("triples", 200);
    std::mt19937_64 rng(cfg.seed);
    auto pick = [&](unsigned long long n) { return static_cast<long>(rng() % n); };
    auto tag = [](int t) { return "triple#" + std::to_string(t); };
    for (int t = 0; t < triples; ++t) {
        int dx = static_cast<int>(pick(cfg.max_degree + 1));
        int db = static_cast<int>(pick(std::min(dx, 4) + 1));
        int dy = dx - db;
        BasisTag bases[4] = {BasisTag::schur, BasisTag::elementary, BasisTag::complete,
                             BasisTag::power};
        SymElt b = random_homogeneous(rng, db, bases[pick(4)]);
        SymElt x = random_homogeneous(rng, dx, bases[pick(4)]);
        SymElt y = random_homogeneous(rng, dy, bases[pick(4)]);
        SymElt bx;
        if (cfg.negative_control) {
            SymElt xs = to_schur(x);
            SymElt bp = from_schur(to_schur(b), BasisTag::power);
            bx = SymElt(BasisTag::schur);
            for (auto& [nu, c] : bp.terms()) {
                SymElt cur = xs;
                for (int r : nu.parts()) cur = unsigned_skew_p(r, cur);
                bx += c * cur;
            }
        } else {
            bx = skew(b, x);
        }
        run.check_scalar(tag(t) + " b=" + b.to_string() + " x=" + x.to_string() +
                             " y=" + y.to_string(),
                         hall_inner(x, mul(b, y)), hall_inner(bx, y));
    }
}

inline void run_twist_commute(SuiteRun& run) {
    const auto& cfg = run.cfg;
    auto lambdas = partitions_up_to(cfg.max_degree);
    std::vector<SymElt> bs = {SymElt::elementary_fn(1), SymElt::elementary_fn(2),
                              SymElt::complete_fn(1),   SymElt::complete_fn(2),
                              SymElt::power_fn(1),      SymElt::power_fn(2)};
    for (int p : cfg.p_values) {
        if (p < 2) throw std::invalid_argument("twist_commute requires p >= 2");
        for (auto& b : bs) {
            SymElt tb = cfg.negative_control ? perturbed_twist(b, p) : to_schur(twist(b, p));
            for (int adj = 0; adj < 2; ++adj) {
                auto T = [&](const FockElt& v) { return adj ? skew(tb, v) : mul(tb, v); };
                for (long i = 0; i < p; ++i)
                    for (int raising = 0; raising < 2; ++raising) {
                        auto G = [&](const FockElt& v) {
                            return raising ? apply_f(i, v, p) : apply_e(i, v, p);
                        };
                        for (auto& lambda : lambdas) {
                            FockElt v = SymElt::schur_fn(lambda);
                            FockElt got = T(G(v)) - G(T(v));
                            run.check("p=" + std::to_string(p) + " b=" + b.to_string() +
                                          " op=" + (adj ? "tadj" : "tmul") +
                                          " gen=" + (raising ? "f_" : "e_") + std::to_string(i) +
                                          " lambda=" + lambda.to_string(),
                                      SymElt::zero(), got);
                        }
                    }
            }
        }
    }
}

inline void run_twisted_binomial(SuiteRun& run) {
    const auto& cfg = run.cfg;
    int N = cfg.bound("n", 3), M = cfg.bound("m", 3);
    auto lambdas = partitions_up_to(cfg.max_degree);
    for (int p : cfg.p_values) {
        if (p < 2) throw std::invalid_argument("twisted_binomial requires p >= 2");
        for (int n = 0; n <= N; ++n)
            for (int m = 0; m <= M; ++m)
                for (auto& lambda : lambdas) {
                    FockElt v = SymElt::schur_fn(lambda);
                    FockElt got = twisted_adj(n, twisted_mul(m, v, p), p);
                    FockElt expected(BasisTag::schur);
                    for (int j = 0; j <= std::min(n, m); ++j) {
                        Rational c(binomial(p, j));
                        if (cfg.negative_control) c += j;
                        if (c == 0) continue;
                        expected += c * twisted_mul(m - j, twisted_adj(n - j, v, p), p);
                    }
                    run.check("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                  " m=" + std::to_string(m) + " lambda=" + lambda.to_string(),
                              expected, got);
                }
    }
}

inline void run_twisted_standard(SuiteRun& run) {
    const auto& cfg = run.cfg;
    int N = cfg.bound("n", 3), M = cfg.bound("m", 3);
    auto lambdas = partitions_up_to(cfg.max_degree);
    for (int p : cfg.p_values) {
        if (p < 2) throw std::invalid_argument("twisted_standard requires p >= 2");
        for (int n = 1; n <= N; ++n)
            for (int m = 1; m <= M; ++m) {
                SymElt un = to_schur(twist(SymElt::power_fn(m), p));
                SymElt vn = to_schur(twist(SymElt::power_fn(n), p));
                for (auto& lambda : lambdas) {
                    FockElt v = SymElt::schur_fn(lambda);
                    FockElt got = skew(vn, mul(un, v)) - mul(un, skew(vn, v));
                    Rational c = n == m ? Rational(static_cast<long>(p) * n) : Rational(0);
                    if (cfg.negative_control && n == m) c += 1;
                    run.check("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                  " m=" + std::to_string(m) + " lambda=" + lambda.to_string(),
                              c * v, got);
                }
            }
    }
}

inline void run_block_shift(SuiteRun& run) {
    const auto& cfg = run.cfg;
    auto lambdas = partitions_up_to(cfg.max_degree);
    for (int p : cfg.p_values) {
        validate_residue_modulus(p);
        auto indices = residue_indices(p, cfg.max_degree);
        for (auto& lambda : lambdas) {
            WeightLabel base = weight_label(lambda, p);
            for (long i : indices) {
                for (int raising = 0; raising < 2; ++raising) {
                    FockElt im = raising ? apply_f(i, SymElt::schur_fn(lambda), p)
                                         : apply_e(i, SymElt::schur_fn(lambda), p);
                    long shift_at = cfg.negative_control ? i + 1 : i;
                    for (auto& [mu, c] : im.terms()) {
                        WeightLabel expected = base;
                        expected.add_unit(shift_at, raising ? 1 : -1);
                        WeightLabel got = weight_label(mu, p);
                        run.check("p=" + std::to_string(p) + (raising ? " f_" : " e_") +
                                      std::to_string(i) + " lambda=" + lambda.to_string() +
                                      " term=" + mu.to_string() + " expected_label=" +
                                      expected.to_string() + " got_label=" + got.to_string(),
                                  expected == got ? SymElt::zero() : SymElt::schur_fn(mu),
                                  SymElt::zero());
                    }
                }
            }
        }
        if (p >= 2) {
            // Nakayama consistency: same size and same p-core <=> same label.
            for (int n = 0; n <= cfg.max_degree; ++n) {
                auto pn = partitions_of(n);
                std::vector<WeightLabel> labels;
                std::vector<Partition> cores;
                for (auto& la : pn) {
                    labels.push_back(weight_label(la, p));
                    cores.push_back(cfg.negative_control
                                        ? la // pretend every partition is its own core
                                        : p_core(la, p));
                }
                for (std::size_t a = 0; a < pn.size(); ++a)
                    for (std::size_t b2 = a + 1; b2 < pn.size(); ++b2) {
                        bool same_block = labels[a] == labels[b2];
                        bool same_core = cores[a] == cores[b2];
                        run.check("p=" + std::to_string(p) + " nakayama lambda=" +
                                      pn[a].to_string() + " mu=" + pn[b2].to_string(),
                                  same_core ? SymElt::unit() : SymElt::zero(),
                                  same_block ? SymElt::unit() : SymElt::zero());
                    }
            }
        }
    }
}

inline void run_basic_rep_character(SuiteRun& run) {
    const auto& cfg = run.cfg;
    for (int p : cfg.p_values) {
        if (p < 2) throw std::invalid_argument("basic_rep_character requires p >= 2");
        auto graded = basic_rep_span(p, cfg.max_degree);
        std::vector<long long> expected_dims;
        if (cfg.negative_control) {
            expected_dims.assign(cfg.max_degree + 1, 0);
            for (int n = 0; n <= cfg.max_degree; ++n)
                expected_dims[n] = static_cast<long long>(partitions_of(n).size());
        } else {
            expected_dims = character_oracle(p, cfg.max_degree);
        }
        for (int n = 0; n <= cfg.max_degree; ++n)
            run.check_scalar("p=" + std::to_string(p) + " degree=" + std::to_string(n) +
                                 " dimension",
                             Rational(expected_dims[n]),
                             Rational(static_cast<long long>(graded[n].size())));
        // the span is g'-stable: e_i lowers into the previous layer, f_i
        // raises into the next
        for (int n = 0; n <= cfg.max_degree; ++n)
            for (auto& b : graded[n])
                for (int i = 0; i < p; ++i) {
                    if (n >= 1) {
                        FockElt w = apply_e(i, b, p);
                        run.check("p=" + std::to_string(p) + " e_" + std::to_string(i) +
                                      " stability degree=" + std::to_string(n),
                                  SymElt::zero(),
                                  in_span(graded[n - 1], w) ? SymElt::zero() : w);
                    }
                    if (n + 1 <= cfg.max_degree) {
                        FockElt w = apply_f(i, b, p);
                        run.check("p=" + std::to_string(p) + " f_" + std::to_string(i) +
                                      " stability degree=" + std::to_string(n),
                                  SymElt::zero(),
                                  in_span(graded[n + 1], w) ? SymElt::zero() : w);
                    }
                }
    }
}

inline void run_conversions_roundtrip(SuiteRun& run) {
    const auto& cfg = run.cfg;
    auto lambdas = partitions_up_to(cfg.max_degree);
    BasisTag bases[4] = {BasisTag::schur, BasisTag::elementary, BasisTag::complete,
                         BasisTag::power};
    // designated control: power expansion with the character signs dropped
    auto control_power = [](const Partition& lambda) {
        SymElt out(BasisTag::power);
        for (auto& mu : partitions_of(static_cast<int>(lambda.size()))) {
            long long chi = mn_character(lambda, mu);
            if (chi < 0) chi = -chi;
            if (chi != 0) out.add_term(mu, Rational(Integer(chi), z_value(mu)));
        }
        return out;
    };
    for (auto& lambda : lambdas) {
        for (BasisTag b : bases) {
            SymElt x = SymElt::single(b, lambda);
            run.check(std::string("roundtrip basis=") + basis_symbol(b) +
                          " lambda=" + lambda.to_string(),
                      x, from_schur(to_schur(x), b));
            SymElt s = SymElt::schur_fn(lambda);
            SymElt back;
            if (cfg.negative_control && b == BasisTag::power)
                back = to_schur(control_power(lambda));
            else
                back = to_schur(from_schur(s, b));
            run.check(std::string("inverse basis=") + basis_symbol(b) +
                          " lambda=" + lambda.to_string(),
                      s, back);
        }
    }
}

inline void run_oracle_equivalence(SuiteRun& run) {
    const auto& cfg = run.cfg;
    int D = cfg.max_degree, nvars = cfg.max_degree;
    auto lambdas = partitions_up_to(D);
    BasisTag bases[4] = {BasisTag::schur, BasisTag::elementary, BasisTag::complete,
                         BasisTag::power};
    std::map<std::pair<char, std::vector<int>>, MonomialPoly> polys;
    auto poly_of = [&](BasisTag b, const Partition& la) -> const MonomialPoly& {
        auto key = std::make_pair(basis_symbol(b), la.parts());
        auto it = polys.find(key);
        if (it != polys.end()) return it->second;
        return polys.emplace(key, monomial_oracle(SymElt::single(b, la), nvars)).first->second;
    };
    auto witness = [](bool ok) { return ok ? SymElt::zero() : SymElt::unit(); };

    // to_schur against the oracle; the control reroutes power sums through
    // the sign-flipped hook rule
    for (BasisTag b : bases) {
        if (b == BasisTag::schur) continue;
        for (auto& lambda : lambdas) {
            SymElt x = SymElt::single(b, lambda);
            SymElt xs;
            if (cfg.negative_control && b == BasisTag::power) {
                xs = SymElt::unit();
                for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it)
                    xs = perturbed_mul_p(*it, xs);
            } else {
                xs = to_schur(x);
            }
            bool ok = poly_of(b, lambda) == monomial_oracle(xs, nvars);
            run.check(std::string("to_schur basis=") + basis_symbol(b) +
                          " lambda=" + lambda.to_string(),
                      SymElt::zero(), witness(ok));
        }
    }
    // products, basis by basis
    for (BasisTag b : bases)
        for (auto& la : lambdas)
            for (auto& mu : lambdas) {
                if (la.size() + mu.size() > D || mu < la) continue;
                SymElt prod = mul(SymElt::single(b, la), SymElt::single(b, mu));
                bool ok = monomial_oracle(prod, nvars) == poly_mul(poly_of(b, la), poly_of(b, mu));
                run.check(std::string("mul basis=") + basis_symbol(b) + " lambda=" +
                              la.to_string() + " mu=" + mu.to_string(),
                          SymElt::zero(), witness(ok));
            }
    // twist against exponent substitution, on inputs small enough that the
    // twisted degree still fits in nvars
    for (int p : cfg.p_values) {
        if (p < 2) throw std::invalid_argument("oracle_equivalence twist checks require p >= 2");
        for (BasisTag b : bases)
            for (auto& lambda : lambdas) {
                if (lambda.size() * p > D) continue;
                SymElt x = SymElt::single(b, lambda);
                SymElt tx = cfg.negative_control ? perturbed_twist(x, p) : twist(x, p);
                bool ok = monomial_oracle(to_schur(tx), nvars) ==
                          poly_power_substitution(poly_of(b, lambda), p);
                run.check(std::string("twist p=") + std::to_string(p) + " basis=" +
                              basis_symbol(b) + " lambda=" + lambda.to_string(),
                          SymElt::zero(), witness(ok));
            }
    }
}

} // namespace detail

/// Runs one named suite. Throws std::invalid_argument on unknown names or a
/// p that a suite cannot accept; identity failures land in the report, not
/// in exceptions. Deterministic for a fixed config (the only randomness is
/// the seeded adjointness sampler).
inline VerificationReport run_suite(const SuiteConfig& cfg) {
    if (!is_known_suite(cfg.suite)) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
    if (cfg.p_values.empty()) throw std::invalid_argument("suite needs at least one p value");
    for (int p : cfg.p_values) validate_residue_modulus(p);
    if (cfg.max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");

    VerificationReport rep;
    rep.suite = cfg.suite;
    rep.config = cfg;
    detail::SuiteRun run{cfg, rep};

    auto t0 = std::chrono::steady_clock::now();
    if (cfg.suite == "heisenberg_p") detail::run_heisenberg_p(run);
    else if (cfg.suite == "heisenberg_eh") detail::run_heisenberg_eh(run);
    else if (cfg.suite == "chevalley") detail::run_chevalley(run);
    else if (cfg.suite == "serre") detail::run_serre(run);
    else if (cfg.suite == "adjointness") detail::run_adjointness(run);
    else if (cfg.suite == "twist_commute") detail::run_twist_commute(run);
    else if (cfg.suite == "twisted_binomial") detail::run_twisted_binomial(run);
    else if (cfg.suite == "twisted_standard") detail::run_twisted_standard(run);
    else if (cfg.suite == "block_shift") detail::run_block_shift(run);
    else if (cfg.suite == "basic_rep_character") detail::run_basic_rep_character(run);
    else if (cfg.suite == "conversions_roundtrip") detail::run_conversions_roundtrip(run);
    else if (cfg.suite == "oracle_equivalence") detail::run_oracle_equivalence(run);
    rep.elapsed = std::chrono::steady_clock::now() - t0;

    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const VerificationFailure& a, const VerificationFailure& b) {
                  return a.input < b.input;
              });
    return rep;
}

} // namespace symfock
