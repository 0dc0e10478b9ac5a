#include "colpart/claims.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "colpart/bijection.hpp"
#include "colpart/frobenius.hpp"
#include "colpart/partition.hpp"
#include "colpart/qseries.hpp"
#include "json.hpp"

namespace colpart {

namespace {

// ---------------------------------------------------------------- oracles

std::vector<long long> partition_numbers(int max) {
    std::vector<long long> p(max + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max; ++n)
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    return p;
}

// Partitions of m with no part divisible by n.
std::vector<long long> regular_partition_numbers(int n, int max) {
    std::vector<long long> dp(max + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= max; ++part) {
        if (part % n == 0) continue;
        for (int m = part; m <= max; ++m) dp[m] += dp[m - part];
    }
    return dp;
}

// Partitions of m into distinct parts, none congruent to +-1 mod 6.
std::vector<long long> distinct_mod6_numbers(int max) {
    std::vector<long long> dp(max + 1, 0);
    dp[0] = 1;
    for (int part = 2; part <= max; ++part) {
        int r = part % 6;
        if (r == 1 || r == 5) continue;
        for (int m = max; m >= part; --m) dp[m] += dp[m - part];
    }
    return dp;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Records mismatches into the report; in test mode the first comparison is
// perturbed so the reporting path itself is exercised.
struct Comparer {
    VerificationReport& report;
    bool corrupt_pending;

    void series(const QSeries& expected, const QSeries& actual, const std::string& context) {
        QSeries rhs = actual;
        if (corrupt_pending) {
            corrupt_pending = false;
            int at = std::min(1, rhs.order());
            rhs.coeff(at).add_term(Mono(rhs.nvars(), 0), 1);
        }
        const int order = std::min(expected.order(), rhs.order());
        for (int m = 0; m <= order; ++m) {
            std::set<Mono> monos;
            for (const auto& [e, c] : expected.coeff(m).terms()) monos.insert(e);
            for (const auto& [e, c] : rhs.coeff(m).terms()) monos.insert(e);
            for (const auto& e : monos) {
                ++report.checked_terms;
                Int want = expected.coeff(m).coeff(e);
                Int got = rhs.coeff(m).coeff(e);
                if (want != got && report.pass) {
                    report.pass = false;
                    report.first_mismatch =
                        Mismatch{m, mono_str(e) + (context.empty() ? "" : " [" + context + "]"),
                                 want.str(), got.str()};
                }
            }
            if (expected.coeff(m).is_zero() && rhs.coeff(m).is_zero()) ++report.checked_terms;
        }
    }

    void counts(const std::vector<long long>& expected, const std::vector<long long>& actual,
                const std::string& context) {
        std::vector<long long> rhs = actual;
        if (corrupt_pending && !rhs.empty()) {
            corrupt_pending = false;
            rhs[std::min<size_t>(1, rhs.size() - 1)] += 1;
        }
        for (size_t m = 0; m < std::min(expected.size(), rhs.size()); ++m) {
            ++report.checked_terms;
            if (expected[m] != rhs[m] && report.pass) {
                report.pass = false;
                report.first_mismatch = Mismatch{static_cast<int>(m), context,
                                                 std::to_string(expected[m]),
                                                 std::to_string(rhs[m])};
            }
        }
    }

    void flag(bool ok, int q, const std::string& context, const std::string& expected,
              const std::string& actual) {
        ++report.checked_terms;
        if (corrupt_pending) {
            corrupt_pending = false;
            ok = false;
        }
        if (!ok && report.pass) {
            report.pass = false;
            report.first_mismatch = Mismatch{q, context, expected, actual};
        }
    }
};

// Multivariate generating function of an enumerated family, with monomial
// a_i^{+1} a_k^{-1} per bound part a_i b_k (free parts contribute nothing).
QSeries family_gf(const MembershipSpec& spec, int n, int order, unsigned long long budget) {
    QSeries gf(n, order);
    enumerate_members_unordered(
        spec, order,
        [&](const ColouredPartition& p) {
            Mono mono(n, 0);
            for (const auto& part : p) {
                if (!part.colour.is_bound()) continue;
                ++mono[part.colour.a_index()];
                --mono[part.colour.b_index()];
            }
            gf.coeff(static_cast<int>(weight(p))).add_term(mono, 1);
        },
        budget);
    return gf;
}

QSeries frobenius_gf(int n, int order, unsigned long long budget) {
    QSeries gf(n, order);
    enumerate_frobenius(
        n, order,
        [&](const FrobeniusPartition& f) {
            Mono mono(n, 0);
            for (size_t j = 0; j < f.top.size(); ++j) {
                if (f.top[j].second == f.bottom[j].second) continue;
                ++mono[f.top[j].second];
                --mono[f.bottom[j].second];
            }
            gf.coeff(static_cast<int>(frob_weight(f))).add_term(mono, 1);
        },
        budget);
    return gf;
}

int defaulted(int value, int fallback) { return value > 0 ? value : fallback; }

unsigned long long budget_of(const ClaimParams& p) {
    return p.force ? kNoNodeBudget : p.node_budget;
}

using ClaimFn = std::function<void(const ClaimParams&, VerificationReport&, Comparer&)>;

// ------------------------------------------------------------------- claims

void claim_primc(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 2);
    const int N = defaulted(params.order, n >= 3 ? 10 : 14);
    report.n = n;
    report.order = N;
    QSeries product = constant_term_product(n, N);
    QSeries members = family_gf(MembershipSpec::pn(n), n, N, budget_of(params));
    QSeries symbols = frobenius_gf(n, N, budget_of(params));
    cmp.series(product, members, "difference-condition side");
    cmp.series(product, symbols, "two-row symbol side");
    report.detail = "enumerated both families and expanded the constant-term product";
}

void claim_primc_kernel(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 3);
    const int budget = defaulted(params.order, 8);
    report.n = n;
    report.order = budget;

    std::vector<ColourSequence> kernels;
    for (int len = 0; len <= 3; ++len)
        for (auto& s : all_reduced_sequences(n, len)) kernels.push_back(std::move(s));
    // deterministic sample of longer kernels
    auto len4 = all_reduced_sequences(n, 4);
    std::mt19937 rng(20240 + n);
    std::shuffle(len4.begin(), len4.end(), rng);
    for (size_t i = 0; i < std::min<size_t>(4, len4.size()); ++i) kernels.push_back(len4[i]);

    int max_order = 0;
    std::map<ColourSequence, int> order_for;
    for (const auto& S : kernels) {
        int o = static_cast<int>(minimal_weight(S, Metric::Delta)) + budget;
        order_for[S] = o;
        max_order = std::max(max_order, o);
    }

    // One pass per family, bucketed by kernel.
    std::map<ColourSequence, std::vector<long long>> p_hist, f_hist;
    for (const auto& S : kernels) {
        p_hist[S].assign(max_order + 1, 0);
        f_hist[S].assign(max_order + 1, 0);
    }
    enumerate_members_unordered(
        MembershipSpec::pn(n), max_order,
        [&](const ColouredPartition& p) {
            auto k = kernel_of(p);
            if (k.size() > 4) return;
            auto it = p_hist.find(k);
            if (it != p_hist.end()) ++it->second[weight(p)];
        },
        budget_of(params));
    enumerate_frobenius(
        n, max_order,
        [&](const FrobeniusPartition& f) {
            auto k = frob_kernel(f);
            if (k.size() > 4) return;
            auto it = f_hist.find(k);
            if (it != f_hist.end()) ++it->second[frob_weight(f)];
        },
        budget_of(params));

    for (const auto& S : kernels) {
        const int order = order_for[S];
        const auto ks = kernel_structure(S);
        QSeries coloured(0, order), symbols(0, order);
        for (int m = 0;; ++m) {
            if (minimal_weight(S, Metric::Delta) + m > order) break;
            coloured += kernel_gf(ks, m, KernelGfForm::Coloured, order);
            symbols += kernel_gf(ks, m, KernelGfForm::Frobenius, order);
        }
        QSeries brute_p(0, order), brute_f(0, order);
        for (int w = 0; w <= order; ++w) {
            if (long long c = p_hist[S][w]; c != 0) brute_p.coeff(w).add_term(Mono{}, c);
            if (long long c = f_hist[S][w]; c != 0) brute_f.coeff(w).add_term(Mono{}, c);
        }
        const std::string tag = format_colour_sequence(S);
        cmp.series(brute_p, brute_f, tag + " (two enumerations)");
        cmp.series(brute_p, coloured, tag + " (closed form)");
        cmp.series(brute_f, symbols, tag + " (two-row closed form)");
    }
    report.detail = std::to_string(kernels.size()) + " kernels, each through q^(minimal+" +
                    std::to_string(budget) + ")";
}

void claim_capparelli(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 2);
    const int N = defaulted(params.order, n >= 3 ? 9 : 12);
    report.n = n;
    report.order = N;
    DeltaGammaTable table = load_table(params.table, n);
    QSeries rhs = constant_term_product(n, N).mul_univariate(euler_product(1, N));
    QSeries members = family_gf(MembershipSpec::cn(n, table), n, N, budget_of(params));
    cmp.series(rhs, members, "pattern-avoiding family vs product");
    report.detail = "table " + params.table;
}

void claim_main2(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 4);
    const int N = defaulted(params.order, 15);
    report.n = n;
    report.order = N;
    QSeries ct = constant_term_product(n, N);
    cmp.series(ct, jacobi_sum_form(n, N), "theta-sum form");
    cmp.series(ct, product_sum_form(n, N), "product-sum form");
}

void claim_primc_spec(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int N = defaulted(params.order, 20);
    report.order = N;
    auto p = partition_numbers(N);
    std::vector<int> ns = params.n > 0 ? std::vector<int>{params.n} : std::vector<int>{2, 3, 4};
    report.n = ns.front();
    for (int n : ns) {
        QSeries spec = constant_term_product_specialised(n, N);
        std::vector<long long> got;
        for (int m = 0; m <= N; ++m)
            got.push_back(spec.coeff(m).coeff(Mono{}).convert_to<long long>());
        cmp.counts(p, got, "n=" + std::to_string(n));
    }
    report.detail = "principal specialisation vs pentagonal recurrence";
}

void claim_cap_spec(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int N = defaulted(params.order, 20);
    report.order = N;
    std::vector<int> ns = params.n > 0 ? std::vector<int>{params.n} : std::vector<int>{2, 3, 4};
    report.n = ns.front();
    for (int n : ns) {
        auto reg = regular_partition_numbers(n, N);
        QSeries lhs =
            constant_term_product_specialised(n, N).mul_univariate(euler_product(n, N));
        std::vector<long long> got;
        for (int m = 0; m <= N; ++m)
            got.push_back(lhs.coeff(m).coeff(Mono{}).convert_to<long long>());
        cmp.counts(reg, got, "n=" + std::to_string(n));
    }
    report.detail = "specialised series vs no-part-divisible-by-n counts";
}

void claim_primc_nondilated(const ClaimParams& params, VerificationReport& report,
                            Comparer& cmp) {
    const int N = defaulted(params.order, 12);
    report.n = 2;
    report.order = N;
    // variables (a, c, d) = colours a1b0, a1b1, a0b1; the a0b0 count is summed out
    QSeries members(3, N);
    enumerate_members_unordered(
        MembershipSpec::pn(2), N,
        [&](const ColouredPartition& p) {
            Mono mono(3, 0);
            for (const auto& part : p) {
                if (part.colour == Colour(1, 0)) ++mono[0];
                if (part.colour == Colour(1, 1)) ++mono[1];
                if (part.colour == Colour(0, 1)) ++mono[2];
            }
            members.coeff(static_cast<int>(weight(p))).add_term(mono, 1);
        },
        budget_of(params));
    QSeries product = product_one_plus(mono_unit(3, 0), 1, 2, 3, N);    // (-aq;q^2)inf
    product = product * product_one_plus(mono_unit(3, 2), 1, 2, 3, N);  // (-dq;q^2)inf
    product = product * inv_euler(3, N);                                // 1/(q;q)inf
    // 1/(cq;q^2)inf
    QSeries codd = QSeries::one(3, N);
    for (int e = 1; e <= N; e += 2) codd.mul_one_plus(mono_unit(3, 1), e, -1);
    product = product * codd.inverse();
    cmp.series(product, members, "four-statistic generating function");
}

void claim_capparelli_aag(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int N = defaulted(params.order, 12);
    report.n = 2;
    report.order = N;
    DeltaGammaTable table = load_table("mp", 2);
    QSeries members(2, N);
    enumerate_members_unordered(
        MembershipSpec::cn(2, table), N,
        [&](const ColouredPartition& p) {
            Mono mono(2, 0);
            for (const auto& part : p) {
                if (part.colour == Colour(1, 0)) ++mono[0];
                if (part.colour == Colour(0, 1)) ++mono[1];
            }
            members.coeff(static_cast<int>(weight(p))).add_term(mono, 1);
        },
        budget_of(params));
    QSeries product = product_one_plus(Mono(2, 0), 1, 1, 2, N);         // (-q;q)inf
    product = product * product_one_plus(mono_unit(2, 0), 1, 2, 2, N);  // (-aq;q^2)inf
    product = product * product_one_plus(mono_unit(2, 1), 1, 2, 2, N);  // (-dq;q^2)inf
    cmp.series(product, members, "two-statistic generating function");
}

void claim_capparelli_classical(const ClaimParams& params, VerificationReport& report,
                                Comparer& cmp) {
    const int M = defaulted(params.order, 40);
    report.n = 2;
    report.order = M;
    DeltaGammaTable table = load_table("mp", 2);
    // parts k_a -> 3k-1, k_c -> 3k, k_d -> 3k+1
    PartDilation dilation;
    dilation.mult = 3;
    dilation.offsets = {{Colour(1, 0), -1}, {Colour(0, 1), 1}};
    auto dilated =
        dilated_weight_counts(MembershipSpec::cn(2, table), dilation, M, budget_of(params));
    cmp.counts(distinct_mod6_numbers(M), dilated,
               "dilated counts vs distinct parts not +-1 mod 6");
}

void claim_primc_dilated(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 2);
    if (n != 2 && n != 3)
        throw std::invalid_argument("primc-dilated: available for n = 2 and n = 3");
    const int M = defaulted(params.order, n == 2 ? 15 : 12);
    report.n = n;
    report.order = M;
    // part k with colour a_i b_j maps to n*k - i + j
    auto dilated = dilated_weight_counts(MembershipSpec::pn(n), PartDilation::principal(n), M,
                                         budget_of(params));
    cmp.counts(partition_numbers(M), dilated, "dilated counts vs partition numbers");
}

void claim_bijection(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 2);
    const int W = defaulted(params.order, n >= 3 ? 10 : 14);
    report.n = n;
    report.order = W;
    DeltaGammaTable table = load_table(params.table, n);
    auto cn = MembershipSpec::cn(n, table);

    std::map<long long, long long> image, mu_count, nu_count, product;
    bool all_ok = true;
    std::string witness;
    enumerate_members_unordered(
        MembershipSpec::pn(n), W,
        [&](const ColouredPartition& lambda) {
            auto pair = phi(lambda, table);
            bool ok = is_member(pair.mu, cn).member &&
                      is_member(pair.nu, MembershipSpec::p0()).member &&
                      weight(pair.mu) + weight(pair.nu) == weight(lambda) &&
                      pair.mu.size() + pair.nu.size() == lambda.size() &&
                      phi_inverse(pair, table) == lambda;
            std::multiset<int> s1, s2;
            std::map<Colour, int> b1, b2;
            for (const auto& q : lambda) {
                s1.insert(q.size);
                if (q.colour.is_bound()) ++b1[q.colour];
            }
            for (const auto& q : pair.mu) {
                s2.insert(q.size);
                if (q.colour.is_bound()) ++b2[q.colour];
            }
            for (const auto& q : pair.nu) s2.insert(q.size);
            ok = ok && s1 == s2 && b1 == b2;
            ++report.checked_terms;
            if (!ok && all_ok) {
                all_ok = false;
                witness = format_partition(lambda);
            }
            ++image[weight(lambda)];
        },
        budget_of(params));
    cmp.flag(all_ok, 0, "round trips and conservation", "all conserved",
             all_ok ? "ok" : witness);
    enumerate_members_unordered(
        cn, W, [&](const ColouredPartition& p) { ++mu_count[weight(p)]; }, budget_of(params));
    enumerate_members_unordered(
        MembershipSpec::p0(), W, [&](const ColouredPartition& p) { ++nu_count[weight(p)]; },
        budget_of(params));
    for (auto [wm, cm] : mu_count)
        for (auto [wn, c2] : nu_count)
            if (wm + wn <= W) product[wm + wn] += cm * c2;
    std::vector<long long> lhs, rhs;
    for (int w = 0; w <= W; ++w) {
        lhs.push_back(product.count(w) ? product[w] : 0);
        rhs.push_back(image.count(w) ? image[w] : 0);
    }
    cmp.counts(lhs, rhs, "product-set count vs image count");
    report.detail = "table " + params.table;
}

void claim_pn_fn_bound(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 2);
    const int W = defaulted(params.order, 12);
    report.n = n;
    report.order = W;
    // 2n variables: a_0..a_{n-1} then b_0..b_{n-1}; occurrences counted on
    // bound colours only
    QSeries members(2 * n, W), symbols(2 * n, W);
    enumerate_members_unordered(
        MembershipSpec::pn(n), W,
        [&](const ColouredPartition& p) {
            Mono mono(2 * n, 0);
            for (const auto& part : p) {
                if (!part.colour.is_bound()) continue;
                ++mono[part.colour.a_index()];
                ++mono[n + part.colour.b_index()];
            }
            members.coeff(static_cast<int>(weight(p))).add_term(mono, 1);
        },
        budget_of(params));
    enumerate_frobenius(
        n, W,
        [&](const FrobeniusPartition& f) {
            Mono mono(2 * n, 0);
            for (size_t j = 0; j < f.top.size(); ++j) {
                if (f.top[j].second == f.bottom[j].second) continue;
                ++mono[f.top[j].second];
                ++mono[n + f.bottom[j].second];
            }
            symbols.coeff(static_cast<int>(frob_weight(f))).add_term(mono, 1);
        },
        budget_of(params));
    cmp.series(members, symbols, "bound-colour statistics");
}

void claim_qbinom_lemmas(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    auto suite = qbinom_lemma_suite(params.corrupt);
    std::string names;
    for (const auto& check : suite.checks) {
        report.checked_terms += check.cases;
        if (!check.pass && report.pass) {
            report.pass = false;
            report.first_mismatch = Mismatch{0, check.name, "identity", check.first_failure};
        }
        names += (names.empty() ? "" : ", ") + check.name;
    }
    report.detail = names;

    // insertion-weight formula against direct minimal weights: kernels of
    // length <= 4 over n = 4 (which subsumes the smaller alphabets); the
    // per-entry grid is exhaustive to 3 for length <= 3 kernels, and the
    // length-4 layer covers every vector with total <= 3
    long long checked = 0;
    bool ok = true;
    std::string witness;
    for (int len = 1; len <= 4 && ok; ++len) {
        for (const auto& S : all_reduced_sequences(4, len)) {
            auto ks = kernel_structure(S);
            const int sites = ks.s + ks.t;
            std::vector<int> counts(sites, 0);
            const bool per_entry = len <= 3;
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (!ok) return;
                if (i == sites) {
                    ++checked;
                    if (minimal_weight_after_insertion(ks, counts) !=
                        minimal_weight(insert_counts(ks, counts), Metric::Delta)) {
                        ok = false;
                        witness = format_colour_sequence(S);
                    }
                    return;
                }
                int hi = per_entry ? 3 : left;
                for (int v = 0; v <= hi; ++v) {
                    counts[i] = v;
                    rec(i + 1, per_entry ? left : left - v);
                }
                counts[i] = 0;
            };
            rec(0, 3);
            if (!ok) break;
        }
    }
    report.checked_terms += checked;
    cmp.flag(ok, 0, "insertion weight formula", "agreement", ok ? "ok" : witness);
}

void claim_structure(const ClaimParams& params, VerificationReport& report, Comparer& cmp) {
    const int n = defaulted(params.n, 4);
    report.n = n;
    report.order = defaulted(params.order, 10);
    std::vector<Colour> cs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cs.push_back(Colour(a, b));

    {
        bool ok = true;
        for (Colour c : cs)
            for (Colour d : cs)
                for (Colour e : cs) ok = ok && delta(c, d) <= delta(c, e) + delta(e, d);
        report.checked_terms += static_cast<long long>(cs.size()) * cs.size() * cs.size();
        cmp.flag(ok, 0, "triangle inequality", "holds", ok ? "ok" : "violated");
    }
    {
        bool ok = true;
        for (Colour c : cs)
            for (Colour d : cs) {
                bool zero = delta(c, d) == 0;
                bool classified =
                    (c == d && c.is_free()) ||
                    (c.is_bound() && d.is_free() && c.a_index() < d.a_index() &&
                     d.a_index() <= c.b_index()) ||
                    (c.is_free() && d.is_bound() && d.b_index() < c.a_index() &&
                     c.a_index() <= d.a_index()) ||
                    (c.is_bound() && d.is_bound() && c.a_index() < d.a_index() &&
                     c.b_index() > d.b_index());
                ok = ok && zero == classified;
            }
        report.checked_terms += static_cast<long long>(cs.size()) * cs.size();
        cmp.flag(ok, 0, "zero-difference classification", "matches", ok ? "ok" : "violated");
    }
    {
        bool ok = true;
        long long runs = 0;
        enumerate_members_unordered(
            MembershipSpec::pn(n), defaulted(params.order, 10),
            [&](const ColouredPartition& p) {
                size_t j = 0;
                while (j < p.size()) {
                    size_t k = j;
                    while (k + 1 < p.size() && p[k + 1].size == p[j].size) ++k;
                    ++runs;
                    int free_spans = 0;
                    for (size_t t = j; t <= k; ++t)
                        if (p[t].colour.is_free() && (t == j || p[t - 1].colour != p[t].colour))
                            ++free_spans;
                    ok = ok && free_spans <= 1;
                    for (size_t t = j; t + 1 <= k; ++t) {
                        const Colour c1 = p[t].colour, c2 = p[t + 1].colour;
                        if (c1.is_bound() && c2.is_bound())
                            ok = ok && c1.a_index() < c2.a_index() && c1.b_index() > c2.b_index();
                    }
                    j = k + 1;
                }
            },
            budget_of(params));
        report.checked_terms += runs;
        cmp.flag(ok, 0, "equal-part run structure", "single free span, rigid chains",
                 ok ? "ok" : "violated");
    }
    {
        bool ok = true;
        long long cases = 0;
        const int p = 3;
        auto pn = MembershipSpec::pn(n);
        auto member = [&](const ColouredPartition& q) { return is_member(q, pn).member; };
        for (Colour c1 : cs)
            for (Colour c2 : cs) {
                if (!c1.is_bound() || !c2.is_bound()) continue;
                const int k1 = c1.a_index(), l1 = c1.b_index();
                const int k2 = c2.a_index(), l2 = c2.b_index();
                if (k1 < l1 && k2 > l2) {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            for (int r = 0; r <= 2; ++r)
                                for (int r2 = 0; r2 <= 2; ++r2) {
                                    if (r == 0 && r2 == 0) continue;
                                    ColouredPartition q{{p + 1, c1}};
                                    for (int t = 0; t < r; ++t)
                                        q.push_back({p + 1, Colour::free_colour(i)});
                                    for (int t = 0; t < r2; ++t)
                                        q.push_back({p, Colour::free_colour(j)});
                                    q.push_back({p, c2});
                                    bool want = (r == 0 || (k1 < i && i <= l1)) &&
                                                (r2 == 0 || (l2 < j && j <= k2));
                                    ++cases;
                                    ok = ok && member(q) == want;
                                }
                } else if (k1 > l1 && k2 > l2) {
                    for (int i = 0; i < n; ++i)
                        for (int r = 1; r <= 2; ++r) {
                            ColouredPartition q{{p + 1, c1}};
                            for (int t = 0; t < r; ++t) q.push_back({p, Colour::free_colour(i)});
                            q.push_back({p, c2});
                            bool pair_ok = k1 < k2 || l1 > l2;
                            bool want = pair_ok && (l2 < i && i <= k2) && !(l1 < i && i <= k1);
                            ++cases;
                            ok = ok && member(q) == want;
                        }
                } else if (k1 < l1 && k2 < l2) {
                    for (int i = 0; i < n; ++i)
                        for (int r = 1; r <= 2; ++r) {
                            ColouredPartition q{{p + 1, c1}};
                            for (int t = 0; t < r; ++t)
                                q.push_back({p + 1, Colour::free_colour(i)});
                            q.push_back({p, c2});
                            bool pair_ok = k1 < k2 || l1 > l2;
                            bool want = pair_ok && (k1 < i && i <= l1) && !(k2 < i && i <= l2);
                            ++cases;
                            ok = ok && member(q) == want;
                        }
                }
            }
        report.checked_terms += cases;
        cmp.flag(ok, 0, "bracket insertion admissibility", "matches case analysis",
                 ok ? "ok" : "violated");
    }
    {
        bool ok = true;
        std::vector<Colour> ext = cs;
        ext.push_back(Colour::sentinel());
        for (Colour prev : ext)
            for (Colour target : cs) {
                if (!target.is_bound()) continue;
                if (prev.b_index() == target.a_index()) continue;
                ok = ok && left_insertion_type(prev, target, Metric::DeltaDoublePrime) ==
                               1 - left_insertion_type(prev, target);
            }
        for (Colour source : cs)
            for (Colour next : ext) {
                if (!source.is_bound()) continue;
                if (next.a_index() == source.b_index()) continue;
                ok = ok && right_insertion_type(source, next, Metric::DeltaDoublePrime) ==
                               1 - right_insertion_type(source, next);
            }
        report.checked_terms += 2LL * cs.size() * cs.size();
        cmp.flag(ok, 0, "secondary type flip", "flips", ok ? "ok" : "violated");
    }
}

const std::map<std::string, ClaimFn>& registry() {
    static const std::map<std::string, ClaimFn> reg = {
        {"primc", claim_primc},
        {"primc-kernel", claim_primc_kernel},
        {"capparelli", claim_capparelli},
        {"main2", claim_main2},
        {"primc-spec", claim_primc_spec},
        {"cap-spec", claim_cap_spec},
        {"primc-nondilated", claim_primc_nondilated},
        {"capparelli-aag", claim_capparelli_aag},
        {"capparelli-classical", claim_capparelli_classical},
        {"primc-dilated", claim_primc_dilated},
        {"bijection", claim_bijection},
        {"pn-fn-bound", claim_pn_fn_bound},
        {"qbinom-lemmas", claim_qbinom_lemmas},
        {"structure", claim_structure},
    };
    return reg;
}

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
}

VerificationReport run_claim(const std::string& id, const ClaimParams& params) {
    auto it = registry().find(id);
    if (it == registry().end()) throw std::invalid_argument("unknown claim: " + id);
    VerificationReport report;
    report.claim = id;
    report.table = params.table;
    report.pass = true;
    Comparer cmp{report, params.corrupt};
    Timer timer;
    try {
        it->second(params, report, cmp);
    } catch (const BudgetExceeded& e) {
        throw InfeasibleBounds("claim " + id + ": " + e.what() +
                               "; rerun with smaller bounds or --force");
    }
    report.wall_seconds = timer.seconds();
    return report;
}

DeltaGammaTable load_table(const std::string& name_or_path, int n) {
    if (name_or_path == "mp") return builtin_delta_gamma(TableVariant::MeurmanPrimc, n);
    if (name_or_path == "alt") return builtin_delta_gamma(TableVariant::Alt, n);

    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("load_table: cannot open " + name_or_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("load_table: parse error in " + name_or_path + ": " +
                                    e.what());
    }
    DeltaGammaTable t;
    t.n = j.at("n").get<int>();
    if (n > 0 && t.n != n)
        throw std::invalid_argument("load_table: table has n = " + std::to_string(t.n) +
                                    ", expected " + std::to_string(n));
    auto parse_pair = [](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("load_table: bad index pair '" + s + "'");
        return std::pair{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    };
    for (const auto& [key, value] : j.at("delta").items()) {
        auto [k, l] = parse_pair(key);
        t.delta[Colour(k, l)] = value.get<int>();
    }
    if (j.contains("gamma"))
        for (const auto& [key, value] : j.at("gamma").items()) {
            auto bar = key.find('|');
            if (bar == std::string::npos)
                throw std::invalid_argument("load_table: bad gamma key '" + key + "'");
            auto [k1, l1] = parse_pair(key.substr(0, bar));
            auto [k2, l2] = parse_pair(key.substr(bar + 1));
            t.gamma[{Colour(k1, l1), Colour(k2, l2)}] = value.get<int>();
        }
    auto v = validate_delta_gamma(t);
    if (!v.ok) {
        std::string msg = "load_table: table rejected:";
        for (const auto& s : v.violations) msg += "\n  " + s;
        throw std::invalid_argument(msg);
    }
    return t;
}

std::string table_to_json(const DeltaGammaTable& table) {
    nlohmann::json j;
    j["n"] = table.n;
    nlohmann::json d = nlohmann::json::object(), g = nlohmann::json::object();
    for (const auto& [c, v] : table.delta)
        d[std::to_string(c.a_index()) + "," + std::to_string(c.b_index())] = v;
    for (const auto& [pair, v] : table.gamma) {
        const auto& [c1, c2] = pair;
        g[std::to_string(c1.a_index()) + "," + std::to_string(c1.b_index()) + "|" +
          std::to_string(c2.a_index()) + "," + std::to_string(c2.b_index())] = v;
    }
    j["delta"] = d;
    j["gamma"] = g;
    return j.dump(2);
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["claim"] = claim;
    j["params"] = {{"n", n}, {"order", order}, {"table", table}};
    j["status"] = pass ? "pass" : "fail";
    j["checked_terms"] = checked_terms;
    if (first_mismatch) {
        j["first_mismatch"] = {{"q", first_mismatch->q},
                               {"monomial", first_mismatch->monomial},
                               {"expected", first_mismatch->expected},
                               {"actual", first_mismatch->actual}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["wall_seconds"] = wall_seconds;
    j["detail"] = detail;
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " " << claim << " (n=" << n << ", order=" << order
       << ", table=" << table << "): " << checked_terms << " terms checked in " << wall_seconds
       << " s";
    if (!detail.empty()) os << "\n  " << detail;
    if (first_mismatch)
        os << "\n  first mismatch at q^" << first_mismatch->q << " " << first_mismatch->monomial
           << ": expected " << first_mismatch->expected << ", got " << first_mismatch->actual;
    return os.str();
}

}  // namespace colpart
