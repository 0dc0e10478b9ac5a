#include <functional>

#include "colpart/partition.hpp"
#include "colpart/qseries.hpp"
#include "colpart/sequence.hpp"

namespace colpart {

namespace {

// The staircase decompositions extend the Gaussian binomial by
// [-1 choose 0]_q = 1 (an empty box); everything else is the standard value.
ZPoly qb_ext(int n, int k) { return (n == -1 && k == 0) ? ZPoly::one() : qbinom(n, k); }

// All vectors of `len` non-negative integers summing to `total`.
void compositions(int len, int total, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& f) {
    if (len == 0) {
        if (total == 0) f(cur);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(len - 1, total - v, cur, f);
        cur.pop_back();
    }
}

struct Checker {
    LemmaSuiteReport& report;
    LemmaCheck* current = nullptr;

    void begin(const std::string& name) {
        report.checks.push_back({name, 0, true, ""});
        current = &report.checks.back();
    }
    void expect(bool ok, const std::string& context) {
        ++current->cases;
        if (!ok && current->pass) {
            current->pass = false;
            current->first_failure = context;
            report.pass = false;
        }
    }
};

}  // namespace

LemmaSuiteReport qbinom_lemma_suite(bool inject_failure) {
    LemmaSuiteReport report;
    Checker ck{report};

    // g inversion: g_{u,v}(1/q; 2-x_1..2-x_v) = q^{-u(2v+u-1)} g_{u,v}(q; x).
    ck.begin("g-inversion");
    for (int v = 0; v <= 4; ++v) {
        std::vector<int> xs(v, 0);
        std::function<void(int)> walk = [&](int k) {
            if (k == v) {
                std::vector<int> flipped(v);
                for (int j = 0; j < v; ++j) flipped[j] = 2 - xs[j];
                for (int u = 0; u <= v; ++u) {
                    ZPoly lhs = g_poly(u, v, flipped).inverted_q();
                    ZPoly rhs = g_poly(u, v, xs).shifted(-u * (2 * v + u - 1));
                    if (inject_failure && u == 1 && v == 1) rhs = rhs.shifted(1);
                    ck.expect(lhs == rhs, "u=" + std::to_string(u) + " v=" + std::to_string(v));
                }
                return;
            }
            for (int x = 0; x <= 2; ++x) {
                xs[k] = x;
                walk(k + 1);
            }
        };
        walk(0);
    }

    // Ferrers cut: 1/(q;q)_{s+m} = sum_{m'} q^{(m'-u)(s+m')}/(q;q)_{s+m'} [m-u
    // choose m'-u], compared through q^20.
    ck.begin("ferrers-cut");
    const int N = 20;
    for (int s = 1; s <= 6; ++s)
        for (int m = 0; m <= 6; ++m)
            for (int u = 0; u <= m; ++u) {
                QSeries lhs = inv_finite_euler(s + m, 0, N);
                QSeries rhs(0, N);
                for (int mp = u; mp <= m; ++mp) {
                    ZPoly coeff = qbinom(m - u, mp - u).shifted((mp - u) * (s + mp));
                    rhs += inv_finite_euler(s + mp, 0, N).mul_univariate(coeff);
                }
                ck.expect(lhs == rhs,
                          "s=" + std::to_string(s) + " m=" + std::to_string(m) +
                              " u=" + std::to_string(u));
            }

    // Staircase: q^m [m + l_1+..+l_t - 1 choose m] as a sum over chains
    // 0 = x_0 <= x_1 <= ... <= x_t = m.
    ck.begin("staircase");
    for (int t = 1; t <= 3; ++t) {
        std::vector<int> ls(t, 0);
        std::function<void(int)> walk = [&](int k) {
            if (k == t) {
                int L = 0;
                for (int l : ls) L += l;
                for (int m = 0; m <= 6; ++m) {
                    ZPoly lhs = qb_ext(m + L - 1, m).shifted(m);
                    ZPoly rhs;
                    std::vector<int> xs(t + 1, 0);
                    std::function<void(int)> chains = [&](int r) {
                        if (r == t) {
                            if (xs[t - 1] > m) return;
                            xs[t] = m;
                            ZPoly term = ZPoly::q_power(m);
                            for (int j = 1; j <= t; ++j) {
                                int d = xs[j] - xs[j - 1];
                                term = term * qb_ext(d + ls[j - 1] - 1, d).shifted(ls[j - 1] *
                                                                                   xs[j - 1]);
                            }
                            rhs += term;
                            return;
                        }
                        for (int x = xs[r - 1]; x <= m; ++x) {
                            xs[r] = x;
                            chains(r + 1);
                        }
                    };
                    chains(1);
                    ck.expect(lhs == rhs, "t=" + std::to_string(t) + " m=" + std::to_string(m));
                }
                return;
            }
            for (int l = 0; l <= 3; ++l) {
                ls[k] = l;
                walk(k + 1);
            }
        };
        walk(0);
    }

    // Path bijection: subsets of [1..a+b] of size a, weighted by crossings.
    ck.begin("path-bijection");
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            ZPoly lhs;
            std::vector<int> in(a + b, 0);
            std::function<void(int, int)> subsets = [&](int pos, int chosen) {
                if (chosen == a) {
                    int e = 0, outside = 0;
                    for (int j = 0; j < a + b; ++j) {
                        if (in[j])
                            e += outside;
                        else
                            ++outside;
                    }
                    lhs.add_term(e, 1);
                    return;
                }
                if (pos == a + b || a + b - pos < a - chosen) return;
                in[pos] = 1;
                subsets(pos + 1, chosen + 1);
                in[pos] = 0;
                subsets(pos + 1, chosen);
            };
            subsets(0, 0);
            ck.expect(lhs == qbinom(a + b, a), "a=" + std::to_string(a) + " b=" + std::to_string(b));
        }

    // Product rule: [a+b choose c] = sum_{a'} [a choose a'][b choose c-a']
    // q^{a'(b-c+a')}.
    ck.begin("binomial-product-rule");
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c) {
                ZPoly rhs;
                for (int ap = 0; ap <= std::min(a, c); ++ap) {
                    ZPoly t = qbinom(a, ap) * qbinom(b, c - ap);
                    rhs += t.shifted(ap * (b - c + ap));
                }
                ck.expect(qbinom(a + b, c) == rhs, "a=" + std::to_string(a) + " b=" +
                                                       std::to_string(b) + " c=" +
                                                       std::to_string(c));
            }

    // Big rearrangement of the composition sum's binomial factor.
    ck.begin("binomial-rearrangement");
    for (int t = 1; t <= 2; ++t) {
        std::vector<int> t0(t, 0), kk(t, 0);
        std::function<void(int)> walk = [&](int u) {
            if (u == t) {
                int T0 = 0, K = 0;
                for (int j = 0; j < t; ++j) T0 += t0[j], K += kk[j];
                for (int nn = 0; nn <= 3; ++nn)
                    for (int m = K; m <= 5; ++m) {
                        ZPoly lhs = qb_ext(m - 1 + nn + T0, m - K).shifted(m - K);
                        long long pre = m;
                        for (int j = 0; j < t; ++j) {
                            long long tail = 1 + nn;
                            for (int v = j + 1; v < t; ++v) tail += kk[v] + t0[v];
                            pre -= kk[j] * tail;
                        }
                        ZPoly rhs;
                        std::vector<int> ms(t + 1, 0);
                        std::function<void(int)> chains = [&](int r) {
                            if (r == t + 1) {
                                ZPoly term = ZPoly::one();
                                for (int j = 1; j <= t; ++j) {
                                    int d = ms[j] - ms[j - 1];
                                    term = term * qb_ext(d + t0[j - 1] - 1, d - kk[j - 1])
                                                      .shifted((kk[j - 1] + t0[j - 1]) *
                                                               ms[j - 1]);
                                }
                                term = term * qb_ext(m - ms[t] + nn - 1, m - ms[t])
                                                  .shifted(nn * ms[t]);
                                rhs += term;
                                return;
                            }
                            for (int x = ms[r - 1]; x <= m; ++x) {
                                ms[r] = x;
                                chains(r + 1);
                            }
                        };
                        chains(1);
                        rhs = rhs.shifted(static_cast<int>(pre));
                        ck.expect(lhs == rhs, "t=" + std::to_string(t) + " N=" +
                                                  std::to_string(nn) + " m=" + std::to_string(m));
                    }
                return;
            }
            for (int x = 0; x <= 2; ++x)
                for (int k = 0; k <= 2 - x; ++k) {
                    t0[u] = x;
                    kk[u] = k;
                    walk(u + 1);
                }
        };
        walk(0);
    }

    // The remaining identities quantify over reduced colour sequences.
    auto sequences = [] {
        std::vector<ColourSequence> all;
        for (int len = 1; len <= 3; ++len) {
            auto batch = all_reduced_sequences(3, len);
            all.insert(all.end(), batch.begin(), batch.end());
        }
        return all;
    }();

    // Fixed-support generating function and the left-shift count behind it.
    ck.begin("fixed-support-gf");
    for (const auto& S : sequences) {
        KernelStructure ks = kernel_structure(S);
        const int total = ks.s + ks.t;
        std::vector<int> t1_sites;
        for (const auto& site : ks.sites)
            if (site.cls == SiteClass::Type1) t1_sites.push_back(site.index);
        const auto t0_per = ks.type0_per_span();
        const int Ncount = ks.neutral_count();
        const int T0 = ks.type0_count();
        const long long minw = minimal_weight(S, Metric::Delta);

        for (int mask = 0; mask < (1 << t1_sites.size()); ++mask) {
            std::vector<int> support;
            for (size_t b = 0; b < t1_sites.size(); ++b)
                if (mask & (1 << b)) support.push_back(t1_sites[b]);

            // Sigma_1 two ways.
            std::vector<char> in_support(total + 1, 0), active(total + 1, 0);
            for (int j : support) in_support[j] = 1;
            for (const auto& site : ks.sites)
                active[site.index] = site.cls != SiteClass::Type1 || in_support[site.index];
            long long sigma_direct = 0;
            for (const auto& site : ks.sites) {
                if (!in_support[site.index]) continue;
                long long P = site.left ? site.position - 1 : site.position;
                long long suffix = 0;
                for (int j = site.index; j <= total; ++j) suffix += active[j];
                sigma_direct += P + suffix;
            }
            long long sigma_formula = 0;
            for (int u = 1; u <= ks.t; ++u) {
                long long su = 0, tail = Ncount + u - 1;
                std::vector<int> s1u;
                for (const auto& site : ks.sites)
                    if (site.owner == u && site.cls == SiteClass::Type1) {
                        if (in_support[site.index]) s1u.push_back(site.index);
                    }
                for (int v = u; v <= ks.t; ++v) {
                    tail += t0_per[v - 1];
                    for (const auto& site : ks.sites)
                        if (site.owner == v && site.cls == SiteClass::Type1 &&
                            in_support[site.index])
                            ++tail;
                }
                su += tail * static_cast<long long>(s1u.size());
                for (int j : s1u)
                    for (const auto& site : ks.sites)
                        if (site.owner == u && site.cls == SiteClass::Type1 &&
                            !in_support[site.index] && site.index < j)
                            ++su;
                sigma_formula += su;
            }
            ck.expect(sigma_direct == sigma_formula,
                      "sigma_1 on " + format_colour_sequence(S) + " mask " +
                          std::to_string(mask));

            for (int m = static_cast<int>(support.size()); m <= 4; ++m) {
                ZPoly direct;
                std::vector<int> cur;
                compositions(total, m, cur, [&](const std::vector<int>& counts) {
                    for (int j : t1_sites) {
                        bool want = in_support[j];
                        if ((counts[j - 1] > 0) != want) return;
                    }
                    direct.add_term(
                        static_cast<int>(minimal_weight(insert_counts(ks, counts), Metric::Delta)),
                        1);
                });
                ZPoly closed =
                    qb_ext(m - 1 + Ncount + T0, m - static_cast<int>(support.size()))
                        .shifted(static_cast<int>(minw + sigma_direct + m - support.size()));
                ck.expect(direct == closed, "H on " + format_colour_sequence(S) + " mask " +
                                                std::to_string(mask) + " m=" + std::to_string(m));
            }
        }
    }

    // Composition sum: brute force, the k-indexed closed form, and the
    // u-indexed form feeding the kernel generating function.
    ck.begin("composition-sum");
    for (const auto& S : sequences) {
        KernelStructure ks = kernel_structure(S);
        const int total = ks.s + ks.t;
        const auto t0_per = ks.type0_per_span();
        std::vector<int> t1_per(ks.t, 0);
        for (const auto& site : ks.sites)
            if (site.owner > 0 && site.cls == SiteClass::Type1) ++t1_per[site.owner - 1];
        const int Ncount = ks.neutral_count();
        const int T0 = ks.type0_count();
        const long long minw = minimal_weight(S, Metric::Delta);

        for (int m = 0; m <= 4; ++m) {
            ZPoly brute;
            std::vector<int> cur;
            compositions(total, m, cur, [&](const std::vector<int>& counts) {
                brute.add_term(
                    static_cast<int>(minimal_weight(insert_counts(ks, counts), Metric::Delta)), 1);
            });

            ZPoly ksum;
            std::vector<int> kk(ks.t, 0);
            std::function<void(int)> loop = [&](int u) {
                if (u == ks.t) {
                    long long K = 0, e = minw;
                    for (int j = 0; j < ks.t; ++j) {
                        K += kk[j];
                        long long tail = Ncount + j;  // |N| + u - 1 with u = j+1
                        for (int v = j; v < ks.t; ++v) tail += t0_per[v] + kk[v];
                        e += kk[j] * tail;
                    }
                    if (K > m) return;
                    ZPoly term = qb_ext(m - 1 + Ncount + T0, static_cast<int>(m - K));
                    for (int j = 0; j < ks.t; ++j) term = term * qbinom(t1_per[j], kk[j]);
                    ksum += term.shifted(static_cast<int>(e + m - K));
                    return;
                }
                for (int k = 0; k <= t1_per[u]; ++k) {
                    kk[u] = k;
                    loop(u + 1);
                }
            };
            loop(0);
            ck.expect(brute == ksum,
                      "k-form on " + format_colour_sequence(S) + " m=" + std::to_string(m));

            ZPoly usum;
            for (int u = 0; u <= ks.t; ++u) {
                ZPoly term = g_poly(u, ks.t, t0_per) * qb_ext(ks.s + m - 1, m - u);
                usum += term.shifted(u * (ks.s - ks.t));
            }
            usum = usum.shifted(static_cast<int>(minw + m));
            ck.expect(brute == usum,
                      "u-form on " + format_colour_sequence(S) + " m=" + std::to_string(m));
        }
    }

    // Inner double sum against its g-weighted closed form.
    ck.begin("inner-double-sum");
    for (int t = 1; t <= 2; ++t) {
        std::vector<int> xs(t, 0);
        std::function<void(int)> walk = [&](int u) {
            if (u == t) {
                for (int m = 0; m <= 5; ++m) {
                    ZPoly lhs;
                    std::vector<int> ms(t + 1, 0);
                    std::function<void(int)> chains = [&](int r) {
                        if (r == t + 1) {
                            if (ms[t] != m) return;
                            // sum over k_u <= 2 - x_u
                            std::vector<int> kk(t, 0);
                            std::function<void(int)> kloop = [&](int j) {
                                if (j == t) {
                                    ZPoly term = ZPoly::one();
                                    long long e = 0;
                                    for (int r2 = 1; r2 <= t; ++r2) {
                                        int d = ms[r2] - ms[r2 - 1];
                                        int k = kk[r2 - 1], x = xs[r2 - 1];
                                        e += static_cast<long long>(k) * (r2 - 2 + k + x) +
                                             static_cast<long long>(k + x) * ms[r2 - 1];
                                        term = term * qbinom(2 - x, k) *
                                               qb_ext(d + x - 1, d - k);
                                    }
                                    lhs += term.shifted(static_cast<int>(e));
                                    return;
                                }
                                for (int k = 0; k <= 2 - xs[j]; ++k) {
                                    kk[j] = k;
                                    kloop(j + 1);
                                }
                            };
                            kloop(0);
                            return;
                        }
                        for (int x = ms[r - 1]; x <= m; ++x) {
                            ms[r] = x;
                            chains(r + 1);
                        }
                    };
                    chains(1);
                    ZPoly rhs;
                    for (int v = 0; v <= t; ++v)
                        rhs += (g_poly(v, t, xs) * qb_ext(m + t - 1, m - v));
                    ck.expect(lhs == rhs, "t=" + std::to_string(t) + " m=" + std::to_string(m));
                }
                return;
            }
            for (int x = 0; x <= 2; ++x) {
                xs[u] = x;
                walk(u + 1);
            }
        };
        walk(0);
    }

    return report;
}

}  // namespace colpart
