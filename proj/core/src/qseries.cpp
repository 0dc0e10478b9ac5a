#include "colpart/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace colpart {

QSeries QSeries::one(int nvars, int order) {
    QSeries s(nvars, order);
    s.c_[0] = LaurentPoly::constant(nvars, 1);
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.nvars_ != nvars_ || o.order_ != order_)
        throw std::invalid_argument("QSeries: mismatched operands");
    for (int m = 0; m <= order_; ++m) c_[m] += o.c_[m];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.nvars_ != nvars_ || o.order_ != order_)
        throw std::invalid_argument("QSeries: mismatched operands");
    for (int m = 0; m <= order_; ++m) c_[m] -= o.c_[m];
    return *this;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r = *this;
    r += o;
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r = *this;
    r -= o;
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    if (o.nvars_ != nvars_ || o.order_ != order_)
        throw std::invalid_argument("QSeries: mismatched operands");
    QSeries r(nvars_, order_);
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

QSeries QSeries::mono_mul(const Mono& exps, int shift, const Int& coeff) const {
    if (shift < 0) throw std::invalid_argument("QSeries::mono_mul: negative shift");
    QSeries r(nvars_, order_);
    for (int m = 0; m + shift <= order_; ++m) {
        if (c_[m].is_zero()) continue;
        LaurentPoly t = c_[m].shifted(exps);
        t *= coeff;
        r.c_[m + shift] += t;
    }
    return r;
}

void QSeries::mul_one_plus(const Mono& exps, int shift, const Int& coeff) {
    if (shift < 1) throw std::invalid_argument("QSeries::mul_one_plus: shift must be >= 1");
    for (int m = order_; m >= shift; --m) {
        if (c_[m - shift].is_zero()) continue;
        LaurentPoly t = c_[m - shift].shifted(exps);
        t *= coeff;
        c_[m] += t;
    }
}

QSeries QSeries::mul_univariate(const ZPoly& p) const {
    QSeries r(nvars_, order_);
    for (const auto& [e, k] : p.terms()) {
        if (e < 0) throw std::invalid_argument("QSeries::mul_univariate: negative exponent");
        for (int m = 0; m + e <= order_; ++m) {
            if (c_[m].is_zero()) continue;
            LaurentPoly t = c_[m];
            t *= k;
            r.c_[m + e] += t;
        }
    }
    return r;
}

QSeries QSeries::truncated(int new_order) const {
    QSeries r(nvars_, new_order);
    for (int m = 0; m <= std::min(order_, new_order); ++m) r.c_[m] = c_[m];
    return r;
}

QSeries QSeries::inverse() const {
    if (c_[0] != LaurentPoly::constant(nvars_, 1))
        throw std::invalid_argument("QSeries::inverse: constant term must be 1");
    QSeries r = QSeries::one(nvars_, order_);
    for (int m = 1; m <= order_; ++m) {
        LaurentPoly acc(nvars_);
        for (int j = 1; j <= m; ++j) {
            if (c_[j].is_zero() || r.c_[m - j].is_zero()) continue;
            acc += c_[j] * r.c_[m - j];
        }
        r.c_[m] = -acc;
    }
    return r;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int m = 0; m <= order_; ++m) {
        if (c_[m].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[m].str() << ")*q^" << m;
    }
    if (first) os << "0";
    os << " + O(q^" << order_ + 1 << ")";
    return os.str();
}

XSeries::XSeries(int nvars, int order, int window)
    : window_(window), slots_(2 * window + 1, QSeries(nvars, order)) {
    if (window < 1) throw std::invalid_argument("XSeries: window must be >= 1");
}

XSeries XSeries::one(int nvars, int order, int window) {
    XSeries x(nvars, order, window);
    x.slot(0) = QSeries::one(nvars, order);
    return x;
}

const QSeries& XSeries::slot(int xexp) const { return slots_.at(xexp + window_); }
QSeries& XSeries::slot(int xexp) { return slots_.at(xexp + window_); }

void XSeries::mul_one_plus_x(int xdir, const Mono& exps, int shift, const Int& coeff) {
    if (xdir != 1 && xdir != -1) throw std::invalid_argument("mul_one_plus_x: xdir must be +-1");
    if (shift < 0) throw std::invalid_argument("mul_one_plus_x: negative q-shift");
    if (xdir == 1) {
        for (int k = window_; k > -window_; --k)
            slots_[k + window_] += slots_[k - 1 + window_].mono_mul(exps, shift, coeff);
    } else {
        for (int k = -window_; k < window_; ++k)
            slots_[k + window_] += slots_[k + 1 + window_].mono_mul(exps, shift, coeff);
    }
}

void XSeries::mul_univariate(const ZPoly& p) {
    for (auto& s : slots_) s = s.mul_univariate(p);
}

QSeries pochhammer(const Mono& exps, int shift, int count, int nvars, int order,
                   const Int& coeff) {
    if (shift < 0) throw std::invalid_argument("pochhammer: negative starting exponent");
    QSeries r = QSeries::one(nvars, order);
    for (int j = 0;; ++j) {
        if (count >= 0 && j >= count) break;
        int e = shift + j;
        if (e > order) break;  // remaining factors are 1 modulo the truncation
        if (e == 0) {
            QSeries f = QSeries::one(nvars, order);
            f.coeff(0).add_term(exps, -coeff);
            r = r * f;
        } else {
            r.mul_one_plus(exps, e, -coeff);
        }
    }
    return r;
}

QSeries inv_pochhammer(const Mono& exps, int shift, int count, int nvars, int order,
                       const Int& coeff) {
    if (shift < 1)
        throw std::invalid_argument("inv_pochhammer: constant term would not be 1 (need shift >= 1)");
    return pochhammer(exps, shift, count, nvars, order, coeff).inverse();
}

QSeries product_one_plus(const Mono& exps, int start, int step, int nvars, int order,
                         const Int& coeff) {
    if (start < 0 || step < 1) throw std::invalid_argument("product_one_plus: bad start/step");
    QSeries r = QSeries::one(nvars, order);
    for (int e = start; e <= order; e += step) {
        if (e == 0) {
            QSeries f = QSeries::one(nvars, order);
            f.coeff(0).add_term(exps, coeff);
            r = r * f;
        } else {
            r.mul_one_plus(exps, e, coeff);
        }
    }
    return r;
}

ZPoly euler_product(int step, int order) {
    if (step < 1) throw std::invalid_argument("euler_product: step must be >= 1");
    ZPoly p;
    for (long long k = -(order + 2); k <= order + 2; ++k) {
        long long e = step * (k * (3 * k - 1) / 2);
        if (e < 0 || e > order) continue;
        p.add_term(static_cast<int>(e), (k % 2 == 0) ? Int(1) : Int(-1));
    }
    return p;
}

QSeries inv_euler(int nvars, int order) { return inv_finite_euler(order, nvars, order); }

QSeries inv_finite_euler(int k, int nvars, int order) {
    QSeries r = QSeries::one(nvars, order);
    for (int j = 1; j <= k; ++j) {
        if (j > order) break;
        QSeries g = QSeries::one(nvars, order);
        for (int m = j; m <= order; m += j) g.coeff(m) = LaurentPoly::constant(nvars, 1);
        r = r * g;
    }
    return r;
}

ZPoly qbinom(int n, int k) {
    if (k < 0 || k > n || n < 0) return ZPoly();
    std::vector<ZPoly> row{ZPoly::one()};  // [0 choose 0]
    for (int i = 1; i <= n; ++i) {
        std::vector<ZPoly> next(std::min(i, k) + 1);
        next[0] = ZPoly::one();
        for (int j = 1; j <= std::min(i, k); ++j) {
            ZPoly v = j < static_cast<int>(row.size()) ? row[j] : ZPoly();
            v += row[j - 1].shifted(i - j);
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[k];
}

ZPoly finite_euler_poly(int k) {
    ZPoly p = ZPoly::one();
    for (int j = 1; j <= k; ++j) {
        ZPoly f = ZPoly::one();
        f.add_term(j, -1);
        p = p * f;
    }
    return p;
}

ZPoly g_poly(int u, int v, std::span<const int> xs) {
    if (u < 0 || u > v) throw std::invalid_argument("g_poly: need 0 <= u <= v");
    if (static_cast<int>(xs.size()) != v) throw std::invalid_argument("g_poly: need v parameters");
    if (v == 0) return ZPoly::one();
    ZPoly out;
    std::vector<int> eps(v, 0);
    std::function<void(int, int)> rec = [&](int k, int placed) {
        if (v - k < u - placed) return;
        if (k == v) {
            if (placed != u) return;
            long long e = static_cast<long long>(u) * v + static_cast<long long>(u) * (u - 1) / 2;
            int ones = 0;
            for (int j = 0; j < v; ++j) {
                e += static_cast<long long>(xs[j] - 1) * ones;
                ones += eps[j];
            }
            out.add_term(static_cast<int>(e), 1);
            return;
        }
        eps[k] = 0;
        rec(k + 1, placed);
        if (placed < u) {
            eps[k] = 1;
            rec(k + 1, placed + 1);
            eps[k] = 0;
        }
    };
    rec(0, 0);
    return out;
}

bool jacobi_triple_product_check(int order, int nvars, int var) {
    const int W = order + 1;
    Mono a = var >= 0 ? mono_unit(nvars, var) : Mono(nvars, 0);
    Mono ainv = mono_neg(a);
    XSeries lhs = XSeries::one(nvars, order, W);
    for (int j = 1; j <= order; ++j) lhs.mul_one_plus_x(+1, a, j);
    for (int j = 0; j <= order; ++j) lhs.mul_one_plus_x(-1, ainv, j);
    lhs.mul_univariate(euler_product(1, order));

    for (int k = -W; k <= W; ++k) {
        QSeries rhs(nvars, order);
        long long e = static_cast<long long>(k) * (k + 1) / 2;
        if (e >= 0 && e <= order) {
            Mono m(nvars, 0);
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<signed char>(a[i] * k);
            rhs.coeff(static_cast<int>(e)).add_term(m, 1);
        }
        if (!(lhs.slot(k) == rhs)) return false;
    }
    return true;
}

QSeries constant_term_product(int n, int order) {
    if (n < 1) throw std::invalid_argument("constant_term_product: need n >= 1");
    const int W = order + 1;
    XSeries x = XSeries::one(n, order, W);
    for (int i = 0; i < n; ++i) {
        Mono a = mono_unit(n, i);
        for (int j = 1; j <= order; ++j) x.mul_one_plus_x(+1, a, j);
    }
    for (int i = 0; i < n; ++i) {
        Mono ainv = mono_unit(n, i, -1);
        for (int j = 0; j <= order; ++j) x.mul_one_plus_x(-1, ainv, j);
    }
    return x.constant_term();
}

QSeries jacobi_sum_form(int n, int order) {
    if (n < 1) throw std::invalid_argument("jacobi_sum_form: need n >= 1");
    QSeries theta(n, order);
    if (n == 1) {
        theta.coeff(0).add_term(Mono(1, 0), 1);
    } else {
        // Exponent as the sum of squares ((i+1)s_i - i s_{i+1})^2 / (2i(i+1)),
        // tracked exactly over the common denominator D. Every summand is
        // non-negative, so partial sums give a sound cut-off.
        long long D = 2;
        for (int i = 1; i < n; ++i) D = std::lcm(D, 2LL * i * (i + 1));
        std::vector<long long> s(n + 1, 0);
        std::function<void(int, long long)> rec = [&](int i, long long partial) {
            if (i == 0) {
                if (partial % D != 0)
                    throw std::logic_error("jacobi_sum_form: non-integer exponent");
                long long m = partial / D;
                if (m > order) return;
                Mono mono(n, 0);
                mono[0] = static_cast<signed char>(-s[1]);
                for (int j = 1; j < n; ++j) {
                    long long d = s[j] - s[j + 1];
                    mono[j] = static_cast<signed char>(mono[j] + d);
                }
                theta.coeff(static_cast<int>(m)).add_term(mono, 1);
                return;
            }
            long long budget = static_cast<long long>(order) * D - partial;
            if (budget < 0) return;
            long long w = D / (2LL * i * (i + 1));
            double maxd = std::sqrt(static_cast<double>(budget) / static_cast<double>(w));
            long long lo =
                static_cast<long long>(std::floor((i * s[i + 1] - maxd) / (i + 1))) - 1;
            long long hi = static_cast<long long>(std::ceil((i * s[i + 1] + maxd) / (i + 1))) + 1;
            for (long long si = lo; si <= hi; ++si) {
                long long d = (i + 1) * si - i * s[i + 1];
                long long add = d * d * w;
                if (add > budget) continue;
                s[i] = si;
                rec(i - 1, partial + add);
            }
            s[i] = 0;
        };
        rec(n - 1, 0);
    }
    QSeries inv1 = inv_euler(n, order);
    QSeries result = theta;
    for (int i = 0; i < n; ++i) result = result * inv1;
    return result;
}

QSeries product_sum_form(int n, int order) {
    if (n < 1) throw std::invalid_argument("product_sum_form: need n >= 1");
    if (n == 1) return inv_euler(1, order);

    // All residue vectors r_1..r_{n-1} with 0 <= r_j <= j-1 (and r_n = 0).
    std::vector<int> r(n + 1, 0);
    std::vector<std::vector<int>> rvecs;
    std::function<void(int)> gen = [&](int j) {
        if (j == n) {
            rvecs.push_back(r);
            return;
        }
        for (int v = 0; v < j; ++v) {
            r[j] = v;
            gen(j + 1);
        }
    };
    gen(1);

    // Individual summands may dip below q^0 before the sum cancels; keep a
    // padded window and check the sub-zero region vanishes at the end.
    const int pad = 2 * n * n;
    std::vector<LaurentPoly> total(order + pad + 1, LaurentPoly(n));

    for (const auto& rv : rvecs) {
        int shift = 0;
        Mono mono(n, 0);
        struct Factor {
            Mono z;
            int start;
            int period;  // 0 marks a peeled single factor
        };
        std::vector<Factor> factors;
        auto add_poch = [&](Mono z, int start, int period) {
            while (start < 0) {
                // (1 + z q^start) = z q^start (1 + z^{-1} q^{-start})
                shift += start;
                mono = mono_add(mono, z);
                factors.push_back({mono_neg(z), -start, 0});
                start += period;
            }
            factors.push_back({z, start, period});
        };
        for (int i = 1; i < n; ++i) {
            int ri = rv[i], rn = rv[i + 1];
            shift += ri * (ri - rn);
            mono[i] = static_cast<signed char>(mono[i] + (ri - rn));
            Mono A(n, 0);
            A[i] = static_cast<signed char>(i);
            for (int l = 0; l < i; ++l) A[l] = -1;
            const int p = i * (i + 1);
            add_poch(A, p / 2 + (i + 1) * ri - i * rn, p);
            add_poch(mono_neg(A), p / 2 - (i + 1) * ri + i * rn, p);
        }
        if (shift > order) continue;  // whole summand lies beyond the truncation
        if (shift < -pad) throw std::logic_error("product_sum_form: pad too small");

        const int need = order - std::min(shift, 0);
        QSeries term = QSeries::one(n, need);
        for (const auto& f : factors) {
            if (f.period == 0) {
                term.mul_one_plus(f.z, f.start);
                continue;
            }
            for (int e = f.start; e <= need; e += f.period) {
                if (e == 0) {
                    QSeries g = QSeries::one(n, need);
                    g.coeff(0).add_term(f.z, 1);
                    term = term * g;
                } else {
                    term.mul_one_plus(f.z, e);
                }
            }
        }
        for (int m = 0; m <= need; ++m) {
            if (term.coeff(m).is_zero()) continue;
            long long e = static_cast<long long>(m) + shift;
            if (e > order) continue;
            total[static_cast<int>(e) + pad] += term.coeff(m).shifted(mono);
        }
    }

    for (int m = 0; m < pad; ++m)
        if (!total[m].is_zero())
            throw std::logic_error("product_sum_form: negative q-power survives the summation");

    QSeries sum(n, order);
    for (int m = 0; m <= order; ++m) sum.coeff(m) = total[m + pad];

    QSeries inv1 = inv_euler(n, order);
    for (int i = 0; i < n; ++i) sum = sum * inv1;
    for (int i = 1; i < n; ++i) sum = sum.mul_univariate(euler_product(i * (i + 1), order));
    return sum;
}

QSeries specialise_vars(const QSeries& s, int q_power, std::span<const int> var_shift) {
    if (static_cast<int>(var_shift.size()) != s.nvars())
        throw std::invalid_argument("specialise_vars: wrong shift count");
    if (q_power < 1) throw std::invalid_argument("specialise_vars: q_power must be >= 1");
    QSeries out(0, s.order());
    for (int m = 0; m <= s.order(); ++m) {
        for (const auto& [exps, coeff] : s.coeff(m).terms()) {
            long long e = static_cast<long long>(q_power) * m;
            for (size_t i = 0; i < exps.size(); ++i)
                e += static_cast<long long>(var_shift[i]) * exps[i];
            if (e < m)
                throw std::invalid_argument(
                    "specialise_vars: substitution lowers the q-exponent of q^" +
                    std::to_string(m) + " * " + mono_str(exps) + "; truncation would be unsound");
            if (e <= s.order()) out.coeff(static_cast<int>(e)).add_term(Mono{}, coeff);
        }
    }
    return out;
}

QSeries principal_specialisation(const QSeries& s, int n) {
    if (n != s.nvars())
        throw std::invalid_argument("principal_specialisation: series must have n colour variables");
    std::vector<int> shifts(n);
    for (int i = 0; i < n; ++i) shifts[i] = -i;
    return specialise_vars(s, n, shifts);
}

QSeries constant_term_product_specialised(int n, int order) {
    if (n < 1) throw std::invalid_argument("constant_term_product_specialised: need n >= 1");
    const int W = order + 1;
    XSeries x = XSeries::one(0, order, W);
    const Mono none;
    for (int i = 0; i < n; ++i) {
        for (int e = n - i; e <= order; e += n) x.mul_one_plus_x(+1, none, e);
        for (int e = i; e <= order; e += n) x.mul_one_plus_x(-1, none, e);
    }
    return x.constant_term();
}

std::string qseries_to_json(const QSeries& s) {
    nlohmann::json j;
    j["order"] = s.order();
    j["nvars"] = s.nvars();
    auto terms = nlohmann::json::array();
    for (int m = 0; m <= s.order(); ++m) {
        if (s.coeff(m).is_zero()) continue;
        nlohmann::json t;
        t["q"] = m;
        auto monos = nlohmann::json::array();
        for (const auto& [exps, coeff] : s.coeff(m).terms()) {
            nlohmann::json e;
            e["exps"] = std::vector<int>(exps.begin(), exps.end());
            e["coeff"] = coeff.str();
            monos.push_back(e);
        }
        t["monomials"] = monos;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    QSeries s(j.at("nvars").get<int>(), j.at("order").get<int>());
    for (const auto& t : j.at("terms")) {
        int m = t.at("q").get<int>();
        for (const auto& e : t.at("monomials")) {
            auto exps_int = e.at("exps").get<std::vector<int>>();
            Mono exps(exps_int.begin(), exps_int.end());
            Int coeff(e.at("coeff").get<std::string>());
            s.coeff(m).add_term(exps, coeff);
        }
    }
    return s;
}

}  // namespace colpart
