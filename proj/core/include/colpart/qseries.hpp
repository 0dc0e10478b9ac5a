#pragma once

#include <span>
#include <string>
#include <vector>

#include "colpart/laurent.hpp"

namespace colpart {

/// Formal power series in q, truncated after q^order, with exact Laurent
/// coefficients in the colour variables. All binary operations require equal
/// nvars; products are correct through q^order.
class QSeries {
public:
    QSeries(int nvars, int order)
        : nvars_(nvars), order_(order), c_(order + 1, LaurentPoly(nvars)) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
    }
    static QSeries one(int nvars, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const LaurentPoly& coeff(int m) const { return c_.at(m); }
    LaurentPoly& coeff(int m) { return c_.at(m); }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    bool operator==(const QSeries& o) const = default;

    /// Multiply by coeff * (colour monomial) * q^shift; shift >= 0.
    QSeries mono_mul(const Mono& exps, int shift, const Int& coeff = 1) const;
    /// Multiply in place by (1 + coeff * mono * q^shift), shift >= 1 or
    /// (shift >= 0 when the constant term addition is intended).
    void mul_one_plus(const Mono& exps, int shift, const Int& coeff = 1);
    /// Multiply by a univariate polynomial/series given as ZPoly (exponents
    /// must be >= 0).
    QSeries mul_univariate(const ZPoly& p) const;

    QSeries truncated(int new_order) const;

    /// Multiplicative inverse; the constant term must be 1.
    QSeries inverse() const;

    std::string str() const;

private:
    int nvars_;
    int order_;
    std::vector<LaurentPoly> c_;
};

/// Laurent polynomial in an auxiliary variable x over QSeries, with the
/// x-exponent clipped to [-window, window]. Window = order + 1 is safe for
/// constant-term extraction: walking the x-exponent out past the window and
/// back costs more than q^order, because every x^{+1} factor carries q^j with
/// j >= 1 and each row's x^{-1} ladder has a single q^0 rung.
class XSeries {
public:
    XSeries(int nvars, int order, int window);
    static XSeries one(int nvars, int order, int window);

    int window() const { return window_; }
    const QSeries& slot(int xexp) const;
    QSeries& slot(int xexp);

    /// Multiply by (1 + x^{xdir} * mono * q^shift), xdir in {+1, -1}.
    void mul_one_plus_x(int xdir, const Mono& exps, int shift, const Int& coeff = 1);
    /// Multiply every slot by a univariate factor.
    void mul_univariate(const ZPoly& p);

    const QSeries& constant_term() const { return slot(0); }

private:
    int window_;
    std::vector<QSeries> slots_;
};

// --- q-Pochhammer machinery -------------------------------------------------

/// (z q^shift; q)_count with z = coeff * mono, expanded through q^order.
/// count < 0 means the infinite product.
QSeries pochhammer(const Mono& exps, int shift, int count, int nvars, int order,
                   const Int& coeff = 1);
/// 1 / (z q^shift; q)_count; requires shift >= 1 (or z without constant term),
/// so the constant term is 1.
QSeries inv_pochhammer(const Mono& exps, int shift, int count, int nvars, int order,
                       const Int& coeff = 1);

/// prod_{j >= 0} (1 + coeff * mono * q^{start + j*step}) through q^order.
QSeries product_one_plus(const Mono& exps, int start, int step, int nvars, int order,
                         const Int& coeff = 1);

/// (q^step; q^step)_infinity through q^order, via the pentagonal-number
/// expansion (sparse and exact).
ZPoly euler_product(int step, int order);
/// 1 / (q; q)_infinity through q^order (partition-count coefficients).
QSeries inv_euler(int nvars, int order);
/// 1 / (q; q)_k through q^order.
QSeries inv_finite_euler(int k, int nvars, int order);

// --- exact polynomial objects ------------------------------------------------

/// Gaussian binomial [n k]_q; zero when k < 0 or k > n.
ZPoly qbinom(int n, int k);
/// (q; q)_k as an exact polynomial.
ZPoly finite_euler_poly(int k);

/// The insertion-weight polynomial g_{u,v}(q; x_1..x_v): sum over 0/1
/// vectors with u ones of q^{uv + C(u,2)} * prod_k q^{(x_k - 1) * (ones
/// before k)}. Requires 0 <= u <= v.
ZPoly g_poly(int u, int v, std::span<const int> xs);

/// Expands (-x q; q)_inf (-1/x; q)_inf (q; q)_inf and the theta sum
/// sum_k x^k q^{k(k+1)/2} over the x-window and compares through q^order.
/// `var` >= 0 attaches colour variable a_var to x (and its inverse to 1/x).
bool jacobi_triple_product_check(int order, int nvars = 0, int var = -1);

// --- the generating-function forms -------------------------------------------

/// [x^0] prod_{i<n} (-x a_i q; q)_inf (-1/(x a_i); q)_inf through q^order,
/// with full colour monomials tracked.
QSeries constant_term_product(int n, int order);

/// Theta-quotient form: 1/(q;q)_inf^n times the (n-1)-fold lattice sum with
/// monomials a_0^{-s_1} prod a_i^{s_i - s_{i+1}} and exponents
/// sum s_i (s_i - s_{i+1}).
QSeries jacobi_sum_form(int n, int order);

/// Sum-of-infinite-products form over residue vectors r_1..r_{n-1},
/// 0 <= r_j <= j-1.
QSeries product_sum_form(int n, int order);

/// Substitute q -> q^q_power and a_i -> q^{var_shift[i]}; the result is
/// colour-free. Every nonzero term must satisfy new exponent >= old exponent
/// (checked), which is what makes the truncation at the same order sound.
QSeries specialise_vars(const QSeries& s, int q_power, std::span<const int> var_shift);

/// Principal specialisation q -> q^n, a_i -> q^{-i}.
QSeries principal_specialisation(const QSeries& s, int n);

/// Constant-term product with the principal specialisation applied inside
/// the product (fast, univariate); equal to
/// principal_specialisation(constant_term_product(n, order), n).
QSeries constant_term_product_specialised(int n, int order);

// --- q-binomial lemma suite ---------------------------------------------------

struct LemmaCheck {
    std::string name;
    long long cases = 0;
    bool pass = true;
    std::string first_failure;
};
struct LemmaSuiteReport {
    bool pass = true;
    std::vector<LemmaCheck> checks;
};

/// Verifies the exact q-binomial/insertion-weight identities on their grids:
/// the g inversion law, the Ferrers-cut expansion of 1/(q;q)_{s+m}, the
/// staircase expansion, the path bijection, the Vandermonde-style product
/// rule, the fixed-support and summed insertion generating functions, and the
/// closed form of the composition sum, checked against direct summation.
/// With inject_failure set, one comparison is deliberately perturbed; the
/// suite must then report a failure (negative control).
LemmaSuiteReport qbinom_lemma_suite(bool inject_failure = false);

// --- serialisation ------------------------------------------------------------

std::string qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

}  // namespace colpart
