#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace colpart {

/// Exact integer coefficients. Desk-scale runs stay far below 64 bits, but an
/// identity checker must not be able to wrap silently under any
/// specialisation, so coefficients are arbitrary precision.
using Int = boost::multiprecision::cpp_int;

/// Exponent vector of a colour monomial a_0^{e_0} ... a_{n-1}^{e_{n-1}}.
using Mono = std::vector<signed char>;

/// Exact Laurent polynomial in the colour variables a_0..a_{n-1} (exponents
/// of either sign). Zero coefficients are never stored. nvars = 0 makes this
/// a plain integer, which is how colour-free series are represented.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, Int value);
    /// Single monomial with unit coefficient.
    static LaurentPoly monomial(Mono exps, Int coeff = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Int>& terms() const { return terms_; }

    void add_term(const Mono& exps, const Int& coeff);
    Int coeff(const Mono& exps) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    /// Multiply by a single monomial (cheap: shifts every exponent vector).
    LaurentPoly shifted(const Mono& exps) const;
    LaurentPoly& operator*=(const Int& k);

    bool operator==(const LaurentPoly& o) const = default;

    /// Sum of coefficients (every a_i := 1).
    Int value_at_one() const;
    /// True if every stored coefficient is positive.
    bool all_coeffs_positive() const;
    /// Sum of exponents of each term must be `d` for this to return true.
    bool homogeneous_of_degree(int d) const;

    std::string str() const;  // e.g. "3*a0^2*a1^-1 + 1"

private:
    int nvars_;
    std::map<Mono, Int> terms_;
};

Mono mono_unit(int nvars, int var, int exp = 1);
Mono mono_add(const Mono& a, const Mono& b);
Mono mono_neg(const Mono& a);
std::string mono_str(const Mono& m);

/// Exact univariate Laurent polynomial in q. Used wherever an identity is a
/// polynomial identity (q-binomials, the g weights, the lemma grids) rather
/// than a truncated series.
class ZPoly {
public:
    ZPoly() = default;
    static ZPoly one() { return q_power(0); }
    static ZPoly q_power(int e, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int e) const;
    int min_exponent() const;  // throws on zero polynomial
    int max_exponent() const;

    void add_term(int e, const Int& c);
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly& operator*=(const Int& k);
    /// Multiply by q^e.
    ZPoly shifted(int e) const;
    /// q -> 1/q.
    ZPoly inverted_q() const;

    bool operator==(const ZPoly& o) const = default;
    std::string str() const;

private:
    std::map<int, Int> terms_;
};

}  // namespace colpart
