#include "colpart/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace colpart {

LaurentPoly LaurentPoly::constant(int nvars, Int value) {
    LaurentPoly p(nvars);
    p.add_term(Mono(nvars, 0), value);
    return p;
}

LaurentPoly LaurentPoly::monomial(Mono exps, Int coeff) {
    LaurentPoly p(static_cast<int>(exps.size()));
    p.add_term(exps, coeff);
    return p;
}

void LaurentPoly::add_term(const Mono& exps, const Int& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::add_term: wrong exponent-vector length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int LaurentPoly::coeff(const Mono& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: mixed variable counts");
    LaurentPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(mono_add(e1, e2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Mono& exps) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(mono_add(e, exps), c);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const Int& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

Int LaurentPoly::value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::all_coeffs_positive() const {
    for (const auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

bool LaurentPoly::homogeneous_of_degree(int d) const {
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (signed char x : e) s += x;
        if (s != d) return false;
    }
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string m = mono_str(e);
        if (m == "1")
            os << c.str();
        else if (c == 1)
            os << m;
        else if (c == -1)
            os << "-" << m;
        else
            os << c.str() << "*" << m;
    }
    return os.str();
}

Mono mono_unit(int nvars, int var, int exp) {
    Mono m(nvars, 0);
    m.at(var) = static_cast<signed char>(exp);
    return m;
}

Mono mono_add(const Mono& a, const Mono& b) {
    Mono r = a;
    for (size_t i = 0; i < r.size(); ++i) {
        int v = r[i] + b[i];
        if (v < -127 || v > 127) throw std::overflow_error("mono_add: exponent out of range");
        r[i] = static_cast<signed char>(v);
    }
    return r;
}

Mono mono_neg(const Mono& a) {
    Mono r = a;
    for (auto& x : r) x = static_cast<signed char>(-x);
    return r;
}

std::string mono_str(const Mono& m) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << "*";
        any = true;
        os << "a" << i;
        if (m[i] != 1) os << "^" << int(m[i]);
    }
    return any ? os.str() : "1";
}

ZPoly ZPoly::q_power(int e, Int c) {
    ZPoly p;
    p.add_term(e, c);
    return p;
}

Int ZPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int ZPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("ZPoly::min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int ZPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("ZPoly::max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

void ZPoly::add_term(int e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r = *this;
    r += o;
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    ZPoly r = *this;
    r -= o;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

ZPoly& ZPoly::operator*=(const Int& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

ZPoly ZPoly::shifted(int e) const {
    ZPoly r;
    for (const auto& [e1, c] : terms_) r.terms_.emplace(e1 + e, c);
    return r;
}

ZPoly ZPoly::inverted_q() const {
    ZPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::string ZPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0)
            os << c.str();
        else {
            if (c != 1) os << c.str() << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

}  // namespace colpart
