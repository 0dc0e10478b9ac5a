#include "colpart/colour.hpp"

#include <algorithm>
#include <sstream>

namespace colpart {

namespace {
inline int chi(bool p) { return p ? 1 : 0; }
}  // namespace

std::string Colour::str() const {
    if (is_sentinel()) return "a*b*";
    std::ostringstream os;
    os << 'a' << int(a_) << 'b' << int(b_);
    return os.str();
}

Colour Colour::parse(const std::string& token) {
    // Accepted form: a<int>b<int>, e.g. "a1b2".
    size_t bpos = token.find('b', 1);
    if (token.empty() || token[0] != 'a' || bpos == std::string::npos)
        throw std::invalid_argument("Colour::parse: bad token '" + token + "'");
    int a = std::stoi(token.substr(1, bpos - 1));
    int b = std::stoi(token.substr(bpos + 1));
    return Colour(a, b);
}

int delta(Colour c1, Colour c2) {
    if (c1.is_sentinel() && c2.is_sentinel())
        throw std::invalid_argument("delta: both arguments are the boundary sentinel");
    const long long i = c1.a_index(), k = c1.b_index();
    const long long ip = c2.a_index(), kp = c2.b_index();
    return chi(i >= ip) - chi(i == k && k == ip) + chi(k <= kp) - chi(k == ip && ip == kp);
}

int delta_prime(Colour c1, Colour c2) {
    if (c1.is_sentinel() || c2.is_sentinel())
        throw std::invalid_argument("delta_prime: sentinel argument");
    return chi(c1.a_index() >= c2.a_index()) + chi(c1.b_index() <= c2.b_index());
}

int delta_double_prime(Colour c1, Colour c2) { return 2 - delta_prime(c1, c2); }

int metric_value(Metric m, Colour c1, Colour c2) {
    if (c1.is_sentinel() != c2.is_sentinel()) return 1;  // boundary convention, all metrics
    switch (m) {
        case Metric::Delta: return delta(c1, c2);
        case Metric::DeltaPrime: return delta_prime(c1, c2);
        case Metric::DeltaDoublePrime: return delta_double_prime(c1, c2);
    }
    throw std::logic_error("metric_value: bad metric");
}

int delta_variant(TableVariant variant, Colour c1, Colour c2) {
    if (c1.is_sentinel() || c2.is_sentinel())
        throw std::invalid_argument("delta_variant: sentinel argument");
    if (c1 == Colour(0, 0) || c2 == Colour(0, 0))
        throw std::invalid_argument("delta_variant: a0b0 is excluded from these families");
    const int a1 = c1.a_index(), b1 = c1.b_index();
    const int a2 = c2.a_index(), b2 = c2.b_index();
    if (variant == TableVariant::MeurmanPrimc) {
        if (c1.is_free() && c1 == c2) return 1;
        // (a_l b_l, a_k b_{l-1}) with k >= l > 0
        if (c1.is_free() && a1 > 0 && b2 == a1 - 1 && a2 >= a1) return 1;
        // (a_{k-1} b_l, a_k b_k) with l >= k > 0
        if (c2.is_free() && a2 > 0 && a1 == a2 - 1 && b1 >= a2) return 1;
        return delta(c1, c2);
    }
    // Alt
    if (c1.is_free() && c1 == c2) return 1;
    // (a_k b_k, a_k b_l) with k > l >= 0
    if (c1.is_free() && a2 == a1 && b2 < a1) return 1;
    // (a_k b_l, a_l b_l) with l > k >= 0
    if (c2.is_free() && b1 == a2 && a1 < a2) return 1;
    return delta(c1, c2);
}

int DeltaGammaTable::delta_of(Colour c) const {
    auto it = delta.find(c);
    if (it == delta.end())
        throw std::invalid_argument("DeltaGammaTable: delta undefined for " + c.str());
    return it->second;
}

std::optional<int> DeltaGammaTable::gamma_of(Colour c1, Colour c2) const {
    auto it = gamma.find({c1, c2});
    if (it == gamma.end()) return std::nullopt;
    return it->second;
}

namespace {

// {lo1..hi1} \ {lo2..hi2}, as a sorted list.
std::vector<int> range_difference(int lo1, int hi1, int lo2, int hi2) {
    std::vector<int> out;
    for (int x = lo1; x <= hi1; ++x)
        if (x < lo2 || x > hi2) out.push_back(x);
    return out;
}

struct GammaCase {
    int which;                 // 1, 2 or 3 (the three defining bullets)
    std::vector<int> allowed;  // admissible values
};

// Which bullet (if any) constrains gamma on (c1, c2), and the admissible set.
std::optional<GammaCase> gamma_case(Colour c1, Colour c2) {
    const int k1 = c1.a_index(), l1 = c1.b_index();
    const int k2 = c2.a_index(), l2 = c2.b_index();
    if (std::max(k1, l2) < std::min(k2, l1)) {
        std::vector<int> allowed;
        for (int x = std::max(k1, l2) + 1; x <= std::min(k2, l1); ++x) allowed.push_back(x);
        return GammaCase{1, allowed};
    }
    if (k1 > l1 && k2 > l2) {
        auto diff = range_difference(l2 + 1, k2, l1 + 1, k1);
        if (!diff.empty()) return GammaCase{2, diff};
    }
    if (k1 < l1 && k2 < l2) {
        auto diff = range_difference(k1 + 1, l1, k2 + 1, l2);
        if (!diff.empty()) return GammaCase{3, diff};
    }
    return std::nullopt;
}

}  // namespace

bool gamma_required(Colour c1, Colour c2) {
    return c1.is_bound() && c2.is_bound() && gamma_case(c1, c2).has_value();
}

DeltaGammaTable builtin_delta_gamma(TableVariant variant, int n) {
    if (n < 2) throw std::invalid_argument("builtin_delta_gamma: need n >= 2");
    DeltaGammaTable t;
    t.n = n;
    std::vector<Colour> bounds;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) bounds.push_back(Colour(a, b));

    for (Colour c : bounds) {
        const int k = c.a_index(), l = c.b_index();
        t.delta[c] = variant == TableVariant::MeurmanPrimc ? 1 + std::min(k, l) : std::max(k, l);
    }

    auto contains = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (Colour c1 : bounds)
        for (Colour c2 : bounds) {
            auto gc = gamma_case(c1, c2);
            if (!gc) continue;
            const int k1 = c1.a_index(), l1 = c1.b_index();
            const int k2 = c2.a_index(), l2 = c2.b_index();
            int value = 0;
            if (gc->which == 1) {
                value = variant == TableVariant::MeurmanPrimc ? 1 + std::max(k1, l2)
                                                              : std::min(k2, l1);
            } else if (gc->which == 2) {
                if (variant == TableVariant::MeurmanPrimc)
                    value = contains(gc->allowed, l2 + 1) ? l2 + 1 : k2;
                else
                    value = contains(gc->allowed, k2) ? k2 : l2 + 1;
            } else {
                if (variant == TableVariant::MeurmanPrimc)
                    value = contains(gc->allowed, k1 + 1) ? k1 + 1 : l1;
                else
                    value = contains(gc->allowed, l1) ? l1 : k1 + 1;
            }
            t.gamma[{c1, c2}] = value;
        }
    return t;
}

TableValidation validate_delta_gamma(const DeltaGammaTable& table) {
    TableValidation v;
    auto flag = [&](const std::string& s) {
        v.ok = false;
        v.violations.push_back(s);
    };
    const int n = table.n;
    if (n < 2 || n > Colour::kMaxIndex + 1) {
        flag("n out of range: " + std::to_string(n));
        return v;
    }

    std::vector<Colour> bounds;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) bounds.push_back(Colour(a, b));

    // Condition 1: min{k,l} < delta(a_k b_l) <= max{k,l} on every bound colour.
    for (Colour c : bounds) {
        auto it = table.delta.find(c);
        if (it == table.delta.end()) {
            flag("delta undefined on " + c.str());
            continue;
        }
        const int k = c.a_index(), l = c.b_index();
        if (!(std::min(k, l) < it->second && it->second <= std::max(k, l)))
            flag("Condition 1 violated: delta(" + c.str() + ") = " + std::to_string(it->second) +
                 " not in (" + std::to_string(std::min(k, l)) + ", " +
                 std::to_string(std::max(k, l)) + "]");
    }
    for (const auto& [c, val] : table.delta) {
        (void)val;
        if (!c.is_bound() || c.a_index() >= n || c.b_index() >= n)
            flag("delta defined on unexpected colour " + c.str());
    }

    // Condition 2, case by case.
    auto contains = [](const std::vector<int>& vs, int x) {
        return std::find(vs.begin(), vs.end(), x) != vs.end();
    };
    for (Colour c1 : bounds)
        for (Colour c2 : bounds) {
            auto gc = gamma_case(c1, c2);
            auto it = table.gamma.find({c1, c2});
            if (!gc) {
                if (it != table.gamma.end())
                    flag("gamma defined on unconstrained pair (" + c1.str() + ", " + c2.str() +
                         ")");
                continue;
            }
            if (it == table.gamma.end()) {
                flag("gamma undefined on (" + c1.str() + ", " + c2.str() + ")");
                continue;
            }
            if (!contains(gc->allowed, it->second))
                flag("Condition 2 case " + std::to_string(gc->which) + " violated: gamma(" +
                     c1.str() + ", " + c2.str() + ") = " + std::to_string(it->second));
        }
    for (const auto& [key, val] : table.gamma) {
        (void)val;
        auto [c1, c2] = key;
        if (!c1.is_bound() || !c2.is_bound() || c1.a_index() >= n || c1.b_index() >= n ||
            c2.a_index() >= n || c2.b_index() >= n)
            flag("gamma defined on unexpected pair (" + c1.str() + ", " + c2.str() + ")");
    }
    return v;
}

std::vector<Colour> matrix_colour_order(int n) {
    if (n < 1) throw std::invalid_argument("matrix_colour_order: need n >= 1");
    if (n == 2)
        return {Colour(1, 0), Colour(0, 0), Colour(1, 1), Colour(0, 1)};
    if (n == 3)
        return {Colour(2, 0), Colour(2, 1), Colour(1, 0), Colour(0, 0), Colour(2, 2),
                Colour(1, 1), Colour(0, 1), Colour(1, 2), Colour(0, 2)};
    std::vector<Colour> order;
    for (int a = n - 1; a >= 0; --a)
        for (int b = 0; b < n; ++b) order.push_back(Colour(a, b));
    return order;
}

std::vector<std::vector<int>> build_delta_matrix(int n, Metric which) {
    auto order = matrix_colour_order(n);
    std::vector<std::vector<int>> m(order.size(), std::vector<int>(order.size()));
    for (size_t r = 0; r < order.size(); ++r)
        for (size_t c = 0; c < order.size(); ++c) m[r][c] = metric_value(which, order[r], order[c]);
    return m;
}

}  // namespace colpart
