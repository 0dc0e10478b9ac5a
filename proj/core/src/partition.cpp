#include "colpart/partition.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace colpart {

long long weight(const ColouredPartition& p) {
    long long w = 0;
    for (const auto& part : p) w += part.size;
    return w;
}

ColourSequence colour_sequence_of(const ColouredPartition& p) {
    ColourSequence c;
    c.reserve(p.size());
    for (const auto& part : p) c.push_back(part.colour);
    return c;
}

std::string format_partition(const ColouredPartition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << '+';
        os << p[i].size << '[' << p[i].colour.str() << ']';
    }
    return os.str();
}

ColouredPartition parse_partition(const std::string& text) {
    ColouredPartition p;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, '+')) {
        size_t b = token.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = token.find_last_not_of(" \t");
        token = token.substr(b, e - b + 1);
        size_t lb = token.find('[');
        size_t rb = token.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw std::invalid_argument("parse_partition: bad part '" + token + "'");
        int size = std::stoi(token.substr(0, lb));
        Colour colour = Colour::parse(token.substr(lb + 1, rb - lb - 1));
        p.push_back({size, colour});
    }
    return p;
}

std::string partition_to_json(const ColouredPartition& p) {
    auto arr = nlohmann::json::array();
    for (const auto& part : p)
        arr.push_back({{"size", part.size},
                       {"a", part.colour.a_index()},
                       {"b", part.colour.b_index()}});
    return arr.dump();
}

ColouredPartition partition_from_json(const std::string& text) {
    ColouredPartition p;
    for (const auto& j : nlohmann::json::parse(text))
        p.push_back({j.at("size").get<int>(),
                     Colour(j.at("a").get<int>(), j.at("b").get<int>())});
    return p;
}

MembershipSpec MembershipSpec::pn(int n) { return {Family::GeneralisedPrimc, n, std::nullopt}; }

MembershipSpec MembershipSpec::cn(int n, DeltaGammaTable table) {
    return {Family::GeneralisedCapparelli, n, std::move(table)};
}

MembershipSpec MembershipSpec::p0() { return {Family::ZeroColoured, 1, std::nullopt}; }

namespace {

MembershipResult fail(std::string why) { return {false, std::move(why)}; }

MembershipResult check_shape(const ColouredPartition& p, int n) {
    for (size_t j = 0; j < p.size(); ++j) {
        const auto& part = p[j];
        if (part.size < 1) return fail("part " + std::to_string(j + 1) + " is not positive");
        if (part.colour.is_sentinel())
            return fail("part " + std::to_string(j + 1) + " carries the sentinel colour");
        if (part.colour.a_index() >= n || part.colour.b_index() >= n)
            throw std::invalid_argument("is_member: colour " + part.colour.str() +
                                        " has an index >= n = " + std::to_string(n));
        if (j + 1 < p.size() && p[j].size < p[j + 1].size)
            return fail("sizes increase between parts " + std::to_string(j + 1) + " and " +
                        std::to_string(j + 2));
    }
    return {};
}

MembershipResult check_gaps(const ColouredPartition& p) {
    for (size_t j = 0; j + 1 < p.size(); ++j) {
        int need = delta(p[j].colour, p[j + 1].colour);
        if (p[j].size - p[j + 1].size < need)
            return fail("gap " + std::to_string(p[j].size) + "[" + p[j].colour.str() + "] -> " +
                        std::to_string(p[j + 1].size) + "[" + p[j + 1].colour.str() + "] is " +
                        std::to_string(p[j].size - p[j + 1].size) + " < " + std::to_string(need));
    }
    return {};
}

}  // namespace

bool capparelli_pattern_forbidden(const ColouredPart* prev, const ColouredPart& centre,
                                  const ColouredPart* next, const DeltaGammaTable& table) {
    if (!centre.colour.is_free()) return false;
    const int i = centre.colour.a_index();
    if (i == 0) return false;  // delta/gamma values are always >= 1
    const int p = centre.size;

    if (next && next->size == p && next->colour.is_bound() &&
        next->colour.a_index() > next->colour.b_index()) {
        const Colour c2 = next->colour;
        if (!prev || prev->size >= p + 2) return i == table.delta_of(c2);
        if (prev->size == p + 1) {
            const Colour c1 = prev->colour;
            if (c1.a_index() <= c1.b_index()) return i == table.delta_of(c2);
            auto g = table.gamma_of(c1, c2);
            return g && i == *g;
        }
        if (prev->size == p && prev->colour.is_bound()) {
            const Colour c1 = prev->colour;
            // the equal-size bracket pattern needs c1 ascending and the
            // bracket condition max{k1, l2} < min{k2, l1}
            if (std::max(c1.a_index(), c2.b_index()) < std::min(c2.a_index(), c1.b_index())) {
                auto g = table.gamma_of(c1, c2);
                return g && i == *g;
            }
        }
        return false;
    }

    if (prev && prev->size == p && prev->colour.is_bound() &&
        prev->colour.a_index() < prev->colour.b_index()) {
        const Colour c1 = prev->colour;
        if (!next || next->size <= p - 2) return i == table.delta_of(c1);
        if (next->size == p - 1) {
            const Colour c2 = next->colour;
            if (c2.a_index() >= c2.b_index()) return i == table.delta_of(c1);
            auto g = table.gamma_of(c1, c2);
            return g && i == *g;
        }
    }
    return false;
}

MembershipResult is_member(const ColouredPartition& p, const MembershipSpec& spec) {
    const int index_bound =
        spec.family == Family::ZeroColoured ? Colour::kMaxIndex + 1 : spec.n;
    if (auto r = check_shape(p, index_bound); !r) return r;

    if (spec.family == Family::ZeroColoured) {
        for (size_t j = 0; j < p.size(); ++j)
            if (p[j].colour != Colour(0, 0))
                return fail("part " + std::to_string(j + 1) + " is coloured " +
                            p[j].colour.str() + ", not a0b0");
        return {};
    }

    if (auto r = check_gaps(p); !r) return r;
    if (spec.family == Family::GeneralisedPrimc) return {};

    if (!spec.table) throw std::invalid_argument("is_member: table required for this family");
    const auto& table = *spec.table;
    if (table.n != spec.n) throw std::invalid_argument("is_member: table has wrong n");

    for (size_t j = 0; j < p.size(); ++j)
        if (p[j].colour == Colour(0, 0))
            return fail("part " + std::to_string(j + 1) + " is coloured a0b0");
    for (size_t j = 0; j + 1 < p.size(); ++j)
        if (p[j].colour.is_free() && p[j] == p[j + 1])
            return fail("free colour repeats at parts " + std::to_string(j + 1) + "," +
                        std::to_string(j + 2) + ": " + std::to_string(p[j].size) + "[" +
                        p[j].colour.str() + "]");
    for (size_t j = 0; j < p.size(); ++j) {
        const ColouredPart* prev = j > 0 ? &p[j - 1] : nullptr;
        const ColouredPart* next = j + 1 < p.size() ? &p[j + 1] : nullptr;
        if (capparelli_pattern_forbidden(prev, p[j], next, table)) {
            std::string w = "excluded pattern around part " + std::to_string(j + 1) + ": ";
            if (prev) w += std::to_string(prev->size) + "[" + prev->colour.str() + "]+";
            w += std::to_string(p[j].size) + "[" + p[j].colour.str() + "]";
            if (next) w += "+" + std::to_string(next->size) + "[" + next->colour.str() + "]";
            return fail(w);
        }
    }
    return {};
}

ColouredPartition minimal_partition(const ColourSequence& c, Metric metric) {
    ColouredPartition p(c.size());
    int acc = 0;
    for (size_t j = c.size(); j-- > 0;) {
        Colour nextc = j + 1 < c.size() ? c[j + 1] : Colour::sentinel();
        acc += metric_value(metric, c[j], nextc);
        p[j] = {acc, c[j]};
    }
    return p;
}

long long minimal_weight(const ColourSequence& c, Metric metric) {
    long long w = 0;
    for (size_t k = 0; k < c.size(); ++k) {
        Colour nextc = k + 1 < c.size() ? c[k + 1] : Colour::sentinel();
        w += static_cast<long long>(k + 1) * metric_value(metric, c[k], nextc);
    }
    return w;
}

ColourSequence kernel_of(const ColouredPartition& p) { return reduce(colour_sequence_of(p)); }

namespace {

struct Enumerator {
    const MembershipSpec& spec;
    const std::function<void(const ColouredPartition&)>& visit;
    unsigned long long max_nodes;
    unsigned long long nodes = 0;
    std::vector<Colour> colours;  // candidate colours in canonical order
    ColouredPartition current;

    Enumerator(const MembershipSpec& s, const std::function<void(const ColouredPartition&)>& v,
               unsigned long long budget)
        : spec(s), visit(v), max_nodes(budget) {
        if (spec.family == Family::ZeroColoured) {
            colours = {Colour(0, 0)};
        } else {
            for (int a = 0; a < spec.n; ++a)
                for (int b = 0; b < spec.n; ++b) {
                    Colour c(a, b);
                    if (spec.family == Family::GeneralisedCapparelli && c == Colour(0, 0))
                        continue;
                    colours.push_back(c);
                }
            std::sort(colours.begin(), colours.end());
        }
    }

    void tick() {
        if (++nodes > max_nodes) throw BudgetExceeded(nodes);
    }

    bool appendable(const ColouredPart& part) const {
        if (!current.empty()) {
            const auto& last = current.back();
            if (last.size - part.size < delta(last.colour, part.colour)) return false;
        }
        if (spec.family != Family::GeneralisedCapparelli) return true;
        if (!current.empty()) {
            const auto& last = current.back();
            if (last.colour.is_free() && last == part) return false;  // free repeat
        }
        // appending `part` completes every pattern whose centre is the
        // current last part; the end-anchored pattern is checked at emission
        if (current.size() >= 1) {
            const ColouredPart* prev = current.size() >= 2 ? &current[current.size() - 2] : nullptr;
            if (capparelli_pattern_forbidden(prev, current.back(), &part, *spec.table))
                return false;
        }
        return true;
    }

    bool closable() const {
        if (spec.family != Family::GeneralisedCapparelli || current.empty()) return true;
        const ColouredPart* prev = current.size() >= 2 ? &current[current.size() - 2] : nullptr;
        return !capparelli_pattern_forbidden(prev, current.back(), nullptr, *spec.table);
    }

    // Parts of an exact-weight partition, chosen left to right in ascending
    // (size, colour) order so the whole stream is lexicographic.
    void rec(int remaining) {
        if (remaining == 0) {
            if (closable()) visit(current);
            return;
        }
        int size_cap = remaining;
        if (!current.empty()) size_cap = std::min(size_cap, current.back().size);
        for (int size = 1; size <= size_cap; ++size) {
            for (Colour c : colours) {
                ColouredPart part{size, c};
                if (!appendable(part)) continue;
                tick();
                current.push_back(part);
                rec(remaining - size);
                current.pop_back();
            }
        }
    }

    // Single pass: every admissible prefix is visited once and emitted when
    // it is a member in its own right.
    void rec_all(int budget) {
        if (closable()) visit(current);
        int size_cap = budget;
        if (!current.empty()) size_cap = std::min(size_cap, current.back().size);
        for (int size = 1; size <= size_cap; ++size) {
            for (Colour c : colours) {
                ColouredPart part{size, c};
                if (!appendable(part)) continue;
                tick();
                current.push_back(part);
                rec_all(budget - size);
                current.pop_back();
            }
        }
    }
};

void validate_enumeration_spec(const MembershipSpec& spec, int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("enumerate_members: negative weight bound");
    if (spec.family == Family::GeneralisedCapparelli) {
        if (!spec.table) throw std::invalid_argument("enumerate_members: table required");
        if (auto v = validate_delta_gamma(*spec.table); !v.ok)
            throw std::invalid_argument("enumerate_members: invalid table: " + v.violations[0]);
    }
}

}  // namespace

void enumerate_members(const MembershipSpec& spec, int max_weight,
                       const std::function<void(const ColouredPartition&)>& visit,
                       unsigned long long max_nodes) {
    validate_enumeration_spec(spec, max_weight);
    Enumerator e(spec, visit, max_nodes);
    for (int w = 0; w <= max_weight; ++w) e.rec(w);
}

void enumerate_members_unordered(const MembershipSpec& spec, int max_weight,
                                 const std::function<void(const ColouredPartition&)>& visit,
                                 unsigned long long max_nodes) {
    validate_enumeration_spec(spec, max_weight);
    Enumerator e(spec, visit, max_nodes);
    e.rec_all(max_weight);
}

long long PartDilation::apply(const ColouredPart& part) const {
    long long w = static_cast<long long>(mult) * part.size;
    if (auto it = offsets.find(part.colour); it != offsets.end()) w += it->second;
    return w;
}

PartDilation PartDilation::principal(int n) {
    PartDilation d;
    d.mult = n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) d.offsets[Colour(a, b)] = b - a;
    return d;
}

std::vector<long long> dilated_weight_counts(const MembershipSpec& spec,
                                             const PartDilation& dilation, int bound,
                                             unsigned long long max_nodes) {
    if (dilation.mult < 1)
        throw std::invalid_argument("dilated_weight_counts: multiplier must be positive");
    for (const auto& [c, off] : dilation.offsets)
        if (off < 1 - dilation.mult)
            throw std::invalid_argument("dilated_weight_counts: offset for " + c.str() +
                                        " lets dilated parts collapse");
    std::vector<long long> hist(bound + 1, 0);
    enumerate_members_unordered(
        spec, bound,
        [&](const ColouredPartition& p) {
            long long w = 0;
            for (const auto& part : p) w += dilation.apply(part);
            if (w <= bound) ++hist[w];
        },
        max_nodes);
    return hist;
}

long long minimal_weight_after_insertion(const KernelStructure& ks,
                                         const std::vector<int>& counts) {
    if (counts.size() != ks.sites.size())
        throw std::invalid_argument("minimal_weight_after_insertion: counts/site mismatch");
    const int total = ks.s + ks.t;
    // A[j] = 1 when site j is neutral, type 0, or an occupied type-1 site.
    std::vector<int> active(total + 2, 0);
    for (const auto& site : ks.sites)
        active[site.index] =
            site.cls != SiteClass::Type1 || counts[site.index - 1] > 0 ? 1 : 0;
    std::vector<int> suffix(total + 2, 0);
    for (int j = total; j >= 1; --j) suffix[j] = suffix[j + 1] + active[j];

    long long w = minimal_weight(ks.kernel, Metric::Delta);
    for (const auto& site : ks.sites) {
        const int nj = counts[site.index - 1];
        if (nj == 0) continue;
        const long long part_size = suffix[site.index];
        if (site.cls == SiteClass::Type1) {
            const long long left = site.left ? site.position - 1 : site.position;
            w += left + static_cast<long long>(nj) * part_size;
        } else {
            w += static_cast<long long>(nj) * part_size;
        }
    }
    return w;
}

QSeries kernel_gf(const KernelStructure& ks, int m, KernelGfForm form, int order) {
    if (m < 0) throw std::invalid_argument("kernel_gf: negative m");
    // These formulas use the extension [-1 0]_q = 1 (empty kernel, no parts).
    auto qb_ext = [](int nn, int kk) {
        return (nn == -1 && kk == 0) ? ZPoly::one() : qbinom(nn, kk);
    };
    const int s = ks.s, t = ks.t;
    const auto x = ks.type0_per_span();
    const long long minw = minimal_weight(ks.kernel, Metric::Delta);

    ZPoly sum;
    for (int u = 0; u <= t; ++u) {
        ZPoly g = g_poly(u, t, x);
        ZPoly qb = qb_ext(s + m - 1, m - u);
        if (g.is_zero() || qb.is_zero()) continue;
        long long e = form == KernelGfForm::Coloured ? static_cast<long long>(u) * (s - t)
                                                     : -static_cast<long long>(u) * (t + m);
        sum += (g * qb).shifted(static_cast<int>(e));
    }
    const long long pre = form == KernelGfForm::Coloured
                              ? minw + m
                              : minw + static_cast<long long>(m) * (s + m + 1);
    QSeries out(0, order);
    if (sum.is_zero()) return out;
    ZPoly shifted = sum.shifted(static_cast<int>(pre));
    if (shifted.min_exponent() < 0)
        throw std::logic_error("kernel_gf: negative exponent in numerator");
    for (const auto& [e, c] : shifted.terms())
        if (e <= order) out.coeff(e).add_term(Mono{}, c);
    QSeries invp = inv_finite_euler(s + m, 0, order);
    out = out * invp;
    if (form == KernelGfForm::Frobenius) out = out * invp;
    return out;
}

}  // namespace colpart
