#include "colpart/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace colpart {

std::string format_colour_sequence(const ColourSequence& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i].str();
    }
    return os.str();
}

ColourSequence parse_colour_sequence(const std::string& text) {
    ColourSequence out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        // trim spaces
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(Colour::parse(token.substr(b, e - b + 1)));
    }
    return out;
}

namespace {

// Rule 1: (a_k b_l, a_l b_l) -> drop the right element.
inline bool removable_right(Colour c, Colour next) {
    return next.is_free() && next.a_index() == c.b_index();
}
// Rule 2: (a_k b_k, a_k b_l) -> drop the left element.
inline bool removable_left(Colour c, Colour next) {
    return c.is_free() && c.a_index() == next.a_index();
}

}  // namespace

ColourSequence reduce(ColourSequence c) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < c.size(); ++i) {
            if (removable_right(c[i], c[i + 1])) {
                c.erase(c.begin() + i + 1);
                changed = true;
                break;
            }
            if (removable_left(c[i], c[i + 1])) {
                c.erase(c.begin() + i);
                changed = true;
                break;
            }
        }
    }
    return c;
}

bool is_reduced(const ColourSequence& c) {
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (removable_right(c[i], c[i + 1]) || removable_left(c[i], c[i + 1])) return false;
    return true;
}

int KernelStructure::neutral_count() const {
    int n = 0;
    for (const auto& site : sites) n += site.cls == SiteClass::Neutral;
    return n;
}

std::vector<int> KernelStructure::type0_per_span() const {
    std::vector<int> out(t, 0);
    for (const auto& site : sites)
        if (site.owner > 0 && site.cls == SiteClass::Type0) ++out[site.owner - 1];
    return out;
}

int KernelStructure::type0_count() const {
    int n = 0;
    for (const auto& site : sites) n += site.cls == SiteClass::Type0;
    return n;
}

namespace {
inline int chi(bool p) { return p ? 1 : 0; }
}  // namespace

int left_insertion_type(Colour prev, Colour target, Metric metric) {
    if (!target.is_bound()) throw std::invalid_argument("left_insertion_type: target must be bound");
    Colour f = Colour::free_colour(target.a_index());
    if (metric == Metric::Delta) {
        // chi(j < k) + chi(k < l) - chi(j <= l); sentinel prev has j = infinity.
        const long long j = prev.b_index();
        const long long k = target.a_index(), l = target.b_index();
        return chi(j < k) + chi(k < l) - chi(j <= l);
    }
    return metric_value(metric, prev, f) + metric_value(metric, f, target) -
           metric_value(metric, prev, target);
}

int right_insertion_type(Colour source, Colour next, Metric metric) {
    if (!source.is_bound())
        throw std::invalid_argument("right_insertion_type: source must be bound");
    Colour f = Colour::free_colour(source.b_index());
    if (metric == Metric::Delta) {
        // chi(i > j) + chi(j > k) - chi(i >= k); sentinel next has k = infinity.
        const long long i = source.a_index(), j = source.b_index();
        const long long k = next.a_index();
        return chi(i > j) + chi(j > k) - chi(i >= k);
    }
    return metric_value(metric, source, f) + metric_value(metric, f, next) -
           metric_value(metric, source, next);
}

KernelStructure kernel_structure(const ColourSequence& seq, Metric metric) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (removable_right(seq[i], seq[i + 1]) || removable_left(seq[i], seq[i + 1]))
            throw NotReducedError("sequence not reduced: removable pair (" + seq[i].str() + ", " +
                                  seq[i + 1].str() + ") at position " + std::to_string(i + 1));

    KernelStructure ks;
    ks.kernel = seq;
    ks.s = static_cast<int>(seq.size());

    // Maximal primary subsequences: maximal runs of bound colours chained by
    // (a_i b_k, a_k b_l) adjacencies.
    auto primary_pair = [](Colour c, Colour d) {
        return c.is_bound() && d.is_bound() && c.b_index() == d.a_index();
    };
    std::vector<int> span_start_at(ks.s + 2, 0), span_end_at(ks.s + 2, 0);
    for (int p = 1; p <= ks.s; ++p) {
        if (!seq[p - 1].is_bound()) continue;
        bool starts = p == 1 || !primary_pair(seq[p - 2], seq[p - 1]);
        if (!starts) continue;
        int q = p;
        while (q < ks.s && primary_pair(seq[q - 1], seq[q])) ++q;
        ks.spans.emplace_back(p, q);
        span_start_at[p] = span_end_at[q] = static_cast<int>(ks.spans.size());
        p = q;  // continue after this span
    }
    ks.t = static_cast<int>(ks.spans.size());

    auto at = [&](int p) { return p >= 1 && p <= ks.s ? seq[p - 1] : Colour::sentinel(); };

    int index = 0;
    for (int p = 1; p <= ks.s; ++p) {
        if (int u = span_start_at[p]; u > 0) {
            InsertionSite site;
            site.index = ++index;
            site.position = p;
            site.left = true;
            site.colour = Colour::free_colour(seq[p - 1].a_index());
            site.owner = u;
            site.cls = left_insertion_type(at(p - 1), seq[p - 1], metric) == 0 ? SiteClass::Type0
                                                                               : SiteClass::Type1;
            ks.sites.push_back(site);
        }
        InsertionSite site;
        site.index = ++index;
        site.position = p;
        site.left = false;
        if (seq[p - 1].is_free()) {
            site.colour = seq[p - 1];
            site.cls = SiteClass::Neutral;
        } else {
            site.colour = Colour::free_colour(seq[p - 1].b_index());
            if (int u = span_end_at[p]; u > 0) {
                site.owner = u;
                site.cls = right_insertion_type(seq[p - 1], at(p + 1), metric) == 0
                               ? SiteClass::Type0
                               : SiteClass::Type1;
            } else {
                site.cls = SiteClass::Neutral;  // interior of a primary subsequence
            }
        }
        ks.sites.push_back(site);
    }
    return ks;
}

ColourSequence insert_counts(const KernelStructure& ks, const std::vector<int>& counts) {
    if (counts.size() != ks.sites.size())
        throw std::invalid_argument("insert_counts: expected " + std::to_string(ks.sites.size()) +
                                    " counts, got " + std::to_string(counts.size()));
    for (int c : counts)
        if (c < 0) throw std::invalid_argument("insert_counts: negative count");

    ColourSequence out;
    size_t si = 0;
    for (int p = 1; p <= ks.s; ++p) {
        if (si < ks.sites.size() && ks.sites[si].position == p && ks.sites[si].left) {
            out.insert(out.end(), counts[si], ks.sites[si].colour);
            ++si;
        }
        out.push_back(ks.kernel[p - 1]);
        out.insert(out.end(), counts[si], ks.sites[si].colour);
        ++si;
    }
    return out;
}

std::pair<KernelStructure, std::vector<int>> decompose(const ColourSequence& c) {
    KernelStructure ks = kernel_structure(reduce(c));
    std::vector<int> counts(ks.sites.size(), 0);
    size_t ci = 0, si = 0;
    for (int p = 1; p <= ks.s; ++p) {
        if (si < ks.sites.size() && ks.sites[si].position == p && ks.sites[si].left) {
            while (ci < c.size() && c[ci] == ks.sites[si].colour) ++counts[si], ++ci;
            ++si;
        }
        if (ci >= c.size() || c[ci] != ks.kernel[p - 1])
            throw std::logic_error("decompose: sequence does not match its reduction");
        ++ci;
        while (ci < c.size() && c[ci] == ks.sites[si].colour) ++counts[si], ++ci;
        ++si;
    }
    if (ci != c.size()) throw std::logic_error("decompose: trailing colours left unattributed");
    return {std::move(ks), std::move(counts)};
}

std::vector<ColourSequence> all_reduced_sequences(int n, int length) {
    std::vector<Colour> colours;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) colours.push_back(Colour(a, b));
    std::vector<ColourSequence> out;
    ColourSequence cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (Colour c : colours) {
            if (!cur.empty()) {
                Colour prev = cur.back();
                if (removable_right(prev, c) || removable_left(prev, c)) continue;
            }
            cur.push_back(c);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace colpart
