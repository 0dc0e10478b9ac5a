#include "colpart/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace colpart {

namespace {

// Strict row orders as comparable keys: at equal value the *larger* a-index
// is the smaller top entry, while the larger b-index is the larger bottom
// entry.
inline std::pair<int, int> top_key(std::pair<int, int> e) { return {e.first, -e.second}; }
inline std::pair<int, int> bottom_key(std::pair<int, int> e) { return e; }

}  // namespace

long long frob_weight(const FrobeniusPartition& f) {
    long long w = static_cast<long long>(f.top.size());
    for (auto [v, a] : f.top) w += v;
    for (auto [v, b] : f.bottom) w += v;
    return w;
}

ColourSequence frob_colour_sequence(const FrobeniusPartition& f) {
    ColourSequence c;
    c.reserve(f.top.size());
    for (size_t j = 0; j < f.top.size(); ++j) c.push_back(Colour(f.top[j].second, f.bottom[j].second));
    return c;
}

bool frob_valid(const FrobeniusPartition& f, int n, std::string* why) {
    auto bad = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (f.top.size() != f.bottom.size()) return bad("rows have different lengths");
    for (auto [v, a] : f.top)
        if (v < 0 || a < 0 || a >= n) return bad("top entry out of range");
    for (auto [v, b] : f.bottom)
        if (v < 0 || b < 0 || b >= n) return bad("bottom entry out of range");
    for (size_t j = 0; j + 1 < f.top.size(); ++j) {
        if (!(top_key(f.top[j]) > top_key(f.top[j + 1])))
            return bad("top row not strictly decreasing at column " + std::to_string(j + 1));
        if (!(bottom_key(f.bottom[j]) > bottom_key(f.bottom[j + 1])))
            return bad("bottom row not strictly decreasing at column " + std::to_string(j + 1));
    }
    return true;
}

std::string format_frobenius(const FrobeniusPartition& f) {
    std::ostringstream os;
    os << '(';
    for (size_t j = 0; j < f.top.size(); ++j) {
        if (j) os << ',';
        os << f.top[j].first << 'a' << f.top[j].second;
    }
    os << " | ";
    for (size_t j = 0; j < f.bottom.size(); ++j) {
        if (j) os << ',';
        os << f.bottom[j].first << 'b' << f.bottom[j].second;
    }
    os << ')';
    return os.str();
}

FrobeniusPartition parse_frobenius(const std::string& text) {
    auto lp = text.find('(');
    auto bar = text.find('|');
    auto rp = text.rfind(')');
    if (lp == std::string::npos || bar == std::string::npos || rp == std::string::npos)
        throw std::invalid_argument("parse_frobenius: expected '(top | bottom)'");
    auto parse_row = [](const std::string& row, char letter) {
        std::vector<std::pair<int, int>> out;
        std::istringstream is(row);
        std::string token;
        while (std::getline(is, token, ',')) {
            size_t b = token.find_first_not_of(" \t");
            if (b == std::string::npos) continue;
            size_t e = token.find_last_not_of(" \t");
            token = token.substr(b, e - b + 1);
            size_t pos = token.find(letter);
            if (pos == std::string::npos)
                throw std::invalid_argument("parse_frobenius: bad entry '" + token + "'");
            out.push_back({std::stoi(token.substr(0, pos)), std::stoi(token.substr(pos + 1))});
        }
        return out;
    };
    FrobeniusPartition f;
    f.top = parse_row(text.substr(lp + 1, bar - lp - 1), 'a');
    f.bottom = parse_row(text.substr(bar + 1, rp - bar - 1), 'b');
    return f;
}

namespace {

// Lower bound for the value sum of `r` further strictly decreasing entries
// in one row: values 0..k each host at most n colours.
inline long long row_min_future(int r, int n) {
    long long s = 0;
    for (int t = 0; t < r; ++t) s += t / n;
    return s;
}

struct FrobEnumerator {
    int n;
    int budget;  // max value sum for the two rows
    const std::function<void(const FrobeniusPartition&)>& visit;
    unsigned long long max_nodes;
    unsigned long long nodes = 0;
    FrobeniusPartition cur;
    std::vector<long long> min_future;  // cached 2 * row_min_future

    void tick() {
        if (++nodes > max_nodes) throw BudgetExceeded(nodes);
    }

    void rec(int cols_left, long long spent) {
        if (cols_left == 0) {
            visit(cur);
            return;
        }
        const long long floor_cost = 2 * min_future[cols_left - 1];
        // top candidates strictly below the previous key
        std::pair<int, int> tkey{budget + 1, 1}, bkey{budget + 1, -1};
        if (!cur.top.empty()) {
            tkey = top_key(cur.top.back());
            bkey = bottom_key(cur.bottom.back());
        }
        for (int vt = std::min<long long>(tkey.first, budget - spent - floor_cost); vt >= 0; --vt) {
            // spare room below for the remaining columns in the top row
            for (int at = 0; at < n; ++at) {
                if (std::pair<int, int>{vt, -at} >= tkey) continue;
                if (static_cast<long long>(vt) * n + (n - 1 - at) < cols_left - 1) continue;
                for (int vb = static_cast<int>(
                         std::min<long long>(bkey.first, budget - spent - vt - floor_cost));
                     vb >= 0; --vb) {
                    for (int bt = 0; bt < n; ++bt) {
                        if (std::pair<int, int>{vb, bt} >= bkey) continue;
                        if (static_cast<long long>(vb) * n + bt < cols_left - 1) continue;
                        tick();
                        cur.top.push_back({vt, at});
                        cur.bottom.push_back({vb, bt});
                        rec(cols_left - 1, spent + vt + vb);
                        cur.top.pop_back();
                        cur.bottom.pop_back();
                    }
                }
            }
        }
    }
};

}  // namespace

void enumerate_frobenius(int n, int max_weight,
                         const std::function<void(const FrobeniusPartition&)>& visit,
                         unsigned long long max_nodes) {
    if (n < 1) throw std::invalid_argument("enumerate_frobenius: need n >= 1");
    if (max_weight < 0) throw std::invalid_argument("enumerate_frobenius: negative weight bound");
    unsigned long long nodes_used = 0;
    for (int s = 0; s <= max_weight; ++s) {
        FrobEnumerator e{n, max_weight - s, visit, max_nodes, nodes_used, {}, {}};
        e.min_future.resize(s + 1);
        for (int r = 0; r <= s; ++r) e.min_future[r] = row_min_future(r, n);
        e.rec(s, 0);
        nodes_used = e.nodes;
    }
}

ColourSequence frob_kernel(const FrobeniusPartition& f) { return reduce(frob_colour_sequence(f)); }

FrobeniusPartition minimal_frobenius(const ColourSequence& c, int n) {
    FrobeniusPartition f;
    const size_t s = c.size();
    f.top.resize(s);
    f.bottom.resize(s);
    int vt = 0, vb = 0;
    for (size_t j = s; j-- > 0;) {
        if (c[j].is_sentinel() || c[j].a_index() >= n || c[j].b_index() >= n)
            throw std::invalid_argument("minimal_frobenius: colour out of range: " + c[j].str());
        if (j + 1 < s) {
            vt += c[j].a_index() >= c[j + 1].a_index() ? 1 : 0;
            vb += c[j].b_index() <= c[j + 1].b_index() ? 1 : 0;
        }
        f.top[j] = {vt, c[j].a_index()};
        f.bottom[j] = {vb, c[j].b_index()};
    }
    return f;
}

FrobStatistics frob_statistics(const FrobeniusPartition& f, int n) {
    FrobStatistics st;
    st.weight = frob_weight(f);
    st.u.assign(n, 0);
    st.v.assign(n, 0);
    st.u_bound.assign(n, 0);
    st.v_bound.assign(n, 0);
    for (size_t j = 0; j < f.top.size(); ++j) {
        const int a = f.top[j].second, b = f.bottom[j].second;
        ++st.u[a];
        ++st.v[b];
        if (a != b) {
            ++st.u_bound[a];
            ++st.v_bound[b];
        }
    }
    return st;
}

}  // namespace colpart
