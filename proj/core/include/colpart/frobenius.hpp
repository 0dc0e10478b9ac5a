#pragma once

#include <functional>
#include <string>
#include <vector>

#include "colpart/partition.hpp"
#include "colpart/sequence.hpp"

namespace colpart {

/// Two-rowed array of equal length: the top row holds (value, a-index)
/// entries, strictly decreasing in the key (value, then *smaller* a-index
/// wins at equal value); the bottom row holds (value, b-index) entries,
/// strictly decreasing in (value, then larger b-index wins). Weight is the
/// length plus both row sums.
struct FrobeniusPartition {
    std::vector<std::pair<int, int>> top;     // (value >= 0, a-index)
    std::vector<std::pair<int, int>> bottom;  // (value >= 0, b-index)

    bool operator==(const FrobeniusPartition&) const = default;
    auto operator<=>(const FrobeniusPartition&) const = default;
};

long long frob_weight(const FrobeniusPartition& f);
ColourSequence frob_colour_sequence(const FrobeniusPartition& f);

/// Structural validity: equal row lengths, indices < n, both strict orders.
bool frob_valid(const FrobeniusPartition& f, int n, std::string* why = nullptr);

std::string format_frobenius(const FrobeniusPartition& f);  // (3a1,2a0 | 4b2,4b0)
FrobeniusPartition parse_frobenius(const std::string& text);

/// Every coloured symbol of weight <= max_weight, exactly once, in
/// (weight, length, rows) order.
void enumerate_frobenius(int n, int max_weight,
                         const std::function<void(const FrobeniusPartition&)>& visit,
                         unsigned long long max_nodes = kNoNodeBudget);

ColourSequence frob_kernel(const FrobeniusPartition& f);

/// The least-weight symbol with this colour sequence. Adjacent top values
/// differ by chi(a_j >= a_{j+1}), bottom values by chi(b_j <= b_{j+1}), both
/// rows ending at 0; column sums plus one reproduce the minimal coloured
/// partition under the primed metric.
FrobeniusPartition minimal_frobenius(const ColourSequence& c, int n);

struct FrobStatistics {
    long long weight = 0;
    std::vector<int> u, v;              // a_i / b_i occurrences
    std::vector<int> u_bound, v_bound;  // restricted to columns with bound colour
};
FrobStatistics frob_statistics(const FrobeniusPartition& f, int n);

}  // namespace colpart
