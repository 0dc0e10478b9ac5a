#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "colpart/colour.hpp"

namespace colpart {

using ColourSequence = std::vector<Colour>;

std::string format_colour_sequence(const ColourSequence& c);
ColourSequence parse_colour_sequence(const std::string& text);

/// Applies the two free-colour removal rules until none fires. Idempotent,
/// and the result does not depend on removal order.
ColourSequence reduce(ColourSequence c);

bool is_reduced(const ColourSequence& c);

enum class SiteClass { Neutral, Type0, Type1 };

/// One of the s+t places where a free colour can be inserted into a reduced
/// sequence. `position` is 1-based into the kernel; a left site sits
/// immediately before that colour, a right site immediately after.
struct InsertionSite {
    int index = 0;     // 1-based among all sites, left to right
    int position = 0;  // 1-based kernel position the site is anchored to
    bool left = false;
    Colour colour;  // the free colour inserted here
    SiteClass cls = SiteClass::Neutral;
    int owner = 0;  // 1-based maximal primary subsequence for secondary sites, else 0
};

struct KernelStructure {
    ColourSequence kernel;
    int s = 0;  // kernel length
    int t = 0;  // number of maximal primary subsequences
    std::vector<std::pair<int, int>> spans;  // 1-based (first, last) per subsequence
    std::vector<InsertionSite> sites;        // size s + t

    int neutral_count() const;
    /// |T0^u| for u = 1..t.
    std::vector<int> type0_per_span() const;
    int type0_count() const;
};

struct NotReducedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Decomposes a reduced sequence into maximal primary subsequences and
/// enumerates its insertion sites, classified under the given metric
/// (Delta by default; DeltaDoublePrime swaps the two secondary types).
KernelStructure kernel_structure(const ColourSequence& s, Metric metric = Metric::Delta);

/// Type (0 or 1) of inserting the free colour matching `target`'s a-index
/// immediately left of `target`, with `prev` on the other side of the gap.
/// `prev` may be the sentinel.
int left_insertion_type(Colour prev, Colour target, Metric metric = Metric::Delta);

/// Type of inserting the free colour matching `source`'s b-index immediately
/// right of `source`; `next` may be the sentinel.
int right_insertion_type(Colour source, Colour next, Metric metric = Metric::Delta);

/// S(n_1, ..., n_{s+t}): inserts counts[j] copies of the j-th site's colour.
ColourSequence insert_counts(const KernelStructure& ks, const std::vector<int>& counts);

/// Inverse of insert_counts: recovers (reduce(c), counts). The counts vector
/// is unique; inside a gap holding both a right and a left site the two
/// insertable colours always differ, so attribution is forced (the right
/// site's copies come first).
std::pair<KernelStructure, std::vector<int>> decompose(const ColourSequence& c);

/// All reduced sequences over n^2 colours with the given length.
std::vector<ColourSequence> all_reduced_sequences(int n, int length);

}  // namespace colpart
