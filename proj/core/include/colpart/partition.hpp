#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colpart/qseries.hpp"
#include "colpart/sequence.hpp"

namespace colpart {

struct ColouredPart {
    int size = 0;
    Colour colour;
    auto operator<=>(const ColouredPart&) const = default;
};

/// Parts in weakly decreasing size order, left to right. The admissible order
/// of equal-sized parts is unique (if two distinct colours can sit side by
/// side at the same size, the reversed order violates the difference
/// conditions), so a sequence representation introduces no double counting.
using ColouredPartition = std::vector<ColouredPart>;

long long weight(const ColouredPartition& p);
ColourSequence colour_sequence_of(const ColouredPartition& p);

std::string format_partition(const ColouredPartition& p);   // 9[a1b0]+8[a0b0]+...
ColouredPartition parse_partition(const std::string& text);  // inverse; "" = empty
std::string partition_to_json(const ColouredPartition& p);
ColouredPartition partition_from_json(const std::string& text);

enum class Family {
    GeneralisedPrimc,       // difference conditions only
    GeneralisedCapparelli,  // no a0b0, no free repeats, pattern avoidance
    ZeroColoured            // every part coloured a0b0
};

struct MembershipSpec {
    Family family = Family::GeneralisedPrimc;
    int n = 1;
    std::optional<DeltaGammaTable> table;  // required for GeneralisedCapparelli

    static MembershipSpec pn(int n);
    static MembershipSpec cn(int n, DeltaGammaTable table);
    static MembershipSpec p0();
};

struct MembershipResult {
    bool member = true;
    std::string witness;  // first violation, human readable
    explicit operator bool() const { return member; }
};

MembershipResult is_member(const ColouredPartition& p, const MembershipSpec& spec);

/// True when (prev, centre, next) — with `centre` carrying a free colour and
/// prev/next null at the partition boundary — is one of the excluded patterns
/// of the pattern-avoiding family for this table. Shared by the membership
/// test, the enumerator and the partition-pair map.
bool capparelli_pattern_forbidden(const ColouredPart* prev, const ColouredPart& centre,
                                  const ColouredPart* next, const DeltaGammaTable& table);

/// Least-weight partition realising the colour sequence under the metric:
/// part i is the suffix sum of metric values, anchored at 1 on the right.
ColouredPartition minimal_partition(const ColourSequence& c, Metric metric);
/// Its weight, computed as sum_k k * metric(c_k, c_{k+1}).
long long minimal_weight(const ColourSequence& c, Metric metric);

ColourSequence kernel_of(const ColouredPartition& p);

constexpr unsigned long long kNoNodeBudget = ~0ull;

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(unsigned long long nodes)
        : std::runtime_error("enumeration node budget exceeded (" + std::to_string(nodes) +
                             " nodes)"),
          nodes(nodes) {}
    unsigned long long nodes;
};

/// Every member of the family with weight <= max_weight, exactly once, in
/// (weight, then lexicographic (size, colour)) order. Throws BudgetExceeded
/// once more than max_nodes search nodes have been expanded.
void enumerate_members(const MembershipSpec& spec, int max_weight,
                       const std::function<void(const ColouredPartition&)>& visit,
                       unsigned long long max_nodes = kNoNodeBudget);

/// Same members, emitted in prefix order from a single search pass. Roughly
/// an order of magnitude fewer nodes than the weight-major stream; the
/// orderless bulk counterpart used by the verification claims.
void enumerate_members_unordered(const MembershipSpec& spec, int max_weight,
                                 const std::function<void(const ColouredPartition&)>& visit,
                                 unsigned long long max_nodes = kNoNodeBudget);

/// Weight of the minimal partition after inserting counts[j] copies of each
/// site colour, evaluated from the site classification alone (type-1 sites
/// push every part on their left up by one; part sizes come from the suffix
/// count of sites that still separate parts). Must agree with
/// minimal_weight(insert_counts(ks, counts), Delta).
long long minimal_weight_after_insertion(const KernelStructure& ks,
                                         const std::vector<int>& counts);

/// Affine dilation of parts: size k in colour c becomes mult*k + offset(c).
/// Offsets must satisfy offset >= 1 - mult so dilated parts stay positive
/// and dilated weights never drop below the original weight (which is what
/// lets a bounded enumeration cover a bounded dilated range).
struct PartDilation {
    int mult = 1;
    std::map<Colour, int> offsets;  // missing colours shift by 0

    long long apply(const ColouredPart& part) const;
    static PartDilation identity() { return {}; }
    /// k in a_i b_j goes to n*k - i + j.
    static PartDilation principal(int n);
};

/// Histogram of dilated weights over the family, for dilated weight <= bound.
std::vector<long long> dilated_weight_counts(const MembershipSpec& spec,
                                             const PartDilation& dilation, int bound,
                                             unsigned long long max_nodes = kNoNodeBudget);

enum class KernelGfForm { Coloured, Frobenius };

/// Closed-form generating function, by weight, for the family members with
/// this kernel and s+m parts (Coloured), or for the coloured Frobenius
/// symbols with this kernel and length s+m (Frobenius); truncated at the
/// given order. Colour variables are suppressed.
QSeries kernel_gf(const KernelStructure& ks, int m, KernelGfForm form, int order);

}  // namespace colpart
