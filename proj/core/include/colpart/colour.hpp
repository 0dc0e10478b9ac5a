#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colpart {

/// A part colour a_i b_k. The colour is *free* when i == k, *bound* when
/// i != k. A distinguished boundary value (printed "a?b?" never, parsed never)
/// pads both ends of a colour sequence; its a/b indices read as +infinity.
class Colour {
public:
    Colour() : a_(0), b_(0) {}
    Colour(int a, int b) {
        if (a < 0 || b < 0 || a > kMaxIndex || b > kMaxIndex)
            throw std::invalid_argument("Colour: index out of range");
        a_ = static_cast<signed char>(a);
        b_ = static_cast<signed char>(b);
    }

    static Colour free_colour(int i) { return Colour(i, i); }
    static Colour bound(int i, int k) {
        if (i == k) throw std::invalid_argument("Colour::bound: indices must differ");
        return Colour(i, k);
    }
    static Colour sentinel() {
        Colour c;
        c.a_ = c.b_ = -1;
        return c;
    }

    bool is_sentinel() const { return a_ < 0; }
    bool is_free() const { return !is_sentinel() && a_ == b_; }
    bool is_bound() const { return !is_sentinel() && a_ != b_; }

    /// a-index; +infinity for the sentinel.
    int a_index() const { return a_ < 0 ? kInfinity : a_; }
    /// b-index; +infinity for the sentinel.
    int b_index() const { return b_ < 0 ? kInfinity : b_; }

    auto operator<=>(const Colour&) const = default;

    std::string str() const;
    static Colour parse(const std::string& token);

    static constexpr int kMaxIndex = 15;  // colour indices live in 0..n-1, n <= 16
    static constexpr int kInfinity = std::numeric_limits<int>::max();

private:
    signed char a_, b_;
};

enum class Metric { Delta, DeltaPrime, DeltaDoublePrime };

/// Minimal difference between consecutive parts coloured c1 and c2.
/// The sentinel is allowed on one side (value 1); both sides sentinel is a
/// meaningless query and throws.
int delta(Colour c1, Colour c2);

/// chi(i >= i') + chi(k <= k'); governs minimal coloured Frobenius symbols.
/// Sentinel arguments are rejected.
int delta_prime(Colour c1, Colour c2);

/// 2 - delta_prime.
int delta_double_prime(Colour c1, Colour c2);

/// Dispatch on Metric. Exactly one sentinel argument yields 1 for every
/// metric (the boundary convention shared by all three).
int metric_value(Metric m, Colour c1, Colour c2);

/// The two ready-made delta/gamma parameter choices.
enum class TableVariant { MeurmanPrimc, Alt };

/// Variant difference conditions for the a0b0-free partition families: a few
/// listed colour pairs get minimal difference 1, everything else falls back
/// to delta. Neither argument may be a0b0 (that colour is excluded from the
/// families these conditions describe).
int delta_variant(TableVariant variant, Colour c1, Colour c2);

/// Parameter functions (delta, gamma) for the pattern-avoiding partition
/// families. `delta` is defined on every bound colour; `gamma` exactly on the
/// pairs of bound colours its defining conditions require.
struct DeltaGammaTable {
    int n = 2;
    std::map<Colour, int> delta;
    std::map<std::pair<Colour, Colour>, int> gamma;

    int delta_of(Colour c) const;
    std::optional<int> gamma_of(Colour c1, Colour c2) const;

    bool operator==(const DeltaGammaTable&) const = default;
};

/// The built-in tables: MeurmanPrimc is (1 + min) based, Alt is (max) based.
DeltaGammaTable builtin_delta_gamma(TableVariant variant, int n);

/// Checks the two defining conditions entry by entry. Violations are data,
/// not errors: each one becomes a line in the report.
struct TableValidation {
    bool ok = true;
    std::vector<std::string> violations;
};
TableValidation validate_delta_gamma(const DeltaGammaTable& table);

/// Gamma is only constrained (and only defined) on three shapes of colour
/// pairs; these helpers expose the shape tests used both by the validator and
/// by the builtin constructors.
bool gamma_required(Colour c1, Colour c2);

/// Square matrix of minimal differences over all n^2 colours. Row order
/// follows the classical listings for n = 2 and n = 3; for other n the rows
/// are sorted by (a-index descending, b-index ascending). That general-n
/// order is our convention; only the n = 2, 3 orders are canonical.
std::vector<Colour> matrix_colour_order(int n);
std::vector<std::vector<int>> build_delta_matrix(int n, Metric which);

}  // namespace colpart
