#include "colpart/bijection.hpp"

#include <algorithm>

namespace colpart {

PartitionPair phi(const ColouredPartition& lambda, const DeltaGammaTable& table) {
    if (auto r = is_member(lambda, MembershipSpec::pn(table.n)); !r)
        throw std::invalid_argument("phi: input fails the difference conditions: " + r.witness);

    PartitionPair out;
    std::vector<int> nu_sizes;

    // Step 1: extract every a0b0 part.
    ColouredPartition mu;
    for (const auto& part : lambda) {
        if (part.colour == Colour(0, 0))
            nu_sizes.push_back(part.size);
        else
            mu.push_back(part);
    }

    // Step 2: collapse repeated free colours, surplus copies move out.
    ColouredPartition mu2;
    for (const auto& part : mu) {
        if (!mu2.empty() && part.colour.is_free() && mu2.back() == part)
            nu_sizes.push_back(part.size);
        else
            mu2.push_back(part);
    }

    // Step 3: remove excluded-pattern centres until none matches. Distinct
    // patterns never share a centre, so the scan order cannot change the set
    // of removed parts.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j < mu2.size(); ++j) {
            const ColouredPart* prev = j > 0 ? &mu2[j - 1] : nullptr;
            const ColouredPart* next = j + 1 < mu2.size() ? &mu2[j + 1] : nullptr;
            if (capparelli_pattern_forbidden(prev, mu2[j], next, table)) {
                nu_sizes.push_back(mu2[j].size);
                mu2.erase(mu2.begin() + j);
                changed = true;
                break;
            }
        }
    }

    std::sort(nu_sizes.rbegin(), nu_sizes.rend());
    out.mu = std::move(mu2);
    for (int s : nu_sizes) out.nu.push_back({s, Colour(0, 0)});
    return out;
}

namespace detail {

void insert_zero_part(ColouredPartition& mu, int size, const DeltaGammaTable& table) {
    // Locate the run of parts with this size.
    size_t lo = 0;
    while (lo < mu.size() && mu[lo].size > size) ++lo;
    size_t hi = lo;
    while (hi < mu.size() && mu[hi].size == size) ++hi;

    if (lo == hi) {
        // Size absent: a plain a0b0 part fits without touching anything.
        mu.insert(mu.begin() + lo, {size, Colour(0, 0)});
        return;
    }

    // Size present in a free colour: the free part just repeats.
    for (size_t j = lo; j < hi; ++j) {
        if (mu[j].colour.is_free()) {
            mu.insert(mu.begin() + j + 1, mu[j]);
            return;
        }
    }

    auto up = [](Colour c) { return c.a_index() < c.b_index(); };

    // Mixed run: the unique adjacent (ascending, descending) pair brackets
    // the insertion.
    for (size_t j = lo; j + 1 < hi; ++j) {
        if (up(mu[j].colour) && !up(mu[j + 1].colour)) {
            auto g = table.gamma_of(mu[j].colour, mu[j + 1].colour);
            if (!g) throw std::logic_error("insert_zero_part: gamma undefined on bracket pair");
            mu.insert(mu.begin() + j + 1, {size, Colour::free_colour(*g)});
            return;
        }
    }

    if (!up(mu[lo].colour)) {
        // Every part of this size descends; the new part goes left of the
        // first one, coloured from the left neighbour.
        const Colour c2 = mu[lo].colour;
        int i;
        if (lo == 0 || mu[lo - 1].size >= size + 2) {
            i = table.delta_of(c2);
        } else {
            const Colour c1 = mu[lo - 1].colour;
            if (c1.a_index() <= c1.b_index()) {
                i = table.delta_of(c2);
            } else {
                auto g = table.gamma_of(c1, c2);
                if (!g) throw std::logic_error("insert_zero_part: gamma undefined (left case)");
                i = *g;
            }
        }
        mu.insert(mu.begin() + lo, {size, Colour::free_colour(i)});
        return;
    }

    // Every part of this size ascends; mirror image on the right edge.
    const Colour c1 = mu[hi - 1].colour;
    int i;
    if (hi == mu.size() || mu[hi].size <= size - 2) {
        i = table.delta_of(c1);
    } else {
        const Colour c2 = mu[hi].colour;
        if (c2.a_index() >= c2.b_index()) {
            i = table.delta_of(c1);
        } else {
            auto g = table.gamma_of(c1, c2);
            if (!g) throw std::logic_error("insert_zero_part: gamma undefined (right case)");
            i = *g;
        }
    }
    mu.insert(mu.begin() + hi, {size, Colour::free_colour(i)});
}

}  // namespace detail

ColouredPartition phi_inverse(const PartitionPair& pair, const DeltaGammaTable& table) {
    if (auto r = is_member(pair.mu, MembershipSpec::cn(table.n, table)); !r)
        throw std::invalid_argument("phi_inverse: mu fails its membership check: " + r.witness);
    if (auto r = is_member(pair.nu, MembershipSpec::p0()); !r)
        throw std::invalid_argument("phi_inverse: nu fails its membership check: " + r.witness);

    ColouredPartition mu = pair.mu;
    std::vector<int> sizes;
    for (const auto& part : pair.nu) sizes.push_back(part.size);
    std::sort(sizes.rbegin(), sizes.rend());
    for (int s : sizes) detail::insert_zero_part(mu, s, table);

    if (auto r = is_member(mu, MembershipSpec::pn(table.n)); !r)
        throw std::logic_error("phi_inverse: result fails the difference conditions: " +
                               r.witness);
    return mu;
}

}  // namespace colpart
