#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "colpart/bijection.hpp"

using namespace colpart;

namespace {

ColouredPartition part(const std::string& s) { return parse_partition(s); }

std::multiset<int> sizes_of(const ColouredPartition& p) {
    std::multiset<int> out;
    for (const auto& q : p) out.insert(q.size);
    return out;
}

std::map<Colour, int> bound_counts(const ColouredPartition& p) {
    std::map<Colour, int> out;
    for (const auto& q : p)
        if (q.colour.is_bound()) ++out[q.colour];
    return out;
}

void check_conservation(const ColouredPartition& lambda, const PartitionPair& pair) {
    CHECK(weight(lambda) == weight(pair.mu) + weight(pair.nu));
    CHECK(lambda.size() == pair.mu.size() + pair.nu.size());
    auto s = sizes_of(pair.mu);
    for (const auto& q : pair.nu) s.insert(q.size);
    CHECK(s == sizes_of(lambda));
    CHECK(bound_counts(lambda) == bound_counts(pair.mu));
}

}  // namespace

TEST_CASE("worked 16-part example, forward and back") {
    auto table = builtin_delta_gamma(TableVariant::MeurmanPrimc, 3);
    auto lambda = part(
        "8[a1b1]+6[a0b2]+6[a2b2]+5[a0b1]+5[a1b0]+4[a0b0]+4[a0b0]+3[a0b2]+3[a1b1]+3[a1b1]+"
        "3[a1b0]+2[a2b2]+2[a2b2]+2[a2b2]+2[a2b0]+1[a0b0]");
    REQUIRE(is_member(lambda, MembershipSpec::pn(3)).member);

    auto pair = phi(lambda, table);
    CHECK(pair.mu ==
          part("8[a1b1]+6[a0b2]+5[a0b1]+5[a1b0]+3[a0b2]+3[a1b0]+2[a2b0]"));
    CHECK(pair.nu ==
          part("6[a0b0]+4[a0b0]+4[a0b0]+3[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+2[a0b0]+1[a0b0]"));
    check_conservation(lambda, pair);
    CHECK(phi_inverse(pair, table) == lambda);
}

TEST_CASE("two-colour worked example") {
    // colour aliases a = a1b0, b = a0b0, c = a1b1, d = a0b1
    auto table = builtin_delta_gamma(TableVariant::MeurmanPrimc, 2);
    PartitionPair pair;
    pair.mu = part("8[a0b1]+8[a1b0]+6[a1b1]+5[a1b1]+3[a0b1]+1[a1b0]");
    pair.nu = part("8[a0b0]+8[a0b0]+7[a0b0]+5[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+1[a0b0]+1[a0b0]");
    auto lambda = phi_inverse(pair, table);
    CHECK(lambda ==
          part("8[a0b1]+8[a1b1]+8[a1b1]+8[a1b0]+7[a0b0]+6[a1b1]+5[a1b1]+5[a1b1]+3[a0b1]+"
               "3[a1b1]+2[a0b0]+2[a0b0]+1[a1b1]+1[a1b1]+1[a1b0]"));
    CHECK(phi(lambda, table) == pair);
}

TEST_CASE("degenerate inputs") {
    auto table = builtin_delta_gamma(TableVariant::Alt, 3);
    auto nu_only = part("5[a0b0]+5[a0b0]+2[a0b0]");
    auto p1 = phi(nu_only, table);
    CHECK(p1.mu.empty());
    CHECK(p1.nu == nu_only);
    CHECK(phi_inverse(p1, table) == nu_only);

    auto mu_only = part("5[a2b0]+3[a1b2]");
    REQUIRE(is_member(mu_only, MembershipSpec::cn(3, table)).member);
    auto p2 = phi(mu_only, table);
    CHECK(p2.mu == mu_only);
    CHECK(p2.nu.empty());

    PartitionPair empty;
    CHECK(phi_inverse(empty, table).empty());
    auto p3 = phi({}, table);
    CHECK(p3.mu.empty());
    CHECK(p3.nu.empty());
}

TEST_CASE("invalid inputs are rejected with witnesses") {
    auto table = builtin_delta_gamma(TableVariant::MeurmanPrimc, 2);
    CHECK_THROWS_WITH_AS(phi(part("1[a1b0]+1[a1b0]"), table),
                         doctest::Contains("difference conditions"), std::invalid_argument);
    PartitionPair bad;
    bad.mu = part("2[a1b1]+2[a1b1]");  // free repeat is outside the target family
    CHECK_THROWS_AS(phi_inverse(bad, table), std::invalid_argument);
    PartitionPair bad2;
    bad2.nu = part("2[a1b1]");
    CHECK_THROWS_AS(phi_inverse(bad2, table), std::invalid_argument);
}

TEST_CASE("exhaustive round trips at small weight") {
    struct Setup {
        int n;
        TableVariant v;
        int w;
    };
    for (auto [n, v, w] : {Setup{2, TableVariant::MeurmanPrimc, 10},
                           Setup{3, TableVariant::MeurmanPrimc, 8},
                           Setup{3, TableVariant::Alt, 8}}) {
        auto table = builtin_delta_gamma(v, n);
        auto cn = MembershipSpec::cn(n, table);
        long long forwards = 0;
        std::map<long long, long long> image_count;
        enumerate_members(MembershipSpec::pn(n), w, [&](const ColouredPartition& lambda) {
            auto pair = phi(lambda, table);
            CHECK(is_member(pair.mu, cn).member);
            CHECK(is_member(pair.nu, MembershipSpec::p0()).member);
            check_conservation(lambda, pair);
            CHECK(phi_inverse(pair, table) == lambda);
            ++forwards;
            ++image_count[weight(lambda)];
        });
        CHECK(forwards > 0);
        // the image fills the whole product set: counts match by weight
        std::map<long long, long long> mu_count, nu_count, product;
        enumerate_members(cn, w, [&](const ColouredPartition& p) { ++mu_count[weight(p)]; });
        enumerate_members(MembershipSpec::p0(), w,
                          [&](const ColouredPartition& p) { ++nu_count[weight(p)]; });
        for (auto [wm, cm] : mu_count)
            for (auto [wn, cn2] : nu_count)
                if (wm + wn <= w) product[wm + wn] += cm * cn2;
        CHECK(product == image_count);
    }
}

TEST_CASE("inverse insertions commute across processing orders") {
    std::mt19937 rng(99);
    for (TableVariant v : {TableVariant::MeurmanPrimc, TableVariant::Alt}) {
        auto table = builtin_delta_gamma(v, 3);
        enumerate_members(MembershipSpec::pn(3), 10, [&](const ColouredPartition& lambda) {
            auto pair = phi(lambda, table);
            if (pair.nu.size() < 2) return;
            std::vector<int> sizes;
            for (const auto& q : pair.nu) sizes.push_back(q.size);
            for (int rep = 0; rep < 3; ++rep) {
                std::shuffle(sizes.begin(), sizes.end(), rng);
                ColouredPartition mu = pair.mu;
                for (int s : sizes) detail::insert_zero_part(mu, s, table);
                CHECK(mu == lambda);
            }
        });
    }
}

namespace {

// Independent re-derivation of the admissible parameter sets, used to draw
// arbitrary valid tables rather than the two built-ins.
std::vector<int> admissible_gamma(Colour c1, Colour c2) {
    const int k1 = c1.a_index(), l1 = c1.b_index();
    const int k2 = c2.a_index(), l2 = c2.b_index();
    std::vector<int> out;
    if (std::max(k1, l2) < std::min(k2, l1)) {
        for (int x = std::max(k1, l2) + 1; x <= std::min(k2, l1); ++x) out.push_back(x);
        return out;
    }
    if (k1 > l1 && k2 > l2) {
        for (int x = l2 + 1; x <= k2; ++x)
            if (x < l1 + 1 || x > k1) out.push_back(x);
        return out;
    }
    if (k1 < l1 && k2 < l2) {
        for (int x = k1 + 1; x <= l1; ++x)
            if (x < k2 + 1 || x > l2) out.push_back(x);
        return out;
    }
    return out;
}

DeltaGammaTable random_table(int n, unsigned seed) {
    std::mt19937 rng(seed);
    DeltaGammaTable t;
    t.n = n;
    std::vector<Colour> bounds;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) bounds.push_back(Colour(a, b));
    for (Colour c : bounds) {
        int lo = std::min(c.a_index(), c.b_index()) + 1;
        int hi = std::max(c.a_index(), c.b_index());
        t.delta[c] = lo + static_cast<int>(rng() % (hi - lo + 1));
    }
    for (Colour c1 : bounds)
        for (Colour c2 : bounds) {
            auto allowed = admissible_gamma(c1, c2);
            if (!allowed.empty()) t.gamma[{c1, c2}] = allowed[rng() % allowed.size()];
        }
    return t;
}

}  // namespace

TEST_CASE("round trips hold for arbitrary valid parameter tables") {
    for (unsigned seed : {1u, 2u, 3u}) {
        auto table = random_table(3, seed);
        REQUIRE(validate_delta_gamma(table).ok);
        auto cn = MembershipSpec::cn(3, table);
        std::map<long long, long long> image, mu_count, nu_count, product;
        enumerate_members(MembershipSpec::pn(3), 8, [&](const ColouredPartition& lambda) {
            auto pair = phi(lambda, table);
            CHECK(is_member(pair.mu, cn).member);
            CHECK(phi_inverse(pair, table) == lambda);
            ++image[weight(lambda)];
        });
        enumerate_members(cn, 8, [&](const ColouredPartition& p) { ++mu_count[weight(p)]; });
        enumerate_members(MembershipSpec::p0(), 8,
                          [&](const ColouredPartition& p) { ++nu_count[weight(p)]; });
        for (auto [wm, cm] : mu_count)
            for (auto [wn, c2] : nu_count)
                if (wm + wn <= 8) product[wm + wn] += cm * c2;
        CHECK(product == image);
    }
}
