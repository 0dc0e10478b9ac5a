#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "colpart/sequence.hpp"

using namespace colpart;

namespace {

ColourSequence seq(const std::string& s) { return parse_colour_sequence(s); }

// Reduction driven from the right, to witness order-independence.
ColourSequence reduce_rightmost(ColourSequence c) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = c.size(); i-- > 1;) {
            Colour left = c[i - 1], right = c[i];
            if (right.is_free() && right.a_index() == left.b_index()) {
                c.erase(c.begin() + i);
                changed = true;
                break;
            }
            if (left.is_free() && left.a_index() == right.a_index()) {
                c.erase(c.begin() + i - 1);
                changed = true;
                break;
            }
        }
    }
    return c;
}

std::vector<ColourSequence> all_sequences(int n, int length) {
    std::vector<Colour> colours;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) colours.push_back(Colour(a, b));
    std::vector<ColourSequence> out{{}};
    for (int l = 0; l < length; ++l) {
        std::vector<ColourSequence> next;
        for (const auto& s : out)
            for (Colour c : colours) {
                auto t = s;
                t.push_back(c);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("reduction golden example") {
    auto c = seq("a1b1,a1b2,a2b2,a3b3,a3b1,a1b3,a3b3,a3b3,a3b2,a1b1");
    CHECK(reduce(c) == seq("a1b2,a3b1,a1b3,a3b2,a1b1"));
    CHECK(reduce(seq("a1b1,a1b1")) == seq("a1b1"));
    auto fixed = seq("a1b2,a3b1");
    CHECK(reduce(fixed) == fixed);
}

TEST_CASE("reduction is idempotent and order independent") {
    for (const auto& c : all_sequences(3, 4)) {
        auto r = reduce(c);
        CHECK(is_reduced(r));
        CHECK(reduce(r) == r);
        CHECK(reduce_rightmost(c) == r);
    }
}

TEST_CASE("kernel structure of the worked example") {
    auto S = seq("a1b2,a2b3,a2b2,a1b4,a3b2,a2b1,a3b3,a2b2");
    auto ks = kernel_structure(S);
    CHECK(ks.s == 8);
    CHECK(ks.t == 3);
    REQUIRE(ks.spans.size() == 3);
    CHECK(ks.spans[0] == std::pair{1, 2});
    CHECK(ks.spans[1] == std::pair{4, 4});
    CHECK(ks.spans[2] == std::pair{5, 6});
    CHECK(ks.sites.size() == size_t(ks.s + ks.t));
}

TEST_CASE("singleton kernel has a left and a right site") {
    auto ks = kernel_structure(seq("a1b0"));
    CHECK(ks.s == 1);
    CHECK(ks.t == 1);
    REQUIRE(ks.sites.size() == 2);
    CHECK(ks.sites[0].left);
    CHECK(ks.sites[0].colour == Colour(1, 1));
    CHECK_FALSE(ks.sites[1].left);
    CHECK(ks.sites[1].colour == Colour(0, 0));
    // boundary types: left pair (sentinel, a1b0) has chi(1 < 0) = 0, right
    // pair (a1b0, sentinel) has chi(1 > 0) = 1
    CHECK(ks.sites[0].cls == SiteClass::Type0);
    CHECK(ks.sites[1].cls == SiteClass::Type1);
}

TEST_CASE("non-reduced input is rejected with the offending pair") {
    try {
        kernel_structure(seq("a1b2,a2b2"));
        FAIL("expected NotReducedError");
    } catch (const NotReducedError& e) {
        CHECK(std::string(e.what()).find("a1b2") != std::string::npos);
        CHECK(std::string(e.what()).find("a2b2") != std::string::npos);
    }
}

TEST_CASE("left insertion type example") {
    // inserting a2b2 into (a0b1, a2b0): chi(1<2)+chi(2<0)-chi(1<=0) = 1
    CHECK(left_insertion_type(Colour(0, 1), Colour(2, 0)) == 1);
}

TEST_CASE("insertion types match the metric differences, sentinel included") {
    std::vector<Colour> cs{Colour::sentinel()};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) cs.push_back(Colour(a, b));
    for (Colour prev : cs)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (a == b) continue;
                Colour target(a, b);
                Colour f = Colour::free_colour(a);
                int direct = metric_value(Metric::Delta, prev, f) +
                             metric_value(Metric::Delta, f, target) -
                             metric_value(Metric::Delta, prev, target);
                CHECK(left_insertion_type(prev, target) == direct);
                // the type flip under the double-primed metric is a property
                // of secondary pairs (the inserted colour differs from the
                // one matching prev)
                if (prev.b_index() != target.a_index()) {
                    CHECK((left_insertion_type(prev, target) == 0 ||
                           left_insertion_type(prev, target) == 1));
                    CHECK(left_insertion_type(prev, target, Metric::DeltaDoublePrime) ==
                          1 - left_insertion_type(prev, target));
                }
            }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            Colour source(a, b);
            Colour f = Colour::free_colour(b);
            for (Colour next : cs) {
                int direct = metric_value(Metric::Delta, source, f) +
                             metric_value(Metric::Delta, f, next) -
                             metric_value(Metric::Delta, source, next);
                CHECK(right_insertion_type(source, next) == direct);
                if (next.a_index() != source.b_index()) {
                    CHECK((right_insertion_type(source, next) == 0 ||
                           right_insertion_type(source, next) == 1));
                    CHECK(right_insertion_type(source, next, Metric::DeltaDoublePrime) ==
                          1 - right_insertion_type(source, next));
                }
            }
        }
}

TEST_CASE("primary-pair insertions are neutral, secondary differences are 0/1") {
    const int n = 4;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (i == k || k == l) continue;
                Colour c1(i, k), f(k, k), c2(k, l);
                CHECK(delta(c1, f) + delta(f, c2) == delta(c1, c2));
            }
    // left type does not depend on the first a-index; right type not on the
    // last b-index
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (j == k || k == l) continue;
                    for (int i2 = 0; i2 < n; ++i2)
                        CHECK(left_insertion_type(Colour(i, j), Colour(k, l)) ==
                              left_insertion_type(Colour(i2, j), Colour(k, l)));
                    if (i == j) continue;
                    for (int l2 = 0; l2 < n; ++l2)
                        CHECK(right_insertion_type(Colour(i, j), Colour(k, l)) ==
                              right_insertion_type(Colour(i, j), Colour(k, l2)));
                }
}

TEST_CASE("double insertion adds the two separate differences") {
    const int n = 4;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (j == k) continue;  // secondary pair requires distinct middle indices
                    Colour c1(i, j), c2(k, l);
                    Colour fj = Colour::free_colour(j), fk = Colour::free_colour(k);
                    int four = delta(c1, fj) + delta(fj, fk) + delta(fk, c2) - delta(c1, c2);
                    int left = (j != k && k != l) ? left_insertion_type(c1, c2) : -1;
                    int right = (i != j) ? right_insertion_type(c1, c2) : -1;
                    if (left >= 0 && right >= 0) CHECK(four == left + right);
                }
}

TEST_CASE("insertion example reconstructs the longer sequence") {
    auto S = seq("a1b2,a3b1,a2b2,a4b3,a3b2");
    auto ks = kernel_structure(S);
    CHECK(ks.t == 3);
    auto C = insert_counts(ks, {2, 1, 3, 0, 1, 0, 0, 0});
    CHECK(C == seq("a1b1,a1b1,a1b2,a2b2,a3b3,a3b3,a3b3,a3b1,a2b2,a2b2,a4b3,a3b2"));
    CHECK(reduce(C) == S);
    CHECK(insert_counts(ks, std::vector<int>(8, 0)) == S);
    CHECK_THROWS_AS(insert_counts(ks, {1, 2}), std::invalid_argument);

    auto [ks2, counts] = decompose(C);
    CHECK(ks2.kernel == S);
    CHECK(counts == std::vector<int>{2, 1, 3, 0, 1, 0, 0, 0});
}

TEST_CASE("site bookkeeping invariants") {
    for (int len = 1; len <= 4; ++len) {
        for (const auto& S : all_reduced_sequences(3, len)) {
            auto ks = kernel_structure(S);
            CHECK(ks.neutral_count() == ks.s - ks.t);
            auto t0 = ks.type0_per_span();
            std::vector<int> t1(ks.t, 0);
            for (const auto& site : ks.sites)
                if (site.owner > 0 && site.cls == SiteClass::Type1) ++t1[site.owner - 1];
            for (int u = 0; u < ks.t; ++u) CHECK(t0[u] + t1[u] == 2);
            // secondary site indices are span-start + u - 1 and span-end + u
            for (int u = 1; u <= ks.t; ++u) {
                std::vector<int> indices;
                for (const auto& site : ks.sites)
                    if (site.owner == u) indices.push_back(site.index);
                REQUIRE(indices.size() == 2);
                CHECK(indices[0] == ks.spans[u - 1].first + u - 1);
                CHECK(indices[1] == ks.spans[u - 1].second + u);
            }
        }
    }
}

TEST_CASE("insert and decompose are mutually inverse") {
    // decompose . insert = id over all reduced kernels of length <= 3 and
    // small counts
    for (int len = 1; len <= 3; ++len) {
        for (const auto& S : all_reduced_sequences(3, len)) {
            auto ks = kernel_structure(S);
            const int sites = ks.s + ks.t;
            std::vector<int> counts(sites, 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == sites) {
                    auto C = insert_counts(ks, counts);
                    auto [ks2, back] = decompose(C);
                    CHECK(ks2.kernel == S);
                    CHECK(back == counts);
                    return;
                }
                for (int v = 0; v <= 2; ++v) {
                    counts[i] = v;
                    rec(i + 1);
                }
                counts[i] = 0;
            };
            rec(0);
        }
    }
    // insert . decompose = id over every sequence of length <= 6 on 9 colours
    for (int len = 0; len <= 6; ++len) {
        long long n = 0;
        for (const auto& C : all_sequences(3, len)) {
            auto [ks, counts] = decompose(C);
            CHECK(insert_counts(ks, counts) == C);
            ++n;
        }
        CHECK(n == static_cast<long long>(std::pow(9, len)));
    }
}

TEST_CASE("kernel structure under the double-primed metric flips secondary types") {
    for (int len = 1; len <= 3; ++len) {
        for (const auto& S : all_reduced_sequences(3, len)) {
            auto plain = kernel_structure(S);
            auto flipped = kernel_structure(S, Metric::DeltaDoublePrime);
            REQUIRE(plain.sites.size() == flipped.sites.size());
            CHECK(plain.spans == flipped.spans);
            for (size_t j = 0; j < plain.sites.size(); ++j) {
                const auto &a = plain.sites[j], &b = flipped.sites[j];
                CHECK(a.index == b.index);
                CHECK(a.position == b.position);
                CHECK(a.left == b.left);
                CHECK(a.colour == b.colour);
                CHECK(a.owner == b.owner);
                if (a.cls == SiteClass::Neutral) {
                    CHECK(b.cls == SiteClass::Neutral);
                } else {
                    CHECK(b.cls != SiteClass::Neutral);
                    CHECK((a.cls == SiteClass::Type0) == (b.cls == SiteClass::Type1));
                }
            }
        }
    }
}
