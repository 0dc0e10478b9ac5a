#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "colpart/colour.hpp"

using namespace colpart;

namespace {
const Colour a0b0(0, 0), a0b1(0, 1), a1b0(1, 0), a1b1(1, 1);
int chi(bool b) { return b ? 1 : 0; }

std::vector<Colour> all_colours(int n) {
    std::vector<Colour> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.push_back(Colour(a, b));
    return out;
}
}  // namespace

TEST_CASE("colour basics") {
    CHECK(a1b1.is_free());
    CHECK(a1b0.is_bound());
    CHECK(Colour::sentinel().is_sentinel());
    CHECK(Colour::sentinel().a_index() == Colour::kInfinity);
    CHECK(Colour::parse("a12b3") == Colour(12, 3));
    CHECK(Colour(1, 2).str() == "a1b2");
    CHECK_THROWS_AS(Colour::bound(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Colour(16, 0), std::invalid_argument);
}

TEST_CASE("minimal difference on listed pairs") {
    CHECK(delta(a1b0, a0b0) == 1);
    CHECK(delta(Colour(2, 0), Colour(2, 1)) == 2);
    for (int i = 0; i < 5; ++i) CHECK(delta(Colour::free_colour(i), Colour::free_colour(i)) == 0);
    CHECK(delta(Colour::sentinel(), a1b0) == 1);
    CHECK(delta(a1b0, Colour::sentinel()) == 1);
    CHECK(delta(a0b0, Colour::sentinel()) == 1);
    CHECK_THROWS_AS(delta(Colour::sentinel(), Colour::sentinel()), std::invalid_argument);
}

TEST_CASE("primed differences") {
    for (int i = 0; i < 4; ++i)
        CHECK(delta_prime(Colour::free_colour(i), Colour::free_colour(i)) == 2);
    // direct formula evaluations
    CHECK(delta_prime(a1b0, a0b0) == chi(1 >= 0) + chi(0 <= 0));
    CHECK(delta_prime(a1b0, a0b0) == 2);
    CHECK(delta_prime(Colour(0, 2), Colour(1, 0)) == 0);
    CHECK_THROWS_AS(delta_prime(Colour::sentinel(), a1b0), std::invalid_argument);

    CHECK(delta_double_prime(a1b1, a1b1) == 0);
    CHECK(delta_double_prime(Colour(0, 2), Colour(1, 0)) == 2);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            CHECK(delta_double_prime(Colour::free_colour(i), Colour::free_colour(k)) ==
                  chi(i != k));
}

TEST_CASE("difference matrix reproduces the classical 4- and 9-colour tables") {
    // rows/columns a=a1b0, b=a0b0, c=a1b1, d=a0b1
    const std::vector<std::vector<int>> p2 = {
        {2, 1, 2, 2}, {1, 0, 1, 1}, {0, 1, 0, 2}, {0, 1, 0, 2}};
    CHECK(build_delta_matrix(2, Metric::Delta) == p2);

    // rows/columns a2b0, a2b1, a1b0, a0b0, a2b2, a1b1, a0b1, a1b2, a0b2
    const std::vector<std::vector<int>> p3 = {
        {2, 2, 2, 1, 2, 2, 2, 2, 2}, {1, 2, 1, 1, 2, 1, 2, 2, 2}, {1, 1, 2, 1, 1, 2, 2, 2, 2},
        {1, 1, 1, 0, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 1, 1, 2, 2}, {0, 1, 0, 1, 1, 0, 2, 1, 2},
        {0, 1, 0, 1, 1, 0, 2, 1, 2}, {0, 0, 1, 1, 0, 1, 1, 2, 2}, {0, 0, 0, 1, 0, 0, 1, 1, 2}};
    CHECK(build_delta_matrix(3, Metric::Delta) == p3);

    CHECK(build_delta_matrix(1, Metric::Delta) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("variant differences reproduce the two 8-colour tables") {
    CHECK(delta_variant(TableVariant::MeurmanPrimc, a1b1, a1b1) == 1);
    CHECK_THROWS_AS(delta_variant(TableVariant::MeurmanPrimc, a0b0, a1b0),
                    std::invalid_argument);

    // order: a2b0, a2b1, a1b0, a2b2, a1b1, a0b1, a1b2, a0b2
    std::vector<Colour> order;
    for (Colour c : matrix_colour_order(3))
        if (c != a0b0) order.push_back(c);

    auto table_for = [&](TableVariant v) {
        std::vector<std::vector<int>> m(8, std::vector<int>(8));
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) m[r][c] = delta_variant(v, order[r], order[c]);
        return m;
    };

    const std::vector<std::vector<int>> c31 = {
        {2, 2, 2, 2, 2, 2, 2, 2}, {1, 2, 1, 2, 1, 2, 2, 2}, {1, 1, 2, 1, 2, 2, 2, 2},
        {0, 1, 1, 1, 1, 1, 2, 2}, {1, 1, 1, 1, 1, 2, 1, 2}, {0, 1, 0, 1, 1, 2, 1, 2},
        {0, 0, 1, 1, 1, 1, 2, 2}, {0, 0, 0, 0, 1, 1, 1, 2}};
    CHECK(table_for(TableVariant::MeurmanPrimc) == c31);

    const std::vector<std::vector<int>> c32 = {
        {2, 2, 2, 2, 2, 2, 2, 2}, {1, 2, 1, 2, 1, 2, 2, 2}, {1, 1, 2, 1, 2, 2, 2, 2},
        {1, 1, 1, 1, 1, 1, 2, 2}, {0, 1, 1, 1, 1, 2, 1, 2}, {0, 1, 0, 1, 1, 2, 1, 2},
        {0, 0, 1, 1, 1, 1, 2, 2}, {0, 0, 0, 1, 0, 1, 1, 2}};
    CHECK(table_for(TableVariant::Alt) == c32);
}

TEST_CASE("built-in parameter tables") {
    auto mp3 = builtin_delta_gamma(TableVariant::MeurmanPrimc, 3);
    auto alt3 = builtin_delta_gamma(TableVariant::Alt, 3);
    CHECK(*mp3.gamma_of(Colour(0, 2), Colour(1, 0)) == 1);
    CHECK(alt3.delta_of(Colour(2, 0)) == 2);
    CHECK(mp3.delta_of(Colour(2, 0)) == 1);

    for (int n = 2; n <= 5; ++n) {
        CHECK(validate_delta_gamma(builtin_delta_gamma(TableVariant::MeurmanPrimc, n)).ok);
        CHECK(validate_delta_gamma(builtin_delta_gamma(TableVariant::Alt, n)).ok);
    }

    // n = 2 admits a single table, so the two builtins agree.
    CHECK(builtin_delta_gamma(TableVariant::MeurmanPrimc, 2) ==
          builtin_delta_gamma(TableVariant::Alt, 2));
}

TEST_CASE("table validation flags bad entries") {
    auto t = builtin_delta_gamma(TableVariant::MeurmanPrimc, 2);
    t.delta[a1b0] = 0;  // needs min{0,1} < value
    auto v = validate_delta_gamma(t);
    CHECK_FALSE(v.ok);
    REQUIRE(!v.violations.empty());
    CHECK(v.violations[0].find("Condition 1") != std::string::npos);

    auto t2 = builtin_delta_gamma(TableVariant::Alt, 3);
    t2.gamma[{Colour(1, 0), Colour(0, 1)}] = 1;  // pair carries no constraint
    CHECK_FALSE(validate_delta_gamma(t2).ok);
}

TEST_CASE("difference range and free-colour laws") {
    for (Colour c : all_colours(4))
        for (Colour d : all_colours(4)) {
            int v = delta(c, d);
            CHECK(v >= 0);
            CHECK(v <= 2);
        }
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            CHECK(delta(Colour::free_colour(i), Colour::free_colour(k)) == chi(i != k));
}

TEST_CASE("triangle inequality") {
    auto cs = all_colours(4);
    for (Colour c : cs)
        for (Colour d : cs)
            for (Colour e : cs) CHECK(delta(c, d) <= delta(c, e) + delta(e, d));
}

TEST_CASE("case formulas match the defining expression") {
    const int n = 4;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    int d = delta(Colour(i, j), Colour(k, l));
                    if (i == j && k == l) {
                        CHECK(d == chi(i != k));
                    } else if (i < j && k == l) {
                        CHECK(d == 1 - chi(i < k && k <= j));
                    } else if (i > j && k == l) {
                        CHECK(d == 1 + chi(i >= k && k > j));
                    } else if (i == j && k < l) {
                        CHECK(d == 1 + chi(k < i && i <= l));
                    } else if (i == j && k > l) {
                        CHECK(d == 1 - chi(k >= i && i > l));
                    } else {
                        CHECK(d == chi(i >= k) + chi(j <= l));
                        if (i < j && k > l) CHECK(d == 1 - chi(i < k) * chi(j > l));
                    }
                }
}

TEST_CASE("zero-difference classification and antisymmetry") {
    auto zero_case = [](Colour c, Colour d) {
        if (c == d && c.is_free()) return true;
        if (c.is_bound() && d.is_free()) {
            int i = c.a_index(), j = c.b_index(), k = d.a_index();
            return i < k && k <= j;
        }
        if (c.is_free() && d.is_bound()) {
            int k = c.a_index(), i = d.a_index(), j = d.b_index();
            return j < k && k <= i;
        }
        if (c.is_bound() && d.is_bound())
            return c.a_index() < d.a_index() && c.b_index() > d.b_index();
        return false;
    };
    auto cs = all_colours(4);
    for (Colour c : cs)
        for (Colour d : cs) {
            CHECK((delta(c, d) == 0) == zero_case(c, d));
            if (c != d && delta(c, d) == 0) CHECK(delta(d, c) >= 1);
        }
}
