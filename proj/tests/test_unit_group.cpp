#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "cyclohodge/unit_group.hpp"

using namespace cyclohodge;

namespace {

// Reference subgroup computation: repeated set products until stable,
// independent of the breadth-first closure in the library.
std::set<i64> subgroup_oracle(i64 q, i64 a) {
    std::set<i64> s{a % q, q == 2 ? 1 : q - 1};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<i64> next = s;
        for (i64 u : s) {
            for (i64 v : s) {
                next.insert((u * v) % q);
            }
        }
        if (next != s) {
            s = std::move(next);
            grew = true;
        }
    }
    return s;
}

// Reference order: multiply out powers.
i64 order_oracle(i64 q, i64 a) {
    i64 x = a % q;
    i64 k = 1;
    while (x != 1) {
        x = (x * a) % q;
        ++k;
    }
    return k;
}

} // namespace

TEST_CASE("prime power recognition and factoring") {
    UnitGroup g8(8);
    CHECK(g8.p() == 2);
    CHECK(g8.r() == 3);
    CHECK(g8.phi() == 4);
    CHECK(g8.units() == std::vector<i64>{1, 3, 5, 7});

    CHECK_THROWS_AS(UnitGroup(12), NotPrimePower);
    CHECK_THROWS_AS(UnitGroup(1), NotPrimePower);
    CHECK_THROWS_AS(UnitGroup(0), NotPrimePower);

    UnitGroup g25(25);
    CHECK(g25.p() == 5);
    CHECK(g25.r() == 2);
    CHECK(g25.phi() == 20);

    // Trivial group is admitted.
    UnitGroup g2(2);
    CHECK(g2.phi() == 1);
    CHECK(g2.units() == std::vector<i64>{1});
    CHECK(g2.half_range().members == std::vector<i64>{1});

    CHECK(prime_powers_upto(16) == std::vector<i64>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
}

TEST_CASE("multiplication, inverse, order") {
    UnitGroup g8(8);
    CHECK(g8.mul(3, 7) == 5); // 21 mod 8
    CHECK(g8.inv(3) == 3);    // 3^2 = 9 = 1

    UnitGroup g25(25);
    CHECK(g25.mul(7, 7) == 24); // 49 = -1 mod 25
    CHECK(g25.order(7) == 4);

    CHECK_THROWS_AS(g8.mul(2, 3), PreconditionViolated);
    CHECK_THROWS_AS(g8.mul(3, 8), PreconditionViolated);
}

TEST_CASE("group law properties across small moduli") {
    for (i64 q : prime_powers_upto(64)) {
        UnitGroup g(q);
        const auto units = g.units();
        CHECK(static_cast<i64>(units.size()) == g.phi());
        for (i64 a : units) {
            CHECK(g.mul(a, g.inv(a)) == 1);
            i64 ord = g.order(a);
            CHECK(ord == order_oracle(q, a));
            CHECK(g.phi() % ord == 0); // Lagrange
        }
    }
}

TEST_CASE("subgroup closure matches the set-product oracle") {
    UnitGroup g5(5);
    CHECK(g5.subgroup_pm(1) == std::vector<i64>{1, 4});

    UnitGroup g8(8);
    CHECK(g8.subgroup_pm(3) == std::vector<i64>{1, 3, 5, 7});

    UnitGroup g25(25);
    CHECK(g25.subgroup_pm(7) == std::vector<i64>{1, 7, 18, 24});

    for (i64 q : {5, 7, 8, 9, 16, 25, 27, 49}) {
        UnitGroup g(q);
        for (i64 a : g.units()) {
            auto sub = g.subgroup_pm(a);
            std::set<i64> expected = subgroup_oracle(q, a);
            CHECK(std::set<i64>(sub.begin(), sub.end()) == expected);
            // Closed under product and inverse, contains 1 and q-1.
            CHECK(std::binary_search(sub.begin(), sub.end(), i64{1}));
            CHECK(std::binary_search(sub.begin(), sub.end(), q == 2 ? i64{1} : q - 1));
            for (i64 u : sub) {
                CHECK(std::binary_search(sub.begin(), sub.end(), g.mul(u, a)));
                CHECK(std::binary_search(sub.begin(), sub.end(), g.inv(u)));
            }
            CHECK(g.phi() % static_cast<i64>(sub.size()) == 0);
        }
    }
}

TEST_CASE("b_max examples and characterization") {
    CHECK(UnitGroup(8).b_max(3) == 3);
    CHECK(UnitGroup(25).b_max(7) == 7);
    CHECK(UnitGroup(7).b_max(6) == 1);

    for (i64 q : prime_powers_upto(128)) {
        UnitGroup g(q);
        for (i64 a : g.units()) {
            // b_max must equal the maximum of <±a> intersected with [1, q/2].
            auto sub = g.subgroup_pm(a);
            i64 expected = 1;
            for (i64 u : sub) {
                if (2 * u <= q) {
                    expected = std::max(expected, u);
                }
            }
            i64 got = g.b_max(a);
            CHECK(got == expected);
            // b_max = 1 exactly when the subgroup is {1, q-1}.
            bool trivial = sub == std::vector<i64>{1, q - 1} || sub == std::vector<i64>{1};
            CHECK((got == 1) == trivial);
        }
    }
}

TEST_CASE("maximal elements satisfy 2a^2 > q") {
    for (i64 q : prime_powers_upto(512)) {
        UnitGroup g(q);
        for (i64 a : g.units()) {
            if (g.b_max(a) == a && a != 1) {
                CHECK(2 * a * a > q);
            }
        }
    }
}

TEST_CASE("coprime ranges") {
    UnitGroup g25(25);
    CHECK(g25.range_coprime(1, 12).members ==
          std::vector<i64>{1, 2, 3, 4, 6, 7, 8, 9, 11, 12});
    CHECK(UnitGroup(8).range_coprime(1, 4).members == std::vector<i64>{1, 3});
    CHECK(UnitGroup(7).range_coprime(3, 3).members == std::vector<i64>{3});
    CHECK(UnitGroup(7).range_coprime(3, 3).contains(3));
    CHECK(UnitGroup(5).range_coprime(5, 5).members.empty());
    CHECK_THROWS_AS(g25.range_coprime(3, 2), PreconditionViolated);

    // half_range is the [1, q/2] case.
    CHECK(UnitGroup(8).half_range().members == std::vector<i64>{1, 3});
    CHECK(UnitGroup(7).half_range().members == std::vector<i64>{1, 2, 3});
}

TEST_CASE("involutions") {
    CHECK(UnitGroup(16).order_two_elements() == std::vector<i64>{7, 9, 15});
    CHECK(UnitGroup(25).order_two_elements() == std::vector<i64>{24});
    CHECK(UnitGroup(4).order_two_elements() == std::vector<i64>{3});
    CHECK(UnitGroup(2).order_two_elements().empty());

    for (i64 q : prime_powers_upto(256)) {
        UnitGroup g(q);
        auto invs = g.order_two_elements();
        if (g.p() != 2) {
            CHECK(invs == std::vector<i64>{q - 1}); // cyclic group
        } else if (g.r() >= 3) {
            CHECK(invs == std::vector<i64>{q / 2 - 1, q / 2 + 1, q - 1});
        }
    }
}

TEST_CASE("q cap is enforced") {
    CHECK_THROWS_AS(UnitGroup(max_q_cap() + 1), DomainTooLarge);
}
