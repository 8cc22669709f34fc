#include <doctest.h>

#include "arcmot/errors.hpp"
#include "arcmot/milnor.hpp"
#include "arcmot/numtheory.hpp"
#include "test_support.hpp"

using namespace arcmot;
using namespace arcmot::testing;

namespace {

FactoredRational tl_(int te, int le) { return T(te) * L(le); }
FactoredRational inv1m(int te, int le) { return FactoredRational::inverse_one_minus(tL(te, le)); }
FactoredRational om(int te, int le) { return FactoredRational::one_minus(tL(te, le)); }

}  // namespace

TEST_CASE("recurrence examples")
{
    ClassicalIntegrals ci;
    CHECK(rat_eq_exact(ci.recurrence(1, 1), (L() - 1).pow(2) * L(-2)));
    CHECK(rat_eq_exact(ci.recurrence(1, 2), (L() - 1).pow(2) * L(-3)));
    CHECK(rat_eq_exact(ci.recurrence(2, 2), (L() - 1).pow(3) * tl_(2, -5) * inv1m(2, -1)));
    CHECK(rat_eq_exact(ci.recurrence(3, 3), (L() - 1).pow(3) * tl_(6, -7) * (tl_(2, -1) + 1) * inv1m(6, -2)));
    CHECK(ci.recurrence(2, 5) == ci.recurrence(5, 2));
    CHECK_THROWS_AS(ci.recurrence(0, 1), InvalidOrder);
    CHECK_THROWS_AS(ci.recurrence(3, -1), InvalidOrder);
}

TEST_CASE("first row is geometric")
{
    ClassicalIntegrals ci;
    for (int k = 1; k <= 15; ++k) CHECK(rat_eq_exact(ci.recurrence(1, k), L(1 - k) * ci.recurrence(1, 1)));
}

TEST_CASE("S polynomial examples")
{
    CHECK(rat_eq_exact(s_direct(1, 2), L(-1)));
    CHECK(rat_eq_exact(s_direct(1, 3), L(-2) + tl_(2, -3)));
    CHECK(rat_eq_exact(s_direct(2, 4), tl_(2, -2)));
    CHECK(s_direct(3, 3).is_zero());
    CHECK(rat_eq_exact(s_hat_sum(1, 2), L(-3)));
    CHECK(rat_eq_exact(s_hat_closed(1, 2), (L(-3) - tl_(1, -4)) * inv1m(1, -1)));
    CHECK(rat_eq_exact(s_hat_closed(1, 2), L(-3)));
    CHECK(rat_eq_exact(s_hat_sum(2, 4), tl_(3, -6)));
    CHECK(rat_eq_exact(s_hat_closed(2, 4), tl_(3, -6)));
    CHECK(rat_eq_exact(s_hat_sum(1, 3), L(-4) + tl_(2, -5)));
    CHECK(rat_eq_exact(s_mobius(1, 2), L(-1)));
    CHECK(rat_eq_exact(s_mobius(2, 4), tl_(2, -2)));
    CHECK(rat_eq_exact(s_mobius(1, 6), s_direct(1, 6)));
    CHECK_THROWS_AS(s_direct(3, 2), NotADivisor);
    CHECK_THROWS_AS(s_mobius(4, 6), NotADivisor);
    CHECK_THROWS_AS(s_hat_closed(5, 12), NotADivisor);
}

TEST_CASE("Mobius-inverted S agrees with the literal sum")
{
    for (long k = 2; k <= 60; ++k) {
        for (long a : divisors(k)) {
            if (a == k) continue;
            REQUIRE_MESSAGE(rat_eq_exact(s_direct(a, k), s_mobius(a, k)), "a=" << a << " k=" << k);
            REQUIRE(rat_eq_exact(s_hat_sum(a, k), s_hat_closed(a, k)));
        }
    }
}

TEST_CASE("gcd reduction")
{
    auto r = g_reduce_to_gcd(2, 3);
    CHECK(r.a == 1);
    CHECK(rat_eq_exact(r.prefactor, tl_(2, -3)));
    r = g_reduce_to_gcd(5, 5);
    CHECK(r.a == 5);
    CHECK(rat_eq_exact(r.prefactor, 1));
    r = g_reduce_to_gcd(2, 4);
    CHECK(r.a == 2);
    CHECK(rat_eq_exact(r.prefactor, tl_(2, -2)));
    ClassicalIntegrals ci;
    for (long k = 1; k <= 10; ++k) {
        for (long m = 1; m <= 10; ++m) {
            auto g = g_reduce_to_gcd(k, m);
            CHECK(rat_eq_exact(ci.recurrence(k, m), g.prefactor * ci.recurrence(g.a, g.a)));
        }
    }
}

TEST_CASE("diagonal routes")
{
    ClassicalIntegrals ci;
    auto k2 = (L() - 1) * tl_(2, -2) * inv1m(2, -1) * L(-1) * ci.recurrence(1, 1);
    CHECK(rat_eq_exact(ci.diag_divisor_sum(2), k2));
    CHECK(rat_eq_exact(ci.diag_chains(1), (L() - 1).pow(2) * L(-2)));
    for (long k = 1; k <= 12; ++k) {
        CHECK(rat_eq_exact(ci.diag_divisor_sum(k), ci.recurrence(k, k)));
        CHECK(rat_eq_exact(ci.diag_divisor_sum(k, SRoute::Mobius), ci.recurrence(k, k)));
        CHECK(rat_eq_exact(ci.diag_chains(k), ci.recurrence(k, k)));
    }
}

TEST_CASE("closed form examples")
{
    ClassicalIntegrals ci;
    CHECK(rat_eq_exact(ci.closed_form(2, 3), (L() - 1).pow(2) * tl_(2, -5)));
    CHECK(rat_eq_exact(ci.closed_form(1, 1), (L() - 1).pow(2) * L(-2)));
    auto g22 = (L() - 1).pow(3) * tl_(2, -5) * om(1, -1) * inv1m(2, -1) * inv1m(1, -1);
    CHECK(rat_eq_exact(ci.closed_form(2, 2), g22));
    CHECK(rat_eq_exact(ci.closed_form(2, 2), ci.recurrence(2, 2)));
}

TEST_CASE("closed form agrees with the recurrence")
{
    ClassicalIntegrals ci;
    for (long k = 1; k <= 12; ++k) {
        for (long m = 1; m <= 12; ++m) {
            REQUIRE_MESSAGE(rat_eq_exact(ci.closed_form(k, m), ci.recurrence(k, m)), "k=" << k << " m=" << m);
            if (gcd(k, m) == 1) CHECK(rat_eq_exact(ci.closed_form(k, m), (L() - 1).pow(2) * tl_((k - 1) * (m - 1), -k - m)));
        }
    }
}

TEST_CASE("inversion symmetry")
{
    ClassicalIntegrals ci;
    // (1,1): left (L-1)^2, right L^2 (L-1)^2 L^-2
    CHECK(rat_eq_exact(invert_t_l(ci.recurrence(1, 1)), (L() - 1).pow(2)));
    CHECK(rat_eq_exact(inversion_factor(1, 1), L(2)));
    CHECK(rat_eq_exact(invert_t_l(ci.recurrence(2, 3)), T(-2) * L(5) * (L(-1) - 1).pow(2) * L(-2) * L(2)));
    for (long k = 1; k <= 12; ++k) {
        for (long m = 1; m <= 12; ++m) CHECK(ci.symmetry_check(k, m));
    }
    // the abstract's factor L^{2(k+m)} fails already at (1,1)
    CHECK_FALSE(rat_eq_exact(invert_t_l(ci.recurrence(1, 1)), L(4) * ci.recurrence(1, 1)));
}

TEST_CASE("row sums")
{
    ClassicalIntegrals ci;
    CHECK(rat_eq_exact(ci.rowsum(1), (L() - 1) * L(-1)));
    CHECK(rat_eq_exact(ci.rowsum(2), ci.recurrence(2, 1) + ci.recurrence(2, 2) * L() / (L() - 1)));
    for (long k = 1; k <= 10; ++k) {
        FactoredRational head;
        for (long m = 1; m <= k; ++m) head += ci.recurrence(k, m);
        CHECK(rat_eq_exact((L() - 1) * (ci.rowsum(k) - head), ci.recurrence(k, k)));
        // the tail sum_{m > k} is c/(1 - c) times the head, c = t^{k(k-1)} L^-k
        auto c = tl_(k * (k - 1), -k);
        CHECK(rat_eq_exact(ci.rowsum(k), head / (FactoredRational(1) - c)));
    }
}

TEST_CASE("t = 1 normalization")
{
    ClassicalIntegrals ci;
    auto t1 = Substitution{{VarId::t(), SignedMonomial{1, Monomial{}}}};
    for (long k = 1; k <= 12; ++k) {
        for (long m = 1; m <= 12; ++m) {
            CHECK(rat_eq_exact(substitute(ci.recurrence(k, m), t1), (L() - 1).pow(2) * L(-k - m)));
        }
        CHECK(rat_eq_exact(substitute(ci.chain_sum(k), t1), 1));
    }
}

TEST_CASE("tables keep one entry per unordered pair")
{
    ClassicalIntegrals ci;
    for (long k = 1; k <= 4; ++k) {
        for (long m = 1; m <= 4; ++m) ci.recurrence(k, m);
    }
    const auto& t = ci.table(Route::Recurrence);
    REQUIRE(t.find(2, 3) != nullptr);
    CHECK(t.find(3, 2) == t.find(2, 3));
    CHECK(t.route() == Route::Recurrence);
}
