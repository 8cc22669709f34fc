#include <doctest.h>

#include "arcmot/deformed.hpp"
#include "arcmot/errors.hpp"
#include "arcmot/numtheory.hpp"
#include "test_support.hpp"

using namespace arcmot;
using namespace arcmot::testing;

namespace {

FactoredRational tl_(int te, int le) { return T(te) * L(le); }
FactoredRational one() { return FactoredRational(1); }

}  // namespace

TEST_CASE("deformed recurrence examples")
{
    DeformedIntegrals di;
    CHECK(rat_eq_exact(di.recurrence(1, 1), (L() - 1).pow(2) * L(-2)));
    auto g22 = (lam(2) - 1) * (L() - 1).pow(2) * tl_(2, -5) / (one() - lam(2) * tl_(2, -2));
    CHECK(rat_eq_exact(di.recurrence(2, 2), g22));
    CHECK(rat_eq_exact(di.closed_form(2, 2), g22));
    CHECK_THROWS_AS(di.recurrence(0, 2), InvalidOrder);
}

TEST_CASE("deformed closed form agrees with the recurrence")
{
    DeformedIntegrals di;
    for (long k = 1; k <= 10; ++k) {
        for (long m = 1; m <= 10; ++m) {
            REQUIRE_MESSAGE(rat_eq_exact(di.closed_form(k, m), di.recurrence(k, m)), "k=" << k << " m=" << m);
            if (gcd(k, m) == 1) {
                CHECK(lambda_indices(di.closed_form(k, m)).empty());
                CHECK(rat_eq_exact(di.closed_form(k, m), (L() - 1).pow(2) * tl_((k - 1) * (m - 1), -k - m)));
            }
        }
    }
    CHECK(lambda_indices(di.closed_form(4, 4)) == std::set<long>{2, 4});
}

TEST_CASE("lambda support is the divisors of the gcd")
{
    DeformedIntegrals di;
    for (long k = 1; k <= 12; ++k) {
        for (long m = 1; m <= 12; ++m) {
            const long a = gcd(k, m);
            std::set<long> allowed;
            for (long d : divisors(a)) {
                if (d >= 2) allowed.insert(d);
            }
            CHECK(lambda_indices(di.closed_form(k, m)) == allowed);
        }
    }
}

TEST_CASE("degeneration to the undeformed values")
{
    DeformedIntegrals di;
    ClassicalIntegrals ci;
    const auto all_l = LambdaContext::all_l();
    for (long k = 1; k <= 10; ++k) {
        for (long m = 1; m <= 10; ++m) {
            CHECK(rat_eq_exact(di.recurrence(k, m, all_l), ci.recurrence(k, m)));
            CHECK(rat_eq_exact(di.closed_form(k, m, all_l), ci.closed_form(k, m)));
        }
    }
}

TEST_CASE("H chain sum examples")
{
    DeformedIntegrals di;
    CHECK(rat_eq_exact(di.h_chain_sum(2, 3), 1));
    CHECK(rat_eq_exact(di.h_chain_sum(7, 12), 1));
    auto h22 = (lam(2) - 1) * L(-1) / (one() - lam(2) * L(-2));
    CHECK(rat_eq_exact(di.h_chain_sum(2, 2), h22));
    auto literal = (lam(2) - 1) * L(-1) * (one() - L(-1)) / ((one() - lam(2) * L(-2)) * (one() - L(-1)));
    CHECK(rat_eq_exact(di.h_chain_sum(2, 2), literal));
    CHECK(rat_eq_exact(di.h_chain_sum(2, 2, LambdaContext::all_l()), 1));
    CHECK(rat_eq_exact(di.h_chain_sum(4, 6), di.h_chain_sum(2, 2)));
}

TEST_CASE("H from the definition agrees with the chain sum")
{
    DeformedIntegrals di;
    const auto sym = LambdaContext::symbolic();
    CHECK(rat_eq_exact(di.h_from_definition(2, 2, sym), di.h_chain_sum(2, 2)));
    CHECK(rat_eq_exact(di.h_from_definition(6, 6, sym), di.h_chain_sum(6, 6)));
    for (long k = 1; k <= 12; ++k) {
        for (long m = 1; m <= 12; ++m) {
            REQUIRE(rat_eq_exact(di.h_from_definition(k, m, sym), di.h_chain_sum(k, m)));
            CHECK(rat_eq_exact(di.h_from_definition(k, m, LambdaContext::all_l()), 1));
            CHECK(rat_eq_exact(di.h_chain_sum(k, m, LambdaContext::all_l()), 1));
        }
    }
}

TEST_CASE("deformed symmetry")
{
    DeformedIntegrals di;
    CHECK(di.symmetry_check(1, 1));
    CHECK(di.symmetry_check(2, 2));
    CHECK(di.symmetry_check(4, 6));
    for (long k = 1; k <= 10; ++k) {
        for (long m = 1; m <= 10; ++m) CHECK(di.symmetry_check(k, m));
    }
    // inverting t and L alone is not a symmetry once lam_2 is present
    const auto& g = di.recurrence(2, 2);
    CHECK_FALSE(rat_eq_exact(invert_t_l(g), inversion_factor(2, 2) * g));
}

TEST_CASE("t = 1 formula")
{
    DeformedIntegrals di;
    const auto sym = LambdaContext::symbolic();
    CHECK(rat_eq_exact(di.t1(1, 1, sym), (L() - 1).pow(2) * L(-2)));
    auto t22 = (L() - 1).pow(2) * L(-4) * (lam(2) - 1) * L(-1) * (one() - L(-1)) / ((one() - lam(2) * L(-2)) * (one() - L(-1)));
    CHECK(rat_eq_exact(di.t1(2, 2, sym), t22));
    for (long k = 1; k <= 10; ++k) {
        for (long m = 1; m <= 10; ++m) {
            CHECK(rat_eq_exact(di.t1(k, m, sym), at_t_one(di.closed_form(k, m))));
            CHECK(rat_eq_exact(di.t1(k, m, LambdaContext::all_l()), (L() - 1).pow(2) * L(-k - m)));
        }
    }
}

TEST_CASE("lambda contexts")
{
    DeformedIntegrals di;
    CHECK(LambdaContext::symbolic().mode() == LambdaContext::Mode::Symbolic);
    CHECK(LambdaContext::a_tau().mode() == LambdaContext::Mode::Specialized);

    auto a_tau = LambdaContext::a_tau().apply(di.h_chain_sum(2, 2));
    auto big_a = FactoredRational::var(VarId::big_a());
    auto tau2 = FactoredRational::var(VarId::tau(), 2);
    CHECK(rat_eq_exact(a_tau, (big_a * tau2 - 1) * L(-1) / (one() - big_a * tau2 * L(-2))));

    auto ctx = LambdaContext::from_json(nlohmann::json::parse(R"({"lam": {"2": "L", "4": "A*tau^4"}})"));
    auto h44 = ctx.apply(di.h_chain_sum(4, 4));
    CHECK(lambda_indices(h44).empty());
    CHECK(rat_eq_exact(h44, LambdaContext::a_tau().apply(substitute(di.h_chain_sum(4, 4),
                                                                  {{VarId::lam(2), SignedMonomial{1, Monomial(VarId::L(), 1)}}}))));
    // only the indices that occur need an entry
    auto partial = LambdaContext::assign({{2, SignedMonomial{1, Monomial(VarId::L(), 1)}}});
    CHECK(rat_eq_exact(partial.apply(di.h_chain_sum(2, 2)), 1));
    CHECK(lambda_indices(partial.apply(di.h_chain_sum(4, 4))) == std::set<long>{4});

    CHECK_THROWS_AS(LambdaContext::from_json(nlohmann::json::parse(R"({"lam": {"1": "L"}})")), ParseError);
    CHECK_THROWS_AS(LambdaContext::from_json(nlohmann::json::parse(R"({"lam": {"x": "L"}})")), ParseError);
    CHECK_THROWS_AS(LambdaContext::from_json(nlohmann::json::parse(R"({"lam": {"2": 3}})")), ParseError);
    CHECK_THROWS_AS(LambdaContext::from_json(nlohmann::json::parse(R"({"lam": {"2": "L+1"}})")), ParseError);
    CHECK_THROWS_AS(LambdaContext::from_json(nlohmann::json::parse(R"([1, 2])")), ParseError);
}

TEST_CASE("lambda rescaling")
{
    auto x = (lam(2) - 1) * L(-1) / (one() - lam(3) * L(-2));
    auto y = (lam(4) - 1) * L(-2) / (one() - lam(6) * L(-4));
    CHECK(rat_eq_exact(rescale_lambda(x, 2), y));
    CHECK(rat_eq_exact(rescale_lambda(x, 1), x));
}
