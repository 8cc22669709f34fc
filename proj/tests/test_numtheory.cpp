#include <doctest.h>

#include <algorithm>
#include <set>

#include "arcmot/numtheory.hpp"

using namespace arcmot;

namespace {

// Brute force: every subset of the divisors of a, read as the merged sequence
// a_0 <= b_1 < a_1 <= b_2 < ... , split into a- and b-entries in every way.
std::set<ChainTuple> brute_force_tuples(long target)
{
    std::vector<long> divs;
    for (long d = 1; d <= target; ++d) {
        if (target % d == 0) divs.push_back(d);
    }
    std::set<ChainTuple> out;
    // interleaved sequence 1 = a_0, b_1, a_1, ..., b_r, a_r = target, each a divisor
    std::vector<long> seq{1};
    auto rec = [&](auto&& self) -> void {
        if (seq.size() % 2 == 1 && seq.back() == target) {
            ChainTuple c;
            for (std::size_t i = 0; i < seq.size(); ++i) (i % 2 == 0 ? c.a : c.b).push_back(seq[i]);
            if (is_valid(c, target)) out.insert(c);
        }
        if (seq.size() > 2 * divs.size() + 1) return;
        for (long d : divs) {
            const bool b_slot = seq.size() % 2 == 1;
            const long prev = seq.back();
            if (b_slot ? d < prev : d <= prev) continue;
            seq.push_back(d);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

long brute_force_chain_count(long k)
{
    if (k == 1) return 1;
    long n = 0;
    for (long d = 1; d < k; ++d) {
        if (k % d == 0) n += brute_force_chain_count(d);
    }
    return n;
}

}  // namespace

TEST_CASE("mobius examples")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("mobius sums to zero over divisors")
{
    for (long n = 1; n <= 10000; ++n) {
        long s = 0;
        for (long d : divisors(n)) s += mobius(d);
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors examples")
{
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<long>{1, 7});
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(7, 5) == 1);
}

TEST_CASE("chain tuple examples")
{
    auto one = enumerate_chain_tuples(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].a == std::vector<long>{1});
    CHECK(one[0].b.empty());

    auto four = enumerate_chain_tuples(4);
    REQUIRE(four.size() == 3);
    CHECK(four[0] == ChainTuple{{1, 4}, {1}});
    CHECK(four[1] == ChainTuple{{1, 4}, {2}});
    CHECK(four[2] == ChainTuple{{1, 2, 4}, {1, 2}});

    auto six = enumerate_chain_tuples(6);
    std::set<ChainTuple> expected{{{1, 6}, {1}}, {{1, 6}, {2}}, {{1, 6}, {3}}, {{1, 2, 6}, {1, 2}}, {{1, 3, 6}, {1, 3}}};
    CHECK(std::set<ChainTuple>(six.begin(), six.end()) == expected);
}

TEST_CASE("chain tuples match brute force")
{
    for (long a = 1; a <= 60; ++a) {
        auto got = enumerate_chain_tuples(a);
        for (const auto& c : got) REQUIRE(is_valid(c, a));
        CHECK(std::is_sorted(got.begin(), got.end(),
                             [](const ChainTuple& x, const ChainTuple& y) { return std::pair(x.length(), x) < std::pair(y.length(), y); }));
        std::set<ChainTuple> unique(got.begin(), got.end());
        REQUIRE(unique.size() == got.size());
        CHECK_MESSAGE(unique == brute_force_tuples(a), "a = " << a);
    }
}

TEST_CASE("prime targets have exactly one tuple")
{
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 59L}) {
        auto t = enumerate_chain_tuples(p);
        REQUIRE(t.size() == 1);
        CHECK(t[0] == ChainTuple{{1, p}, {1}});
    }
}

TEST_CASE("invalid tuples are rejected")
{
    CHECK_FALSE(is_valid(ChainTuple{{1, 4}, {3}}, 4));
    CHECK_FALSE(is_valid(ChainTuple{{1, 4}, {4}}, 4));
    CHECK_FALSE(is_valid(ChainTuple{{2, 4}, {2}}, 4));
    CHECK_FALSE(is_valid(ChainTuple{{1, 2}, {1}}, 4));
    CHECK_FALSE(is_valid(ChainTuple{{1}, {}}, 4));
}

TEST_CASE("divisor chains")
{
    auto one = enumerate_divisor_chains(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].seq == std::vector<long>{1});
    auto four = enumerate_divisor_chains(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0].seq == std::vector<long>{1, 4});
    CHECK(four[1].seq == std::vector<long>{1, 2, 4});
    CHECK(enumerate_divisor_chains(12).size() == 8);
    for (long k = 1; k <= 120; ++k) {
        auto chains = enumerate_divisor_chains(k);
        CHECK(static_cast<long>(chains.size()) == brute_force_chain_count(k));
        for (const auto& c : chains) {
            REQUIRE(c.seq.front() == 1);
            REQUIRE(c.seq.back() == k);
            for (std::size_t j = 1; j < c.seq.size(); ++j) {
                REQUIRE(c.seq[j] > c.seq[j - 1]);
                REQUIRE(c.seq[j] % c.seq[j - 1] == 0);
            }
        }
    }
}
