#pragma once

#include <compare>
#include <vector>

namespace arcmot {

int mobius(long n);
std::vector<long> divisors(long n);
long gcd(long a, long b);

/// Index of one summand of the closed chain-sum formulas:
/// 1 = a_0 <= b_1 < a_1 <= b_2 < ... <= b_r < a_r = target with
/// a_{j-1} | b_j and b_j | a_j. For target 1 only the r = 0 tuple exists.
struct ChainTuple {
    std::vector<long> a;  // a_0, ..., a_r
    std::vector<long> b;  // b_1, ..., b_r

    std::size_t length() const { return b.size(); }
    friend auto operator<=>(const ChainTuple&, const ChainTuple&) = default;
};

/// Strictly increasing divisibility chain 1 = a_0 < a_1 < ... < a_r = k.
struct DivisorChain {
    std::vector<long> seq;
    std::size_t length() const { return seq.size() - 1; }
    friend auto operator<=>(const DivisorChain&, const DivisorChain&) = default;
};

/// All chain tuples ending at `target`, ordered by (r, a, b).
std::vector<ChainTuple> enumerate_chain_tuples(long target);
std::vector<DivisorChain> enumerate_divisor_chains(long k);

bool is_valid(const ChainTuple& c, long target);

}  // namespace arcmot
