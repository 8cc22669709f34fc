#include "arcmot/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arcmot {

namespace {

void require_positive(long n, const char* what)
{
    if (n < 1) throw std::invalid_argument(std::string(what) + " requires n >= 1, got " + std::to_string(n));
}

void extend_tuples(long target, ChainTuple& cur, std::vector<ChainTuple>& out)
{
    long last = cur.a.back();
    if (last == target) {
        out.push_back(cur);
        return;
    }
    for (long next : divisors(target)) {
        if (next <= last || next % last != 0) continue;
        for (long b : divisors(next)) {
            if (b < last || b >= next || b % last != 0) continue;
            cur.a.push_back(next);
            cur.b.push_back(b);
            extend_tuples(target, cur, out);
            cur.a.pop_back();
            cur.b.pop_back();
        }
    }
}

void extend_chains(long k, DivisorChain& cur, std::vector<DivisorChain>& out)
{
    long last = cur.seq.back();
    if (last == k) {
        out.push_back(cur);
        return;
    }
    for (long next : divisors(k)) {
        if (next <= last || next % last != 0) continue;
        cur.seq.push_back(next);
        extend_chains(k, cur, out);
        cur.seq.pop_back();
    }
}

}  // namespace

int mobius(long n)
{
    require_positive(n, "mobius");
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<long> divisors(long n)
{
    require_positive(n, "divisors");
    std::vector<long> small;
    std::vector<long> large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long gcd(long a, long b)
{
    while (b != 0) {
        long r = a % b;
        a = b;
        b = r;
    }
    return a < 0 ? -a : a;
}

std::vector<ChainTuple> enumerate_chain_tuples(long target)
{
    require_positive(target, "enumerate_chain_tuples");
    std::vector<ChainTuple> out;
    ChainTuple cur{{1}, {}};
    extend_tuples(target, cur, out);
    std::sort(out.begin(), out.end(), [](const ChainTuple& x, const ChainTuple& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x < y;
    });
    return out;
}

std::vector<DivisorChain> enumerate_divisor_chains(long k)
{
    require_positive(k, "enumerate_divisor_chains");
    std::vector<DivisorChain> out;
    DivisorChain cur{{1}};
    extend_chains(k, cur, out);
    std::sort(out.begin(), out.end(), [](const DivisorChain& x, const DivisorChain& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x < y;
    });
    return out;
}

bool is_valid(const ChainTuple& c, long target)
{
    if (c.a.size() != c.b.size() + 1 || c.a.front() != 1 || c.a.back() != target) return false;
    for (std::size_t j = 1; j < c.a.size(); ++j) {
        long prev = c.a[j - 1];
        long b = c.b[j - 1];
        long next = c.a[j];
        if (!(prev <= b && b < next && b % prev == 0 && next % b == 0)) return false;
    }
    return true;
}

}  // namespace arcmot
