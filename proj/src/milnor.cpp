#include "arcmot/milnor.hpp"

#include <string>

#include "arcmot/errors.hpp"
#include "arcmot/numtheory.hpp"

namespace arcmot {

namespace {

std::int32_t narrow(long v)
{
    if (v < INT32_MIN || v > INT32_MAX) throw std::overflow_error("exponent out of range");
    return static_cast<std::int32_t>(v);
}

Monomial tl_mono(long te, long le) { return Monomial{{VarId::t(), narrow(te)}, {VarId::L(), narrow(le)}}; }

void require_divisor(long a, long k)
{
    if (a < 1 || k < 1 || k % a != 0) {
        throw NotADivisor("a must divide k (a=" + std::to_string(a) + ", k=" + std::to_string(k) + ")");
    }
}

// (L-1) t^{k(k-1)} L^{-k} / (1 - t^{k(k-1)} L^{1-k})
FactoredRational diagonal_prefactor(long k)
{
    return l_minus_one() * tl(k * (k - 1), -k) * FactoredRational::inverse_one_minus(tl_mono(k * (k - 1), 1 - k));
}

}  // namespace

void require_order(long k, long m)
{
    if (k < 1 || m < 1) {
        throw InvalidOrder("orders must be >= 1 (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
    }
}

FactoredRational tl(long te, long le) { return FactoredRational::monomial(tl_mono(te, le)); }

FactoredRational l_minus_one() { return FactoredRational(LaurentPoly(Monomial(VarId::L(), 1)) - LaurentPoly(1)); }

FactoredRational g_base() { return l_minus_one().pow(2) * tl(0, -2); }

FactoredRational s_direct(long a, long k)
{
    require_divisor(a, k);
    FactoredRational s;
    for (long m = 1; m < k; ++m) {
        if (gcd(m, k) == a) s += tl((k - 1) * (m - 1) - (a - 1) * (a - 1), 2 * a - k - m);
    }
    return s;
}

FactoredRational s_hat_sum(long a, long k)
{
    require_divisor(a, k);
    FactoredRational s;
    for (long m = a; m < k; m += a) s += tl((k - 1) * (m - 1), -k - m);
    return s;
}

FactoredRational s_hat_closed(long a, long k)
{
    require_divisor(a, k);
    if (a == k) return {};
    FactoredRational numerator = tl((k - 1) * (a - 1), -k - a) - tl((k - 1) * (k - 1), -2 * k);
    return numerator * FactoredRational::inverse_one_minus(tl_mono((k - 1) * a, -a));
}

FactoredRational s_mobius(long a, long k)
{
    require_divisor(a, k);
    FactoredRational sum;
    for (long b : divisors(k)) {
        if (b % a != 0 || b == k) continue;
        int mu = mobius(b / a);
        if (mu == 0) continue;
        sum += FactoredRational(mu) * s_hat_closed(b, k);
    }
    return tl(-(a - 1) * (a - 1), 2 * a) * sum;
}

GcdReduction g_reduce_to_gcd(long k, long m)
{
    require_order(k, m);
    long a = gcd(k, m);
    return {tl((k - 1) * (m - 1) - (a - 1) * (a - 1), 2 * a - k - m), a};
}

FactoredRational inversion_factor(long k, long m) { return tl(-2 * (k - 1) * (m - 1), 2 * k + 2 * m - 2); }

FactoredRational invert_t_l(const FactoredRational& x)
{
    return substitute(x, Substitution{{VarId::t(), SignedMonomial{1, Monomial(VarId::t(), -1)}},
                                      {VarId::L(), SignedMonomial{1, Monomial(VarId::L(), -1)}}});
}

const char* route_name(Route r)
{
    switch (r) {
    case Route::Recurrence: return "recurrence";
    case Route::DivisorSum: return "divisor-sum";
    case Route::DivisorChains: return "divisor-chains";
    case Route::ClosedForm: return "closed-form";
    }
    return "?";
}

// ---------------------------------------------------------------------------

const FactoredRational* GTable::find(long k, long m) const
{
    if (k > m) std::swap(k, m);
    auto it = cache_.find({k, m});
    return it == cache_.end() ? nullptr : &it->second;
}

const FactoredRational& GTable::store(long k, long m, FactoredRational value)
{
    if (k > m) std::swap(k, m);
    return cache_.insert_or_assign({k, m}, std::move(value)).first->second;
}

// ---------------------------------------------------------------------------

const FactoredRational& ClassicalIntegrals::recurrence(long k, long m)
{
    require_order(k, m);
    if (k > m) std::swap(k, m);
    if (const auto* hit = recurrence_.find(k, m)) return *hit;
    if (k == 1 && m == 1) return recurrence_.store(1, 1, g_base());
    if (m > k) {
        FactoredRational v = tl(k * (k - 1), -k) * recurrence(k, m - k);
        return recurrence_.store(k, m, std::move(v));
    }
    FactoredRational lower;
    for (long j = 1; j < k; ++j) lower += recurrence(k, j);
    return recurrence_.store(k, k, diagonal_prefactor(k) * lower);
}

const FactoredRational& ClassicalIntegrals::diag_divisor_sum(long k, SRoute s)
{
    require_order(k, k);
    GTable& table = s == SRoute::Direct ? divisor_sum_ : divisor_sum_mobius_;
    if (const auto* hit = table.find(k, k)) return *hit;
    if (k == 1) return table.store(1, 1, g_base());
    FactoredRational sum;
    for (long a : divisors(k)) {
        if (a == k) continue;
        FactoredRational sak = s == SRoute::Direct ? s_direct(a, k) : s_mobius(a, k);
        sum += sak * diag_divisor_sum(a, s);
    }
    return table.store(k, k, diagonal_prefactor(k) * sum);
}

const FactoredRational& ClassicalIntegrals::diag_chains(long k)
{
    require_order(k, k);
    if (const auto* hit = chains_.find(k, k)) return *hit;
    auto s_of = [this](long a, long b) -> const FactoredRational& {
        auto it = s_cache_.find({a, b});
        if (it == s_cache_.end()) it = s_cache_.emplace(std::pair{a, b}, s_direct(a, b)).first;
        return it->second;
    };
    FactoredRational total;
    for (const auto& chain : enumerate_divisor_chains(k)) {
        const long r = static_cast<long>(chain.length());
        long t_exp = 0;
        long l_exp = -2;
        FactoredRational term = l_minus_one().pow(static_cast<int>(2 + r));
        for (long j = 1; j <= r; ++j) {
            long aj = chain.seq[j];
            t_exp += aj * (aj - 1);
            l_exp -= aj;
            term *= FactoredRational::inverse_one_minus(tl_mono(aj * (aj - 1), 1 - aj));
            term *= s_of(chain.seq[j - 1], aj);
        }
        total += term * tl(t_exp, l_exp);
    }
    return chains_.store(k, k, std::move(total));
}

const FactoredRational& ClassicalIntegrals::chain_sum(long a)
{
    if (auto it = chain_sums_.find(a); it != chain_sums_.end()) return it->second;
    std::map<std::tuple<long, long, long>, FactoredRational> steps;
    auto step = [&](long prev, long b, long aj) -> const FactoredRational& {
        auto key = std::tuple{prev, b, aj};
        auto it = steps.find(key);
        if (it != steps.end()) return it->second;
        FactoredRational v = FactoredRational(mobius(b / prev)) * l_minus_one() * tl((aj - 1) * b, -b)
                             * FactoredRational::one_minus(tl_mono((aj - 1) * (aj - b), b - aj))
                             * FactoredRational::inverse_one_minus(tl_mono(aj * (aj - 1), 1 - aj))
                             * FactoredRational::inverse_one_minus(tl_mono((aj - 1) * b, -b));
        return steps.emplace(key, std::move(v)).first->second;
    };
    FactoredRational sum;
    for (const auto& tuple : enumerate_chain_tuples(a)) {
        FactoredRational prod(1);
        for (std::size_t j = 1; j < tuple.a.size() && !prod.is_zero(); ++j) {
            prod *= step(tuple.a[j - 1], tuple.b[j - 1], tuple.a[j]);
        }
        sum += prod;
    }
    return chain_sums_.emplace(a, std::move(sum)).first->second;
}

const FactoredRational& ClassicalIntegrals::closed_form(long k, long m)
{
    require_order(k, m);
    if (const auto* hit = closed_form_.find(k, m)) return *hit;
    FactoredRational v = l_minus_one().pow(2) * tl((k - 1) * (m - 1), -k - m) * chain_sum(gcd(k, m));
    return closed_form_.store(k, m, std::move(v));
}

FactoredRational ClassicalIntegrals::rowsum(long k)
{
    require_order(k, k);
    FactoredRational below;
    for (long m = 1; m < k; ++m) below += recurrence(k, m);
    const FactoredRational& diag = recurrence(k, k);
    // sum_{m > k} G_{k,m} = G_{k,k} / (L - 1)
    return below + diag + diag / l_minus_one();
}

bool ClassicalIntegrals::symmetry_check(long k, long m)
{
    const auto& g = recurrence(k, m);
    return rat_eq_exact(invert_t_l(g), inversion_factor(k, m) * g);
}

const GTable& ClassicalIntegrals::table(Route r) const
{
    switch (r) {
    case Route::Recurrence: return recurrence_;
    case Route::DivisorSum: return divisor_sum_;
    case Route::DivisorChains: return chains_;
    case Route::ClosedForm: return closed_form_;
    }
    return recurrence_;
}

}  // namespace arcmot
