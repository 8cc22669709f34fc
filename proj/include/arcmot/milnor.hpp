#pragma once

#include <map>
#include <utility>

#include "arcmot/factored_rational.hpp"

namespace arcmot {

/// t^te * L^le
FactoredRational tl(long te, long le);
/// L - 1
FactoredRational l_minus_one();
/// (L - 1)^2 L^-2, the integral over arcs with Ord x = Ord y = 1.
FactoredRational g_base();

// S_{a,k}: sum over 1 <= m < k with gcd(m, k) = a of t^{(k-1)(m-1)-(a-1)^2} L^{2a-k-m}.
FactoredRational s_direct(long a, long k);
// Shat_{a,k}: sum over 1 <= m < k with a | m of t^{(k-1)(m-1)} L^{-k-m}, literally.
FactoredRational s_hat_sum(long a, long k);
// The same geometric series in closed form.
FactoredRational s_hat_closed(long a, long k);
// S_{a,k} recovered from the closed-form Shat by Mobius inversion over a | b | k.
FactoredRational s_mobius(long a, long k);

struct GcdReduction {
    FactoredRational prefactor;  // t^{(k-1)(m-1)-(a-1)^2} L^{2a-k-m}
    long a = 1;                  // gcd(k, m)
};
/// G_{k,m} = prefactor * G_{a,a}.
GcdReduction g_reduce_to_gcd(long k, long m);

/// t^{-2(k-1)(m-1)} L^{2k+2m-2}, the factor picked up under (t, L) -> (1/t, 1/L).
FactoredRational inversion_factor(long k, long m);
/// substitute(x, {t -> 1/t, L -> 1/L})
FactoredRational invert_t_l(const FactoredRational& x);

enum class Route { Recurrence, DivisorSum, DivisorChains, ClosedForm };
enum class SRoute { Direct, Mobius };

const char* route_name(Route r);

/// Memo of G_{k,m} values for one evaluation route, keyed with k <= m.
class GTable {
public:
    explicit GTable(Route route) : route_(route) {}
    Route route() const { return route_; }
    const FactoredRational* find(long k, long m) const;
    const FactoredRational& store(long k, long m, FactoredRational value);
    std::size_t size() const { return cache_.size(); }

private:
    Route route_;
    std::map<std::pair<long, long>, FactoredRational> cache_;
};

/// The undeformed integrals G_{k,m}(t, L) by every route. Not thread-safe:
/// confine an instance to one task.
class ClassicalIntegrals {
public:
    /// Swap to k <= m, peel t^{k(k-1)} L^{-k} while m > k, and close the
    /// diagonal with the finite sum over m' < k; memoized.
    const FactoredRational& recurrence(long k, long m);
    /// Diagonal via the S_{a,k} sum over proper divisors.
    const FactoredRational& diag_divisor_sum(long k, SRoute s = SRoute::Direct);
    /// Diagonal via the explicit sum over divisor chains.
    const FactoredRational& diag_chains(long k);
    /// Closed chain-tuple formula.
    const FactoredRational& closed_form(long k, long m);
    /// The chain-tuple sum of the closed formula, without its prefactor.
    const FactoredRational& chain_sum(long a);

    /// sum_{m >= 1} G_{k,m} in closed form.
    FactoredRational rowsum(long k);

    /// G(1/t, 1/L) == inversion_factor * G, checked exactly.
    bool symmetry_check(long k, long m);

    const GTable& table(Route r) const;

private:
    GTable recurrence_{Route::Recurrence};
    GTable divisor_sum_{Route::DivisorSum};
    GTable divisor_sum_mobius_{Route::DivisorSum};
    GTable chains_{Route::DivisorChains};
    GTable closed_form_{Route::ClosedForm};
    std::map<long, FactoredRational> chain_sums_;
    std::map<std::pair<long, long>, FactoredRational> s_cache_;
};

void require_order(long k, long m);

}  // namespace arcmot
