#pragma once

#include <map>
#include <set>

#include <json.hpp>

#include "arcmot/factored_rational.hpp"
#include "arcmot/milnor.hpp"

namespace arcmot {

/// How the parameters lam_i (i >= 2) enter a deformed value. lam_1 is never
/// free; it is always L.
///
/// Values are computed with symbolic lam_i and the context is applied
/// afterwards as a substitution, so a specialized context only needs entries
/// for the lam_d with d | gcd(k, m).
class LambdaContext {
public:
    enum class Mode { Symbolic, Specialized };

    static LambdaContext symbolic() { return LambdaContext(); }
    /// Every lam_i -> L; deformed values degenerate to the classical ones.
    static LambdaContext all_l();
    /// lam_i -> A * tau^i.
    static LambdaContext a_tau();
    /// Explicit finite assignment; unassigned lam_i stay symbolic.
    static LambdaContext assign(std::map<long, SubstImage> assignment);
    /// {"lam": {"2": "L", "4": "A*tau^4"}} with signed-monomial images.
    static LambdaContext from_json(const nlohmann::json& j);

    Mode mode() const { return rule_ == Rule::None && assignment_.empty() ? Mode::Symbolic : Mode::Specialized; }
    std::optional<SubstImage> image(long i) const;
    FactoredRational apply(const FactoredRational& x) const;
    std::string describe() const;

private:
    enum class Rule { None, AllL, ATau };
    Rule rule_ = Rule::None;
    std::map<long, SubstImage> assignment_;
};

/// Indices i of the lam_i occurring in x.
std::set<long> lambda_indices(const FactoredRational& x);

/// L -> L^alpha, lam_i -> lam_{i*alpha}: the rescaling relating H_{k,m} to
/// the tail of its chain sum past alpha.
FactoredRational rescale_lambda(const FactoredRational& x, long alpha);

/// The lambda-deformed integrals and the normalized t = 1 ratios H_{k,m}.
/// Caches hold symbolic values; not thread-safe.
class DeformedIntegrals {
public:
    /// Classical reduction order with the diagonal closed by
    /// G_kk = (lam_k - 1) t^{k(k-1)} L^{-k} / (1 - lam_k t^{k(k-1)} L^{-k}) * sum_{m<k} G_km.
    const FactoredRational& recurrence(long k, long m);
    /// Closed chain-tuple formula with lam_{a_j} in every step.
    const FactoredRational& closed_form(long k, long m);
    /// H_{k,m} as the t = 1 chain sum; depends on gcd(k, m) only.
    const FactoredRational& h_chain_sum(long k, long m);

    FactoredRational recurrence(long k, long m, const LambdaContext& ctx) { return ctx.apply(recurrence(k, m)); }
    FactoredRational closed_form(long k, long m, const LambdaContext& ctx) { return ctx.apply(closed_form(k, m)); }
    FactoredRational h_chain_sum(long k, long m, const LambdaContext& ctx) { return ctx.apply(h_chain_sum(k, m)); }

    /// G(1, L; ctx) / G(1, L; L, L, ...) from the closed formula.
    FactoredRational h_from_definition(long k, long m, const LambdaContext& ctx);
    /// The t = 1 closed formula (L-1)^2 L^{-k-m} * chain sum, evaluated directly.
    FactoredRational t1(long k, long m, const LambdaContext& ctx);

    /// G(1/t, 1/L, 1/lam) == t^{-2(k-1)(m-1)} L^{2k+2m-2} G, checked exactly.
    bool symmetry_check(long k, long m);

private:
    GTable recurrence_{Route::Recurrence};
    GTable closed_form_{Route::ClosedForm};
    std::map<long, FactoredRational> chain_sums_;
    std::map<long, FactoredRational> h_sums_;
};

/// substitute(x, {t -> 1/t, L -> 1/L, lam_i -> 1/lam_i})
FactoredRational invert_all(const FactoredRational& x);
/// substitute(x, {t -> 1})
FactoredRational at_t_one(const FactoredRational& x);

}  // namespace arcmot
