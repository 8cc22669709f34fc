#include "arcmot/series.hpp"

#include "arcmot/errors.hpp"
#include "arcmot/numtheory.hpp"

namespace arcmot {

namespace {

std::int32_t narrow(long v)
{
    if (v < INT32_MIN || v > INT32_MAX) throw std::overflow_error("exponent out of range");
    return static_cast<std::int32_t>(v);
}

FactoredRational lam(long i) { return FactoredRational::var(VarId::lam(narrow(i)), 1); }

FactoredRational l_pow(long e) { return tl(0, e); }

// (1 - L^-a) / ((lam_a - 1)(1 - lam_a L^-a)^order), times the extra factor.
FactoredRational derivative_weight(long alpha, long order, const FactoredRational& extra)
{
    FactoredRational one(1);
    FactoredRational denominator = (lam(alpha) - one) * (one - lam(alpha) * l_pow(-alpha)).pow(narrow(order));
    return extra * (one - l_pow(-alpha)) / denominator;
}

long factorial(long n)
{
    long f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::string cell_label(long k, long m) { return "(" + std::to_string(k) + "," + std::to_string(m) + ")"; }

Sides SeriesChecks::functional_eq_cell(long k, long m)
{
    require_order(k, m);
    FactoredRational rhs;
    if (m > k) rhs += tl(k * (k - 1), -k) * classical_.recurrence(k, m - k);
    if (k > m) rhs += tl(m * (m - 1), -m) * classical_.recurrence(k - m, m);
    if (k == m) rhs += tl(k * (k - 1), -k) * classical_.rowsum(k) * l_minus_one();
    return {classical_.recurrence(k, m), std::move(rhs)};
}

Sides SeriesChecks::rowsum_geometric_cell(long k)
{
    require_order(k, k);
    // G_{k, m + k} = c G_{k, m}, so sum_{m > k} G_{k,m} = c / (1 - c) * sum_{m <= k} G_{k,m}.
    FactoredRational head;
    for (long m = 1; m <= k; ++m) head += classical_.recurrence(k, m);
    FactoredRational c = tl(k * (k - 1), -k);
    FactoredRational geometric = head + c / (FactoredRational(1) - c) * head;
    return {classical_.rowsum(k), std::move(geometric)};
}

Sides SeriesChecks::f_symmetry_cell(long k, long m)
{
    const auto& g = classical_.recurrence(k, m);
    // t^2 L^2 from the prefactor, a^k and b^m each give t^-2 L^-2 per power, d^{km} gives t^{2km}.
    FactoredRational bookkeeping = tl(2, 2) * tl(-2 * k, -2 * k) * tl(-2 * m, -2 * m) * tl(2 * k * m, 0);
    return {g, bookkeeping * invert_t_l(g)};
}

std::vector<CellSides> SeriesChecks::functional_eq(long n)
{
    std::vector<CellSides> out;
    for (long k = 1; k <= n; ++k) {
        for (long m = 1; m <= n; ++m) out.push_back({cell_label(k, m), functional_eq_cell(k, m)});
    }
    return out;
}

std::vector<CellSides> SeriesChecks::rowsum_geometric(long n)
{
    std::vector<CellSides> out;
    for (long k = 1; k <= n; ++k) out.push_back({cell_label(k, k), rowsum_geometric_cell(k)});
    return out;
}

std::vector<CellSides> SeriesChecks::f_symmetry(long n)
{
    std::vector<CellSides> out;
    for (long k = 1; k <= n; ++k) {
        for (long m = 1; m <= n; ++m) out.push_back({cell_label(k, m), f_symmetry_cell(k, m)});
    }
    return out;
}

Sides SeriesChecks::lambda_derivative(long k, long m, long alpha)
{
    if (alpha < 2) throw InvalidSequence("alpha must be at least 2");
    FactoredRational lhs = derivative(deformed_.h_chain_sum(k, m), VarId::lam(narrow(alpha)));
    const long a = gcd(k, m);
    if (a % alpha != 0) return {std::move(lhs), FactoredRational()};
    FactoredRational rhs = derivative_weight(alpha, 1, FactoredRational(1)) * deformed_.h_chain_sum(alpha, alpha)
                           * rescale_lambda(deformed_.h_chain_sum(k / alpha, m / alpha), alpha);
    return {std::move(lhs), std::move(rhs)};
}

Sides SeriesChecks::lambda_higher_derivative(long k, long m, const std::vector<long>& alphas, const std::vector<long>& orders,
                                    HigherPrefactor prefactor)
{
    if (alphas.empty() || alphas.size() != orders.size()) {
        throw InvalidSequence("derivative indices and orders must be non-empty and of equal length");
    }
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (alphas[j] < 2) throw InvalidSequence("derivative indices must be at least 2");
        if (j > 0 && alphas[j] <= alphas[j - 1]) throw InvalidSequence("derivative indices must be strictly increasing");
        if (orders[j] < 1) throw InvalidSequence("derivative orders must be positive");
    }

    FactoredRational lhs = deformed_.h_chain_sum(k, m);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        for (long r = 0; r < orders[j]; ++r) lhs = derivative(lhs, VarId::lam(narrow(alphas[j])));
    }

    bool chain = true;
    for (std::size_t j = 1; j < alphas.size(); ++j) chain = chain && alphas[j] % alphas[j - 1] == 0;
    const long last = alphas.back();
    if (!chain || gcd(k, m) % last != 0) return {std::move(lhs), FactoredRational()};

    FactoredRational rhs(1);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        const long a = alphas[j];
        const long kj = orders[j];
        FactoredRational extra = prefactor == HigherPrefactor::Stated
                                     ? l_pow(a * (kj - 1))
                                     : FactoredRational(factorial(kj)) * l_pow(-a * (kj - 1));
        rhs *= derivative_weight(a, kj, extra);
    }
    rhs *= deformed_.h_chain_sum(alphas.front(), alphas.front());
    for (std::size_t j = 1; j < alphas.size(); ++j) {
        const long step = alphas[j] / alphas[j - 1];
        rhs *= rescale_lambda(deformed_.h_chain_sum(step, step), alphas[j - 1]);
    }
    rhs *= rescale_lambda(deformed_.h_chain_sum(k / last, m / last), last);
    return {std::move(lhs), std::move(rhs)};
}

FactoredRational SeriesChecks::z_value(long n) { return deformed_.h_chain_sum(n, n, LambdaContext::a_tau()); }

FactoredRational SeriesChecks::ode_weight(long alpha)
{
    // A alpha tau^{alpha-1} (1 - L^-a) / ((A tau^a - 1)(1 - A tau^a L^-a))
    FactoredRational one(1);
    FactoredRational a_tau = FactoredRational::var(VarId::big_a(), 1) * FactoredRational::var(VarId::tau(), narrow(alpha));
    return FactoredRational(alpha) * FactoredRational::var(VarId::big_a(), 1)
           * FactoredRational::var(VarId::tau(), narrow(alpha - 1)) * (one - l_pow(-alpha))
           / ((a_tau - one) * (one - a_tau * l_pow(-alpha)));
}

FactoredRational SeriesChecks::z_scaled(const FactoredRational& x, long alpha)
{
    return substitute(x, Substitution{{VarId::L(), SignedMonomial{1, Monomial(VarId::L(), narrow(alpha))}},
                                      {VarId::tau(), SignedMonomial{1, Monomial(VarId::tau(), narrow(alpha))}}});
}

Sides SeriesChecks::z_ode(long n)
{
    if (n < 1) throw InvalidOrder("n must be at least 1");
    FactoredRational lhs = derivative(z_value(n), VarId::tau());
    FactoredRational rhs;
    for (long alpha : divisors(n)) {
        if (alpha < 2) continue;
        rhs += ode_weight(alpha) * z_value(alpha) * z_scaled(z_value(n / alpha), alpha);
    }
    return {std::move(lhs), std::move(rhs)};
}

Sides SeriesChecks::z_pde_coefficient(long k, long m)
{
    const auto a_tau = LambdaContext::a_tau();
    FactoredRational lhs = derivative(deformed_.h_chain_sum(k, m, a_tau), VarId::tau());
    FactoredRational rhs;
    for (long alpha : divisors(gcd(k, m))) {
        if (alpha < 2) continue;
        rhs += ode_weight(alpha) * z_value(alpha) * z_scaled(deformed_.h_chain_sum(k / alpha, m / alpha, a_tau), alpha);
    }
    return {std::move(lhs), std::move(rhs)};
}

Sides SeriesChecks::z_chain_rule(long n)
{
    if (n < 1) throw InvalidOrder("n must be at least 1");
    const auto a_tau = LambdaContext::a_tau();
    FactoredRational lhs = derivative(z_value(n), VarId::tau());
    FactoredRational rhs;
    for (long alpha : lambda_indices(deformed_.h_chain_sum(n, n))) {
        FactoredRational partial = a_tau.apply(derivative(deformed_.h_chain_sum(n, n), VarId::lam(narrow(alpha))));
        // d lam_alpha / d tau = alpha A tau^{alpha-1}
        rhs += partial * FactoredRational(alpha) * FactoredRational::var(VarId::big_a(), 1)
               * FactoredRational::var(VarId::tau(), narrow(alpha - 1));
    }
    return {std::move(lhs), std::move(rhs)};
}

bool check_lambda_derivative(SeriesChecks& s, long k, long m, long alpha)
{
    auto sides = s.lambda_derivative(k, m, alpha);
    return rat_eq_exact(sides.lhs, sides.rhs);
}

bool check_lambda_higher_derivative(SeriesChecks& s, long k, long m, const std::vector<long>& alphas,
                           const std::vector<long>& orders, HigherPrefactor prefactor)
{
    auto sides = s.lambda_higher_derivative(k, m, alphas, orders, prefactor);
    return rat_eq_exact(sides.lhs, sides.rhs);
}

bool check_z_ode(SeriesChecks& s, long n)
{
    auto sides = s.z_ode(n);
    return rat_eq_exact(sides.lhs, sides.rhs);
}

bool check_z_pde_coefficient(SeriesChecks& s, long k, long m)
{
    auto sides = s.z_pde_coefficient(k, m);
    return rat_eq_exact(sides.lhs, sides.rhs);
}

}  // namespace arcmot
