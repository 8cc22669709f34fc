#pragma once

#include <string>
#include <vector>

#include "arcmot/deformed.hpp"
#include "arcmot/milnor.hpp"

namespace arcmot {

/// Two sides of an identity; the identity holds iff they are equal as
/// rational functions.
struct Sides {
    FactoredRational lhs;
    FactoredRational rhs;
};

/// One coefficient of a series identity, labelled by its index cell.
struct CellSides {
    std::string cell;
    Sides sides;
};

std::string cell_label(long k, long m);

/// Which prefactor to use in the higher-derivative product formula.
///   Stated:    prod_j (1 - L^-a) L^{a(k_j-1)} / ((lam_a - 1)(1 - lam_a L^-a)^{k_j})
///   Corrected: prod_j k_j! (1 - L^-a) L^{-a(k_j-1)} / ((lam_a - 1)(1 - lam_a L^-a)^{k_j})
/// Both agree when every k_j = 1.
enum class HigherPrefactor { Stated, Corrected };

/// Coefficientwise checks of the generating-series identities for F, H and
/// Z. Every check reduces to a finite comparison of rational functions.
/// Borrows the integral caches; not thread-safe.
class SeriesChecks {
public:
    SeriesChecks(ClassicalIntegrals& classical, DeformedIntegrals& deformed)
        : classical_(classical), deformed_(deformed) {}

    /// Coefficient of a^k b^m in the functional equation of F, for all
    /// k, m <= n. The three substitutions act as index maps
    /// (k, m) -> (k, k + m), (k + m, m) and (k, m) -> (k, k).
    std::vector<CellSides> functional_eq(long n);
    Sides functional_eq_cell(long k, long m);
    /// The closed-form row sum against the geometric series obtained from
    /// the peeling step, for all k <= n.
    std::vector<CellSides> rowsum_geometric(long n);
    Sides rowsum_geometric_cell(long k);
    /// Coefficient of a^k b^m in F(t, L) = t^2 L^2 F(1/t, 1/L; a t^-2 L^-2, b t^-2 L^-2, c, d t^2, e).
    std::vector<CellSides> f_symmetry(long n);
    Sides f_symmetry_cell(long k, long m);

    /// d H_{k,m} / d lam_alpha against the product formula (0 when alpha does
    /// not divide gcd(k, m)).
    Sides lambda_derivative(long k, long m, long alpha);
    /// Mixed higher derivative against the product formula. Throws
    /// InvalidSequence unless alphas is strictly increasing with entries >= 2
    /// and orders is positive and of the same length.
    Sides lambda_higher_derivative(long k, long m, const std::vector<long>& alphas, const std::vector<long>& orders,
                          HigherPrefactor prefactor = HigherPrefactor::Stated);

    /// Z_n = H_{n,n} with lam_i -> A tau^i.
    FactoredRational z_value(long n);
    /// d Z_n / d tau against the divisor-sum formula.
    Sides z_ode(long n);
    /// d/d tau of the a^k b^m coefficient of Z(a, b, L, tau) against the
    /// divisor-sum formula.
    Sides z_pde_coefficient(long k, long m);
    /// d Z_n / d tau directly against the chain rule through the lam_alpha
    /// derivatives.
    Sides z_chain_rule(long n);

private:
    FactoredRational ode_weight(long alpha);
    FactoredRational z_scaled(const FactoredRational& x, long alpha);

    ClassicalIntegrals& classical_;
    DeformedIntegrals& deformed_;
};

bool check_lambda_derivative(SeriesChecks& s, long k, long m, long alpha);
bool check_lambda_higher_derivative(SeriesChecks& s, long k, long m, const std::vector<long>& alphas,
                           const std::vector<long>& orders, HigherPrefactor prefactor = HigherPrefactor::Stated);
bool check_z_ode(SeriesChecks& s, long n);
bool check_z_pde_coefficient(SeriesChecks& s, long k, long m);

}  // namespace arcmot
