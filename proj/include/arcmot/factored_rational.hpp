#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>

#include "arcmot/laurent_poly.hpp"

namespace arcmot {

/// A binomial denominator factor (1 - body) in canonical orientation: the
/// first nonzero exponent of body, in VarId order, is positive.
class CanonFactor {
public:
    struct Oriented;

    /// Canonicalizes (1 - m). When m is not canonical,
    /// (1 - m) = (-m) * (1 - m^-1) and the monomial m is returned as the
    /// extracted unit (the sign is always -1 in that case).
    static Oriented orient(const Monomial& m);

    /// Wraps an already canonical body; throws std::invalid_argument otherwise.
    static CanonFactor from_canonical(const Monomial& body);
    static bool is_canonical(const Monomial& m);

    const Monomial& body() const { return body_; }
    LaurentPoly poly() const { return LaurentPoly::one_minus(body_); }

    friend bool operator==(const CanonFactor& a, const CanonFactor& b) { return a.body_ == b.body_; }
    friend bool operator<(const CanonFactor& a, const CanonFactor& b) { return a.body_ < b.body_; }

private:
    explicit CanonFactor(Monomial body) : body_(body) {}
    Monomial body_;
};

struct CanonFactor::Oriented {
    CanonFactor factor;
    /// If set, (1 - m) = -(*unit) * (1 - factor.body()).
    std::optional<Monomial> unit;
};

using Denominator = std::map<CanonFactor, int>;

/// Exact rational function sign * unit * num / prod factor^mult.
///
/// Normal form: no denominator factor divides num, num has componentwise
/// minimum exponent zero in every variable, and its lexicographically
/// highest term is positive. Zero is num = 0, empty den, unit = (+1, 1).
/// Distinct normal forms can still denote the same function (for instance
/// (1 - m^2) against (1 - m)(1 + m)); use rat_eq_exact for value equality.
class FactoredRational {
public:
    FactoredRational() = default;
    FactoredRational(long c);  // NOLINT
    FactoredRational(LaurentPoly num);  // NOLINT

    static FactoredRational from_parts(int sign, Monomial unit, LaurentPoly num, Denominator den);
    static FactoredRational monomial(const Monomial& m, int sign = 1);
    static FactoredRational var(VarId v, std::int32_t e = 1) { return monomial(Monomial(v, e)); }
    /// 1 - m
    static FactoredRational one_minus(const Monomial& m);
    /// 1 / (1 - m)
    static FactoredRational inverse_one_minus(const Monomial& m, int mult = 1);

    int sign() const { return sign_; }
    const Monomial& unit() const { return unit_; }
    const LaurentPoly& num() const { return num_; }
    const Denominator& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// The numerator with sign and unit folded in.
    LaurentPoly signed_numerator() const;
    /// prod factor^mult, expanded.
    LaurentPoly expanded_denominator() const;

    /// The monomial, if the value is exactly sign * monomial.
    std::optional<std::pair<int, Monomial>> as_signed_monomial() const;
    bool depends_on(VarId v) const;

    FactoredRational operator-() const;
    FactoredRational operator+(const FactoredRational& o) const;
    FactoredRational operator-(const FactoredRational& o) const;
    FactoredRational operator*(const FactoredRational& o) const;
    /// Throws DivisionByZero for o == 0 and NotRepresentable when the
    /// numerator of o does not split into canonical binomials.
    FactoredRational operator/(const FactoredRational& o) const;
    FactoredRational& operator+=(const FactoredRational& o) { return *this = *this + o; }
    FactoredRational& operator-=(const FactoredRational& o) { return *this = *this - o; }
    FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }
    FactoredRational& operator/=(const FactoredRational& o) { return *this = *this / o; }

    FactoredRational reciprocal() const;
    FactoredRational pow(int e) const;

    /// Structural equality of normal forms.
    friend bool operator==(const FactoredRational& a, const FactoredRational& b);

private:
    void normalize();

    int sign_ = 1;
    Monomial unit_;
    LaurentPoly num_;
    Denominator den_;
};

/// Value equality by cross-multiplication against the other side's
/// missing denominator factors; never computes a polynomial gcd.
bool rat_eq_exact(const FactoredRational& x, const FactoredRational& y);

/// Image of a variable under substitute().
struct SignedMonomial {
    int sign = 1;
    Monomial mono;
};
using SubstImage = std::variant<SignedMonomial, FactoredRational>;
using Substitution = std::map<VarId, SubstImage>;

/// Applies the substitution homomorphism simultaneously to every variable
/// in sigma. Throws ZeroSubstitution if an image is zero and DivisionByZero
/// if a denominator factor maps to zero.
FactoredRational substitute(const FactoredRational& x, const Substitution& sigma);

/// Partial derivative by the quotient rule, re-normalized by trial division.
FactoredRational derivative(const FactoredRational& x, VarId v);

}  // namespace arcmot
