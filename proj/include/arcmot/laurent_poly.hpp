#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "arcmot/monomial.hpp"

namespace arcmot {

struct Term {
    Monomial mono;
    mpz_class coef;
};

/// Integer-coefficient Laurent polynomial over the VarId universe.
///
/// Terms are sorted ascending in the lexicographic monomial order and no
/// coefficient is zero, so structural equality is value equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: implicit constants read naturally in formulas
    explicit LaurentPoly(const Monomial& m, mpz_class c = 1);

    /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    /// The binomial 1 - m.
    static LaurentPoly one_minus(const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }
    const Term& lowest() const { return terms_.front(); }
    const Term& highest() const { return terms_.back(); }

    /// Componentwise minimum exponent over the support (unit for zero).
    Monomial min_monomial() const;
    /// true iff some term mentions v.
    bool depends_on(VarId v) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly shifted(const Monomial& m) const;
    LaurentPoly scaled(const mpz_class& c) const;
    LaurentPoly pow(unsigned e) const;

    LaurentPoly derivative(VarId v) const;

    /// Exact quotient by (1 - m), or nullopt when (1 - m) does not divide.
    /// m must not be the unit monomial.
    std::optional<LaurentPoly> divide_one_minus(const Monomial& m) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b);

    std::vector<Term> terms_;
};

}  // namespace arcmot
