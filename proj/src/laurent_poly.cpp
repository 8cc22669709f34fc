#include "arcmot/laurent_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

namespace arcmot {

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0) terms_.push_back(Term{Monomial{}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const Monomial& m, mpz_class c)
{
    if (c != 0) terms_.push_back(Term{m, std::move(c)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coef += t.coef;
        } else {
            if (!out.empty() && out.back().coef == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::one_minus(const Monomial& m)
{
    return LaurentPoly(1) - LaurentPoly(m);
}

Monomial LaurentPoly::min_monomial() const
{
    if (terms_.empty()) return {};
    Monomial r = terms_.front().mono;
    for (const auto& t : terms_) r = Monomial::gcd(r, t.mono);
    return r;
}

bool LaurentPoly::depends_on(VarId v) const
{
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.contains(v); });
}

std::vector<Term> LaurentPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        int c = a[i].mono.compare(b[j].mono);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
            if (negate_b) out.back().coef = -out.back().coef;
        } else {
            mpz_class s = negate_b ? mpz_class(a[i].coef - b[j].coef) : mpz_class(a[i].coef + b[j].coef);
            if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (negate_b) out.back().coef = -out.back().coef;
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const
{
    auto r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const { return LaurentPoly(merge(terms_, o.terms_, false)); }

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return LaurentPoly(merge(terms_, o.terms_, true)); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    if (is_zero() || o.is_zero()) return {};
    const auto& small = size() <= o.size() ? *this : o;
    const auto& big = size() <= o.size() ? o : *this;
    // Each row small[i] * big is already sorted since the order is multiplicative;
    // rows are combined by a balanced merge tree.
    std::vector<std::vector<Term>> rows;
    rows.reserve(small.size());
    for (const auto& s : small.terms_) {
        std::vector<Term> row;
        row.reserve(big.size());
        for (const auto& b : big.terms_) row.push_back(Term{s.mono * b.mono, s.coef * b.coef});
        rows.push_back(std::move(row));
    }
    while (rows.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((rows.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge(rows[i], rows[i + 1], false));
        if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
        rows = std::move(next);
    }
    return LaurentPoly(std::move(rows.front()));
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const
{
    auto r = *this;
    for (auto& t : r.terms_) t.mono *= m;
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const
{
    if (c == 0) return {};
    auto r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::derivative(VarId v) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::int32_t e = t.mono.exponent(v);
        if (e == 0) continue;
        out.push_back(Term{t.mono * Monomial(v, -1), t.coef * e});
    }
    return from_terms(std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide_one_minus(const Monomial& m) const
{
    if (m.is_unit()) throw std::invalid_argument("divide_one_minus: unit monomial");
    if (is_zero()) return LaurentPoly{};
    // Split the support into cosets of the line Z*m. Inside a coset the
    // polynomial is key * f(s) with s = m, and (1 - s) | f iff f(1) = 0; the
    // quotient coefficients are then the partial sums of f's coefficients.
    const auto pivot = m.entries().front();
    struct Item {
        Monomial key;
        std::int64_t j;
        const mpz_class* coef;
    };
    std::vector<Item> items;
    items.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::int64_t x = t.mono.exponent(pivot.var);
        std::int64_t q = x / pivot.exp;
        if ((x % pivot.exp != 0) && ((x < 0) != (pivot.exp < 0))) --q;
        items.push_back(Item{t.mono * m.pow(static_cast<std::int32_t>(-q)), q, &t.coef});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        int c = a.key.compare(b.key);
        return c != 0 ? c < 0 : a.j < b.j;
    });
    std::vector<Term> out;
    for (std::size_t i = 0; i < items.size();) {
        std::size_t end = i;
        while (end < items.size() && items[end].key == items[i].key) ++end;
        mpz_class run = 0;
        for (std::size_t p = i; p < end; ++p) {
            run += *items[p].coef;
            if (p + 1 == end) break;
            // quotient coefficient is constant on [j_p, j_{p+1})
            if (run != 0) {
                for (std::int64_t j = items[p].j; j < items[p + 1].j; ++j) {
                    out.push_back(Term{items[i].key * m.pow(static_cast<std::int32_t>(j)), run});
                }
            }
        }
        if (run != 0) return std::nullopt;
        i = end;
    }
    return from_terms(std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
}

}  // namespace arcmot
