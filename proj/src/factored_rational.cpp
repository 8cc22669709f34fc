#include "arcmot/factored_rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "arcmot/errors.hpp"

namespace arcmot {

namespace {

// p * (1 - m)^times without a general multiplication.
LaurentPoly mul_one_minus(LaurentPoly p, const Monomial& m, int times)
{
    for (int i = 0; i < times; ++i) p = p - p.shifted(m);
    return p;
}

int sign_pow(int sign, long e) { return (sign < 0 && (e % 2 != 0)) ? -1 : 1; }

// Psi_n(x): Psi_1 = 1 - x and Psi_n = Phi_n for n >= 2, so that
// prod_{d | n} Psi_d(x) = 1 - x^n. Coefficients in increasing degree.
using UniPoly = std::vector<long long>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b)
{
    UniPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division; the leading coefficient of d is +-1.
UniPoly uni_div(UniPoly n, const UniPoly& d)
{
    UniPoly q(n.size() - d.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long long c = n[i + d.size() - 1] / d.back();
        q[i] = c;
        for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= c * d[j];
    }
    return q;
}

constexpr int kMaxCyclotomic = 48;

const UniPoly& psi(int n)
{
    static const std::vector<UniPoly> table = [] {
        std::vector<UniPoly> t(kMaxCyclotomic + 1);
        for (int k = 1; k <= kMaxCyclotomic; ++k) {
            UniPoly one_minus(k + 1, 0);
            one_minus[0] = 1;
            one_minus[k] = -1;
            UniPoly below{1};
            for (int d = 1; d < k; ++d) {
                if (k % d == 0) below = uni_mul(below, t[d]);
            }
            t[k] = uni_div(one_minus, below);
        }
        return t;
    }();
    return table.at(n);
}

// (1 - x^n) / Psi_n(x)
UniPoly psi_cofactor(int n)
{
    UniPoly c{1};
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) c = uni_mul(c, psi(d));
    }
    return c;
}

LaurentPoly eval_uni(const UniPoly& p, const Monomial& m)
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) terms.push_back(Term{m.pow(static_cast<std::int32_t>(i)), mpz_class(static_cast<long>(p[i]))});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

// p = sign * unit * prod Psi_{n_i}(m_i) with canonical m_i.
struct CyclotomicSplit {
    int sign = 1;
    Monomial unit;
    std::vector<std::pair<Monomial, int>> factors;
};

std::optional<CyclotomicSplit> split_cyclotomic(const LaurentPoly& p)
{
    CyclotomicSplit out;
    const Term& low = p.lowest();
    if (low.coef != 1 && low.coef != -1) return std::nullopt;
    out.sign = low.coef > 0 ? 1 : -1;
    out.unit = low.mono;
    LaurentPoly rest = p.shifted(low.mono.inverse()).scaled(out.sign);
    // Every Psi_n(m) with m > 1 in the term order is 1 + c*m + (higher), c != 0,
    // so the next factor's base monomial is the second-lowest term.
    while (rest.size() > 1) {
        const Monomial m = rest.terms()[1].mono;
        bool found = false;
        for (int n = 1; n <= kMaxCyclotomic && !found; ++n) {
            // Psi_n(m) | rest  iff  (1 - m^n) | rest * cofactor
            auto q = (rest * eval_uni(psi_cofactor(n), m)).divide_one_minus(m.pow(n));
            if (!q) continue;
            out.factors.emplace_back(m, n);
            rest = std::move(*q);
            found = true;
        }
        if (!found) return std::nullopt;
    }
    if (!(rest == LaurentPoly(1))) return std::nullopt;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CanonFactor

bool CanonFactor::is_canonical(const Monomial& m) { return !m.is_unit() && m.entries().front().exp > 0; }

CanonFactor::Oriented CanonFactor::orient(const Monomial& m)
{
    if (m.is_unit()) throw DivisionByZero("binomial 1 - 1 is zero");
    if (is_canonical(m)) return Oriented{CanonFactor(m), std::nullopt};
    return Oriented{CanonFactor(m.inverse()), m};
}

CanonFactor CanonFactor::from_canonical(const Monomial& body)
{
    if (!is_canonical(body)) throw std::invalid_argument("factor body is not in canonical orientation");
    return CanonFactor(body);
}

// ---------------------------------------------------------------------------
// FactoredRational

FactoredRational::FactoredRational(long c) : num_(c) { normalize(); }

FactoredRational::FactoredRational(LaurentPoly num) : num_(std::move(num)) { normalize(); }

FactoredRational FactoredRational::from_parts(int sign, Monomial unit, LaurentPoly num, Denominator den)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    FactoredRational r;
    r.sign_ = sign;
    r.unit_ = unit;
    for (auto& [f, e] : den) {
        if (e < 0) {
            num = mul_one_minus(std::move(num), f.body(), -e);
        } else if (e > 0) {
            r.den_.emplace(f, e);
        }
    }
    r.num_ = std::move(num);
    r.normalize();
    return r;
}

FactoredRational FactoredRational::monomial(const Monomial& m, int sign)
{
    return from_parts(sign, m, LaurentPoly(1), {});
}

FactoredRational FactoredRational::one_minus(const Monomial& m) { return FactoredRational(LaurentPoly::one_minus(m)); }

FactoredRational FactoredRational::inverse_one_minus(const Monomial& m, int mult)
{
    auto o = CanonFactor::orient(m);
    Denominator den{{o.factor, mult}};
    if (!o.unit) return from_parts(1, {}, LaurentPoly(1), std::move(den));
    return from_parts(sign_pow(-1, mult), o.unit->pow(-mult), LaurentPoly(1), std::move(den));
}

void FactoredRational::normalize()
{
    if (num_.is_zero()) {
        sign_ = 1;
        unit_ = Monomial{};
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_one_minus(it->first.body());
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    Monomial anchor = num_.min_monomial();
    if (!anchor.is_unit()) {
        num_ = num_.shifted(anchor.inverse());
        unit_ *= anchor;
    }
    if (num_.highest().coef < 0) {
        num_ = -num_;
        sign_ = -sign_;
    }
}

LaurentPoly FactoredRational::signed_numerator() const { return num_.shifted(unit_).scaled(sign_); }

LaurentPoly FactoredRational::expanded_denominator() const
{
    LaurentPoly d(1);
    for (const auto& [f, e] : den_) d = mul_one_minus(std::move(d), f.body(), e);
    return d;
}

std::optional<std::pair<int, Monomial>> FactoredRational::as_signed_monomial() const
{
    if (!den_.empty() || num_.size() != 1 || num_.lowest().coef != 1) return std::nullopt;
    return std::pair{sign_, unit_ * num_.lowest().mono};
}

bool FactoredRational::depends_on(VarId v) const
{
    if (unit_.contains(v) || num_.depends_on(v)) return true;
    return std::any_of(den_.begin(), den_.end(), [v](const auto& fe) { return fe.first.body().contains(v); });
}

FactoredRational FactoredRational::operator-() const
{
    auto r = *this;
    if (!r.is_zero()) r.sign_ = -r.sign_;
    return r;
}

FactoredRational FactoredRational::operator+(const FactoredRational& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Denominator common = den_;
    for (const auto& [f, e] : o.den_) {
        auto& slot = common[f];
        slot = std::max(slot, e);
    }
    const Monomial base = Monomial::gcd(unit_, o.unit_);
    auto lift = [&](const FactoredRational& x) {
        LaurentPoly p = x.num_.shifted(x.unit_ / base).scaled(x.sign_);
        for (const auto& [f, e] : common) {
            auto it = x.den_.find(f);
            int have = it == x.den_.end() ? 0 : it->second;
            p = mul_one_minus(std::move(p), f.body(), e - have);
        }
        return p;
    };
    LaurentPoly sum = lift(*this) + lift(o);
    return from_parts(1, base, std::move(sum), std::move(common));
}

FactoredRational FactoredRational::operator-(const FactoredRational& o) const { return *this + (-o); }

FactoredRational FactoredRational::operator*(const FactoredRational& o) const
{
    if (is_zero() || o.is_zero()) return {};
    Denominator den = den_;
    for (const auto& [f, e] : o.den_) den[f] += e;
    return from_parts(sign_ * o.sign_, unit_ * o.unit_, num_ * o.num_, std::move(den));
}

FactoredRational FactoredRational::reciprocal() const
{
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    auto split = split_cyclotomic(num_);
    if (!split) throw NotRepresentable("numerator does not split into cyclotomic binomial factors; cannot invert");
    // 1 / Psi_n(m) = cofactor_n(m) / (1 - m^n)
    Denominator den;
    LaurentPoly num = expanded_denominator();
    for (const auto& [m, n] : split->factors) {
        den[CanonFactor::from_canonical(m.pow(n))] += 1;
        if (n > 1) num *= eval_uni(psi_cofactor(n), m);
    }
    return from_parts(sign_ * split->sign, (unit_ * split->unit).inverse(), std::move(num), std::move(den));
}

FactoredRational FactoredRational::operator/(const FactoredRational& o) const
{
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return *this * o.reciprocal();
}

FactoredRational FactoredRational::pow(int e) const
{
    if (e < 0) return reciprocal().pow(-e);
    FactoredRational result(1);
    FactoredRational base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

bool operator==(const FactoredRational& a, const FactoredRational& b)
{
    return a.sign_ == b.sign_ && a.unit_ == b.unit_ && a.num_ == b.num_ && a.den_ == b.den_;
}

// ---------------------------------------------------------------------------

bool rat_eq_exact(const FactoredRational& x, const FactoredRational& y)
{
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    if (x == y) return true;
    const Monomial base = Monomial::gcd(x.unit(), y.unit());
    auto cross = [&](const FactoredRational& a, const FactoredRational& b) {
        LaurentPoly p = a.num().shifted(a.unit() / base).scaled(a.sign());
        for (const auto& [f, e] : b.den()) {
            auto it = a.den().find(f);
            int shared = it == a.den().end() ? 0 : std::min(it->second, e);
            p = mul_one_minus(std::move(p), f.body(), e - shared);
        }
        return p;
    };
    return cross(x, y) == cross(y, x);
}

// ---------------------------------------------------------------------------

namespace {

bool all_monomial_images(const FactoredRational& x, const Substitution& sigma)
{
    for (const auto& [v, img] : sigma) {
        if (std::holds_alternative<SignedMonomial>(img)) continue;
        if (x.depends_on(v)) return false;
    }
    return true;
}

std::pair<int, Monomial> image_of(const Monomial& m, const Substitution& sigma)
{
    int sign = 1;
    Monomial out;
    for (const auto& en : m.entries()) {
        auto it = sigma.find(en.var);
        if (it == sigma.end()) {
            out *= Monomial(en.var, en.exp);
            continue;
        }
        const auto& img = std::get<SignedMonomial>(it->second);
        sign *= sign_pow(img.sign, en.exp);
        out *= img.mono.pow(en.exp);
    }
    return {sign, out};
}

FactoredRational substitute_monomial(const FactoredRational& x, const Substitution& sigma)
{
    auto [usign, unit] = image_of(x.unit(), sigma);
    int sign = x.sign() * usign;

    std::vector<Term> terms;
    terms.reserve(x.num().size());
    for (const auto& t : x.num().terms()) {
        auto [s, m] = image_of(t.mono, sigma);
        terms.push_back(Term{m, s > 0 ? t.coef : mpz_class(-t.coef)});
    }
    LaurentPoly num = LaurentPoly::from_terms(std::move(terms));

    Denominator den;
    auto add_factor = [&](const Monomial& body, int e) {
        auto o = CanonFactor::orient(body);
        den[o.factor] += e;
        if (o.unit) {
            sign *= sign_pow(-1, e);
            unit *= o.unit->pow(-e);
        }
    };
    for (const auto& [f, e] : x.den()) {
        auto [s, m] = image_of(f.body(), sigma);
        if (m.is_unit()) {
            if (s > 0) throw DivisionByZero("substitution sends a denominator factor to zero");
            throw NotRepresentable("substitution sends a denominator factor to the constant 2");
        }
        if (s > 0) {
            add_factor(m, e);
        } else {
            // 1/(1 + m) = (1 - m)/(1 - m^2)
            num = mul_one_minus(std::move(num), m, e);
            add_factor(m.pow(2), e);
        }
    }
    return FactoredRational::from_parts(sign, unit, std::move(num), std::move(den));
}

FactoredRational image_value(VarId v, std::int32_t e, const Substitution& sigma)
{
    auto it = sigma.find(v);
    if (it == sigma.end()) return FactoredRational::var(v, e);
    if (const auto* sm = std::get_if<SignedMonomial>(&it->second)) {
        return FactoredRational::monomial(sm->mono.pow(e), sign_pow(sm->sign, e));
    }
    return std::get<FactoredRational>(it->second).pow(e);
}

FactoredRational image_value(const Monomial& m, const Substitution& sigma)
{
    FactoredRational r(1);
    for (const auto& en : m.entries()) r *= image_value(en.var, en.exp, sigma);
    return r;
}

}  // namespace

FactoredRational substitute(const FactoredRational& x, const Substitution& sigma)
{
    for (const auto& [v, img] : sigma) {
        if (const auto* sm = std::get_if<SignedMonomial>(&img)) {
            if (sm->sign != 1 && sm->sign != -1) throw ZeroSubstitution("image of " + v.name() + " is zero");
        } else if (std::get<FactoredRational>(img).is_zero()) {
            throw ZeroSubstitution("image of " + v.name() + " is zero");
        }
    }
    if (sigma.empty() || x.is_zero()) return x;
    if (all_monomial_images(x, sigma)) return substitute_monomial(x, sigma);

    FactoredRational num;
    for (const auto& t : x.num().terms()) num += FactoredRational(LaurentPoly(Monomial{}, t.coef)) * image_value(t.mono, sigma);
    FactoredRational den(1);
    for (const auto& [f, e] : x.den()) {
        auto b = FactoredRational(1) - image_value(f.body(), sigma);
        if (b.is_zero()) throw DivisionByZero("substitution sends a denominator factor to zero");
        den *= b.pow(e);
    }
    return FactoredRational(x.sign()) * image_value(x.unit(), sigma) * num / den;
}

FactoredRational derivative(const FactoredRational& x, VarId v)
{
    if (x.is_zero()) return {};
    const LaurentPoly p = x.signed_numerator();
    std::vector<std::pair<CanonFactor, int>> deps;
    for (const auto& fe : x.den()) {
        if (fe.first.body().contains(v)) deps.push_back(fe);
    }
    if (deps.empty() && !p.depends_on(v)) return {};

    // d(p / prod f^e) = [p' * prod f - p * sum e_f f' prod_{g != f} g] / (prod f^e * prod f)
    LaurentPoly all(1);
    for (const auto& [f, e] : deps) all *= f.poly();
    LaurentPoly numerator = p.derivative(v) * all;
    for (std::size_t i = 0; i < deps.size(); ++i) {
        LaurentPoly others(1);
        for (std::size_t j = 0; j < deps.size(); ++j) {
            if (j != i) others *= deps[j].first.poly();
        }
        LaurentPoly df = deps[i].first.poly().derivative(v);
        numerator -= (p * df * others).scaled(deps[i].second);
    }
    Denominator den = x.den();
    for (const auto& [f, e] : deps) den[f] += 1;
    return FactoredRational::from_parts(1, {}, std::move(numerator), std::move(den));
}

}  // namespace arcmot
