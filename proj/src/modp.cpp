#include "arcmot/modp.hpp"

#include <random>
#include <set>

#include "arcmot/errors.hpp"

namespace arcmot {
namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p) & kPrime;
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return add(lo, hi);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e > 0) {
        if (e & 1U) r = mul(r, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a)
{
    if (a == 0) throw DivisionByZero("inverse of 0 mod p");
    return pow(a, kPrime - 2);
}

std::uint64_t reduce(const mpz_class& c)
{
    static const mpz_class p(std::to_string(kPrime));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    return static_cast<std::uint64_t>(r.get_ui());
}

namespace {

std::uint64_t eval_monomial(const Monomial& m, const Point& point)
{
    std::uint64_t r = 1;
    for (const auto& en : m.entries()) {
        std::uint64_t base = point.at(en.var);
        std::int64_t e = en.exp;
        if (e < 0) {
            base = inv(base);
            e = -e;
        }
        r = mul(r, pow(base, static_cast<std::uint64_t>(e)));
    }
    return r;
}

}  // namespace

std::optional<std::uint64_t> evaluate(const FactoredRational& x, const Point& point)
{
    std::uint64_t den = 1;
    for (const auto& [f, e] : x.den()) {
        std::uint64_t v = sub(1, eval_monomial(f.body(), point));
        if (v == 0) return std::nullopt;
        den = mul(den, pow(v, static_cast<std::uint64_t>(e)));
    }
    std::uint64_t num = 0;
    for (const auto& t : x.num().terms()) num = add(num, mul(reduce(t.coef), eval_monomial(t.mono, point)));
    num = mul(num, eval_monomial(x.unit(), point));
    if (x.sign() < 0) num = sub(0, num);
    return mul(num, inv(den));
}

}  // namespace modp

namespace {

void collect_vars(const FactoredRational& x, std::set<VarId>& out)
{
    for (const auto& en : x.unit().entries()) out.insert(en.var);
    for (const auto& t : x.num().terms()) {
        for (const auto& en : t.mono.entries()) out.insert(en.var);
    }
    for (const auto& [f, e] : x.den()) {
        for (const auto& en : f.body().entries()) out.insert(en.var);
    }
}

}  // namespace

bool rat_eq_modp(const FactoredRational& x, const FactoredRational& y, int trials, std::uint64_t seed)
{
    std::set<VarId> vars;
    collect_vars(x, vars);
    collect_vars(y, vars);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, modp::kPrime - 1);
    const long max_consecutive = 100L * trials;
    long degenerate = 0;
    for (int done = 0; done < trials;) {
        modp::Point point;
        for (VarId v : vars) point[v] = dist(rng);
        auto vx = modp::evaluate(x, point);
        auto vy = vx ? modp::evaluate(y, point) : std::nullopt;
        if (!vx || !vy) {
            if (++degenerate > max_consecutive) {
                throw DegeneratePoint("too many consecutive sample points with a vanishing denominator");
            }
            continue;
        }
        degenerate = 0;
        if (*vx != *vy) return false;
        ++done;
    }
    return true;
}

}  // namespace arcmot
