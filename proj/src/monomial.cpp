#include "arcmot/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace arcmot {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b)
{
    std::int32_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
    return r;
}

std::int32_t checked_mul(std::int32_t a, std::int32_t b)
{
    std::int32_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
    return r;
}

}  // namespace

void Monomial::push(VarId v, std::int32_t e)
{
    if (e == 0) return;
    if (size_ == kCapacity) throw std::length_error("monomial has too many variables");
    entries_[size_++] = Entry{v, e};
}

Monomial::Monomial(VarId v, std::int32_t e) { push(v, e); }

Monomial::Monomial(std::initializer_list<std::pair<VarId, std::int32_t>> entries)
{
    for (const auto& [v, e] : entries) *this *= Monomial(v, e);
}

std::int32_t Monomial::exponent(VarId v) const
{
    for (const auto& en : entries()) {
        if (en.var == v) return en.exp;
        if (v < en.var) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < size_ && j < o.size_) {
        const auto& a = entries_[i];
        const auto& b = o.entries_[j];
        if (a.var == b.var) {
            r.push(a.var, checked_add(a.exp, b.exp));
            ++i;
            ++j;
        } else if (a.var < b.var) {
            r.push(a.var, a.exp);
            ++i;
        } else {
            r.push(b.var, b.exp);
            ++j;
        }
    }
    for (; i < size_; ++i) r.push(entries_[i].var, entries_[i].exp);
    for (; j < o.size_; ++j) r.push(o.entries_[j].var, o.entries_[j].exp);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(std::int32_t e) const
{
    Monomial r;
    if (e == 0) return r;
    for (const auto& en : entries()) r.push(en.var, checked_mul(en.exp, e));
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size_ || j < b.size_) {
        if (j == b.size_ || (i < a.size_ && a.entries_[i].var < b.entries_[j].var)) {
            r.push(a.entries_[i].var, std::min(a.entries_[i].exp, 0));
            ++i;
        } else if (i == a.size_ || b.entries_[j].var < a.entries_[i].var) {
            r.push(b.entries_[j].var, std::min(b.entries_[j].exp, 0));
            ++j;
        } else {
            r.push(a.entries_[i].var, std::min(a.entries_[i].exp, b.entries_[j].exp));
            ++i;
            ++j;
        }
    }
    return r;
}

int Monomial::compare(const Monomial& o) const
{
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < size_ || j < o.size_) {
        std::int32_t ea = 0;
        std::int32_t eb = 0;
        if (j == o.size_ || (i < size_ && entries_[i].var < o.entries_[j].var)) {
            ea = entries_[i++].exp;
        } else if (i == size_ || o.entries_[j].var < entries_[i].var) {
            eb = o.entries_[j++].exp;
        } else {
            ea = entries_[i++].exp;
            eb = o.entries_[j++].exp;
        }
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

bool operator==(const Monomial& a, const Monomial& b)
{
    return a.size_ == b.size_ && std::equal(a.entries_.begin(), a.entries_.begin() + a.size_, b.entries_.begin());
}

std::size_t Monomial::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& en : entries()) {
        auto x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(en.var.code())) << 32)
                 ^ static_cast<std::uint32_t>(en.exp);
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        h = (h ^ x) * 0xc4ceb9fe1a85ec53ULL;
    }
    return h;
}

}  // namespace arcmot
