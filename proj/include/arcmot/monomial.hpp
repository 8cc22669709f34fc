#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

#include "arcmot/var.hpp"

namespace arcmot {

/// A Laurent monomial: a finite map VarId -> nonzero exponent.
///
/// Entries are kept sorted by VarId with no zero exponents, so the empty map
/// is the unit monomial. Storage is inline; a monomial may mention at most
/// kCapacity distinct variables.
class Monomial {
public:
    struct Entry {
        VarId var;
        std::int32_t exp;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    static constexpr std::size_t kCapacity = 14;

    Monomial() = default;
    Monomial(VarId v, std::int32_t e);
    Monomial(std::initializer_list<std::pair<VarId, std::int32_t>> entries);

    bool is_unit() const { return size_ == 0; }
    std::size_t size() const { return size_; }
    std::span<const Entry> entries() const { return {entries_.data(), size_}; }
    std::int32_t exponent(VarId v) const;
    bool contains(VarId v) const { return exponent(v) != 0; }

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
    Monomial inverse() const;
    Monomial pow(std::int32_t e) const;

    /// Componentwise minimum of exponents, absent variables counting as 0.
    static Monomial gcd(const Monomial& a, const Monomial& b);

    /// Lexicographic comparison of dense exponent vectors in VarId order.
    /// This order is compatible with multiplication.
    int compare(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b);
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.compare(b) < 0; }

    std::size_t hash() const;

private:
    void push(VarId v, std::int32_t e);

    std::array<Entry, kCapacity> entries_{};
    std::uint8_t size_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace arcmot
