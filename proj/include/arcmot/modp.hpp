#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "arcmot/factored_rational.hpp"

namespace arcmot {

/// Arithmetic in the prime field of order 2^61 - 1.
namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
std::uint64_t reduce(const mpz_class& c);

using Point = std::map<VarId, std::uint64_t>;

/// Value of x at a point assigning a nonzero residue to each variable of x,
/// or nullopt if a denominator factor vanishes there.
std::optional<std::uint64_t> evaluate(const FactoredRational& x, const Point& point);

}  // namespace modp

/// Randomized identity test: compares x and y at `trials` uniform points of
/// the prime field, resampling points where a denominator vanishes.
/// Deterministic given seed. A false result is always a true inequality;
/// a true result is wrong with probability at most trials * deg / p.
/// Throws DegeneratePoint after more than 100 * trials consecutive
/// degenerate samples.
bool rat_eq_modp(const FactoredRational& x, const FactoredRational& y, int trials, std::uint64_t seed);

}  // namespace arcmot
