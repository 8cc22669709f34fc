#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace arcmot {

/// A variable of the fixed universe {t, L, lam2, lam3, ..., A, tau}.
///
/// The total order is t < L < lam2 < lam3 < ... < A < tau. Every canonical
/// form in the library (term order, factor orientation) is defined against it.
class VarId {
public:
    enum class Kind { T, L, Lam, BigA, Tau };

    static constexpr std::int32_t kMaxLambda = 1 << 24;

    constexpr VarId() = default;  // t

    static constexpr VarId t() { return VarId(0); }
    static constexpr VarId L() { return VarId(1); }
    static VarId lam(std::int32_t index);
    static constexpr VarId big_a() { return VarId(kMaxLambda + 1); }
    static constexpr VarId tau() { return VarId(kMaxLambda + 2); }

    Kind kind() const;
    /// Index i of lam_i; only meaningful for Kind::Lam.
    std::int32_t lam_index() const { return code_; }
    std::int32_t code() const { return code_; }

    /// ASCII name used by the machine formats: "t", "L", "lam2", "A", "tau".
    std::string name() const;
    std::string latex() const;
    static std::optional<VarId> from_name(std::string_view name);

    friend constexpr auto operator<=>(VarId, VarId) = default;

private:
    constexpr explicit VarId(std::int32_t code) : code_(code) {}
    std::int32_t code_ = 0;
};

}  // namespace arcmot
