#include "arcmot/var.hpp"

#include <charconv>
#include <stdexcept>

namespace arcmot {

VarId VarId::lam(std::int32_t index)
{
    if (index < 2 || index > kMaxLambda) {
        throw std::invalid_argument("lambda index must be in [2, 2^24], got " + std::to_string(index));
    }
    return VarId(index);
}

VarId::Kind VarId::kind() const
{
    if (code_ == 0) return Kind::T;
    if (code_ == 1) return Kind::L;
    if (code_ == kMaxLambda + 1) return Kind::BigA;
    if (code_ == kMaxLambda + 2) return Kind::Tau;
    return Kind::Lam;
}

std::string VarId::name() const
{
    switch (kind()) {
    case Kind::T: return "t";
    case Kind::L: return "L";
    case Kind::BigA: return "A";
    case Kind::Tau: return "tau";
    case Kind::Lam: break;
    }
    return "lam" + std::to_string(code_);
}

std::string VarId::latex() const
{
    switch (kind()) {
    case Kind::T: return "t";
    case Kind::L: return "\\mathbb{L}";
    case Kind::BigA: return "A";
    case Kind::Tau: return "\\tau";
    case Kind::Lam: break;
    }
    return "\\lambda_{" + std::to_string(code_) + "}";
}

std::optional<VarId> VarId::from_name(std::string_view name)
{
    if (name == "t") return t();
    if (name == "L") return L();
    if (name == "A") return big_a();
    if (name == "tau") return tau();
    if (name.starts_with("lam") && name.size() > 3) {
        std::int32_t idx = 0;
        auto digits = name.substr(3);
        if (digits.front() == '0') return std::nullopt;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
        if (idx < 2 || idx > kMaxLambda) return std::nullopt;
        return lam(idx);
    }
    return std::nullopt;
}

}  // namespace arcmot
