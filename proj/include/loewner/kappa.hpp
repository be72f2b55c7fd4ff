#pragma once

#include <cmath>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "loewner/error.hpp"

namespace loewner {

struct Ratio {
  std::int64_t num;
  std::int64_t den;
};

/// The SLE parameter. Optionally remembers an exact rational value so that
/// parameter-integrality questions (4/kappa, 8/kappa) can be answered exactly.
class Kappa {
 public:
  explicit Kappa(double value) : value_(value) {
    require(std::isfinite(value) && value > 0.0, "kappa must be finite and positive");
  }

  static Kappa ratio(std::int64_t num, std::int64_t den) {
    require(num > 0 && den > 0, "kappa ratio must have positive terms");
    const std::int64_t g = std::gcd(num, den);
    Kappa k(static_cast<double>(num) / static_cast<double>(den));
    k.exact_ = Ratio{num / g, den / g};
    return k;
  }

  /// Accepts "4", "2.5" or "8/3".
  static Kappa parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      return ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    require(res.ec == std::errc() && res.ptr == end, "cannot parse kappa '" + std::string(text) + "'");
    return Kappa(v);
  }

  double value() const noexcept { return value_; }
  double sqrt() const noexcept { return std::sqrt(value_); }
  const std::optional<Ratio>& exact() const noexcept { return exact_; }

  /// 4/kappa, exactly rounded from the rational form when available.
  double four_over() const noexcept {
    if (exact_) return 4.0 * static_cast<double>(exact_->den) / static_cast<double>(exact_->num);
    return 4.0 / value_;
  }

  /// Tail exponent 8/kappa of the speed measure density.
  double tail_exponent() const noexcept { return 2.0 * four_over(); }

  /// kappa < 8, decided on the rational form when available.
  bool subcritical() const noexcept {
    if (exact_) return exact_->num < 8 * exact_->den;
    return value_ < 8.0;
  }

  std::string to_string() const {
    if (exact_) {
      if (exact_->den == 1) return std::to_string(exact_->num);
      return std::to_string(exact_->num) + "/" + std::to_string(exact_->den);
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value_);
    return std::string(buf, res.ptr);
  }

 private:
  static std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    require(res.ec == std::errc() && res.ptr == end, "cannot parse integer '" + std::string(s) + "'");
    return v;
  }

  double value_;
  std::optional<Ratio> exact_;
};

}  // namespace loewner
