#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace coarse {

/// Extended distance: a nonnegative integer or infinity.
///
/// Infinity is a first-class value (disconnected pairs really are
/// infinitely far apart), absorbing under addition and larger than
/// every finite distance.
class ExtDist {
 public:
  constexpr ExtDist() : raw_(0) {}

  constexpr explicit ExtDist(std::int64_t d) : raw_(d) {
    if (d < 0) throw std::invalid_argument("ExtDist: negative distance");
  }

  static constexpr ExtDist infinity() {
    ExtDist d;
    d.raw_ = kInf;
    return d;
  }

  constexpr bool is_inf() const { return raw_ == kInf; }
  constexpr bool is_finite() const { return raw_ != kInf; }

  /// Finite value; throws on infinity.
  constexpr std::int64_t value() const {
    if (is_inf()) throw std::logic_error("ExtDist: value() on infinity");
    return raw_;
  }

  friend constexpr ExtDist operator+(ExtDist a, ExtDist b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    return ExtDist(a.raw_ + b.raw_);
  }

  friend constexpr bool operator==(ExtDist a, ExtDist b) { return a.raw_ == b.raw_; }

  friend constexpr std::strong_ordering operator<=>(ExtDist a, ExtDist b) {
    return a.key() <=> b.key();
  }

  std::string str() const { return is_inf() ? "inf" : std::to_string(raw_); }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

  // Maps infinity above every finite value.
  constexpr std::uint64_t key() const { return static_cast<std::uint64_t>(raw_); }

  std::int64_t raw_;
};

}  // namespace coarse
