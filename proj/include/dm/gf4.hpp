#pragma once
// Arithmetic in the four-element field {0, 1, w, W} where W = w^2 = w + 1,
// together with its two-element subfield {0, 1}.
//
// Elements are stored as two-bit codes: bit 0 is the coefficient of 1 and
// bit 1 the coefficient of w, so 0 -> 0, 1 -> 1, w -> 2, W -> 3.  Addition
// is XOR.  The map inv swaps w and W; it is the Frobenius square map and
// coincides with multiplicative inverse on nonzero elements.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dm/error.hpp"

namespace dm {

enum class Field : uint8_t { Gf2, Gf4 };

// Involutive automorphism selector.  Inv is only meaningful over Gf4;
// over Gf2 both choices act as the identity.
enum class Aut : uint8_t { Id, Inv };

class Gf4 {
 public:
  constexpr Gf4() : code_(0) {}
  constexpr explicit Gf4(uint8_t code) : code_(static_cast<uint8_t>(code & 3u)) {}

  constexpr uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr Gf4 operator+(Gf4 x, Gf4 y) {
    return Gf4(static_cast<uint8_t>(x.code_ ^ y.code_));
  }
  // Characteristic 2: subtraction and negation are addition and identity.
  friend constexpr Gf4 operator-(Gf4 x, Gf4 y) { return x + y; }
  constexpr Gf4 operator-() const { return *this; }

  friend constexpr Gf4 operator*(Gf4 x, Gf4 y) {
    return Gf4(kMul[x.code_][y.code_]);
  }

  Gf4& operator+=(Gf4 y) { code_ ^= y.code_; return *this; }
  Gf4& operator*=(Gf4 y) { code_ = kMul[code_][y.code_]; return *this; }

  friend constexpr bool operator==(Gf4 x, Gf4 y) { return x.code_ == y.code_; }
  friend constexpr bool operator!=(Gf4 x, Gf4 y) { return x.code_ != y.code_; }

  // Multiplicative inverse; x = 1 and the two primitive elements swap.
  Gf4 inverse() const {
    if (code_ == 0) throw std::domain_error("inverse of zero");
    return Gf4(kInv[code_]);
  }

  constexpr bool in_field(Field f) const {
    return f == Field::Gf4 || code_ < 2;
  }

 private:
  uint8_t code_;

  static constexpr uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  static constexpr uint8_t kInv[4] = {0, 1, 3, 2};
};

inline constexpr Gf4 gf_zero{0};
inline constexpr Gf4 gf_one{1};
inline constexpr Gf4 gf_w{2};
inline constexpr Gf4 gf_W{3};

// The nontrivial automorphism of the four-element field: fixes 0 and 1,
// swaps w and W.  Equals x^2, and x^{-1} for x != 0.
constexpr Gf4 inv(Gf4 x) {
  uint8_t c = x.code();
  return Gf4(static_cast<uint8_t>(c < 2 ? c : c ^ 1u));
}

constexpr Gf4 apply_aut(Aut a, Gf4 x) { return a == Aut::Inv ? inv(x) : x; }

inline std::string to_token(Gf4 x) {
  static const char* const tok[4] = {"0", "1", "w", "W"};
  return tok[x.code()];
}

inline Gf4 from_token(const std::string& t) {
  if (t == "0") return gf_zero;
  if (t == "1") return gf_one;
  if (t == "w") return gf_w;
  if (t == "W") return gf_W;
  throw Error("bad scalar token '" + t + "' (expected 0, 1, w or W)");
}

inline std::string field_name(Field f) { return f == Field::Gf2 ? "gf2" : "gf4"; }

}  // namespace dm
