#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fingeo {

/// Integer encoding of a field element: the residue polynomial
/// c_0 + c_1 x + ... + c_{h-1} x^{h-1} is stored as sum c_i p^i.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n);

/// Splits q = p^h; returns false when q is not a prime power.
bool prime_power_decompose(std::uint64_t q, std::uint32_t& p, std::uint32_t& h);

/// Polynomials over GF(p), coefficients low degree first, no trailing zeros.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// GF(p^h) with a fixed irreducible modulus. Immutable after construction.
class GaloisField {
 public:
  /// Builds GF(p^h) using the lexicographically smallest monic irreducible
  /// polynomial of degree h (coefficients compared low degree first).
  static std::shared_ptr<const GaloisField> make(
      std::uint32_t p, std::uint32_t h,
      std::uint32_t max_order = kDefaultMaxFieldOrder);

  /// Same as make() with q = p^h decomposed first.
  static std::shared_ptr<const GaloisField> of_order(
      std::uint64_t q, std::uint32_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t h() const noexcept { return h_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Full monic modulus, low degree first (h + 1 entries); empty when h = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// "GF(p^h)[c0,c1,...,1]".
  std::string descriptor() const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws PreconditionError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// A generator of the multiplicative group.
  Elem primitive() const noexcept { return exp_[1]; }

  /// Reduces an integer into the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;

  bool contains(Elem a) const noexcept { return a < q_; }

  bool operator==(const GaloisField& other) const noexcept {
    return p_ == other.p_ && h_ == other.h_ && modulus_ == other.modulus_;
  }

 private:
  GaloisField(std::uint32_t p, std::uint32_t h,
              std::vector<std::uint32_t> modulus);

  Elem poly_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t h_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;           // 2(q-1) entries, exp_[i] = g^i
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Value type pairing an element with its field; arithmetic across
/// different fields throws PreconditionError.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const GaloisField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && *a.field_ == *b.field_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

}  // namespace fingeo
