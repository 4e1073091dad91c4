#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hhb::la {

/// A field element. Elements of GF(p^m) are polynomial residues
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} encoded as the integer sum c_t p^t.
/// Zero encodes as 0 and one as 1; the prime subfield is {0, ..., p-1}.
using Elt = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field GF(p^m) with a deterministic defining polynomial.
///
/// The modulus is the monic irreducible polynomial of degree m whose
/// coefficient vector (c_0, ..., c_{m-1}) is least when read as the base-p
/// integer sum c_t p^t, among those with c_0 != 0. For m = 1 this gives x + 1.
///
/// Instances are immutable; obtain them through ff_make, which caches one
/// instance per (p, m).
class Field {
 public:
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  bool is_prime() const { return m_ == 1; }

  /// Coefficients c_0..c_m of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  /// Throws hhb::Error on zero.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;

  /// Image of an integer under Z -> GF(p).
  Elt from_int(std::int64_t v) const;

  /// a^(p^k).
  Elt frobenius(Elt a, unsigned k = 1) const;
  /// Inverse of frobenius(., k).
  Elt frobenius_inverse(Elt a, unsigned k = 1) const;

  /// Coefficient of x^t in the residue representing a.
  std::uint32_t digit(Elt a, unsigned t) const;

  /// y += c * x, elementwise. Spans must have equal length.
  void axpy(std::span<Elt> y, Elt c, std::span<const Elt> x) const;
  /// y *= c, elementwise.
  void scale(std::span<Elt> y, Elt c) const;

  std::string to_string(Elt a) const;
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }

  // Use ff_make.
  Field(std::uint32_t p, unsigned m);

 private:
  Elt mul_poly(Elt a, Elt b) const;
  Elt add_digits(Elt a, Elt b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t reduction_mask_ = 0;  // p = 2: modulus without the leading term

  // Log tables for non-prime fields up to kTableLimit elements.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // Addition table for odd p when q is small.
  std::vector<Elt> add_table_;
  // Negation table for odd p, non-prime fields.
  std::vector<Elt> neg_table_;
};

/// Returns GF(p^m). Throws hhb::Error if p is not prime, m == 0, or p^m
/// does not fit the element encoding.
FieldPtr ff_make(std::uint32_t p, unsigned m);

bool is_prime(std::uint64_t n);

/// True when the monic polynomial with coefficients c_0..c_m (low to high)
/// is irreducible over GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

}  // namespace hhb::la
