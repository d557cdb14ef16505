#pragma once

// Explicit arithmetic in GF(r^f) using a polynomial basis.
//
// Elements have two equivalent forms: a coefficient vector (low degree
// first) and a dense index sum(c_i * r^i) in [0, q). The index order is the
// canonical enumeration order; it is also the order in which candidate
// moduli are searched.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sylow/numtheory.hpp"

namespace sylow {

struct FieldSpec {
  Integer characteristic;  // r
  int degree;              // f
  /// Monic modulus of degree f, low degree first (size f + 1).
  std::vector<int> modulus;

  Integer order() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldElement {
  std::vector<int> coefficients;  // size f, each in [0, r)

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Lexicographically first monic irreducible of degree f over GF(r);
/// requires r prime, f >= 1 and r^f <= 2^20.
FieldSpec field_create(Integer r, int f);

bool is_irreducible(Integer r, std::span<const int> monic_poly);

/// Table-backed field. Immutable after construction.
class Field {
 public:
  using Index = std::uint32_t;
  static constexpr Integer kMaxOrder = Integer{1} << 20;

  explicit Field(FieldSpec spec);
  Field(Integer r, int f) : Field(field_create(r, f)) {}

  const FieldSpec& spec() const { return spec_; }
  Integer characteristic() const { return spec_.characteristic; }
  int degree() const { return spec_.degree; }
  Index order() const { return order_; }

  FieldElement element(Index index) const;
  Index index_of(const FieldElement& e) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  Index pow(Index a, Integer exponent) const;

  /// Smallest element (in index order) of multiplicative order q - 1.
  FieldElement multiplicative_generator() const { return element(generator_); }
  Index generator_index() const { return generator_; }

  /// Multiplicative order of a nonzero element.
  Integer element_order(Index a) const;

  std::string format(Index a) const;

 private:
  Index mul_slow(Index a, Index b) const;

  FieldSpec spec_;
  Index order_;
  Index generator_ = 0;
  std::vector<Index> log_;  // log_[a] for a != 0
  std::vector<Index> exp_;  // exp_[k] = generator^k, size q - 1
  std::vector<Index> add_table_;  // q * q entries, only for q <= kAddTableLimit
  static constexpr Index kAddTableLimit = 256;
  Index add_digits(Index a, Index b) const;
};

std::string format_polynomial(std::span<const int> coefficients);

}  // namespace sylow
