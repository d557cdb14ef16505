#pragma once

// Brute-force construction and full enumeration of small finite groups,
// plus independent oracles for Sylow numbers.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sylow/finitefield.hpp"
#include "sylow/numtheory.hpp"

namespace sylow {

using Word = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// How elements of one concrete group family are encoded and multiplied.
/// Every encoding has a fixed width and is canonical: equal elements have
/// equal words.
class Representation {
 public:
  virtual ~Representation() = default;
  virtual std::size_t width() const = 0;
  virtual std::vector<Word> identity() const = 0;
  /// out = a * b, canonicalized. `out` never aliases `a` or `b`.
  virtual void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const = 0;
  virtual std::string format(std::span<const Word> element) const = 0;
};

/// Permutations of {0..n-1} as image arrays; (a*b)(x) = a(b(x)).
class PermutationRep final : public Representation {
 public:
  explicit PermutationRep(int degree);
  std::size_t width() const override { return static_cast<std::size_t>(degree_); }
  std::vector<Word> identity() const override;
  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const override;
  std::string format(std::span<const Word> element) const override;

 private:
  int degree_;
};

struct Perm {
  std::vector<Word> images;

  static Perm cycle(int degree, std::initializer_list<Word> points);
};

/// n x n matrix over a field, row-major field indices.
struct ProjMatrix {
  int n = 0;
  std::vector<Field::Index> entries;

  Field::Index at(int row, int col) const { return entries[static_cast<std::size_t>(row * n + col)]; }
};

Field::Index determinant(const Field& field, const ProjMatrix& m);

/// Replaces m by the representative of m * Z, Z = {lambda I : lambda^n = 1},
/// whose first nonzero entry (row-major) has the smallest field index.
void canonicalize(const Field& field, ProjMatrix& m);

/// Matrices over a field; projective mode quotients by the scalar matrices of
/// determinant one via `canonicalize`.
class MatrixRep final : public Representation {
 public:
  MatrixRep(std::shared_ptr<const Field> field, int n, bool projective);
  std::size_t width() const override { return static_cast<std::size_t>(n_ * n_); }
  std::vector<Word> identity() const override;
  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const override;
  std::string format(std::span<const Word> element) const override;

  const Field& field() const { return *field_; }
  int dimension() const { return n_; }
  bool projective() const { return projective_; }

 private:
  std::shared_ptr<const Field> field_;
  int n_;
  bool projective_;
  std::vector<Field::Index> scalars_;  // lambda with lambda^n = 1
};

/// Affine maps x -> a x + b on a field, encoded (a, b).
/// (a1, b1) * (a2, b2) is x -> a1 (a2 x + b2) + b1.
class AffineRep final : public Representation {
 public:
  explicit AffineRep(std::shared_ptr<const Field> field);
  std::size_t width() const override { return 2; }
  std::vector<Word> identity() const override { return {1, 0}; }
  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const override;
  std::string format(std::span<const Word> element) const override;

 private:
  std::shared_ptr<const Field> field_;
};

/// A fully enumerated finite group. Immutable after construction and safe
/// to share across threads.
class FiniteGroup {
 public:
  using Elem = std::uint32_t;

  const std::string& name() const { return name_; }
  Integer order() const { return static_cast<Integer>(count_); }
  Elem identity() const { return identity_; }
  const Representation& representation() const { return *rep_; }

  std::span<const Word> code(Elem g) const;
  std::optional<Elem> find(std::span<const Word> code) const;
  Elem mul(Elem a, Elem b) const;
  Elem inverse(Elem g) const { return inverses_[g]; }
  /// Least k >= 1 with g^k = identity.
  Integer element_order(Elem g) const { return orders_[g]; }
  Elem power(Elem g, Integer k) const;
  std::string format(Elem g) const { return rep_->format(code(g)); }

 private:
  friend FiniteGroup closure(std::shared_ptr<const Representation>, const std::vector<std::vector<Word>>&,
                             std::size_t, std::string);

  class CodeIndex {
   public:
    void reset(std::size_t expected);
    std::optional<Elem> find(std::span<const Word> code, const std::vector<Word>& data, std::size_t width) const;
    void insert(Elem e, const std::vector<Word>& data, std::size_t width);

   private:
    static std::uint64_t hash(std::span<const Word> code);
    std::vector<Elem> slots_;
    std::size_t used_ = 0;
  };

  void finalize();

  std::string name_;
  std::shared_ptr<const Representation> rep_;
  std::size_t width_ = 0;
  std::size_t count_ = 0;
  std::vector<Word> data_;
  CodeIndex index_;
  Elem identity_ = 0;
  std::vector<Elem> inverses_;
  std::vector<Integer> orders_;
};

/// Breadth-first closure of `generators` under right multiplication.
/// Elements are numbered in insertion order starting from the identity, so
/// the same generators always give the same numbering.
FiniteGroup closure(std::shared_ptr<const Representation> rep, const std::vector<std::vector<Word>>& generators,
                    std::size_t cap = kDefaultClosureCap, std::string name = {});

/// A_n for 3 <= n <= 8, generated by the 3-cycles (0 1 k).
FiniteGroup alternating_group(int n, std::size_t cap = kDefaultClosureCap);

/// SL_n(q) or its projective image; generated by the transvections
/// I + w^k E_ij (i != j, 0 <= k < f) with w a primitive element.
FiniteGroup special_linear_closure(int n, Integer q, bool projective, std::size_t cap = kDefaultClosureCap);

/// PSL_n(q) for n in {2, 3}.
FiniteGroup psl(int n, Integer q, std::size_t cap = kDefaultClosureCap);

/// Sp_4(2), the stabilizer in GL_4(2) of the standard alternating form.
FiniteGroup sp4_2(std::size_t cap = kDefaultClosureCap);

/// Affine group {x -> a x + b} on GF(r^t) with a in the order-p subgroup of
/// the multiplicative group. Requires p | r^t - 1.
FiniteGroup frobenius_affine(Integer p, Integer r, Integer t, std::size_t cap = kDefaultClosureCap);

/// |PSL_n(q)| by the order formula.
Integer psl_order(int n, Integer q);

Integer element_order(const FiniteGroup& g, FiniteGroup::Elem element);

/// Sorted list of element ids.
using Subgroup = std::vector<FiniteGroup::Elem>;

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& generators);

/// |{x in G : x S x^-1 = S}|. Throws DomainError if S is not closed.
Integer normalizer_order(const FiniteGroup& g, const Subgroup& subgroup);

/// p-part of |G|.
Integer p_part(Integer order, Integer p);

enum class SylowMethod { ElementCount, ConjugacyOrbit, SubgroupTower };

std::string to_string(SylowMethod method);

struct SylowReport {
  Integer p;
  Integer group_order_p_part;
  Integer n_p;
  SylowMethod method;
  Integer r;  // n_p = 1 + r p
};

/// n_p = #(elements of order p) / (p - 1). Requires p || |G|.
SylowReport count_sylow_by_elements(const FiniteGroup& g, Integer p);

/// n_p = size of the conjugation orbit of <g> for the first element g of
/// order p. Requires p || |G|.
SylowReport count_sylow_by_conjugacy(const FiniteGroup& g, Integer p);

/// Builds a Sylow p-subgroup by repeatedly adjoining a p-element of its
/// normalizer, then n_p = |G| / |N_G(P)|. Valid for any p dividing |G|.
SylowReport count_sylow_by_tower(const FiniteGroup& g, Integer p);

/// A Sylow p-subgroup: <g> for the first element of order p when p || |G|,
/// otherwise the tower construction.
Subgroup sylow_subgroup(const FiniteGroup& g, Integer p);

}  // namespace sylow
