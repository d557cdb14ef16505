#pragma once

// Closed-form orders and Sylow numbers for finite simple group families,
// and an exact auditor for the inequality chains that bound them.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sylow/numtheory.hpp"

namespace sylow {

enum class FamilyTag {
  Alt,
  PSL,
  PSU,
  PSp,
  OmegaOdd,
  OmegaPlus,
  OmegaMinus,
  Sz,
  G2,
  Ree2G2,
  TriD4,
  F4,
  TwoF4,
  E6,
  TwoE6,
  E7,
  E8,
};

/// A family member with validated parameters. `dimension` is the displayed
/// index (n for A_n and PSL_n, 2n for PSp_2n, 2n+1 for Omega_2n+1, ...);
/// it is zero for exceptional types. `q` is zero for A_n.
class FamilyId {
 public:
  static FamilyId alt(Integer n);
  static FamilyId psl(Integer n, Integer q);
  static FamilyId psu(Integer n, Integer q);
  static FamilyId psp(Integer dimension, Integer q);
  static FamilyId omega_odd(Integer dimension, Integer q);
  static FamilyId omega_plus(Integer dimension, Integer q);
  static FamilyId omega_minus(Integer dimension, Integer q);
  /// Exceptional and twisted types, parameterized by q alone.
  static FamilyId exceptional(FamilyTag tag, Integer q);

  FamilyTag tag() const { return tag_; }
  Integer dimension() const { return dimension_; }
  Integer q() const { return q_; }
  /// e.g. "PSL3(3)", "A5", "2F4(8)".
  std::string name() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;

 private:
  FamilyId(FamilyTag tag, Integer dimension, Integer q) : tag_(tag), dimension_(dimension), q_(q) {}

  FamilyTag tag_;
  Integer dimension_;
  Integer q_;
};

std::string to_string(FamilyTag tag);

/// Exact order of the simple group.
BigInt group_order(const FamilyId& family);

struct FormulaResult {
  BigInt value;
  std::string formula_id;
};

/// n_p(GL_e(q)) with p a primitive prime divisor of q^e - 1:
/// q^(e(e-1)/2) (q-1)(q^2-1)...(q^(e-1)-1) / e.
FormulaResult gl_np(Integer e, Integer q, Integer p);

/// n_p(GU_e(q)) with e the order of -q modulo p:
/// q^(e(e-1)/2) (q+1)(q^2-1)...(q^(e-1)-(-1)^(e-1)) / e.
/// Also accepts q = 2, e = 3, p | q^e + 1, where 2^6 - 1 has no primitive
/// prime divisor.
FormulaResult gu_np(Integer e, Integer q, Integer p);

enum class SymplecticCase { Primitive2e, PrimitiveE };

/// n_p(Sp_2e(q)) for p primitive for q^(2e) - 1 (Primitive2e) or for
/// q^e - 1 with e odd (PrimitiveE).
FormulaResult sp_np(Integer e, Integer q, Integer p, SymplecticCase which);

enum class OmegaPlusVariant { SubgroupE, FullN };

/// n_p(POmega+_2(e+1)(q)) with p primitive for q^(2e) - 1 (SubgroupE), or
/// n_p(POmega+_2n(q)) with p primitive for q^(2(n-1)) - 1 (FullN).
FormulaResult omega_plus_np(OmegaPlusVariant variant, Integer e_or_n, Integer q, Integer p);

/// n_p(PSL_2(q)) for p in {q, q + 1, q - 1}, p an odd prime, q >= 4.
FormulaResult psl2_np(Integer q, Integer p);

/// n_p(A_n) = n! / ((n-p)! p (p-1)) for 5 <= n and p <= n < 2p.
FormulaResult alternating_np(Integer n, Integer p);

enum class TheoremCase { PSL2P, PSL3_3, PSL2PMinus1, PSL2PPlus1 };

std::string to_string(TheoremCase c);

/// The four simple groups with n_p < p^2:
///   PSL2P        PSL_2(p), p >= 5:            1 + p
///   PSL3_3       PSL_3(3), p = 13:            144
///   PSL2PMinus1  PSL_2(p-1), p > 3 Fermat:    1 + (p-3)p/2
///   PSL2PPlus1   PSL_2(p+1), p > 3 Mersenne:  1 + (p+3)p/2
FormulaResult theorem_family_np(TheoremCase c, Integer p);

/// The group realizing a theorem case at p.
FamilyId theorem_family(TheoremCase c, Integer p);

/// Lower bound on the minimal permutation degree, for F4, 2F4, E6, 2E6,
/// E7 and E8.
BigInt minimal_degree_bound(const FamilyId& family);

// ---------------------------------------------------------------------------
// Inequality audit

/// A parameter point. `e` doubles as n or p where a chain is indexed that
/// way; it is zero for chains that depend on q alone.
struct AuditPoint {
  Integer q = 0;
  Integer e = 0;
};

enum class Relation { Less, LessEq, Greater, GreaterEq, Equal };

std::string to_string(Relation r);

struct ChainTerm {
  std::string text;
  std::function<Rational(const AuditPoint&)> eval;
};

/// terms[0] rel[0] terms[1] rel[1] terms[2] ... evaluated exactly wherever
/// `applies` holds.
struct InequalityChain {
  std::string family;  // e.g. "linear"
  std::string label;   // e.g. "e >= 6"
  std::vector<ChainTerm> terms;
  std::vector<Relation> relations;
  bool uses_e = true;
  std::function<bool(const AuditPoint&)> applies;
};

const std::vector<InequalityChain>& registered_chains();

struct ChainSummary {
  std::string family;
  std::string label;
  std::string statement;
  Integer points = 0;
  Integer checks = 0;
  Integer violations = 0;
};

struct AuditViolation {
  std::string family;
  std::string label;
  AuditPoint point;
  std::size_t link = 0;
  std::string lhs;
  std::string relation;
  std::string rhs;
};

struct AuditReport {
  Integer q_max = 0;
  Integer e_max = 0;
  std::vector<ChainSummary> chains;
  std::vector<AuditViolation> violations;
  Integer total_checks = 0;
};

/// q ranges over prime powers in [2, q_max] and e over [1, e_max].
AuditReport proof_inequality_audit(Integer q_max, Integer e_max);

/// Evaluates one chain at one point; returns the index of the first failing
/// link, or -1.
int check_chain(const InequalityChain& chain, const AuditPoint& point);

std::string statement(const InequalityChain& chain);

}  // namespace sylow
