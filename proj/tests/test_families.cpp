#include <gtest/gtest.h>

#include "sylow/families.hpp"
#include "sylow/groupengine.hpp"

using namespace sylow;

namespace {

Integer v(const FormulaResult& r) { return to_integer(r.value); }

BigInt big(const char* digits) { return BigInt(digits); }

}  // namespace

TEST(FamilyId, ValidationAndNames) {
  EXPECT_EQ(FamilyId::alt(5).name(), "A5");
  EXPECT_EQ(FamilyId::psl(3, 3).name(), "PSL3(3)");
  EXPECT_EQ(FamilyId::exceptional(FamilyTag::TwoF4, 8).name(), "2F4(8)");
  EXPECT_EQ(FamilyId::omega_plus(8, 2).name(), "Omega+8(2)");
  EXPECT_THROW(FamilyId::alt(4), DomainError);
  EXPECT_THROW(FamilyId::psl(2, 3), DomainError);
  EXPECT_THROW(FamilyId::psl(3, 6), DomainError);
  EXPECT_THROW(FamilyId::psu(3, 2), DomainError);
  EXPECT_THROW(FamilyId::exceptional(FamilyTag::Sz, 2), DomainError);
  EXPECT_THROW(FamilyId::exceptional(FamilyTag::Sz, 16), DomainError);
  EXPECT_THROW(FamilyId::exceptional(FamilyTag::Ree2G2, 3), DomainError);
  EXPECT_THROW(FamilyId::exceptional(FamilyTag::Ree2G2, 9), DomainError);
  EXPECT_NO_THROW(FamilyId::exceptional(FamilyTag::Ree2G2, 27));
  EXPECT_THROW(FamilyId::exceptional(FamilyTag::PSL, 4), DomainError);
  EXPECT_THROW(FamilyId::omega_odd(7, 4), DomainError);
  EXPECT_THROW(FamilyId::omega_plus(7, 3), DomainError);
}

TEST(GroupOrder, KnownSimpleGroupOrders) {
  EXPECT_EQ(group_order(FamilyId::alt(5)), 60);
  EXPECT_EQ(group_order(FamilyId::alt(8)), 20160);
  EXPECT_EQ(group_order(FamilyId::psl(3, 4)), 20160);
  EXPECT_EQ(group_order(FamilyId::psl(2, 16)), 4080);
  EXPECT_EQ(group_order(FamilyId::psu(3, 3)), 6048);
  EXPECT_EQ(group_order(FamilyId::psu(4, 2)), 25920);
  EXPECT_EQ(group_order(FamilyId::psp(4, 3)), 25920);
  EXPECT_EQ(group_order(FamilyId::psp(6, 2)), 1451520);
  EXPECT_EQ(group_order(FamilyId::omega_odd(7, 3)), 4585351680);
  EXPECT_EQ(group_order(FamilyId::omega_plus(8, 2)), 174182400);
  EXPECT_EQ(group_order(FamilyId::omega_minus(8, 2)), 197406720);
  EXPECT_EQ(group_order(FamilyId::omega_minus(4, 4)), group_order(FamilyId::psl(2, 16)));
  EXPECT_EQ(group_order(FamilyId::omega_plus(6, 2)), 20160);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::Sz, 8)), 29120);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::Sz, 32)), 32537600);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::G2, 3)), 4245696);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::Ree2G2, 27)), 10073444472);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::TriD4, 2)), 211341312);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::F4, 2)), big("3311126603366400"));
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::TwoF4, 8)), big("264905352699586176614400"));
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::E6, 2)), big("214841575522005575270400"));
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::TwoE6, 2)), big("76532479683774853939200"));
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::E7, 2)),
            big("7997476042075799759100487262680802918400"));
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::E7, 3)) * 2,
            boost::multiprecision::pow(BigInt(3), 63) * (boost::multiprecision::pow(BigInt(3), 18) - 1) *
                (boost::multiprecision::pow(BigInt(3), 14) - 1) * (boost::multiprecision::pow(BigInt(3), 12) - 1) *
                (boost::multiprecision::pow(BigInt(3), 10) - 1) * (boost::multiprecision::pow(BigInt(3), 8) - 1) *
                (boost::multiprecision::pow(BigInt(3), 6) - 1) * 8);
  EXPECT_EQ(group_order(FamilyId::exceptional(FamilyTag::E8, 2)),
            big("337804753143634806261388190614085595079991692242467651576160959909068800000"));
}

TEST(GroupOrder, MatchesBruteForceClosure) {
  EXPECT_EQ(group_order(FamilyId::alt(6)), alternating_group(6).order());
  EXPECT_EQ(group_order(FamilyId::psl(2, 8)), psl(2, 8).order());
  EXPECT_EQ(group_order(FamilyId::psl(3, 3)), psl(3, 3).order());
  EXPECT_EQ(group_order(FamilyId::psp(4, 2)), sp4_2().order());
}

TEST(LinearFormula, QuotedValues) {
  EXPECT_EQ(v(gl_np(3, 3, 13)), 144);
  EXPECT_EQ(v(gl_np(3, 2, 7)), 8);
  EXPECT_EQ(v(gl_np(3, 5, 31)), 4000);
  EXPECT_EQ(v(gl_np(3, 4, 7)), 960);
  EXPECT_EQ(v(gl_np(4, 2, 5)), 336);
  EXPECT_THROW(gl_np(3, 3, 7), PreconditionError);  // 7 is primitive for 3^6 - 1
  EXPECT_THROW(gl_np(3, 3, 3), PreconditionError);
  EXPECT_THROW(gl_np(3, 6, 7), DomainError);
}

TEST(UnitaryFormula, QuotedValues) {
  EXPECT_EQ(v(gu_np(3, 3, 7)), 288);
  EXPECT_EQ(v(gu_np(3, 2, 3)), 24);
  EXPECT_THROW(gu_np(3, 3, 13), PreconditionError);
}

// The displayed unitary formula at (e, q, p) = (4, 2, 5) gives 1296; the
// value 336 quoted next to it is n_5(GL_4(2)) = n_5(A_8), not a unitary value.
TEST(UnitaryFormula, FourTwoFiveIsNotTheLinearValue) {
  EXPECT_EQ(v(gu_np(4, 2, 5)), 1296);
  EXPECT_EQ(v(gl_np(4, 2, 5)), 336);
  EXPECT_EQ(count_sylow_by_elements(alternating_group(8), 5).n_p, 336);
}

TEST(SymplecticFormula, Cases) {
  EXPECT_EQ(v(sp_np(2, 2, 5, SymplecticCase::Primitive2e)), 36);
  EXPECT_EQ(v(sp_np(2, 3, 5, SymplecticCase::Primitive2e)), 1296);
  EXPECT_EQ(v(sp_np(3, 2, 7, SymplecticCase::PrimitiveE)), 34560);
  EXPECT_THROW(sp_np(3, 2, 7, SymplecticCase::Primitive2e), PreconditionError);
  EXPECT_THROW(sp_np(2, 2, 5, SymplecticCase::PrimitiveE), PreconditionError);
  EXPECT_EQ(v(sp_np(2, 2, 5, SymplecticCase::Primitive2e)), count_sylow_by_elements(sp4_2(), 5).n_p);
}

TEST(OmegaPlusFormula, Variants) {
  EXPECT_EQ(v(omega_plus_np(OmegaPlusVariant::SubgroupE, 2, 2, 5)), 336);
  EXPECT_EQ(v(omega_plus_np(OmegaPlusVariant::FullN, 3, 2, 5)), 336);
  // 13 is primitive for 2^12 - 1, and 2^6 - 1 has no primitive prime divisor.
  EXPECT_THROW(omega_plus_np(OmegaPlusVariant::SubgroupE, 3, 2, 13), PreconditionError);
  EXPECT_THROW(omega_plus_np(OmegaPlusVariant::FullN, 2, 2, 5), DomainError);
}

TEST(PSL2Formula, ThreePositions) {
  EXPECT_EQ(v(psl2_np(7, 7)), 8);
  EXPECT_EQ(v(psl2_np(4, 5)), 6);
  EXPECT_EQ(v(psl2_np(8, 7)), 36);
  EXPECT_EQ(v(psl2_np(16, 17)), 120);
  EXPECT_EQ(v(psl2_np(11, 11)), 12);
  EXPECT_THROW(psl2_np(11, 5), PreconditionError);
  EXPECT_THROW(psl2_np(3, 3), DomainError);
  EXPECT_THROW(psl2_np(8, 2), DomainError);
}

TEST(AlternatingFormula, ValuesAndBound) {
  EXPECT_EQ(v(alternating_np(5, 5)), 6);
  EXPECT_EQ(v(alternating_np(6, 5)), 36);
  EXPECT_EQ(v(alternating_np(5, 3)), 10);
  EXPECT_THROW(alternating_np(6, 3), PreconditionError);
  EXPECT_THROW(alternating_np(4, 3), PreconditionError);
  for (Integer p : {5, 7, 11}) {
    BigInt factorial = 1;
    for (Integer i = 2; i <= p - 2; ++i) factorial *= i;
    for (Integer n = std::max<Integer>(p, 5); n < 2 * p; ++n) EXPECT_GE(alternating_np(n, p).value, factorial);
  }
}

TEST(AlternatingFormula, MatchesBruteForce) {
  for (int n = 5; n <= 8; ++n) {
    const FiniteGroup g = alternating_group(n);
    for (Integer p : {3, 5, 7}) {
      if (p > n || n >= 2 * p) continue;
      EXPECT_EQ(alternating_np(n, p).value, count_sylow_by_elements(g, p).n_p) << "n=" << n << " p=" << p;
    }
  }
}

TEST(TheoremFamily, CasesAndGroups) {
  EXPECT_EQ(v(theorem_family_np(TheoremCase::PSL3_3, 13)), 144);
  EXPECT_EQ(v(theorem_family_np(TheoremCase::PSL2PMinus1, 5)), 6);
  EXPECT_EQ(v(theorem_family_np(TheoremCase::PSL2PPlus1, 7)), 36);
  EXPECT_EQ(v(theorem_family_np(TheoremCase::PSL2P, 11)), 12);
  EXPECT_EQ(v(theorem_family_np(TheoremCase::PSL2PMinus1, 17)), 120);
  EXPECT_THROW(theorem_family_np(TheoremCase::PSL3_3, 11), PreconditionError);
  EXPECT_THROW(theorem_family_np(TheoremCase::PSL2PMinus1, 3), PreconditionError);
  EXPECT_THROW(theorem_family_np(TheoremCase::PSL2PPlus1, 3), PreconditionError);
  EXPECT_THROW(theorem_family_np(TheoremCase::PSL2PPlus1, 11), PreconditionError);
  EXPECT_THROW(theorem_family_np(TheoremCase::PSL2P, 3), PreconditionError);
  EXPECT_EQ(theorem_family(TheoremCase::PSL2PMinus1, 17), FamilyId::psl(2, 16));
  EXPECT_EQ(theorem_family(TheoremCase::PSL2PPlus1, 7), FamilyId::psl(2, 8));
  EXPECT_EQ(to_string(TheoremCase::PSL3_3), "PSL3(3)");
}

TEST(TheoremFamily, ValuesAreNotPrimePowersOutsideMersenne) {
  for (Integer p : primes_up_to(2000)) {
    for (TheoremCase c :
         {TheoremCase::PSL2P, TheoremCase::PSL3_3, TheoremCase::PSL2PMinus1, TheoremCase::PSL2PPlus1}) {
      FormulaResult r;
      try {
        r = theorem_family_np(c, p);
      } catch (const PreconditionError&) {
        continue;
      }
      const Integer n = v(r);
      EXPECT_EQ(n % p, 1);
      EXPECT_LT(n, p * p);
      const bool prime_power = as_prime_power(n).has_value();
      EXPECT_EQ(prime_power, c == TheoremCase::PSL2P && is_mersenne_prime(p)) << to_string(c) << " p=" << p;
    }
  }
}

TEST(TheoremFamily, FamilyOrderDivisibleByValue) {
  for (Integer p : {5, 7, 13, 17, 31}) {
    for (TheoremCase c :
         {TheoremCase::PSL2P, TheoremCase::PSL3_3, TheoremCase::PSL2PMinus1, TheoremCase::PSL2PPlus1}) {
      try {
        EXPECT_EQ(group_order(theorem_family(c, p)) % theorem_family_np(c, p).value, 0);
      } catch (const PreconditionError&) {
      }
    }
  }
}

TEST(FormulaInvariant, ValuesAreOneModP) {
  // Every formula value is a Sylow number, except gu_np(3, 2, 3), where
  // p = 3 divides the centre of GU_3(2) and the Sylow subgroup is not C_3.
  for (Integer q : {2, 3, 4, 5, 7, 8, 9}) {
    for (Integer e = 2; e <= 8; ++e) {
      for (Integer p : primes_up_to(200)) {
        if (p < 3) continue;
        try {
          EXPECT_EQ(gl_np(e, q, p).value % p, 1) << "gl e=" << e << " q=" << q << " p=" << p;
        } catch (const PreconditionError&) {
        }
        try {
          const FormulaResult r = gu_np(e, q, p);
          if (!(e == 3 && q == 2 && p == 3)) EXPECT_EQ(r.value % p, 1) << "gu e=" << e << " q=" << q << " p=" << p;
        } catch (const PreconditionError&) {
        } catch (const DomainError&) {
        }
      }
    }
  }
  EXPECT_EQ(gu_np(3, 2, 3).value % 3, 0);
}

TEST(MinimalDegree, QuotedBounds) {
  EXPECT_EQ(minimal_degree_bound(FamilyId::exceptional(FamilyTag::F4, 2)), 69615);
  EXPECT_EQ(minimal_degree_bound(FamilyId::exceptional(FamilyTag::E6, 2)), 139503);
  EXPECT_EQ(minimal_degree_bound(FamilyId::exceptional(FamilyTag::TwoF4, 8)), BigInt(262145) * 513 * 9);
  EXPECT_THROW(minimal_degree_bound(FamilyId::psl(2, 7)), DomainError);
  for (FamilyTag t : {FamilyTag::F4, FamilyTag::E6, FamilyTag::TwoE6, FamilyTag::E7, FamilyTag::E8}) {
    for (Integer q : {2, 3, 4}) {
      const FamilyId f = FamilyId::exceptional(t, q);
      EXPECT_LT(minimal_degree_bound(f), group_order(f));
    }
  }
}

TEST(Audit, ZeroViolationsOnFullRange) {
  const AuditReport report = proof_inequality_audit(32, 36);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_EQ(report.chains.size(), registered_chains().size());
  EXPECT_GT(report.total_checks, 10000);
  for (const auto& c : report.chains) EXPECT_GT(c.points, 0) << c.family << " " << c.label;
}

TEST(Audit, SmallRangeAndPreconditions) {
  const AuditReport report = proof_inequality_audit(2, 2);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_LT(report.total_checks, 100);
  EXPECT_THROW(proof_inequality_audit(1, 5), DomainError);
  EXPECT_THROW(proof_inequality_audit(5, 1), DomainError);
}

TEST(Audit, SpotValues) {
  const auto& chains = registered_chains();
  auto find = [&](const std::string& family, const std::string& label) -> const InequalityChain& {
    for (const auto& c : chains) {
      if (c.family == family && c.label == label) return c;
    }
    throw std::runtime_error("missing chain " + family + " / " + label);
  };
  const auto& sz = find("suzuki", "p | q - s + 1");
  EXPECT_EQ(sz.terms[4].eval({8, 0}), Rational(25));
  EXPECT_EQ(sz.terms[2].eval({8, 0}), Rational(256));
  const auto& sp = find("symplectic", "e >= 4, p | q^e + 1");
  EXPECT_EQ(sp.terms[3].eval({2, 4}), Rational(262144));
  EXPECT_EQ(sp.terms[5].eval({2, 4}), Rational(289));
  EXPECT_EQ(check_chain(sp, {2, 4}), -1);
  EXPECT_NE(statement(sp).find("16 q^(4e-2)"), std::string::npos);
}

// The printed intermediate bound for the unitary e = 5 case,
// n_p >= q^16 (q-1)^2 (q^2-q+1), holds at q = 2 and fails from q = 3 on;
// the registered chain compares with 16 q^8 directly.
TEST(Audit, PrintedUnitaryFiveBoundFailsAtThree) {
  auto gu5 = [](Integer q) {
    BigInt n = boost::multiprecision::pow(BigInt(q), 10);
    for (Integer i = 1; i <= 4; ++i) {
      const BigInt qi = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i));
      n *= (i % 2 == 0) ? BigInt(qi - 1) : BigInt(qi + 1);
    }
    return Rational(n, BigInt(5));
  };
  auto printed = [](Integer q) {
    return Rational(boost::multiprecision::pow(BigInt(q), 16) * (q - 1) * (q - 1) * (q * q - q + 1));
  };
  EXPECT_GE(gu5(2), printed(2));
  EXPECT_LT(gu5(3), printed(3));
  for (Integer q = 2; q <= 32; ++q) EXPECT_GT(gu5(q), Rational(16 * boost::multiprecision::pow(BigInt(q), 8)));
}

TEST(Audit, DetectsAFalseChain) {
  InequalityChain bogus{"test", "q^2 < q",
                        {{"q^2", [](const AuditPoint& a) { return Rational(a.q * a.q); }},
                         {"q", [](const AuditPoint& a) { return Rational(a.q); }}},
                        {Relation::Less},
                        false,
                        [](const AuditPoint&) { return true; }};
  EXPECT_EQ(check_chain(bogus, {3, 0}), 0);
  EXPECT_EQ(statement(bogus), "q^2 < q");
}
