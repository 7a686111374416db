#include <gtest/gtest.h>

#include "support.hpp"

using namespace nanohom;
using namespace testing_support;

namespace {

PiWord random_piword(std::mt19937_64& rng, const Alphabet& A, int len) {
  PiWord x;
  std::uniform_int_distribution<int> letter(0, A.size() - 1);
  for (int i = 0; i < len; ++i) x = BigPiGroup::mul(A, x, BigPiGroup::gen(A, letter(rng)));
  return x;
}

PsiElement random_psi(std::mt19937_64& rng, const Alphabet& A, int len) {
  PsiElement x;
  std::uniform_int_distribution<int> letter(0, A.size() - 1), coin(0, 1);
  for (int i = 0; i < len; ++i) {
    const int a = letter(rng);
    x = PsiGroup::mul(A, x, coin(rng) ? PsiGroup::gen(A, a) : PsiGroup::bullet(A, a));
  }
  return x;
}

PiTildeElement random_pitilde(std::mt19937_64& rng, const Alphabet& A, int len) {
  PiTildeElement x = PiTildeGroup::identity(A);
  std::uniform_int_distribution<int> letter(0, A.size() - 1), coin(0, 3);
  for (int i = 0; i < len; ++i) {
    const int a = letter(rng);
    x = PiTildeGroup::mul(A, x, coin(rng) ? PiTildeGroup::gen(A, a) : PiTildeGroup::central_gen(A, A.orbit(a)));
  }
  return x;
}

Lambda random_lambda(std::mt19937_64& rng, const AlphabetPtr& A) {
  Lambda x(A);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int t = 0; t < 3; ++t) x.add(random_psi(rng, *A, 3), c(rng));
  return x;
}

// Normal form of a word in the generators of Psi by naive rewriting: letters are
// (orbit, exponent-of-a, exponent-of-a.) triples; adjacent letters of one orbit merge.
PsiElement psi_by_rewriting(const Alphabet& A, std::vector<PsiElement::Syl> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < w.size(); ++i) {
      const bool fx = A.orbit_info(w[i].orbit).fixed;
      if (fx && (w[i].m % 2 == 0 && w[i].mb % 2 == 0)) {
        w.erase(w.begin() + i);
        changed = true;
        break;
      }
      if (!fx && w[i].m == 0 && w[i].mb == 0) {
        w.erase(w.begin() + i);
        changed = true;
        break;
      }
      if (i + 1 < w.size() && w[i].orbit == w[i + 1].orbit) {
        w[i].m += w[i + 1].m;
        w[i].mb += w[i + 1].mb;
        w.erase(w.begin() + i + 1);
        changed = true;
        break;
      }
    }
  }
  PsiElement x;
  for (auto s : w) {
    if (A.orbit_info(s.orbit).fixed) {
      s.m = static_cast<int>(linalg::mod(s.m, 2));
      s.mb = static_cast<int>(linalg::mod(s.mb, 2));
    }
    x.syl.push_back(s);
  }
  return x;
}

}  // namespace

TEST(Pi, Relations) {
  const auto A = Alphabet::from_pairs({{"a", "b"}});
  const Alphabet& al = *A;
  EXPECT_TRUE(PiGroup::is_identity(PiGroup::mul(al, PiGroup::gen(al, 0), PiGroup::gen(al, 1))));
  const auto F = fixed2();
  EXPECT_TRUE(PiGroup::is_identity(PiGroup::pow(*F, PiGroup::gen(*F, 0), 2)));
  EXPECT_EQ(PiGroup::str(*free2(), pi(free2(), "a^2 B")), "a^2 b^-1");
}

TEST(Pi, SubgroupMembershipPaperExample) {
  const auto A = fixed2();
  const SubgroupOfPi H{{pi(A, "ab")}};
  EXPECT_TRUE(subgroup_contains(*A, H, pi(A, "ab")));
  EXPECT_FALSE(subgroup_contains(*A, H, pi(A, "a")));
  EXPECT_TRUE(subgroup_contains(*A, H, PiGroup::identity(*A)));
  EXPECT_TRUE(subgroup_contains(*A, SubgroupOfPi{}, PiGroup::identity(*A)));
}

TEST(Pi, SubgroupMembershipMatchesDivisibility) {
  const auto A = Alphabet::from_pairs({{"a", "A"}});
  for (int r = 1; r <= 6; ++r)
    for (int m = -12; m <= 12; ++m) {
      const SubgroupOfPi H{{PiGroup::pow(*A, PiGroup::gen(*A, 0), r)}};
      EXPECT_EQ(subgroup_contains(*A, H, PiGroup::pow(*A, PiGroup::gen(*A, 0), m)), m % r == 0) << r << " " << m;
    }
}

TEST(Pi, SubgroupMembershipMixedLattice) {
  const auto A = mixed();
  std::mt19937_64 rng(5);
  // Brute force: enumerate small combinations of the generators.
  for (int t = 0; t < 40; ++t) {
    const SubgroupOfPi H{{random_pi(rng, *A), random_pi(rng, *A)}};
    std::set<PiElement> reach;
    for (int i = -6; i <= 6; ++i)
      for (int j = -6; j <= 6; ++j)
        reach.insert(PiGroup::mul(*A, PiGroup::pow(*A, H.generators[0], i), PiGroup::pow(*A, H.generators[1], j)));
    for (int e = -4; e <= 4; ++e)
      for (int f = 0; f < 2; ++f)
        for (int g = 0; g < 2; ++g) {
          const PiElement x{{e, f, g}};
          if (reach.count(x)) { EXPECT_TRUE(subgroup_contains(*A, H, x)); }
        }
    for (const auto& x : reach) EXPECT_TRUE(subgroup_contains(*A, H, x));
  }
}

TEST(BigPi, RelationsAndAxioms) {
  const auto A = mixed();
  const Alphabet& al = *A;
  const int a = al.index("a"), Aa = al.index("A"), b = al.index("b");
  EXPECT_TRUE(BigPiGroup::is_identity(BigPiGroup::mul(al, BigPiGroup::gen(al, a), BigPiGroup::gen(al, Aa))));
  EXPECT_TRUE(BigPiGroup::is_identity(BigPiGroup::mul(al, BigPiGroup::gen(al, b), BigPiGroup::gen(al, b))));
  EXPECT_FALSE(BigPiPrimeGroup::is_identity(BigPiPrimeGroup::mul(al, BigPiPrimeGroup::gen(al, a), BigPiPrimeGroup::gen(al, b))));
  EXPECT_TRUE(BigPiPrimeGroup::is_identity(BigPiPrimeGroup::mul(al, BigPiPrimeGroup::gen(al, a), BigPiPrimeGroup::gen(al, a))));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 300; ++t) {
    const PiWord x = random_piword(rng, al, 5), y = random_piword(rng, al, 5), z = random_piword(rng, al, 5);
    EXPECT_EQ(BigPiGroup::mul(al, BigPiGroup::mul(al, x, y), z), BigPiGroup::mul(al, x, BigPiGroup::mul(al, y, z)));
    EXPECT_TRUE(BigPiGroup::is_identity(BigPiGroup::mul(al, x, BigPiGroup::inv(al, x))));
    // Pi -> pi and Pi -> Pi' are homomorphisms.
    EXPECT_EQ(BigPiGroup::abelianize(al, BigPiGroup::mul(al, x, y)),
              PiGroup::mul(al, BigPiGroup::abelianize(al, x), BigPiGroup::abelianize(al, y)));
    EXPECT_EQ(to_pi_prime(al, BigPiGroup::mul(al, x, y)),
              BigPiPrimeGroup::mul(al, to_pi_prime(al, x), to_pi_prime(al, y)));
  }
}

TEST(PiTilde, CentralGeneratorFromCancellation) {
  const auto A = free2();
  const Alphabet& al = *A;
  const PiTildeElement x = pitilde_mul(al, PiTildeGroup::gen(al, 0), PiTildeGroup::gen(al, 1));
  EXPECT_TRUE(x.base.syl.empty());
  EXPECT_EQ(x.central, (std::vector<int>{1, 0}));
  const auto F = fixed2();
  const PiTildeElement y = pitilde_mul(*F, PiTildeGroup::gen(*F, 0), PiTildeGroup::gen(*F, 0));
  EXPECT_TRUE(y.base.syl.empty());
  EXPECT_EQ(y.central, (std::vector<int>{1, 0}));
  EXPECT_THROW(pitilde_mul(al, x, PiTildeElement{{}, {0}}), AlphabetMismatch);
}

TEST(PiTilde, AssociativeAndProjects) {
  std::mt19937_64 rng(7);
  for (const auto& A : sample_alphabets()) {
    const Alphabet& al = *A;
    for (int t = 0; t < 300; ++t) {
      const auto x = random_pitilde(rng, al, 5), y = random_pitilde(rng, al, 5), z = random_pitilde(rng, al, 5);
      EXPECT_EQ(PiTildeGroup::mul(al, PiTildeGroup::mul(al, x, y), z), PiTildeGroup::mul(al, x, PiTildeGroup::mul(al, y, z)));
      EXPECT_TRUE(PiTildeGroup::is_identity(PiTildeGroup::mul(al, x, PiTildeGroup::inv(al, x))));
      EXPECT_TRUE(PiTildeGroup::is_identity(PiTildeGroup::mul(al, PiTildeGroup::inv(al, x), x)));
      EXPECT_EQ(PiTildeGroup::mul(al, x, y).base, BigPiGroup::mul(al, x.base, y.base));
    }
  }
}

TEST(PiTilde, GammaTildeOfAbabIsTrivial) {
  const auto A = free2();
  EXPECT_TRUE(PiTildeGroup::is_identity(gamma_tilde(make_nanoword(A, "ABAB", {"a", "a"}))));
}

TEST(Psi, CommutationRelations) {
  const auto A = free2();
  const Alphabet& al = *A;
  const int a = 0, b = 2;
  EXPECT_EQ(PsiGroup::mul(al, PsiGroup::gen(al, a), PsiGroup::bullet(al, a)),
            PsiGroup::mul(al, PsiGroup::bullet(al, a), PsiGroup::gen(al, a)));
  EXPECT_NE(PsiGroup::mul(al, PsiGroup::gen(al, a), PsiGroup::bullet(al, b)),
            PsiGroup::mul(al, PsiGroup::bullet(al, b), PsiGroup::gen(al, a)));
  EXPECT_TRUE(PsiGroup::is_identity(PsiGroup::mul(al, PsiGroup::gen(al, a), PsiGroup::gen(al, 1))));
  EXPECT_TRUE(PsiGroup::is_identity(PsiGroup::mul(al, PsiGroup::bullet(al, a), PsiGroup::bullet(al, 1))));
  EXPECT_EQ(PsiGroup::str(al, psi(A, "a^2 a.^-1 b.")), "a^2 a.^-1 b.");
}

TEST(Psi, NormalFormMatchesRewriting) {
  std::mt19937_64 rng(8);
  for (const auto& A : sample_alphabets()) {
    const Alphabet& al = *A;
    std::uniform_int_distribution<int> letter(0, al.size() - 1), coin(0, 1);
    for (int t = 0; t < 300; ++t) {
      std::vector<PsiElement::Syl> raw;
      PsiElement x;
      const int len = std::uniform_int_distribution<int>(0, 7)(rng);
      for (int i = 0; i < len; ++i) {
        const int a = letter(rng);
        const bool bullet = coin(rng);
        raw.push_back({al.orbit(a), bullet ? 0 : al.sign(a), bullet ? al.sign(a) : 0});
        x = PsiGroup::mul(al, x, bullet ? PsiGroup::bullet(al, a) : PsiGroup::gen(al, a));
      }
      EXPECT_EQ(x, psi_by_rewriting(al, raw));
    }
  }
}

TEST(Psi, GroupAxioms) {
  std::mt19937_64 rng(9);
  for (const auto& A : sample_alphabets()) {
    const Alphabet& al = *A;
    for (int t = 0; t < 200; ++t) {
      const auto x = random_psi(rng, al, 5), y = random_psi(rng, al, 5), z = random_psi(rng, al, 5);
      EXPECT_EQ(PsiGroup::mul(al, PsiGroup::mul(al, x, y), z), PsiGroup::mul(al, x, PsiGroup::mul(al, y, z)));
      EXPECT_TRUE(PsiGroup::is_identity(PsiGroup::mul(al, x, PsiGroup::inv(al, x))));
      EXPECT_EQ(PsiGroup::reverse(al, PsiGroup::mul(al, x, y)), PsiGroup::mul(al, PsiGroup::reverse(al, y), PsiGroup::reverse(al, x)));
      EXPECT_EQ(PsiGroup::bar(al, PsiGroup::mul(al, x, y)), PsiGroup::mul(al, PsiGroup::bar(al, x), PsiGroup::bar(al, y)));
      EXPECT_EQ(PsiAbGroup::from_psi(al, PsiGroup::mul(al, x, y)),
                PsiAbGroup::mul(al, PsiAbGroup::from_psi(al, x), PsiAbGroup::from_psi(al, y)));
    }
  }
}

TEST(GroupRing, RingAxiomsAndAugmentation) {
  std::mt19937_64 rng(10);
  for (const auto& A : sample_alphabets()) {
    for (int t = 0; t < 100; ++t) {
      const Lambda x = random_lambda(rng, A), y = random_lambda(rng, A), z = random_lambda(rng, A);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x + y) * z, x * z + y * z);
      EXPECT_EQ(x * lam_one(A), x);
      EXPECT_TRUE((x - x).is_zero());
      EXPECT_EQ((x * y).aug(), x.aug() * y.aug());
      EXPECT_EQ(q_map(x * y), q_map(x) * q_map(y));
      EXPECT_EQ(q_map(x * y), q_map(y * x));
      EXPECT_EQ(iota(x * y), iota(y) * iota(x));
      EXPECT_EQ(kappa(x * y), kappa(y) * kappa(x));
      EXPECT_EQ(bar(x * y), bar(x) * bar(y));
    }
  }
}

TEST(GroupRing, MixingAlphabetsThrows) {
  EXPECT_THROW(lam_one(free2()) + lam_one(fixed2()), AlphabetMismatch);
}

TEST(Linalg, SmithCountMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (linalg::Int m : {2, 3, 4, 5, 6, 8, 9, 12}) {
    for (int t = 0; t < 40; ++t) {
      const int R = std::uniform_int_distribution<int>(1, 3)(rng), C = std::uniform_int_distribution<int>(1, 4)(rng);
      linalg::Matrix M(R, std::vector<linalg::Int>(C));
      std::vector<linalg::Int> b(R);
      std::uniform_int_distribution<linalg::Int> e(-3, 3);
      for (auto& row : M)
        for (auto& x : row) x = e(rng);
      for (auto& x : b) x = e(rng);
      const auto expected = solutions_brute_force(M, b, m);
      EXPECT_EQ(linalg::count_solutions_smith(M, b, m), expected) << "m=" << m;
      if (linalg::is_prime(m)) { EXPECT_EQ(linalg::count_solutions_prime(M, b, m), expected); }
    }
  }
}

TEST(Linalg, LatticeContains) {
  EXPECT_TRUE(linalg::lattice_contains({{2, 0}, {0, 3}}, {4, -3}));
  EXPECT_FALSE(linalg::lattice_contains({{2, 0}, {0, 3}}, {1, 0}));
  EXPECT_TRUE(linalg::lattice_contains({{2, 1}, {1, 1}}, {1, 0}));
}
