#include <gtest/gtest.h>

#include "support.hpp"

using namespace nanohom;
using namespace testing_support;

namespace {

PiMatrix pimatrix(const AlphabetPtr& A, const std::vector<std::vector<std::string>>& rows) {
  PiMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const auto& x : r) m.back().push_back(pi(A, x));
  }
  return m;
}

bool same_form(const AlphaForm& f, const AlphaForm& g) { return f.proj == g.proj && f.n == g.n && f.l == g.l; }

AlphaPairing compressed_abacbc(const AlphabetPtr& A, const std::string& a, const std::string& b, const std::string& c) {
  return compress(linking_pairing(make_nanoword(A, "ABACBC", {a, b, c})));
}

}  // namespace

TEST(LinkingForm, Examples) {
  const auto A = free3();
  const AlphaForm f = linking_form(make_nanoword(A, "ABACBC", {"a", "b", "c"}));
  EXPECT_EQ(f.l, pimatrix(A, {{"1", "1", "b"}, {"1", "1", "1"}, {"b^-1", "1", "1"}}));
  const AlphaForm g = linking_form(make_nanoword(A, "ABAB", {"a", "b"}));
  EXPECT_EQ(g.l, pimatrix(A, {{"1", "1"}, {"1", "1"}}));
}

TEST(LinkingForm, ProductIsBlockDiagonal) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const Nanoword x = random_nanoword(rng, free2(), 4), y = random_nanoword(rng, free2(), 4);
    const AlphaForm f = linking_form(product(x, y)), fx = linking_form(x), fy = linking_form(y);
    const int k = x.num_letters();
    for (int i = 0; i < f.size(); ++i)
      for (int j = 0; j < f.size(); ++j) {
        const bool ix = i < k, jx = j < k;
        if (ix && jx) {
          EXPECT_EQ(f.n[i][j], fx.n[i][j]);
          EXPECT_EQ(f.l[i][j], fx.l[i][j]);
        } else if (!ix && !jx) {
          EXPECT_EQ(f.n[i][j], fy.n[i - k][j - k]);
          EXPECT_EQ(f.l[i][j], fy.l[i - k][j - k]);
        } else {
          EXPECT_EQ(f.n[i][j], 0);
          EXPECT_TRUE(PiGroup::is_identity(f.l[i][j]));
        }
      }
    EXPECT_TRUE(pairings_isomorphic(linking_pairing(product(x, y)), direct_sum(linking_pairing(x), linking_pairing(y))));
  }
}

TEST(Pairing, AbabMatrix) {
  const auto A = free2();
  const AlphaPairing p = linking_pairing(make_nanoword(A, "ABAB", {"a", "b"}));
  EXPECT_EQ(p.b, pimatrix(A, {{"1", "b^-1", "a"}, {"b", "1", "ab"}, {"a^-1", "a^-1 b^-1", "1"}}));
  EXPECT_TRUE(is_primitive(p));
  EXPECT_EQ(rho(p), 2);
  EXPECT_FALSE(is_primitive(linking_pairing(make_nanoword(A, "ABAB", {"a", "A"}))));
}

TEST(Pairing, AbacbcMatrix) {
  const auto A = free3();
  const AlphaPairing p = linking_pairing(make_nanoword(A, "ABACBC", {"a", "b", "c"}));
  EXPECT_EQ(p.b, pimatrix(A, {{"1", "b^-1", "a c^-1", "b"},
                              {"b", "1", "ab", "b^2"},
                              {"a^-1 c", "a^-1 b^-1", "1", "bc"},
                              {"b^-1", "b^-2", "b^-1 c^-1", "1"}}));
  EXPECT_EQ(rho(p), 3);
}

TEST(Pairing, TrivialForm) {
  const auto A = free2();
  const AlphaPairing p = linking_pairing(empty_nanoword(A));
  EXPECT_EQ(p.size(), 0);
  EXPECT_EQ(p.b, trivial_pairing(A).b);
  EXPECT_EQ(rho(p), 0);
  EXPECT_TRUE(rho_ax(p).empty());
}

TEST(Compress, AbacbcCases) {
  const auto A = mixed();
  // a = c = tau(b): B is annihilating.
  const AlphaPairing p1 = compressed_abacbc(A, "a", "A", "a");
  EXPECT_EQ(p1.size(), 2);
  EXPECT_EQ(p1.b, pimatrix(A, {{"1", "a", "a^-1"}, {"a^-1", "1", "a^-2"}, {"a", "a^2", "1"}}));
  // a = b = c = tau(a).
  EXPECT_EQ(compressed_abacbc(A, "b", "b", "b").size(), 0);
  // a = tau(c), b = tau(b).
  const AlphaPairing p3 = compressed_abacbc(A, "a", "b", "A");
  ASSERT_EQ(p3.size(), 1);
  const bool shape = p3.b == pimatrix(A, {{"1", "a^2"}, {"a^-2", "1"}}) || p3.b == pimatrix(A, {{"1", "a^-2"}, {"a^2", "1"}});
  EXPECT_TRUE(shape) << p3.str();
  // a = tau(a) = c != b = tau(b).
  EXPECT_EQ(compressed_abacbc(A, "b", "c", "b").size(), 0);
  // Generic case.
  EXPECT_EQ(compressed_abacbc(free3(), "a", "b", "c").size(), 3);
}

TEST(Compress, OrderIndependent) {
  std::mt19937_64 rng(52);
  for (const auto& A : sample_alphabets())
    for (int t = 0; t < 60; ++t) {
      const AlphaPairing p = random_pairing(rng, A, std::uniform_int_distribution<int>(0, 3)(rng));
      const AlphaPairing c0 = compress(p);
      EXPECT_TRUE(is_primitive(c0));
      for (int r = 0; r < 5; ++r) {
        const AlphaPairing c = compress(p, &rng);
        EXPECT_TRUE(is_primitive(c));
        EXPECT_EQ(c.size(), c0.size());
        EXPECT_TRUE(pairings_isomorphic(c, c0));
      }
    }
}

TEST(Isomorphism, MatchesBruteForce) {
  std::mt19937_64 rng(53);
  for (const auto& A : {free2(), mixed()})
    for (int t = 0; t < 150; ++t) {
      const int k = std::uniform_int_distribution<int>(0, 4)(rng);
      const AlphaPairing p = random_pairing(rng, A, k);
      std::vector<int> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const AlphaPairing q = restrict_pairing(p, perm);
      EXPECT_TRUE(pairings_isomorphic(p, q));
      // An unrelated pairing of the same size.
      AlphaPairing r = q;
      if (r.size() > 0 && std::uniform_int_distribution<int>(0, 1)(rng)) {
        const int x = std::uniform_int_distribution<int>(1, r.size())(rng);
        r.b[0][x] = PiGroup::mul(*A, r.b[0][x], PiGroup::gen(*A, 0));
        r.b[x][0] = PiGroup::inv(*A, r.b[0][x]);
      }
      if (p.size() <= 6) { EXPECT_EQ(pairings_isomorphic(p, r), pairings_isomorphic_brute_force(p, r)); }
    }
}

TEST(Isomorphism, AbabDeterminesProjections) {
  const auto A = free3();
  const std::vector<std::pair<std::string, std::string>> pairs{{"a", "b"}, {"b", "a"}, {"a", "c"}, {"c", "b"}, {"a", "B"}};
  for (const auto& [a, b] : pairs)
    for (const auto& [a2, b2] : pairs) {
      const auto p = compress(linking_pairing(make_nanoword(A, "ABAB", {a, b})));
      const auto q = compress(linking_pairing(make_nanoword(A, "ABAB", {a2, b2})));
      EXPECT_EQ(pairings_isomorphic(p, q), a == a2 && b == b2) << a << b << " " << a2 << b2;
    }
}

TEST(Isomorphism, CompressedInsertionVariants) {
  std::mt19937_64 rng(54);
  for (const auto& A : sample_alphabets()) {
    const auto d = HomotopyData::diagonal(A);
    for (int t = 0; t < 40; ++t) {
      const Nanoword w = random_nanoword(rng, A, 4);
      std::vector<Move> trace;
      const Nanoword v = random_walk(rng, w, d, 6, 14, &trace);
      EXPECT_TRUE(pairings_isomorphic(compress(linking_pairing(w)), compress(linking_pairing(v))));
      EXPECT_EQ(rho_ax(linking_pairing(w)), rho_ax(linking_pairing(v)));
    }
  }
}

TEST(PairingU, MatchesSelfLinking) {
  std::mt19937_64 rng(55);
  for (const auto& A : sample_alphabets())
    for (int t = 0; t < 200; ++t) {
      const Nanoword w = random_nanoword(rng, A, 7);
      const AlphaPairing p = linking_pairing(w);
      EXPECT_EQ(pairing_u(p), self_link_function(w));
      EXPECT_EQ(pairing_u(compress(p)), self_link_function(w));
    }
}

TEST(PairingOps, OppositeAndInverse) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 100; ++t) {
    const Nanoword w = random_nanoword(rng, free2(), 6);
    EXPECT_TRUE(pairings_isomorphic(compress(linking_pairing(inverse(w))), compress(inverse(linking_pairing(w)))));
    EXPECT_EQ(rho(linking_pairing(opposite(w))), rho(linking_pairing(w)));
  }
}

TEST(FormMoves, FirstMoveDeletesIsolatedLetter) {
  const auto A = free2();
  const Nanoword w = make_nanoword(A, "AABCBC", {"a", "b", "b"});
  const AlphaForm g = form_move(linking_form(w), FormMove::I, {0});
  EXPECT_TRUE(same_form(g, linking_form(make_nanoword(A, "BCBC", {"b", "b"}))));
  EXPECT_THROW(form_move(linking_form(w), FormMove::I, {1}), PreconditionViolated);
  EXPECT_THROW(form_move(linking_form(w), FormMove::III, {0, 1}), PreconditionViolated);
}

TEST(FormMoves, MatchWordMoves) {
  std::mt19937_64 rng(57);
  int third = 0, second = 0;
  for (const auto& A : sample_alphabets()) {
    const auto d = HomotopyData::diagonal(A);
    for (int t = 0; t < 400; ++t) {
      const Nanoword w = random_nanoword(rng, A, 4, 3);
      const AlphaForm f = linking_form(w);
      for (const auto& [m, v] : enumerate_moves(w, d, {}, false)) {
        if (m.kind == MoveKind::M3 && !m.insert) {
          const auto tr = pair_triple(w, m.pos[0], m.pos[1], m.pos[2]);
          ASSERT_TRUE(tr.has_value());
          const AlphaForm g = form_move(f, FormMove::III, {tr->X, tr->Y, tr->Z});
          EXPECT_TRUE(same_form(g, linking_form(flip_pairs(w, tr->pos))));
          ++third;
        } else if (m.kind == MoveKind::M2) {
          const int X = w.at(m.pos[0]), Y = w.at(m.pos[0] + 1);
          const AlphaForm g = form_move(f, FormMove::II, {X, Y});
          EXPECT_TRUE(same_form(g, linking_form(v)));
          // The deleted letters are twins of the pairing.
          EXPECT_TRUE(are_twins(linking_pairing(w), X, Y));
          ++second;
        } else if (m.kind == MoveKind::M1) {
          const AlphaForm g = form_move(f, FormMove::I, {w.at(m.pos[0])});
          EXPECT_TRUE(same_form(g, linking_form(v)));
        }
      }
    }
  }
  EXPECT_GT(third, 0);
  EXPECT_GT(second, 0);
}
