#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "group_ring.hpp"
#include "linalg.hpp"

namespace nanohom {

// A tau-invariant subset of the alphabet, as a membership mask.
using LetterSet = std::vector<bool>;

inline LetterSet all_letters(const Alphabet& A) { return LetterSet(A.size(), true); }

inline void require_tau_invariant(const Alphabet& A, const LetterSet& beta) {
  if (static_cast<int>(beta.size()) != A.size()) throw InvalidSpec("letter set has wrong size");
  for (int a = 0; a < A.size(); ++a)
    if (beta[a] != beta[A.tau(a)]) throw InvalidSpec("letter set is not tau-invariant at " + A.name(a));
}

// Parses "a,b" (or space separated) into a set, closing under tau.
inline LetterSet parse_letter_set(const Alphabet& A, const std::string& spec) {
  LetterSet s(A.size(), false);
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    const int a = A.index(tok);
    s[a] = s[A.tau(a)] = true;
    tok.clear();
  };
  for (char c : spec) {
    if (c == ',' || c == ' ') flush();
    else tok += c;
  }
  flush();
  return s;
}

struct WeightedMatrix {
  std::vector<std::vector<Lambda>> entries;
  LambdaAb r_minus, r_plus;
  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

// Rows 2k, 2k+1 belong to the k-th letter (canonical numbering); column c is the point x_c.
inline WeightedMatrix weighted_matrix(const Nanoword& w, const LetterSet& beta) {
  if (w.empty()) throw EmptyNanoword("weighted matrix of the empty nanoword is undefined");
  const AlphabetPtr& A = w.alphabet();
  require_tau_invariant(*A, beta);
  const Nanoword c = w.canonical();
  const int n = c.num_letters();
  const Lambda zero(A), one = lam_one(A);
  WeightedMatrix M{std::vector<std::vector<Lambda>>(2 * n, std::vector<Lambda>(2 * n + 1, zero)), {}, {}};
  PsiAbElement rmono = PsiAbGroup::identity(*A);
  int rsign = 1;
  for (int k = 0; k < n; ++k) {
    const int a = c.value(k);
    const Lambda x = lam_gen(A, a), xb = lam_bullet(A, a);
    int i = c.first(k) + 1, j = c.second(k) + 1;
    if (!beta[a]) {
      std::swap(i, j);
      rmono = PsiAbGroup::mul(*A, rmono, PsiAbGroup::inv(*A, PsiAbGroup::mul(*A, PsiAbGroup::gen(*A, a), PsiAbGroup::bullet(*A, a))));
      rsign = -rsign;
    }
    auto& r1 = M.entries[2 * k];
    auto& r2 = M.entries[2 * k + 1];
    r1[i - 1] += x;
    r1[i] -= one;
    r2[i - 1] += one - x * xb;
    r2[j - 1] += xb;
    r2[j] -= one;
  }
  M.r_minus = M.r_plus = LambdaAb(A, rmono, rsign);
  return M;
}

namespace detail {

// Determinant by Laplace expansion along rows, memoized on the set of used columns.
inline LambdaAb det(const std::vector<std::vector<LambdaAb>>& M, const AlphabetPtr& A) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return LambdaAb::one(A);
  std::unordered_map<std::uint64_t, LambdaAb> memo;
  std::function<LambdaAb(int, std::uint64_t)> rec = [&](int r, std::uint64_t used) -> LambdaAb {
    if (r == n) return LambdaAb::one(A);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    LambdaAb s(A);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (used >> c & 1) continue;
      if (!M[r][c].is_zero()) {
        LambdaAb sub = rec(r + 1, used | (std::uint64_t{1} << c));
        if (!sub.is_zero()) s += sign * (M[r][c] * sub);
      }
      sign = -sign;
    }
    memo.emplace(used, s);
    return s;
  };
  return rec(0, 0);
}

}  // namespace detail

// nabla^eps(M) = r_eps det(M^ab_eps); eps = +1 deletes the last column, -1 the first.
inline LambdaAb nabla_raw(const WeightedMatrix& M, const AlphabetPtr& A, int eps) {
  std::vector<std::vector<LambdaAb>> sq;
  for (const auto& row : M.entries) {
    sq.emplace_back();
    for (int c = 0; c < M.cols(); ++c)
      if (!((eps > 0 && c == M.cols() - 1) || (eps < 0 && c == 0))) sq.back().push_back(q_map(row[c]));
  }
  return (eps > 0 ? M.r_plus : M.r_minus) * detail::det(sq, A);
}

inline LambdaAb nabla(const Nanoword& w, const LetterSet& beta, int eps) {
  const AlphabetPtr& A = w.alphabet();
  require_tau_invariant(*A, beta);
  if (w.empty()) return LambdaAb::one(A);
  const LambdaAb v = nabla_raw(weighted_matrix(w, beta), A, eps);
  return v.aug() * v;
}

struct ColoringSpec {
  LetterSet beta;
  linalg::Int modulus = 3;
  std::vector<linalg::Int> p, p_bullet;

  static ColoringSpec tricolor(const Alphabet& A, LetterSet beta) {
    return {std::move(beta), 3, std::vector<linalg::Int>(A.size(), 1), std::vector<linalg::Int>(A.size(), 2)};
  }

  void validate(const Alphabet& A) const {
    if (modulus < 2) throw InvalidSpec("modulus must be at least 2");
    require_tau_invariant(A, beta);
    if (static_cast<int>(p.size()) != A.size() || static_cast<int>(p_bullet.size()) != A.size())
      throw InvalidSpec("p and p. must be given on every letter");
    for (int a = 0; a < A.size(); ++a) {
      if (linalg::mod(p[a] * p[A.tau(a)], modulus) != 1)
        throw InvalidSpec("p(" + A.name(a) + ") p(tau " + A.name(a) + ") != 1");
      if (linalg::mod(p_bullet[a] * p_bullet[A.tau(a)], modulus) != 1)
        throw InvalidSpec("p.(" + A.name(a) + ") p.(tau " + A.name(a) + ") != 1");
    }
  }
};

// Linear constraints on (f(0), ..., f(L)) over Z/m; one row per relation.
inline linalg::Matrix coloring_system(const Nanoword& w, const ColoringSpec& spec) {
  const Alphabet& A = *w.alphabet();
  const linalg::Int m = spec.modulus;
  const int L = w.length();
  linalg::Matrix rows;
  for (int k = 0; k < w.num_letters(); ++k) {
    const int a = w.value(k);
    const linalg::Int x = spec.p[a], xb = spec.p_bullet[a];
    int i = w.first(k) + 1, j = w.second(k) + 1;
    if (!spec.beta[a]) std::swap(i, j);
    std::vector<linalg::Int> r1(L + 1, 0), r2(L + 1, 0);
    r1[i - 1] += x;
    r1[i] -= 1;
    r2[i - 1] += 1 - x * xb;
    r2[j - 1] += xb;
    r2[j] -= 1;
    for (auto& v : r1) v = linalg::mod(v, m);
    for (auto& v : r2) v = linalg::mod(v, m);
    rows.push_back(r1);
    rows.push_back(r2);
  }
  (void)A;
  return rows;
}

// counts[k][l] = number of colorings with input k and output l.
inline linalg::Matrix count_colorings(const Nanoword& w, const ColoringSpec& spec, bool prime_path = false) {
  spec.validate(*w.alphabet());
  const linalg::Int m = spec.modulus;
  if (prime_path && !linalg::is_prime(m)) throw InvalidSpec("prime path needs a prime modulus");
  const int L = w.length();
  linalg::Matrix sys = coloring_system(w, spec);
  std::vector<linalg::Int> rhs(sys.size(), 0);
  std::vector<linalg::Int> e0(L + 1, 0), eL(L + 1, 0);
  e0[0] = 1;
  eL[L] = 1;
  sys.push_back(e0);
  sys.push_back(eL);
  rhs.push_back(0);
  rhs.push_back(0);
  linalg::Matrix counts(m, std::vector<linalg::Int>(m, 0));
  for (linalg::Int k = 0; k < m; ++k)
    for (linalg::Int l = 0; l < m; ++l) {
      rhs[rhs.size() - 2] = k;
      rhs[rhs.size() - 1] = l;
      counts[k][l] = prime_path ? linalg::count_solutions_prime(sys, rhs, m) : linalg::count_solutions_smith(sys, rhs, m);
    }
  return counts;
}

}  // namespace nanohom
