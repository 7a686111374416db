#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "interlacement.hpp"
#include "matrixmod.hpp"

namespace nanohom {

// Vertices 0..n; vertex i >= 1 has a segment edge to i-1 (weight k[i]) and, at second
// occurrences, an arc to arc_to[i] (weight l[i]).
struct LambdaGraph {
  int n = 0;
  std::vector<Lambda> k, l;
  std::vector<int> arc_to;

  int num_arcs() const {
    int c = 0;
    for (int t : arc_to) c += t >= 0;
    return c;
  }
  // Number of descending paths from n to 0.
  long long num_paths() const {
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i) c[i] = c[i - 1] + (arc_to[i] >= 0 ? c[arc_to[i]] : 0);
    return c[n];
  }
};

inline LambdaGraph lambda_graph(const Nanoword& w) {
  const AlphabetPtr& A = w.alphabet();
  LambdaGraph g;
  g.n = w.length();
  g.k.assign(g.n + 1, Lambda(A));
  g.l.assign(g.n + 1, Lambda(A));
  g.arc_to.assign(g.n + 1, -1);
  for (int i = 1; i <= g.n; ++i) {
    const int a = w.value_at(i - 1);
    if (w.is_first(i - 1)) {
      g.k[i] = lam_gen(A, a);
    } else {
      g.k[i] = lam_bullet(A, a);
      g.l[i] = lam_one(A) - lam_gen(A, a) * lam_bullet(A, a);
      g.arc_to[i] = w.first(w.at(i - 1));
    }
  }
  return g;
}

// Path sum with weights written right to left along the path: L(i) = L(i-1) k_i + L(i') l_i.
inline Lambda lambda(const Nanoword& w) {
  const LambdaGraph g = lambda_graph(w);
  std::vector<Lambda> L(g.n + 1, Lambda(w.alphabet()));
  L[0] = lam_one(w.alphabet());
  for (int i = 1; i <= g.n; ++i) {
    L[i] = L[i - 1] * g.k[i];
    if (g.arc_to[i] >= 0) L[i] += L[g.arc_to[i]] * g.l[i];
  }
  return L[g.n];
}

inline Lambda lambda_prime(const Nanoword& w) { return iota(lambda(w)); }

// v+ = lambda' v- read off by solving the rows of M_alpha(w) for x_1, ..., x_n in turn.
inline Lambda lambda_prime_from_matrix(const Nanoword& w) {
  const AlphabetPtr& A = w.alphabet();
  if (w.empty()) return lam_one(A);
  const WeightedMatrix M = weighted_matrix(w, all_letters(*A));
  const int n = M.cols() - 1;
  std::vector<int> defining(n + 1, -1);
  for (int r = 0; r < M.rows(); ++r) {
    int top = -1;
    for (int c = 0; c <= n; ++c)
      if (!M.entries[r][c].is_zero()) top = c;
    if (M.entries[r][top] != -lam_one(A)) throw std::logic_error("row is not solved for its last column");
    defining[top] = r;
  }
  std::vector<Lambda> X(n + 1, Lambda(A));
  X[0] = lam_one(A);
  for (int c = 1; c <= n; ++c) {
    const auto& row = M.entries[defining[c]];
    for (int j = 0; j < c; ++j)
      if (!row[j].is_zero()) X[c] += row[j] * X[j];
  }
  return X[n];
}

// Components lambda_{i,j} indexed [2 i + j] by (deg mod 2, deg. mod 2).
inline std::array<Lambda, 4> lambda_split(const Lambda& x) {
  std::array<Lambda, 4> out{Lambda(x.alphabet()), Lambda(x.alphabet()), Lambda(x.alphabet()), Lambda(x.alphabet())};
  for (const auto& [g, c] : x.terms()) out[2 * (PsiGroup::deg(g) % 2) + PsiGroup::deg_bullet(g) % 2].add(g, c);
  return out;
}

using PsiTable = std::map<std::pair<PiWord, PiWord>, Coeff>;

// psi(a) = z_a (x) 1, psi(a.) = 1 (x) z_a.
inline PsiTable psi_expand(const Lambda& x) {
  PsiTable t;
  if (!x.alphabet()) return t;
  const Alphabet& A = *x.alphabet();
  for (const auto& [g, c] : x.terms()) {
    PiWord l, r;
    for (const auto& s : g.syl) {
      BigPiGroup::push(A, l, {s.orbit, s.m});
      BigPiGroup::push(A, r, {s.orbit, s.mb});
    }
    auto [it, fresh] = t.emplace(std::make_pair(l, r), c);
    if (!fresh && (it->second += c) == 0) t.erase(it);
  }
  return t;
}

inline std::string psi_table_str(const Alphabet& A, const PsiTable& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [xy, c] : t) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Coeff a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "·";
    s += "(" + BigPiGroup::str(A, xy.first) + " ⊗ " + BigPiGroup::str(A, xy.second) + ")";
  }
  return s;
}

// Ring maps Lambda -> Z Pi: p(a) = z_a, p(a.) = z_tau(a); r(a) = z_a, r(a.) = 1; r.(a) = 1, r.(a.) = z_a.
enum class LambdaMap { P, R, RBullet };

inline ZBigPi lambda_map(const Lambda& x, LambdaMap which) {
  const AlphabetPtr& A = x.alphabet();
  return x.map<BigPiGroup>(A, [&](const PsiElement& g) {
    PiWord z;
    for (const auto& s : g.syl) {
      const int e = which == LambdaMap::P ? s.m - s.mb : which == LambdaMap::R ? s.m : s.mb;
      BigPiGroup::push(*A, z, {s.orbit, e});
    }
    return z;
  });
}

struct LambdaCheckReport {
  bool p_ok = false, r_ok = false, r_bullet_ok = false;
  std::string diagnostics;
  bool ok() const { return p_ok && r_ok && r_bullet_ok; }
};

inline LambdaCheckReport lambda_checks(const Nanoword& w) {
  const AlphabetPtr& A = w.alphabet();
  const Lambda l = lambda(w);
  LambdaCheckReport rep;
  const ZBigPi one = ZBigPi::one(A);
  const ZBigPi p = lambda_map(l, LambdaMap::P), r = lambda_map(l, LambdaMap::R), rb = lambda_map(l, LambdaMap::RBullet);
  rep.p_ok = p == ZBigPi(A, gamma(w));
  rep.r_ok = r == one;
  rep.r_bullet_ok = rb == one;
  if (!rep.p_ok) rep.diagnostics += "p(lambda) = " + p.str() + " but gamma = " + BigPiGroup::str(*A, gamma(w)) + "\n";
  if (!rep.r_ok) rep.diagnostics += "r(lambda) = " + r.str() + "\n";
  if (!rep.r_bullet_ok) rep.diagnostics += "r.(lambda) = " + rb.str() + "\n";
  return rep;
}

// w_* = |A_1|_* ... |A_n|_*, bulleted at second occurrences.
inline PsiElement w_star(const Nanoword& w) {
  const Alphabet& A = *w.alphabet();
  PsiElement x;
  for (int i = 0; i < w.length(); ++i) {
    const int a = w.value_at(i);
    x = PsiGroup::mul(A, x, w.is_first(i) ? PsiGroup::gen(A, a) : PsiGroup::bullet(A, a));
  }
  return x;
}

}  // namespace nanohom
