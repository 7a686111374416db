#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nanohom/classify.hpp"
#include "nanohom/io.hpp"

namespace nanohom {

// Readable failure messages for ring elements.
template <class G>
void PrintTo(const GroupRing<G>& x, std::ostream* os) {
  *os << x.str();
}

}  // namespace nanohom

namespace testing_support {

using namespace nanohom;

inline AlphabetPtr free2() { return Alphabet::from_pairs({{"a", "A"}, {"b", "B"}}); }
inline AlphabetPtr free3() { return Alphabet::from_pairs({{"a", "A"}, {"b", "B"}, {"c", "C"}}); }
inline AlphabetPtr fixed2() { return Alphabet::fixed_points({"a", "b"}); }
inline AlphabetPtr mixed() { return Alphabet::from_pairs({{"a", "A"}, {"b", "b"}, {"c", "c"}}); }
inline AlphabetPtr one_letter() { return Alphabet::fixed_points({"a"}); }

inline std::vector<AlphabetPtr> sample_alphabets() { return {free2(), fixed2(), mixed(), free3()}; }

// Uniform random nanoword with 0..max_letters letters.
inline Nanoword random_nanoword(std::mt19937_64& rng, const AlphabetPtr& A, int max_letters, int min_letters = 0) {
  const int k = std::uniform_int_distribution<int>(min_letters, max_letters)(rng);
  std::vector<int> w;
  for (int i = 0; i < k; ++i) w.insert(w.end(), {i, i});
  std::shuffle(w.begin(), w.end(), rng);
  std::vector<int> p(k);
  std::uniform_int_distribution<int> letter(0, A->size() - 1);
  for (int& x : p) x = letter(rng);
  return Nanoword(A, w, p).canonical();
}

// Random relabeling of the letters of w.
inline Nanoword relabel(std::mt19937_64& rng, const Nanoword& w) {
  std::vector<int> perm(w.num_letters());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> word, proj(w.num_letters());
  for (int A : w.word()) word.push_back(perm[A]);
  for (int A = 0; A < w.num_letters(); ++A) proj[perm[A]] = w.value(A);
  return Nanoword(w.alphabet(), word, proj);
}

// Applies `steps` random moves (insertions capped at max_length), recording the trace.
inline Nanoword random_walk(std::mt19937_64& rng, const Nanoword& w, const HomotopyData& d, int steps,
                            int max_length, std::vector<Move>* trace = nullptr) {
  Nanoword cur = w.canonical();
  for (int s = 0; s < steps; ++s) {
    auto succ = enumerate_moves(cur, d, {}, cur.length() + 4 <= max_length);
    if (succ.empty()) break;
    auto& [m, next] = succ[std::uniform_int_distribution<size_t>(0, succ.size() - 1)(rng)];
    if (trace) trace->push_back(m);
    cur = next.canonical();
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Expression parser for elements of Lambda: juxtaposition multiplies, "a." is the bullet
// generator, "^k" raises a generator (any integer) or a parenthesized factor (k >= 0).
// Example: "abc a.b.c. + (1-aa.)b.c. - 2 a^-1".

class LambdaParser {
 public:
  LambdaParser(AlphabetPtr A, std::string s) : A_(std::move(A)) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Lambda parse() {
    Lambda x = expr();
    if (i_ != s_.size()) fail("trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("lambda expression '" + s_ + "' at " + std::to_string(i_) + ": " + why);
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

  Lambda expr() {
    Lambda x(A_);
    int sign = 1;
    if (peek('-')) sign = -1, ++i_;
    else if (peek('+')) ++i_;
    x += sign * term();
    while (peek('+') || peek('-')) {
      sign = s_[i_++] == '-' ? -1 : 1;
      x += sign * term();
    }
    return x;
  }

  Lambda term() {
    Lambda x = factor();
    while (i_ < s_.size() && s_[i_] != '+' && s_[i_] != '-' && s_[i_] != ')') x = x * factor();
    return x;
  }

  int exponent() {
    if (!peek('^')) return 1;
    ++i_;
    size_t used = 0;
    const int e = std::stoi(s_.substr(i_), &used);
    i_ += used;
    return e;
  }

  Lambda factor() {
    if (peek('(')) {
      ++i_;
      Lambda x = expr();
      if (!peek(')')) fail("missing ')'");
      ++i_;
      const int e = exponent();
      if (e < 0) fail("negative power of a sum");
      Lambda r = lam_one(A_);
      for (int k = 0; k < e; ++k) r = r * x;
      return r;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      size_t used = 0;
      const long long c = std::stoll(s_.substr(i_), &used);
      i_ += used;
      return Lambda::constant(A_, c);
    }
    int best = -1;
    size_t len = 0;
    for (int a = 0; a < A_->size(); ++a) {
      const std::string& n = A_->name(a);
      if (n.size() > len && s_.compare(i_, n.size(), n) == 0) best = a, len = n.size();
    }
    if (best < 0) fail("unknown generator");
    i_ += len;
    const bool bullet = peek('.');
    if (bullet) ++i_;
    const int e = exponent();
    const Alphabet& al = *A_;
    PsiElement g = bullet ? PsiGroup::bullet(al, best) : PsiGroup::gen(al, best);
    PsiElement r = PsiGroup::identity(al);
    for (int k = 0; k < std::abs(e); ++k) r = PsiGroup::mul(al, r, e > 0 ? g : PsiGroup::inv(al, g));
    return Lambda(A_, r);
  }

  AlphabetPtr A_;
  std::string s_;
  size_t i_ = 0;
};

inline Lambda lam(const AlphabetPtr& A, const std::string& s) { return LambdaParser(A, s).parse(); }

// Single monomial of Psi, e.g. "b.a.ba".
inline PsiElement psi(const AlphabetPtr& A, const std::string& s) {
  const Lambda x = lam(A, s);
  if (x.size() != 1 || x.terms().begin()->second != 1) throw std::invalid_argument("not a monomial: " + s);
  return x.terms().begin()->first;
}

// Element of pi, e.g. "a b^-1".
inline PiElement pi(const AlphabetPtr& A, const std::string& s) {
  return parse_subgroup(*A, s == "1" ? "1" : s).generators.at(0);
}

// Signed characteristic-sequence terms, e.g. {"+a", "-b.a.a"}.
inline CharSeq seq(const AlphabetPtr& A, const std::vector<std::string>& terms) {
  CharSeq out;
  for (const auto& t : terms) out.push_back({psi(A, t.substr(1)), t[0] == '-' ? -1 : 1});
  return out;
}

// ---------------------------------------------------------------------------
// Oracles.

// lambda by listing every descending path of the graph explicitly.
inline Lambda lambda_by_paths(const Nanoword& w) {
  const LambdaGraph g = lambda_graph(w);
  Lambda total(w.alphabet());
  std::vector<Lambda> edges;  // weights from the top vertex downward
  std::function<void(int)> walk = [&](int v) {
    if (v == 0) {
      Lambda prod = lam_one(w.alphabet());
      for (auto it = edges.rbegin(); it != edges.rend(); ++it) prod = prod * *it;
      total += prod;
      return;
    }
    edges.push_back(g.k[v]);
    walk(v - 1);
    edges.pop_back();
    if (g.arc_to[v] >= 0) {
      edges.push_back(g.l[v]);
      walk(g.arc_to[v]);
      edges.pop_back();
    }
  };
  walk(g.n);
  return total;
}

// Determinant over Lambda^ab by plain cofactor expansion along the last row.
inline LambdaAb det_last_row(const std::vector<std::vector<LambdaAb>>& M, const AlphabetPtr& A) {
  const size_t n = M.size();
  if (n == 0) return LambdaAb::one(A);
  LambdaAb s(A);
  for (size_t c = 0; c < n; ++c) {
    if (M[n - 1][c].is_zero()) continue;
    std::vector<std::vector<LambdaAb>> minor;
    for (size_t r = 0; r + 1 < n; ++r) {
      minor.emplace_back();
      for (size_t j = 0; j < n; ++j)
        if (j != c) minor.back().push_back(M[r][j]);
    }
    const int sign = ((n - 1 + c) % 2) ? -1 : 1;
    s += sign * (M[n - 1][c] * det_last_row(minor, A));
  }
  return s;
}

// Coloring counts by enumerating all functions f: {0..L} -> Z/m.
inline linalg::Matrix colorings_brute_force(const Nanoword& w, const ColoringSpec& spec) {
  const linalg::Int m = spec.modulus;
  const int L = w.length();
  linalg::Matrix counts(m, std::vector<linalg::Int>(m, 0));
  std::vector<linalg::Int> f(L + 1, 0);
  for (;;) {
    bool ok = true;
    for (int k = 0; k < w.num_letters() && ok; ++k) {
      const int a = w.value(k);
      const linalg::Int x = spec.p[a], xb = spec.p_bullet[a];
      const int i = w.first(k) + 1, j = w.second(k) + 1;
      if (spec.beta[a]) {
        ok = linalg::mod(f[i] - x * f[i - 1], m) == 0 &&
             linalg::mod(f[j] - xb * f[j - 1] - (1 - x * xb) * f[i - 1], m) == 0;
      } else {
        ok = linalg::mod(f[i] - xb * f[i - 1] - (1 - x * xb) * f[j - 1], m) == 0 &&
             linalg::mod(f[j] - x * f[j - 1], m) == 0;
      }
    }
    if (ok) ++counts[f[0]][f[L]];
    int p = 0;
    while (p <= L && f[p] == m - 1) f[p++] = 0;
    if (p > L) break;
    ++f[p];
  }
  return counts;
}

// Number of solutions of A x = b over Z/m by enumeration.
inline linalg::Int solutions_brute_force(const linalg::Matrix& A, const std::vector<linalg::Int>& b, linalg::Int m) {
  const size_t C = A.empty() ? 0 : A[0].size();
  std::vector<linalg::Int> x(C, 0);
  linalg::Int count = 0;
  for (;;) {
    bool ok = true;
    for (size_t r = 0; r < A.size() && ok; ++r) {
      linalg::Int s = 0;
      for (size_t c = 0; c < C; ++c) s += A[r][c] * x[c];
      ok = linalg::mod(s - b[r], m) == 0;
    }
    count += ok;
    size_t p = 0;
    while (p < C && x[p] == m - 1) x[p++] = 0;
    if (p == C) break;
    ++x[p];
  }
  return count;
}

// Isomorphism of pairings by trying every permutation.
inline bool pairings_isomorphic_brute_force(const AlphaPairing& p, const AlphaPairing& q) {
  if (p.size() != q.size() || p.b[0][0] != q.b[0][0]) return false;
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int A = 0; A < p.size() && ok; ++A) {
      ok = p.proj[A] == q.proj[perm[A]] && p.b[A + 1][0] == q.b[perm[A] + 1][0] && p.b[0][A + 1] == q.b[0][perm[A] + 1];
      for (int B = 0; B < p.size() && ok; ++B) ok = p.b[A + 1][B + 1] == q.b[perm[A] + 1][perm[B] + 1];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random element of pi with small exponents.
inline PiElement random_pi(std::mt19937_64& rng, const Alphabet& A) {
  PiElement x = PiGroup::identity(A);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int& v : x.e) v = e(rng);
  PiGroup::normalize(A, x);
  return x;
}

// Random alpha-pairing on k letters (skew-symmetric b), with injected twins and annihilating
// letters so that compression has choices to make.
inline AlphaPairing random_pairing(std::mt19937_64& rng, const AlphabetPtr& A, int k) {
  const Alphabet& al = *A;
  AlphaPairing p{A, std::vector<int>(k), PiMatrix(k + 1, std::vector<PiElement>(k + 1, PiGroup::identity(al)))};
  std::uniform_int_distribution<int> letter(0, al.size() - 1);
  for (int& x : p.proj) x = letter(rng);
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      p.b[i][j] = random_pi(rng, al);
      p.b[j][i] = PiGroup::inv(al, p.b[i][j]);
    }
  std::uniform_int_distribution<int> coin(0, 2);
  const int extra = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int e = 0; e < extra; ++e) {
    const int n = p.size();
    AlphaPairing q{A, p.proj, PiMatrix(n + 2, std::vector<PiElement>(n + 2, PiGroup::identity(al)))};
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) q.b[i][j] = p.b[i][j];
    const int kind = n == 0 ? 0 : coin(rng);
    if (kind == 0) {
      q.proj.push_back(letter(rng));  // annihilating
    } else {
      const int src = std::uniform_int_distribution<int>(0, n - 1)(rng);
      q.proj.push_back(al.tau(p.proj[src]));  // twin of src
      for (int j = 0; j <= n; ++j) {
        q.b[n + 1][j] = p.b[src + 1][j];
        q.b[j][n + 1] = PiGroup::inv(al, p.b[src + 1][j]);
      }
      q.b[n + 1][src + 1] = q.b[src + 1][n + 1] = PiGroup::identity(al);
    }
    // Move the new letter to a random position.
    const int pos = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back(i);
    order.insert(order.begin() + pos, n);
    p = restrict_pairing(q, order);
  }
  return p;
}

}  // namespace testing_support
