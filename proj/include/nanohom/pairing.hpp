#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "selflink.hpp"

namespace nanohom {

using PiMatrix = std::vector<std::vector<PiElement>>;

// Alphabet of letters 0..k-1 with skew-symmetric n and l.
struct AlphaForm {
  AlphabetPtr alphabet;
  std::vector<int> proj;
  IntMatrix n;
  PiMatrix l;
  int size() const { return static_cast<int>(proj.size()); }
};

// Index 0 is the distinguished element s; letter A sits at index A + 1.
struct AlphaPairing {
  AlphabetPtr alphabet;
  std::vector<int> proj;
  PiMatrix b;

  int size() const { return static_cast<int>(proj.size()); }
  const PiElement& at(int x, int y) const { return b[x][y]; }

  std::string str() const {
    const Alphabet& A = *alphabet;
    std::vector<std::string> labels{"s"};
    for (int i = 0; i < size(); ++i) labels.push_back(default_letter_name(i) + "(" + A.name(proj[i]) + ")");
    std::vector<size_t> width(labels.size(), 0);
    for (size_t j = 0; j < labels.size(); ++j) {
      width[j] = labels[j].size();
      for (size_t i = 0; i < labels.size(); ++i) width[j] = std::max(width[j], PiGroup::str(A, b[i][j]).size());
    }
    size_t lw = 0;
    for (const auto& l : labels) lw = std::max(lw, l.size());
    auto pad = [](std::string s, size_t w) { return s + std::string(w - s.size(), ' '); };
    std::string out = pad("", lw);
    for (size_t j = 0; j < labels.size(); ++j) out += " | " + pad(labels[j], width[j]);
    out += "\n";
    for (size_t i = 0; i < labels.size(); ++i) {
      out += pad(labels[i], lw);
      for (size_t j = 0; j < labels.size(); ++j) out += " | " + pad(PiGroup::str(A, b[i][j]), width[j]);
      out += "\n";
    }
    return out;
  }
};

inline PiElement pi_pow(const Alphabet& A, int a, int e) { return PiGroup::pow(A, PiGroup::gen(A, a), e); }

// lk(D,E) = (D o E)(E o D)^{-1}, D o E = prod |F| over i_D < i_F < j_D, i_E < j_F < j_E.
inline AlphaForm linking_form(const Nanoword& w) {
  const Alphabet& A = *w.alphabet();
  const int k = w.num_letters();
  PiMatrix circ(k, std::vector<PiElement>(k, PiGroup::identity(A)));
  for (int D = 0; D < k; ++D)
    for (int E = 0; E < k; ++E)
      for (int F = 0; F < k; ++F)
        if (w.first(D) < w.first(F) && w.first(F) < w.second(D) && w.first(E) < w.second(F) &&
            w.second(F) < w.second(E))
          circ[D][E] = PiGroup::mul(A, circ[D][E], PiGroup::gen(A, w.value(F)));
  AlphaForm f{w.alphabet(), w.proj(), interlacement(w), {}};
  f.l.assign(k, std::vector<PiElement>(k, PiGroup::identity(A)));
  for (int D = 0; D < k; ++D)
    for (int E = 0; E < k; ++E)
      if (D != E) f.l[D][E] = PiGroup::mul(A, circ[D][E], PiGroup::inv(A, circ[E][D]));
  return f;
}

// b(A,s) = prod_C |C|^{n(A,C)}, b(A,B) = l(A,B)^2 |A|^{n(A,B)} |B|^{n(A,B)}.
inline AlphaPairing to_pairing(const AlphaForm& f) {
  const Alphabet& A = *f.alphabet;
  const int k = f.size();
  AlphaPairing p{f.alphabet, f.proj, PiMatrix(k + 1, std::vector<PiElement>(k + 1, PiGroup::identity(A)))};
  for (int X = 0; X < k; ++X) {
    PiElement x = PiGroup::identity(A);
    for (int C = 0; C < k; ++C)
      if (f.n[X][C]) x = PiGroup::mul(A, x, pi_pow(A, f.proj[C], f.n[X][C]));
    p.b[X + 1][0] = x;
    p.b[0][X + 1] = PiGroup::inv(A, x);
    for (int Y = 0; Y < k; ++Y) {
      if (X == Y) continue;
      PiElement v = PiGroup::pow(A, f.l[X][Y], 2);
      v = PiGroup::mul(A, v, pi_pow(A, f.proj[X], f.n[X][Y]));
      v = PiGroup::mul(A, v, pi_pow(A, f.proj[Y], f.n[X][Y]));
      p.b[X + 1][Y + 1] = v;
    }
  }
  return p;
}

inline AlphaPairing linking_pairing(const Nanoword& w) { return to_pairing(linking_form(w)); }

inline AlphaPairing trivial_pairing(AlphabetPtr A) {
  return AlphaPairing{A, {}, PiMatrix(1, std::vector<PiElement>(1, PiGroup::identity(*A)))};
}

// Restriction to the given letters (in the given order).
inline AlphaPairing restrict_pairing(const AlphaPairing& p, const std::vector<int>& letters) {
  AlphaPairing q{p.alphabet, {}, {}};
  std::vector<int> idx{0};
  for (int A : letters) {
    q.proj.push_back(p.proj[A]);
    idx.push_back(A + 1);
  }
  q.b.assign(idx.size(), std::vector<PiElement>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) q.b[i][j] = p.b[idx[i]][idx[j]];
  return q;
}

inline bool is_annihilating(const AlphaPairing& p, int A) {
  for (int C = 0; C <= p.size(); ++C)
    if (!PiGroup::is_identity(p.b[A + 1][C])) return false;
  return true;
}

inline bool are_twins(const AlphaPairing& p, int A, int B) {
  if (A == B || p.proj[A] != p.alphabet->tau(p.proj[B])) return false;
  for (int C = 0; C <= p.size(); ++C)
    if (p.b[A + 1][C] != p.b[B + 1][C]) return false;
  return true;
}

inline bool is_primitive(const AlphaPairing& p) {
  for (int A = 0; A < p.size(); ++A) {
    if (is_annihilating(p, A)) return false;
    for (int B = A + 1; B < p.size(); ++B)
      if (are_twins(p, A, B)) return false;
  }
  return true;
}

// Deletes annihilating elements and twin pairs until primitive. With an engine, each step
// picks uniformly among all available deletions; otherwise the first one found.
inline AlphaPairing compress(const AlphaPairing& p, std::mt19937_64* rng = nullptr) {
  AlphaPairing cur = p;
  for (;;) {
    std::vector<std::vector<int>> options;
    for (int A = 0; A < cur.size(); ++A) {
      if (is_annihilating(cur, A)) options.push_back({A});
      for (int B = A + 1; B < cur.size(); ++B)
        if (are_twins(cur, A, B)) options.push_back({A, B});
      if (!rng && !options.empty()) break;
    }
    if (options.empty()) return cur;
    size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<size_t>(0, options.size() - 1)(*rng);
    std::vector<int> keep;
    for (int A = 0; A < cur.size(); ++A)
      if (std::find(options[pick].begin(), options[pick].end(), A) == options[pick].end()) keep.push_back(A);
    cur = restrict_pairing(cur, keep);
  }
}

inline bool pairings_isomorphic(const AlphaPairing& p, const AlphaPairing& q) {
  if (p.size() != q.size()) return false;
  require_same(p.alphabet, q.alphabet);
  const int k = p.size();
  if (p.b[0][0] != q.b[0][0]) return false;
  auto sig = [](const AlphaPairing& x, int A) { return std::make_pair(x.proj[A], x.b[A + 1][0]); };
  std::vector<int> map(k, -1);
  std::vector<bool> used(k, false);
  std::function<bool(int)> rec = [&](int A) {
    if (A == k) return true;
    for (int B = 0; B < k; ++B) {
      if (used[B] || sig(p, A) != sig(q, B)) continue;
      if (p.b[A + 1][A + 1] != q.b[B + 1][B + 1]) continue;
      bool ok = true;
      for (int C = 0; C < A && ok; ++C)
        ok = p.b[A + 1][C + 1] == q.b[B + 1][map[C] + 1] && p.b[C + 1][A + 1] == q.b[map[C] + 1][B + 1];
      if (!ok) continue;
      map[A] = B;
      used[B] = true;
      if (rec(A + 1)) return true;
      used[B] = false;
    }
    map[A] = -1;
    return false;
  };
  return rec(0);
}

inline int rho(const AlphaPairing& p) { return compress(p).size(); }

inline std::map<std::pair<int, PiElement>, int> rho_ax(const AlphaPairing& p) {
  const AlphaPairing c = compress(p);
  std::map<std::pair<int, PiElement>, int> r;
  for (int A = 0; A < c.size(); ++A) ++r[{c.proj[A], c.b[A + 1][0]}];
  return r;
}

inline SelfLinkSection pairing_u(const AlphaPairing& p) {
  const Alphabet& al = *p.alphabet;
  auto cls = [&](int a) {
    ZPi s(p.alphabet);
    for (int A = 0; A < p.size(); ++A)
      if (p.proj[A] == a && !PiGroup::is_identity(p.b[A + 1][0])) s.add(p.b[A + 1][0], 1);
    return s;
  };
  SelfLinkSection u(p.alphabet);
  for (int o = 0; o < al.num_orbits(); ++o) {
    const auto& orb = al.orbit_info(o);
    u.values[o] = cls(orb.rep);
    if (!orb.fixed) u.values[o] -= cls(orb.other);
  }
  u.normalize();
  return u;
}

inline AlphaPairing direct_sum(const AlphaPairing& p, const AlphaPairing& q) {
  require_same(p.alphabet, q.alphabet);
  const Alphabet& A = *p.alphabet;
  const int k = p.size(), m = q.size();
  AlphaPairing r{p.alphabet, p.proj, PiMatrix(k + m + 1, std::vector<PiElement>(k + m + 1, PiGroup::identity(A)))};
  r.proj.insert(r.proj.end(), q.proj.begin(), q.proj.end());
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) r.b[i][j] = p.b[i][j];
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) r.b[i ? i + k : 0][j ? j + k : 0] = q.b[i][j];
  return r;
}

inline AlphaPairing opposite(const AlphaPairing& p) {
  AlphaPairing r = p;
  for (int i = 0; i <= p.size(); ++i)
    for (int j = 0; j <= p.size(); ++j) r.b[i][j] = p.b[j][i];
  return r;
}

inline AlphaPairing inverse(const AlphaPairing& p) {
  AlphaPairing r = opposite(p);
  for (int& a : r.proj) a = p.alphabet->tau(a);
  return r;
}

enum class FormMove { I, II, III };

// Moves (i)*-(iii)* on alpha-forms; letters name A (and B, C) of the move.
inline AlphaForm form_move(const AlphaForm& f, FormMove kind, const std::vector<int>& letters) {
  const Alphabet& al = *f.alphabet;
  const int k = f.size();
  auto need = [&](size_t cnt) {
    if (letters.size() != cnt) throw PreconditionViolated("move needs " + std::to_string(cnt) + " letters");
    for (int x : letters)
      if (x < 0 || x >= k) throw PreconditionViolated("letter out of range");
  };
  auto remove = [&](std::vector<int> gone) {
    AlphaForm g{f.alphabet, {}, {}, {}};
    std::vector<int> keep;
    for (int A = 0; A < k; ++A)
      if (std::find(gone.begin(), gone.end(), A) == gone.end()) keep.push_back(A);
    for (int A : keep) {
      g.proj.push_back(f.proj[A]);
      g.n.emplace_back();
      g.l.emplace_back();
      for (int B : keep) {
        g.n.back().push_back(f.n[A][B]);
        g.l.back().push_back(f.l[A][B]);
      }
    }
    return g;
  };
  switch (kind) {
    case FormMove::I: {
      need(1);
      const int A = letters[0];
      for (int C = 0; C < k; ++C) {
        if (f.n[A][C] != 0) throw PreconditionViolated("(i)*: n(A,C) != 0");
        if (!PiGroup::is_identity(f.l[A][C])) throw PreconditionViolated("(i)*: l(A,C) != 1");
      }
      return remove({A});
    }
    case FormMove::II: {
      need(2);
      const int A = letters[0], B = letters[1];
      if (A == B) throw PreconditionViolated("(ii)*: letters must differ");
      if (f.proj[A] != al.tau(f.proj[B])) throw PreconditionViolated("(ii)*: |A| != tau(|B|)");
      for (int C = 0; C < k; ++C) {
        if (f.n[A][C] != f.n[B][C]) throw PreconditionViolated("(ii)*: n(A,C) != n(B,C)");
        if (f.l[A][C] != PiGroup::mul(al, f.l[B][C], pi_pow(al, f.proj[B], f.n[B][C])))
          throw PreconditionViolated("(ii)*: l(A,C) != l(B,C)|B|^n(B,C)");
      }
      return remove({A, B});
    }
    case FormMove::III: {
      need(3);
      const int A = letters[0], B = letters[1], C = letters[2];
      if (A == B || B == C || A == C) throw PreconditionViolated("(iii)*: letters must differ");
      if (f.proj[A] != f.proj[B] || f.proj[B] != f.proj[C])
        throw PreconditionViolated("(iii)*: |A|, |B|, |C| differ");
      if (f.n[A][B] != 1 || f.n[B][C] != 1 || f.n[A][C] != 0)
        throw PreconditionViolated("(iii)*: need n(A,B) = n(B,C) = 1, n(A,C) = 0");
      AlphaForm g = f;
      auto set = [&](int X, int Y, int n, const PiElement& l) {
        g.n[X][Y] = n;
        g.n[Y][X] = -n;
        g.l[X][Y] = l;
        g.l[Y][X] = PiGroup::inv(al, l);
      };
      set(A, B, 0, PiGroup::mul(al, f.l[A][B], PiGroup::gen(al, f.proj[C])));
      set(B, C, 0, PiGroup::mul(al, f.l[B][C], PiGroup::gen(al, f.proj[A])));
      set(A, C, 1, PiGroup::mul(al, f.l[A][C], PiGroup::inv(al, PiGroup::gen(al, f.proj[B]))));
      return g;
    }
  }
  return f;
}

// max(1 + largest monomial degree of u^w, rho(w)); 0 when both vanish.
inline int norm_lower_bound(const Nanoword& w) {
  return std::max(1 + max_monomial_degree(self_link_function(w)), rho(linking_pairing(w)));
}

}  // namespace nanohom
