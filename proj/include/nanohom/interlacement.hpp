#pragma once

#include <map>
#include <vector>

#include "group_ring.hpp"

namespace nanohom {

using IntMatrix = std::vector<std::vector<int>>;

// n(A,B) = 1 for A..B..A..B, -1 for B..A..B..A, 0 otherwise.
inline IntMatrix interlacement(const Nanoword& w) {
  const int k = w.num_letters();
  IntMatrix n(k, std::vector<int>(k, 0));
  for (int A = 0; A < k; ++A)
    for (int B = 0; B < k; ++B) {
      if (A == B) continue;
      const int iA = w.first(A), jA = w.second(A), iB = w.first(B), jB = w.second(B);
      if (iA < iB && iB < jA && jA < jB) n[A][B] = 1;
      else if (iB < iA && iA < jB && jB < jA) n[A][B] = -1;
    }
  return n;
}

// [A]_w = prod_B |B|^{n(A,B)} in pi.
inline PiElement letter_class(const Nanoword& w, int A, const IntMatrix& n) {
  const Alphabet& al = *w.alphabet();
  if (A < 0 || A >= w.num_letters()) throw UnknownLetter("letter index " + std::to_string(A));
  PiElement x = PiGroup::identity(al);
  for (int B = 0; B < w.num_letters(); ++B)
    if (n[A][B]) x = PiGroup::mul(al, x, PiGroup::pow(al, PiGroup::gen(al, w.value(B)), n[A][B]));
  return x;
}

inline PiElement letter_class(const Nanoword& w, int A) { return letter_class(w, A, interlacement(w)); }

inline std::vector<PiElement> letter_classes(const Nanoword& w) {
  const IntMatrix n = interlacement(w);
  std::vector<PiElement> out;
  for (int A = 0; A < w.num_letters(); ++A) out.push_back(letter_class(w, A, n));
  return out;
}

// H-covering; H is keyed by orbit so that H_a = H_{tau(a)} holds by construction.
using SubgroupFamily = std::map<int, SubgroupOfPi>;

inline Nanoword covering(const Nanoword& w, const SubgroupFamily& H) {
  const Alphabet& al = *w.alphabet();
  const auto cls = letter_classes(w);
  std::vector<bool> keep(w.num_letters());
  for (int A = 0; A < w.num_letters(); ++A) {
    auto it = H.find(al.orbit(w.value(A)));
    keep[A] = it == H.end() ? PiGroup::is_identity(cls[A]) : subgroup_contains(al, it->second, cls[A]);
  }
  std::vector<int> word;
  for (int A : w.word())
    if (keep[A]) word.push_back(A);
  return Nanoword::compact(w.alphabet(), word, w.proj(), w.names());
}

inline Nanoword covering(const Nanoword& w, const SubgroupOfPi& H) {
  SubgroupFamily fam;
  for (int o = 0; o < w.alphabet()->num_orbits(); ++o) fam[o] = H;
  return covering(w, fam);
}

// gamma_i = z_{|w(i)|} at first occurrences and z_{tau|w(i)|} at second occurrences.
template <class G>
typename G::Elem gamma_generic(const Nanoword& w) {
  const Alphabet& al = *w.alphabet();
  auto x = G::identity(al);
  for (int i = 0; i < w.length(); ++i) {
    const int a = w.value_at(i);
    x = G::mul(al, x, G::gen(al, w.is_first(i) ? a : al.tau(a)));
  }
  return x;
}

inline PiWord gamma(const Nanoword& w) { return gamma_generic<BigPiGroup>(w); }
inline PiWord gamma_prime(const Nanoword& w) { return gamma_generic<BigPiPrimeGroup>(w); }

// Lift of gamma to the central extension; second occurrences contribute the inverse of the
// first-occurrence generator.
inline PiTildeElement gamma_tilde(const Nanoword& w) {
  const Alphabet& al = *w.alphabet();
  auto x = PiTildeGroup::identity(al);
  for (int i = 0; i < w.length(); ++i) {
    auto g = PiTildeGroup::gen(al, w.value_at(i));
    if (!w.is_first(i)) g = PiTildeGroup::inv(al, g);
    x = PiTildeGroup::mul(al, x, g);
  }
  return x;
}

// mu(o1, o2): gamma' projected to <x,y | x^2 = y^2 = 1> equals (xyxy)^mu.
inline IntMatrix mu(const Nanoword& w) {
  const Alphabet& al = *w.alphabet();
  const int k = al.num_orbits();
  const PiWord g = gamma_prime(w);
  IntMatrix m(k, std::vector<int>(k, 0));
  for (int o1 = 0; o1 < k; ++o1)
    for (int o2 = 0; o2 < k; ++o2) {
      if (o1 == o2) continue;
      std::vector<int> r;  // 0 = x, 1 = y
      for (const auto& s : g.syl) {
        const int v = s.orbit == o1 ? 0 : s.orbit == o2 ? 1 : -1;
        if (v < 0) continue;
        if (!r.empty() && r.back() == v) r.pop_back();
        else r.push_back(v);
      }
      if (r.size() % 4 != 0) throw std::logic_error("gamma' image is not a power of xyxy");
      const int e = static_cast<int>(r.size() / 4);
      m[o1][o2] = r.empty() ? 0 : (r[0] == 0 ? e : -e);
    }
  return m;
}

}  // namespace nanohom
