#pragma once

#include <string>
#include <vector>

#include "group_ring.hpp"

namespace nanohom {

// Element of the free group on Psi: a freely reduced product of underlined generators.
struct FElement {
  struct Term {
    PsiElement psi;
    int sign;  // +1 or -1
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;
  bool operator==(const FElement&) const = default;

  void push(const Term& t) {
    if (!terms.empty() && terms.back().psi == t.psi && terms.back().sign == -t.sign) terms.pop_back();
    else terms.push_back(t);
  }
  static FElement generator(const PsiElement& psi) {
    FElement x;
    x.terms.push_back({psi, 1});
    return x;
  }
  FElement inverse() const {
    FElement x;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) x.push({it->psi, -it->sign});
    return x;
  }
  friend FElement operator*(FElement x, const FElement& y) {
    for (const auto& t : y.terms) x.push(t);
    return x;
  }
};

using CharSeq = std::vector<FElement::Term>;

inline void require_tau_free(const Alphabet& A) {
  if (!A.tau_free()) throw TauHasFixedPoint("characteristic sequences need a fixed-point-free involution");
}

// Left action of a Psi element, applied to every generator.
inline FElement psi_act(const Alphabet& A, const PsiElement& g, const FElement& x) {
  FElement y;
  for (const auto& t : x.terms) y.push({PsiGroup::mul(A, g, t.psi), t.sign});
  return y;
}

inline FElement kei_act(const Alphabet& A, int a, const FElement& x) {
  require_tau_free(A);
  return psi_act(A, PsiGroup::gen(A, a), x);
}

// x *_a y = y (a. x) (a. a y)^{-1} for a in the orientation;
// x *_{tau a} y = (a.^{-1} a^{-1} y)^{-1} (a.^{-1} x) y otherwise.
inline FElement kei_star(const Alphabet& A, const FElement& x, int a, const FElement& y) {
  require_tau_free(A);
  if (A.oriented(a)) {
    const PsiElement ab = PsiGroup::bullet(A, a);
    return y * psi_act(A, ab, x) * psi_act(A, PsiGroup::mul(A, ab, PsiGroup::gen(A, a)), y).inverse();
  }
  // For a = tau(r): r.^{-1} = a. and r^{-1} = a as elements of Psi.
  const PsiElement ab = PsiGroup::bullet(A, a);
  return psi_act(A, PsiGroup::mul(A, ab, PsiGroup::gen(A, a)), y).inverse() * psi_act(A, ab, x) * y;
}

// Image in F of the output of the kei of w, starting from the underlined unit at the input.
inline CharSeq char_sequence(const Nanoword& w) {
  const Alphabet& A = *w.alphabet();
  require_tau_free(A);
  std::vector<FElement> x(w.length() + 1);
  x[0] = FElement::generator(PsiGroup::identity(A));
  for (int i = 1; i <= w.length(); ++i) {
    const int a = w.value_at(i - 1);
    if (w.is_first(i - 1)) x[i] = kei_act(A, a, x[i - 1]);
    else x[i] = kei_star(A, x[i - 1], a, x[w.first(w.at(i - 1))]);
  }
  return x[w.length()].terms;
}

// Reversed sequence with tau_# (a -> a^{-1}, a. -> a.^{-1}) applied to every term.
inline CharSeq charseq_inverse(const Alphabet& A, const CharSeq& cs) {
  FElement x;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) x.push({PsiGroup::bar(A, it->psi), it->sign});
  return x.terms;
}

inline Lambda charseq_sum(const AlphabetPtr& A, const CharSeq& cs) {
  Lambda s(A);
  for (const auto& t : cs) s.add(t.psi, t.sign);
  return s;
}

inline std::string charseq_str(const Alphabet& A, const CharSeq& cs) {
  std::string s;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += (cs[i].sign > 0 ? "+" : "-") + PsiGroup::str(A, cs[i].psi, true);
  }
  return s;
}

}  // namespace nanohom
