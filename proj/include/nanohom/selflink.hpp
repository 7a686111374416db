#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "interlacement.hpp"

namespace nanohom {

// Values of a section on the orientation, indexed by orbit. Values at fixed points have
// coefficients reduced mod 2 (stored as 0/1).
struct SelfLinkSection {
  AlphabetPtr alphabet;
  std::vector<ZPi> values;

  SelfLinkSection() = default;
  explicit SelfLinkSection(AlphabetPtr A) : alphabet(A), values(A->num_orbits(), ZPi(A)) {}

  bool mod2(int o) const { return alphabet->orbit_info(o).fixed; }

  void normalize() {
    for (int o = 0; o < static_cast<int>(values.size()); ++o) {
      if (!mod2(o)) continue;
      ZPi r(alphabet);
      for (const auto& [g, c] : values[o].terms()) r.add(g, linalg::mod(c, 2));
      values[o] = r;
    }
  }

  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const ZPi& v) { return v.is_zero(); });
  }

  bool operator==(const SelfLinkSection& o) const { return values == o.values; }

  SelfLinkSection& operator+=(const SelfLinkSection& o) {
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    normalize();
    return *this;
  }
  friend SelfLinkSection operator+(SelfLinkSection x, const SelfLinkSection& y) { return x += y; }
  friend SelfLinkSection operator-(SelfLinkSection x) {
    for (auto& v : x.values) v = -v;
    x.normalize();
    return x;
  }

  // Overbar: elements of pi sent to their inverses.
  SelfLinkSection conjugate() const {
    SelfLinkSection s(alphabet);
    for (size_t i = 0; i < values.size(); ++i) s.values[i] = bar(values[i]);
    return s;
  }

  std::string str() const {
    std::string s;
    for (int o = 0; o < alphabet->num_orbits(); ++o) {
      s += "u(" + alphabet->orbit_name(o) + ") = " + values[o].str();
      if (mod2(o)) s += " (mod 2)";
      s += "\n";
    }
    return s;
  }
};

// [a]_w = sum of the nontrivial letter classes over letters projecting to a.
inline ZPi self_link_class(const Nanoword& w, int a) {
  const auto cls = letter_classes(w);
  ZPi s(w.alphabet());
  for (int A = 0; A < w.num_letters(); ++A)
    if (w.value(A) == a && !PiGroup::is_identity(cls[A])) s.add(cls[A], 1);
  return s;
}

inline SelfLinkSection self_link_function(const Nanoword& w) {
  const Alphabet& al = *w.alphabet();
  SelfLinkSection u(w.alphabet());
  for (int o = 0; o < al.num_orbits(); ++o) {
    const auto& orb = al.orbit_info(o);
    u.values[o] = self_link_class(w, orb.rep);
    if (!orb.fixed) u.values[o] -= self_link_class(w, orb.other);
  }
  u.normalize();
  return u;
}

// delta_a(u(a)) = 0, d_a(u(a)) = 0 and d_a(u(b)) + d_b(u(a)) = 0 in R_{a,b}.
inline bool is_skew_symmetric_section(const SelfLinkSection& u) {
  const Alphabet& al = *u.alphabet;
  const int k = al.num_orbits();
  auto partial = [&](int of, int by) {
    Coeff s = 0;
    for (const auto& [g, c] : u.values[of].terms()) s += c * g.e[by];
    return s;
  };
  for (int a = 0; a < k; ++a) {
    Coeff d = u.values[a].coefficient(PiGroup::identity(al));
    Coeff p = partial(a, a);
    if (u.mod2(a)) {
      d = linalg::mod(d, 2);
      p = linalg::mod(p, 2);
    }
    if (d != 0 || p != 0) return false;
    for (int b = 0; b < k; ++b) {
      Coeff s = partial(b, a) + partial(a, b);
      if (u.mod2(a) || u.mod2(b)) s = linalg::mod(s, 2);
      if (s != 0) return false;
    }
  }
  return true;
}

// Largest monomial degree appearing in the section, or -1 for the zero section.
inline int max_monomial_degree(const SelfLinkSection& u) {
  int d = -1;
  for (const auto& v : u.values)
    for (const auto& [g, c] : v.terms()) d = std::max(d, PiGroup::degree(g));
  return d;
}

}  // namespace nanohom
