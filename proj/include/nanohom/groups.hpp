#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "core.hpp"
#include "linalg.hpp"

namespace nanohom {

namespace detail {
inline std::string power(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}
inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// pi: abelian group on alpha with a tau(a) = 1, stored on the orientation basis.

struct PiElement {
  std::vector<int> e;  // per orbit; fixed orbits hold 0/1
  auto operator<=>(const PiElement&) const = default;
  bool operator==(const PiElement&) const = default;
};

struct PiGroup {
  using Elem = PiElement;
  static Elem identity(const Alphabet& A) { return {std::vector<int>(A.num_orbits(), 0)}; }
  static Elem gen(const Alphabet& A, int a) {
    Elem x = identity(A);
    x.e[A.orbit(a)] = A.sign(a);
    normalize(A, x);
    return x;
  }
  static void normalize(const Alphabet& A, Elem& x) {
    for (int o = 0; o < A.num_orbits(); ++o)
      if (A.orbit_info(o).fixed) x.e[o] = static_cast<int>(linalg::mod(x.e[o], 2));
  }
  static Elem mul(const Alphabet& A, const Elem& x, const Elem& y) {
    Elem z = x;
    for (size_t o = 0; o < z.e.size(); ++o) z.e[o] += y.e[o];
    normalize(A, z);
    return z;
  }
  static Elem inv(const Alphabet& A, const Elem& x) {
    Elem z = x;
    for (int& v : z.e) v = -v;
    normalize(A, z);
    return z;
  }
  static Elem pow(const Alphabet& A, const Elem& x, int k) {
    Elem z = x;
    for (int& v : z.e) v *= k;
    normalize(A, z);
    return z;
  }
  static bool is_identity(const Elem& x) {
    for (int v : x.e)
      if (v) return false;
    return true;
  }
  // Involution induced by tau.
  static Elem bar(const Alphabet& A, const Elem& x) { return inv(A, x); }
  static std::string str(const Alphabet& A, const Elem& x) {
    std::vector<std::string> parts;
    for (int o = 0; o < A.num_orbits(); ++o)
      if (x.e[o]) parts.push_back(detail::power(A.orbit_name(o), x.e[o]));
    return parts.empty() ? "1" : detail::join(parts, " ");
  }
  // Total degree: |free exponents| plus nonzero fixed-point bits.
  static int degree(const Elem& x) {
    int d = 0;
    for (int v : x.e) d += std::abs(v);
    return d;
  }
};

struct SubgroupOfPi {
  std::vector<PiElement> generators;
};

inline bool subgroup_contains(const Alphabet& A, const SubgroupOfPi& H, const PiElement& x) {
  const int k = A.num_orbits();
  linalg::Matrix rows;
  for (const auto& g : H.generators) rows.emplace_back(g.e.begin(), g.e.end());
  for (int o = 0; o < k; ++o)
    if (A.orbit_info(o).fixed) {
      std::vector<linalg::Int> r(k, 0);
      r[o] = 2;
      rows.push_back(r);
    }
  if (rows.empty()) return PiGroup::is_identity(x);
  return linalg::lattice_contains(rows, std::vector<linalg::Int>(x.e.begin(), x.e.end()));
}

// ---------------------------------------------------------------------------
// Pi (free product of Z per free orbit and Z/2 per fixed point) and Pi' (all orbits Z/2).

struct PiWord {
  struct Syl {
    int orbit;
    int exp;
    auto operator<=>(const Syl&) const = default;
    bool operator==(const Syl&) const = default;
  };
  std::vector<Syl> syl;
  auto operator<=>(const PiWord&) const = default;
  bool operator==(const PiWord&) const = default;
};

template <bool Prime>
struct PiWordGroupT {
  using Elem = PiWord;
  static bool torsion(const Alphabet& A, int o) { return Prime || A.orbit_info(o).fixed; }
  static Elem identity(const Alphabet&) { return {}; }
  static Elem gen(const Alphabet& A, int a) {
    const int o = A.orbit(a);
    return {{{o, torsion(A, o) ? 1 : A.sign(a)}}};
  }
  static Elem orbit_power(const Alphabet& A, int o, int e) {
    Elem x;
    push(A, x, {o, e});
    return x;
  }
  static void push(const Alphabet& A, Elem& x, PiWord::Syl s) {
    if (torsion(A, s.orbit)) s.exp = static_cast<int>(linalg::mod(s.exp, 2));
    if (s.exp == 0) return;
    if (!x.syl.empty() && x.syl.back().orbit == s.orbit) {
      int e = x.syl.back().exp + s.exp;
      if (torsion(A, s.orbit)) e = static_cast<int>(linalg::mod(e, 2));
      if (e == 0) x.syl.pop_back();
      else x.syl.back().exp = e;
    } else {
      x.syl.push_back(s);
    }
  }
  static Elem mul(const Alphabet& A, const Elem& x, const Elem& y) {
    Elem z = x;
    for (const auto& s : y.syl) push(A, z, s);
    return z;
  }
  static Elem inv(const Alphabet& A, const Elem& x) {
    Elem z;
    for (auto it = x.syl.rbegin(); it != x.syl.rend(); ++it) push(A, z, {it->orbit, -it->exp});
    return z;
  }
  static bool is_identity(const Elem& x) { return x.syl.empty(); }
  // Syllable length of orbit o (sum of |exponents|).
  static int orbit_length(const Elem& x, int o) {
    int l = 0;
    for (const auto& s : x.syl)
      if (s.orbit == o) l += std::abs(s.exp);
    return l;
  }
  // tau_*: z_a -> z_{tau(a)}.
  static Elem bar(const Alphabet& A, const Elem& x) {
    Elem z;
    for (const auto& s : x.syl) push(A, z, {s.orbit, -s.exp});
    return z;
  }
  static std::string str(const Alphabet& A, const Elem& x) {
    std::vector<std::string> parts;
    for (const auto& s : x.syl) parts.push_back(detail::power("z_" + A.orbit_name(s.orbit), s.exp));
    return parts.empty() ? "1" : detail::join(parts, " ");
  }
  // Image in pi (abelianization).
  static PiElement abelianize(const Alphabet& A, const Elem& x) {
    PiElement p = PiGroup::identity(A);
    for (const auto& s : x.syl) p.e[s.orbit] += s.exp;
    PiGroup::normalize(A, p);
    return p;
  }
};

using BigPiGroup = PiWordGroupT<false>;
using BigPiPrimeGroup = PiWordGroupT<true>;

inline PiWord to_pi_prime(const Alphabet& A, const PiWord& x) {
  PiWord z;
  for (const auto& s : x.syl) BigPiPrimeGroup::push(A, z, s);
  return z;
}

// ---------------------------------------------------------------------------
// Central extension of Pi in which each c_a = z_a z_{tau(a)} is central.
// Elements are (base in Pi, exponents of the central c's per orbit).

struct PiTildeElement {
  PiWord base;
  std::vector<int> central;
  auto operator<=>(const PiTildeElement&) const = default;
  bool operator==(const PiTildeElement&) const = default;
};

struct PiTildeGroup {
  using Elem = PiTildeElement;
  static Elem identity(const Alphabet& A) { return {{}, std::vector<int>(A.num_orbits(), 0)}; }
  static Elem gen(const Alphabet& A, int a) { return {BigPiGroup::gen(A, a), std::vector<int>(A.num_orbits(), 0)}; }
  static Elem central_gen(const Alphabet& A, int o) {
    Elem x = identity(A);
    x.central[o] = 1;
    return x;
  }
  // Each cancelled pair z_a z_{tau(a)} (or z_a z_a at a fixed point) contributes one c_a.
  static Elem mul(const Alphabet& A, const Elem& x, const Elem& y) {
    Elem z{BigPiGroup::mul(A, x.base, y.base), x.central};
    for (int o = 0; o < A.num_orbits(); ++o) {
      const int cancelled = BigPiGroup::orbit_length(x.base, o) + BigPiGroup::orbit_length(y.base, o) -
                            BigPiGroup::orbit_length(z.base, o);
      z.central[o] += y.central[o] + cancelled / 2;
    }
    return z;
  }
  static Elem inv(const Alphabet& A, const Elem& x) {
    Elem z{BigPiGroup::inv(A, x.base), x.central};
    for (int o = 0; o < A.num_orbits(); ++o) z.central[o] = -x.central[o] - BigPiGroup::orbit_length(x.base, o);
    return z;
  }
  static bool is_identity(const Elem& x) {
    if (!x.base.syl.empty()) return false;
    for (int c : x.central)
      if (c) return false;
    return true;
  }
  static std::string str(const Alphabet& A, const Elem& x) {
    std::vector<std::string> parts;
    for (const auto& s : x.base.syl) parts.push_back(detail::power("z~_" + A.orbit_name(s.orbit), s.exp));
    for (int o = 0; o < A.num_orbits(); ++o)
      if (x.central[o]) parts.push_back(detail::power("c_" + A.orbit_name(o), x.central[o]));
    return parts.empty() ? "1" : detail::join(parts, " ");
  }
};

// ---------------------------------------------------------------------------
// Psi: generators a, a. (bullet) with a a. = a. a and a tau(a) = a. tau(a). = 1; a free product
// of Z^2 per free orbit and (Z/2)^2 per fixed point.

struct PsiElement {
  struct Syl {
    int orbit;
    int m;   // non-bullet exponent
    int mb;  // bullet exponent
    auto operator<=>(const Syl&) const = default;
    bool operator==(const Syl&) const = default;
  };
  std::vector<Syl> syl;
  auto operator<=>(const PsiElement&) const = default;
  bool operator==(const PsiElement&) const = default;
};

struct PsiGroup {
  using Elem = PsiElement;
  static Elem identity(const Alphabet&) { return {}; }
  static Elem gen(const Alphabet& A, int a) {
    Elem x;
    push(A, x, {A.orbit(a), A.sign(a), 0});
    return x;
  }
  static Elem bullet(const Alphabet& A, int a) {
    Elem x;
    push(A, x, {A.orbit(a), 0, A.sign(a)});
    return x;
  }
  static void push(const Alphabet& A, Elem& x, PsiElement::Syl s) {
    const bool fx = A.orbit_info(s.orbit).fixed;
    auto red = [&](int v) { return fx ? static_cast<int>(linalg::mod(v, 2)) : v; };
    s.m = red(s.m);
    s.mb = red(s.mb);
    if (s.m == 0 && s.mb == 0) return;
    if (!x.syl.empty() && x.syl.back().orbit == s.orbit) {
      auto& b = x.syl.back();
      b.m = red(b.m + s.m);
      b.mb = red(b.mb + s.mb);
      if (b.m == 0 && b.mb == 0) x.syl.pop_back();
    } else {
      x.syl.push_back(s);
    }
  }
  static Elem mul(const Alphabet& A, const Elem& x, const Elem& y) {
    Elem z = x;
    for (const auto& s : y.syl) push(A, z, s);
    return z;
  }
  static Elem inv(const Alphabet& A, const Elem& x) {
    Elem z;
    for (auto it = x.syl.rbegin(); it != x.syl.rend(); ++it) push(A, z, {it->orbit, -it->m, -it->mb});
    return z;
  }
  static bool is_identity(const Elem& x) { return x.syl.empty(); }
  // Automorphism a -> tau(a), a. -> tau(a).
  static Elem bar(const Alphabet& A, const Elem& x) {
    Elem z;
    for (const auto& s : x.syl) push(A, z, {s.orbit, -s.m, -s.mb});
    return z;
  }
  // Reversal of the monomial (the anti-automorphism iota).
  static Elem reverse(const Alphabet& A, const Elem& x) {
    Elem z;
    for (auto it = x.syl.rbegin(); it != x.syl.rend(); ++it) push(A, z, *it);
    return z;
  }
  // Anti-automorphism kappa: a <-> a., order reversed.
  static Elem kappa(const Alphabet& A, const Elem& x) {
    Elem z;
    for (auto it = x.syl.rbegin(); it != x.syl.rend(); ++it) push(A, z, {it->orbit, it->mb, it->m});
    return z;
  }
  static int deg(const Elem& x) {
    int d = 0;
    for (const auto& s : x.syl) d += std::abs(s.m);
    return d;
  }
  static int deg_bullet(const Elem& x) {
    int d = 0;
    for (const auto& s : x.syl) d += std::abs(s.mb);
    return d;
  }
  static std::string str(const Alphabet& A, const Elem& x, bool compact = false) {
    std::vector<std::string> parts;
    for (const auto& s : x.syl) {
      const std::string& n = A.orbit_name(s.orbit);
      // The compact form lists the bullet generator first (a.a), the spaced form last (a a.).
      if (compact && s.mb) parts.push_back(detail::power(n + ".", s.mb));
      if (s.m) parts.push_back(detail::power(n, s.m));
      if (!compact && s.mb) parts.push_back(detail::power(n + ".", s.mb));
    }
    return parts.empty() ? "1" : detail::join(parts, compact ? "" : " ");
  }
};

// Abelianization of Psi: exponent vector (m, mb) per orbit.
struct PsiAbElement {
  std::vector<int> e;  // size 2 * orbits: [2o] = m, [2o+1] = mb
  auto operator<=>(const PsiAbElement&) const = default;
  bool operator==(const PsiAbElement&) const = default;
};

struct PsiAbGroup {
  using Elem = PsiAbElement;
  static Elem identity(const Alphabet& A) { return {std::vector<int>(2 * A.num_orbits(), 0)}; }
  static Elem gen(const Alphabet& A, int a) {
    Elem x = identity(A);
    x.e[2 * A.orbit(a)] = A.sign(a);
    normalize(A, x);
    return x;
  }
  static Elem bullet(const Alphabet& A, int a) {
    Elem x = identity(A);
    x.e[2 * A.orbit(a) + 1] = A.sign(a);
    normalize(A, x);
    return x;
  }
  static void normalize(const Alphabet& A, Elem& x) {
    for (int o = 0; o < A.num_orbits(); ++o)
      if (A.orbit_info(o).fixed) {
        x.e[2 * o] = static_cast<int>(linalg::mod(x.e[2 * o], 2));
        x.e[2 * o + 1] = static_cast<int>(linalg::mod(x.e[2 * o + 1], 2));
      }
  }
  static Elem mul(const Alphabet& A, const Elem& x, const Elem& y) {
    Elem z = x;
    for (size_t i = 0; i < z.e.size(); ++i) z.e[i] += y.e[i];
    normalize(A, z);
    return z;
  }
  static Elem inv(const Alphabet& A, const Elem& x) {
    Elem z = x;
    for (int& v : z.e) v = -v;
    normalize(A, z);
    return z;
  }
  static bool is_identity(const Elem& x) {
    for (int v : x.e)
      if (v) return false;
    return true;
  }
  static Elem bar(const Alphabet& A, const Elem& x) { return inv(A, x); }
  static Elem from_psi(const Alphabet& A, const PsiElement& x) {
    Elem z = identity(A);
    for (const auto& s : x.syl) {
      z.e[2 * s.orbit] += s.m;
      z.e[2 * s.orbit + 1] += s.mb;
    }
    normalize(A, z);
    return z;
  }
  static std::string str(const Alphabet& A, const Elem& x) {
    std::vector<std::string> parts;
    for (int o = 0; o < A.num_orbits(); ++o) {
      const std::string& n = A.orbit_name(o);
      if (x.e[2 * o]) parts.push_back(detail::power(n, x.e[2 * o]));
      if (x.e[2 * o + 1]) parts.push_back(detail::power(n + ".", x.e[2 * o + 1]));
    }
    return parts.empty() ? "1" : detail::join(parts, " ");
  }
};

inline PiTildeElement pitilde_mul(const Alphabet& A, const PiTildeElement& x, const PiTildeElement& y) {
  const size_t k = static_cast<size_t>(A.num_orbits());
  if (x.central.size() != k || y.central.size() != k) throw AlphabetMismatch("central part has the wrong rank");
  return PiTildeGroup::mul(A, x, y);
}

}  // namespace nanohom
