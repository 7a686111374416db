#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "groups.hpp"

namespace nanohom {

using Coeff = std::int64_t;

// Integral group ring over one of the groups in groups.hpp. Zero coefficients are never stored.
template <class G>
class GroupRing {
 public:
  using Elem = typename G::Elem;
  using Terms = std::map<Elem, Coeff>;

  GroupRing() = default;
  explicit GroupRing(AlphabetPtr A) : alphabet_(std::move(A)) {}
  GroupRing(AlphabetPtr A, const Elem& g, Coeff c = 1) : alphabet_(std::move(A)) { add(g, c); }

  static GroupRing one(AlphabetPtr A) {
    auto id = G::identity(*A);
    return GroupRing(std::move(A), id, 1);
  }
  static GroupRing constant(AlphabetPtr A, Coeff c) {
    auto id = G::identity(*A);
    return GroupRing(std::move(A), id, c);
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Coeff coefficient(const Elem& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Elem& g, Coeff c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(g, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  // Sum of coefficients.
  Coeff aug() const {
    Coeff s = 0;
    for (const auto& [g, c] : terms_) s += c;
    return s;
  }

  GroupRing& operator+=(const GroupRing& o) {
    adopt(o);
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  GroupRing& operator-=(const GroupRing& o) {
    adopt(o);
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
  }
  friend GroupRing operator+(GroupRing x, const GroupRing& y) { return x += y; }
  friend GroupRing operator-(GroupRing x, const GroupRing& y) { return x -= y; }
  friend GroupRing operator-(GroupRing x) {
    for (auto& [g, c] : x.terms_) c = -c;
    return x;
  }
  friend GroupRing operator*(const GroupRing& x, const GroupRing& y) {
    GroupRing z(x.alphabet_ ? x.alphabet_ : y.alphabet_);
    z.adopt(y);
    if (x.is_zero() || y.is_zero()) return z;
    const Alphabet& A = *z.alphabet_;
    for (const auto& [g, c] : x.terms_)
      for (const auto& [h, d] : y.terms_) z.add(G::mul(A, g, h), c * d);
    return z;
  }
  GroupRing& operator*=(const GroupRing& o) { return *this = *this * o; }
  friend GroupRing operator*(Coeff k, GroupRing x) {
    if (k == 0) return GroupRing(x.alphabet_);
    for (auto& [g, c] : x.terms_) c *= k;
    return x;
  }
  bool operator==(const GroupRing& o) const { return terms_ == o.terms_; }

  // Applies a map on group elements (extended linearly) into another group ring.
  template <class H, class F>
  GroupRing<H> map(AlphabetPtr target, F&& f) const {
    GroupRing<H> z(std::move(target));
    for (const auto& [g, c] : terms_) z.add(f(g), c);
    return z;
  }
  template <class F>
  GroupRing transform(F&& f) const {
    GroupRing z(alphabet_);
    for (const auto& [g, c] : terms_) z.add(f(g), c);
    return z;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      const std::string mono = print(g);
      const Coeff a = c < 0 ? -c : c;
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      if (mono == "1") s += std::to_string(a);
      else if (a == 1) s += mono;
      else s += std::to_string(a) + "·" + mono;
      first = false;
    }
    return s;
  }

 private:
  std::string print(const Elem& g) const {
    if (!alphabet_) return "1";
    return G::str(*alphabet_, g);
  }
  void adopt(const GroupRing& o) {
    if (!o.alphabet_) return;
    if (!alphabet_) alphabet_ = o.alphabet_;
    else require_same(alphabet_, o.alphabet_);
  }

  AlphabetPtr alphabet_;
  Terms terms_;
};

using ZPi = GroupRing<PiGroup>;
using ZBigPi = GroupRing<BigPiGroup>;
using Lambda = GroupRing<PsiGroup>;
using LambdaAb = GroupRing<PsiAbGroup>;

// Common Lambda elements.
inline Lambda lam_gen(const AlphabetPtr& A, int a) { return Lambda(A, PsiGroup::gen(*A, a)); }
inline Lambda lam_bullet(const AlphabetPtr& A, int a) { return Lambda(A, PsiGroup::bullet(*A, a)); }
inline Lambda lam_one(const AlphabetPtr& A) { return Lambda::one(A); }

// Commutative projection q: Lambda -> Lambda^ab.
inline LambdaAb q_map(const Lambda& x) {
  const AlphabetPtr& A = x.alphabet();
  return x.map<PsiAbGroup>(A, [&](const PsiElement& g) { return PsiAbGroup::from_psi(*A, g); });
}

// iota: reverses every monomial.
inline Lambda iota(const Lambda& x) {
  const AlphabetPtr& A = x.alphabet();
  return x.transform([&](const PsiElement& g) { return PsiGroup::reverse(*A, g); });
}

inline Lambda kappa(const Lambda& x) {
  const AlphabetPtr& A = x.alphabet();
  return x.transform([&](const PsiElement& g) { return PsiGroup::kappa(*A, g); });
}

inline Lambda bar(const Lambda& x) {
  const AlphabetPtr& A = x.alphabet();
  return x.transform([&](const PsiElement& g) { return PsiGroup::bar(*A, g); });
}

inline LambdaAb bar(const LambdaAb& x) {
  const AlphabetPtr& A = x.alphabet();
  return x.transform([&](const PsiAbElement& g) { return PsiAbGroup::bar(*A, g); });
}

inline ZPi bar(const ZPi& x) {
  const AlphabetPtr& A = x.alphabet();
  return x.transform([&](const PiElement& g) { return PiGroup::bar(*A, g); });
}

}  // namespace nanohom
