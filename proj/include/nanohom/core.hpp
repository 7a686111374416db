#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace nanohom {

// Finite alphabet with an involution tau and an orientation (one letter per orbit).
class Alphabet {
 public:
  struct Orbit {
    int rep;    // member of the orientation
    int other;  // tau(rep); equals rep at fixed points
    bool fixed;
  };

  Alphabet(std::vector<std::string> names, std::vector<int> tau, std::vector<int> orientation = {})
      : names_(std::move(names)), tau_(std::move(tau)) {
    const int n = static_cast<int>(names_.size());
    if (static_cast<int>(tau_.size()) != n) throw InvalidAlphabet("tau has wrong size");
    for (int a = 0; a < n; ++a) {
      if (tau_[a] < 0 || tau_[a] >= n || tau_[tau_[a]] != a)
        throw InvalidAlphabet("tau is not an involution at " + names_[a]);
      for (int b = 0; b < a; ++b)
        if (names_[a] == names_[b]) throw InvalidAlphabet("duplicate letter " + names_[a]);
    }
    std::vector<bool> chosen(n, false);
    if (orientation.empty()) {
      for (int a = 0; a < n; ++a)
        if (!chosen[tau_[a]]) chosen[a] = true;
    } else {
      for (int a : orientation) {
        if (a < 0 || a >= n) throw InvalidAlphabet("orientation letter out of range");
        chosen[a] = true;
      }
    }
    orbit_of_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      if (orbit_of_[a] >= 0) continue;
      const int b = tau_[a];
      if (chosen[a] == chosen[b] && a != b)
        throw InvalidAlphabet("orientation must contain exactly one of " + names_[a] + ", " + names_[b]);
      if (a == b && !chosen[a]) throw InvalidAlphabet("orientation misses fixed point " + names_[a]);
      const int rep = chosen[a] ? a : b;
      orbit_of_[a] = orbit_of_[b] = static_cast<int>(orbits_.size());
      orbits_.push_back({rep, tau_[rep], a == b});
    }
  }

  // tau = identity.
  static std::shared_ptr<const Alphabet> fixed_points(const std::vector<std::string>& names) {
    std::vector<int> tau(names.size());
    std::iota(tau.begin(), tau.end(), 0);
    return std::make_shared<const Alphabet>(names, tau);
  }

  // Letters given as pairs {x, tau(x)}; a pair {x, x} is a fixed point. First member is oriented.
  static std::shared_ptr<const Alphabet> from_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::string> names;
    std::vector<int> tau, orient;
    for (const auto& [x, y] : pairs) {
      const int i = static_cast<int>(names.size());
      names.push_back(x);
      orient.push_back(i);
      if (x == y) {
        tau.push_back(i);
      } else {
        names.push_back(y);
        tau.push_back(i + 1);
        tau.push_back(i);
      }
    }
    return std::make_shared<const Alphabet>(names, tau, orient);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  int tau(int a) const { return tau_.at(a); }
  bool fixed(int a) const { return tau_.at(a) == a; }
  int orbit(int a) const { return orbit_of_.at(a); }
  int num_orbits() const { return static_cast<int>(orbits_.size()); }
  const Orbit& orbit_info(int o) const { return orbits_.at(o); }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  bool oriented(int a) const { return orbits_[orbit_of_.at(a)].rep == a; }
  // Exponent of a on the orientation basis of pi.
  int sign(int a) const { return oriented(a) ? 1 : -1; }
  bool tau_free() const {
    return std::none_of(orbits_.begin(), orbits_.end(), [](const Orbit& o) { return o.fixed; });
  }
  const std::string& orbit_name(int o) const { return names_[orbits_.at(o).rep]; }

  int index(std::string_view s) const {
    for (int a = 0; a < size(); ++a)
      if (names_[a] == s) return a;
    throw UnknownSymbol(std::string(s));
  }
  bool contains(std::string_view s) const {
    return std::find(names_.begin(), names_.end(), s) != names_.end();
  }

  bool operator==(const Alphabet& o) const {
    return names_ == o.names_ && tau_ == o.tau_ && orbits_.size() == o.orbits_.size() &&
           std::equal(orbits_.begin(), orbits_.end(), o.orbits_.begin(),
                      [](const Orbit& x, const Orbit& y) { return x.rep == y.rep; });
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> tau_;
  std::vector<int> orbit_of_;
  std::vector<Orbit> orbits_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline void require_same(const AlphabetPtr& x, const AlphabetPtr& y) {
  if (x != y && !(x && y && *x == *y)) throw AlphabetMismatch("operands use different alphabets");
}

inline std::string default_letter_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('A' + k));
  return "L" + std::to_string(k);
}

// A word in an alphabet A of letters 0..k-1 with a projection A -> alpha.
struct EtaleWord {
  AlphabetPtr alphabet;
  std::vector<int> proj;
  std::vector<int> word;
  std::vector<std::string> names;  // optional display names, one per letter

  int num_letters() const { return static_cast<int>(proj.size()); }
  int length() const { return static_cast<int>(word.size()); }
  std::string letter_name(int A) const {
    return A < static_cast<int>(names.size()) ? names[A] : default_letter_name(A);
  }
};

inline EtaleWord from_word(const std::vector<std::string>& symbols, AlphabetPtr alphabet) {
  EtaleWord e;
  e.alphabet = alphabet;
  e.proj.resize(alphabet->size());
  std::iota(e.proj.begin(), e.proj.end(), 0);
  e.names = alphabet->names();
  for (const auto& s : symbols) e.word.push_back(alphabet->index(s));
  return e;
}

// Etale Gauss word: every letter occurs exactly twice.
class Nanoword {
 public:
  Nanoword() = default;
  Nanoword(AlphabetPtr alphabet, std::vector<int> word, std::vector<int> proj,
           std::vector<std::string> names = {})
      : alphabet_(std::move(alphabet)), word_(std::move(word)), proj_(std::move(proj)),
        names_(std::move(names)) {
    const int k = num_letters();
    first_.assign(k, -1);
    second_.assign(k, -1);
    for (int i = 0; i < length(); ++i) {
      const int A = word_[i];
      if (A < 0 || A >= k) throw NotANanoword("letter index out of range");
      if (first_[A] < 0) {
        first_[A] = i;
      } else if (second_[A] < 0) {
        second_[A] = i;
      } else {
        throw NotANanoword("letter " + letter_name(A) + " occurs more than twice");
      }
    }
    for (int A = 0; A < k; ++A) {
      if (second_[A] < 0) throw NotANanoword("letter " + letter_name(A) + " does not occur twice");
      if (proj_[A] < 0 || proj_[A] >= alphabet_->size()) throw UnknownSymbol("projection out of range");
    }
  }

  // Builds a nanoword from arbitrary letter ids, dropping ids that do not occur.
  static Nanoword compact(AlphabetPtr alphabet, const std::vector<int>& word,
                          const std::vector<int>& proj, const std::vector<std::string>& names = {}) {
    std::map<int, int> ids;
    for (int A : word) ids.emplace(A, 0);
    std::vector<int> p;
    std::vector<std::string> nm;
    for (auto& [A, id] : ids) {
      id = static_cast<int>(p.size());
      p.push_back(proj.at(A));
      if (!names.empty()) nm.push_back(names.at(A));
    }
    std::vector<int> w;
    w.reserve(word.size());
    for (int A : word) w.push_back(ids[A]);
    return Nanoword(std::move(alphabet), std::move(w), std::move(p), std::move(nm));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<int>& proj() const { return proj_; }
  const std::vector<std::string>& names() const { return names_; }
  int length() const { return static_cast<int>(word_.size()); }
  int num_letters() const { return static_cast<int>(proj_.size()); }
  bool empty() const { return word_.empty(); }
  int at(int i) const { return word_[i]; }
  int value(int A) const { return proj_[A]; }
  int value_at(int i) const { return proj_[word_[i]]; }
  // 0-based positions of the two occurrences.
  int first(int A) const { return first_[A]; }
  int second(int A) const { return second_[A]; }
  bool is_first(int i) const { return first_[word_[i]] == i; }
  std::string letter_name(int A) const {
    return A < static_cast<int>(names_.size()) ? names_[A] : default_letter_name(A);
  }

  // Number of letters projecting to a.
  int count(int a) const { return static_cast<int>(std::count(proj_.begin(), proj_.end(), a)); }

  // Letters renamed 0,1,... in order of first occurrence.
  Nanoword canonical() const {
    std::vector<int> ren(num_letters(), -1);
    std::vector<int> w(word_.size()), p;
    std::vector<std::string> nm;
    int next = 0;
    for (int i = 0; i < length(); ++i) {
      int& r = ren[word_[i]];
      if (r < 0) {
        r = next++;
        p.push_back(proj_[word_[i]]);
        if (!names_.empty()) nm.push_back(names_[word_[i]]);
      }
      w[i] = r;
    }
    return Nanoword(alphabet_, std::move(w), std::move(p), std::move(nm));
  }

  bool is_canonical() const {
    int next = 0;
    for (int i = 0; i < length(); ++i) {
      if (word_[i] == next) ++next;
      else if (word_[i] > next) return false;
    }
    return true;
  }

  // String identifying the canonical form; equal keys iff isomorphic nanowords.
  std::string key() const {
    std::vector<int> ren(num_letters(), -1);
    std::string s;
    s.reserve(word_.size() + proj_.size() + 1);
    std::string pr;
    int next = 0;
    for (int A : word_) {
      if (ren[A] < 0) {
        ren[A] = next++;
        pr.push_back(static_cast<char>(proj_[A] + 1));
      }
      s.push_back(static_cast<char>(ren[A] + 1));
    }
    s.push_back('\0');
    return s + pr;
  }

  bool operator==(const Nanoword& o) const {
    return word_ == o.word_ && proj_ == o.proj_ &&
           (alphabet_ == o.alphabet_ || (alphabet_ && o.alphabet_ && *alphabet_ == *o.alphabet_));
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<int> word_;
  std::vector<int> proj_;
  std::vector<std::string> names_;
  std::vector<int> first_, second_;
};

inline Nanoword canonical_form(const Nanoword& w) { return w.canonical(); }

inline bool isomorphic(const Nanoword& x, const Nanoword& y) {
  return x.key() == y.key() && (x.alphabet() == y.alphabet() || *x.alphabet() == *y.alphabet());
}

inline Nanoword empty_nanoword(AlphabetPtr alphabet) { return Nanoword(std::move(alphabet), {}, {}); }

// Letters of multiplicity one are dropped; a letter of multiplicity m >= 2 becomes the letters
// A_{i,j}, i < j, and its i-th entry becomes A_{1,i} ... A_{i-1,i} A_{i,i+1} ... A_{i,m}.
inline Nanoword desingularize(const EtaleWord& e) {
  const int k = e.num_letters();
  std::vector<int> mult(k, 0);
  for (int A : e.word) ++mult.at(A);
  // id of A_{i,j} (1-based i<j)
  std::vector<std::map<std::pair<int, int>, int>> ids(k);
  std::vector<int> proj;
  std::vector<std::string> names;
  for (int A = 0; A < k; ++A) {
    const int m = mult[A];
    if (m < 2) continue;
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        ids[A][{i, j}] = static_cast<int>(proj.size());
        proj.push_back(e.proj[A]);
        const std::string sep = m > 9 ? "_" : "";
        names.push_back(e.letter_name(A) + sep + std::to_string(i) + sep + std::to_string(j));
      }
  }
  std::vector<int> seen(k, 0), w;
  for (int A : e.word) {
    const int m = mult[A];
    const int i = ++seen[A];
    if (m < 2) continue;
    for (int h = 1; h < i; ++h) w.push_back(ids[A][{h, i}]);
    for (int h = i + 1; h <= m; ++h) w.push_back(ids[A][{i, h}]);
  }
  return Nanoword::compact(e.alphabet, w, proj, names);
}

inline EtaleWord to_etale(const Nanoword& w) {
  return EtaleWord{w.alphabet(), w.proj(), w.word(), w.names()};
}

inline Nanoword product(const Nanoword& x, const Nanoword& y) {
  require_same(x.alphabet(), y.alphabet());
  std::vector<int> w = x.word(), p = x.proj();
  const int shift = x.num_letters();
  for (int A : y.word()) w.push_back(A + shift);
  p.insert(p.end(), y.proj().begin(), y.proj().end());
  return Nanoword(x.alphabet(), std::move(w), std::move(p));
}

inline Nanoword opposite(const Nanoword& x) {
  std::vector<int> w(x.word().rbegin(), x.word().rend());
  return Nanoword(x.alphabet(), std::move(w), x.proj(), x.names());
}

inline Nanoword inverse(const Nanoword& x) {
  std::vector<int> p = x.proj();
  for (int& a : p) a = x.alphabet()->tau(a);
  return Nanoword(x.alphabet(), x.word(), std::move(p), x.names());
}

inline EtaleWord product(const EtaleWord& x, const EtaleWord& y) {
  require_same(x.alphabet, y.alphabet);
  EtaleWord e{x.alphabet, x.proj, x.word, {}};
  const int shift = x.num_letters();
  for (int A : y.word) e.word.push_back(A + shift);
  e.proj.insert(e.proj.end(), y.proj.begin(), y.proj.end());
  return e;
}

inline EtaleWord opposite(const EtaleWord& x) {
  EtaleWord e = x;
  std::reverse(e.word.begin(), e.word.end());
  return e;
}

inline EtaleWord inverse(const EtaleWord& x) {
  EtaleWord e = x;
  for (int& a : e.proj) a = x.alphabet->tau(a);
  return e;
}

// Builds a nanoword from letter tokens and a projection map, e.g. {"A","B","A","B"}, {{"A","a"},{"B","b"}}.
inline Nanoword make_nanoword(AlphabetPtr alphabet, const std::vector<std::string>& tokens,
                              const std::map<std::string, std::string>& projection) {
  std::vector<std::string> names;
  std::vector<int> w, p;
  for (const auto& t : tokens) {
    auto it = std::find(names.begin(), names.end(), t);
    if (it == names.end()) {
      auto pr = projection.find(t);
      if (pr == projection.end()) throw UnknownLetter("no projection for " + t);
      names.push_back(t);
      p.push_back(alphabet->index(pr->second));
      w.push_back(static_cast<int>(names.size()) - 1);
    } else {
      w.push_back(static_cast<int>(it - names.begin()));
    }
  }
  return Nanoword(std::move(alphabet), std::move(w), std::move(p), std::move(names));
}

// Word with letters named by single characters, e.g. "ABAB" with values {a, b}.
inline Nanoword make_nanoword(AlphabetPtr alphabet, std::string_view letters,
                              const std::vector<std::string>& values_by_first_occurrence) {
  std::vector<std::string> tokens;
  std::map<std::string, std::string> proj;
  size_t next = 0;
  for (char c : letters) {
    std::string t(1, c);
    if (!proj.count(t)) {
      if (next >= values_by_first_occurrence.size()) throw UnknownLetter("missing value for " + t);
      proj[t] = values_by_first_occurrence[next++];
    }
    tokens.push_back(t);
  }
  return make_nanoword(std::move(alphabet), tokens, proj);
}

}  // namespace nanohom
