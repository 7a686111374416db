#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fingerprint.hpp"
#include "moves.hpp"

namespace nanohom {

enum class Family { Nanowords4, Nanowords6, Words5 };

inline Family parse_family(const std::string& s) {
  if (s == "nanowords4") return Family::Nanowords4;
  if (s == "nanowords6") return Family::Nanowords6;
  if (s == "words5") return Family::Words5;
  throw InvalidSpec("unknown family '" + s + "' (expected nanowords4, nanowords6 or words5)");
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Nanowords4: return "nanowords4";
    case Family::Nanowords6: return "nanowords6";
    case Family::Words5: return "words5";
  }
  return "";
}

// Alphabet used when none is given.
inline AlphabetPtr default_family_alphabet(Family f) {
  if (f == Family::Nanowords6) return Alphabet::from_pairs({{"a", "A"}, {"b", "B"}});
  return Alphabet::fixed_points({"a", "b"});
}

struct ClassifyEntry {
  std::string name;
  Nanoword word;
  std::string predicted;  // predicted class label; "∅" for contractible
};

namespace detail {

inline std::string label(const std::string& form, const Alphabet& A, std::initializer_list<int> letters) {
  std::string s = form + "(";
  bool first = true;
  for (int a : letters) {
    s += (first ? "" : ",") + A.name(a);
    first = false;
  }
  return s + ")";
}

inline void add_length4(const AlphabetPtr& A, std::vector<ClassifyEntry>& out) {
  const int n = A->size();
  for (const char* g : {"AABB", "ABAB", "ABBA"})
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const Nanoword w = make_nanoword(A, g, {A->name(x), A->name(y)});
        std::string pred = "∅";
        if (std::string(g) == "ABAB" && x != A->tau(y)) pred = label("ABAB", *A, {x, y});
        out.push_back({label(g, *A, {x, y}), w, pred});
      }
}

// Class of a multiplicity-one-free word of length <= 5.
inline std::string predict_word(const Alphabet& A, const std::vector<int>& s) {
  if (s.empty()) return "∅";
  std::map<int, int> mult;
  for (int c : s) ++mult[c];
  if (mult.size() == 1) {
    const int a = s[0];
    if (s.size() == 2 || A.tau(a) == a) return "∅";
    return label("a^" + std::to_string(s.size()), A, {a});
  }
  // Two letters: a has the larger multiplicity (the first letter when equal, as in abab).
  int a = s[0], b = -1;
  for (const auto& [c, m] : mult)
    if (c != a) b = c;
  if (mult[b] > mult[a]) std::swap(a, b);
  std::string pat;
  for (int c : s) pat += c == a ? 'a' : 'b';
  const bool ta = A.tau(a) == a;
  if (pat == "aabb" || pat == "abba" || pat == "bbaa") return "∅";
  if (pat == "abab") return A.tau(a) == b ? "∅" : label("abab", A, {a, b});
  if (pat == "aaabb" || pat == "aabba" || pat == "abbaa" || pat == "bbaaa")
    return ta ? "∅" : label("a^3", A, {a});
  if (pat == "ababa") return A.tau(a) == b ? "∅" : label("ababa", A, {a, b});
  const bool exceptional = a == A.tau(b) && b != A.tau(b);
  if (pat == "baaab") {
    if (ta) return "∅";
    return exceptional ? label("aabab", A, {a, b}) : label("baaab", A, {a, b});
  }
  if ((pat == "aabab" || pat == "babaa") && exceptional) return label("aabab", A, {a, b});
  return label(pat, A, {a, b});
}

}  // namespace detail

inline std::vector<ClassifyEntry> family_entries(Family f, const AlphabetPtr& A) {
  std::vector<ClassifyEntry> out{{"∅", empty_nanoword(A), "∅"}};
  const int n = A->size();
  switch (f) {
    case Family::Nanowords4:
      detail::add_length4(A, out);
      break;
    case Family::Nanowords6: {
      detail::add_length4(A, out);
      const char* forms[] = {"ABCABC", "ABCACB", "ABCBAC", "ABCBCA", "ABACBC"};
      for (int i = 0; i < 5; ++i)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              const int tb = A->tau(b);
              bool regular = true;
              switch (i + 1) {
                case 1: regular = a != tb && c != tb; break;
                case 2: case 4: regular = c != tb; break;
                case 3: regular = a != tb; break;
                case 5: regular = !(a == b && b == c && A->tau(a) == a); break;
              }
              std::string pred = "∅";
              if (regular) {
                const bool merged = (i + 1 == 4 || i + 1 == 5) && a == b && b == c && A->tau(a) != a;
                pred = detail::label(merged ? "w4" : "w" + std::to_string(i + 1), *A, {a, b, c});
              }
              out.push_back({detail::label(forms[i], *A, {a, b, c}),
                             make_nanoword(A, forms[i], {A->name(a), A->name(b), A->name(c)}), pred});
            }
      break;
    }
    case Family::Words5: {
      for (int len = 1; len <= 5; ++len) {
        std::vector<int> s(len, 0);
        for (;;) {
          std::map<int, int> mult;
          for (int c : s) ++mult[c];
          bool ok = true;
          for (const auto& [c, m] : mult) ok = ok && m >= 2;
          if (ok) {
            std::vector<std::string> sym;
            std::string name;
            for (int c : s) {
              sym.push_back(A->name(c));
              name += A->name(c);
            }
            out.push_back({name, desingularize(from_word(sym, A)), detail::predict_word(*A, s)});
          }
          int k = len - 1;
          while (k >= 0 && s[k] == n - 1) s[k--] = 0;
          if (k < 0) break;
          ++s[k];
        }
      }
      break;
    }
  }
  return out;
}

struct ClassifyOptions {
  SearchOptions search{0, 20000, true, {}};
  FingerprintOptions fingerprint;
  bool parallel = true;
};

enum class Relation { Homotopic, NonHomotopic, Unknown };

struct ClassifyResult {
  Family family = Family::Nanowords4;
  AlphabetPtr alphabet;
  std::vector<ClassifyEntry> entries;
  std::vector<Fingerprint> fingerprints;
  std::vector<int> fp_group;   // equal fingerprints <=> equal group
  std::vector<int> component;  // classes joined by certificates
  std::vector<std::string> verdict;
  long long searches = 0, states = 0;

  Relation relation(int i, int j) const {
    if (component[i] == component[j]) return Relation::Homotopic;
    if (fp_group[i] != fp_group[j]) return Relation::NonHomotopic;
    return Relation::Unknown;
  }
  std::string separation(int i, int j) const {
    switch (relation(i, j)) {
      case Relation::Homotopic: return "≃";
      case Relation::Unknown: return "?";
      case Relation::NonHomotopic: return separating_field(fingerprints[i], fingerprints[j]).value_or("?");
    }
    return "?";
  }
  int count(const std::string& v) const { return static_cast<int>(std::count(verdict.begin(), verdict.end(), v)); }
  std::string overall() const {
    if (count("DISAGREES")) return "DISAGREES";
    if (count("UNKNOWN")) return "UNKNOWN";
    return "AGREES";
  }
};

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace detail

inline ClassifyResult classify(Family family, const AlphabetPtr& A, const ClassifyOptions& opt = {}) {
  ClassifyResult r;
  r.family = family;
  r.alphabet = A;
  r.entries = family_entries(family, A);
  const int n = static_cast<int>(r.entries.size());

  r.fingerprints.resize(n);
  auto work = [&](int begin, int step) {
    for (int i = begin; i < n; i += step) r.fingerprints[i] = fingerprint(r.entries[i].word, opt.fingerprint);
  };
  const int threads = opt.parallel ? std::max(1u, std::min(8u, std::thread::hardware_concurrency())) : 1;
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  // Group equal fingerprints: exact key, then pairing isomorphism.
  r.fp_group.assign(n, -1);
  std::map<std::string, std::vector<int>> by_key;  // key -> group representatives
  int groups = 0;
  for (int i = 0; i < n; ++i) {
    auto& reps = by_key[fingerprint_key(r.fingerprints[i])];
    for (int j : reps)
      if (pairings_isomorphic(r.fingerprints[i].pairing, r.fingerprints[j].pairing)) r.fp_group[i] = r.fp_group[j];
    if (r.fp_group[i] < 0) {
      r.fp_group[i] = groups++;
      reps.push_back(i);
    }
  }

  // Within each group, join members by search certificates (shortest words first).
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::vector<int>> members(groups);
  for (int i = 0; i < n; ++i) members[r.fp_group[i]].push_back(i);
  for (auto& g : members) {
    std::stable_sort(g.begin(), g.end(),
                     [&](int x, int y) { return r.entries[x].word.length() < r.entries[y].word.length(); });
    std::vector<int> roots;
    for (int m : g) {
      bool joined = false;
      for (int root : roots) {
        const Nanoword& target = r.entries[root].word;
        const Nanoword& w = r.entries[m].word;
        SearchOptions so = opt.search;
        so.max_length = std::max({so.max_length, w.length(), target.length()});
        const SearchResult s = target.empty() ? search_contractible(w, HomotopyData::diagonal(A), so)
                                              : search_homotopic(w, target, HomotopyData::diagonal(A), so);
        ++r.searches;
        r.states += s.states;
        if (s.certificate && verify(*s.certificate)) {
          parent[detail::find_root(parent, m)] = detail::find_root(parent, root);
          joined = true;
          break;
        }
      }
      if (!joined) roots.push_back(m);
    }
  }
  r.component.resize(n);
  for (int i = 0; i < n; ++i) r.component[i] = detail::find_root(parent, i);

  r.verdict.assign(n, "AGREES");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool same = r.entries[i].predicted == r.entries[j].predicted;
      const Relation rel = r.relation(i, j);
      if ((same && rel == Relation::NonHomotopic) || (!same && rel == Relation::Homotopic))
        r.verdict[i] = "DISAGREES";
      else if (rel == Relation::Unknown && r.verdict[i] == "AGREES")
        r.verdict[i] = "UNKNOWN";
    }
  return r;
}

}  // namespace nanohom
