#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace nanohom {

using Triple = std::array<int, 3>;

struct HomotopyData {
  AlphabetPtr alphabet;
  std::set<Triple> S;

  static HomotopyData diagonal(AlphabetPtr A) {
    HomotopyData d{A, {}};
    for (int a = 0; a < A->size(); ++a) d.S.insert({a, a, a});
    return d;
  }
  bool allows(int a, int b, int c) const { return S.count({a, b, c}) > 0; }
  // Some e with (e, b, b) in S, or -1.
  int witness(int b) const {
    for (const auto& t : S)
      if (t[1] == b && t[2] == b) return t[0];
    return -1;
  }
};

enum class MoveKind { M1, M2, M3 };

// M1/M2: `insert` selects the inverse (lengthening) move. M3: `insert` selects the inverse
// direction xBAyCAzCBt -> xAByACzBCt. Positions are 0-based starts of the affected pairs
// (for insertions: indices in the current word before which the pairs are inserted).
struct Move {
  MoveKind kind = MoveKind::M1;
  bool insert = false;
  std::vector<int> pos;
  int value = -1;  // |A| of the inserted letter A (the partner of an M2 insertion gets tau of it)
  bool operator==(const Move&) const = default;
};

inline std::string move_str(const Alphabet& A, const Move& m) {
  std::string s = m.kind == MoveKind::M1 ? "M1" : m.kind == MoveKind::M2 ? "M2" : "M3";
  if (m.kind == MoveKind::M3) s += m.insert ? "<" : ">";
  else s += m.insert ? "+" : "-";
  s += " @pos=";
  for (size_t i = 0; i < m.pos.size(); ++i) s += (i ? "," : "") + std::to_string(m.pos[i]);
  if (m.insert && m.kind != MoveKind::M3) s += " insert=(" + A.name(m.value) + ")";
  return s;
}

inline Move parse_move(const Alphabet& A, const std::string& line) {
  std::istringstream in(line);
  std::string tok, pos, ins;
  in >> tok >> pos >> ins;
  if (tok.size() != 3 || tok[0] != 'M' || pos.rfind("@pos=", 0) != 0) throw InvalidMove("cannot parse '" + line + "'");
  Move m;
  switch (tok[1]) {
    case '1': m.kind = MoveKind::M1; break;
    case '2': m.kind = MoveKind::M2; break;
    case '3': m.kind = MoveKind::M3; break;
    default: throw InvalidMove("unknown move '" + tok + "'");
  }
  const char d = tok[2];
  if (m.kind == MoveKind::M3 ? (d != '>' && d != '<') : (d != '+' && d != '-'))
    throw InvalidMove("bad direction in '" + tok + "'");
  m.insert = d == '+' || d == '<';
  std::stringstream ps(pos.substr(5));
  for (std::string p; std::getline(ps, p, ',');) {
    try {
      m.pos.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw InvalidMove("bad position '" + p + "'");
    }
  }
  if (m.insert && m.kind != MoveKind::M3) {
    if (ins.rfind("insert=(", 0) != 0 || ins.back() != ')') throw InvalidMove("missing insert=(letter)");
    m.value = A.index(ins.substr(8, ins.size() - 9));
  }
  return m;
}

namespace detail {

inline Nanoword build(const AlphabetPtr& A, const std::vector<int>& word, const std::vector<int>& proj) {
  return Nanoword::compact(A, word, proj);
}

inline std::vector<int> slice(const std::vector<int>& w, int b, int e) { return {w.begin() + b, w.begin() + e}; }

inline std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

}  // namespace detail

inline Nanoword decode_key(const AlphabetPtr& A, const std::string& key) {
  const size_t z = key.find('\0');
  std::vector<int> w, p;
  for (size_t i = 0; i < z; ++i) w.push_back(static_cast<unsigned char>(key[i]) - 1);
  for (size_t i = z + 1; i < key.size(); ++i) p.push_back(static_cast<unsigned char>(key[i]) - 1);
  return Nanoword(A, std::move(w), std::move(p));
}

// Three adjacent pairs {X,Y}, {X,Z}, {Y,Z} at p1 < p2 < p3 with orientation bits
// (pair 1 = XY -> 0, pair 2 = XZ -> 0, pair 3 = YZ -> 0).
struct PairTriple {
  std::array<int, 3> pos;
  int X, Y, Z;
  int bits;  // bit 2 = pair 1, bit 1 = pair 2, bit 0 = pair 3
};

inline std::optional<PairTriple> pair_triple(const Nanoword& w, int p1, int p2, int p3) {
  const int L = w.length();
  if (p1 < 0 || p2 < p1 + 2 || p3 < p2 + 2 || p3 + 1 >= L) return std::nullopt;
  auto has = [&](int p, int a) { return w.at(p) == a || w.at(p + 1) == a; };
  auto other = [&](int p, int a) { return w.at(p) == a ? w.at(p + 1) : w.at(p); };
  const int u = w.at(p1), v = w.at(p1 + 1);
  if (u == v) return std::nullopt;
  int X, Y;
  if (has(p2, u) && has(p3, v)) X = u, Y = v;
  else if (has(p2, v) && has(p3, u)) X = v, Y = u;
  else return std::nullopt;
  const int Z = other(p2, X);
  if (Z == X || Z == Y || !has(p3, Z) || other(p3, Z) != Y) return std::nullopt;
  PairTriple t{{p1, p2, p3}, X, Y, Z, 0};
  t.bits = (w.at(p1) == X ? 0 : 4) | (w.at(p2) == X ? 0 : 2) | (w.at(p3) == Y ? 0 : 1);
  return t;
}

// Condition for flipping all three pairs of a triple with the given bits (primitive M3 for 000/111,
// the derived moves otherwise).
inline bool flip_allowed(const Nanoword& w, const PairTriple& t, const HomotopyData& d) {
  const Alphabet& A = *w.alphabet();
  const int a = w.value(t.X), b = w.value(t.Y), c = w.value(t.Z);
  switch (t.bits) {
    case 0: case 7: return d.allows(a, b, c);
    case 2: case 5: return d.allows(a, A.tau(b), c);
    case 3: case 4: return d.allows(A.tau(a), A.tau(b), c);
    case 1: case 6: return d.allows(a, A.tau(b), A.tau(c));
  }
  return false;
}

inline Nanoword flip_pairs(const Nanoword& w, const std::array<int, 3>& pos) {
  std::vector<int> word = w.word();
  for (int p : pos) std::swap(word[p], word[p + 1]);
  return Nanoword(w.alphabet(), word, w.proj());
}

inline Nanoword apply_move(const Nanoword& w, const Move& m, const HomotopyData& d) {
  const AlphabetPtr& A = w.alphabet();
  const int L = w.length();
  const auto& word = w.word();
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InvalidMove(std::string(what) + " (" + move_str(*A, m) + ")");
  };
  auto fresh_proj = [&](std::initializer_list<int> values) {
    std::vector<int> p = w.proj();
    p.insert(p.end(), values);
    return p;
  };
  const int k = w.num_letters();
  switch (m.kind) {
    case MoveKind::M1:
      need(m.pos.size() == 1, "M1 takes one position");
      if (m.insert) {
        const int p = m.pos[0];
        need(p >= 0 && p <= L && m.value >= 0 && m.value < A->size(), "bad M1 insertion");
        return Nanoword(A, detail::cat({detail::slice(word, 0, p), {k, k}, detail::slice(word, p, L)}),
                        fresh_proj({m.value}));
      } else {
        const int p = m.pos[0];
        need(p >= 0 && p + 1 < L && word[p] == word[p + 1], "M1 needs xAAy");
        return detail::build(A, detail::cat({detail::slice(word, 0, p), detail::slice(word, p + 2, L)}), w.proj());
      }
    case MoveKind::M2: {
      need(m.pos.size() == 2, "M2 takes two positions");
      const int p = m.pos[0], q = m.pos[1];
      if (m.insert) {
        need(0 <= p && p <= q && q <= L && m.value >= 0 && m.value < A->size(), "bad M2 insertion");
        return Nanoword(A,
                        detail::cat({detail::slice(word, 0, p), {k, k + 1}, detail::slice(word, p, q), {k + 1, k},
                                     detail::slice(word, q, L)}),
                        fresh_proj({m.value, A->tau(m.value)}));
      }
      need(0 <= p && p + 2 <= q && q + 1 < L, "bad M2 positions");
      const int X = word[p], Y = word[p + 1];
      need(X != Y && word[q] == Y && word[q + 1] == X, "M2 needs xAByBAz");
      need(w.value(Y) == A->tau(w.value(X)), "M2 needs |B| = tau|A|");
      return detail::build(A,
                           detail::cat({detail::slice(word, 0, p), detail::slice(word, p + 2, q),
                                        detail::slice(word, q + 2, L)}),
                           w.proj());
    }
    case MoveKind::M3: {
      need(m.pos.size() == 3, "M3 takes three positions");
      const auto t = pair_triple(w, m.pos[0], m.pos[1], m.pos[2]);
      need(t.has_value(), "M3 needs xAByACzBCt");
      need(t->bits == (m.insert ? 7 : 0), m.insert ? "inverse M3 needs xBAyCAzCBt" : "M3 needs xAByACzBCt");
      need(d.allows(w.value(t->X), w.value(t->Y), w.value(t->Z)), "M3 triple not in S");
      return flip_pairs(w, t->pos);
    }
  }
  throw InvalidMove("unknown move");
}

// All single primitive moves; insertions range over `values` (all letters if empty).
inline std::vector<std::pair<Move, Nanoword>> enumerate_moves(const Nanoword& w, const HomotopyData& d,
                                                              std::vector<int> values = {},
                                                              bool with_insertions = true) {
  const Alphabet& A = *w.alphabet();
  if (values.empty())
    for (int a = 0; a < A.size(); ++a) values.push_back(a);
  std::vector<std::pair<Move, Nanoword>> out;
  const int L = w.length();
  auto add = [&](Move m) {
    Nanoword v = apply_move(w, m, d);
    out.emplace_back(std::move(m), std::move(v));
  };
  for (int p = 0; p + 1 < L; ++p)
    if (w.at(p) == w.at(p + 1)) add({MoveKind::M1, false, {p}, -1});
  for (int p = 0; p + 1 < L; ++p) {
    const int X = w.at(p), Y = w.at(p + 1);
    if (X == Y || w.value(Y) != A.tau(w.value(X))) continue;
    const int q = w.second(X) - 1;
    if (w.first(X) == p && w.first(Y) == p + 1 && q >= p + 2 && w.at(q) == Y) add({MoveKind::M2, false, {p, q}, -1});
  }
  for (int p1 = 0; p1 + 1 < L; ++p1) {
    const int u = w.at(p1), v = w.at(p1 + 1);
    if (u == v || w.first(u) != p1 || w.first(v) != p1 + 1) continue;
    for (int X : {u, v}) {
      const int o = w.second(X);
      for (int p2 : {o - 1, o})
        for (int p3 = p2 + 2; p3 + 1 < L; ++p3) {
          const auto t = pair_triple(w, p1, p2, p3);
          if (!t || (t->bits != 0 && t->bits != 7)) continue;
          if (!d.allows(w.value(t->X), w.value(t->Y), w.value(t->Z))) continue;
          add({MoveKind::M3, t->bits == 7, {p1, p2, p3}, -1});
        }
    }
  }
  if (with_insertions) {
    for (int p = 0; p <= L; ++p)
      for (int a : values) add({MoveKind::M1, true, {p}, a});
    for (int p = 0; p <= L; ++p)
      for (int q = p; q <= L; ++q)
        for (int a : values) add({MoveKind::M2, true, {p, q}, a});
  }
  return out;
}

// A primitive move taking u to a nanoword isomorphic to v.
inline std::optional<Move> find_move(const Nanoword& u, const Nanoword& v, const HomotopyData& d) {
  const std::string target = v.key();
  const int dl = v.length() - u.length();
  std::vector<int> values;
  for (int a = 0; a < u.alphabet()->size(); ++a) values.push_back(a);
  for (const auto& [m, r] : enumerate_moves(u, d, values, dl > 0)) {
    if (r.length() != v.length()) continue;
    if (r.key() == target) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Macro steps: flips of pair triples (derived moves) and the cancellation xAByABz -> xyz.

struct Step {
  enum Type : std::uint8_t { Primitive, Flip, Cancel } type = Primitive;
  Move move;                     // Primitive
  std::array<int, 3> pos{};      // Flip: pair starts; Cancel: pos[0], pos[1]
};

inline Nanoword apply_step(const Nanoword& w, const Step& s, const HomotopyData& d) {
  switch (s.type) {
    case Step::Primitive: return apply_move(w, s.move, d);
    case Step::Flip: {
      const auto t = pair_triple(w, s.pos[0], s.pos[1], s.pos[2]);
      if (!t || !flip_allowed(w, *t, d)) throw InvalidMove("flip not applicable");
      return flip_pairs(w, t->pos);
    }
    case Step::Cancel: {
      const int p = s.pos[0], q = s.pos[1], L = w.length();
      const auto& word = w.word();
      if (!(0 <= p && p + 2 <= q && q + 1 < L) || word[p] == word[p + 1] || word[q] != word[p] ||
          word[q + 1] != word[p + 1])
        throw InvalidMove("cancellation needs xAByABz");
      const int a = w.value(word[p]), b = w.value(word[p + 1]);
      if (b != w.alphabet()->tau(a) || d.witness(b) < 0) throw InvalidMove("cancellation condition fails");
      return detail::build(w.alphabet(),
                           detail::cat({detail::slice(word, 0, p), detail::slice(word, p + 2, q),
                                        detail::slice(word, q + 2, L)}),
                           w.proj());
    }
  }
  throw InvalidMove("unknown step");
}

inline std::vector<std::pair<Step, Nanoword>> macro_successors(const Nanoword& w, const HomotopyData& d) {
  const Alphabet& A = *w.alphabet();
  std::vector<std::pair<Step, Nanoword>> out;
  const int L = w.length();
  for (int p1 = 0; p1 + 1 < L; ++p1) {
    const int u = w.at(p1), v = w.at(p1 + 1);
    if (u == v || w.first(u) != p1 || w.first(v) != p1 + 1) continue;
    for (int X : {u, v}) {
      const int o = w.second(X);
      for (int p2 : {o - 1, o}) {
        if (p2 < p1 + 2 || p2 + 1 >= L) continue;
        const int Z = w.at(p2) == X ? w.at(p2 + 1) : w.at(p2);
        const int Y = X == u ? v : u;
        const int zpos = w.at(p2) == Z ? p2 : p2 + 1;
        const int oy = w.second(Y), oz = w.first(Z) == zpos ? w.second(Z) : w.first(Z);
        if (oz < p2) continue;
        const int p3 = std::min(oy, oz);
        if (std::abs(oy - oz) != 1) continue;
        const auto t = pair_triple(w, p1, p2, p3);
        if (!t || t->bits == 0 || t->bits == 7 || !flip_allowed(w, *t, d)) continue;
        Step s;
        s.type = Step::Flip;
        s.pos = t->pos;
        out.emplace_back(s, flip_pairs(w, t->pos));
      }
    }
  }
  for (int p = 0; p + 1 < L; ++p) {
    const int X = w.at(p), Y = w.at(p + 1);
    if (X == Y || w.first(X) != p || w.first(Y) != p + 1) continue;
    const int q = w.second(X);
    if (q + 1 >= L || w.at(q + 1) != Y) continue;
    if (w.value(Y) != A.tau(w.value(X)) || d.witness(w.value(Y)) < 0) continue;
    Step s;
    s.type = Step::Cancel;
    s.pos = {p, q, 0};
    out.emplace_back(s, apply_step(w, s, d));
  }
  return out;
}

namespace detail {

// Chain of words from w to the result of a macro step; consecutive words differ by one
// primitive move.
inline void expand_step(const Nanoword& w, const Step& s, const HomotopyData& d, std::vector<Nanoword>& chain);

inline void expand_flip(const Nanoword& w, const PairTriple& t, const HomotopyData& d, std::vector<Nanoword>& chain) {
  const AlphabetPtr& A = w.alphabet();
  const auto& word = w.word();
  const int L = w.length();
  const int p1 = t.pos[0], p2 = t.pos[1], p3 = t.pos[2];
  const int X = t.X, Y = t.Y, Z = t.Z;
  const auto x = slice(word, 0, p1), y = slice(word, p1 + 2, p2), z = slice(word, p2 + 2, p3),
             tt = slice(word, p3 + 2, L);
  const int D = w.num_letters(), E = D + 1;
  std::vector<int> proj = w.proj();
  proj.push_back(0);
  proj.push_back(0);
  auto mk = [&](const std::vector<int>& wd) { return build(A, wd, proj); };
  auto flip_step = [&](const Nanoword& u, std::array<int, 3> pos) {
    Step st;
    st.type = Step::Flip;
    st.pos = pos;
    expand_step(u, st, d, chain);
  };
  switch (t.bits) {
    case 0: case 7:
      chain.push_back(flip_pairs(w, t.pos));
      return;
    case 2: {  // x XY y ZX z YZ t -> x YX y XZ z ZY t
      proj[D] = w.value(Y);
      proj[E] = A->tau(w.value(Y));
      chain.push_back(mk(cat({x, {D, E, X, Y}, y, {Z, X}, z, {Y, Z, E, D}, tt})));
      chain.push_back(mk(cat({x, {D, X, E, Y}, y, {X, Z}, z, {Y, E, Z, D}, tt})));
      chain.push_back(mk(cat({x, {D, X}, y, {X, Z}, z, {Z, D}, tt})));
      return;
    }
    case 1: {  // x XY y XZ z ZY t -> x YX y ZX z YZ t
      proj[D] = w.value(Z);
      proj[E] = A->tau(w.value(Z));
      const Nanoword u1 = mk(cat({x, {X, Y}, y, {D, E, X, Z}, z, {Z, Y, E, D}, tt}));
      chain.push_back(u1);
      const int q1 = static_cast<int>(x.size()), q2 = q1 + 2 + static_cast<int>(y.size()) + 1,
                q3 = q2 + 3 + static_cast<int>(z.size()) + 1;
      flip_step(u1, {q1, q2, q3});
      chain.push_back(mk(cat({x, {Y, X}, y, {D, X}, z, {Y, D}, tt})));
      return;
    }
    case 3: {  // x XY y ZX z ZY t -> x YX y XZ z YZ t
      proj[D] = A->tau(w.value(X));
      proj[E] = w.value(X);
      const Nanoword u1 = mk(cat({x, {X, Y, D, E}, y, {E, D, Z, X}, z, {Z, Y}, tt}));
      chain.push_back(u1);
      const int q1 = static_cast<int>(x.size()) + 1, q2 = q1 + 3 + static_cast<int>(y.size()) + 1,
                q3 = q2 + 3 + static_cast<int>(z.size());
      flip_step(u1, {q1, q2, q3});
      chain.push_back(mk(cat({x, {Y, E}, y, {E, Z}, z, {Y, Z}, tt})));
      return;
    }
    default: {
      // The remaining patterns are the reverses of the three above.
      const Nanoword target = flip_pairs(w, t.pos);
      const auto back = pair_triple(target, p1, p2, p3);
      std::vector<Nanoword> rev{target};
      expand_flip(target, *back, d, rev);
      rev.pop_back();
      for (auto it = rev.rbegin(); it != rev.rend(); ++it) chain.push_back(*it);
      return;
    }
  }
}

inline void expand_step(const Nanoword& w, const Step& s, const HomotopyData& d, std::vector<Nanoword>& chain) {
  switch (s.type) {
    case Step::Primitive:
      chain.push_back(apply_move(w, s.move, d));
      return;
    case Step::Flip: {
      const auto t = pair_triple(w, s.pos[0], s.pos[1], s.pos[2]);
      if (!t || !flip_allowed(w, *t, d)) throw InvalidMove("flip not applicable");
      expand_flip(w, *t, d, chain);
      return;
    }
    case Step::Cancel: {  // x XY y XY z -> x XEEY y XY z -> x EXYE y YX z -> x EE y z -> x y z
      const AlphabetPtr& A = w.alphabet();
      const auto& word = w.word();
      const int L = w.length(), p = s.pos[0], q = s.pos[1];
      const int X = word[p], Y = word[p + 1];
      const int e = d.witness(w.value(Y));
      const int E = w.num_letters();
      std::vector<int> proj = w.proj();
      proj.push_back(A->tau(e));
      const auto x = slice(word, 0, p), y = slice(word, p + 2, q), z = slice(word, q + 2, L);
      const Nanoword u1 = build(A, cat({x, {X, E, E, Y}, y, {X, Y}, z}), proj);
      chain.push_back(u1);
      const int q1 = static_cast<int>(x.size());
      Step st;
      st.type = Step::Flip;
      st.pos = {q1, q1 + 2, q1 + 4 + static_cast<int>(y.size())};
      expand_step(u1, st, d, chain);
      chain.push_back(build(A, cat({x, {E, E}, y, z}), proj));
      chain.push_back(build(A, cat({x, y, z}), proj));
      return;
    }
  }
}

}  // namespace detail

// Primitive moves realizing a macro step from w (positions refer to canonical intermediate words).
inline std::vector<Move> expand_to_primitive(const Nanoword& w, const Step& s, const HomotopyData& d) {
  std::vector<Nanoword> chain{w};
  detail::expand_step(w, s, d, chain);
  std::vector<Move> out;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto m = find_move(chain[i].canonical(), chain[i + 1], d);
    if (!m) throw std::logic_error("macro expansion produced a non-primitive step");
    out.push_back(*m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates.

struct Certificate {
  HomotopyData data;
  Nanoword start, end;
  std::vector<Move> trace;
};

// Replays the trace; returns the canonical end word, or throws InvalidMove.
inline Nanoword replay(const Certificate& c) {
  Nanoword cur = c.start.canonical();
  for (const auto& m : c.trace) cur = apply_move(cur, m, c.data).canonical();
  return cur;
}

inline bool verify(const Certificate& c) {
  try {
    return replay(c).key() == c.end.key();
  } catch (const InvalidMove&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Search.

struct SearchOptions {
  int max_length = 20;
  long long max_states = 1000000;
  bool macros = true;
  std::vector<int> insert_values;  // empty: all letters
};

struct SearchResult {
  std::optional<Certificate> certificate;
  long long states = 0;
  int min_length = 0;  // shortest word reached from the first argument
};

namespace detail {

struct Frontier {
  struct Node {
    std::string key;
    int parent;
    Step step;  // from parent to this node
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;
  using Item = std::pair<int, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;

  int add(const std::string& key, int parent, const Step& step) {
    auto [it, fresh] = index.emplace(key, static_cast<int>(nodes.size()));
    if (!fresh) return -1;
    nodes.push_back({key, parent, step});
    open.emplace(static_cast<int>(key.find('\0')), key);
    return it->second;
  }
  // Canonical words from the root to node i.
  std::vector<int> path(int i) const {
    std::vector<int> p;
    for (; i >= 0; i = nodes[i].parent) p.push_back(i);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

inline std::vector<std::pair<Step, Nanoword>> successors(const Nanoword& w, const HomotopyData& d,
                                                         const SearchOptions& o) {
  std::vector<std::pair<Step, Nanoword>> out;
  const int room = o.max_length - w.length();
  std::vector<int> values = o.insert_values;
  const Alphabet& A = *w.alphabet();
  if (values.empty())
    for (int a = 0; a < A.size(); ++a) values.push_back(a);
  for (auto& [m, v] : enumerate_moves(w, d, values, false)) {
    Step s;
    s.move = m;
    out.emplace_back(s, std::move(v));
  }
  if (o.macros)
    for (auto& sv : macro_successors(w, d)) out.push_back(std::move(sv));
  const int L = w.length();
  if (room >= 2)
    for (int p = 0; p <= L; ++p)
      for (int a : values) {
        Step s;
        s.move = {MoveKind::M1, true, {p}, a};
        out.emplace_back(s, apply_move(w, s.move, d));
      }
  if (room >= 4)
    for (int p = 0; p <= L; ++p)
      for (int q = p; q <= L; ++q)
        for (int a : values) {
          Step s;
          s.move = {MoveKind::M2, true, {p, q}, a};
          out.emplace_back(s, apply_move(w, s.move, d));
        }
  return out;
}

// Expands the steps along a list of canonical words into primitive moves.
inline std::vector<Move> realize(const std::vector<std::pair<Nanoword, std::optional<Step>>>& forward,
                                 const HomotopyData& d) {
  std::vector<Move> out;
  for (const auto& [w, s] : forward) {
    if (!s) continue;
    for (auto& m : expand_to_primitive(w, *s, d)) out.push_back(m);
  }
  return out;
}

}  // namespace detail

inline void check_budget(const SearchOptions& o) {
  if (o.max_states <= 0) throw BudgetInvalid("max_states must be positive");
  if (o.max_length < 0) throw BudgetInvalid("max_length must be non-negative");
}

// Bidirectional best-first search on canonical forms, ordered by (length, key).
inline SearchResult search_homotopic(const Nanoword& w1, const Nanoword& w2, const HomotopyData& d,
                                     const SearchOptions& o) {
  check_budget(o);
  require_same(w1.alphabet(), w2.alphabet());
  const AlphabetPtr& A = w1.alphabet();
  const int max_len = std::max({o.max_length, w1.length(), w2.length()});
  SearchOptions opt = o;
  opt.max_length = max_len;
  detail::Frontier F[2];
  F[0].add(w1.key(), -1, {});
  F[1].add(w2.key(), -1, {});
  SearchResult res;
  res.min_length = w1.length();
  int meet[2] = {-1, -1};
  if (w1.key() == w2.key()) meet[0] = meet[1] = 0;
  while (meet[0] < 0) {
    // Expand the side whose best open item is smaller; ties go to side 0.
    int side = -1;
    if (!F[0].open.empty()) side = 0;
    if (!F[1].open.empty() && (side < 0 || F[1].open.top() < F[0].open.top())) side = 1;
    if (side < 0 || res.states >= o.max_states) break;
    auto& f = F[side];
    const std::string key = f.open.top().second;
    f.open.pop();
    ++res.states;
    const int id = f.index.at(key);
    const Nanoword w = decode_key(A, key);
    for (auto& [s, v] : detail::successors(w, d, opt)) {
      const std::string k = v.key();
      const int nid = f.add(k, id, s);
      if (nid < 0) continue;
      if (side == 0) res.min_length = std::min(res.min_length, v.length());
      auto it = F[1 - side].index.find(k);
      if (it != F[1 - side].index.end()) {
        meet[side] = nid;
        meet[1 - side] = it->second;
        break;
      }
    }
  }
  if (meet[0] < 0) return res;
  // Words from w1 to the meeting point, then back to w2 along reversed steps.
  std::vector<Nanoword> words;
  std::vector<Move> trace;
  for (int i : F[0].path(meet[0])) {
    const auto& n = F[0].nodes[i];
    if (n.parent >= 0) {
      const Nanoword parent = decode_key(A, F[0].nodes[n.parent].key);
      for (auto& m : expand_to_primitive(parent, n.step, d)) trace.push_back(m);
    }
  }
  const auto back = F[1].path(meet[1]);
  for (size_t j = back.size(); j-- > 1;) {
    const auto& n = F[1].nodes[back[j]];
    const Nanoword parent = decode_key(A, F[1].nodes[n.parent].key);
    std::vector<Nanoword> chain{parent};
    detail::expand_step(parent, n.step, d, chain);
    for (size_t i = chain.size() - 1; i > 0; --i) {
      const auto m = find_move(chain[i].canonical(), chain[i - 1], d);
      if (!m) throw std::logic_error("cannot invert a search step");
      trace.push_back(*m);
    }
  }
  res.certificate = Certificate{d, w1.canonical(), w2.canonical(), std::move(trace)};
  return res;
}

inline SearchResult search_contractible(const Nanoword& w, const HomotopyData& d, const SearchOptions& o) {
  check_budget(o);
  if (o.max_length < w.length()) throw BudgetInvalid("max_length is below the length of the word");
  const AlphabetPtr& A = w.alphabet();
  detail::Frontier f;
  f.add(w.key(), -1, {});
  SearchResult res;
  res.min_length = w.length();
  const std::string target = empty_nanoword(A).key();
  int hit = w.empty() ? 0 : -1;
  while (hit < 0 && !f.open.empty() && res.states < o.max_states) {
    const std::string key = f.open.top().second;
    f.open.pop();
    ++res.states;
    const int id = f.index.at(key);
    const Nanoword u = decode_key(A, key);
    for (auto& [s, v] : detail::successors(u, d, o)) {
      const std::string k = v.key();
      const int nid = f.add(k, id, s);
      if (nid < 0) continue;
      res.min_length = std::min(res.min_length, v.length());
      if (k == target) {
        hit = nid;
        break;
      }
    }
  }
  if (hit < 0) return res;
  std::vector<Move> trace;
  for (int i : f.path(hit)) {
    const auto& n = f.nodes[i];
    if (n.parent < 0) continue;
    for (auto& m : expand_to_primitive(decode_key(A, f.nodes[n.parent].key), n.step, d)) trace.push_back(m);
  }
  res.min_length = 0;
  res.certificate = Certificate{d, w.canonical(), empty_nanoword(A), std::move(trace)};
  return res;
}

// Half the shortest length reached by a contracting search within the budget.
inline int norm_upper_bound(const Nanoword& w, const HomotopyData& d, const SearchOptions& o) {
  SearchOptions opt = o;
  opt.max_length = std::max(o.max_length, w.length());
  return search_contractible(w, d, opt).min_length / 2;
}

}  // namespace nanohom
