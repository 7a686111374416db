#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "moves.hpp"

namespace nanohom {

// One input block: alphabet, nanoword, optional set S.
struct Record {
  AlphabetPtr alphabet;
  Nanoword word;
  std::optional<std::set<Triple>> S;
  int line = 0;  // first line of the block

  HomotopyData data() const {
    if (!S) return HomotopyData::diagonal(alphabet);
    return HomotopyData{alphabet, *S};
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// "key: value" -> {key, value}; returns false for lines without a key.
inline bool split_key(const std::string& line, std::string& key, std::string& value) {
  const auto c = line.find(':');
  if (c == std::string::npos) return false;
  key = trim(line.substr(0, c));
  value = trim(line.substr(c + 1));
  return true;
}

inline AlphabetPtr make_alphabet(int line, const std::vector<std::string>& names,
                                 const std::string& involution, const std::optional<std::string>& orientation) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], static_cast<int>(i)).second) throw ParseError(line, "duplicate letter " + names[i]);
  std::vector<int> tau(names.size(), -1), orient;
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw ParseError(line, "unknown letter '" + s + "' in involution");
    return it->second;
  };
  for (const auto& pair : split_ws(involution)) {
    const auto arrow = pair.find("<->");
    if (arrow == std::string::npos) throw ParseError(line, "expected x<->y, got '" + pair + "'");
    const int a = lookup(pair.substr(0, arrow)), b = lookup(pair.substr(arrow + 3));
    if (tau[a] >= 0 || tau[b] >= 0) throw ParseError(line, "letter paired twice in '" + pair + "'");
    tau[a] = b;
    tau[b] = a;
    orient.push_back(a);
  }
  for (size_t i = 0; i < names.size(); ++i)
    if (tau[i] < 0) throw ParseError(line, "letter " + names[i] + " missing from involution");
  if (orientation) {
    orient.clear();
    for (const auto& s : split_ws(*orientation)) {
      auto it = idx.find(s);
      if (it == idx.end()) throw ParseError(line, "unknown letter '" + s + "' in orientation");
      orient.push_back(it->second);
    }
  }
  try {
    return std::make_shared<const Alphabet>(names, tau, orient);
  } catch (const InvalidAlphabet& e) {
    throw ParseError(line, e.what());
  }
}

inline std::set<Triple> parse_triples(int line, const Alphabet& A, const std::string& s) {
  std::set<Triple> out;
  std::string clean;
  for (char c : s) clean += (c == '(' || c == ')' || c == ';') ? ' ' : c;
  for (const auto& t : split_ws(clean)) {
    std::stringstream ts(t);
    Triple tr{};
    int k = 0;
    for (std::string x; std::getline(ts, x, ',');) {
      if (k == 3 || !A.contains(x)) throw ParseError(line, "bad triple '" + t + "'");
      tr[k++] = A.index(x);
    }
    if (k != 3) throw ParseError(line, "bad triple '" + t + "'");
    out.insert(tr);
  }
  return out;
}

inline Nanoword parse_word(int line, const AlphabetPtr& A, const std::string& word, const std::string& proj) {
  std::map<std::string, std::string> p;
  for (const auto& kv : split_ws(proj)) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected X=x in proj, got '" + kv + "'");
    p[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  try {
    return make_nanoword(A, split_ws(word), p);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

inline Nanoword parse_plainword(int line, const AlphabetPtr& A, const std::string& s) {
  std::vector<std::string> symbols = split_ws(s);
  if (symbols.size() == 1 && !A->contains(symbols[0])) {
    symbols.clear();
    for (char c : s) symbols.emplace_back(1, c);
  }
  try {
    return desingularize(from_word(symbols, A));
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

// Blocks separated by `---`; a block without an alphabet reuses the previous one.
// Blank lines and lines starting with '#' are ignored.
inline std::vector<Record> parse_records(std::istream& in) {
  std::vector<Record> out;
  AlphabetPtr last;
  struct Block {
    std::map<std::string, std::pair<int, std::string>> fields;
    int line = 0;
  } block;
  auto finish = [&] {
    if (block.fields.empty()) return;
    auto get = [&](const std::string& k) -> std::optional<std::pair<int, std::string>> {
      auto it = block.fields.find(k);
      if (it == block.fields.end()) return std::nullopt;
      return it->second;
    };
    Record r;
    r.line = block.line;
    if (auto a = get("alphabet")) {
      auto inv = get("involution");
      if (!inv) throw ParseError(a->first, "alphabet without involution line");
      std::optional<std::string> orient;
      if (auto o = get("orientation")) orient = o->second;
      last = detail::make_alphabet(a->first, detail::split_ws(a->second), inv->second, orient);
    } else if (get("involution") || get("orientation")) {
      throw ParseError(block.line, "involution given without alphabet");
    }
    if (!last) throw ParseError(block.line, "no alphabet declared");
    r.alphabet = last;
    if (auto w = get("word")) {
      auto p = get("proj");
      if (!p) throw ParseError(w->first, "word without proj line");
      r.word = detail::parse_word(w->first, last, w->second, p->second);
    } else if (auto pw = get("plainword")) {
      r.word = detail::parse_plainword(pw->first, last, pw->second);
    } else {
      throw ParseError(block.line, "record has no word or plainword");
    }
    if (auto s = get("S")) r.S = detail::parse_triples(s->first, *last, s->second);
    out.push_back(std::move(r));
    block = {};
  };
  static const std::set<std::string> known{"alphabet", "involution", "orientation", "word", "proj", "plainword", "S"};
  std::string raw;
  for (int ln = 1; std::getline(in, raw); ++ln) {
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "---") {
      finish();
      continue;
    }
    std::string key, value;
    if (!detail::split_key(line, key, value)) throw ParseError(ln, "expected 'key: value'");
    if (!known.count(key)) throw ParseError(ln, "unknown field '" + key + "'");
    if (block.fields.empty()) block.line = ln;
    if (!block.fields.emplace(key, std::make_pair(ln, value)).second) throw ParseError(ln, "duplicate field '" + key + "'");
  }
  finish();
  return out;
}

inline std::vector<Record> parse_records(const std::string& text) {
  std::istringstream in(text);
  return parse_records(in);
}

// Display names of the letters of w; default names when the stored ones are missing or clash.
inline std::vector<std::string> letter_names(const Nanoword& w) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool ok = static_cast<int>(w.names().size()) == w.num_letters();
  for (int A = 0; ok && A < w.num_letters(); ++A) {
    const std::string& n = w.names()[A];
    ok = !n.empty() && n.find_first_of(" \t=:|") == std::string::npos && seen.insert(n).second;
  }
  for (int A = 0; A < w.num_letters(); ++A) names.push_back(ok ? w.names()[A] : default_letter_name(A));
  return names;
}

inline std::string alphabet_lines(const Alphabet& A) {
  std::string s = "alphabet:";
  for (const auto& n : A.names()) s += " " + n;
  s += "\ninvolution:";
  std::string o = "orientation:";
  for (const auto& orb : A.orbits()) {
    s += " " + A.name(orb.rep) + "<->" + A.name(orb.other);
    o += " " + A.name(orb.rep);
  }
  return s + "\n" + o + "\n";
}

inline std::string word_str(const Nanoword& w) {
  const auto names = letter_names(w);
  std::string s;
  for (int i = 0; i < w.length(); ++i) s += (i ? " " : "") + names[w.at(i)];
  return s;
}

inline std::string proj_str(const Nanoword& w) {
  const auto names = letter_names(w);
  std::string s;
  for (int A = 0; A < w.num_letters(); ++A) s += (A ? " " : "") + names[A] + "=" + w.alphabet()->name(w.value(A));
  return s;
}

// Compact one-line form, e.g. "ABAB (A=a B=b)".
inline std::string nanoword_str(const Nanoword& w) {
  if (w.empty()) return "∅";
  const auto names = letter_names(w);
  bool single = true;
  for (const auto& n : names) single = single && n.size() == 1;
  std::string s;
  for (int i = 0; i < w.length(); ++i) s += (i && !single ? " " : "") + names[w.at(i)];
  return s + " (" + proj_str(w) + ")";
}

inline std::string triples_str(const Alphabet& A, const std::set<Triple>& S) {
  std::string s;
  for (const auto& t : S) s += (s.empty() ? "" : " ") + A.name(t[0]) + "," + A.name(t[1]) + "," + A.name(t[2]);
  return s;
}

inline std::string write_record(const Record& r) {
  std::string s = alphabet_lines(*r.alphabet);
  s += "word: " + word_str(r.word) + "\nproj: " + proj_str(r.word) + "\n";
  if (r.S) s += "S: " + triples_str(*r.alphabet, *r.S) + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Certificates: header, then one move per line.

inline std::string write_certificate(const Certificate& c) {
  const Alphabet& A = *c.data.alphabet;
  std::string s = alphabet_lines(A);
  if (c.data.S != HomotopyData::diagonal(c.data.alphabet).S) s += "S: " + triples_str(A, c.data.S) + "\n";
  s += "start: " + word_str(c.start) + "\nstart-proj: " + proj_str(c.start) + "\n";
  s += "end: " + word_str(c.end) + "\nend-proj: " + proj_str(c.end) + "\n";
  s += "moves: " + std::to_string(c.trace.size()) + "\n";
  for (const auto& m : c.trace) s += move_str(A, m) + "\n";
  return s;
}

inline Certificate parse_certificate(std::istream& in) {
  std::map<std::string, std::pair<int, std::string>> f;
  std::vector<std::pair<int, std::string>> moves;
  std::string raw;
  bool in_moves = false;
  for (int ln = 1; std::getline(in, raw); ++ln) {
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (in_moves) {
      moves.emplace_back(ln, line);
      continue;
    }
    std::string key, value;
    if (!detail::split_key(line, key, value)) throw ParseError(ln, "expected 'key: value'");
    f[key] = {ln, value};
    if (key == "moves") in_moves = true;
  }
  auto need = [&](const std::string& k) {
    auto it = f.find(k);
    if (it == f.end()) throw ParseError(0, "certificate misses '" + k + "'");
    return it->second;
  };
  const auto al = need("alphabet");
  std::optional<std::string> orient;
  if (f.count("orientation")) orient = f["orientation"].second;
  const AlphabetPtr A = detail::make_alphabet(al.first, detail::split_ws(al.second), need("involution").second, orient);
  Certificate c{HomotopyData::diagonal(A), empty_nanoword(A), empty_nanoword(A), {}};
  if (f.count("S")) c.data.S = detail::parse_triples(f["S"].first, *A, f["S"].second);
  c.start = detail::parse_word(need("start").first, A, need("start").second, need("start-proj").second);
  c.end = detail::parse_word(need("end").first, A, need("end").second, need("end-proj").second);
  for (const auto& [ln, text] : moves) {
    try {
      c.trace.push_back(parse_move(*A, text));
    } catch (const Error& e) {
      throw ParseError(ln, e.what());
    }
  }
  const auto declared = need("moves");
  if (std::to_string(c.trace.size()) != declared.second)
    throw ParseError(declared.first, "declared " + declared.second + " moves, found " + std::to_string(c.trace.size()));
  return c;
}

inline Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

// Alphabet from an involution line alone, e.g. "a<->A b<->b"; letters in order of appearance.
inline AlphabetPtr parse_alphabet_spec(const std::string& involution) {
  std::vector<std::string> names;
  for (const auto& pair : detail::split_ws(involution)) {
    const auto arrow = pair.find("<->");
    if (arrow == std::string::npos) throw ParseError(1, "expected x<->y, got '" + pair + "'");
    for (const auto& x : {pair.substr(0, arrow), pair.substr(arrow + 3)})
      if (std::find(names.begin(), names.end(), x) == names.end()) names.push_back(x);
  }
  return detail::make_alphabet(1, names, involution, std::nullopt);
}

// Subgroup of pi from generators such as "ab, a^2"; letters are matched greedily by name and
// a letter outside the orientation stands for the inverse of its partner.
inline SubgroupOfPi parse_subgroup(const Alphabet& A, const std::string& spec) {
  SubgroupOfPi H;
  std::stringstream ss(spec);
  for (std::string gen; std::getline(ss, gen, ',');) {
    std::string g;
    for (char c : gen)
      if (c != ' ' && c != '\t') g += c;
    if (g.empty()) continue;
    PiElement x = PiGroup::identity(A);
    size_t i = 0;
    if (g == "1") i = g.size();
    while (i < g.size()) {
      int best = -1;
      size_t len = 0;
      for (int a = 0; a < A.size(); ++a)
        if (A.name(a).size() > len && g.compare(i, A.name(a).size(), A.name(a)) == 0) best = a, len = A.name(a).size();
      if (best < 0) throw ParseError(1, "unknown letter in subgroup generator '" + gen + "'");
      i += len;
      int e = 1;
      if (i < g.size() && g[i] == '^') {
        size_t used = 0;
        try {
          e = std::stoi(g.substr(i + 1), &used);
        } catch (const std::exception&) {
          throw ParseError(1, "bad exponent in '" + gen + "'");
        }
        i += 1 + used;
      }
      x = PiGroup::mul(A, x, PiGroup::pow(A, PiGroup::gen(A, best), e));
    }
    H.generators.push_back(x);
  }
  return H;
}

}  // namespace nanohom
