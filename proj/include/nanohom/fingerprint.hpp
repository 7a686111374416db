#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charseq.hpp"
#include "lambda.hpp"
#include "pairing.hpp"

namespace nanohom {

struct FingerprintOptions {
  std::vector<LetterSet> betas;         // one nabla pair per entry
  std::vector<ColoringSpec> colorings;  // one count matrix per entry
};

// Homotopy invariants of a nanoword; any differing field certifies non-homotopy.
struct Fingerprint {
  AlphabetPtr alphabet;
  PiWord gamma, gamma_prime;
  IntMatrix mu;
  SelfLinkSection u;
  AlphaPairing pairing;  // primitive
  int rho = 0;
  std::map<std::pair<int, PiElement>, int> rho_ax;
  Lambda lambda;
  std::vector<std::pair<LambdaAb, LambdaAb>> nabla;  // (nabla+, nabla-)
  std::vector<linalg::Matrix> colorings;
  std::optional<CharSeq> charseq;
};

inline Fingerprint fingerprint(const Nanoword& w, const FingerprintOptions& opt = {}) {
  const AlphabetPtr& A = w.alphabet();
  AlphaPairing p = compress(linking_pairing(w));
  Fingerprint f{A,
                gamma(w),
                gamma_prime(w),
                mu(w),
                self_link_function(w),
                p,
                p.size(),
                rho_ax(p),
                lambda(w),
                {},
                {},
                std::nullopt};
  for (const auto& beta : opt.betas) f.nabla.emplace_back(nabla(w, beta, 1), nabla(w, beta, -1));
  for (const auto& spec : opt.colorings) f.colorings.push_back(count_colorings(w, spec));
  if (A->tau_free()) f.charseq = char_sequence(w);
  return f;
}

namespace detail {

inline std::string matrix_str(const IntMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "]";
  }
  return s.empty() ? "[]" : s;
}

inline std::string matrix_str(const linalg::Matrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "]";
  }
  return s.empty() ? "[]" : s;
}

inline std::string rho_ax_str(const Alphabet& A, const std::map<std::pair<int, PiElement>, int>& r) {
  if (r.empty()) return "{}";
  std::string s;
  for (const auto& [ax, n] : r)
    s += (s.empty() ? "" : ", ") + A.name(ax.first) + "," + PiGroup::str(A, ax.second) + ": " + std::to_string(n);
  return "{" + s + "}";
}

}  // namespace detail

struct FingerprintField {
  std::string name;
  std::string value;
};

// Printable fields, in the order used to name separating invariants.
inline std::vector<FingerprintField> fingerprint_fields(const Fingerprint& f, bool derived = true) {
  const Alphabet& A = *f.alphabet;
  std::vector<FingerprintField> out{
      {"gamma", BigPiGroup::str(A, f.gamma)},
      {"gamma'", BigPiPrimeGroup::str(A, f.gamma_prime)},
      {"mu", detail::matrix_str(f.mu)},
      {"u", f.u.str()},
      {"rho", std::to_string(f.rho)},
      {"rho_ax", detail::rho_ax_str(A, f.rho_ax)},
      {"pairing", f.pairing.str()},
      {"lambda", f.lambda.str()},
  };
  if (derived) {
    const auto split = lambda_split(f.lambda);
    for (int i = 0; i < 4; ++i)
      out.push_back({"lambda_" + std::to_string(i / 2) + std::to_string(i % 2), split[i].str()});
    out.push_back({"psi(1 - lambda_00)", psi_table_str(A, psi_expand(lam_one(f.alphabet) - split[0]))});
  }
  for (size_t i = 0; i < f.nabla.size(); ++i) {
    out.push_back({"nabla+[" + std::to_string(i) + "]", f.nabla[i].first.str()});
    out.push_back({"nabla-[" + std::to_string(i) + "]", f.nabla[i].second.str()});
  }
  for (size_t i = 0; i < f.colorings.size(); ++i)
    out.push_back({"colorings[" + std::to_string(i) + "]", detail::matrix_str(f.colorings[i])});
  if (f.charseq) out.push_back({"charseq", charseq_str(A, *f.charseq)});
  return out;
}

// Name of the first field on which the fingerprints differ, if any. Pairings are compared up to
// isomorphism.
inline std::optional<std::string> separating_field(const Fingerprint& x, const Fingerprint& y) {
  require_same(x.alphabet, y.alphabet);
  if (x.gamma != y.gamma) return "gamma";
  if (x.gamma_prime != y.gamma_prime) return "gamma'";
  if (x.mu != y.mu) return "mu";
  if (!(x.u == y.u)) return "u";
  if (x.rho != y.rho) return "rho";
  if (x.rho_ax != y.rho_ax) return "rho_ax";
  if (!pairings_isomorphic(x.pairing, y.pairing)) return "pairing";
  if (!(x.lambda == y.lambda)) return "lambda";
  for (size_t i = 0; i < std::min(x.nabla.size(), y.nabla.size()); ++i) {
    if (!(x.nabla[i].first == y.nabla[i].first)) return "nabla+[" + std::to_string(i) + "]";
    if (!(x.nabla[i].second == y.nabla[i].second)) return "nabla-[" + std::to_string(i) + "]";
  }
  for (size_t i = 0; i < std::min(x.colorings.size(), y.colorings.size()); ++i)
    if (x.colorings[i] != y.colorings[i]) return "colorings[" + std::to_string(i) + "]";
  if (x.charseq && y.charseq && *x.charseq != *y.charseq) return "charseq";
  return std::nullopt;
}

// Exact key of every field except the pairing (which is only defined up to isomorphism).
inline std::string fingerprint_key(const Fingerprint& f) {
  std::string k;
  for (const auto& fld : fingerprint_fields(f, false))
    if (fld.name != "pairing") k += fld.name + "=" + fld.value + "\n";
  return k;
}

}  // namespace nanohom
