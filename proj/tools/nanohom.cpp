#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nanohom/classify.hpp"
#include "nanohom/io.hpp"

using namespace nanohom;
using json = nlohmann::json;

namespace {

enum Exit { kVerdict = 0, kError = 1, kUnknown = 2 };

struct Common {
  int max_length = 20;
  long long max_states = 1000000;
  bool deterministic = false;
  std::string format = "text";
  std::vector<std::string> betas;
  bool json() const { return format == "json-lines"; }
  SearchOptions search() const { return {max_length, max_states, true, {}}; }
};

std::vector<Record> read_records(const std::string& path) {
  if (path == "-") return parse_records(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_records(in);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<LetterSet> betas_for(const Alphabet& A, const std::vector<std::string>& specs) {
  std::vector<LetterSet> out;
  for (const auto& s : specs) out.push_back(s == "all" ? all_letters(A) : parse_letter_set(A, s));
  if (out.empty()) out.push_back(all_letters(A));
  return out;
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json()) std::cout << j.dump() << "\n";
  else std::cout << text;
}

void print_fields(const std::vector<FingerprintField>& fields, std::ostream& out) {
  for (const auto& f : fields) {
    if (f.value.find('\n') == std::string::npos) {
      out << f.name << ": " << f.value << "\n";
      continue;
    }
    out << f.name << ":\n";
    std::istringstream in(f.value);
    for (std::string l; std::getline(in, l);) out << "  " << l << "\n";
  }
}

int cmd_invariants(const Common& c, const std::string& path) {
  for (const auto& r : read_records(path)) {
    FingerprintOptions opt;
    opt.betas = betas_for(*r.alphabet, c.betas);
    opt.colorings.push_back(ColoringSpec::tricolor(*r.alphabet, all_letters(*r.alphabet)));
    const Fingerprint f = fingerprint(r.word, opt);
    const auto fields = fingerprint_fields(f);
    json j{{"word", nanoword_str(r.word)}, {"length", r.word.length()}, {"norm_lower_bound", norm_lower_bound(r.word)}};
    for (const auto& fld : fields) j[fld.name] = fld.value;
    std::ostringstream out;
    out << "word: " << nanoword_str(r.word) << "\n";
    print_fields(fields, out);
    out << "norm_lower_bound: " << norm_lower_bound(r.word) << "\n\n";
    emit(c, j, out.str());
  }
  return kVerdict;
}

int cmd_contract(const Common& c, const std::string& path, const std::string& cert_out) {
  int code = kVerdict;
  for (const auto& r : read_records(path)) {
    json j{{"word", nanoword_str(r.word)}};
    std::ostringstream out;
    out << "word: " << nanoword_str(r.word) << "\n";
    const auto sep = separating_field(fingerprint(r.word), fingerprint(empty_nanoword(r.alphabet)));
    if (sep && !r.S) {
      j["verdict"] = "NON-CONTRACTIBLE";
      j["field"] = *sep;
      out << "verdict: NON-CONTRACTIBLE (" << *sep << ")\n\n";
      emit(c, j, out.str());
      continue;
    }
    SearchOptions so = c.search();
    so.max_length = std::max(so.max_length, r.word.length());
    const SearchResult s = search_contractible(r.word, r.data(), so);
    j["states"] = s.states;
    if (s.certificate) {
      const std::string text = write_certificate(*s.certificate);
      j["verdict"] = "CONTRACTIBLE";
      j["certificate"] = text;
      out << "verdict: CONTRACTIBLE (" << s.certificate->trace.size() << " moves, " << s.states << " states)\n" << text;
      if (!cert_out.empty()) std::ofstream(cert_out) << text;
    } else {
      j["verdict"] = "UNKNOWN";
      j["norm_upper_bound"] = s.min_length / 2;
      out << "verdict: UNKNOWN (" << s.states << " states, shortest length reached " << s.min_length << ")\n";
      code = kUnknown;
    }
    out << "\n";
    emit(c, j, out.str());
  }
  return code;
}

int cmd_homotopic(const Common& c, const std::vector<std::string>& paths, const std::string& cert_out) {
  std::vector<Record> recs;
  for (const auto& p : paths)
    for (auto& r : read_records(p)) recs.push_back(std::move(r));
  if (recs.size() != 2) throw std::runtime_error("homotopic needs exactly two records");
  require_same(recs[0].alphabet, recs[1].alphabet);
  const Nanoword &u = recs[0].word, &v = recs[1].word;
  json j{{"first", nanoword_str(u)}, {"second", nanoword_str(v)}};
  std::ostringstream out;
  out << "first: " << nanoword_str(u) << "\nsecond: " << nanoword_str(v) << "\n";
  const bool custom_s = recs[0].S || recs[1].S;
  const auto sep = custom_s ? std::nullopt : separating_field(fingerprint(u), fingerprint(v));
  int code = kVerdict;
  if (sep) {
    j["verdict"] = "NON-HOMOTOPIC";
    j["field"] = *sep;
    out << "verdict: NON-HOMOTOPIC (" << *sep << ")\n";
  } else {
    const SearchResult s = search_homotopic(u, v, recs[0].data(), c.search());
    j["states"] = s.states;
    if (s.certificate) {
      const std::string text = write_certificate(*s.certificate);
      j["verdict"] = "HOMOTOPIC";
      j["certificate"] = text;
      out << "verdict: HOMOTOPIC (" << s.certificate->trace.size() << " moves, " << s.states << " states)\n" << text;
      if (!cert_out.empty()) std::ofstream(cert_out) << text;
    } else {
      j["verdict"] = "UNKNOWN";
      out << "verdict: UNKNOWN (" << s.states << " states)\n";
      code = kUnknown;
    }
  }
  emit(c, j, out.str());
  return code;
}

int cmd_covering(const Common& c, const std::string& path, const std::string& subgroup) {
  for (const auto& r : read_records(path)) {
    const Nanoword cov = covering(r.word, parse_subgroup(*r.alphabet, subgroup));
    const Record out{r.alphabet, cov, r.S, 0};
    json j{{"word", nanoword_str(r.word)}, {"covering", nanoword_str(cov)}, {"record", write_record(out)}};
    emit(c, j, write_record(out) + "---\n");
  }
  return kVerdict;
}

// Display width of UTF-8 text: continuation bytes do not count.
size_t width(const std::string& s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

int cmd_classify(const Common& c, const std::string& family, const std::string& alphabet, bool pairs) {
  const Family f = parse_family(family);
  const AlphabetPtr A = alphabet.empty() ? default_family_alphabet(f) : parse_alphabet_spec(alphabet);
  ClassifyOptions opt;
  opt.search.max_states = std::min<long long>(c.max_states, 20000);
  opt.parallel = !c.deterministic;
  const ClassifyResult r = classify(f, A, opt);
  const int n = static_cast<int>(r.entries.size());
  // Computed classes numbered in order of first member.
  std::map<int, int> cls;
  for (int i = 0; i < n; ++i) cls.emplace(r.component[i], static_cast<int>(cls.size()));
  std::map<std::string, int> sep_count;
  std::vector<int> reps;
  for (int i = 0; i < n; ++i)
    if (r.component[i] == i) reps.push_back(i);
  for (size_t x = 0; x < reps.size(); ++x)
    for (size_t y = x + 1; y < reps.size(); ++y) ++sep_count[r.separation(reps[x], reps[y])];

  if (c.json()) {
    for (int i = 0; i < n; ++i)
      std::cout << json{{"word", r.entries[i].name},
                        {"nanoword", nanoword_str(r.entries[i].word)},
                        {"predicted", r.entries[i].predicted},
                        {"class", cls[r.component[i]]},
                        {"verdict", r.verdict[i]}}
                       .dump()
                << "\n";
    if (pairs)
      for (size_t x = 0; x < reps.size(); ++x)
        for (size_t y = x + 1; y < reps.size(); ++y)
          std::cout << json{{"class", cls[r.component[reps[x]]]},
                            {"other", cls[r.component[reps[y]]]},
                            {"separated_by", r.separation(reps[x], reps[y])}}
                           .dump()
                    << "\n";
    json summary{{"family", family_name(f)}, {"words", n},         {"classes", reps.size()},
                 {"agrees", r.count("AGREES")}, {"disagrees", r.count("DISAGREES")}, {"unknown", r.count("UNKNOWN")},
                 {"overall", r.overall()}};
    for (const auto& [k, v] : sep_count) summary["separations"][k] = v;
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "# classify " << family_name(f) << "\n" << alphabet_lines(*A);
    size_t w1 = 4, w2 = 9;
    for (const auto& e : r.entries) {
      w1 = std::max(w1, width(e.name));
      w2 = std::max(w2, width(e.predicted));
    }
    auto pad = [](const std::string& s, size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); };
    std::cout << pad("word", w1) << "  " << pad("predicted", w2) << "  class  verdict\n";
    for (int i = 0; i < n; ++i)
      std::cout << pad(r.entries[i].name, w1) << "  " << pad(r.entries[i].predicted, w2) << "  "
                << pad(std::to_string(cls[r.component[i]]), 5) << "  " << r.verdict[i] << "\n";
    if (pairs) {
      std::cout << "separations:\n";
      for (size_t x = 0; x < reps.size(); ++x)
        for (size_t y = x + 1; y < reps.size(); ++y)
          std::cout << "  " << cls[r.component[reps[x]]] << " | " << cls[r.component[reps[y]]] << " | "
                    << r.separation(reps[x], reps[y]) << "\n";
    }
    std::cout << "separating invariants:";
    for (const auto& [k, v] : sep_count) std::cout << " " << k << "=" << v;
    std::cout << "\nwords: " << n << "  classes: " << reps.size() << "  agrees: " << r.count("AGREES")
              << "  disagrees: " << r.count("DISAGREES") << "  unknown: " << r.count("UNKNOWN") << "\n";
    std::cout << "partition: " << r.overall() << "\n";
  }
  if (r.overall() == "DISAGREES") return kError;
  return r.overall() == "UNKNOWN" ? kUnknown : kVerdict;
}

std::vector<linalg::Int> parse_values(const Alphabet& A, const std::string& spec, linalg::Int fallback) {
  std::vector<linalg::Int> v(A.size(), fallback);
  std::string clean = spec;
  std::replace(clean.begin(), clean.end(), ',', ' ');
  std::istringstream in(clean);
  for (std::string kv; in >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidSpec("expected letter=value, got '" + kv + "'");
    v[A.index(kv.substr(0, eq))] = std::stoll(kv.substr(eq + 1));
  }
  return v;
}

int cmd_colorings(const Common& c, const std::string& path, linalg::Int mod, bool tricolor, const std::string& p,
                  const std::string& pb) {
  for (const auto& r : read_records(path)) {
    const Alphabet& A = *r.alphabet;
    for (const auto& beta : betas_for(A, c.betas)) {
      ColoringSpec spec = ColoringSpec::tricolor(A, beta);
      if (!tricolor) {
        spec.modulus = mod;
        spec.p = parse_values(A, p, 1);
        spec.p_bullet = parse_values(A, pb, 1);
      }
      const auto counts = count_colorings(r.word, spec);
      json j{{"word", nanoword_str(r.word)}, {"modulus", spec.modulus}, {"counts", counts}};
      std::ostringstream out;
      out << "word: " << nanoword_str(r.word) << "\nmodulus: " << spec.modulus << "\ncounts (input k, output l):\n";
      for (const auto& row : counts) {
        out << " ";
        for (auto x : row) out << " " << x;
        out << "\n";
      }
      out << "\n";
      emit(c, j, out.str());
    }
  }
  return kVerdict;
}

int cmd_nabla(const Common& c, const std::string& path, const std::string& sign) {
  for (const auto& r : read_records(path)) {
    for (const auto& beta : betas_for(*r.alphabet, c.betas)) {
      json j{{"word", nanoword_str(r.word)}};
      std::ostringstream out;
      out << "word: " << nanoword_str(r.word) << "\n";
      if (sign != "-") {
        const std::string v = nabla(r.word, beta, 1).str();
        j["nabla+"] = v;
        out << "nabla+: " << v << "\n";
      }
      if (sign != "+") {
        const std::string v = nabla(r.word, beta, -1).str();
        j["nabla-"] = v;
        out << "nabla-: " << v << "\n";
      }
      out << "\n";
      emit(c, j, out.str());
    }
  }
  return kVerdict;
}

int cmd_lambda(const Common& c, const std::string& path) {
  for (const auto& r : read_records(path)) {
    const Alphabet& A = *r.alphabet;
    const Lambda l = lambda(r.word);
    const auto split = lambda_split(l);
    const auto checks = lambda_checks(r.word);
    json j{{"word", nanoword_str(r.word)}, {"lambda", l.str()}, {"lambda'", lambda_prime(r.word).str()}};
    std::ostringstream out;
    out << "word: " << nanoword_str(r.word) << "\nlambda: " << l.str() << "\nlambda': " << lambda_prime(r.word).str()
        << "\n";
    for (int i = 0; i < 4; ++i) {
      const std::string name = "lambda_" + std::to_string(i / 2) + std::to_string(i % 2);
      j[name] = split[i].str();
      out << name << ": " << split[i].str() << "\n";
    }
    const std::string psi = psi_table_str(A, psi_expand(lam_one(r.alphabet) - split[0]));
    j["psi(1 - lambda_00)"] = psi;
    j["checks"] = checks.ok();
    out << "psi(1 - lambda_00): " << psi << "\nchecks: " << (checks.ok() ? "ok" : "FAILED\n" + checks.diagnostics) << "\n";
    if (A.tau_free()) {
      const std::string cs = charseq_str(A, char_sequence(r.word));
      j["charseq"] = cs;
      out << "charseq: " << cs << "\n";
    }
    out << "\n";
    emit(c, j, out.str());
  }
  return kVerdict;
}

int cmd_verify(const Common& c, const std::string& path) {
  const Certificate cert = parse_certificate(read_text(path));
  std::string reason;
  bool ok = false;
  try {
    ok = replay(cert).key() == cert.end.key();
    if (!ok) reason = "replay ends at a different nanoword";
  } catch (const InvalidMove& e) {
    reason = e.what();
  }
  json j{{"valid", ok}, {"moves", cert.trace.size()}};
  if (!ok) j["reason"] = reason;
  emit(c, j, ok ? "VALID (" + std::to_string(cert.trace.size()) + " moves)\n" : "INVALID: " + reason + "\n");
  return ok ? kVerdict : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy invariants and homotopy search for nanowords"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--max-length", c.max_length, "Longest intermediate nanoword in searches")->capture_default_str();
  app.add_option("--max-states", c.max_states, "State budget per search")->capture_default_str();
  app.add_flag("--deterministic", c.deterministic, "Single-threaded, byte-stable output");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json-lines"}))->capture_default_str();
  app.add_option("--beta", c.betas, "Letter set for nabla and colorings, e.g. \"a,b\" or \"all\" (repeatable)");

  std::string input = "-", cert_out, subgroup, family, alphabet, sign = "both", p, pb;
  std::vector<std::string> inputs;
  linalg::Int mod = 3;
  bool tricolor = false, pairs = false;

  auto* inv = app.add_subcommand("invariants", "Print the invariant fingerprint of each record");
  inv->add_option("input", input, "Input file ('-' for stdin)");
  auto* con = app.add_subcommand("contract", "Search for a contracting certificate");
  con->add_option("input", input, "Input file ('-' for stdin)");
  con->add_option("--cert", cert_out, "Write the certificate to this file");
  auto* hom = app.add_subcommand("homotopic", "Decide homotopy of two records");
  hom->add_option("inputs", inputs, "One file with two records, or two files")->required();
  hom->add_option("--cert", cert_out, "Write the certificate to this file");
  auto* cov = app.add_subcommand("covering", "H-covering for a subgroup of pi");
  cov->add_option("input", input, "Input file ('-' for stdin)");
  cov->add_option("--subgroup", subgroup, "Generators, e.g. \"ab, a^2\"")->required();
  auto* cls = app.add_subcommand("classify", "Reproduce a homotopy classification table");
  cls->add_option("family", family, "nanowords4, nanowords6 or words5")->required();
  cls->add_option("--alphabet", alphabet, "Involution, e.g. \"a<->A b<->b\"");
  cls->add_flag("--pairs", pairs, "List the separating invariant of every pair of classes");
  auto* col = app.add_subcommand("colorings", "Count colorings by input and output color");
  col->add_option("input", input, "Input file ('-' for stdin)");
  col->add_option("--mod", mod, "Modulus")->capture_default_str();
  col->add_flag("--tricolor", tricolor, "Tricolorings (modulus 3, p = 1, p. = 2)");
  col->add_option("--p", p, "Values of p, e.g. \"a=2 A=3\" (default 1)");
  col->add_option("--pb", pb, "Values of p., e.g. \"a=2 A=3\" (default 1)");
  auto* nab = app.add_subcommand("nabla", "Determinant invariants of the weighted matrix");
  nab->add_option("input", input, "Input file ('-' for stdin)");
  nab->add_option("--sign", sign, "+, - or both")->check(CLI::IsMember({"+", "-", "both"}));
  auto* lam = app.add_subcommand("lambda", "lambda, its components and the characteristic sequence");
  lam->add_option("input", input, "Input file ('-' for stdin)");
  auto* ver = app.add_subcommand("verify-cert", "Replay a certificate");
  ver->add_option("input", input, "Certificate file ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kVerdict : kError;
  }
  try {
    if (*inv) return cmd_invariants(c, input);
    if (*con) return cmd_contract(c, input, cert_out);
    if (*hom) return cmd_homotopic(c, inputs, cert_out);
    if (*cov) return cmd_covering(c, input, subgroup);
    if (*cls) return cmd_classify(c, family, alphabet, pairs);
    if (*col) return cmd_colorings(c, input, mod, tricolor, p, pb);
    if (*nab) return cmd_nabla(c, input, sign);
    if (*lam) return cmd_lambda(c, input);
    if (*ver) return cmd_verify(c, input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
