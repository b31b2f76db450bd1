#include "ncpit/ncpoly.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ncpit {

namespace {

void check_symbol(Alphabet alphabet, std::uint32_t nvars, std::uint32_t sym) {
  if (alphabet == Alphabet::X) {
    if (sym > 1) fail(Errc::Config, "bivariate symbol must be 0 or 1");
  } else {
    if (sym < 1 || sym > nvars)
      fail(Errc::Config, "z-symbol index " + std::to_string(sym) + " outside [1, " +
                             std::to_string(nvars) + "]");
  }
}

}  // namespace

std::string Word::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::uint32_t s : symbols) {
    if (!first) out << ' ';
    first = false;
    out << (alphabet == Alphabet::X ? "x" : "z") << s;
  }
  return first ? "<unit>" : out.str();
}

Word make_zword(std::initializer_list<std::uint32_t> symbols) {
  return Word{Alphabet::Z, std::vector<std::uint32_t>(symbols)};
}

Word make_xword(std::initializer_list<std::uint32_t> symbols) {
  return Word{Alphabet::X, std::vector<std::uint32_t>(symbols)};
}

SparseNCPoly::SparseNCPoly(Alphabet alphabet, std::uint32_t nvars)
    : alphabet_(alphabet), nvars_(alphabet == Alphabet::X ? 2 : nvars) {}

SparseNCPoly SparseNCPoly::normalize(Alphabet alphabet, std::uint32_t nvars,
                                     const std::vector<std::pair<mpz_class, Word>>& raw) {
  SparseNCPoly p(alphabet, nvars);
  for (const auto& [c, w] : raw) {
    if (w.alphabet != alphabet) fail(Errc::Config, "normalize: word alphabet mismatch");
    for (std::uint32_t s : w.symbols) check_symbol(alphabet, p.nvars_, s);
    p.add_term(w, c);
  }
  return p;
}

void SparseNCPoly::add_term(const Word& w, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint64_t> SparseNCPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded word order: the last key has maximal length.
  return terms_.rbegin()->first.degree();
}

mpz_class SparseNCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

SparseNCPoly SparseNCPoly::operator+(const SparseNCPoly& o) const {
  if (alphabet_ != o.alphabet_ || nvars_ != o.nvars_)
    fail(Errc::Config, "polynomial alphabet/nvars mismatch");
  SparseNCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

SparseNCPoly SparseNCPoly::operator-(const SparseNCPoly& o) const {
  if (alphabet_ != o.alphabet_ || nvars_ != o.nvars_)
    fail(Errc::Config, "polynomial alphabet/nvars mismatch");
  SparseNCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

SparseNCPoly SparseNCPoly::operator*(const SparseNCPoly& o) const {
  if (alphabet_ != o.alphabet_ || nvars_ != o.nvars_)
    fail(Errc::Config, "polynomial alphabet/nvars mismatch");
  SparseNCPoly r(alphabet_, nvars_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      Word w{alphabet_, wa.symbols};
      w.symbols.insert(w.symbols.end(), wb.symbols.begin(), wb.symbols.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

SparseNCPoly SparseNCPoly::scaled(const mpz_class& c) const {
  SparseNCPoly r(alphabet_, nvars_);
  if (c == 0) return r;
  for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
  return r;
}

Word encode_word(const Word& zword) {
  if (zword.alphabet != Alphabet::Z) fail(Errc::Config, "encode_word expects a z-word");
  Word out{Alphabet::X, {}};
  std::size_t len = 0;
  for (std::uint32_t s : zword.symbols) len += std::size_t(s) + 2;
  out.symbols.reserve(len);
  for (std::uint32_t s : zword.symbols) {
    out.symbols.push_back(0);
    out.symbols.insert(out.symbols.end(), s, 1);
    out.symbols.push_back(0);
  }
  return out;
}

SparseNCPoly encode_bivariate(const SparseNCPoly& f) {
  if (f.alphabet() != Alphabet::Z) fail(Errc::Config, "encode_bivariate expects a z-polynomial");
  SparseNCPoly r(Alphabet::X, 2);
  for (const auto& [w, c] : f.terms()) r.add_term(encode_word(w), c);
  return r;
}

bool encoding_injective_check(const std::vector<Word>& words) {
  std::set<Word> encoded;
  for (const Word& w : words)
    if (!encoded.insert(encode_word(w)).second) return false;
  return true;
}

MaxDegreeSet max_degree_set(const SparseNCPoly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "max_degree_set of the zero polynomial");
  MaxDegreeSet out;
  out.degree = *f.degree();
  for (const auto& [w, c] : f.terms())
    if (w.degree() == out.degree) out.words.push_back(w);
  return out;
}

std::string to_text(const SparseNCPoly& f) {
  std::ostringstream out;
  out << "ncpoly v1 vars=" << f.nvars() << " alphabet="
      << (f.alphabet() == Alphabet::X ? 'x' : 'z') << '\n';
  for (const auto& [w, c] : f.terms()) {
    out << c.get_str();
    for (std::uint32_t s : w.symbols)
      out << ' ' << (f.alphabet() == Alphabet::X ? 'x' : 'z') << s;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string_view strip(std::string_view s) {
  std::size_t hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens_of(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint32_t parse_u32(std::string_view s, int line, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ": bad " + what);
  return v;
}

}  // namespace

SparseNCPoly parse_ncpoly(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  Alphabet alphabet = Alphabet::Z;
  std::uint32_t nvars = 0;
  std::vector<std::pair<mpz_class, Word>> raw_terms;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip(raw);
    if (line.empty()) continue;
    auto toks = tokens_of(line);
    if (!have_header) {
      if (toks.size() != 4 || toks[0] != "ncpoly" || toks[1] != "v1" ||
          !toks[2].starts_with("vars=") || !toks[3].starts_with("alphabet="))
        fail(Errc::SyntaxError,
             "line " + std::to_string(lineno) + ": expected header 'ncpoly v1 vars=<n> alphabet=<z|x>'");
      nvars = parse_u32(toks[2].substr(5), lineno, "vars");
      std::string_view a = toks[3].substr(9);
      if (a == "z") alphabet = Alphabet::Z;
      else if (a == "x") alphabet = Alphabet::X;
      else fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": alphabet must be z or x");
      have_header = true;
      continue;
    }
    mpz_class c;
    if (mpz_set_str(c.get_mpz_t(), std::string(toks[0]).c_str(), 10) != 0)
      fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": bad coefficient");
    Word w{alphabet, {}};
    for (std::size_t i = 1; i < toks.size(); ++i) {
      std::string_view t = toks[i];
      char want = alphabet == Alphabet::X ? 'x' : 'z';
      if (t.size() < 2 || t[0] != want)
        fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": bad symbol '" +
                                    std::string(t) + "' for alphabet " + want);
      std::uint32_t idx = parse_u32(t.substr(1), lineno, "symbol index");
      if (alphabet == Alphabet::X ? idx > 1 : (idx < 1 || idx > nvars))
        fail(Errc::SyntaxError,
             "line " + std::to_string(lineno) + ": symbol index out of range");
      w.symbols.push_back(idx);
    }
    raw_terms.emplace_back(std::move(c), std::move(w));
  }
  if (!have_header) fail(Errc::SyntaxError, "missing ncpoly header");
  return SparseNCPoly::normalize(alphabet, nvars, raw_terms);
}

}  // namespace ncpit
