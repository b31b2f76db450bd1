#include "ncpit/commpoly.hpp"

#include <charconv>
#include <sstream>

namespace ncpit {

CommMonomial CommMonomial::var(VarId v, std::uint64_t exp) {
  CommMonomial m;
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

CommMonomial CommMonomial::times(const CommMonomial& other) const {
  CommMonomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, other.factors_.end());
  return r;
}

std::uint64_t CommMonomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint64_t CommMonomial::exponent_of(VarId v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

const VarNames& default_var_names() {
  static const VarNames names{
      [](VarId v) { return "v" + std::to_string(v); },
      [](std::string_view s) -> VarId {
        if (s.size() < 2 || s[0] != 'v')
          fail(Errc::SyntaxError, "bad variable name: " + std::string(s));
        VarId id = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), id);
        if (ec != std::errc{} || ptr != s.data() + s.size())
          fail(Errc::SyntaxError, "bad variable name: " + std::string(s));
        return id;
      }};
  return names;
}

CommPoly CommPoly::constant(mpz_class c) {
  CommPoly p;
  if (c != 0) p.terms_.emplace(CommMonomial::unit(), std::move(c));
  return p;
}

CommPoly CommPoly::variable(VarId v) { return monomial(CommMonomial::var(v), 1); }

CommPoly CommPoly::monomial(CommMonomial m, mpz_class c) {
  CommPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

void CommPoly::add_term(const CommMonomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CommPoly CommPoly::operator-() const {
  CommPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
  CommPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

std::uint64_t CommPoly::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

mpz_class CommPoly::coeff(const CommMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::string CommPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    if (!m.is_unit()) {
      out << " *";
      for (const auto& [v, e] : m.factors()) {
        out << ' ' << names.name(v);
        if (e > 1) out << '^' << e;
      }
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) parts.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return parts;
}

}  // namespace

CommPoly CommPoly::parse(std::string_view text, const VarNames& names) {
  CommPoly result;
  // Terms are separated by " + "; each term is "<coeff>" or
  // "<coeff> * factor...".
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    std::string_view term = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 3;

    auto tokens = split_ws(term);
    if (tokens.empty()) fail(Errc::SyntaxError, "empty term in polynomial text");
    mpz_class c;
    if (mpz_set_str(c.get_mpz_t(), tokens[0].c_str(), 10) != 0)
      fail(Errc::SyntaxError, "bad coefficient: " + tokens[0]);
    CommMonomial m;
    std::size_t i = 1;
    if (i < tokens.size()) {
      if (tokens[i] != "*") fail(Errc::SyntaxError, "expected '*' after coefficient");
      ++i;
      if (i == tokens.size()) fail(Errc::SyntaxError, "expected factors after '*'");
    }
    for (; i < tokens.size(); ++i) {
      std::string_view tok = tokens[i];
      std::uint64_t exp = 1;
      std::size_t caret = tok.find('^');
      if (caret != std::string_view::npos) {
        std::string_view es = tok.substr(caret + 1);
        auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), exp);
        if (ec != std::errc{} || ptr != es.data() + es.size() || exp == 0)
          fail(Errc::SyntaxError, "bad exponent in: " + std::string(tok));
        tok = tok.substr(0, caret);
      }
      m = m.times(CommMonomial::var(names.resolve(tok), exp));
    }
    result.add_term(m, c);
  }
  return result;
}

}  // namespace ncpit
