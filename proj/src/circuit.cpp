#include "ncpit/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "ncpit/rng.hpp"

namespace ncpit {

std::uint32_t ceil_log2_u64(std::uint64_t v) {
  if (v == 0) fail(Errc::Config, "ceil_log2 of zero");
  if (v == 1) return 0;
  return 64 - static_cast<std::uint32_t>(__builtin_clzll(v - 1));
}

Circuit::Circuit(std::uint32_t nvars, std::vector<Gate> gates, std::uint32_t output,
                 std::vector<std::uint64_t> gate_ids)
    : nvars_(nvars), gates_(std::move(gates)), output_(output), gate_ids_(std::move(gate_ids)) {
  if (gates_.empty()) fail(Errc::Config, "circuit has no gates");
  if (gate_ids_.empty()) {
    gate_ids_.resize(gates_.size());
    for (std::size_t i = 0; i < gate_ids_.size(); ++i) gate_ids_[i] = i;
  } else if (gate_ids_.size() != gates_.size()) {
    fail(Errc::Config, "gate id table size mismatch");
  }
  if (output_ >= gates_.size()) fail(Errc::BadReference, "output gate index out of range");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.kind) {
      case Gate::Kind::Var:
        if (g.var < 1 || g.var > nvars_)
          fail(Errc::BadReference, "gate " + std::to_string(i) + ": variable index out of range");
        break;
      case Gate::Kind::Const:
        break;
      case Gate::Kind::Add:
      case Gate::Kind::Mul:
        if (g.lhs >= gates_.size() || g.rhs >= gates_.size())
          fail(Errc::BadReference, "gate " + std::to_string(i) + ": operand out of range");
        if (g.lhs >= i || g.rhs >= i)
          fail(Errc::CycleError,
               "gate " + std::to_string(i) + ": operand does not precede the gate");
        break;
    }
  }
}

namespace {

std::string_view strip_line(std::string_view s) {
  std::size_t hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
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

[[noreturn]] void syntax_error(int line, const std::string& what) {
  fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_prefixed_u64(std::string_view tok, char prefix, int line, const char* what) {
  if (tok.size() < 2 || tok[0] != prefix) syntax_error(line, std::string("expected ") + what);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    syntax_error(line, std::string("bad ") + what);
  return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  std::uint32_t nvars = 0;
  std::map<std::uint64_t, std::uint32_t> id_to_index;
  std::vector<Gate> gates;
  std::int64_t output = -1;

  auto lookup = [&](std::string_view tok, int line) -> std::uint32_t {
    std::uint64_t id = parse_prefixed_u64(tok, 'g', line, "gate reference g<k>");
    auto it = id_to_index.find(id);
    if (it == id_to_index.end())
      fail(Errc::BadReference,
           "line " + std::to_string(line) + ": reference to undeclared gate g" + std::to_string(id));
    return it->second;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip_line(raw);
    if (line.empty()) continue;
    auto toks = split_tokens(line);

    if (!have_header) {
      if (toks.size() != 3 || toks[0] != "ncircuit" || toks[1] != "v1" ||
          !toks[2].starts_with("vars="))
        syntax_error(lineno, "expected header 'ncircuit v1 vars=<n>'");
      std::string_view v = toks[2].substr(5);
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), nvars);
      if (ec != std::errc{} || ptr != v.data() + v.size())
        syntax_error(lineno, "bad vars count");
      have_header = true;
      continue;
    }

    if (toks[0] == "output") {
      if (toks.size() != 2) syntax_error(lineno, "expected 'output g<k>'");
      if (output >= 0) syntax_error(lineno, "duplicate output line");
      output = lookup(toks[1], lineno);
      continue;
    }

    if (toks.size() < 4 || toks[1] != "=") syntax_error(lineno, "expected 'g<k> = <op> ...'");
    std::uint64_t id = parse_prefixed_u64(toks[0], 'g', lineno, "gate id g<k>");
    if (id_to_index.count(id)) syntax_error(lineno, "duplicate gate g" + std::to_string(id));

    Gate g;
    if (toks[2] == "var") {
      if (toks.size() != 4) syntax_error(lineno, "expected 'g<k> = var z<i>'");
      std::uint64_t zi = parse_prefixed_u64(toks[3], 'z', lineno, "variable z<i>");
      if (zi < 1 || zi > nvars)
        fail(Errc::BadReference, "line " + std::to_string(lineno) + ": variable index out of range");
      g.kind = Gate::Kind::Var;
      g.var = static_cast<std::uint32_t>(zi);
    } else if (toks[2] == "const") {
      if (toks.size() != 4) syntax_error(lineno, "expected 'g<k> = const <integer>'");
      g.kind = Gate::Kind::Const;
      if (mpz_set_str(g.constant.get_mpz_t(), std::string(toks[3]).c_str(), 10) != 0)
        syntax_error(lineno, "bad integer constant");
    } else if (toks[2] == "add" || toks[2] == "mul") {
      if (toks.size() != 5)
        syntax_error(lineno, "expected 'g<k> = " + std::string(toks[2]) + " g<a> g<b>'");
      g.kind = toks[2] == "add" ? Gate::Kind::Add : Gate::Kind::Mul;
      g.lhs = lookup(toks[3], lineno);
      g.rhs = lookup(toks[4], lineno);
    } else {
      syntax_error(lineno, "unknown gate op '" + std::string(toks[2]) + "'");
    }
    id_to_index.emplace(id, static_cast<std::uint32_t>(gates.size()));
    gates.push_back(std::move(g));
  }

  if (!have_header) fail(Errc::SyntaxError, "missing ncircuit header");
  if (output < 0) fail(Errc::SyntaxError, "missing output line");
  std::vector<std::uint64_t> ids(gates.size());
  for (const auto& [id, index] : id_to_index) ids[index] = id;
  return Circuit(nvars, std::move(gates), static_cast<std::uint32_t>(output), std::move(ids));
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "ncircuit v1 vars=" << c.nvars() << '\n';
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    out << 'g' << c.gate_id(i) << " = ";
    switch (g.kind) {
      case Gate::Kind::Var: out << "var z" << g.var; break;
      case Gate::Kind::Const: out << "const " << g.constant.get_str(); break;
      case Gate::Kind::Add: out << "add g" << c.gate_id(g.lhs) << " g" << c.gate_id(g.rhs); break;
      case Gate::Kind::Mul: out << "mul g" << c.gate_id(g.lhs) << " g" << c.gate_id(g.rhs); break;
    }
    out << '\n';
  }
  out << "output g" << c.gate_id(c.output()) << '\n';
  return out.str();
}

Bound syntactic_degree_bound(const Circuit& c) {
  std::vector<Bound> deg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.kind) {
      case Gate::Kind::Var: deg[i] = Bound::exact(1); break;
      case Gate::Kind::Const: deg[i] = Bound::exact(0); break;
      case Gate::Kind::Add: deg[i] = sat_max(deg[g.lhs], deg[g.rhs]); break;
      case Gate::Kind::Mul: deg[i] = sat_add(deg[g.lhs], deg[g.rhs]); break;
    }
  }
  return deg[c.output()];
}

Bound sparsity_log2_bound(const Circuit& c) {
  std::vector<Bound> lg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.kind) {
      case Gate::Kind::Var:
      case Gate::Kind::Const: lg[i] = Bound::exact(0); break;
      case Gate::Kind::Add: lg[i] = sat_log2_add(lg[g.lhs], lg[g.rhs]); break;
      case Gate::Kind::Mul: lg[i] = sat_add(lg[g.lhs], lg[g.rhs]); break;
    }
  }
  return lg[c.output()];
}

SparseNCPoly expand_to_sparse(const Circuit& c, std::size_t term_cap) {
  std::vector<SparseNCPoly> values;
  values.reserve(c.size());
  auto guard = [&](std::size_t i, std::size_t projected) {
    if (projected > term_cap)
      fail(Errc::CapExceeded, "expansion at gate " + std::to_string(i) + " would exceed " +
                                  std::to_string(term_cap) + " terms");
  };
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.kind) {
      case Gate::Kind::Var: {
        SparseNCPoly p(Alphabet::Z, c.nvars());
        p.add_term(Word{Alphabet::Z, {g.var}}, 1);
        values.push_back(std::move(p));
        break;
      }
      case Gate::Kind::Const: {
        SparseNCPoly p(Alphabet::Z, c.nvars());
        p.add_term(Word{Alphabet::Z, {}}, g.constant);
        values.push_back(std::move(p));
        break;
      }
      case Gate::Kind::Add:
        guard(i, values[g.lhs].sparsity() + values[g.rhs].sparsity());
        values.push_back(values[g.lhs] + values[g.rhs]);
        break;
      case Gate::Kind::Mul:
        guard(i, values[g.lhs].sparsity() * values[g.rhs].sparsity());
        values.push_back(values[g.lhs] * values[g.rhs]);
        break;
    }
  }
  return values[c.output()];
}

namespace {

// Words of length <= degree over n letters, saturating.
Bound count_words_up_to(std::uint32_t nvars, std::uint32_t degree) {
  Bound total = Bound::exact(0);
  Bound level = Bound::exact(1);
  for (std::uint32_t l = 0;; ++l) {
    total = sat_add(total, level);
    if (l == degree || total.is_huge()) break;
    level = sat_mul(level, Bound::exact(nvars));
  }
  return total;
}

void enumerate_words(std::uint32_t nvars, std::uint32_t degree, Word& scratch,
                     std::vector<Word>& out) {
  out.push_back(scratch);
  if (scratch.symbols.size() == degree) return;
  for (std::uint32_t s = 1; s <= nvars; ++s) {
    scratch.symbols.push_back(s);
    enumerate_words(nvars, degree, scratch, out);
    scratch.symbols.pop_back();
  }
}

Word random_word(Rng& rng, std::uint32_t nvars, std::uint32_t min_len, std::uint32_t max_len) {
  Word w{Alphabet::Z, {}};
  std::uint32_t len =
      min_len + static_cast<std::uint32_t>(rng.below_u64(std::uint64_t(max_len) - min_len + 1));
  w.symbols.reserve(len);
  for (std::uint32_t i = 0; i < len; ++i)
    w.symbols.push_back(1 + static_cast<std::uint32_t>(rng.below_u64(nvars)));
  return w;
}

// Distinct words, deterministic in the rng. Small word spaces are
// enumerated and shuffled so the draw cannot stall near exhaustion.
std::vector<Word> draw_distinct_words(Rng& rng, std::uint32_t nvars, std::uint32_t min_len,
                                      std::uint32_t degree, std::uint32_t count) {
  Bound avail = count_words_up_to(nvars, degree);
  if (!avail.is_huge() && avail.value() <= 1u << 16) {
    std::vector<Word> all;
    Word scratch{Alphabet::Z, {}};
    enumerate_words(nvars, degree, scratch, all);
    if (min_len > 0)
      std::erase_if(all, [&](const Word& w) { return w.symbols.size() < min_len; });
    if (count > all.size())
      fail(Errc::Config, "requested " + std::to_string(count) + " distinct words but only " +
                             std::to_string(all.size()) + " exist");
    std::sort(all.begin(), all.end());
    for (std::size_t i = all.size(); i > 1; --i)
      std::swap(all[i - 1], all[rng.below_u64(i)]);
    all.resize(count);
    return all;
  }
  std::set<Word> words;
  while (words.size() < count) words.insert(random_word(rng, nvars, min_len, degree));
  return {words.begin(), words.end()};
}

struct SumOfProductsBuilder {
  std::vector<Gate> gates;
  std::vector<std::uint32_t> var_gate;  // z-index (1-based) -> gate index

  explicit SumOfProductsBuilder(std::uint32_t nvars) {
    var_gate.resize(nvars + 1);
    for (std::uint32_t i = 1; i <= nvars; ++i) {
      Gate g;
      g.kind = Gate::Kind::Var;
      g.var = i;
      var_gate[i] = push(std::move(g));
    }
  }

  std::uint32_t push(Gate g) {
    gates.push_back(std::move(g));
    return static_cast<std::uint32_t>(gates.size() - 1);
  }

  std::uint32_t constant(const mpz_class& c) {
    Gate g;
    g.kind = Gate::Kind::Const;
    g.constant = c;
    return push(std::move(g));
  }

  std::uint32_t binary(Gate::Kind kind, std::uint32_t a, std::uint32_t b) {
    Gate g;
    g.kind = kind;
    g.lhs = a;
    g.rhs = b;
    return push(std::move(g));
  }

  // coeff * s1 * s2 * ... as a left-associated chain.
  std::uint32_t term(const mpz_class& coeff, const Word& w) {
    if (w.symbols.empty()) return constant(coeff);
    std::uint32_t acc = var_gate[w.symbols[0]];
    for (std::size_t i = 1; i < w.symbols.size(); ++i)
      acc = binary(Gate::Kind::Mul, acc, var_gate[w.symbols[i]]);
    return binary(Gate::Kind::Mul, constant(coeff), acc);
  }

  std::uint32_t sum_left_assoc(const std::vector<std::uint32_t>& parts) {
    std::uint32_t acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = binary(Gate::Kind::Add, acc, parts[i]);
    return acc;
  }

  std::uint32_t sum_balanced(std::vector<std::uint32_t> parts) {
    while (parts.size() > 1) {
      std::vector<std::uint32_t> next;
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
        next.push_back(binary(Gate::Kind::Add, parts[i], parts[i + 1]));
      if (parts.size() % 2 == 1) next.push_back(parts.back());
      parts = std::move(next);
    }
    return parts[0];
  }
};

}  // namespace

std::pair<Circuit, SparseNCPoly> gen_random_instance(std::uint32_t nvars, std::uint32_t degree,
                                                     std::uint32_t terms, std::uint64_t seed,
                                                     const PrimeField& field) {
  if (nvars < 1) fail(Errc::Config, "gen_random_instance: nvars must be >= 1");
  if (terms < 1) fail(Errc::Config, "gen_random_instance: terms must be >= 1");
  Rng rng(seed);
  std::vector<Word> words = draw_distinct_words(rng, nvars, 0, degree, terms);

  SparseNCPoly poly(Alphabet::Z, nvars);
  std::vector<std::pair<Word, mpz_class>> ordered;
  for (const Word& w : words) {
    mpz_class c = field.sample(rng, /*nonzero=*/true);
    poly.add_term(w, c);
    ordered.emplace_back(w, std::move(c));
  }

  SumOfProductsBuilder b(nvars);
  std::vector<std::uint32_t> parts;
  for (const auto& [w, c] : ordered) parts.push_back(b.term(c, w));
  std::uint32_t out = b.sum_left_assoc(parts);
  return {Circuit(nvars, std::move(b.gates), out), std::move(poly)};
}

Circuit gen_zero_circuit(std::uint32_t nvars, std::uint32_t size_hint, std::uint64_t seed) {
  if (nvars < 1) fail(Errc::Config, "gen_zero_circuit: nvars must be >= 1");
  Rng rng(seed);
  std::uint32_t terms = 2 + static_cast<std::uint32_t>(rng.below_u64(3));   // 2..4
  std::uint32_t degree = 1 + static_cast<std::uint32_t>(rng.below_u64(3));  // 1..3
  // Two bodies plus the combiner must fit the hint; shrink until they do.
  auto estimated = [&] {
    return nvars + 2 * (terms * (degree + 2) - 1) + 3;
  };
  while (estimated() > size_hint && (terms > 2 || degree > 1)) {
    if (degree > 1) --degree;
    else --terms;
  }
  // Small alphabets may not offer enough distinct words of length >= 1.
  auto nonempty_words = [&] {
    Bound avail = count_words_up_to(nvars, degree);
    return avail.is_huge() ? Bound::kMax : avail.value() - 1;
  };
  while (nonempty_words() < terms) {
    if (terms > 1) --terms;
    else ++degree;
  }

  std::vector<Word> words = draw_distinct_words(rng, nvars, 1, degree, terms);
  std::vector<std::pair<Word, mpz_class>> term_list;
  for (const Word& w : words) term_list.emplace_back(w, mpz_class(1 + rng.below_u64(9)));

  SumOfProductsBuilder b(nvars);
  std::vector<std::uint32_t> parts_a;
  for (const auto& [w, c] : term_list) parts_a.push_back(b.term(c, w));
  std::uint32_t body_a = b.sum_left_assoc(parts_a);

  // Same terms, shuffled order, balanced re-association.
  std::vector<std::size_t> perm(term_list.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below_u64(i)]);
  std::vector<std::uint32_t> parts_b;
  for (std::size_t i : perm) parts_b.push_back(b.term(term_list[i].second, term_list[i].first));
  std::uint32_t body_b = b.sum_balanced(parts_b);

  std::uint32_t neg = b.binary(Gate::Kind::Mul, b.constant(-1), body_b);
  std::uint32_t out = b.binary(Gate::Kind::Add, body_a, neg);
  Circuit c(nvars, std::move(b.gates), out);

  if (!expand_to_sparse(c).is_zero())
    fail(Errc::Config, "gen_zero_circuit: construction did not cancel");
  return c;
}

}  // namespace ncpit
