#include "ncpit/autmat.hpp"

#include <charconv>

namespace ncpit {
namespace nfavars {

std::string name(VarId v) {
  if (v >= kY1Base) return "y1" + std::to_string(v - kY1Base);
  if (v >= kY0Base) return "y0" + std::to_string(v - kY0Base);
  return "xi" + std::to_string(v);
}

VarId resolve(std::string_view s) {
  auto tail_u32 = [&](std::string_view t) -> std::uint32_t {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || v == 0)
      fail(Errc::SyntaxError, "bad NFA variable name: " + std::string(s));
    return v;
  };
  if (s.starts_with("xi")) return xi(tail_u32(s.substr(2)));
  if (s.starts_with("y0")) return y(0, tail_u32(s.substr(2)));
  if (s.starts_with("y1")) return y(1, tail_u32(s.substr(2)));
  fail(Errc::SyntaxError, "bad NFA variable name: " + std::string(s));
}

const VarNames& names() {
  static const VarNames n{[](VarId v) { return name(v); },
                          [](std::string_view s) { return resolve(s); }};
  return n;
}

}  // namespace nfavars

Assignment<CommPoly> symbolic_assignment(std::uint32_t k) {
  Assignment<CommPoly> a;
  a.k = k;
  for (std::uint32_t j = 1; j <= k + 1; ++j) a.xi.push_back(CommPoly::variable(nfavars::xi(j)));
  for (std::uint32_t j = 1; j <= k; ++j) a.y0.push_back(CommPoly::variable(nfavars::y(0, j)));
  for (std::uint32_t j = 1; j <= k; ++j) a.y1.push_back(CommPoly::variable(nfavars::y(1, j)));
  return a;
}

}  // namespace ncpit
