#include "lgb/monomial.hpp"

#include <charconv>
#include <stdexcept>

#include "lgb/checked.hpp"

namespace lgb {

VariableIndex smallest_variable(const Monomial& a) {
  const auto& e = a.exponents();
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] > 0) return VariableIndex{static_cast<int>(i) + 1};
  }
  throw std::domain_error("smallest_variable: the constant monomial has no variables");
}

std::int64_t monomial_count(int n, int d) {
  // C(n+d-1, d) via the product form, exact at every step.
  std::int64_t r = 1;
  for (int i = 1; i <= d; ++i) {
    r = checked::mul(r, n - 1 + i);
    r /= i;
  }
  return r;
}

std::vector<Monomial> enumerate_degree(int n, int d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(monomial_count(n, d)));
  for_each_in_degree(n, d, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string s;
  for (int i = 0; i < m.vars(); ++i) {
    auto e = m.exponents()[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    if (e >= 2) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() + pos)
    throw std::invalid_argument("monomial parse: expected a number in '" +
                                std::string(text) + "'");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("monomial parse: n must be >= 1");
  if (text == "1") return Monomial::one(n);
  std::vector<std::int32_t> exps(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x')
      throw std::invalid_argument("monomial parse: expected 'x' in '" +
                                  std::string(text) + "'");
    ++pos;
    int index = parse_int(text, pos);
    if (index < 1 || index > n)
      throw std::invalid_argument("monomial parse: variable index out of range in '" +
                                  std::string(text) + "'");
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_int(text, pos);
      if (exp < 1)
        throw std::invalid_argument("monomial parse: exponent must be >= 1");
    }
    exps[static_cast<std::size_t>(index - 1)] += exp;
    if (pos < text.size()) {
      if (text[pos] != '*')
        throw std::invalid_argument("monomial parse: expected '*' in '" +
                                    std::string(text) + "'");
      ++pos;
      if (pos == text.size())
        throw std::invalid_argument("monomial parse: trailing '*' in '" +
                                    std::string(text) + "'");
    }
  }
  if (pos == 0) throw std::invalid_argument("monomial parse: empty input");
  return Monomial(std::move(exps));
}

}  // namespace lgb
