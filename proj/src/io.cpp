#include "lgb/io.hpp"

#include <charconv>
#include <stdexcept>

namespace lgb::io {

json to_json(const BracketSeries& s) {
  return json{{"coeffs", s.coeffs}, {"finite", s.finite}};
}

BracketSeries bracket_series_from_json(const json& j) {
  BracketSeries s;
  s.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  s.finite = j.at("finite").get<bool>();
  return s;
}

json to_json(const MonomialIdeal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  return json{{"n", ideal.vars()}, {"generators", gens}};
}

MonomialIdeal monomial_ideal_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(parse_monomial(s.get<std::string>(), n));
  return MonomialIdeal::from_generators(n, std::move(gens));
}

json to_json(const InstanceSpec& spec) {
  return json{{"n", spec.n}, {"m", spec.m}, {"degrees", spec.degrees}};
}

InstanceSpec instance_from_json(const json& j) {
  InstanceSpec spec;
  spec.n = j.at("n").get<int>();
  spec.m = j.at("m").get<int>();
  spec.degrees = j.at("degrees").get<std::vector<int>>();
  spec.validate();
  return spec;
}

json to_json(const DegreeTrace& t) {
  return json{{"d", t.d},
              {"candidates_checked", t.candidates_checked},
              {"b_d_size", t.b_d_size},
              {"n_d", t.n_d},
              {"relevant_generators", t.relevant_generators}};
}

DegreeTrace degree_trace_from_json(const json& j) {
  DegreeTrace t;
  t.d = j.at("d").get<int>();
  t.candidates_checked = j.at("candidates_checked").get<std::int64_t>();
  t.b_d_size = j.at("b_d_size").get<std::int64_t>();
  t.n_d = j.at("n_d").get<std::int64_t>();
  t.relevant_generators = j.at("relevant_generators").get<std::int64_t>();
  return t;
}

json to_json(const LgbResult& r) {
  json groups = json::array();
  const auto& buckets = r.leading_monomials.degree_buckets();
  for (std::size_t d = 0; d < buckets.size(); ++d) {
    if (buckets[d].empty()) continue;
    std::vector<std::string> monos;
    for (const auto& g : buckets[d]) monos.push_back(to_string(g));
    groups.push_back(json{{"d", d}, {"monomials", monos}});
  }
  json traces = json::array();
  for (const auto& t : r.traces) traces.push_back(to_json(t));
  return json{{"spec", to_json(r.spec)},
              {"D", r.degree_bound},
              {"L_G", groups},
              {"traces", traces}};
}

LgbResult lgb_result_from_json(const json& j) {
  LgbResult r{instance_from_json(j.at("spec")), j.at("D").get<int>(),
              MonomialIdeal(1), {}};
  std::vector<Monomial> gens;
  for (const auto& group : j.at("L_G"))
    for (const auto& s : group.at("monomials"))
      gens.push_back(parse_monomial(s.get<std::string>(), r.spec.n));
  r.leading_monomials = MonomialIdeal::from_generators(r.spec.n, std::move(gens));
  for (const auto& t : j.at("traces")) r.traces.push_back(degree_trace_from_json(t));
  return r;
}

std::string traces_to_csv(const std::vector<DegreeTrace>& traces) {
  std::string out = "d,candidates_checked,b_d_size,n_d,relevant_generators\n";
  for (const auto& t : traces) {
    out += std::to_string(t.d) + ',' + std::to_string(t.candidates_checked) + ',' +
           std::to_string(t.b_d_size) + ',' + std::to_string(t.n_d) + ',' +
           std::to_string(t.relevant_generators) + '\n';
  }
  return out;
}

std::string series_to_text(const BracketSeries& s) {
  if (s.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < s.coeffs.size(); ++d) {
    if (!out.empty()) out += " + ";
    const auto c = s.coeffs[d];
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'z';
    if (d >= 2) out += "^" + std::to_string(d);
  }
  if (!s.finite) out += " + ...";
  return out;
}

std::vector<int> parse_degree_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto read_int = [&]() -> int {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos)
      throw std::invalid_argument("degree list: expected a number in '" +
                                  std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  while (true) {
    const int value = read_int();
    int count = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      count = read_int();
      if (count < 1)
        throw std::invalid_argument("degree list: repeat count must be >= 1");
    }
    for (int i = 0; i < count; ++i) out.push_back(value);
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw std::invalid_argument("degree list: expected ',' in '" +
                                  std::string(text) + "'");
    ++pos;
  }
  return out;
}

}  // namespace lgb::io
