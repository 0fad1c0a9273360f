#include "lgb/series.hpp"

#include <cassert>
#include <stdexcept>

#include "lgb/checked.hpp"

namespace lgb {

TruncatedSeries::TruncatedSeries(int cap) {
  if (cap < 0) throw std::invalid_argument("series: cap must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(cap) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series: needs coefficient 0");
}

TruncatedSeries TruncatedSeries::one(int cap) {
  TruncatedSeries s(cap);
  s.coeffs_[0] = 1;
  return s;
}

std::int64_t TruncatedSeries::coeff(int d) const {
  assert(d >= 0 && d <= cap());
  return coeffs_[static_cast<std::size_t>(d)];
}

void TruncatedSeries::add_at(int d, std::int64_t value) {
  assert(d >= 0 && d <= cap());
  auto& c = coeffs_[static_cast<std::size_t>(d)];
  c = checked::add(c, value);
}

void TruncatedSeries::add(const TruncatedSeries& other) {
  assert(cap() == other.cap());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
}

TruncatedSeries mul_one_minus_z_pow(TruncatedSeries s, int d) {
  if (d < 1) throw std::invalid_argument("mul_one_minus_z_pow: d must be >= 1");
  auto c = s.coeffs();
  for (int i = s.cap(); i >= d; --i)
    c[static_cast<std::size_t>(i)] =
        checked::sub(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - d)]);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries div_one_minus_z_pow(TruncatedSeries s, int d) {
  if (d < 1) throw std::invalid_argument("div_one_minus_z_pow: d must be >= 1");
  auto c = s.coeffs();
  for (int i = d; i <= s.cap(); ++i)
    c[static_cast<std::size_t>(i)] =
        checked::add(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - d)]);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries inv_one_minus_z_pow_n(int n, int cap) {
  if (n < 0) throw std::invalid_argument("inv_one_minus_z_pow_n: n must be >= 0");
  TruncatedSeries s = TruncatedSeries::one(cap);
  for (int k = 0; k < n; ++k) s = div_one_minus_z_pow(std::move(s), 1);
  return s;
}

int BracketSeries::degree() const {
  if (coeffs.empty())
    throw std::logic_error("bracket series: degree of the empty series");
  return static_cast<int>(coeffs.size()) - 1;
}

std::int64_t BracketSeries::coeff_or_zero(int d) const {
  assert(d >= 0);
  if (d < static_cast<int>(coeffs.size()))
    return coeffs[static_cast<std::size_t>(d)];
  // Beyond the stored prefix only a finite series is known to be zero.
  assert(finite);
  return 0;
}

BracketSeries bracket(const TruncatedSeries& s) {
  BracketSeries out;
  for (auto c : s.coeffs()) {
    if (c <= 0) {
      out.finite = true;
      return out;
    }
    out.coeffs.push_back(c);
  }
  out.finite = false;
  return out;
}

BracketSeries generic_hilbert_series(const InstanceSpec& spec, int cap) {
  spec.validate();
  if (cap < 1) throw std::invalid_argument("generic_hilbert_series: cap must be >= 1");
  TruncatedSeries s = inv_one_minus_z_pow_n(spec.n, cap);
  for (int d : spec.degrees) s = mul_one_minus_z_pow(std::move(s), d);
  return bracket(s);
}

}  // namespace lgb
