#include "genustree/series.hpp"

#include <algorithm>

namespace genustree {

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::polynomial(std::span<const long> coeffs, int order) {
  TruncatedSeries s(order);
  const std::size_t n = std::min(coeffs.size(), s.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::initializer_list<long> coeffs, int order) {
  return polynomial(std::span<const long>(coeffs.begin(), coeffs.size()), order);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(order_, rhs.order_));
  for (int i = 0; i <= out.order_; ++i)
    out.coeffs_[static_cast<std::size_t>(i)] = coeff(i) + rhs.coeff(i);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(order_, rhs.order_));
  for (int i = 0; i <= out.order_; ++i)
    out.coeffs_[static_cast<std::size_t>(i)] = coeff(i) - rhs.coeff(i);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(order_, rhs.order_));
  Rational tmp;
  for (int i = 0; i <= out.order_; ++i) {
    const Rational& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= out.order_; ++j) {
      const Rational& b = rhs.coeffs_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      tmp = a * b;
      out.coeffs_[static_cast<std::size_t>(i + j)] += tmp;
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& rhs) const {
  if (rhs.coeff(0) == 0)
    throw DivisionByNonUnitError("series division requires a nonzero constant term");
  TruncatedSeries out(std::min(order_, rhs.order_));
  for (int n = 0; n <= out.order_; ++n) {
    Rational s = coeff(n);
    for (int k = 0; k < n; ++k) {
      const Rational& c = out.coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      s -= c * rhs.coeffs_[static_cast<std::size_t>(n - k)];
    }
    out.coeffs_[static_cast<std::size_t>(n)] = s / rhs.coeff(0);
  }
  return out;
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (coeff(0) != 1)
    throw BadConstantTermError("series sqrt requires constant term 1");
  TruncatedSeries out(order_);
  out.coeffs_[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    Rational s = coeff(n);
    for (int i = 1; i < n; ++i) {
      const Rational& c = out.coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      s -= c * out.coeffs_[static_cast<std::size_t>(n - i)];
    }
    out.coeffs_[static_cast<std::size_t>(n)] = s / 2;
  }
  return out;
}

TruncatedSeries TruncatedSeries::shift_up(int k) const {
  if (k < 0) throw std::invalid_argument("shift_up: k >= 0");
  TruncatedSeries out(order_);
  for (int i = 0; i + k <= order_; ++i)
    out.coeffs_[static_cast<std::size_t>(i + k)] = coeff(i);
  return out;
}

TruncatedSeries TruncatedSeries::shift_down(int k) const {
  if (k < 0 || k > order_) throw std::invalid_argument("shift_down: 0 <= k <= order");
  for (int i = 0; i < k; ++i) {
    if (coeff(i) != 0)
      throw std::invalid_argument("shift_down: low-order coefficients must vanish");
  }
  TruncatedSeries out(order_ - k);
  for (int i = 0; i <= out.order_; ++i) out.coeffs_[static_cast<std::size_t>(i)] = coeff(i + k);
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& factor) const {
  TruncatedSeries out(order_);
  for (int i = 0; i <= order_; ++i)
    out.coeffs_[static_cast<std::size_t>(i)] = coeff(i) * factor;
  return out;
}

BivariateSeries::BivariateSeries(int order) : order_(order) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BivariateSeries BivariateSeries::from_terms(std::span<const Term> terms, int order) {
  BivariateSeries s(order);
  for (const Term& term : terms) {
    if (term.t_power < 0 || term.w_power < 0)
      throw std::invalid_argument("bivariate term powers must be non-negative");
    if (term.t_power > order) continue;
    auto& poly = s.coeffs_[static_cast<std::size_t>(term.t_power)];
    if (static_cast<int>(poly.size()) <= term.w_power)
      poly.resize(static_cast<std::size_t>(term.w_power) + 1, Rational(0));
    poly[static_cast<std::size_t>(term.w_power)] += term.coefficient;
    s.trim(term.t_power);
  }
  return s;
}

BivariateSeries BivariateSeries::from_terms(std::initializer_list<Term> terms, int order) {
  return from_terms(std::span<const Term>(terms.begin(), terms.size()), order);
}

Rational BivariateSeries::coeff(int g, int w_power) const {
  const auto& poly = coeff_poly(g);
  if (w_power < 0 || static_cast<std::size_t>(w_power) >= poly.size()) return Rational(0);
  return poly[static_cast<std::size_t>(w_power)];
}

void BivariateSeries::trim(int g) {
  auto& poly = coeffs_[static_cast<std::size_t>(g)];
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  BivariateSeries out(std::min(order_, rhs.order_));
  for (int i = 0; i <= out.order_; ++i) {
    const auto& pa = coeffs_[static_cast<std::size_t>(i)];
    if (pa.empty()) continue;
    for (int j = 0; i + j <= out.order_; ++j) {
      const auto& pb = rhs.coeffs_[static_cast<std::size_t>(j)];
      if (pb.empty()) continue;
      auto& dst = out.coeffs_[static_cast<std::size_t>(i + j)];
      if (dst.size() < pa.size() + pb.size() - 1)
        dst.resize(pa.size() + pb.size() - 1, Rational(0));
      for (std::size_t wa = 0; wa < pa.size(); ++wa) {
        if (pa[wa] == 0) continue;
        for (std::size_t wb = 0; wb < pb.size(); ++wb) {
          if (pb[wb] == 0) continue;
          dst[wa + wb] += pa[wa] * pb[wb];
        }
      }
    }
  }
  for (int g = 0; g <= out.order_; ++g) out.trim(g);
  return out;
}

BivariateSeries BivariateSeries::operator/(const BivariateSeries& rhs) const {
  const auto& unit = rhs.coeff_poly(0);
  if (unit.size() != 1 || unit[0] != 1)
    throw DivisionByNonUnitError("bivariate division requires t-constant polynomial 1");
  BivariateSeries out(std::min(order_, rhs.order_));
  std::vector<Rational> acc;
  for (int n = 0; n <= out.order_; ++n) {
    acc.assign(coeffs_[static_cast<std::size_t>(n)].begin(),
               coeffs_[static_cast<std::size_t>(n)].end());
    for (int k = 0; k < n; ++k) {
      const auto& pc = out.coeffs_[static_cast<std::size_t>(k)];
      if (pc.empty()) continue;
      const auto& pd = rhs.coeffs_[static_cast<std::size_t>(n - k)];
      if (pd.empty()) continue;
      if (acc.size() < pc.size() + pd.size() - 1)
        acc.resize(pc.size() + pd.size() - 1, Rational(0));
      for (std::size_t wc = 0; wc < pc.size(); ++wc) {
        if (pc[wc] == 0) continue;
        for (std::size_t wd = 0; wd < pd.size(); ++wd) {
          if (pd[wd] == 0) continue;
          acc[wc + wd] -= pc[wc] * pd[wd];
        }
      }
    }
    out.coeffs_[static_cast<std::size_t>(n)] = acc;
    out.trim(n);
  }
  return out;
}

TruncatedSeries BivariateSeries::evaluate_w1() const {
  TruncatedSeries out(order_);
  for (int g = 0; g <= order_; ++g) {
    Rational s = 0;
    for (const Rational& c : coeff_poly(g)) s += c;
    out.mutable_coeff(g) = s;
  }
  return out;
}

bool BivariateSeries::operator==(const BivariateSeries& rhs) const {
  return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

namespace {

TruncatedSeries poly(std::initializer_list<long> coeffs, int order) {
  return TruncatedSeries::polynomial(coeffs, order);
}

// sqrt((1+2t)/(1-2t))
TruncatedSeries radical(int order) {
  return (poly({1, 2}, order) / poly({1, -2}, order)).sqrt();
}

TruncatedSeries sqrt_one_minus_4t2(int order) { return poly({1, 0, -4}, order).sqrt(); }

// Shared denominator of the healthy-tree closed forms.
TruncatedSeries upper_denominator(int order) {
  return poly({1, -3, 3, -3, 4, -3, 2}, order).scaled(2);
}

TruncatedSeries lower_simple(int order) {
  return poly({0, 1}, order) / (poly({1, -1, -1}, order) * poly({1, -1}, order));
}

TruncatedSeries lower_a(int order) {
  const TruncatedSeries num =
      poly({0, 1}, order) * poly({1, 0, -1, -2, -3, 1, 2, 3, 3, 1}, order);
  const TruncatedSeries den = poly({1, 1}, order) * poly({1, -1}, order) *
                              poly({1, -1, -1}, order) * poly({1, -1, 0, -1}, order) *
                              poly({1, 0, 0, -1, -2, -2, -1}, order);
  return num / den;
}

TruncatedSeries g111(int order) {
  const TruncatedSeries num =
      poly({0, 0, 0, 1}, order) * poly({1, 0, -1, 0, -5, -3, 2, 5, 6, 4, 1}, order);
  const TruncatedSeries den = poly({1, 1}, order) * poly({1, -1}, order) *
                              poly({1, -1}, order) * poly({1, -1, -1}, order) *
                              poly({1, -1, 0, -1}, order) *
                              poly({1, 0, 0, -1, -2, -2, -1}, order);
  return num / den;
}

// H(u,v,t) at u = v = 1, kept in its unsimplified closed form; tests check
// it collapses to t^2/(1-t)^2.
TruncatedSeries h11(int order) {
  const TruncatedSeries num = poly({0, 0, 1}, order) * poly({1, 0, -1, -1, 0, 1}, order);
  const TruncatedSeries den = poly({1, -1}, order) * poly({1, 0, 0, -1}, order) *
                              poly({1, -1}, order) * poly({1, 0, -1}, order);
  return num / den;
}

TruncatedSeries f_prop1(int order) {
  return poly({0, 0, 0, 1}, order) /
         (poly({1, -1, -1}, order) * poly({1, -1}, order) * poly({1, -1}, order));
}

TruncatedSeries f_bar(int order) { return poly({0, 1}, order) / poly({1, -1}, order); }

TruncatedSeries upper_c(int order) {
  const TruncatedSeries num =
      poly({0, 1}, order) * (poly({2, -3, 1, -4, 3, -2}, order) +
                             poly({0, 1}, order) * poly({1, -1, 0, -1}, order) * radical(order));
  return num / upper_denominator(order);
}

TruncatedSeries k1(int order) {
  const TruncatedSeries num =
      poly({1, -2, -1, 3, -1, 4, -8, 6, -4}, order) -
      poly({1, -2, 1, -1, 1}, order) * sqrt_one_minus_4t2(order);
  return num / upper_denominator(order);
}

TruncatedSeries k0(int order) {
  const TruncatedSeries num = poly({-1, 1, 3, -2, 0, -5, 4, -4}, order) +
                              poly({1, -3, 3, -2, 2, -1}, order) * radical(order);
  return num / upper_denominator(order);
}

TruncatedSeries infinite_d(int order) {
  return poly({0, 1, 1, 0, -1, -1}, order) / poly({1, -1, -1}, order);
}

BivariateSeries lower_a_mult(int order) {
  using Term = BivariateSeries::Term;
  // w^2 t [1 - w t^2 (1+t+t^2-t^3) - w^2 t^3 (1+t)(1+t+t^3)
  //        + w^3 t^5 (1+t)^2 (1+t+t^2)]
  const BivariateSeries num = BivariateSeries::from_terms(
      {Term{1, 2, 1},
       Term{3, 3, -1}, Term{4, 3, -1}, Term{5, 3, -1}, Term{6, 3, 1},
       Term{4, 4, -1}, Term{5, 4, -2}, Term{6, 4, -1}, Term{7, 4, -1}, Term{8, 4, -1},
       Term{6, 5, 1}, Term{7, 5, 3}, Term{8, 5, 4}, Term{9, 5, 3}, Term{10, 5, 1}},
      order);
  // (1-t) [1 - w t (1+t)] [1 - w t^2 (1+t+t^2)] [1 - w^2 t^3 (1+t)(1+t+t^2)]
  const BivariateSeries den =
      BivariateSeries::from_terms({Term{0, 0, 1}, Term{1, 0, -1}}, order) *
      BivariateSeries::from_terms({Term{0, 0, 1}, Term{1, 1, -1}, Term{2, 1, -1}}, order) *
      BivariateSeries::from_terms(
          {Term{0, 0, 1}, Term{2, 1, -1}, Term{3, 1, -1}, Term{4, 1, -1}}, order) *
      BivariateSeries::from_terms(
          {Term{0, 0, 1}, Term{3, 2, -1}, Term{4, 2, -2}, Term{5, 2, -2}, Term{6, 2, -1}},
          order);
  return num / den;
}

// v*(t) = (1 - sqrt(1 - 4 t^2)) / (2 t^2), the kernel substitution; the
// numerator is divisible by 2 t^2, so this is a genuine power series.
TruncatedSeries v_star(int order) {
  const TruncatedSeries s = sqrt_one_minus_4t2(order + 2);
  const TruncatedSeries num = poly({1}, order + 2) - s;
  return num.shift_down(2).scaled(Rational(1, 2));
}

}  // namespace

NamedSeries named_series(SeriesName name, int order) {
  if (order < 1) throw std::invalid_argument("named_series: order >= 1");
  switch (name) {
    case SeriesName::kLowerSimple: return lower_simple(order);
    case SeriesName::kLowerA: return lower_a(order);
    case SeriesName::kLowerAMult: return lower_a_mult(order);
    case SeriesName::kUpperC: return upper_c(order);
    case SeriesName::kInfiniteD: return infinite_d(order);
    case SeriesName::kK0: return k0(order);
    case SeriesName::kK1: return k1(order);
    case SeriesName::kG111: return g111(order);
    case SeriesName::kFProp1: return f_prop1(order);
    case SeriesName::kH11: return h11(order);
    case SeriesName::kFBar: return f_bar(order);
  }
  throw std::invalid_argument("named_series: unknown name");
}

TruncatedSeries named_univariate(SeriesName name, int order) {
  NamedSeries s = named_series(name, order);
  if (auto* uni = std::get_if<TruncatedSeries>(&s)) return std::move(*uni);
  throw std::invalid_argument("named_univariate: series is bivariate");
}

BivariateSeries multiplicity_series(int order) { return lower_a_mult(order); }

IdentityReport identity_suite(int order) {
  if (order < 16) throw std::invalid_argument("identity_suite: order >= 16");
  IdentityReport report;
  auto record = [&](std::string name, bool pass) {
    report.checks.push_back(IdentityCheck{std::move(name), order, pass});
    report.all_pass = report.all_pass && pass;
  };

  const TruncatedSeries a = lower_a(order);
  record("lower_a_assembly", f_bar(order) + h11(order) + g111(order) == a);

  const TruncatedSeries one_minus_t = poly({1, -1}, order);
  record("upper_c_assembly",
         k0(order) + k1(order) / one_minus_t + poly({0, 1}, order) / one_minus_t ==
             upper_c(order));

  const TruncatedSeries v = v_star(order);
  const TruncatedSeries kernel = (v - poly({1}, order)) - (v * v).shift_up(2);
  record("kernel_vanishing", kernel == TruncatedSeries(order));

  record("multiplicity_reduction", lower_a_mult(order).evaluate_w1() == a);

  // FBar + tilde chain + plain nodes assemble the simple lower bound; the
  // tilde chain series is t^2/(1-t)^2.
  const TruncatedSeries tilde_chain =
      poly({0, 0, 1}, order) / (one_minus_t * one_minus_t);
  record("lower_simple_assembly",
         f_bar(order) + tilde_chain + f_prop1(order) == lower_simple(order));
  return report;
}

}  // namespace genustree
