#include "infoq/channels.hpp"

#include <cmath>

#include "infoq/error.hpp"

namespace infoq {

namespace {

constexpr double kFormAgreement = 1e-15;

double matrix_mutual_information(const BinaryChannel& c) { return mutual_information(channel_joint(c)).value(); }

InfoValue info_of(double p) { return p == 0.0 ? InfoValue::infinite() : InfoValue::bits(-std::log2(p)); }

}  // namespace

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::rp:
      return "rp";
    case ChannelKind::bpp:
      return "bpp";
    case ChannelKind::pp:
      return "pp";
  }
  return "?";
}

ChannelKind parse_channel_kind(const std::string& name) {
  if (name == "rp") {
    return ChannelKind::rp;
  }
  if (name == "bpp") {
    return ChannelKind::bpp;
  }
  if (name == "pp") {
    return ChannelKind::pp;
  }
  throw DomainError("unknown channel kind '" + name + "' (expected rp, bpp or pp)");
}

void BinaryChannel::validate() const {
  if (!(p1 >= 0.0) || p1 > 1.0) {
    throw DomainError("p1 must lie in [0, 1]");
  }
  if (!(eps >= 0.0)) {
    throw DomainError("eps must be nonnegative");
  }
  if (kind == ChannelKind::pp ? !(eps < 0.5) : eps > 0.5) {
    throw DomainError(kind == ChannelKind::pp ? "pp channel needs eps < 1/2" : "eps must be at most 1/2");
  }
}

std::array<double, 4> BinaryChannel::conditional() const {
  switch (kind) {
    case ChannelKind::rp:
      return {1.0, 0.0, eps, 1.0 - eps};
    case ChannelKind::bpp:
      return {1.0 - eps, eps, eps, 1.0 - eps};
    case ChannelKind::pp:
      break;
  }
  return {0.5 + eps, 0.5 - eps, 0.5 - eps, 0.5 + eps};
}

BinaryChannel make_channel(ChannelKind kind, double p1, double eps) {
  BinaryChannel c{kind, p1, eps};
  c.validate();
  return c;
}

JointModel channel_joint(const BinaryChannel& c) {
  c.validate();
  const std::array<double, 2> marginal = {1.0 - c.p1, c.p1};
  const std::array<double, 4> cond = c.conditional();
  JointModel j = JointModel::from_conditional(marginal, cond, 2);
  return JointModel(2, 2, std::vector<double>(j.probs().begin(), j.probs().end()),
                    {std::int64_t{0}, std::int64_t{1}}, {std::int64_t{0}, std::int64_t{1}});
}

double neg_xlog2x(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

InfoValue rp_conditional_entropy(const BinaryChannel& c) {
  c.validate();
  if (c.kind != ChannelKind::rp) {
    throw DomainError("rp_conditional_entropy needs an rp channel");
  }
  return InfoValue::bits(c.p1 * (neg_xlog2x(c.eps) + neg_xlog2x(1.0 - c.eps)));
}

double output_entropy_closed_form(const BinaryChannel& c) {
  c.validate();
  const double p0 = 1.0 - c.p1;
  const double p1 = c.p1;
  const double e = c.eps;
  switch (c.kind) {
    case ChannelKind::rp:
      return neg_xlog2x(p0 + p1 * e) + neg_xlog2x(p1 * (1.0 - e));
    case ChannelKind::bpp:
      return neg_xlog2x(p0 * (1.0 - e) + p1 * e) + neg_xlog2x(p0 * e + p1 * (1.0 - e));
    case ChannelKind::pp:
      break;
  }
  return neg_xlog2x(0.5 + e * (p0 - p1)) + neg_xlog2x(0.5 + e * (p1 - p0));
}

double conditional_entropy_closed_form(const BinaryChannel& c) {
  c.validate();
  const double e = c.eps;
  switch (c.kind) {
    case ChannelKind::rp:
      return rp_conditional_entropy(c).value();
    case ChannelKind::bpp:
      return neg_xlog2x(1.0 - e) + neg_xlog2x(e);
    case ChannelKind::pp:
      break;
  }
  return neg_xlog2x(0.5 - e) + neg_xlog2x(0.5 + e);
}

BppAnalysis bpp_analysis(const BinaryChannel& c) {
  c.validate();
  if (c.kind != ChannelKind::bpp) {
    throw DomainError("bpp_analysis needs a bpp channel");
  }
  BppAnalysis a;
  a.input_entropy = binary_entropy(c.p1);
  a.output_entropy = output_entropy_closed_form(c);
  a.conditional_entropy = conditional_entropy_closed_form(c);
  const InfoValue mi = InfoValue::bits(a.output_entropy - a.conditional_entropy);
  a.mutual_information = mi.value();

  const InfoValue h_in = InfoValue::bits(a.input_entropy);
  const InfoValue h_out = InfoValue::bits(a.output_entropy);
  const InfoValue event_in = info_of(c.p1);
  const InfoValue event_out = info_of((1.0 - c.p1) * c.eps + c.p1 * (1.0 - c.eps));
  a.expected_queries = divide(h_in, mi);
  a.avg_queries = divide(event_in, mi);
  a.event_ratio = divide(event_in, event_out);
  a.output_ratio = divide(event_out, h_out);
  a.entropy_ratio = divide(h_out, h_in);
  a.factor_product =
      multiply(multiply(a.event_ratio, a.output_ratio), multiply(a.entropy_ratio, a.expected_queries));
  return a;
}

double pp_mutual_information_closed_form(double p1, double eps) {
  const BinaryChannel c = make_channel(ChannelKind::pp, p1, eps);
  return output_entropy_closed_form(c) - conditional_entropy_closed_form(c);
}

PpAnalysis pp_analysis(const BinaryChannel& c) {
  c.validate();
  if (c.kind != ChannelKind::pp) {
    throw DomainError("pp_analysis needs a pp channel");
  }
  const double p0 = 1.0 - c.p1;
  PpAnalysis a;
  a.input_entropy = binary_entropy(c.p1);
  a.output_entropy = output_entropy_closed_form(c);
  a.conditional_entropy = conditional_entropy_closed_form(c);
  a.mutual_information = matrix_mutual_information(c);
  a.approx = 16.0 * c.eps * c.eps * p0 * c.p1;
  a.approx_margin_form = 4.0 * c.eps * c.eps * (1.0 - (p0 - c.p1) * (p0 - c.p1));
  a.approx_forms_agree = std::fabs(a.approx - a.approx_margin_form) <= kFormAgreement;
  const ExtendedReal h = ExtendedReal::finite(a.input_entropy);
  const ExtendedReal mi = ExtendedReal::finite(a.mutual_information);
  const ExtendedReal approx = ExtendedReal::finite(a.approx);
  a.repetitions = divide(h, mi);
  a.repetitions_approx = divide(h, approx);
  a.approx_rel_error = divide(ExtendedReal::finite(std::fabs(a.mutual_information - a.approx)), mi);
  return a;
}

ErrorThreshold pp_error_threshold(double p1) {
  if (!(p1 > 0.0) || !(p1 < 1.0)) {
    throw DomainError("p1 must lie strictly between 0 and 1");
  }
  ErrorThreshold t;
  t.p1 = p1;
  t.target = -p1 * std::log2(p1);
  // 16 eps^2 p0 p1 >= p1 p0 (with -log2 p1 replaced by p0) gives eps^2 >= 1/16.
  t.eps_approx = std::sqrt(1.0 / 16.0);

  // I tends to H(chi) as eps -> 1/2, and H(chi) >= target.
  t.solvable = binary_entropy(p1) > t.target;
  if (!t.solvable) {
    return t;
  }
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > kThresholdTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (matrix_mutual_information(make_channel(ChannelKind::pp, p1, mid)) >= t.target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  t.eps_exact = hi;

  const double step = 0.5 / static_cast<double>(kThresholdGridPoints);
  double prev_eps = 0.0;
  double prev_mi = 0.0;
  t.eps_grid = std::nan("");
  for (std::size_t i = 1; i < kThresholdGridPoints; ++i) {
    const double e = step * static_cast<double>(i);
    const double mi = pp_mutual_information_closed_form(p1, e);
    if (mi >= t.target) {
      t.eps_grid = prev_eps + (t.target - prev_mi) / (mi - prev_mi) * (e - prev_eps);
      break;
    }
    prev_eps = e;
    prev_mi = mi;
  }
  t.gap = t.eps_approx - t.eps_exact;
  return t;
}

std::vector<SweepRow> sweep(ChannelKind kind, const std::vector<double>& p1s, const std::vector<double>& epss) {
  std::vector<SweepRow> rows;
  for (double p1 : p1s) {
    for (double e : epss) {
      const BinaryChannel c = make_channel(kind, p1, e);
      SweepRow r;
      r.p1 = p1;
      r.eps = e;
      r.output_entropy = output_entropy_closed_form(c);
      r.conditional_entropy = conditional_entropy_closed_form(c);
      r.mi_exact = matrix_mutual_information(c);
      r.mi_closed = r.output_entropy - r.conditional_entropy;
      r.mi_approx = 16.0 * e * e * (1.0 - p1) * p1;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace infoq
