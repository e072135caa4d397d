#pragma once

#include <array>
#include <string>
#include <vector>

#include "infoq/joint.hpp"

namespace infoq {

enum class ChannelKind { rp, bpp, pp };

std::string to_string(ChannelKind kind);
/// "rp", "bpp" or "pp"; throws DomainError otherwise.
ChannelKind parse_channel_kind(const std::string& name);

/// Language indicator chi (Pr(chi = 1) = p1) observed through a noisy
/// decider chi_eps. Rows of the conditional matrix are chi = 0, 1; columns
/// chi_eps = 0, 1.
///   rp:  a member is rejected with probability eps, a non-member always.
///   bpp: either answer flips with probability eps.
///   pp:  the right answer comes out with probability 1/2 + eps.
/// Ranges: p1 in [0, 1]; eps in [0, 1/2] for rp and bpp, [0, 1/2) for pp.
struct BinaryChannel {
  ChannelKind kind = ChannelKind::bpp;
  double p1 = 0.5;
  double eps = 0.0;

  /// Throws DomainError when a parameter is out of range.
  void validate() const;
  /// Row-major Pr(chi_eps = i | chi = k).
  std::array<double, 4> conditional() const;
};

BinaryChannel make_channel(ChannelKind kind, double p1, double eps);

JointModel channel_joint(const BinaryChannel& c);

/// -x log2 x with 0 log 0 = 0.
double neg_xlog2x(double x);

/// Closed form p1 h(eps) for the one-sided channel.
InfoValue rp_conditional_entropy(const BinaryChannel& c);

/// Closed-form H(chi_eps) for each kind.
double output_entropy_closed_form(const BinaryChannel& c);
/// Closed-form H(chi_eps | chi) for each kind.
double conditional_entropy_closed_form(const BinaryChannel& c);

struct BppAnalysis {
  double input_entropy = 0.0;        // H(chi) = h(p1)
  double output_entropy = 0.0;       // H(chi_eps)
  double conditional_entropy = 0.0;  // H(chi_eps | chi) = h(eps)
  double mutual_information = 0.0;   // closed form
  ExtendedReal expected_queries;     // H(chi) / I
  ExtendedReal avg_queries;          // I(chi = 1) / I
  // avg_queries = event_ratio * output_ratio * entropy_ratio * expected_queries
  ExtendedReal event_ratio;          // I(chi = 1) / I(chi_eps = 1)
  ExtendedReal output_ratio;         // I(chi_eps = 1) / H(chi_eps)
  ExtendedReal entropy_ratio;        // H(chi_eps) / H(chi)
  ExtendedReal factor_product;
};

BppAnalysis bpp_analysis(const BinaryChannel& c);

struct PpAnalysis {
  double input_entropy = 0.0;
  double output_entropy = 0.0;        // closed form
  double conditional_entropy = 0.0;   // closed form
  double mutual_information = 0.0;    // from the joint matrix
  double approx = 0.0;                // 16 eps^2 p0 p1
  double approx_margin_form = 0.0;    // 4 eps^2 [1 - (p0 - p1)^2]
  bool approx_forms_agree = false;
  ExtendedReal repetitions;           // H(chi) / I
  ExtendedReal repetitions_approx;    // H(chi) / (16 eps^2 p0 p1)
  ExtendedReal approx_rel_error;      // |I - approx| / I
};

PpAnalysis pp_analysis(const BinaryChannel& c);

struct ErrorThreshold {
  double p1 = 0.0;
  double target = 0.0;           // p1 I(chi = 1) = -p1 log2 p1
  bool solvable = false;         // some eps in (0, 1/2) meets the target
  double eps_exact = 0.0;        // bisection on the matrix mutual information
  double eps_grid = 0.0;         // grid scan of the closed form, interpolated
  double eps_approx = 0.25;      // first-order expansion with -log2 p1 ~ p0
  double gap = 0.0;              // eps_approx - eps_exact
};

inline constexpr double kThresholdTolerance = 1e-12;
inline constexpr std::size_t kThresholdGridPoints = 1'000'000;

/// Smallest eps in (0, 1/2) with I(chi; chi_eps) >= -p1 log2 p1 for the pp
/// channel. Throws DomainError unless 0 < p1 < 1.
ErrorThreshold pp_error_threshold(double p1);

/// Exact pp mutual information from the closed-form entropies.
double pp_mutual_information_closed_form(double p1, double eps);

struct SweepRow {
  double p1 = 0.0;
  double eps = 0.0;
  double output_entropy = 0.0;
  double conditional_entropy = 0.0;
  double mi_exact = 0.0;     // matrix
  double mi_closed = 0.0;    // closed form
  double mi_approx = 0.0;    // pp only: 16 eps^2 p0 p1
};

std::vector<SweepRow> sweep(ChannelKind kind, const std::vector<double>& p1s, const std::vector<double>& epss);

}  // namespace infoq
