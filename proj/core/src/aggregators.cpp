#include "tglab/aggregators.hpp"

#include <cmath>

#include "tglab/errors.hpp"

namespace tglab::agg {
namespace {

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidInputError(std::string(what) + " must be finite");
  }
}

}  // namespace

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double decay_encode(const std::vector<double>& seq, const DecayParams& params) {
  check_finite(params.lambda, "lambda");
  const int horizon = static_cast<int>(seq.size());
  double sum = 0.0;
  for (int t = 1; t <= horizon; ++t) {
    check_finite(seq[t - 1], "sequence entry");
    sum += std::exp(params.lambda * (horizon - t + 1)) * seq[t - 1];
  }
  check_finite(sum, "weighted sum");
  return sigmoid(sum);
}

double weighted_encode(const std::vector<double>& seq, const WeightParams& params) {
  if (params.theta.size() != seq.size()) {
    throw InvalidInputError("theta length " + std::to_string(params.theta.size()) +
                            " does not match sequence length " +
                            std::to_string(seq.size()));
  }
  double sum = 0.0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    check_finite(seq[t], "sequence entry");
    check_finite(params.theta[t], "theta entry");
    sum += params.theta[t] * seq[t];
  }
  check_finite(sum, "weighted sum");
  return sigmoid(sum);
}

ColorId exact_seq_encode(const AttrSeq& seq, Session& session) {
  return session.interner.intern(Sig().role(Role::kSeqEncode).seq(seq));
}

std::vector<double> numeric_seq(const AttrSeq& seq) {
  std::vector<double> out;
  out.reserve(seq.size());
  for (const AttrValue& v : seq) {
    if (v.is_null()) {
      out.push_back(0.0);
    } else if (v.is_int()) {
      out.push_back(static_cast<double>(v.as_int()));
    } else {
      throw InvalidInputError("numeric view requires integer or Null symbols, got " +
                              v.to_display());
    }
  }
  return out;
}

}  // namespace tglab::agg
