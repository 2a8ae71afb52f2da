#ifndef TGLAB_AGGREGATORS_HPP_
#define TGLAB_AGGREGATORS_HPP_

#include <vector>

#include "tglab/attr.hpp"
#include "tglab/interner.hpp"

namespace tglab::agg {

struct DecayParams {
  double lambda = 0.0;
};

struct WeightParams {
  std::vector<double> theta;
};

// sigmoid(sum_t exp(lambda * (T - t + 1)) * seq[t]) with t running 1..T in
// order. Entries and lambda must be finite.
double decay_encode(const std::vector<double>& seq, const DecayParams& params);

// sigmoid(dot(theta, seq)) summed in sequence order; theta must match the
// sequence length.
double weighted_encode(const std::vector<double>& seq, const WeightParams& params);

// Interns the full symbol sequence: an injective encoding within the session,
// so equal color ids imply equal sequences.
ColorId exact_seq_encode(const AttrSeq& seq, Session& session);

// Numeric view of an attribute sequence: Null becomes 0, integer symbols
// their value. String or tuple symbols are rejected.
std::vector<double> numeric_seq(const AttrSeq& seq);

double sigmoid(double x);

}  // namespace tglab::agg

#endif  // TGLAB_AGGREGATORS_HPP_
