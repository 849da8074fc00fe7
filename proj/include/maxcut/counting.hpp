#ifndef MAXCUT_COUNTING_HPP
#define MAXCUT_COUNTING_HPP

#include <gmpxx.h>

#include <string>

#include "maxcut/engines.hpp"

namespace maxcut {

/// Arbitrary-precision nonnegative integer for approximation-set
/// cardinalities, which reach 2^(n-1) and overflow every builtin type well
/// before the n = 100 experiments. log2() is exact for powers of two and
/// correct to double rounding otherwise.
class ExactCount {
 public:
  ExactCount() : v_(0) {}

  static ExactCount zero() { return ExactCount(); }
  static ExactCount from_uint(unsigned long long v);
  static ExactCount pow2(unsigned exponent);
  static ExactCount pow2_minus_one(unsigned exponent);

  bool is_zero() const { return v_ == 0; }

  /// Base-2 logarithm; throws std::domain_error on zero.
  double log2() const;

  std::string to_string() const { return v_.get_str(); }

  ExactCount operator+(const ExactCount& o) const { return ExactCount(v_ + o.v_); }

  friend bool operator==(const ExactCount& a, const ExactCount& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactCount& a, const ExactCount& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactCount& a, const ExactCount& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactCount& a, const ExactCount& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactCount& a, const ExactCount& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactCount& a, const ExactCount& b) { return a.v_ >= b.v_; }

 private:
  explicit ExactCount(mpz_class v) : v_(std::move(v)) {}
  mpz_class v_;
};

inline ExactCount min(const ExactCount& a, const ExactCount& b) {
  return a <= b ? a : b;
}

/// |C| = 2^(n-1) - 1: the number of unordered nontrivial bipartitions of n
/// vertices. Throws for n < 2.
ExactCount solution_space_size(int n);

/// |C_t| = 2^k for SG/SG3 states, k = |unlabelled| = n-t-1. Both sides are
/// nonempty from the initialization step; throws if one is empty.
ExactCount count_sg_family(const DoubleGreedyState& state);

/// |C_t| for D2Greedy/RDGreedy states under unordered-cut semantics:
/// 2^k when both sides are labelled, 2^k - 1 when exactly one is, and
/// 2^(k-1) - 1 for the fully unlabelled state (all nontrivial cuts). The
/// last case only arises for synthetic t = 0 states; engine states always
/// have a labelled vertex from step 1 on.
ExactCount count_double_greedy(const DoubleGreedyState& state);

/// The ordered-completion variant (2^k, or 2^k - 1 when a side is empty).
/// Agrees with count_double_greedy whenever at least one vertex is
/// labelled; on the fully unlabelled state it counts each cut twice plus
/// the trivial one. Exposed for comparison; the estimator pipeline uses
/// count_double_greedy, which matches the enumeration oracle everywhere.
ExactCount count_double_greedy_ordered(const DoubleGreedyState& state);

/// Intersection cardinality of the approximation sets described by two
/// step-aligned double greedy states on the same vertex set. An orientation
/// of s2 relative to s1 is feasible when the merged labelled sides do not
/// conflict; each feasible orientation contributes 2^l completions over the
/// l = |T' n T''| common unlabelled vertices (minus the trivial cut when a
/// merged side stays empty), and both orientations contribute when the
/// labelled sets are disjoint. Returns zero when no orientation is
/// feasible. Applies to both double greedy families: for SG/SG3 states the
/// emptiness corrections never trigger.
ExactCount intersect_double_greedy(const DoubleGreedyState& s1,
                                   const DoubleGreedyState& s2);

/// |C_t| = 2^(k-1) - 1 for an edge contraction state with k >= 2 groups.
ExactCount count_ec(const SuperVertexPartition& state);

/// Maximum number of common super vertices reachable from two group lists
/// by further contractions. P and Q must each be pairwise disjoint, cover
/// the same vertex set, share no group, and have equal length h >= 2.
/// Grows a candidate group per side, extending whichever lags by the unique
/// group covering an uncovered vertex, and counts each time the candidates
/// become equal; this equals the number of connected components of the
/// bipartite overlap graph between P and Q.
int common_supervertex_count(const std::vector<std::vector<Vertex>>& p_groups,
                             const std::vector<std::vector<Vertex>>& q_groups);

/// Intersection cardinality for two step-aligned edge contraction states:
/// 2^(c* + l - 1) - 1, where l counts identical groups and c* is
/// common_supervertex_count of the remainders (c* = 0 when nothing
/// remains).
ExactCount intersect_ec(const SuperVertexPartition& s1,
                        const SuperVertexPartition& s2);

}  // namespace maxcut

#endif  // MAXCUT_COUNTING_HPP
