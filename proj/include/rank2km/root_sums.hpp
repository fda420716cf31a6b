#pragma once

// Sums of real roots: when they are real, the triples {alpha, beta, gamma}
// with alpha + beta + gamma = 0, and root strings.

#include "rank2km/core_roots.hpp"

#include <cstdint>
#include <vector>

namespace rank2km {

struct RootString {
  Integer p = 0;  // steps down: beta - p alpha is the bottom
  Integer q = 0;  // steps up
  friend bool operator==(const RootString&, const RootString&) = default;
};

struct RealTriple {
  RealRoot alpha;
  RealRoot beta;
  RealRoot gamma;
  friend bool operator==(const RealTriple&, const RealTriple&) = default;
};

enum class SumLength { SumLong, SumShort, SumNotReal };

const char* sum_length_name(SumLength s);

// classify(coords(alpha) + coords(beta)).
RootClass sum_class(const CartanData& cd, const RealRoot& alpha,
                    const RealRoot& beta);

// Positive real beta with beta + sign * alpha_i real. H(a,1), a > 4 only.
std::vector<RealRoot> sums_with_simple(const CartanData& cd, int i, int sign);

// Triples for parameters j (and k for H(4,1)) in [lo, hi]. For H(4,1) each
// unordered pair {SB_j, SB_{2k+1-j}} is listed once, with j <= k. H(1,b) is
// handled by swapping the roles of the two simple roots.
std::vector<RealTriple> triples(const CartanData& cd, std::int64_t lo,
                                std::int64_t hi);

// Every triple whose three members have |index| <= window.
std::vector<RealTriple> triples_in_window(const CartanData& cd,
                                          std::int64_t window);

// Ordered pairs (alpha, beta) with |index| <= window and alpha + beta real,
// found by brute force.
std::vector<std::pair<RealRoot, RealRoot>> real_sum_pairs(const CartanData& cd,
                                                          std::int64_t window);

// The ordered pairs with |index| <= window that the triples predict to have a
// real sum. The third member of such a triple may lie outside the window.
std::vector<std::pair<RealRoot, RealRoot>> predicted_sum_pairs(
    const CartanData& cd, std::int64_t window);

// Throws InvalidArgument when beta = +-alpha. The string is symmetric under
// the reflection in alpha, so only its short side is scanned (bounded by
// 2 max(a,b) + 4 steps); the long side follows from p - q = <beta, alpha^vee>.
RootString root_string(const CartanData& cd, const RealRoot& alpha,
                       const RealRoot& beta);

SumLength sum_length_rule(const CartanData& cd, const RealRoot& alpha,
                          const RealRoot& beta);

// Swaps alpha_1 and alpha_2: a root of H(a,b) becomes a root of H(b,a).
RealRoot mirror_root(const RealRoot& r);

}  // namespace rank2km
