#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weave/graph.hpp"
#include "weave/textile.hpp"

namespace weave {

/// theta(alpha, beta) = (beta2, alpha2) for a composable pair s(alpha) = r(beta)
/// with alpha, alpha2 in G1 and beta, beta2 in G2.
struct ThetaEntry {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t beta2 = 0;
  std::size_t alpha2 = 0;

  friend bool operator==(const ThetaEntry&, const ThetaEntry&) = default;
};

/// Two graphs on a common vertex list glued by a factorization bijection.
struct RankTwoData {
  std::string name;
  GraphPtr g1;
  GraphPtr g2;
  std::vector<ThetaEntry> theta;
};

/// Every violated invariant, one line each; empty when the data is valid.
std::vector<std::string> check_rank2_data(const RankTwoData& d);

/// The textile with G^0 = G1^1, G^1 = composable pairs, H = G2^op and
/// s = alpha, r = alpha2, p = beta2, q = beta. Throws ValidationError when the
/// data is invalid.
TextileSystem from_rank2(const RankTwoData& d);

}  // namespace weave
