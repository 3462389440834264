#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "evdeg/graph.hpp"

namespace evdeg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Degree-based invariants. All exact; overflow throws std::overflow_error
// rather than wrapping.
//   M1  = sum of d(v)^2            M2 = sum over edges of d(u)d(v)
//   F   = sum of d(v)^3            HM1 = sum over edges of (d(u)+d(v))^2
//   eta = triangle count
struct ClassicInvariants {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t M1 = 0;
    std::int64_t M2 = 0;
    std::int64_t F = 0;
    std::int64_t HM1 = 0;
    std::int64_t eta = 0;
};

// Indices over the ev-degree multiset {ev(e) : e in E}.
//   Mev  = sum ev^2 (exact)        Fev = sum ev^3 (exact)
//   NKev = product ev (big int; empty product = 1)
//   mMev = sum 1/ev^2 (exact rational)
//   Rev  = sum ev^(-1/2) (double)
// ev_degrees holds the exact multiset as (value, multiplicity), ascending.
struct EvIndexBundle {
    std::int64_t Mev = 0;
    std::int64_t Fev = 0;
    BigInt NKev = 1;
    BigRat mMev = 0;
    double Rev = 0.0;
    std::vector<std::pair<std::int64_t, std::int64_t>> ev_degrees;
};

ClassicInvariants classic_invariants(const Graph& g);
EvIndexBundle ev_indices(const Graph& g);

// Canonical "num/den" form, e.g. "1/3", "0/1".
std::string rational_string(const BigRat& q);

}  // namespace evdeg
