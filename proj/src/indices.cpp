#include "evdeg/indices.hpp"

#include <cmath>
#include <map>

#include "evdeg/exact.hpp"

namespace evdeg {

ClassicInvariants classic_invariants(const Graph& g) {
    ClassicInvariants out;
    out.n = g.n();
    out.m = g.m();

    Exact m1 = 0;
    Exact f = 0;
    for (int v = 0; v < g.n(); ++v) {
        Exact d = g.degree(v);
        m1 += d * d;
        f += d * d * d;
    }

    Exact m2 = 0;
    Exact hm1 = 0;
    for (const Edge& e : g.edges()) {
        Exact du = g.degree(e.u);
        Exact dv = g.degree(e.v);
        m2 += du * dv;
        hm1 += (du + dv) * (du + dv);
    }

    out.M1 = m1.value();
    out.M2 = m2.value();
    out.F = f.value();
    out.HM1 = hm1.value();
    out.eta = g.triangle_count();
    return out;
}

EvIndexBundle ev_indices(const Graph& g) {
    // Aggregate the multiset first; every index is then a short sum or
    // product over distinct values, which keeps NKev/mMev cheap even when
    // m is large.
    std::map<std::int64_t, std::int64_t> counts;
    for (const Edge& e : g.edges()) {
        ++counts[g.ev_degree(e)];
    }

    EvIndexBundle out;
    Exact mev = 0;
    Exact fev = 0;
    for (const auto& [value, count] : counts) {
        out.ev_degrees.emplace_back(value, count);
        Exact v = value;
        Exact c = count;
        mev += c * v * v;
        fev += c * v * v * v;
        out.NKev *= boost::multiprecision::pow(BigInt(value), static_cast<unsigned>(count));
        out.mMev += BigRat(count, BigInt(value) * value);
        out.Rev += static_cast<double>(count) / std::sqrt(static_cast<double>(value));
    }
    out.Mev = mev.value();
    out.Fev = fev.value();
    return out;
}

std::string rational_string(const BigRat& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace evdeg
