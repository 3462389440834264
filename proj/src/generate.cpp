#include "evdeg/generate.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace evdeg {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::path: {
            require(spec.a >= 1, "path size must be >= 1");
            for (int i = 0; i + 1 < spec.a; ++i) {
                edges.push_back(Edge{i, i + 1});
            }
            return Graph(spec.a, std::move(edges));
        }
        case Family::cycle: {
            require(spec.a >= 3, "cycle size must be >= 3");
            for (int i = 0; i + 1 < spec.a; ++i) {
                edges.push_back(Edge{i, i + 1});
            }
            edges.push_back(Edge{0, spec.a - 1});
            return Graph(spec.a, std::move(edges));
        }
        case Family::complete: {
            require(spec.a >= 1, "complete size must be >= 1");
            for (int i = 0; i < spec.a; ++i) {
                for (int j = i + 1; j < spec.a; ++j) {
                    edges.push_back(Edge{i, j});
                }
            }
            return Graph(spec.a, std::move(edges));
        }
        case Family::star: {
            require(spec.a >= 1, "star leaf count must be >= 1");
            for (int i = 1; i <= spec.a; ++i) {
                edges.push_back(Edge{0, i});
            }
            return Graph(spec.a + 1, std::move(edges));
        }
        case Family::complete_bipartite: {
            require(spec.a >= 1 && spec.b >= 1, "complete_bipartite sides must be >= 1");
            for (int i = 0; i < spec.a; ++i) {
                for (int j = 0; j < spec.b; ++j) {
                    edges.push_back(Edge{i, spec.a + j});
                }
            }
            return Graph(spec.a + spec.b, std::move(edges));
        }
        case Family::random_gnp: {
            require(spec.a >= 1, "random_gnp size must be >= 1");
            require(spec.p >= 0.0 && spec.p <= 1.0, "probability must be in [0,1]");
            Xorshift64Star rng(spec.seed);
            for (int i = 0; i < spec.a; ++i) {
                for (int j = i + 1; j < spec.a; ++j) {
                    if (rng.next_unit() < spec.p) {
                        edges.push_back(Edge{i, j});
                    }
                }
            }
            return Graph(spec.a, std::move(edges));
        }
        case Family::random_bipartite_gnp: {
            require(spec.a >= 1 && spec.b >= 1, "random_bipartite_gnp sides must be >= 1");
            require(spec.p >= 0.0 && spec.p <= 1.0, "probability must be in [0,1]");
            Xorshift64Star rng(spec.seed);
            for (int i = 0; i < spec.a; ++i) {
                for (int j = 0; j < spec.b; ++j) {
                    if (rng.next_unit() < spec.p) {
                        edges.push_back(Edge{i, spec.a + j});
                    }
                }
            }
            return Graph(spec.a + spec.b, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::random_gnp: return "random_gnp";
        case Family::random_bipartite_gnp: return "random_bipartite_gnp";
    }
    return "unknown";
}

std::string describe(const FamilySpec& spec) {
    char buf[128];
    switch (spec.family) {
        case Family::path:
        case Family::cycle:
        case Family::complete:
        case Family::star:
            std::snprintf(buf, sizeof(buf), "%s(%d)", family_name(spec.family).c_str(), spec.a);
            break;
        case Family::complete_bipartite:
            std::snprintf(buf, sizeof(buf), "complete_bipartite(%d,%d)", spec.a, spec.b);
            break;
        case Family::random_gnp:
            std::snprintf(buf, sizeof(buf), "random_gnp(n=%d,p=%.3f,seed=%llu)", spec.a, spec.p,
                          static_cast<unsigned long long>(spec.seed));
            break;
        case Family::random_bipartite_gnp:
            std::snprintf(buf, sizeof(buf), "random_bipartite_gnp(a=%d,b=%d,p=%.3f,seed=%llu)",
                          spec.a, spec.b, spec.p, static_cast<unsigned long long>(spec.seed));
            break;
    }
    return buf;
}

}  // namespace evdeg
