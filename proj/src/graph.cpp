#include "evdeg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace evdeg {

namespace {

// Bit rows are only kept while the whole matrix stays within 32 MB
// (4M words); bigger graphs use sorted-list merges instead.
constexpr std::size_t kMaxBitWords = std::size_t{1} << 22;

}  // namespace

Edge make_edge(int a, int b) {
    if (a == b) {
        throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    for (Edge& e : edges_) {
        if (e.u == e.v) {
            throw std::invalid_argument("loop edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u < 0 || e.v >= n_) {
            throw std::invalid_argument("vertex id out of range (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") with n=" + std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                        std::to_string(edges_[i].v) + ")");
        }
    }

    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }

    row_words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    if (n_ > 0 && row_words_ <= kMaxBitWords / static_cast<std::size_t>(n_)) {
        bits_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
        for (const Edge& e : edges_) {
            bits_[static_cast<std::size_t>(e.u) * row_words_ + static_cast<std::size_t>(e.v) / 64] |=
                std::uint64_t{1} << (e.v % 64);
            bits_[static_cast<std::size_t>(e.v) * row_words_ + static_cast<std::size_t>(e.u) / 64] |=
                std::uint64_t{1} << (e.u % 64);
        }
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range, n=" + std::to_string(n_));
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        return false;
    }
    if (!bits_.empty()) {
        return (bits_[static_cast<std::size_t>(u) * row_words_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1u;
    }
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::int64_t Graph::edge_rank(Edge e) const {
    if (e.u > e.v) {
        std::swap(e.u, e.v);
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") not in graph");
    }
    return it - edges_.begin();
}

std::int64_t Graph::common_neighbor_count(int u, int v) const {
    if (!bits_.empty()) {
        const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(u) * row_words_;
        const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(v) * row_words_;
        std::int64_t count = 0;
        for (std::size_t w = 0; w < row_words_; ++w) {
            count += std::popcount(a[w] & b[w]);
        }
        return count;
    }
    const auto& lu = adj_[static_cast<std::size_t>(u)];
    const auto& lv = adj_[static_cast<std::size_t>(v)];
    std::int64_t count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lu.size() && j < lv.size()) {
        if (lu[i] < lv[j]) {
            ++i;
        } else if (lv[j] < lu[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::int64_t Graph::triangles_on_edge(Edge e) const {
    std::int64_t rank = edge_rank(e);  // validates membership
    (void)rank;
    return common_neighbor_count(e.u, e.v);
}

std::int64_t Graph::triangles_at_vertex(int v) const {
    check_vertex(v);
    std::int64_t twice = 0;
    for (int u : adj_[static_cast<std::size_t>(v)]) {
        twice += common_neighbor_count(u, v);
    }
    return twice / 2;
}

std::int64_t Graph::triangle_count() const {
    std::int64_t total = 0;
    for (const Edge& e : edges_) {
        total += common_neighbor_count(e.u, e.v);
    }
    if (total % 3 != 0) {
        throw std::logic_error("per-edge triangle sum not divisible by 3");
    }
    return total / 3;
}

std::int64_t Graph::ev_degree(Edge e) const {
    std::int64_t rank = edge_rank(e);
    (void)rank;
    return static_cast<std::int64_t>(degree(e.u)) + degree(e.v) - common_neighbor_count(e.u, e.v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

}  // namespace evdeg
