#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evdeg/graph.hpp"

namespace evdeg {

// Registry of checked identities. T* compare the second ev-degree Zagreb
// index of a constructed graph against a closed form; L* compare explicit
// nested summations against closed forms; P* are cross-route consistency
// checks on one graph.
enum class IdentityId {
    T1i,   // subdivision
    T1ii,  // edge-semitotal
    T2i,   // vertex-semitotal (triangle-free)
    T2ii,  // total graph (triangle-free)
    T3,    // join
    T4,    // cartesian product
    T5,    // composition
    T6,    // corona
    T7,    // tensor product (triangle-free left factor)
    T8i,   // sd-sum
    T8ii,  // esto-sum
    T9i,   // vsto-sum (triangle-free left factor)
    T9ii,  // to-sum (triangle-free left factor)
    L1,    // per-edge triangle sum vs 3 * triangle count
    L2i,   // neighbor degree-square sum vs F
    L2ii,  // neighbor degree-product sum vs 2 * M2
    L3a,
    L3b,
    L3c,
    L3d,
    L3e,
    L3f,
    L3g,
    L3h,
    L3i,
    P_sum_evdeg,    // sum of ev-degrees vs M1 - 3 eta
    P_mev_eq_hm1,   // Mev vs HM1 on triangle-free graphs
};

struct IdentityInfo {
    IdentityId id;
    const char* name;          // report id string, e.g. "T1i"
    bool binary;               // evaluated on a pair (g, h)
    bool needs_triangle_free;  // applicability gate on g
    bool has_derived;          // ships a corrected closed form alongside the stated one
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& identity_info(IdentityId id);

struct IdentityResult {
    IdentityId id = IdentityId::T1i;
    std::string input_g;
    std::string input_h;  // empty for unary identities
    bool applicable = true;
    std::string reason;   // why not, when applicable is false
    std::int64_t direct = 0;  // construction or explicit-summation value
    std::int64_t stated = 0;  // closed form as printed
    std::optional<std::int64_t> derived;  // corrected closed form, where one exists
    bool stated_match = false;
    std::optional<bool> derived_match;

    // What the suite grades: the corrected form where one exists, else the
    // stated one. Inapplicable rows never count either way.
    bool passes() const { return derived_match.has_value() ? *derived_match : stated_match; }
};

// Evaluators; input descriptors are left empty, run_suite fills them.
std::vector<IdentityResult> eval_T1(const Graph& g);
std::vector<IdentityResult> eval_T2(const Graph& g);
IdentityResult eval_T3(const Graph& g, const Graph& h);
IdentityResult eval_T4(const Graph& g, const Graph& h);
IdentityResult eval_T5(const Graph& g, const Graph& h);
IdentityResult eval_T6(const Graph& g, const Graph& h);
IdentityResult eval_T7(const Graph& g, const Graph& h);
std::vector<IdentityResult> eval_T8(const Graph& g, const Graph& h);
std::vector<IdentityResult> eval_T9(const Graph& g, const Graph& h);
// L1, L2i, L2ii evaluated on g; L3a..L3i on the pair.
std::vector<IdentityResult> eval_lemmas(const Graph& g, const Graph& h);
std::vector<IdentityResult> eval_properties(const Graph& g);

enum class Suite { all, theorems, lemmas, properties };
std::string suite_name(Suite s);

// A corpus is either the builtin named set (paths P2..P6, cycles C3..C6,
// completes K1..K4, stars K1,1..K1,4, with all ordered pairs) or random:
// `samples` connected G(n,p) graphs with n uniform in [2, max_n], plus
// `pair_samples` connected ordered pairs with sizes up to pair_max_n.
struct CorpusSpec {
    enum class Kind { builtin, random };
    Kind kind = Kind::builtin;
    int samples = 0;
    int max_n = 0;
    double p = 0.0;
    int pair_samples = 0;
    int pair_max_n = 0;
};

std::vector<std::pair<std::string, Graph>> builtin_corpus();

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<IdentityResult> results;  // sorted by identity, then inputs
};

// Evaluates the selected identities over the corpora. Work is spread over
// threads (EVDEG_THREADS caps the count) but the report is byte-identical
// regardless of scheduling: results are slotted by work item and sorted.
Report run_suite(Suite suite, const std::vector<CorpusSpec>& corpus, std::uint64_t seed);

// True when no applicable result fails its grading variant.
bool all_passed(const Report& r);

}  // namespace evdeg
