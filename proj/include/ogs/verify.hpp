#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ogs/json_io.hpp"

namespace ogs {

enum class TheoremId {
    T1_5_i,
    T1_1,
    T1_2,
    T1_4,
    T1_5_iv,
    P5_forms,
    P6_forms,
    T1_6_k4,
    T1_8_s1,
    T1_9,
};

std::string theorem_name(TheoremId);
TheoremId theorem_from_name(const std::string&);

struct VerificationReport {
    TheoremId theorem = TheoremId::T1_9;
    long long corpus_size = 0;
    std::map<std::string, long long> verdicts; // branch -> count
    std::vector<Json> counterexamples;
    std::vector<std::string> notes;
    uint64_t seed = 0;
    long long runtime_ms = 0; // envelope only, excluded from the report body

    bool verified() const { return counterexamples.empty(); }
};

// body excludes runtime_ms so fixed inputs and seeds give identical bytes
Json report_body_to_json(const VerificationReport&);

// Runs the pipeline named by the theorem id over the corpus parameters.
// Corpus JSON: {"version":"1","theorem":...,"seed":...,...} with
// pipeline-specific fields (balls, k ranges, boxes, sample counts).
VerificationReport verify(TheoremId, const Json& params, int workers = 1);

// A counterexample re-validates when the violated claim can be reproduced
// from the serialized record alone.
bool revalidate_counterexample(const Json&);

// subsets of the integer box [0,shape_0) x ... as lattice points, all sizes
// in [size_lo, size_hi]; callback gets each subset once, deterministic order
void for_each_box_subset(const std::vector<int>& shape, int size_lo, int size_hi,
                         const std::function<void(const std::vector<LatticePoint>&)>& fn);

} // namespace ogs
