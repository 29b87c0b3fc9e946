#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemefusion/scheme.hpp"
#include "schemefusion/spectra.hpp"

namespace schemefusion {

// Partition of the class indices {0..d} with {0} always its own block.
// Canonical form: every block sorted ascending, blocks ordered by minimum
// element (so blocks[0] == {0}); equality is plain vector equality.
class ClassPartition {
public:
    // Validates disjoint cover of {0..rank-1} and the {0} singleton rule.
    static ClassPartition from_blocks(std::vector<std::vector<int>> blocks, int rank);
    // Identity partition (all singletons) and trivial partition ({1..d} merged).
    static ClassPartition identity(int rank);
    static ClassPartition trivial(int rank);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(blocks_.size()); }    // number of blocks
    int domain() const { return domain_; }                           // number of classes
    // block index of each class.
    std::vector<int> block_of() const;

    bool operator==(const ClassPartition& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const ClassPartition& o) const { return !(*this == o); }
    bool operator<(const ClassPartition& o) const { return blocks_ < o.blocks_; }

    std::string str() const;  // e.g. "{0|1,2|3,4,5}"

private:
    ClassPartition() = default;
    std::vector<std::vector<int>> blocks_;
    int domain_ = 0;
};

struct FusionResult {
    ClassPartition partition;
    int rank = 0;  // number of blocks
    std::optional<Scheme> fused_scheme;
    std::optional<CharacterTable> fused_table;
};

enum class FusionMethod { Bm, Oracle, Both };
FusionMethod parse_fusion_method(const std::string& name);  // "bm" | "oracle" | "both"

// Bannai-Muzychuk criterion: sum the table's columns within each block and
// accept iff the collapsed matrix has exactly one distinct row per block.
bool bm_test(const CharacterTable& table, const ClassPartition& partition);

// Independent oracle: build each block's union matrix and run the full
// axiom checker on the fused family.
bool closure_fusion_test(const Scheme& scheme, const ClassPartition& partition);

// Every partition of {1..d} (restricted-growth-string order) tested with the
// requested method; with Both, any disagreement between the two tests is a
// fatal InternalDisagreement.  Results sorted by (rank, partition).
// threads = 0 means use all hardware threads.
std::vector<FusionResult> enumerate_fusions(const Scheme& scheme,
                                            FusionMethod method = FusionMethod::Both,
                                            int threads = 0);

// Fusions (excluding the identity partition) in which the union of the
// classes in `isolate` forms exactly one block.
std::vector<FusionResult> isolating_fusions(const Scheme& scheme,
                                            const std::vector<int>& isolate,
                                            FusionMethod method = FusionMethod::Both,
                                            int threads = 0);

// The fused scheme itself; NotAFusion when the partition fails the oracle.
Scheme fused_scheme(const Scheme& scheme, const ClassPartition& partition);

// Lift of a base-class partition to the classes of H(n, base): two
// composition vectors land in one block iff their per-block coordinate sums
// agree.  Composition order matches generalized_hamming's class order.
ClassPartition fusion_lift(const ClassPartition& base_partition, int base_rank, int n);

}  // namespace schemefusion
