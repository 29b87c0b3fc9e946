#include "schemefusion/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "schemefusion/constructions.hpp"
#include "schemefusion/errors.hpp"

namespace schemefusion {

namespace {

std::string blocks_str(const std::vector<std::vector<int>>& blocks) {
    std::ostringstream out;
    out << '{';
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) out << '|';
        for (size_t t = 0; t < blocks[b].size(); ++t) {
            if (t) out << ',';
            out << blocks[b][t];
        }
    }
    out << '}';
    return out.str();
}

}  // namespace

ClassPartition ClassPartition::from_blocks(std::vector<std::vector<int>> blocks, int rank) {
    if (rank < 1) throw Error(errc::PartitionMismatch, "partition needs at least class 0");
    std::vector<int> owner(static_cast<size_t>(rank), -1);
    for (auto& block : blocks) {
        if (block.empty()) throw Error(errc::PartitionMismatch, "empty block");
        std::sort(block.begin(), block.end());
        for (int c : block) {
            if (c < 0 || c >= rank)
                throw Error(errc::PartitionMismatch,
                            "class index " + std::to_string(c) + " outside 0.." +
                                std::to_string(rank - 1));
            if (owner[c] != -1)
                throw Error(errc::PartitionMismatch,
                            "class " + std::to_string(c) + " appears in two blocks");
            owner[c] = 1;
        }
    }
    for (int c = 0; c < rank; ++c)
        if (owner[c] == -1)
            throw Error(errc::PartitionMismatch, "class " + std::to_string(c) + " not covered");
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  return x.front() < y.front();
              });
    if (blocks.front().size() != 1)
        throw Error(errc::PartitionMismatch, "class 0 must form its own block");
    ClassPartition p;
    p.blocks_ = std::move(blocks);
    p.domain_ = rank;
    return p;
}

ClassPartition ClassPartition::identity(int rank) {
    std::vector<std::vector<int>> blocks;
    for (int c = 0; c < rank; ++c) blocks.push_back({c});
    return from_blocks(std::move(blocks), rank);
}

ClassPartition ClassPartition::trivial(int rank) {
    std::vector<std::vector<int>> blocks{{0}};
    if (rank > 1) {
        std::vector<int> rest;
        for (int c = 1; c < rank; ++c) rest.push_back(c);
        blocks.push_back(std::move(rest));
    }
    return from_blocks(std::move(blocks), rank);
}

std::vector<int> ClassPartition::block_of() const {
    std::vector<int> of(static_cast<size_t>(domain_));
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int c : blocks_[b]) of[c] = static_cast<int>(b);
    return of;
}

std::string ClassPartition::str() const { return blocks_str(blocks_); }

FusionMethod parse_fusion_method(const std::string& name) {
    if (name == "bm") return FusionMethod::Bm;
    if (name == "oracle") return FusionMethod::Oracle;
    if (name == "both") return FusionMethod::Both;
    throw Error(errc::BadParameter, "unknown fusion method '" + name + "'");
}

bool bm_test(const CharacterTable& table, const ClassPartition& partition) {
    int r = table.rank();
    if (partition.domain() != r)
        throw Error(errc::PartitionMismatch,
                    "partition covers " + std::to_string(partition.domain()) +
                        " classes, table has " + std::to_string(r));
    int nb = partition.size();
    std::vector<std::vector<QuadNum>> collapsed(static_cast<size_t>(r));
    for (int u = 0; u < r; ++u) {
        auto& row = collapsed[u];
        row.reserve(static_cast<size_t>(nb));
        for (const auto& block : partition.blocks()) {
            QuadNum sum;
            for (int j : block) sum += table.entries[u][j];
            row.push_back(std::move(sum));
        }
    }
    auto row_less = [](const std::vector<QuadNum>& x, const std::vector<QuadNum>& y) {
        for (size_t t = 0; t < x.size(); ++t) {
            int c = QuadNum::compare(x[t], y[t]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::sort(collapsed.begin(), collapsed.end(), row_less);
    int distinct = static_cast<int>(collapsed.size());
    for (size_t u = 1; u < collapsed.size(); ++u)
        if (collapsed[u] == collapsed[u - 1]) --distinct;
    return distinct == nb;
}

namespace {

std::vector<BitMatrix> fuse_matrices(const Scheme& scheme, const ClassPartition& partition) {
    if (partition.domain() != scheme.rank())
        throw Error(errc::PartitionMismatch,
                    "partition covers " + std::to_string(partition.domain()) +
                        " classes, scheme has " + std::to_string(scheme.rank()));
    std::vector<BitMatrix> fused;
    fused.reserve(partition.blocks().size());
    for (const auto& block : partition.blocks()) {
        BitMatrix m = scheme.cls(block[0]);
        for (size_t t = 1; t < block.size(); ++t) m |= scheme.cls(block[t]);
        fused.push_back(std::move(m));
    }
    return fused;
}

}  // namespace

bool closure_fusion_test(const Scheme& scheme, const ClassPartition& partition) {
    return verify_scheme(fuse_matrices(scheme, partition), /*early_exit=*/true).pass;
}

Scheme fused_scheme(const Scheme& scheme, const ClassPartition& partition) {
    SchemeReport report = verify_scheme(fuse_matrices(scheme, partition), /*early_exit=*/true);
    if (!report.pass) {
        std::string why;
        for (const auto& ax : report.axioms)
            if (ax.checked && !ax.pass) {
                why = ax.detail;
                break;
            }
        throw Error(errc::NotAFusion,
                    "partition " + partition.str() + " is not a fusion: " + why);
    }
    return *report.scheme;
}

namespace {

// Streaming generator of the restricted-growth strings of length m, i.e. all
// set partitions of {1..m} (classes 1..m of the scheme); the all-zero string
// (every class in one block) is first, singletons last.
class RgsStream {
public:
    explicit RgsStream(int m) : a_(static_cast<size_t>(m), 0), pm_(static_cast<size_t>(m), 0) {}

    // Appends up to want strings; returns the global index of the first one.
    long long take(std::vector<std::vector<int8_t>>& out, int want) {
        std::lock_guard<std::mutex> lock(mu_);
        long long start = next_index_;
        for (int t = 0; t < want && !done_; ++t) {
            out.push_back(a_);
            ++next_index_;
            advance();
        }
        return start;
    }

private:
    void advance() {
        int m = static_cast<int>(a_.size());
        for (int i = m - 1; i >= 1; --i) {
            if (a_[i] <= pm_[i - 1]) {
                ++a_[i];
                pm_[i] = std::max(pm_[i - 1], a_[i]);
                for (int j = i + 1; j < m; ++j) {
                    a_[j] = 0;
                    pm_[j] = pm_[j - 1];
                }
                return;
            }
        }
        done_ = true;
    }

    std::mutex mu_;
    std::vector<int8_t> a_;
    std::vector<int8_t> pm_;
    bool done_ = false;
    long long next_index_ = 0;
};

ClassPartition partition_from_rgs(const std::vector<int8_t>& rgs, int rank) {
    int nb = 0;
    for (int8_t v : rgs) nb = std::max(nb, static_cast<int>(v) + 1);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nb) + 1);
    blocks[0] = {0};
    for (size_t i = 0; i < rgs.size(); ++i)
        blocks[static_cast<size_t>(rgs[i]) + 1].push_back(static_cast<int>(i) + 1);
    return ClassPartition::from_blocks(std::move(blocks), rank);
}

}  // namespace

std::vector<FusionResult> enumerate_fusions(const Scheme& scheme, FusionMethod method,
                                            int threads) {
    int r = scheme.rank();
    if (r > 13)
        throw Error(errc::RankTooLarge, "rank " + std::to_string(r) +
                                            " exceeds the enumeration ceiling of 13");
    bool use_bm = method == FusionMethod::Bm || method == FusionMethod::Both;
    bool use_oracle = method == FusionMethod::Oracle || method == FusionMethod::Both;
    CharacterTable table;
    if (use_bm) table = character_table(scheme);
    // Warm the shared caches before the worker threads fan out.
    if (use_oracle) scheme.transposes();

    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? static_cast<int>(hw) : 1;
    }

    RgsStream stream(r - 1);
    std::mutex collect_mu;
    std::vector<FusionResult> results;
    long long first_conflict = -1;
    std::string conflict_detail;

    auto worker = [&]() {
        std::vector<std::vector<int8_t>> batch;
        std::vector<FusionResult> local;
        for (;;) {
            batch.clear();
            long long start = stream.take(batch, 64);
            if (batch.empty()) break;
            for (size_t t = 0; t < batch.size(); ++t) {
                ClassPartition part = partition_from_rgs(batch[t], r);
                bool bm_ok = false;
                bool oracle_ok = false;
                if (use_bm) bm_ok = bm_test(table, part);
                if (use_oracle) oracle_ok = closure_fusion_test(scheme, part);
                if (method == FusionMethod::Both && bm_ok != oracle_ok) {
                    std::lock_guard<std::mutex> lock(collect_mu);
                    long long idx = start + static_cast<long long>(t);
                    if (first_conflict < 0 || idx < first_conflict) {
                        first_conflict = idx;
                        conflict_detail = "eigenvalue test says " +
                                          std::string(bm_ok ? "fusion" : "not a fusion") +
                                          ", closure oracle says " +
                                          std::string(oracle_ok ? "fusion" : "not a fusion") +
                                          " for partition " + part.str();
                    }
                    continue;
                }
                bool is_fusion = use_bm ? bm_ok : oracle_ok;
                if (is_fusion) {
                    int nb = part.size();
                    local.push_back(FusionResult{std::move(part), nb, std::nullopt, std::nullopt});
                }
            }
        }
        std::lock_guard<std::mutex> lock(collect_mu);
        for (auto& res : local) results.push_back(std::move(res));
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (first_conflict >= 0) throw Error(errc::InternalDisagreement, conflict_detail);

    std::sort(results.begin(), results.end(), [](const FusionResult& x, const FusionResult& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.partition < y.partition;
    });
    return results;
}

std::vector<FusionResult> isolating_fusions(const Scheme& scheme, const std::vector<int>& isolate,
                                            FusionMethod method, int threads) {
    if (isolate.empty())
        throw Error(errc::PartitionMismatch, "isolating class set must be nonempty");
    std::vector<int> target = isolate;
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
    for (int c : target)
        if (c < 1 || c >= scheme.rank())
            throw Error(errc::PartitionMismatch,
                        "isolating class " + std::to_string(c) + " outside 1.." +
                            std::to_string(scheme.rank() - 1));

    ClassPartition ident = ClassPartition::identity(scheme.rank());
    std::vector<FusionResult> all = enumerate_fusions(scheme, method, threads);
    std::vector<FusionResult> kept;
    for (auto& res : all) {
        if (res.partition == ident) continue;
        const auto& blocks = res.partition.blocks();
        if (std::find(blocks.begin(), blocks.end(), target) != blocks.end())
            kept.push_back(std::move(res));
    }
    return kept;
}

ClassPartition fusion_lift(const ClassPartition& base_partition, int base_rank, int n) {
    if (base_partition.domain() != base_rank)
        throw Error(errc::PartitionMismatch,
                    "partition covers " + std::to_string(base_partition.domain()) +
                        " classes, expected " + std::to_string(base_rank));
    if (n < 1) throw Error(errc::BadParameter, "fusion_lift requires n >= 1");
    std::vector<std::vector<int>> comps = hamming_compositions(base_rank, n);
    std::vector<int> block_of = base_partition.block_of();
    int nb = base_partition.size();

    // phi sums each composition's entries within the base blocks; two classes
    // of H(n, base) fuse exactly when their images agree.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (size_t c = 0; c < comps.size(); ++c) {
        std::vector<int> image(static_cast<size_t>(nb), 0);
        for (int i = 0; i < base_rank; ++i) image[block_of[i]] += comps[c][i];
        groups[image].push_back(static_cast<int>(c));
    }
    std::vector<std::vector<int>> blocks;
    blocks.reserve(groups.size());
    for (auto& [image, members] : groups) blocks.push_back(std::move(members));
    return ClassPartition::from_blocks(std::move(blocks), static_cast<int>(comps.size()));
}

}  // namespace schemefusion
