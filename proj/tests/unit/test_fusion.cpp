#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "schemefusion/constructions.hpp"
#include "schemefusion/errors.hpp"
#include "schemefusion/fusion.hpp"
#include "schemefusion/scheme.hpp"
#include "schemefusion/spectra.hpp"
#include "schemefusion/srg.hpp"

using schemefusion::CharacterTable;
using schemefusion::ClassPartition;
using schemefusion::Error;
using schemefusion::FusionMethod;
using schemefusion::FusionResult;
using schemefusion::QuadNum;
using schemefusion::Scheme;
using schemefusion::bm_test;
using schemefusion::character_table;
using schemefusion::closure_fusion_test;
using schemefusion::construct_catalog;
using schemefusion::enumerate_fusions;
using schemefusion::fused_scheme;
using schemefusion::fusion_lift;
using schemefusion::generalized_hamming;
using schemefusion::isolating_fusions;
using schemefusion::parse_fusion_method;
using schemefusion::partition_for_label;
using schemefusion::tensor_product;
namespace errc = schemefusion::errc;

namespace {

ClassPartition blocks(std::vector<std::vector<int>> b, int rank) {
    return ClassPartition::from_blocks(std::move(b), rank);
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "no error";
}

std::set<std::string> labels_of(const std::vector<FusionResult>& results) {
    std::set<std::string> out;
    for (const auto& r : results) {
        auto label = schemefusion::label_for_partition(r.partition);
        out.insert(label ? *label : r.partition.str());
    }
    return out;
}

}  // namespace

TEST_CASE("ClassPartition canonicalizes blocks and validates the cover") {
    ClassPartition p = blocks({{3, 1}, {2}, {0}}, 4);
    CHECK(p.blocks() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
    CHECK(p.size() == 3);
    CHECK(p.domain() == 4);
    CHECK(p.str() == "{0|1,3|2}");
    CHECK(p.block_of() == std::vector<int>{0, 1, 2, 1});

    CHECK(ClassPartition::identity(4).blocks() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
    CHECK(ClassPartition::trivial(4).blocks() ==
          std::vector<std::vector<int>>{{0}, {1, 2, 3}});

    CHECK(code_of([] { blocks({{0, 1}, {2}}, 3); }) == errc::PartitionMismatch);  // 0 not alone
    CHECK(code_of([] { blocks({{0}, {1}}, 3); }) == errc::PartitionMismatch);     // 2 uncovered
    CHECK(code_of([] { blocks({{0}, {1, 1}, {2}}, 3); }) == errc::PartitionMismatch);
    CHECK(code_of([] { blocks({{0}, {1}, {1}, {2}}, 3); }) == errc::PartitionMismatch);
    CHECK(code_of([] { blocks({{0}, {1, 5}}, 3); }) == errc::PartitionMismatch);  // out of range
    CHECK(code_of([] { blocks({{0}, {}, {1, 2}}, 3); }) == errc::PartitionMismatch);
    CHECK(code_of([] { blocks({{1, 2}, {0}}, 0); }) == errc::PartitionMismatch);
}

TEST_CASE("parse_fusion_method accepts the three spellings") {
    CHECK(parse_fusion_method("bm") == FusionMethod::Bm);
    CHECK(parse_fusion_method("oracle") == FusionMethod::Oracle);
    CHECK(parse_fusion_method("both") == FusionMethod::Both);
    CHECK(code_of([] { parse_fusion_method("fast"); }) == errc::BadParameter);
}

TEST_CASE("column-sum criterion on the symbolic srg(9,4,1,2) table") {
    auto sp = schemefusion::spectrum_from_params({9, 4, 1, 2});
    CharacterTable table = schemefusion::symbolic_h2_table(sp);
    const auto& to_symbolic = schemefusion::h2_scheme_to_symbolic();
    auto symbolic = [&](const char* label) {
        return schemefusion::relabel_partition(partition_for_label(label), to_symbolic);
    };

    CHECK(bm_test(table, symbolic("identity")));
    CHECK(bm_test(table, symbolic("trivial")));
    CHECK(bm_test(table, symbolic("homogeneous")));
    CHECK(bm_test(table, symbolic("(5)")));
    CHECK(bm_test(table, symbolic("(10)")));
    // merging only the two non-identity diagonal-type classes is not a fusion here
    CHECK(!bm_test(table, schemefusion::relabel_partition(
                              blocks({{0}, {1}, {2}, {3}, {4, 5}}, 6), to_symbolic)));
}

TEST_CASE("the two fusion tests agree with each other on H(2, Paley(9))") {
    Scheme h2 = generalized_hamming(construct_catalog("paley", {9}), 2).scheme;
    CharacterTable table = character_table(h2);
    for (const auto& lp : schemefusion::fusion_label_table()) {
        CAPTURE(lp.label);
        CHECK(bm_test(table, lp.partition) == closure_fusion_test(h2, lp.partition));
    }
}

TEST_CASE("bm_test rejects a partition of the wrong domain") {
    CharacterTable t = character_table(construct_catalog("paley", {9}));
    CHECK(code_of([&] { bm_test(t, ClassPartition::trivial(6)); }) == errc::PartitionMismatch);
}

TEST_CASE("enumerating fusions of a rank-3 scheme finds identity and trivial") {
    auto results = enumerate_fusions(construct_catalog("paley", {9}));
    REQUIRE(results.size() == 2);
    CHECK(results[0].partition == ClassPartition::trivial(3));
    CHECK(results[0].rank == 2);
    CHECK(results[1].partition == ClassPartition::identity(3));
    CHECK(results[1].rank == 3);
}

TEST_CASE("H(2, Paley(9)) has exactly the eleven named fusions") {
    Scheme h2 = generalized_hamming(construct_catalog("paley", {9}), 2).scheme;
    auto results = enumerate_fusions(h2);
    const std::set<std::string> want = {"identity", "trivial",  "homogeneous", "(5)",
                                        "(5')",     "(6)",      "(7)",         "(8)",
                                        "(9)",      "(10)",     "(10')"};
    CHECK(labels_of(results) == want);
    // results come sorted by (rank, partition)
    for (size_t i = 1; i < results.size(); ++i) {
        CHECK((results[i - 1].rank < results[i].rank ||
               (results[i - 1].rank == results[i].rank &&
                results[i - 1].partition < results[i].partition)));
    }
}

TEST_CASE("H(2, Petersen) has only the unconditional fusions") {
    Scheme h2 = generalized_hamming(construct_catalog("petersen", {}), 2).scheme;
    auto results = enumerate_fusions(h2);
    const std::set<std::string> want = {"identity", "trivial", "homogeneous"};
    CHECK(labels_of(results) == want);
}

TEST_CASE("the three methods and any thread count produce identical lists") {
    Scheme h2 = generalized_hamming(construct_catalog("paley", {9}), 2).scheme;
    auto both = enumerate_fusions(h2, FusionMethod::Both, 1);
    auto bm = enumerate_fusions(h2, FusionMethod::Bm, 3);
    auto oracle = enumerate_fusions(h2, FusionMethod::Oracle, 8);
    REQUIRE(both.size() == bm.size());
    REQUIRE(both.size() == oracle.size());
    for (size_t i = 0; i < both.size(); ++i) {
        CHECK(both[i].partition == bm[i].partition);
        CHECK(both[i].partition == oracle[i].partition);
    }
}

TEST_CASE("fusion enumeration refuses ranks above 13") {
    Scheme k2 = construct_catalog("complete", {2});
    Scheme t = tensor_product(tensor_product(k2, k2), tensor_product(k2, k2));
    REQUIRE(t.rank() == 16);
    CHECK(code_of([&] { enumerate_fusions(t); }) == errc::RankTooLarge);
}

TEST_CASE("fused_scheme collapses H(2, Paley(9)) to srg(81, 16, 7, 2)") {
    Scheme h2 = generalized_hamming(construct_catalog("paley", {9}), 2).scheme;
    Scheme fused = fused_scheme(h2, partition_for_label("homogeneous"));
    CHECK(fused.order() == 81);
    CHECK(fused.rank() == 3);
    CHECK(fused.valencies() == std::vector<long long>{1, 16, 64});

    CharacterTable t = character_table(fused);
    const std::vector<std::vector<QuadNum>> want = {
        {QuadNum(1), QuadNum(16), QuadNum(64)},
        {QuadNum(1), QuadNum(7), QuadNum(-8)},
        {QuadNum(1), QuadNum(-2), QuadNum(1)},
    };
    CHECK(t.entries == want);
    CHECK(t.multiplicities == std::vector<long long>{1, 16, 64});
}

TEST_CASE("fused_scheme handles the trivial and identity partitions") {
    Scheme p9 = construct_catalog("paley", {9});
    Scheme trivial = fused_scheme(p9, ClassPartition::trivial(3));
    CHECK(trivial.rank() == 2);
    CHECK(trivial.valencies() == std::vector<long long>{1, 8});

    Scheme same = fused_scheme(p9, ClassPartition::identity(3));
    CHECK(same.rank() == 3);
    for (int i = 0; i < 3; ++i) CHECK(same.cls(i) == p9.cls(i));
}

TEST_CASE("fused_scheme throws NotAFusion on a non-fusion partition") {
    Scheme h2 = generalized_hamming(construct_catalog("paley", {9}), 2).scheme;
    CHECK(code_of([&] {
              fused_scheme(h2, blocks({{0}, {1}, {2}, {3}, {4, 5}}, 6));
          }) == errc::NotAFusion);
}

TEST_CASE("fusion_lift maps base partitions onto composition classes") {
    // rank-3 base, all classes merged: H(2) classes collapse to the
    // per-block coordinate counts (2), (1,1), (0,2)
    CHECK(fusion_lift(ClassPartition::trivial(3), 3, 2) ==
          partition_for_label("homogeneous"));
    // same base partition on 3 letters: 10 compositions, 4 count patterns
    CHECK(fusion_lift(ClassPartition::trivial(3), 3, 3) ==
          blocks({{0}, {1, 2}, {3, 4, 5}, {6, 7, 8, 9}}, 10));
    // the identity lifts to the identity
    CHECK(fusion_lift(ClassPartition::identity(3), 3, 2) == ClassPartition::identity(6));
    // a middle case: merging classes 1,2 of a rank-3 base
    ClassPartition mid = fusion_lift(blocks({{0}, {1, 2}}, 3), 3, 2);
    CHECK(mid == partition_for_label("homogeneous"));

    CHECK(code_of([] { fusion_lift(ClassPartition::trivial(3), 4, 2); }) ==
          errc::PartitionMismatch);
    CHECK(code_of([] { fusion_lift(ClassPartition::trivial(3), 3, 0); }) ==
          errc::BadParameter);
}

TEST_CASE("lifted fusions pass the closure oracle") {
    Scheme base = construct_catalog("paley", {9});
    Scheme h2 = generalized_hamming(base, 2).scheme;
    ClassPartition lifted = fusion_lift(ClassPartition::trivial(3), 3, 2);
    CHECK(closure_fusion_test(h2, lifted));
    CHECK(bm_test(character_table(h2), lifted));
}

TEST_CASE("isolating_fusions keeps partitions with the target as a block") {
    Scheme h2 = generalized_hamming(construct_catalog("paley", {9}), 2).scheme;

    // class 3 alone: only the fusion labeled (5) isolates it (identity excluded)
    auto iso = isolating_fusions(h2, {3});
    CHECK(labels_of(iso) == std::set<std::string>{"(5)"});

    // the whole non-identity set: only the trivial fusion
    auto all = isolating_fusions(h2, {1, 2, 3, 4, 5});
    CHECK(labels_of(all) == std::set<std::string>{"trivial"});

    // duplicates in the request are tolerated
    auto dup = isolating_fusions(h2, {3, 3});
    CHECK(labels_of(dup) == std::set<std::string>{"(5)"});

    Scheme pet = generalized_hamming(construct_catalog("petersen", {}), 2).scheme;
    CHECK(isolating_fusions(pet, {3}).empty());
}

TEST_CASE("isolating_fusions validates the target set") {
    Scheme p9 = construct_catalog("paley", {9});
    CHECK(code_of([&] { isolating_fusions(p9, {}); }) == errc::PartitionMismatch);
    CHECK(code_of([&] { isolating_fusions(p9, {0}); }) == errc::PartitionMismatch);
    CHECK(code_of([&] { isolating_fusions(p9, {3}); }) == errc::PartitionMismatch);
}
