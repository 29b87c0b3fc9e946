#include <doctest.h>

#include <algorithm>
#include <vector>

#include "schemefusion/bitmatrix.hpp"
#include "schemefusion/constructions.hpp"
#include "schemefusion/errors.hpp"
#include "schemefusion/quadnum.hpp"
#include "schemefusion/scheme.hpp"
#include "schemefusion/spectra.hpp"

using schemefusion::BitMatrix;
using schemefusion::CharacterTable;
using schemefusion::Error;
using schemefusion::QuadNum;
using schemefusion::Scheme;
using schemefusion::character_table;
using schemefusion::construct_catalog;
using schemefusion::intersection_matrices;
using schemefusion::tensor_product;
using schemefusion::verify_orthogonality;
using schemefusion::verify_scheme;
namespace errc = schemefusion::errc;

namespace {

QuadNum half(long a_num, long b_num, long long m) {
    return QuadNum::make(mpq_class(a_num, 2), mpq_class(b_num, 2), m);
}

std::vector<std::vector<QuadNum>> rational_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<QuadNum>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace

TEST_CASE("intersection matrices of the rank-2 scheme on K_5") {
    Scheme s = construct_catalog("complete", {5});
    auto b = intersection_matrices(s);
    REQUIRE(b.size() == 2);
    // B_i[l][j] = p_ij^l
    CHECK(b[0] == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    CHECK(b[1] == std::vector<std::vector<long long>>{{0, 4}, {1, 3}});
}

TEST_CASE("characteristic polynomial of B_1 for the Paley graph on 9 vertices") {
    Scheme s = construct_catalog("paley", {9});
    auto b = intersection_matrices(s);
    auto poly = schemefusion::detail::char_poly(b[1]);
    // (x - 4)(x - 1)(x + 2) = x^3 - 3x^2 - 6x + 8, ascending coefficients
    const std::vector<mpq_class> want = {8, -6, -3, 1};
    CHECK(poly == want);
}

TEST_CASE("eigenvalues of an integer matrix, linear and quadratic factors") {
    Scheme s = construct_catalog("paley", {9});
    auto eig = schemefusion::detail::integer_matrix_eigenvalues(
        intersection_matrices(s)[1], 4);
    std::sort(eig.begin(), eig.end());
    CHECK(eig == std::vector<QuadNum>{QuadNum(-2), QuadNum(1), QuadNum(4)});

    Scheme p5 = construct_catalog("paley", {5});
    auto eig5 = schemefusion::detail::integer_matrix_eigenvalues(
        intersection_matrices(p5)[1], 2);
    std::sort(eig5.begin(), eig5.end());
    CHECK(eig5 == std::vector<QuadNum>{half(-1, -1, 5), half(-1, 1, 5), QuadNum(2)});
}

TEST_CASE("character table of Paley(9) is rational and exact") {
    CharacterTable t = character_table(construct_catalog("paley", {9}));
    CHECK(t.order == 9);
    CHECK(t.rank() == 3);
    CHECK(t.radicand() == 0);
    CHECK(t.entries == rational_rows({{1, 4, 4}, {1, 1, -2}, {1, -2, 1}}));
    CHECK(t.multiplicities == std::vector<long long>{1, 4, 4});
    CHECK(t.valencies() == std::vector<long long>{1, 4, 4});
    CHECK(verify_orthogonality(t));
}

TEST_CASE("character table of the pentagon lives in Q(sqrt(5))") {
    CharacterTable t = character_table(construct_catalog("paley", {5}));
    CHECK(t.order == 5);
    CHECK(t.radicand() == 5);
    const std::vector<std::vector<QuadNum>> want = {
        {QuadNum(1), QuadNum(2), QuadNum(2)},
        {QuadNum(1), half(-1, 1, 5), half(-1, -1, 5)},
        {QuadNum(1), half(-1, -1, 5), half(-1, 1, 5)},
    };
    CHECK(t.entries == want);
    CHECK(t.multiplicities == std::vector<long long>{1, 2, 2});
    CHECK(verify_orthogonality(t));
}

TEST_CASE("character table of the Paley tournament needs Q(sqrt(-7))") {
    CharacterTable t = character_table(construct_catalog("paley_tournament", {7}));
    CHECK(t.order == 7);
    CHECK(t.radicand() == -7);
    const std::vector<std::vector<QuadNum>> want = {
        {QuadNum(1), QuadNum(3), QuadNum(3)},
        {QuadNum(1), half(-1, 1, -7), half(-1, -1, -7)},
        {QuadNum(1), half(-1, -1, -7), half(-1, 1, -7)},
    };
    CHECK(t.entries == want);
    CHECK(t.multiplicities == std::vector<long long>{1, 3, 3});
    CHECK(verify_orthogonality(t));
}

TEST_CASE("imprimitive tables: disjoint cliques and complete multipartite") {
    // 3 copies of K_3: eigenvalue k = 2 repeats on the component space
    CharacterTable uc = character_table(construct_catalog("union_complete", {3, 2}));
    CHECK(uc.entries == rational_rows({{1, 2, 6}, {1, 2, -3}, {1, -1, 0}}));
    CHECK(uc.multiplicities == std::vector<long long>{1, 2, 6});
    CHECK(verify_orthogonality(uc));

    // 2 copies of K_4
    CharacterTable uc2 = character_table(construct_catalog("union_complete", {2, 3}));
    CHECK(uc2.entries == rational_rows({{1, 3, 4}, {1, 3, -4}, {1, -1, 0}}));
    CHECK(uc2.multiplicities == std::vector<long long>{1, 1, 6});
    CHECK(verify_orthogonality(uc2));

    CharacterTable mp = character_table(construct_catalog("multipartite", {3, 2}));
    CHECK(mp.entries == rational_rows({{1, 6, 2}, {1, 0, -1}, {1, -3, 2}}));
    CHECK(mp.multiplicities == std::vector<long long>{1, 6, 2});
    CHECK(verify_orthogonality(mp));
}

TEST_CASE("row order: valency row first, the rest in decreasing lexicographic order") {
    CharacterTable t = character_table(construct_catalog("petersen", {}));
    CHECK(t.entries == rational_rows({{1, 3, 6}, {1, 1, -2}, {1, -2, 1}}));
    CHECK(t.multiplicities == std::vector<long long>{1, 5, 4});
}

TEST_CASE("a cubic eigenvalue is refused with IrreducibleCubicOrHigher") {
    // symmetrized cyclic scheme on Z_7: classes {+-1}, {+-2}, {+-3}; the
    // eigenvalues 2cos(2 pi j / 7) have minimal polynomial x^3 + x^2 - 2x - 1
    int n = 7;
    std::vector<BitMatrix> classes(4, BitMatrix(n));
    for (int u = 0; u < n; ++u) {
        classes[0].set(u, u);
        for (int step = 1; step <= 3; ++step) {
            classes[step].set(u, (u + step) % n);
            classes[step].set(u, (u - step + n) % n);
        }
    }
    auto rep = verify_scheme(classes);
    REQUIRE(rep.pass);
    try {
        character_table(*rep.scheme);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::IrreducibleCubicOrHigher);
    }
}

TEST_CASE("two incompatible radicands in one scheme raise MixedRadicands") {
    Scheme t = tensor_product(construct_catalog("paley", {5}),
                              construct_catalog("paley", {13}));
    try {
        character_table(t);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::MixedRadicands);
    }
}

TEST_CASE("tensor products stay inside one field when the radicands agree") {
    Scheme t = tensor_product(construct_catalog("paley", {5}),
                              construct_catalog("paley", {5}));
    CharacterTable tab = character_table(t);
    CHECK(tab.rank() == 9);
    CHECK(tab.radicand() == 5);
    CHECK(verify_orthogonality(tab));
    long long total = 0;
    for (long long m : tab.multiplicities) total += m;
    CHECK(total == 25);
}

TEST_CASE("verify_orthogonality rejects tampered tables") {
    CharacterTable t = character_table(construct_catalog("paley", {9}));
    REQUIRE(verify_orthogonality(t));

    CharacterTable wrong_entry = t;
    wrong_entry.entries[1][1] = wrong_entry.entries[1][1] + QuadNum(1);
    CHECK(!verify_orthogonality(wrong_entry));

    CharacterTable wrong_mult = t;
    wrong_mult.multiplicities = {1, 5, 3};  // still sums to 9
    CHECK(!verify_orthogonality(wrong_mult));

    CharacterTable wrong_sum = t;
    wrong_sum.multiplicities = {1, 4, 5};  // right shape, wrong total
    CHECK(!verify_orthogonality(wrong_sum));

    CharacterTable swapped = t;
    std::swap(swapped.entries[1], swapped.entries[2]);  // rows no longer match mults
    CHECK(verify_orthogonality(swapped));  // symmetric multiplicities: still consistent
    std::swap(swapped.multiplicities[0], swapped.multiplicities[1]);
    CHECK(!verify_orthogonality(swapped));
}

TEST_CASE("character tables of wreath products are exact") {
    Scheme w = schemefusion::wreath_product(construct_catalog("complete", {3}),
                                            construct_catalog("complete", {3}));
    CharacterTable t = character_table(w);
    CHECK(t.rank() == 3);
    CHECK(t.order == 9);
    // wreath of K_3 over K_3: valencies 1, 2, 6; eigenvalues of the inner
    // class: 2 and -1 on tuple-aligned spaces, of the outer: 6, 0, -3
    CHECK(t.entries == rational_rows({{1, 2, 6}, {1, 2, -3}, {1, -1, 0}}));
    CHECK(verify_orthogonality(t));
}
