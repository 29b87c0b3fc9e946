#pragma once

#include <vector>

#include "schemefusion/quadnum.hpp"
#include "schemefusion/scheme.hpp"

namespace schemefusion {

// Exact eigenvalue matrix of a commutative scheme: row u, column j holds the
// eigenvalue of A_j on the u-th common eigenspace.  Row 0 is the valency row;
// multiplicities are the eigenspace dimensions.
struct CharacterTable {
    long long order = 0;
    std::vector<std::vector<QuadNum>> entries;
    std::vector<long long> multiplicities;

    int rank() const { return static_cast<int>(entries.size()); }
    // Column valencies read off row 0 (must be rational integers).
    std::vector<long long> valencies() const;
    // Shared radicand of all entries (0 when the table is rational).
    long long radicand() const;
};

// B_i[l][j] = p_ij^l, the matrix of "multiply by A_i" on the scheme algebra.
// Character rows are its left eigenvectors: P_u B_i = P_ui * P_u.
std::vector<std::vector<std::vector<long long>>> intersection_matrices(const Scheme& scheme);

// Exact table over Q or a single quadratic extension Q(sqrt(d)).  Eigenvalues
// come from factoring each intersection matrix's characteristic polynomial
// into linear and quadratic integer factors; the common eigenspaces are then
// split iteratively over Q(sqrt(d)) until one-dimensional.  Multiplicities
// from m_u = n / sum_j P_uj conj(P_uj) / k_j.  Row order: valency row first,
// the rest in decreasing lexicographic order.
// Errors: IrreducibleCubicOrHigher when some eigenvalue needs a cubic or
// higher extension; MixedRadicands when two distinct radicands appear.
CharacterTable character_table(const Scheme& scheme);

// True iff both row-orthogonality identities hold exactly and the
// multiplicities sum to the order.
bool verify_orthogonality(const CharacterTable& table);

namespace detail {
// Characteristic polynomial, monic, coefficients in ascending degree order.
std::vector<mpq_class> char_poly(const std::vector<std::vector<long long>>& m);
// Distinct eigenvalues of an integer matrix with spectral radius <= bound.
std::vector<QuadNum> integer_matrix_eigenvalues(const std::vector<std::vector<long long>>& m,
                                                long long bound);
}  // namespace detail

}  // namespace schemefusion
