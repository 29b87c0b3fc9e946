#pragma once

#include <string>
#include <vector>

#include "schemefusion/bitmatrix.hpp"
#include "schemefusion/scheme.hpp"

namespace schemefusion {

// Named scheme catalog.  Every entry is built directly from its defining
// combinatorial description; tests re-verify each one through the axiom
// checker.  Unknown names raise UnknownName, bad arity or out-of-range
// values raise BadParameter.
//
//   complete n            rank-2 scheme on K_n
//   paley q               Paley graph, q prime with q = 1 mod 4, or q = 9
//   paley_tournament q    Paley tournament, q prime with q = 3 mod 4
//   petersen              Kneser graph K(5,2)
//   clebsch               folded 5-cube, srg(16,5,0,2)
//   rook m                m x m rook's graph
//   union_complete m r    m disjoint copies of K_{r+1}
//   multipartite m r      complete multipartite graph, m parts of size r+1
Scheme construct_catalog(const std::string& name, const std::vector<long long>& params);

struct CatalogEntry {
    std::string name;
    std::string params;  // human-readable parameter signature
    std::string summary;
};
std::vector<CatalogEntry> catalog_list();

// Tensor (direct) product: vertex set V_A x V_B, classes A_i (x) B_j in
// lexicographic (i, j) order, so class index = i * rank(B) + j and the
// identity (0, 0) lands at index 0.
Scheme tensor_product(const Scheme& a, const Scheme& b);

// Wreath-type product: classes A_i (x) I_B for every i, followed by
// J_A (x) B_j for j >= 1.  Rank = rank(A) + rank(B) - 1.
Scheme wreath_product(const Scheme& a, const Scheme& b);

// Generalized Hamming scheme H(n, A) on n-tuples of base vertices: the
// class of a pair is the composition vector counting, per base class, the
// coordinates lying in it.  Classes are ordered by decreasing lexicographic
// composition, putting (n, 0, ..., 0) - the identity - first.
struct GeneralizedHamming {
    Scheme scheme;
    std::vector<std::vector<int>> compositions;  // compositions[c] has rank(A) entries
};
GeneralizedHamming generalized_hamming(const Scheme& base, int n);

// The compositions of n into `rank` parts in the order generalized_hamming
// assigns them to classes (decreasing lexicographic).
std::vector<std::vector<int>> hamming_compositions(int rank, int n);

// Classical Hamming scheme H(n, q) = generalized Hamming over K_q.
Scheme hamming(int n, int q);

// graph6 adjacency parser (optionally prefixed with ">>graph6<<").
BitMatrix parse_graph6(const std::string& text);

// {I, A, J - I - A} with empty relations dropped, for feeding a simple
// graph into verify_scheme.  dropped counts the removed empty classes.
struct GraphClasses {
    std::vector<BitMatrix> classes;
    int dropped = 0;
};
GraphClasses graph_scheme_classes(const BitMatrix& adjacency);

}  // namespace schemefusion
