#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemefusion/fusion.hpp"
#include "schemefusion/quadnum.hpp"
#include "schemefusion/spectra.hpp"

namespace schemefusion {

// Strongly regular graph parameters (n, k, lambda, mu).
struct SrgParams {
    long long n = 0;       // vertices
    long long k = 0;       // degree
    long long lambda = 0;  // common neighbours of adjacent pairs
    long long mu = 0;      // common neighbours of non-adjacent pairs
};

// Exact SRG spectrum: degree k, complement degree ell = n-k-1, eigenvalues
// r >= 0 > s with multiplicities f, g.  Multiplicities are kept as exact
// rationals; integrality is a feasibility question, not a type invariant.
struct Spectrum {
    long long n = 0;
    QuadNum k, ell, r, s;
    mpq_class f, g;
};

// Validates the parameter ranges and the counting identity
// k(k-lambda-1) = (n-k-1) mu, then solves for the eigenvalues and
// multiplicities.  Errors: BadParameter, CountingIdentityViolated,
// DegenerateSpectrum (ell = 0, i.e. a complete graph).
Spectrum spectrum_from_params(const SrgParams& p);

// Same spectrum object built directly from (k, ell, r, s); n = k + ell + 1.
// Used for one-parameter families given by eigenvalue equations.
Spectrum spectrum_from_eigenvalues(const QuadNum& k, const QuadNum& ell, const QuadNum& r,
                                   const QuadNum& s);

// The two Krein inequalities
//   (r+1)(k+r+2rs) <= (k+r)(s+1)^2   and   (s+1)(k+s+2rs) <= (k+s)(r+1)^2
// as exact sign tests.
std::pair<bool, bool> krein_check(const Spectrum& sp);

struct FeasibilityReport {
    bool counting = false;                  // counting identity holds
    bool positive_multiplicities = false;   // f > 0 and g > 0
    bool integral_multiplicities = false;   // f, g are integers
    bool krein1 = false;
    bool krein2 = false;
    bool imprimitive = false;               // r = 0 or s = -1
    bool degenerate = false;                // complete graph (ell = 0)
    bool feasible = false;
    std::optional<Spectrum> spectrum;
};

// Composite standard feasibility screen; never throws.
FeasibilityReport feasibility_check(const SrgParams& p);

// Exact 6x6 character table of H(2, A) for an SRG scheme A with spectrum sp,
// written symbolically in (k, ell, r, s).  Columns are ordered
// [C1, C5, C9, C2+C4, C3+C7, C6+C8] (C-notation: C_{3i+j+1} = A_i x A_j);
// multiplicities are [1, 2f, 2g, f^2, 2fg, g^2], so f and g must be
// integers here (BadParameter otherwise).
CharacterTable symbolic_h2_table(const Spectrum& sp);

// Column permutations between the H(2,A) scheme's class order
// (decreasing-lex compositions) and the C-notation column order used by
// symbolic_h2_table above.
const std::vector<int>& h2_scheme_to_symbolic();
const std::vector<int>& h2_symbolic_to_scheme();

// Partition relabeled by image[c]; image must be a permutation fixing 0.
ClassPartition relabel_partition(const ClassPartition& p, const std::vector<int>& image);

// A family of SRG spectra, given by exact eigenvalue equations, whose H(2,A)
// admits extra fusions; `fusions` lists the labels of those fusions.
struct FamilyTag {
    std::string tag;          // T52i..T57ii, or "homogeneous"
    std::string description;  // the defining equations
    std::vector<std::string> fusions;
};

// All families whose defining equations the spectrum satisfies exactly, plus
// an unconditional final entry for the homogeneous fusion every H(2,A) has.
std::vector<FamilyTag> classify_families(const Spectrum& sp);

// The named fusion partitions of the 6 H(2,A) classes, in the scheme's class
// order.  Labels: "(1)".."(4)", "(1')".."(4')", "(5)", "(5')", "(6)".."(9)",
// "(10)", "(10')", "(11)", "(11')", "identity", "trivial", "homogeneous".
struct LabeledPartition {
    std::string label;
    ClassPartition partition;
};
const std::vector<LabeledPartition>& fusion_label_table();
ClassPartition partition_for_label(const std::string& label);  // UnknownName
std::optional<std::string> label_for_partition(const ClassPartition& p);

// Image of a partition under complementing the base graph, which swaps
// C2<->C3, C4<->C7, C5<->C9 and fixes C6<->C8 as a pair.  Accepts partitions
// of the 6 H(2,A) classes or of the 9 tensor classes; an involution.
ClassPartition switch_partner(const ClassPartition& partition);

// The 13 fusion partitions of the 9 tensor-square classes that exist for
// every rank-3 scheme, plus 3 more that need an asymmetric (tournament)
// base when symmetric = false.
std::vector<ClassPartition> universal_tensor_fusions(bool symmetric);

}  // namespace schemefusion
