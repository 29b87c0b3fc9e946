#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schemefusion/bitmatrix.hpp"

namespace schemefusion {

// Soft cap on the number of vertices accepted by constructions, ingestion
// and verification; overridable via the SCHEMEFUSION_ORDER_LIMIT variable.
long long order_limit();

// A verified commutative association scheme: classes_[0] is the identity
// relation, the classes partition the cells, the class set is closed under
// transposition, products A_i A_j are constant on every class, and all
// products commute.  Construction trusts the caller on everything except
// the identity-first convention; verify_scheme() is the checked entrance.
class Scheme {
public:
    explicit Scheme(std::vector<BitMatrix> classes);

    int order() const { return order_; }
    int rank() const { return static_cast<int>(classes_.size()); }
    const std::vector<BitMatrix>& classes() const { return classes_; }
    const BitMatrix& cls(int i) const { return classes_[i]; }
    const std::vector<long long>& valencies() const { return valencies_; }

    int class_of(int u, int v) const {
        return cell_class_[static_cast<size_t>(u) * order_ + v];
    }
    const std::vector<uint16_t>& cell_classes() const { return cell_class_; }

    // Index i' with A_{i'} = A_i transposed.
    int transpose_class(int i) const { return transpose_class_[i]; }
    bool symmetric() const;

    // Cached transposed class matrices (columns as rows), shared across copies.
    const std::vector<BitMatrix>& transposes() const;

    // Intersection numbers p_{ij}^l = |{w : (u,w) in R_i, (w,v) in R_j}| for
    // any (u,v) in R_l, laid out as a flat rank^3 array [i][j][l].
    const std::vector<long long>& p_tensor() const;
    long long p(int i, int j, int l) const {
        const auto& t = p_tensor();
        int r = rank();
        return t[(static_cast<size_t>(i) * r + j) * r + l];
    }

private:
    struct Cache {
        std::once_flag transposes_once;
        std::once_flag ptensor_once;
        std::vector<BitMatrix> transposes;
        std::vector<long long> ptensor;
    };

    int order_;
    std::vector<BitMatrix> classes_;
    std::vector<long long> valencies_;
    std::vector<uint16_t> cell_class_;
    std::vector<int> transpose_class_;
    std::vector<std::pair<int, int>> representative_;  // first cell of each class
    std::shared_ptr<Cache> cache_;
};

// Outcome of one axiom check.  Axioms are numbered 1-5: identity class,
// cell partition (with nonempty classes), transpose closure, constant
// structure constants, commutativity.
struct AxiomCheck {
    int axiom = 0;
    bool checked = false;
    bool pass = false;
    std::string code;    // error code when failing, empty otherwise
    std::string detail;  // human-readable witness
};

struct SchemeReport {
    bool pass = false;
    int order = 0;
    int rank = 0;
    int identity_index = -1;  // position of the identity among the inputs
    std::vector<long long> valencies;
    bool symmetric = false;
    std::vector<AxiomCheck> axioms;
    std::optional<Scheme> scheme;  // present iff pass
};

// Checks the five axioms on arbitrary 0/1 matrices and, on success, returns
// the Scheme with the identity moved to index 0.  With early_exit the check
// stops at the first violated axiom (remaining ones are reported unchecked);
// otherwise every axiom that is still meaningful gets a verdict.
SchemeReport verify_scheme(const std::vector<BitMatrix>& matrices, bool early_exit = false);

bool is_symmetric(const Scheme& scheme);

// Plain-text interchange format: header "n r", then r blocks of n rows of
// '0'/'1' characters.  Blank lines between blocks are optional on input.
std::string scheme_to_text(const Scheme& scheme);
std::vector<BitMatrix> matrices_from_text(const std::string& text);
Scheme scheme_from_text(const std::string& text);

}  // namespace schemefusion
