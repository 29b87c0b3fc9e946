#include "schemefusion/scheme.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "schemefusion/errors.hpp"

namespace schemefusion {

long long order_limit() {
    if (const char* env = std::getenv("SCHEMEFUSION_ORDER_LIMIT")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 4096;
}

namespace {

std::string cell_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Scheme::Scheme(std::vector<BitMatrix> classes)
    : order_(classes.empty() ? 0 : classes[0].size()),
      classes_(std::move(classes)),
      cache_(std::make_shared<Cache>()) {
    if (classes_.empty()) throw Error(errc::BadParameter, "scheme needs at least one class");
    if (classes_[0] != BitMatrix::identity(order_))
        throw Error(errc::AxiomViolation, "class 0 must be the identity relation");

    int r = rank();
    cell_class_.assign(static_cast<size_t>(order_) * order_, 0);
    representative_.assign(r, {-1, -1});
    for (int i = 0; i < r; ++i) {
        for (int u = 0; u < order_; ++u) {
            const uint64_t* w = classes_[i].row(u);
            for (int k = 0; k < classes_[i].words_per_row(); ++k) {
                uint64_t word = w[k];
                while (word) {
                    int v = k * 64 + std::countr_zero(word);
                    word &= word - 1;
                    cell_class_[static_cast<size_t>(u) * order_ + v] = static_cast<uint16_t>(i);
                    if (representative_[i].first < 0) representative_[i] = {u, v};
                }
            }
        }
    }
    valencies_.resize(r);
    for (int i = 0; i < r; ++i) valencies_[i] = classes_[i].row_count(0);
    transpose_class_.resize(r);
    for (int i = 0; i < r; ++i) {
        auto [u, v] = representative_[i];
        transpose_class_[i] = (u < 0) ? i : class_of(v, u);
    }
}

bool Scheme::symmetric() const {
    for (int i = 0; i < rank(); ++i)
        if (transpose_class_[i] != i) return false;
    return true;
}

const std::vector<BitMatrix>& Scheme::transposes() const {
    std::call_once(cache_->transposes_once, [this] {
        cache_->transposes.reserve(classes_.size());
        for (const auto& m : classes_) cache_->transposes.push_back(m.transposed());
    });
    return cache_->transposes;
}

const std::vector<long long>& Scheme::p_tensor() const {
    std::call_once(cache_->ptensor_once, [this] {
        int r = rank();
        const auto& tr = transposes();
        std::vector<long long> t(static_cast<size_t>(r) * r * r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int l = 0; l < r; ++l) {
                    auto [u, v] = representative_[l];
                    t[(static_cast<size_t>(i) * r + j) * r + l] =
                        classes_[i].row_dot(u, tr[j], v);
                }
        cache_->ptensor = std::move(t);
    });
    return cache_->ptensor;
}

bool is_symmetric(const Scheme& scheme) { return scheme.symmetric(); }

namespace {

// Shared state for the axiom checks: cell classes and transposes are
// recomputed from the input matrices themselves, never trusted.
struct VerifyState {
    int n = 0;
    std::vector<uint16_t> cell;             // class index per cell (valid iff axiom 2 passed)
    std::vector<std::pair<int, int>> rep;   // first cell per class
    std::vector<BitMatrix> transposes;
};

AxiomCheck check_partition(const std::vector<BitMatrix>& ms, VerifyState& st) {
    AxiomCheck c{2, true, true, "", ""};
    int n = st.n;
    int r = static_cast<int>(ms.size());
    st.cell.assign(static_cast<size_t>(n) * n, 0xffff);
    st.rep.assign(r, {-1, -1});
    for (int i = 0; i < r; ++i) {
        if (ms[i].count() == 0) {
            c.pass = false;
            c.code = errc::AxiomViolation;
            c.detail = "class " + std::to_string(i) + " is empty";
            return c;
        }
    }
    for (int i = 0; i < r; ++i) {
        for (int u = 0; u < n; ++u) {
            const uint64_t* w = ms[i].row(u);
            for (int k = 0; k < ms[i].words_per_row(); ++k) {
                uint64_t word = w[k];
                while (word) {
                    int v = k * 64 + std::countr_zero(word);
                    word &= word - 1;
                    size_t idx = static_cast<size_t>(u) * n + v;
                    if (st.cell[idx] != 0xffff) {
                        c.pass = false;
                        c.code = errc::AxiomViolation;
                        c.detail = "classes " + std::to_string(st.cell[idx]) + " and " +
                                   std::to_string(i) + " overlap at cell " + cell_str(u, v);
                        return c;
                    }
                    st.cell[idx] = static_cast<uint16_t>(i);
                    if (st.rep[i].first < 0) st.rep[i] = {u, v};
                }
            }
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (st.cell[static_cast<size_t>(u) * n + v] == 0xffff) {
                c.pass = false;
                c.code = errc::AxiomViolation;
                c.detail = "cell " + cell_str(u, v) + " is covered by no class";
                return c;
            }
    return c;
}

AxiomCheck check_identity(const std::vector<BitMatrix>& ms, int n, int& identity_index) {
    AxiomCheck c{1, true, true, "", ""};
    BitMatrix id = BitMatrix::identity(n);
    identity_index = -1;
    for (size_t i = 0; i < ms.size(); ++i)
        if (ms[i] == id) {
            identity_index = static_cast<int>(i);
            return c;
        }
    c.pass = false;
    c.code = errc::AxiomViolation;
    c.detail = "no class equals the identity relation";
    return c;
}

AxiomCheck check_transpose_closure(const std::vector<BitMatrix>& ms, VerifyState& st) {
    AxiomCheck c{3, true, true, "", ""};
    st.transposes.clear();
    st.transposes.reserve(ms.size());
    for (const auto& m : ms) st.transposes.push_back(m.transposed());
    for (size_t i = 0; i < ms.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < ms.size() && !found; ++j)
            if (st.transposes[i] == ms[j]) found = true;
        if (!found) {
            c.pass = false;
            c.code = errc::AxiomViolation;
            c.detail = "transpose of class " + std::to_string(i) + " is not a class";
            return c;
        }
    }
    return c;
}

// Axiom 4 (products constant on classes) and, when requested, the data for
// axiom 5.  coeffs[i][j][l] is filled as products are verified.
AxiomCheck check_products(const std::vector<BitMatrix>& ms, VerifyState& st,
                          std::vector<long long>& coeffs) {
    AxiomCheck c{4, true, true, "", ""};
    int n = st.n;
    int r = static_cast<int>(ms.size());
    coeffs.assign(static_cast<size_t>(r) * r * r, -1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            long long* slot = &coeffs[(static_cast<size_t>(i) * r + j) * r];
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    long long val = ms[i].row_dot(u, st.transposes[j], v);
                    int l = st.cell[static_cast<size_t>(u) * n + v];
                    if (slot[l] < 0) {
                        slot[l] = val;
                    } else if (slot[l] != val) {
                        c.pass = false;
                        c.code = errc::NonConstantCoefficient;
                        c.detail = "product A_" + std::to_string(i) + "*A_" + std::to_string(j) +
                                   " takes values " + std::to_string(slot[l]) + " and " +
                                   std::to_string(val) + " on class " + std::to_string(l) +
                                   " (cell " + cell_str(u, v) + ")";
                        return c;
                    }
                }
            }
        }
    }
    return c;
}

AxiomCheck check_commutativity(int r, const std::vector<long long>& coeffs) {
    AxiomCheck c{5, true, true, "", ""};
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int l = 0; l < r; ++l) {
                long long ij = coeffs[(static_cast<size_t>(i) * r + j) * r + l];
                long long ji = coeffs[(static_cast<size_t>(j) * r + i) * r + l];
                if (ij != ji) {
                    c.pass = false;
                    c.code = errc::AxiomViolation;
                    c.detail = "A_" + std::to_string(i) + "*A_" + std::to_string(j) +
                               " and A_" + std::to_string(j) + "*A_" + std::to_string(i) +
                               " differ on class " + std::to_string(l) + " (" +
                               std::to_string(ij) + " vs " + std::to_string(ji) + ")";
                    return c;
                }
            }
    return c;
}

}  // namespace

SchemeReport verify_scheme(const std::vector<BitMatrix>& matrices, bool early_exit) {
    SchemeReport rep;
    if (matrices.empty())
        throw Error(errc::BadParameter, "verify_scheme needs at least one matrix");
    int n = matrices[0].size();
    for (const auto& m : matrices)
        if (m.size() != n)
            throw Error(errc::BadParameter, "all matrices must have the same size");
    if (n > order_limit())
        throw Error(errc::OrderLimitExceeded,
                    "order " + std::to_string(n) + " exceeds limit " +
                        std::to_string(order_limit()));
    rep.order = n;
    rep.rank = static_cast<int>(matrices.size());
    rep.axioms.assign(5, AxiomCheck{});
    for (int a = 0; a < 5; ++a) rep.axioms[a].axiom = a + 1;

    VerifyState st;
    st.n = n;

    rep.axioms[0] = check_identity(matrices, n, rep.identity_index);
    if (!rep.axioms[0].pass && early_exit) return rep;

    rep.axioms[1] = check_partition(matrices, st);
    if (!rep.axioms[1].pass && early_exit) return rep;

    rep.axioms[2] = check_transpose_closure(matrices, st);
    if (!rep.axioms[2].pass && early_exit) return rep;

    bool structural_ok = rep.axioms[1].pass;
    std::vector<long long> coeffs;
    if (structural_ok) {
        rep.axioms[3] = check_products(matrices, st, coeffs);
        if (!rep.axioms[3].pass && early_exit) return rep;
        if (rep.axioms[3].pass) {
            rep.axioms[4] = check_commutativity(rep.rank, coeffs);
        } else {
            rep.axioms[4].axiom = 5;
            rep.axioms[4].detail = "skipped: products are not constant on classes";
        }
    } else {
        rep.axioms[3].axiom = 4;
        rep.axioms[3].detail = "skipped: cells are not partitioned by the classes";
        rep.axioms[4].axiom = 5;
        rep.axioms[4].detail = "skipped: cells are not partitioned by the classes";
    }

    rep.pass = true;
    for (const auto& a : rep.axioms) rep.pass = rep.pass && a.checked && a.pass;
    if (rep.pass) {
        std::vector<BitMatrix> ordered = matrices;
        if (rep.identity_index != 0) std::swap(ordered[0], ordered[rep.identity_index]);
        rep.scheme.emplace(std::move(ordered));
        rep.valencies = rep.scheme->valencies();
        rep.symmetric = rep.scheme->symmetric();
    }
    return rep;
}

std::string scheme_to_text(const Scheme& scheme) {
    std::ostringstream os;
    os << scheme.order() << " " << scheme.rank() << "\n";
    for (int i = 0; i < scheme.rank(); ++i) {
        os << "\n";
        for (int u = 0; u < scheme.order(); ++u) {
            for (int v = 0; v < scheme.order(); ++v)
                os << (scheme.cls(i).get(u, v) ? '1' : '0');
            os << "\n";
        }
    }
    return os.str();
}

std::vector<BitMatrix> matrices_from_text(const std::string& text) {
    std::istringstream is(text);
    long long n = 0, r = 0;
    if (!(is >> n >> r) || n <= 0 || r <= 0)
        throw Error(errc::MalformedInput, "expected header \"n r\" with positive integers");
    if (n > order_limit())
        throw Error(errc::OrderLimitExceeded,
                    "order " + std::to_string(n) + " exceeds limit " +
                        std::to_string(order_limit()));
    std::vector<BitMatrix> ms;
    ms.reserve(r);
    std::string line;
    std::getline(is, line);  // consume rest of header line
    for (long long i = 0; i < r; ++i) {
        BitMatrix m(static_cast<int>(n));
        long long row = 0;
        while (row < n) {
            if (!std::getline(is, line))
                throw Error(errc::MalformedInput,
                            "unexpected end of input in class " + std::to_string(i));
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty()) continue;
            if (static_cast<long long>(line.size()) != n)
                throw Error(errc::MalformedInput,
                            "row of length " + std::to_string(line.size()) + ", expected " +
                                std::to_string(n));
            for (long long v = 0; v < n; ++v) {
                if (line[v] == '1')
                    m.set(static_cast<int>(row), static_cast<int>(v));
                else if (line[v] != '0')
                    throw Error(errc::MalformedInput,
                                std::string("unexpected character '") + line[v] + "' in matrix row");
            }
            ++row;
        }
        ms.push_back(std::move(m));
    }
    return ms;
}

Scheme scheme_from_text(const std::string& text) {
    auto ms = matrices_from_text(text);
    SchemeReport rep = verify_scheme(ms);
    if (!rep.pass) {
        for (const auto& a : rep.axioms)
            if (a.checked && !a.pass)
                throw Error(a.code.empty() ? errc::AxiomViolation : a.code,
                            "axiom " + std::to_string(a.axiom) + " fails: " + a.detail);
        throw Error(errc::AxiomViolation, "matrices do not form an association scheme");
    }
    return *rep.scheme;
}

}  // namespace schemefusion
