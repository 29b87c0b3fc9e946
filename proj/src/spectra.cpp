#include "schemefusion/spectra.hpp"

#include <algorithm>
#include <cstdlib>

#include "schemefusion/errors.hpp"

namespace schemefusion {

std::vector<long long> CharacterTable::valencies() const {
    std::vector<long long> ks;
    ks.reserve(entries.empty() ? 0 : entries[0].size());
    for (const auto& e : entries[0]) {
        const mpq_class& v = e.as_rational();
        if (v.get_den() != 1 || v <= 0)
            throw Error(errc::InternalDisagreement, "valency row entry " + e.str() +
                                                        " is not a positive integer");
        ks.push_back(v.get_num().get_si());
    }
    return ks;
}

long long CharacterTable::radicand() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (e.radicand() != 0) return e.radicand();
    return 0;
}

std::vector<std::vector<std::vector<long long>>> intersection_matrices(const Scheme& scheme) {
    int r = scheme.rank();
    std::vector<std::vector<std::vector<long long>>> bs(
        r, std::vector<std::vector<long long>>(r, std::vector<long long>(r)));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l)
            for (int j = 0; j < r; ++j) bs[i][l][j] = scheme.p(i, j, l);
    return bs;
}

namespace detail {

// Polynomials are coefficient vectors in ascending degree order.  All
// routines below preserve monic-ness where stated; degrees stay <= rank.
using Poly = std::vector<mpq_class>;

namespace {

int pdeg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void strip(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

mpq_class eval(const Poly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int k = pdeg(p); k >= 0; --k) acc = acc * x + p[k];
    return acc;
}

// Quotient of p by (x - t); valid only when the remainder is zero.
bool deflate_linear(Poly& p, const mpq_class& t) {
    Poly q(p.size() - 1);
    mpq_class carry = 0;
    for (int k = pdeg(p); k >= 1; --k) {
        carry = p[k] + carry * t;
        q[k - 1] = carry;
    }
    if (p[0] + carry * t != 0) return false;
    p = std::move(q);
    return true;
}

// Long division; returns true and replaces p by the quotient iff the monic
// divisor d divides p exactly.
bool divide_exact(Poly& p, const Poly& d) {
    if (pdeg(p) < pdeg(d)) return false;
    Poly rem = p;
    Poly quot(pdeg(p) - pdeg(d) + 1, 0);
    for (int k = pdeg(p); k >= pdeg(d); --k) {
        mpq_class c = rem[k];
        if (c == 0) continue;
        quot[k - pdeg(d)] = c;
        for (int j = 0; j <= pdeg(d); ++j) rem[k - pdeg(d) + j] -= c * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    p = std::move(quot);
    strip(p);
    return true;
}

Poly poly_mod(Poly a, const Poly& b) {
    for (int k = pdeg(a); k >= pdeg(b); --k) {
        mpq_class c = a[k] / b[pdeg(b)];
        if (c == 0) continue;
        for (int j = 0; j <= pdeg(b); ++j) a[k - pdeg(b) + j] -= c * b[j];
    }
    strip(a);
    return a;
}

void make_monic(Poly& p) {
    strip(p);
    mpq_class lead = p.back();
    if (lead == 1) return;
    for (auto& c : p) c /= lead;
}

bool is_zero_poly(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Poly poly_gcd(Poly a, Poly b) {
    strip(a);
    strip(b);
    while (!is_zero_poly(b)) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

// p(c - x): composition with the reflection that pairs conjugate roots.
Poly reflect(const Poly& p, const mpq_class& c) {
    Poly result{0};
    Poly power{1};
    Poly lin{c, -1};
    for (int k = 0; k <= pdeg(p); ++k) {
        if (result.size() < power.size()) result.resize(power.size(), 0);
        for (size_t j = 0; j < power.size(); ++j) result[j] += p[k] * power[j];
        if (k < pdeg(p)) {
            Poly next(power.size() + 1, 0);
            for (size_t j = 0; j < power.size(); ++j) {
                next[j] += power[j] * lin[0];
                next[j + 1] += power[j] * lin[1];
            }
            power = std::move(next);
        }
    }
    strip(result);
    return result;
}

long long to_ll(const mpq_class& v, const char* what) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw Error(errc::InternalDisagreement, std::string(what) + " is not a small integer");
    return v.get_num().get_si();
}

bool perfect_square(const mpz_class& v, mpz_class& root) {
    if (v < 0) return false;
    root = sqrt(v);
    return root * root == v;
}

// Record both roots of the monic factor x^2 + b x + c.
void push_quadratic_roots(std::vector<QuadNum>& out, const mpq_class& b, const mpq_class& c) {
    mpq_class disc_q = b * b - 4 * c;
    long long disc = to_ll(disc_q, "quadratic discriminant");
    out.push_back(QuadNum::make(-b / 2, mpq_class(1, 2), disc));
    out.push_back(QuadNum::make(-b / 2, mpq_class(-1, 2), disc));
}

}  // namespace

std::vector<mpq_class> char_poly(const std::vector<std::vector<long long>>& m) {
    // Faddeev-LeVerrier: exact, division only by small integers.
    int r = static_cast<int>(m.size());
    std::vector<std::vector<mpq_class>> mq(r, std::vector<mpq_class>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) mq[i][j] = static_cast<long>(m[i][j]);
    Poly c(r + 1, 0);
    c[r] = 1;
    std::vector<std::vector<mpq_class>> nk = mq;
    for (int k = 1; k <= r; ++k) {
        if (k > 1) {
            // nk = mq * (nk + c[r-k+1] * I)
            std::vector<std::vector<mpq_class>> shifted = nk;
            for (int i = 0; i < r; ++i) shifted[i][i] += c[r - k + 1];
            std::vector<std::vector<mpq_class>> prod(r, std::vector<mpq_class>(r, 0));
            for (int i = 0; i < r; ++i)
                for (int l = 0; l < r; ++l) {
                    if (mq[i][l] == 0) continue;
                    for (int j = 0; j < r; ++j) prod[i][j] += mq[i][l] * shifted[l][j];
                }
            nk = std::move(prod);
        }
        mpq_class tr = 0;
        for (int i = 0; i < r; ++i) tr += nk[i][i];
        c[r - k] = -tr / k;
    }
    return c;
}

std::vector<QuadNum> integer_matrix_eigenvalues(const std::vector<std::vector<long long>>& m,
                                                long long bound) {
    Poly p = char_poly(m);
    std::vector<QuadNum> eig;

    // Integer roots: a monic integer polynomial has all rational roots
    // integral, and every eigenvalue is bounded by the valency.
    for (long long t = bound; t >= -bound && pdeg(p) > 0; --t) {
        mpq_class tq(static_cast<long>(t));
        if (eval(p, tq) != 0) continue;
        eig.push_back(QuadNum(mpq_class(static_cast<long>(t))));
        while (pdeg(p) > 0 && eval(p, tq) == 0) deflate_linear(p, tq);
    }

    // Quadratic factors x^2 + b x + c: the trace -b of a conjugate root pair
    // is an integer in [-2*bound, 2*bound].  gcd(p(x), p(-b - x)) isolates
    // the factors whose roots pair up under theta -> -b - theta.
    for (long long pt = 0; pdeg(p) > 2 && pt <= 4 * bound + 1; ++pt) {
        long long b = (pt % 2 == 0) ? pt / 2 : -(pt / 2 + 1);  // 0, -1, 1, -2, 2, ...
        Poly refl = reflect(p, mpq_class(static_cast<long>(-b)));
        make_monic(refl);
        Poly g = poly_gcd(p, refl);
        if (pdeg(g) < 2) continue;
        if (pdeg(g) == 2) {
            // Any monic quadratic divisor of p is a genuine factor.
            while (divide_exact(p, g)) {
            }
            push_quadratic_roots(eig, g[1], g[0]);
            continue;
        }
        if (pdeg(g) == 4 && g[3] == 2 * mpq_class(static_cast<long>(b))) {
            // Two factors x^2+bx+c1, x^2+bx+c2: c1+c2 and c1*c2 are read off
            // g's coefficients, so c1, c2 solve an integer quadratic.
            mpq_class bq(static_cast<long>(b));
            mpq_class sum = g[2] - bq * bq;
            mpq_class prod = g[0];
            mpz_class disc_num = mpq_class(sum * sum - 4 * prod).get_num();
            mpz_class root;
            if (perfect_square(disc_num, root)) {
                for (int sign : {+1, -1}) {
                    mpq_class c = (sum + sign * mpq_class(root)) / 2;
                    Poly q{c, bq, 1};
                    bool divided = false;
                    while (divide_exact(p, q)) divided = true;
                    if (divided) push_quadratic_roots(eig, q[1], q[0]);
                }
            }
            continue;
        }
        // Rare many-way trace collision: every factor's constant term c has
        // |c| <= bound^2, so a bounded scan stays exact.
        for (long long c = -bound * bound; c <= bound * bound && pdeg(p) > 2; ++c) {
            Poly q{mpq_class(static_cast<long>(c)), mpq_class(static_cast<long>(b)), 1};
            bool divided = false;
            while (divide_exact(p, q)) divided = true;
            if (divided) push_quadratic_roots(eig, q[1], q[0]);
        }
    }
    if (pdeg(p) == 2) {
        push_quadratic_roots(eig, p[1], p[0]);
        p = {mpq_class(1)};
    }
    if (pdeg(p) > 0)
        throw Error(errc::IrreducibleCubicOrHigher,
                    "characteristic polynomial has an irreducible factor of degree " +
                        std::to_string(pdeg(p)));
    return eig;
}

}  // namespace detail

namespace {

using QVec = std::vector<QuadNum>;

// Basis of {x : W x = 0} for the r x c matrix W (rows indexed first).
std::vector<QVec> nullspace(std::vector<QVec> w, int cols) {
    int rows = static_cast<int>(w.size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (!w[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(w[row], w[pr]);
        QuadNum inv = QuadNum(1) / w[row][col];
        for (int j = col; j < cols; ++j) w[row][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || w[i][col].is_zero()) continue;
            QuadNum f = w[i][col];
            for (int j = col; j < cols; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, QuadNum(0));
        v[free] = QuadNum(1);
        for (size_t pi = 0; pi < pivot_col.size(); ++pi) v[pivot_col[pi]] = -w[pi][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

CharacterTable character_table(const Scheme& scheme) {
    int r = scheme.rank();
    long long n = scheme.order();
    CharacterTable table;
    table.order = n;
    if (r == 1) {
        table.entries = {{QuadNum(1)}};
        table.multiplicities = {n};
        return table;
    }

    auto bs = intersection_matrices(scheme);
    const auto& ks = scheme.valencies();

    // Eigenvalues of every intersection matrix, all in one quadratic field.
    std::vector<std::vector<QuadNum>> eig(r);
    long long shared_d = 0;
    for (int i = 1; i < r; ++i) {
        eig[i] = detail::integer_matrix_eigenvalues(bs[i], ks[i]);
        for (const auto& e : eig[i]) {
            if (e.radicand() == 0) continue;
            if (shared_d == 0)
                shared_d = e.radicand();
            else if (shared_d != e.radicand())
                throw Error(errc::MixedRadicands,
                            "eigenvalues span sqrt(" + std::to_string(shared_d) +
                                ") and sqrt(" + std::to_string(e.radicand()) + ")");
        }
    }

    // Split the common left-eigenspaces: subspaces of Q(sqrt d)^r, refined by
    // each M_i = B_i^T until every piece is one-dimensional.  Each surviving
    // vector, scaled so its identity coordinate is 1, is a character row.
    std::vector<std::vector<QVec>> subspaces;
    {
        std::vector<QVec> full;
        for (int j = 0; j < r; ++j) {
            QVec e(r, QuadNum(0));
            e[j] = QuadNum(1);
            full.push_back(std::move(e));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        bool all_one = true;
        for (const auto& s : subspaces) all_one = all_one && s.size() == 1;
        if (all_one) break;
        std::vector<std::vector<QVec>> next;
        for (auto& sub : subspaces) {
            int dim = static_cast<int>(sub.size());
            if (dim == 1) {
                next.push_back(std::move(sub));
                continue;
            }
            int found = 0;
            for (const auto& theta : eig[i]) {
                // W columns: (M_i - theta I) v for each basis vector v, with
                // M_i[j][l] = p(i, j, l).
                std::vector<QVec> w(r, QVec(dim, QuadNum(0)));
                for (int c = 0; c < dim; ++c)
                    for (int j = 0; j < r; ++j) {
                        QuadNum acc(0);
                        for (int l = 0; l < r; ++l) {
                            long long pij = scheme.p(i, j, l);
                            if (pij == 0) continue;
                            acc += QuadNum(mpq_class(static_cast<long>(pij))) * sub[c][l];
                        }
                        acc -= theta * sub[c][j];
                        w[j][c] = std::move(acc);
                    }
                auto null_basis = nullspace(std::move(w), dim);
                if (null_basis.empty()) continue;
                std::vector<QVec> piece;
                for (const auto& coeffs : null_basis) {
                    QVec v(r, QuadNum(0));
                    for (int c = 0; c < dim; ++c) {
                        if (coeffs[c].is_zero()) continue;
                        for (int j = 0; j < r; ++j) v[j] += coeffs[c] * sub[c][j];
                    }
                    piece.push_back(std::move(v));
                }
                found += static_cast<int>(piece.size());
                next.push_back(std::move(piece));
            }
            if (found != dim)
                throw Error(errc::InternalDisagreement,
                            "eigenspace refinement lost dimensions at class " +
                                std::to_string(i));
        }
        subspaces = std::move(next);
    }

    std::vector<QVec> rows;
    for (auto& sub : subspaces) {
        if (sub.size() != 1)
            throw Error(errc::InternalDisagreement,
                        "common eigenspace of dimension " + std::to_string(sub.size()));
        QVec v = std::move(sub[0]);
        if (v[0].is_zero())
            throw Error(errc::InternalDisagreement, "character with zero identity coordinate");
        QuadNum inv = QuadNum(1) / v[0];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
    }

    // Valency row first, the rest in decreasing lexicographic order.
    int valency_row = -1;
    for (size_t u = 0; u < rows.size(); ++u) {
        bool all = true;
        for (int j = 0; j < r && all; ++j)
            all = rows[u][j] == QuadNum(mpq_class(static_cast<long>(ks[j])));
        if (all) {
            valency_row = static_cast<int>(u);
            break;
        }
    }
    if (valency_row < 0)
        throw Error(errc::InternalDisagreement, "no valency row among the characters");
    std::swap(rows[0], rows[valency_row]);
    std::sort(rows.begin() + 1, rows.end(), [r](const QVec& a, const QVec& b) {
        for (int j = 0; j < r; ++j) {
            int c = QuadNum::compare(a[j], b[j]);
            if (c != 0) return c > 0;
        }
        return false;
    });

    table.entries = std::move(rows);
    table.multiplicities.resize(r);
    for (int u = 0; u < r; ++u) {
        QuadNum sum(0);
        for (int j = 0; j < r; ++j)
            sum += table.entries[u][j] * table.entries[u][j].conj() /
                   QuadNum(mpq_class(static_cast<long>(ks[j])));
        if (!sum.is_rational())
            throw Error(errc::InternalDisagreement, "row norm " + sum.str() + " is irrational");
        mpq_class mu = mpq_class(static_cast<long>(n)) / sum.as_rational();
        if (mu.get_den() != 1 || mu <= 0)
            throw Error(errc::InternalDisagreement,
                        "multiplicity " + QuadNum(mu).str() + " is not a positive integer");
        table.multiplicities[u] = mu.get_num().get_si();
    }
    return table;
}

bool verify_orthogonality(const CharacterTable& table) {
    int r = table.rank();
    if (r == 0 || static_cast<int>(table.multiplicities.size()) != r) return false;
    std::vector<QuadNum> kq;
    for (int j = 0; j < r; ++j) {
        const QuadNum& e = table.entries[0][j];
        if (!e.is_rational() || e.as_rational() <= 0) return false;
        kq.push_back(e);
    }
    long long msum = 0;
    for (int u = 0; u < r; ++u) msum += table.multiplicities[u];
    if (msum != table.order) return false;
    for (int u = 0; u < r; ++u)
        for (int v = u; v < r; ++v) {
            QuadNum sum(0);
            for (int j = 0; j < r; ++j)
                sum += table.entries[u][j] * table.entries[v][j].conj() / kq[j];
            if (u == v) {
                if (!sum.is_rational()) return false;
                if (sum.as_rational() * static_cast<long>(table.multiplicities[u]) !=
                    static_cast<long>(table.order))
                    return false;
            } else if (!sum.is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace schemefusion
