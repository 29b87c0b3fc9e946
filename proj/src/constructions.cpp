#include "schemefusion/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "schemefusion/errors.hpp"

namespace schemefusion {

namespace {

void check_order(long long n) {
    if (n > order_limit())
        throw Error(errc::OrderLimitExceeded,
                    "order " + std::to_string(n) + " exceeds limit " +
                        std::to_string(order_limit()));
}

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

// {I, A, J-I-A} for a graph known to induce a rank-3 scheme.
std::vector<BitMatrix> srg_classes(const BitMatrix& adj) {
    int n = adj.size();
    BitMatrix rest(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !adj.get(u, v)) rest.set(u, v);
    return {BitMatrix::identity(n), adj, rest};
}

BitMatrix rook_adjacency(int m) {
    BitMatrix a(m * m);
    for (int u = 0; u < m * m; ++u)
        for (int v = 0; v < m * m; ++v)
            if (u != v && (u / m == v / m || u % m == v % m)) a.set(u, v);
    return a;
}

Scheme make_complete(long long n) {
    if (n < 2) throw Error(errc::BadParameter, "complete requires n >= 2");
    check_order(n);
    BitMatrix rest(static_cast<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) rest.set(u, v);
    return Scheme({BitMatrix::identity(static_cast<int>(n)), rest});
}

Scheme make_paley(long long q) {
    if (q == 9) return Scheme(srg_classes(rook_adjacency(3)));
    if (q % 4 != 1)
        throw Error(errc::BadParameter, "paley requires q = 1 mod 4");
    if (!is_prime(q))
        throw Error(errc::BadParameter,
                    "paley supports primes q = 1 mod 4 and q = 9; got " + std::to_string(q));
    check_order(q);
    std::vector<char> residue(q, 0);
    for (long long x = 1; x < q; ++x) residue[(x * x) % q] = 1;
    BitMatrix a(static_cast<int>(q));
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v)
            if (u != v && residue[((u - v) % q + q) % q]) a.set(u, v);
    return Scheme(srg_classes(a));
}

Scheme make_paley_tournament(long long q) {
    if (q % 4 != 3 || !is_prime(q))
        throw Error(errc::BadParameter,
                    "paley_tournament requires a prime q = 3 mod 4; got " + std::to_string(q));
    check_order(q);
    std::vector<char> residue(q, 0);
    for (long long x = 1; x < q; ++x) residue[(x * x) % q] = 1;
    int n = static_cast<int>(q);
    BitMatrix s(n), st(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) {
                if (residue[((v - u) % q + q) % q])
                    s.set(u, v);
                else
                    st.set(u, v);
            }
    return Scheme({BitMatrix::identity(n), s, st});
}

Scheme make_petersen() {
    // Kneser graph on the 2-subsets of a 5-set: adjacent iff disjoint.
    std::vector<std::pair<int, int>> verts;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) verts.push_back({i, j});
    BitMatrix a(10);
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) {
            auto [a1, a2] = verts[u];
            auto [b1, b2] = verts[v];
            if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) a.set(u, v);
        }
    return Scheme(srg_classes(a));
}

Scheme make_clebsch() {
    // Folded 5-cube: 4-bit words, adjacent iff Hamming distance 1 or 4.
    BitMatrix a(16);
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v) {
            int d = __builtin_popcount(u ^ v);
            if (d == 1 || d == 4) a.set(u, v);
        }
    return Scheme(srg_classes(a));
}

Scheme make_rook(long long m) {
    if (m < 2) throw Error(errc::BadParameter, "rook requires m >= 2");
    check_order(m * m);
    return Scheme(srg_classes(rook_adjacency(static_cast<int>(m))));
}

Scheme make_union_complete(long long m, long long r) {
    if (m < 2 || r < 1)
        throw Error(errc::BadParameter, "union_complete requires m >= 2, r >= 1");
    long long n = m * (r + 1);
    check_order(n);
    BitMatrix a(static_cast<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && u / (r + 1) == v / (r + 1)) a.set(u, v);
    return Scheme(srg_classes(a));
}

Scheme make_multipartite(long long m, long long r) {
    if (m < 2 || r < 1)
        throw Error(errc::BadParameter, "multipartite requires m >= 2, r >= 1");
    long long n = m * (r + 1);
    check_order(n);
    BitMatrix a(static_cast<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && u / (r + 1) != v / (r + 1)) a.set(u, v);
    return Scheme(srg_classes(a));
}

void need_params(const std::string& name, const std::vector<long long>& params, size_t count) {
    if (params.size() != count)
        throw Error(errc::BadParameter,
                    name + " expects " + std::to_string(count) + " parameter(s), got " +
                        std::to_string(params.size()));
}

}  // namespace

Scheme construct_catalog(const std::string& name, const std::vector<long long>& params) {
    if (name == "complete") {
        need_params(name, params, 1);
        return make_complete(params[0]);
    }
    if (name == "paley") {
        need_params(name, params, 1);
        return make_paley(params[0]);
    }
    if (name == "paley_tournament") {
        need_params(name, params, 1);
        return make_paley_tournament(params[0]);
    }
    if (name == "petersen") {
        need_params(name, params, 0);
        return make_petersen();
    }
    if (name == "clebsch") {
        need_params(name, params, 0);
        return make_clebsch();
    }
    if (name == "rook") {
        need_params(name, params, 1);
        return make_rook(params[0]);
    }
    if (name == "union_complete") {
        need_params(name, params, 2);
        return make_union_complete(params[0], params[1]);
    }
    if (name == "multipartite") {
        need_params(name, params, 2);
        return make_multipartite(params[0], params[1]);
    }
    throw Error(errc::UnknownName, "unknown catalog name: " + name);
}

std::vector<CatalogEntry> catalog_list() {
    return {
        {"complete", "n", "rank-2 scheme on the complete graph K_n"},
        {"paley", "q", "Paley graph (q prime, q = 1 mod 4, or q = 9)"},
        {"paley_tournament", "q", "Paley tournament (q prime, q = 3 mod 4)"},
        {"petersen", "", "Petersen graph, srg(10,3,0,1)"},
        {"clebsch", "", "Clebsch graph (folded 5-cube), srg(16,5,0,2)"},
        {"rook", "m", "m x m rook's graph, srg(m^2, 2(m-1), m-2, 2)"},
        {"union_complete", "m r", "m disjoint copies of K_{r+1}"},
        {"multipartite", "m r", "complete multipartite graph with m parts of size r+1"},
    };
}

Scheme tensor_product(const Scheme& a, const Scheme& b) {
    long long n = static_cast<long long>(a.order()) * b.order();
    check_order(n);
    int na = a.order(), nb = b.order(), rb = b.rank();
    std::vector<BitMatrix> classes;
    classes.reserve(static_cast<size_t>(a.rank()) * rb);
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < rb; ++j) {
            BitMatrix m(static_cast<int>(n));
            for (int u = 0; u < na; ++u)
                for (int v = 0; v < na; ++v) {
                    if (!a.cls(i).get(u, v)) continue;
                    for (int x = 0; x < nb; ++x)
                        for (int y = 0; y < nb; ++y)
                            if (b.cls(j).get(x, y)) m.set(u * nb + x, v * nb + y);
                }
            classes.push_back(std::move(m));
        }
    return Scheme(std::move(classes));
}

Scheme wreath_product(const Scheme& a, const Scheme& b) {
    long long n = static_cast<long long>(a.order()) * b.order();
    check_order(n);
    int na = a.order(), nb = b.order();
    std::vector<BitMatrix> classes;
    classes.reserve(a.rank() + b.rank() - 1);
    for (int i = 0; i < a.rank(); ++i) {
        BitMatrix m(static_cast<int>(n));
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < na; ++v)
                if (a.cls(i).get(u, v))
                    for (int x = 0; x < nb; ++x) m.set(u * nb + x, v * nb + x);
        classes.push_back(std::move(m));
    }
    for (int j = 1; j < b.rank(); ++j) {
        BitMatrix m(static_cast<int>(n));
        for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y)
                if (b.cls(j).get(x, y))
                    for (int u = 0; u < na; ++u)
                        for (int v = 0; v < na; ++v) m.set(u * nb + x, v * nb + y);
        classes.push_back(std::move(m));
    }
    return Scheme(std::move(classes));
}

// Compositions of n into `rank` parts, in decreasing lexicographic order:
// (n,0,...,0) first, so the all-coordinates-equal class is the identity.
std::vector<std::vector<int>> hamming_compositions(int rank, int n) {
    if (rank < 1 || n < 0) throw Error(errc::BadParameter, "invalid composition parameters");
    std::vector<std::vector<int>> comps;
    std::vector<int> cur(rank, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == rank - 1) {
            cur[pos] = left;
            comps.push_back(cur);
            return;
        }
        for (int take = left; take >= 0; --take) {
            cur[pos] = take;
            self(self, pos + 1, left - take);
        }
    };
    rec(rec, 0, n);
    return comps;
}

GeneralizedHamming generalized_hamming(const Scheme& base, int n) {
    if (n < 1) throw Error(errc::BadParameter, "generalized_hamming requires n >= 1");
    long long total = 1;
    for (int t = 0; t < n; ++t) {
        total *= base.order();
        if (total > order_limit())
            throw Error(errc::OrderLimitExceeded,
                        "order " + std::to_string(base.order()) + "^" + std::to_string(n) +
                            " exceeds limit " + std::to_string(order_limit()));
    }
    int r = base.rank();
    std::vector<std::vector<int>> comps = hamming_compositions(r, n);
    std::map<std::vector<int>, int> comp_index;
    for (size_t c = 0; c < comps.size(); ++c) comp_index[comps[c]] = static_cast<int>(c);

    int nn = static_cast<int>(total);
    std::vector<std::vector<int>> digits(nn, std::vector<int>(n));
    for (int v = 0; v < nn; ++v) {
        int rest = v;
        for (int t = n - 1; t >= 0; --t) {
            digits[v][t] = rest % base.order();
            rest /= base.order();
        }
    }

    std::vector<BitMatrix> classes(comps.size(), BitMatrix(nn));
    std::vector<int> h(r);
    for (int v = 0; v < nn; ++v)
        for (int w = 0; w < nn; ++w) {
            std::fill(h.begin(), h.end(), 0);
            for (int t = 0; t < n; ++t) ++h[base.class_of(digits[v][t], digits[w][t])];
            classes[comp_index.at(h)].set(v, w);
        }
    return {Scheme(std::move(classes)), std::move(comps)};
}

Scheme hamming(int n, int q) {
    if (n < 1 || q < 2) throw Error(errc::BadParameter, "hamming requires n >= 1, q >= 2");
    return generalized_hamming(make_complete(q), n).scheme;
}

BitMatrix parse_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw Error(errc::MalformedGraph6, "empty graph6 string");

    size_t pos = 0;
    long long n = 0;
    auto byte = [&](size_t i) -> int {
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw Error(errc::MalformedGraph6,
                        "byte " + std::to_string(i) + " out of graph6 range");
        return c - 63;
    };
    if (s[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (s.size() >= 4 && s[1] != '~') {
        for (int i = 1; i < 4; ++i) n = (n << 6) | byte(i);
        pos = 4;
    } else if (s.size() >= 8) {
        for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    } else {
        throw Error(errc::MalformedGraph6, "truncated size field");
    }
    if (n > order_limit())
        throw Error(errc::OrderLimitExceeded,
                    "order " + std::to_string(n) + " exceeds limit " +
                        std::to_string(order_limit()));
    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != need)
        throw Error(errc::MalformedGraph6,
                    "expected " + std::to_string(need) + " data bytes for n=" +
                        std::to_string(n) + ", got " +
                        std::to_string(s.size() - pos));

    BitMatrix a(static_cast<int>(n));
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int word = byte(pos + bit / 6);
            if ((word >> (5 - bit % 6)) & 1) {
                a.set(u, v);
                a.set(v, u);
            }
        }
    for (long long t = bit; t < need * 6; ++t)
        if ((byte(pos + t / 6) >> (5 - t % 6)) & 1)
            throw Error(errc::MalformedGraph6, "nonzero padding bits");
    return a;
}

GraphClasses graph_scheme_classes(const BitMatrix& adjacency) {
    GraphClasses out;
    int n = adjacency.size();
    BitMatrix rest(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !adjacency.get(u, v)) rest.set(u, v);
    out.classes.push_back(BitMatrix::identity(n));
    if (adjacency.count() == 0)
        ++out.dropped;
    else
        out.classes.push_back(adjacency);
    if (rest.count() == 0)
        ++out.dropped;
    else
        out.classes.push_back(rest);
    return out;
}

}  // namespace schemefusion
