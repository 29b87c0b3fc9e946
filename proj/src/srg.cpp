#include "schemefusion/srg.hpp"

#include <algorithm>

#include "schemefusion/errors.hpp"

namespace schemefusion {

namespace {

// True when the value is a nonnegative-denominator integer rational.
bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Error(errc::BadParameter, "value out of range");
    return z.get_si();
}

}  // namespace

Spectrum spectrum_from_eigenvalues(const QuadNum& k, const QuadNum& ell, const QuadNum& r,
                                   const QuadNum& s) {
    const QuadNum one(1);
    if (k.sign() <= 0) throw Error(errc::BadParameter, "degree k must be positive");
    if (ell.is_zero())
        throw Error(errc::DegenerateSpectrum, "complement degree ell = 0 (complete graph)");
    if (ell.sign() < 0) throw Error(errc::BadParameter, "complement degree ell must be >= 0");
    if (r == s) throw Error(errc::BadParameter, "eigenvalues r and s must differ");
    if (r.sign() < 0) throw Error(errc::BadParameter, "eigenvalue r must be >= 0");
    if (s.sign() >= 0) throw Error(errc::BadParameter, "eigenvalue s must be negative");

    QuadNum nq = k + ell + one;
    if (!nq.is_rational() || !is_integer(nq.as_rational()))
        throw Error(errc::BadParameter, "order k + ell + 1 must be an integer");
    long long n = to_ll(nq.as_rational().get_num());

    // Multiplicities from the eigenspace-dimension identities
    //   n/f = 1 + r^2/k + (1+r)^2/ell,   n/g = 1 + s^2/k + (1+s)^2/ell,
    // cross-checked against f + g + 1 = n and the zero-trace identity.
    QuadNum fden = one + r * r / k + (one + r) * (one + r) / ell;
    QuadNum gden = one + s * s / k + (one + s) * (one + s) / ell;
    if (fden.is_zero() || gden.is_zero())
        throw Error(errc::CountingIdentityViolated, "multiplicity identities degenerate");
    QuadNum fq = nq / fden;
    QuadNum gq = nq / gden;
    if (!fq.is_rational() || !gq.is_rational())
        throw Error(errc::CountingIdentityViolated, "multiplicities are irrational");
    if (fq.sign() <= 0 || gq.sign() <= 0)
        throw Error(errc::CountingIdentityViolated, "multiplicities must be positive");
    if (!(fq + gq + one == nq))
        throw Error(errc::CountingIdentityViolated, "multiplicities do not sum to n - 1");
    if (!(k + fq * r + gq * s).is_zero())
        throw Error(errc::CountingIdentityViolated, "spectrum trace is nonzero");

    Spectrum sp;
    sp.n = n;
    sp.k = k;
    sp.ell = ell;
    sp.r = r;
    sp.s = s;
    sp.f = fq.as_rational();
    sp.g = gq.as_rational();
    return sp;
}

Spectrum spectrum_from_params(const SrgParams& p) {
    if (p.n < 2 || p.k < 1 || p.k > p.n - 1)
        throw Error(errc::BadParameter, "need 1 <= k <= n - 1");
    if (p.lambda < 0 || p.lambda >= p.k)
        throw Error(errc::BadParameter, "need 0 <= lambda < k");
    if (p.mu < 0 || p.mu > p.k) throw Error(errc::BadParameter, "need 0 <= mu <= k");
    if (p.k * (p.k - p.lambda - 1) != (p.n - p.k - 1) * p.mu)
        throw Error(errc::CountingIdentityViolated,
                    "k(k-lambda-1) = (n-k-1)mu fails for these parameters");
    long long ell = p.n - p.k - 1;
    if (ell == 0)
        throw Error(errc::DegenerateSpectrum, "complement degree ell = 0 (complete graph)");

    // r, s are the roots of x^2 - (lambda - mu) x - (k - mu).
    long long disc = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
    if (disc == 0) throw Error(errc::BadParameter, "repeated eigenvalue");
    mpq_class half_trace(static_cast<long>(p.lambda - p.mu), 2);
    QuadNum r = QuadNum::make(half_trace, mpq_class(1, 2), disc);
    QuadNum s = QuadNum::make(half_trace, mpq_class(-1, 2), disc);
    Spectrum sp = spectrum_from_eigenvalues(QuadNum(static_cast<long>(p.k)),
                                            QuadNum(static_cast<long>(ell)), r, s);
    sp.n = p.n;
    return sp;
}

std::pair<bool, bool> krein_check(const Spectrum& sp) {
    const QuadNum one(1);
    const QuadNum two(2);
    const QuadNum& k = sp.k;
    const QuadNum& r = sp.r;
    const QuadNum& s = sp.s;
    QuadNum lhs1 = (r + one) * (k + r + two * r * s);
    QuadNum rhs1 = (k + r) * (s + one) * (s + one);
    QuadNum lhs2 = (s + one) * (k + s + two * r * s);
    QuadNum rhs2 = (k + s) * (r + one) * (r + one);
    return {(lhs1 - rhs1).sign() <= 0, (lhs2 - rhs2).sign() <= 0};
}

FeasibilityReport feasibility_check(const SrgParams& p) {
    FeasibilityReport rep;
    if (p.n >= 2 && p.k >= 1 && p.k <= p.n - 1 && p.lambda >= 0 && p.mu >= 0)
        rep.counting = p.k * (p.k - p.lambda - 1) == (p.n - p.k - 1) * p.mu;
    try {
        Spectrum sp = spectrum_from_params(p);
        rep.positive_multiplicities = true;
        rep.integral_multiplicities = is_integer(sp.f) && is_integer(sp.g);
        auto [k1, k2] = krein_check(sp);
        rep.krein1 = k1;
        rep.krein2 = k2;
        rep.imprimitive = sp.r == QuadNum(0) || sp.s == QuadNum(-1);
        rep.spectrum = std::move(sp);
    } catch (const Error& e) {
        // rep.counting was computed directly above; a CountingIdentityViolated
        // may also mean bad multiplicities, which the flags below stay false for.
        if (e.code() == errc::DegenerateSpectrum) rep.degenerate = true;
    }
    rep.feasible = rep.counting && rep.spectrum.has_value() && rep.positive_multiplicities &&
                   rep.integral_multiplicities && rep.krein1 && rep.krein2 && !rep.degenerate;
    return rep;
}

CharacterTable symbolic_h2_table(const Spectrum& sp) {
    if (!is_integer(sp.f) || !is_integer(sp.g))
        throw Error(errc::BadParameter,
                    "H(2,A) table needs integer multiplicities, got f = " + sp.f.get_str() +
                        ", g = " + sp.g.get_str());
    long long f = to_ll(sp.f.get_num());
    long long g = to_ll(sp.g.get_num());
    const QuadNum one(1);
    const QuadNum two(2);
    const QuadNum& k = sp.k;
    const QuadNum& l = sp.ell;
    const QuadNum& r = sp.r;
    const QuadNum& s = sp.s;

    CharacterTable t;
    t.order = sp.n * sp.n;
    t.entries = {
        {one, k * k, l * l, two * k, two * l, two * k * l},
        {one, k * r, -(l * (one + r)), k + r, l - one - r, -(k * (one + r)) + l * r},
        {one, k * s, -(l * (one + s)), k + s, l - one - s, -(k * (one + s)) + l * s},
        {one, r * r, (one + r) * (one + r), two * r, -(two * (one + r)), -(two * r * (one + r))},
        {one, r * s, (one + r) * (one + s), r + s, -two - r - s, -r - s - two * r * s},
        {one, s * s, (one + s) * (one + s), two * s, -(two * (one + s)), -(two * s * (one + s))},
    };
    t.multiplicities = {1, 2 * f, 2 * g, f * f, 2 * f * g, g * g};
    return t;
}

const std::vector<int>& h2_scheme_to_symbolic() {
    static const std::vector<int> map{0, 3, 4, 1, 5, 2};
    return map;
}

const std::vector<int>& h2_symbolic_to_scheme() {
    static const std::vector<int> map{0, 3, 5, 1, 2, 4};
    return map;
}

ClassPartition relabel_partition(const ClassPartition& p, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != p.domain())
        throw Error(errc::PartitionMismatch, "relabeling map has the wrong size");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks().size());
    for (const auto& block : p.blocks()) {
        std::vector<int> mapped;
        mapped.reserve(block.size());
        for (int c : block) {
            if (image[c] < 0 || image[c] >= p.domain())
                throw Error(errc::PartitionMismatch, "relabeling map is not a permutation");
            mapped.push_back(image[c]);
        }
        blocks.push_back(std::move(mapped));
    }
    return ClassPartition::from_blocks(std::move(blocks), p.domain());
}

std::vector<FamilyTag> classify_families(const Spectrum& sp) {
    const QuadNum one(1);
    const QuadNum two(2);
    const QuadNum three(3);
    const QuadNum& k = sp.k;
    const QuadNum& l = sp.ell;
    const QuadNum& r = sp.r;
    const QuadNum& s = sp.s;

    std::vector<FamilyTag> tags;
    if (k == r && s == QuadNum(-1))
        tags.push_back({"T52i",
                        "disjoint union of complete graphs (k = r, s = -1)",
                        {"(1)", "(2)", "(3)", "(4)"}});
    if (r == QuadNum(0))
        tags.push_back({"T52ii",
                        "complete multipartite graph (r = 0)",
                        {"(1')", "(2')", "(3')", "(4')"}});
    if (k == s * s && l == -(two * s) && r == one)
        tags.push_back({"T53i", "k = s^2, l = -2s, r = 1", {"(5)"}});
    if (k == two * (one + r) && l == (one + r) * (one + r) && s == QuadNum(-2))
        tags.push_back({"T53ii", "k = 2(1+r), l = (1+r)^2, s = -2", {"(5')"}});
    if (k == l && s == -one - r)
        tags.push_back(
            {"T54", "conference-type parameters (k = l, s = -1-r)", {"(6)", "(7)", "(8)"}});
    if (k == three - s - r && l == QuadNum(5) + s + r)
        tags.push_back({"T55", "k = 3-s-r, l = 5+s+r (order 9)", {"(9)"}});
    if (k == r * (three + r) && l == three + r && s == QuadNum(-2))
        tags.push_back({"T56i", "k = r(3+r), l = 3+r, s = -2", {"(10)"}});
    if (l == -(k * (s + one)) && k == two - s && r == one)
        tags.push_back({"T56ii", "l = -k(s+1), k = 2-s, r = 1", {"(10')"}});
    if (k - l == one + two * r && r == -s)
        tags.push_back({"T57i", "k - l = 1+2r, r = -s", {"(11)"}});
    if (l - k == two * r + three && l == (r + one) * (two * r + three) && s == -two - r)
        tags.push_back({"T57ii", "l - k = 2r+3, l = (r+1)(2r+3), s = -2-r", {"(11')"}});
    tags.push_back(
        {"homogeneous", "present for every spectrum (collapse to H(2, rank-2))",
         {"homogeneous"}});
    return tags;
}

const std::vector<LabeledPartition>& fusion_label_table() {
    static const std::vector<LabeledPartition> table = [] {
        auto part = [](std::vector<std::vector<int>> blocks) {
            return ClassPartition::from_blocks(std::move(blocks), 6);
        };
        std::vector<LabeledPartition> t;
        t.push_back({"(1)", part({{0}, {1}, {2, 4}, {3}, {5}})});
        t.push_back({"(2)", part({{0}, {1}, {2, 4, 5}, {3}})});
        t.push_back({"(3)", part({{0}, {1, 3}, {2, 4}, {5}})});
        t.push_back({"(4)", part({{0}, {1, 3}, {2, 4, 5}})});
        t.push_back({"(1')", part({{0}, {1, 4}, {2}, {3}, {5}})});
        t.push_back({"(2')", part({{0}, {1, 3, 4}, {2}, {5}})});
        t.push_back({"(3')", part({{0}, {1, 4}, {2, 5}, {3}})});
        t.push_back({"(4')", part({{0}, {1, 3, 4}, {2, 5}})});
        t.push_back({"(5)", part({{0}, {1, 5}, {2}, {3}, {4}})});
        t.push_back({"(5')", part({{0}, {1}, {2, 3}, {4}, {5}})});
        t.push_back({"(6)", part({{0}, {1, 2}, {3, 5}, {4}})});
        t.push_back({"(7)", part({{0}, {1, 2, 4}, {3, 5}})});
        t.push_back({"(8)", part({{0}, {1, 2, 3, 5}, {4}})});
        t.push_back({"(9)", part({{0}, {1, 5}, {2, 3}, {4}})});
        t.push_back({"(10)", part({{0}, {1, 5}, {2, 3, 4}})});
        t.push_back({"(10')", part({{0}, {1, 4, 5}, {2, 3}})});
        t.push_back({"(11)", part({{0}, {1, 4}, {2, 3, 5}})});
        t.push_back({"(11')", part({{0}, {1, 3, 5}, {2, 4}})});
        t.push_back({"identity", ClassPartition::identity(6)});
        t.push_back({"trivial", ClassPartition::trivial(6)});
        t.push_back({"homogeneous", part({{0}, {1, 2}, {3, 4, 5}})});
        return t;
    }();
    return table;
}

ClassPartition partition_for_label(const std::string& label) {
    for (const auto& entry : fusion_label_table())
        if (entry.label == label) return entry.partition;
    throw Error(errc::UnknownName, "unknown fusion label '" + label + "'");
}

std::optional<std::string> label_for_partition(const ClassPartition& p) {
    for (const auto& entry : fusion_label_table())
        if (entry.partition == p) return entry.label;
    return std::nullopt;
}

ClassPartition switch_partner(const ClassPartition& partition) {
    // Complementing the base graph swaps base classes 1 and 2, hence tensor
    // classes (i,j) -> (i',j') coordinatewise; on the 6 fused H(2,A) classes
    // the induced map swaps C2+C4 <-> C3+C7 and C5 <-> C9.
    static const std::vector<int> six{0, 2, 1, 5, 4, 3};
    static const std::vector<int> nine{0, 2, 1, 6, 8, 7, 3, 5, 4};
    if (partition.domain() == 6) return relabel_partition(partition, six);
    if (partition.domain() == 9) return relabel_partition(partition, nine);
    throw Error(errc::PartitionMismatch,
                "switch partner is defined for 6 or 9 classes, got " +
                    std::to_string(partition.domain()));
}

std::vector<ClassPartition> universal_tensor_fusions(bool symmetric) {
    auto part = [](std::vector<std::vector<int>> blocks) {
        return ClassPartition::from_blocks(std::move(blocks), 9);
    };
    std::vector<ClassPartition> list{
        part({{0}, {1, 2, 3, 4, 5, 6, 7, 8}}),
        part({{0}, {1}, {2}, {3, 6}, {4, 7}, {5, 8}}),
        part({{0}, {3}, {6}, {1, 2}, {4, 5}, {7, 8}}),
        part({{0}, {1}, {2}, {3, 4, 5}, {6, 7, 8}}),
        part({{0}, {3}, {6}, {1, 4, 7}, {2, 5, 8}}),
        part({{0}, {1}, {2}, {3, 4, 5, 6, 7, 8}}),
        part({{0}, {3}, {6}, {1, 2, 4, 5, 7, 8}}),
        part({{0}, {1, 2}, {3, 6}, {4, 5, 7, 8}}),
        part({{0}, {1, 2, 3, 6}, {4, 5, 7, 8}}),
        part({{0}, {1, 2, 4, 5, 7, 8}, {3, 6}}),
        part({{0}, {1, 3}, {2, 6}, {4}, {5, 7}, {8}}),
        part({{0}, {1, 4, 7}, {2, 5, 8}, {3, 6}}),
        part({{0}, {1, 2}, {3, 4, 5}, {6, 7, 8}}),
    };
    if (!symmetric) {
        list.push_back(part({{0}, {1, 6}, {2, 3}, {4, 8}, {5}, {7}}));
        list.push_back(part({{0}, {1, 2}, {3, 6}, {4, 8}, {5, 7}}));
        list.push_back(part({{0}, {1, 2, 3, 6}, {4, 8}, {5, 7}}));
    }
    return list;
}

}  // namespace schemefusion
