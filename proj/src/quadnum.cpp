#include "schemefusion/quadnum.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "schemefusion/errors.hpp"

namespace schemefusion {

SquarefreeSplit squarefree_split(long long m) {
    if (m == 0) return {1, 0};
    long long f = 1;
    long long rest = std::llabs(m);
    long long core = 1;
    for (long long p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k + 1 < e; k += 2) f *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= rest;  // leftover prime
    if (m < 0) core = -core;
    return {f, core};
}

QuadNum QuadNum::make(const mpq_class& a, const mpq_class& b, long long m) {
    mpq_class ca = a, cb = b;
    ca.canonicalize();
    cb.canonicalize();
    if (cb == 0 || m == 0) return QuadNum(std::move(ca), mpq_class(0), 0);
    SquarefreeSplit s = squarefree_split(m);
    if (s.squarefree == 1) {  // m was a perfect square
        ca += cb * static_cast<long>(s.square_root);
        return QuadNum(std::move(ca), mpq_class(0), 0);
    }
    cb *= static_cast<long>(s.square_root);
    return QuadNum(std::move(ca), std::move(cb), s.squarefree);
}

const mpq_class& QuadNum::as_rational() const {
    if (d_ != 0) throw Error(errc::MixedRadicands, "value " + str() + " is not rational");
    return a_;
}

long long QuadNum::common_radicand(const QuadNum& x, const QuadNum& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw Error(errc::MixedRadicands,
                "cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                    std::to_string(y.d_) + ")");
}

QuadNum QuadNum::operator-() const { return QuadNum(-a_, -b_, d_); }

QuadNum QuadNum::operator+(const QuadNum& o) const {
    long long d = common_radicand(*this, o);
    mpq_class b = b_ + o.b_;
    if (b == 0) return QuadNum(a_ + o.a_, mpq_class(0), 0);
    return QuadNum(a_ + o.a_, std::move(b), d);
}

QuadNum QuadNum::operator-(const QuadNum& o) const { return *this + (-o); }

QuadNum QuadNum::operator*(const QuadNum& o) const {
    long long d = common_radicand(*this, o);
    mpq_class a = a_ * o.a_;
    if (d != 0) a += b_ * o.b_ * static_cast<long>(d);
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    if (b == 0) return QuadNum(std::move(a), mpq_class(0), 0);
    return QuadNum(std::move(a), std::move(b), d);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
    long long d = common_radicand(*this, o);
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm vanishes
    // only at zero because d is squarefree (so never a square of a rational).
    mpq_class norm = o.a_ * o.a_;
    if (d != 0) norm -= o.b_ * o.b_ * static_cast<long>(d);
    if (norm == 0) throw Error(errc::DivisionByZero, "division by zero");
    QuadNum inv(o.a_ / norm, -o.b_ / norm, d);
    if (inv.b_ == 0) inv.d_ = 0;
    return *this * inv;
}

QuadNum QuadNum::conj() const {
    if (d_ < 0) return QuadNum(a_, -b_, d_);
    return *this;
}

int QuadNum::sign() const {
    if (d_ < 0) throw Error(errc::ComplexUnordered, "sign of complex value " + str());
    int sa = sgn(a_);
    if (d_ == 0) return sa;
    int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decides, i.e. a^2 vs b^2*d.
    mpq_class lhs = a_ * a_;
    mpq_class rhs = b_ * b_ * static_cast<long>(d_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for squarefree d != 1, kept for safety
    return c > 0 ? sa : sb;
}

int QuadNum::compare(const QuadNum& x, const QuadNum& y) {
    if (x.d_ >= 0 && y.d_ >= 0) {
        QuadNum diff = x - y;  // throws MixedRadicands on incompatible fields
        return diff.sign();
    }
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c;
    return cmp(x.b_, y.b_);
}

std::string QuadNum::str() const {
    std::ostringstream os;
    if (d_ == 0) {
        os << a_;
        return os.str();
    }
    bool wrote = false;
    if (a_ != 0) {
        os << a_;
        wrote = true;
    }
    if (b_ == 1) {
        if (wrote) os << "+";
    } else if (b_ == -1) {
        os << "-";
    } else {
        if (wrote && b_ > 0) os << "+";
        os << b_ << "*";
    }
    os << "sqrt(" << d_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.str(); }

}  // namespace schemefusion
