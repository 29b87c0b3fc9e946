#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace schemefusion {

// Exact element of a real or imaginary quadratic field: a + b*sqrt(d) with
// a, b rational and d a squarefree integer (possibly negative).  Invariants:
//   * a and b are canonical mpq (reduced, positive denominator);
//   * b == 0  implies  d == 0, so rationals have a unique representation;
//   * b != 0  implies  d is squarefree and d != 0, 1.
// Arithmetic between two values with different nonzero radicands is refused:
// one character table lives in one quadratic field.
class QuadNum {
public:
    QuadNum() : d_(0) {}
    QuadNum(long v) : a_(v), d_(0) {}           // NOLINT(google-explicit-constructor)
    QuadNum(int v) : a_(v), d_(0) {}            // NOLINT(google-explicit-constructor)
    QuadNum(const mpq_class& v) : a_(v), d_(0)  // NOLINT(google-explicit-constructor)
    {
        a_.canonicalize();
    }

    // Builds a + b*sqrt(m) for arbitrary integer m, extracting the square
    // part of m so the stored radicand is squarefree (8 -> 2*sqrt(2) style).
    static QuadNum make(const mpq_class& a, const mpq_class& b, long long m);

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_part() const { return b_; }
    long long radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_ == 0; }

    // Exact value as a rational; precondition is_rational().
    const mpq_class& as_rational() const;

    QuadNum operator-() const;
    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const;
    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

    bool operator==(const QuadNum& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const QuadNum& o) const { return !(*this == o); }

    // Complex conjugation: negates the radical part when d < 0, identity on
    // real values.  This is the conjugate the orthogonality relations use.
    QuadNum conj() const;

    // Exact sign (-1, 0, +1) of a real value; throws ComplexUnordered when
    // d < 0.  Decided by comparing a^2 against b^2*d, no floating point.
    int sign() const;

    // Total order for deterministic row sorting.  Real values compare by
    // sign of the difference; once a complex value is involved the order
    // falls back to lexicographic on (a, b), which is still exact and total
    // within one field.
    static int compare(const QuadNum& x, const QuadNum& y);
    bool operator<(const QuadNum& o) const { return compare(*this, o) < 0; }

    // Round-trippable text form: "7", "-1/2+1/2*sqrt(5)", "2*sqrt(2)",
    // "1/2-1/2*sqrt(-7)".  The rational summand is omitted when it is zero
    // and a radical part is present.
    std::string str() const;

private:
    QuadNum(mpq_class a, mpq_class b, long long d)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    static long long common_radicand(const QuadNum& x, const QuadNum& y);

    mpq_class a_;
    mpq_class b_;
    long long d_;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

// Splits m = f^2 * d with d squarefree (sign preserved on d).  Exposed for
// the spectra module, which classifies quadratic discriminants with it.
struct SquarefreeSplit {
    long long square_root;  // f
    long long squarefree;   // d
};
SquarefreeSplit squarefree_split(long long m);

}  // namespace schemefusion
