#include "spectra/surd.hpp"

#include <array>
#include <cassert>
#include <sstream>
#include <vector>

namespace spectra {

namespace {

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        std::vector<long> ps;
        std::array<bool, 1001> sieve{};
        for (long i = 2; i <= 1000; ++i) {
            if (sieve[i]) continue;
            ps.push_back(i);
            for (long j = i * i; j <= 1000; j += i) sieve[j] = true;
        }
        return ps;
    }();
    return primes;
}

// sign of A + B*sqrt(d) for rationals A, B and integer d >= 0, exact.
int sign_a_plus_b_sqrt_d(const Rat& A, const Rat& B, const Int& d) {
    int sa = sgn(A), sb = sgn(B);
    if (d == 0 || sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare A^2 against B^2 d
    Rat lhs = A * A, rhs = B * B * Rat(d);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    // |A| dominates => sign of A wins
    return c > 0 ? sa : sb;
}

}  // namespace

Surd::Surd(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw DomainError("surd with zero denominator");
    if (d_ < 0) throw DomainError("surd with negative radicand");
    normalize();
}

Surd Surd::rational(const Rat& r) { return Surd(r.get_num(), 0, r.get_den(), 0); }

Rat Surd::rational_value() const {
    if (!is_rational()) throw DomainError("surd is irrational");
    Rat r(a_, c_);
    r.canonicalize();
    return r;
}

void Surd::normalize() {
    if (c_ < 0) {
        c_ = -c_;
        a_ = -a_;
        b_ = -b_;
    }
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
    } else {
        // fold perfect-square part of d into b
        if (mpz_perfect_square_p(d_.get_mpz_t())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
            a_ += b_ * root;
            b_ = 0;
            d_ = 0;
        } else {
            for (long p : small_primes()) {
                Int p2 = Int(p) * p;
                if (d_ < p2) break;
                while (d_ % p2 == 0) {
                    d_ /= p2;
                    b_ *= p;
                }
            }
            if (d_ == 1) {  // fully squared out
                a_ += b_;
                b_ = 0;
                d_ = 0;
            }
        }
    }
    Int g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

bool Surd::same_field(const Surd& o) const {
    return is_rational() || o.is_rational() || d_ == o.d_;
}

Surd Surd::operator+(const Surd& o) const {
    if (!same_field(o)) throw DomainError("surd addition across distinct fields");
    const Int& d = is_rational() ? o.d_ : d_;
    return Surd(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d);
}

Surd Surd::operator-(const Surd& o) const { return *this + (-o); }

Surd Surd::operator*(const Surd& o) const {
    if (!same_field(o)) throw DomainError("surd multiplication across distinct fields");
    const Int& d = is_rational() ? o.d_ : d_;
    Int a = a_ * o.a_ + b_ * o.b_ * d;
    Int b = a_ * o.b_ + b_ * o.a_;
    return Surd(std::move(a), std::move(b), c_ * o.c_, d);
}

Surd Surd::reciprocal() const {
    // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
    Int n = a_ * a_ - b_ * b_ * d_;
    if (n == 0) throw DomainError("reciprocal of zero surd");
    return Surd(c_ * a_, -c_ * b_, std::move(n), d_);
}

Surd Surd::operator/(const Surd& o) const { return *this * o.reciprocal(); }

int Surd::sign() const { return sign_a_plus_b_sqrt_d(Rat(a_), Rat(b_), d_); }

bool Surd::operator==(const Surd& o) const {
    if (d_ == o.d_) return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    // cross-field rationalization: A + B sqrt(d1) = C sqrt(d2) with
    // A = c2 a1 - c1 a2, B = c2 b1, C = c1 b2 (all integers)
    Int A = o.c_ * a_ - c_ * o.a_;
    Int B = o.c_ * b_;
    Int C = c_ * o.b_;
    if (B == 0 && C == 0) return A == 0;
    if (B == 0) {  // A = C sqrt(d2): d2 must be a perfect square (it is not, post-normalize)
        if (sgn(A) != sgn(C)) return false;
        return A * A == C * C * o.d_ && mpz_perfect_square_p(o.d_.get_mpz_t());
    }
    if (C == 0) {
        if (sgn(A) != -sgn(B)) return false;
        return A * A == B * B * d_ && mpz_perfect_square_p(d_.get_mpz_t());
    }
    // A + B sqrt(d1) = C sqrt(d2): square once -> A^2 + B^2 d1 - C^2 d2 = -2AB sqrt(d1)
    Int lhs = A * A + B * B * d_ - C * C * o.d_;
    if (A == 0) {
        // B sqrt(d1) = C sqrt(d2): need B^2 d1 = C^2 d2 and matching signs
        return sgn(B) == sgn(C) && B * B * d_ == C * C * o.d_;
    }
    // sqrt(d1) rational would be required unless lhs matches -2AB sqrt(d1): square again
    Int l2 = lhs * lhs;
    Int r2 = Int(4) * A * A * B * B * d_;
    if (l2 != r2) return false;
    return sgn(lhs) == -sgn(A * B);
}

CReal Surd::enclosure(long prec_bits) const {
    CReal root = sqrt_enclosure(d_, prec_bits);
    CReal num = CReal(Rat(a_)) + CReal(Rat(b_)) * root;
    return num / CReal(Rat(c_));
}

double Surd::approx() const { return enclosure(64).approx(); }

std::string Surd::str() const {
    std::ostringstream os;
    os << "(" << a_.get_str() << (b_ >= 0 ? "+" : "") << b_.get_str() << "*sqrt("
       << d_.get_str() << "))/" << c_.get_str();
    return os.str();
}

Ordering surd_compare(const Surd& x, const Surd& y) {
    if (x == y) return Ordering::EQ;
    if (x.same_field(y)) {
        int s = (x - y).sign();
        return s < 0 ? Ordering::LT : Ordering::GT;
    }
    for (long prec = 96;; prec *= 2) {
        CReal ex = x.enclosure(prec), ey = y.enclosure(prec);
        if (ex.certainly_less(ey)) return Ordering::LT;
        if (ey.certainly_less(ex)) return Ordering::GT;
        if (prec > (1L << 20)) throw std::runtime_error("surd_compare: refinement runaway");
    }
}

Ordering compare_surd_rational(const Surd& x, const Rat& r) {
    return surd_compare(x, Surd::rational(r));
}

Ordering compare_surd_creal(const Surd& x, const CReal& t, long start_prec) {
    for (long prec = start_prec;; prec *= 2) {
        CReal ex = x.enclosure(prec);
        if (ex.certainly_less(t)) return Ordering::LT;
        if (ex.certainly_greater(t)) return Ordering::GT;
        if (ex.is_exact() && t.is_exact() && ex.lo() == t.lo()) return Ordering::EQ;
        if (prec > (1L << 18))
            throw std::runtime_error("compare_surd_creal: threshold too tight to separate");
    }
}

}  // namespace spectra
