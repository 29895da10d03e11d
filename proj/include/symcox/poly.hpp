// Exact polynomials and rational functions in the indeterminate q, with
// arbitrary-precision rational coefficients (GMP). No floating point anywhere.
#ifndef SYMCOX_POLY_HPP
#define SYMCOX_POLY_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace symcox {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown by RatFunc::to_poly when the denominator does not divide the
/// numerator; carries the division remainder as a witness.
class NotPolynomialError : public std::domain_error {
  public:
    NotPolynomialError(const std::string& what, std::vector<Rat> remainder)
        : std::domain_error(what), remainder_(std::move(remainder)) {}
    const std::vector<Rat>& remainder() const { return remainder_; }

  private:
    std::vector<Rat> remainder_;
};

/// Dense polynomial in q over Q. Coefficients are indexed by exponent and the
/// representation is canonical: no trailing zero coefficients, so two equal
/// polynomials have identical coefficient vectors.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(const Rat& constant);
    explicit RatPoly(long constant);
    explicit RatPoly(std::vector<Rat> coeffs);

    // q^n
    static RatPoly q_power(int n);
    // q^m - 1 (m >= 1)
    static RatPoly q_pow_minus_one(int m);
    // q^m + 1 (m >= 0)
    static RatPoly q_pow_plus_one(int m);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int exponent) const;
    const Rat& leading_coeff() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& other) const;
    RatPoly operator-(const RatPoly& other) const;
    RatPoly operator*(const RatPoly& other) const;
    RatPoly operator*(const Rat& scalar) const;
    bool operator==(const RatPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const RatPoly& other) const { return !(*this == other); }

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

    /// Monic gcd over Q.
    static RatPoly gcd(const RatPoly& a, const RatPoly& b);

    /// Exact evaluation at an integer point.
    Rat eval(const Int& q0) const;
    /// Evaluation that must land in Z (character degrees at prime powers).
    Int eval_int(const Int& q0) const;

    /// Human-readable rendering, highest exponent first, e.g. "q^4 - 1/2*q + 1".
    std::string str() const;

  private:
    void trim();
    std::vector<Rat> coeffs_;  // coeffs_[e] is the coefficient of q^e
};

/// Quotient of two RatPoly in normal form: gcd cancelled, denominator monic,
/// rational content carried by the numerator. Two equal rational functions
/// therefore have identical (num, den) pairs.
class RatFunc {
  public:
    RatFunc() : num_(RatPoly(0L)), den_(RatPoly(1L)) {}
    /// Throws std::domain_error("division by zero polynomial") if den is zero.
    RatFunc(RatPoly num, RatPoly den);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_polynomial() const { return den_.is_one(); }

    /// Returns num if den == 1, otherwise throws NotPolynomialError with the
    /// division remainder as witness.
    RatPoly to_poly() const;

    RatFunc operator+(const RatFunc& other) const;
    RatFunc operator-(const RatFunc& other) const;
    RatFunc operator*(const RatFunc& other) const;
    RatFunc operator/(const RatFunc& other) const;
    bool operator==(const RatFunc& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const RatFunc& other) const { return !(*this == other); }

    std::string str() const;

  private:
    RatPoly num_;
    RatPoly den_;
};

/// n! / (k! (n-k)!) as an exact integer; 0 when k < 0 or k > n.
Int binomial(const Int& n, long k);

/// p^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

/// True for q0 = p^e with p an odd prime and e >= 1.
bool is_odd_prime_power(const Int& q0);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace symcox

#endif
