#include "symcox/poly.hpp"

#include <algorithm>
#include <sstream>

namespace symcox {

RatPoly::RatPoly(const Rat& constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

RatPoly::RatPoly(long constant) {
    if (constant != 0)
        coeffs_.emplace_back(constant);
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

RatPoly RatPoly::q_power(int n) {
    if (n < 0)
        throw std::invalid_argument("q_power: negative exponent");
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    c.back() = 1;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::q_pow_minus_one(int m) {
    if (m < 1)
        throw std::invalid_argument("q_pow_minus_one: exponent must be >= 1");
    std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
    c.front() = -1;
    c.back() = 1;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::q_pow_plus_one(int m) {
    if (m < 0)
        throw std::invalid_argument("q_pow_plus_one: negative exponent");
    if (m == 0)
        return RatPoly(2L);
    std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
    c.front() = 1;
    c.back() = 1;
    return RatPoly(std::move(c));
}

bool RatPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rat RatPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size()))
        return Rat(0);
    return coeffs_[static_cast<size_t>(exponent)];
}

const Rat& RatPoly::leading_coeff() const {
    if (coeffs_.empty())
        throw std::logic_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& other) const {
    std::vector<Rat> c(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        c[i] += other.coeffs_[i];
    RatPoly r;
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& other) const {
    return *this + (-other);
}

RatPoly RatPoly::operator*(const RatPoly& other) const {
    if (is_zero() || other.is_zero())
        return RatPoly();
    std::vector<Rat> c(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    RatPoly r;
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

RatPoly RatPoly::operator*(const Rat& scalar) const {
    if (scalar == 0)
        return RatPoly();
    RatPoly r = *this;
    for (auto& c : r.coeffs_)
        c *= scalar;
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("division by zero polynomial");
    RatPoly quotient;
    RatPoly rest = *this;
    const int dd = divisor.degree();
    const Rat& lead = divisor.leading_coeff();
    while (!rest.is_zero() && rest.degree() >= dd) {
        int shift = rest.degree() - dd;
        Rat factor = rest.leading_coeff() / lead;
        RatPoly term = RatPoly::q_power(shift) * factor;
        quotient = quotient + term;
        rest = rest - term * divisor;
    }
    return {quotient, rest};
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    if (x.is_zero())
        return x;
    return x * (Rat(1) / x.leading_coeff());  // monic convention
}

Rat RatPoly::eval(const Int& q0) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * Rat(q0) + *it;
    return acc;
}

Int RatPoly::eval_int(const Int& q0) const {
    Rat v = eval(q0);
    if (v.get_den() != 1)
        throw std::logic_error("eval_int: value " + rat_to_string(v) + " is not an integer");
    return v.get_num();
}

std::string RatPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        Rat c = coeffs_[static_cast<size_t>(e)];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        if (e == 0) {
            os << rat_to_string(c);
        } else {
            if (c != 1)
                os << rat_to_string(c) << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

RatFunc::RatFunc(RatPoly num, RatPoly den) {
    if (den.is_zero())
        throw std::domain_error("division by zero polynomial");
    RatPoly g = RatPoly::gcd(num, den);
    if (!g.is_zero() && !g.is_one()) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    // den monic; the rational content moves into the numerator
    Rat lead = den.leading_coeff();
    num_ = num * (Rat(1) / lead);
    den_ = den * (Rat(1) / lead);
}

RatPoly RatFunc::to_poly() const {
    if (den_.is_one())
        return num_;
    auto [quot, rest] = num_.divmod(den_);
    (void)quot;
    throw NotPolynomialError("not a polynomial", rest.coeffs());
}

RatFunc RatFunc::operator+(const RatFunc& other) const {
    return RatFunc(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator-(const RatFunc& other) const {
    return RatFunc(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator*(const RatFunc& other) const {
    return RatFunc(num_ * other.num_, den_ * other.den_);
}

RatFunc RatFunc::operator/(const RatFunc& other) const {
    return RatFunc(num_ * other.den_, den_ * other.num_);
}

std::string RatFunc::str() const {
    if (den_.is_one())
        return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Int binomial(const Int& n, long k) {
    if (k < 0 || n < k)
        return 0;
    Int result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

Int int_pow(const Int& base, unsigned long e) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
    return result;
}

bool is_odd_prime_power(const Int& q0) {
    if (q0 < 3 || q0 % 2 == 0)
        return false;
    // find the smallest odd prime factor, then check q0 is a pure power of it
    Int p(3);
    while (p * p <= q0) {
        if (q0 % p == 0)
            break;
        p += 2;
    }
    if (p * p > q0)
        return true;  // q0 itself is prime
    Int rest = q0;
    while (rest % p == 0)
        rest /= p;
    return rest == 1;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace symcox
