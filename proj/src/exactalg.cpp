#include "icegt/exactalg.hpp"

#include <sstream>
#include <stdexcept>

namespace icegt {

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigRat ratio(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat pow2_rat(int e) {
    BigRat r(1);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
    }
    r.canonicalize();
    return r;
}

}  // namespace

BigInt pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

WeightMonomial::WeightMonomial(int s, int q) : sixths(s), qexp(mod(q, 16)) {}

WeightMonomial WeightMonomial::operator*(const WeightMonomial& o) const {
    return WeightMonomial(sixths + o.sixths, qexp + o.qexp);
}

WeightMonomial& WeightMonomial::operator*=(const WeightMonomial& o) {
    *this = *this * o;
    return *this;
}

WeightMonomial WeightMonomial::pow(long e) const {
    long s = static_cast<long>(sixths) * e;
    long q = static_cast<long>(qexp) * e;
    return WeightMonomial(static_cast<int>(s), static_cast<int>(q % 16));
}

std::string WeightMonomial::to_string() const {
    std::ostringstream os;
    os << "2^(" << sixths << "/6)*q^" << qexp;
    return os.str();
}

RingElem::RingElem(const BigRat& c) { c_[0] = c; }

RingElem RingElem::x_pow(int i) {
    int e = mod(i, 16);
    RingElem r;
    r.c_[(e % kX) * kY] = e >= kX ? BigRat(-1) : BigRat(1);
    return r;
}

RingElem RingElem::y_pow(int j) {
    RingElem r;
    r.c_[mod(j, kY)] = pow2_rat(floor_div(j, kY));
    return r;
}

RingElem RingElem::from_monomial(const WeightMonomial& m) {
    RingElem r;
    int e = m.qexp;
    BigRat coeff = pow2_rat(floor_div(m.sixths, kY));
    if (e >= kX) coeff = -coeff;
    r.c_[(e % kX) * kY + mod(m.sixths, kY)] = coeff;
    return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
    RingElem r = *this;
    r += o;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    for (size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
    return *this;
}

RingElem RingElem::operator-(const RingElem& o) const {
    RingElem r = *this;
    for (size_t t = 0; t < c_.size(); ++t) r.c_[t] -= o.c_[t];
    return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
    RingElem r;
    BigRat term;
    for (int i = 0; i < kX; ++i)
        for (int j = 0; j < kY; ++j) {
            const BigRat& a = c_[i * kY + j];
            if (sgn(a) == 0) continue;
            for (int k = 0; k < kX; ++k)
                for (int l = 0; l < kY; ++l) {
                    const BigRat& b = o.c_[k * kY + l];
                    if (sgn(b) == 0) continue;
                    term = a * b;
                    int xi = i + k, yj = j + l;
                    if (xi >= kX) {
                        xi -= kX;
                        term = -term;
                    }
                    if (yj >= kY) {
                        yj -= kY;
                        term *= 2;
                    }
                    r.c_[xi * kY + yj] += term;
                }
        }
    return r;
}

RingElem& RingElem::operator*=(const RingElem& o) {
    *this = *this * o;
    return *this;
}

RingElem RingElem::operator*(const BigRat& s) const {
    RingElem r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

bool RingElem::operator==(const RingElem& o) const {
    for (size_t t = 0; t < c_.size(); ++t)
        if (c_[t] != o.c_[t]) return false;
    return true;
}

bool RingElem::is_zero() const {
    for (const auto& v : c_)
        if (sgn(v) != 0) return false;
    return true;
}

bool RingElem::is_rational() const {
    for (size_t t = 1; t < c_.size(); ++t)
        if (sgn(c_[t]) != 0) return false;
    return true;
}

BigRat RingElem::rational_value() const {
    if (!is_rational()) throw ArithmeticError("ring element is not rational");
    return c_[0];
}

std::string RingElem::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < kX; ++i)
        for (int j = 0; j < kY; ++j) {
            const BigRat& v = c_[i * kY + j];
            if (sgn(v) == 0) continue;
            if (any) os << " + ";
            os << "(" << v.get_str() << ")";
            if (i) os << "*x^" << i;
            if (j) os << "*y^" << j;
            any = true;
        }
    if (!any) os << "0";
    return os.str();
}

RingElem ring_add(const RingElem& a, const RingElem& b) { return a + b; }
RingElem ring_mul(const RingElem& a, const RingElem& b) { return a * b; }

WeightMonomial vertex_weight(Family f, Letter l) {
    int sixths = l == Letter::a ? (f == Family::HV ? -2 : 1)
                 : l == Letter::b ? (f == Family::HV ? 1 : -2)
                                  : -2;
    int q = f == Family::HV ? 0 : f == Family::HD ? 3 : -3;
    return WeightMonomial(sixths, q);
}

WeightMonomial prefactor(const BoundarySpec& k) {
    long n = k.n();
    long kn = k.last();
    WeightMonomial b1 = vertex_weight(Family::HV, Letter::b);
    WeightMonomial a2 = vertex_weight(Family::HD, Letter::a);
    WeightMonomial a3 = vertex_weight(Family::VD, Letter::a);
    return b1.pow(n * (n - 1) / 2) * a2.pow(n * (n - 1) / 2 + n * kn) * a3.pow(n * (n + 1) / 2);
}

FactorialTable::FactorialTable(int cap) : cap_(cap) {
    table_.reserve(cap + 1);
    table_.emplace_back(1);
    for (int i = 1; i <= cap; ++i) table_.push_back(table_.back() * i);
}

BigInt FactorialTable::operator()(int m) const {
    if (m < 0) throw std::invalid_argument("factorial of negative number");
    if (m <= cap_) return table_[m];
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

const FactorialTable& factorials() {
    static const FactorialTable table(200);
    return table;
}

BigRat pochhammer(const BigRat& a, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    BigRat r(1);
    BigRat t = a;
    for (int i = 0; i < k; ++i) {
        r *= t;
        t += 1;
    }
    return r;
}

BigInt eval_df_formula(int n) {
    if (n < 1) throw std::invalid_argument("df formula: n must be >= 1");
    const auto& fac = factorials();
    BigRat r(pow2(static_cast<long>(n) * (n - 1) / 2));
    for (int j = 0; j < n; ++j) r *= ratio(fac(4 * j + 2), fac(n + 2 * j + 1));
    if (r.get_den() != 1) throw ArithmeticError("df formula: non-integral result " + r.get_str());
    return r.get_num();
}

BigInt eval_free_boundary_formula(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("free boundary formula: need n >= 1, m >= 0");
    BigRat r(1);
    for (int i = 1; i <= n; ++i) {
        BigRat num = pochhammer(BigRat(m - n + 3 * i + 1), i - 1) * pochhammer(BigRat(m - n + i + 1), i);
        BigRat den = pochhammer(ratio(m - n + i + 2, 2), i - 1) * pochhammer(BigRat(i), i);
        if (sgn(den) == 0)
            throw std::invalid_argument("free boundary formula: zero Pochhammer denominator at i=" +
                                        std::to_string(i));
        r *= num / den;
    }
    if (r.get_den() != 1)
        throw ArithmeticError("free boundary formula: non-integral result " + r.get_str());
    return r.get_num();
}

}  // namespace icegt
