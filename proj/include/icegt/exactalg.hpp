#pragma once

#include <gmpxx.h>

#include <array>
#include <mutex>
#include <string>
#include <vector>

#include "icegt/boundary.hpp"

namespace icegt {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt pow2(long e);  // e >= 0

// 2^(sixths/6) * q^qexp with q = exp(i*pi/8).
struct WeightMonomial {
    int sixths = 0;
    int qexp = 0;

    WeightMonomial() = default;
    WeightMonomial(int s, int q);

    WeightMonomial operator*(const WeightMonomial& o) const;
    WeightMonomial& operator*=(const WeightMonomial& o);
    WeightMonomial pow(long e) const;

    // True when the monomial is the rational 2^(sixths/6) with sixths % 6 == 0 and qexp == 0.
    bool is_power_of_two() const { return qexp == 0 && sixths % 6 == 0; }
    std::string to_string() const;

    bool operator==(const WeightMonomial&) const = default;
};

// Q[x,y]/(x^8+1, y^6-2); coefficient of x^i y^j stored at [i][j].
class RingElem {
public:
    static constexpr int kX = 8;
    static constexpr int kY = 6;

    RingElem() = default;
    explicit RingElem(const BigRat& c);
    static RingElem x_pow(int i);
    static RingElem y_pow(int j);
    static RingElem from_monomial(const WeightMonomial& m);

    const BigRat& coeff(int i, int j) const { return c_[i * kY + j]; }
    void set_coeff(int i, int j, const BigRat& v) {
        c_[i * kY + j] = v;
        c_[i * kY + j].canonicalize();
    }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    RingElem operator*(const BigRat& r) const;

    bool operator==(const RingElem& o) const;
    bool is_zero() const;
    bool is_rational() const;
    BigRat rational_value() const;  // requires is_rational()
    std::string to_string() const;

private:
    std::array<BigRat, kX * kY> c_{};
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);

enum class Family { HV, HD, VD };
enum class Letter { a, b, c };

WeightMonomial vertex_weight(Family f, Letter l);

// C_k = b1^{n(n-1)/2} a2^{n(n-1)/2 + n k_n} a3^{n(n+1)/2}
WeightMonomial prefactor(const BoundarySpec& k);

// Memoized factorials up to a cap; larger arguments are computed directly.
class FactorialTable {
public:
    explicit FactorialTable(int cap = 200);
    BigInt operator()(int m) const;
    int cap() const { return cap_; }

private:
    int cap_;
    std::vector<BigInt> table_;
};

const FactorialTable& factorials();

// Rising factorial (a)_k for k >= 0.
BigRat pochhammer(const BigRat& a, int k);

BigInt eval_df_formula(int n);
BigInt eval_free_boundary_formula(int n, int m);

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace icegt
