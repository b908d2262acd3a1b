#pragma once

#include <vector>

#include "sl3coh/root_system.hpp"

namespace sl3coh {

// Element of Z[x]/Phi_k(x), k in {1, 2, 3, 4, 6}, in the basis 1, x, ..., x^{phi(k)-1}.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int order, Int value = 0);

    static CyclotomicInt xi_power(int order, Int e);

    int order() const { return order_; }
    const std::vector<Int>& coefficients() const { return c_; }

    bool is_rational() const;
    Int rational_part() const { return c_[0]; }

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator*(Int s) const;
    bool operator==(const CyclotomicInt& o) const;

private:
    void check_same(const CyclotomicInt& o) const;
    void reduce(std::vector<Int>& v) const;

    int order_;
    std::vector<Int> c_;
};

int euler_phi(int order);

}  // namespace sl3coh
