#include "sl3coh/cyclotomic.hpp"

#include <stdexcept>

namespace sl3coh {

namespace {

// Phi_k, lowest degree first, monic.
std::vector<Int> cyclotomic_poly(int k) {
    switch (k) {
        case 1: return {-1, 1};
        case 2: return {1, 1};
        case 3: return {1, 1, 1};
        case 4: return {1, 0, 1};
        case 6: return {1, -1, 1};
    }
    throw std::invalid_argument("CyclotomicInt: unsupported order");
}

}  // namespace

int euler_phi(int order) { return static_cast<int>(cyclotomic_poly(order).size()) - 1; }

CyclotomicInt::CyclotomicInt(int order, Int value) : order_(order), c_(euler_phi(order), 0) {
    c_[0] = value;
}

CyclotomicInt CyclotomicInt::xi_power(int order, Int e) {
    Int r = ((e % order) + order) % order;
    std::vector<Int> v(r + 1, 0);
    v[r] = 1;
    CyclotomicInt out(order);
    out.reduce(v);
    out.c_ = v;
    return out;
}

void CyclotomicInt::reduce(std::vector<Int>& v) const {
    auto phi = cyclotomic_poly(order_);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > d;) {
        Int lead = v[i];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) v[i - d + j] -= lead * phi[j];
    }
    v.resize(d, 0);
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const {
    if (o.order_ != order_) throw std::invalid_argument("CyclotomicInt: order mismatch");
}

bool CyclotomicInt::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    return r += o;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    return r -= o;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    check_same(o);
    std::vector<Int> v(2 * c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    CyclotomicInt r(order_);
    reduce(v);
    r.c_ = v;
    return r;
}

CyclotomicInt CyclotomicInt::operator*(Int s) const {
    CyclotomicInt r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

}  // namespace sl3coh
