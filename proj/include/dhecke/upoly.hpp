/*
   Copyright 2026 The dhecke Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DHECKE_UPOLY_HPP
#define DHECKE_UPOLY_HPP

#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace dhecke {

/// Univariate polynomial in X over the ring K (ascending, no trailing zeros).
template <class K>
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(const K& proto) : zero_(zero_like(proto)) {}
    UPoly(std::vector<K> coeffs, const K& proto) : zero_(zero_like(proto)), c_(std::move(coeffs)) { trim(); }

    /// X - a
    static UPoly linear(const K& a) { return UPoly({-a, one_like(a)}, a); }
    static UPoly constant(const K& a) { return UPoly({a}, a); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    const K& lead() const { return c_.back(); }
    const K& zero() const { return zero_; }
    bool is_one() const { return c_.size() == 1 && c_[0] == one_like(zero_); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(r), a.zero_);
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(r), a.zero_);
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (elem_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!elem_zero(b.c_[j])) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r), a.zero_);
    }
    UPoly pow(unsigned n) const {
        UPoly r = constant(one_like(zero_)), b = *this;
        for (; n; n >>= 1, b = b * b)
            if (n & 1) r = r * b;
        return r;
    }

    /// Requires K to be a field.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.degree() < b.degree()) return {UPoly(a.zero_), a};
        std::vector<K> r = a.c_;
        std::vector<K> q(a.c_.size() - b.c_.size() + 1, a.zero_);
        const K linv = one_like(a.zero_) / b.lead();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            if (elem_zero(r[k + db])) continue;
            const K f = r[k + db] * linv;
            q[k] = f;
            for (std::size_t i = 0; i <= db; ++i)
                if (!elem_zero(b.c_[i])) r[k + i] = r[k + i] - f * b.c_[i];
        }
        return {UPoly(std::move(q), a.zero_), UPoly(std::move(r), a.zero_)};
    }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    bool divides(const UPoly& a) const { return (a % *this).is_zero(); }

    UPoly monic() const {
        if (is_zero()) return *this;
        const K inv = one_like(zero_) / lead();
        std::vector<K> r = c_;
        for (auto& x : r) x = x * inv;
        return UPoly(std::move(r), zero_);
    }
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
    static UPoly lcm(const UPoly& a, const UPoly& b) { return ((a * b) / gcd(a, b)).monic(); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly(zero_);
        std::vector<K> r(c_.size() - 1, zero_);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = from_int_like(zero_, static_cast<long long>(i)) * c_[i];
        return UPoly(std::move(r), zero_);
    }

    K eval(const K& x) const {
        K acc = zero_;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<K>()));
        std::vector<U> r;
        for (const auto& x : c_) r.push_back(f(x));
        return UPoly<U>(std::move(r), f(zero_));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Descending "X^2+(1+T^3)" style rendering.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (elem_zero(c_[i])) continue;
            std::string cs = c_[i].to_string();
            const bool compound = cs.find_first_of("+/") != std::string::npos;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += compound ? "(" + cs + ")" : cs;
                continue;
            }
            if (cs != "1") out += compound ? "(" + cs + ")" : cs;
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

   private:
    static bool elem_zero(const K& x) {
        using dhecke::is_zero;
        return is_zero(x);
    }
    void trim() {
        while (!c_.empty() && elem_zero(c_.back())) c_.pop_back();
    }

    K zero_{};
    std::vector<K> c_;
};

template <class K>
UPoly<K> zero_like(const UPoly<K>& x) { return UPoly<K>(x.zero()); }
template <class K>
UPoly<K> one_like(const UPoly<K>& x) { return UPoly<K>::constant(one_like(x.zero())); }
template <class K>
bool is_zero(const UPoly<K>& x) { return x.is_zero(); }

/// gcd(f, f') == 1
template <class K>
bool upoly_separable(const UPoly<K>& f) {
    if (f.is_zero()) throw InvalidInput("separability of the zero polynomial");
    return UPoly<K>::gcd(f, f.derivative()).degree() == 0;
}

inline UPoly<RatFunc> to_ratfunc(const UPoly<Poly>& f, const GaloisField& F) {
    std::vector<RatFunc> c;
    for (const auto& x : f.coeffs()) c.emplace_back(x);
    return UPoly<RatFunc>(std::move(c), RatFunc(Poly(F)));
}

}  // namespace dhecke

#endif
