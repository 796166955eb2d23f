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

#ifndef DHECKE_RATFUNC_HPP
#define DHECKE_RATFUNC_HPP

#include <string>

#include "poly.hpp"

namespace dhecke {

/// Element of F_q(T) kept as num/den with gcd 1 and monic den. Zero is 0/1.
class RatFunc {
   public:
    RatFunc() = default;
    RatFunc(Poly num) : num_(std::move(num)), den_(num_.one()) {}  // NOLINT: implicit lift F_q[T] -> F_q(T)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc from_int(const GaloisField& F, long long n) { return RatFunc(Poly::from_int(F, n)); }
    static RatFunc constant(const GaloisField& F, std::uint32_t v) { return RatFunc(Poly::constant(F, v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const GaloisField& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    /// The numerator, after checking the denominator is 1.
    const Poly& as_poly() const {
        if (!den_.is_one()) throw InvalidInput("rational function is not a polynomial: " + to_string());
        return num_;
    }

    RatFunc zero() const { return RatFunc(num_.zero()); }
    RatFunc one() const { return RatFunc(num_.one()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        // cross-cancel first to keep degrees small
        Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = Poly::exact_div(a.num_, g1) * Poly::exact_div(b.num_, g2);
        r.den_ = Poly::exact_div(a.den_, g2) * Poly::exact_div(b.den_, g1);
        r.fix_lead();
        return r;
    }
    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_lead();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc pow(long long n) const {
        if (n < 0) return inv().pow(-n);
        RatFunc r = one(), b = *this;
        for (; n; n >>= 1, b = b * b)
            if (n & 1) r = r * b;
        return r;
    }

    /// Value at x in F_q; throws DivisionByZero at a pole.
    std::uint32_t eval(std::uint32_t x) const {
        const std::uint32_t d = den_.eval(x);
        if (d == 0) throw DivisionByZero("pole of rational function");
        return field().div(num_.eval(x), d);
    }
    std::uint32_t eval(const FieldEmbedding& emb, std::uint32_t y) const {
        const std::uint32_t d = den_.eval(emb, y);
        if (d == 0) throw DivisionByZero("pole of rational function");
        return emb.target().div(num_.eval(emb, y), d);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// "num" or "num/den" with parentheses around sums.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const Poly& p) {
            std::string s = p.to_string();
            return s.find('+') == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(num_) + "/" + wrap(den_);
    }
    /// "c0,c1,..." or "c0,c1,.../d0,d1,..." in coefficient notation.
    std::string to_coeff_string() const {
        if (den_.is_one()) return num_.to_coeff_string();
        return num_.to_coeff_string() + "/" + den_.to_coeff_string();
    }
    static RatFunc parse_coeffs(const GaloisField& F, std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return RatFunc(Poly::parse_coeffs(F, s));
        Poly d = Poly::parse_coeffs(F, s.substr(slash + 1));
        if (d.is_zero()) throw DivisionByZero("zero denominator");
        return RatFunc(Poly::parse_coeffs(F, s.substr(0, slash)), d);
    }

   private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = den_.one();
            return;
        }
        if (!den_.is_one()) {
            Poly g = Poly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = Poly::exact_div(num_, g);
                den_ = Poly::exact_div(den_, g);
            }
        }
        fix_lead();
    }
    void fix_lead() {
        if (num_.is_zero()) {
            den_ = den_.one();
            return;
        }
        const std::uint32_t l = den_.lead();
        if (l != 1) {
            const std::uint32_t li = den_.field().inv(l);
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    Poly num_, den_;
};

inline RatFunc zero_like(const RatFunc& x) { return x.zero(); }
inline RatFunc one_like(const RatFunc& x) { return x.one(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc from_int_like(const RatFunc& x, long long n) { return RatFunc::from_int(x.field(), n); }

}  // namespace dhecke

#endif
