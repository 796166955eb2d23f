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

#ifndef DHECKE_POLY_HPP
#define DHECKE_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace dhecke {

/// Polynomial in T over F_q, ascending coefficients, no trailing zeros.
class Poly {
   public:
    Poly() = default;
    explicit Poly(const GaloisField& f) : F_(&f) {}
    Poly(const GaloisField& f, std::vector<std::uint32_t> coeffs) : F_(&f), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const GaloisField& f, std::uint32_t v) { return Poly(f, {v}); }
    static Poly from_int(const GaloisField& f, long long n) { return constant(f, f.from_int(n)); }
    static Poly monomial(const GaloisField& f, std::uint32_t v, std::size_t deg) {
        std::vector<std::uint32_t> c(deg + 1, 0);
        c[deg] = v;
        return Poly(f, std::move(c));
    }
    static Poly T(const GaloisField& f) { return monomial(f, 1, 1); }
    /// Coefficients given as integers, reduced into the prime subfield.
    static Poly from_ints(const GaloisField& f, std::initializer_list<long long> ints) {
        std::vector<std::uint32_t> c;
        for (long long x : ints) c.push_back(f.from_int(x));
        return Poly(f, std::move(c));
    }

    const GaloisField& field() const {
        if (!F_) throw InternalError("polynomial without coefficient field");
        return *F_;
    }
    const GaloisField* field_ptr() const { return F_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

    Poly zero() const { return Poly(field()); }
    Poly one() const { return constant(field(), 1); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const GaloisField& F = common(a, b);
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
        return Poly(F, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        const GaloisField& F = common(a, b);
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
        return Poly(F, std::move(r));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = F_->neg(x);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const GaloisField& F = common(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(F);
        std::vector<std::uint32_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
        }
        return Poly(F, std::move(r));
    }
    Poly scaled(std::uint32_t s) const {
        if (s == 0) return zero();
        Poly r = *this;
        for (auto& x : r.c_) x = F_->mul(x, s);
        return r;
    }
    /// Multiplication by T^n.
    Poly shifted(std::size_t n) const {
        if (is_zero()) return *this;
        std::vector<std::uint32_t> r(n, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(field(), std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly pow(unsigned long long n) const {
        Poly r = one(), b = *this;
        for (; n; n >>= 1, b = b * b)
            if (n & 1) r = r * b;
        return r;
    }

    /// Quotient and remainder; throws DivisionByZero for b = 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        const GaloisField& F = common(a, b);
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(F), a};
        std::vector<std::uint32_t> r = a.c_;
        std::vector<std::uint32_t> q(a.c_.size() - b.c_.size() + 1, 0);
        const std::uint32_t linv = F.inv(b.lead());
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            const std::uint32_t f = F.mul(r[k + db], linv);
            q[k] = f;
            if (f == 0) continue;
            for (std::size_t i = 0; i <= db; ++i) r[k + i] = F.sub(r[k + i], F.mul(f, b.c_[i]));
        }
        return {Poly(F, std::move(q)), Poly(F, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    /// Exact quotient; throws InternalError if b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw InternalError("inexact polynomial division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(F_->inv(lead()));
    }
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
    Poly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<std::uint32_t> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
        return Poly(*F_, std::move(r));
    }

    std::uint32_t eval(std::uint32_t x) const {
        std::uint32_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
        return acc;
    }
    /// Evaluation at an element of an extension field given through an embedding of F_q.
    std::uint32_t eval(const FieldEmbedding& emb, std::uint32_t y) const {
        const GaloisField& G = emb.target();
        std::uint32_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = G.add(G.mul(acc, y), emb(c_[i]));
        return acc;
    }
    /// Image of this polynomial under a field embedding applied to coefficients.
    Poly embedded(const FieldEmbedding& emb) const {
        std::vector<std::uint32_t> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = emb(c_[i]);
        return Poly(emb.target(), std::move(r));
    }
    /// Coefficientwise x -> x^p.
    Poly frobenius() const {
        Poly r = *this;
        for (auto& x : r.c_) x = F_->frobenius(x);
        return r;
    }
    /// P(cT)
    Poly scale_variable(std::uint32_t s) const {
        Poly r = *this;
        std::uint32_t f = 1;
        for (auto& x : r.c_) {
            x = F_->mul(x, f);
            f = F_->mul(f, s);
        }
        r.trim();
        return r;
    }

    /// Brute-force irreducibility test (no roots / no factor of degree <= deg/2).
    bool is_irreducible() const {
        const int d = degree();
        if (d <= 0) return false;
        if (d == 1) return true;
        const GaloisField& F = field();
        for (int fd = 1; 2 * fd <= d; ++fd) {
            const std::uint64_t count = detail::ipow(F.size(), static_cast<unsigned>(fd));
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint32_t> g(fd + 1);
                std::uint64_t t = idx;
                for (int i = 0; i < fd; ++i, t /= F.size()) g[i] = static_cast<std::uint32_t>(t % F.size());
                g[fd] = 1;
                if ((*this % Poly(F, g)).is_zero()) return false;
            }
        }
        return true;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    /// Human-readable form such as "1+2T+T^3". Extension-field coefficients are written as powers
    /// of the generator a, e.g. "(a^2)T".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += "+";
            std::string cs = coeff_text(c_[i]);
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs;
                out += "T";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
    /// Comma-separated ascending coefficients ("1,0,2"); zero is "0".
    std::string to_coeff_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += F_->to_string(c_[i]);
        }
        return out;
    }
    static Poly parse_coeffs(const GaloisField& f, std::string_view s) {
        std::vector<std::uint32_t> c;
        for (auto part : detail::split(detail::trim(s), ',')) c.push_back(f.parse_element(part));
        return Poly(f, std::move(c));
    }

   private:
    static const GaloisField& common(const Poly& a, const Poly& b) {
        if (a.F_ && b.F_ && a.F_ != b.F_) throw InvalidInput("polynomials over different fields");
        if (a.F_) return *a.F_;
        if (b.F_) return *b.F_;
        throw InternalError("polynomial without coefficient field");
    }
    std::string coeff_text(std::uint32_t v) const {
        if (F_->degree() == 1) return std::to_string(v);
        if (v == 1) return "1";
        const std::uint32_t l = F_->log(v);
        return l == 1 ? "(a)" : "(a^" + std::to_string(l) + ")";
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const GaloisField* F_ = nullptr;
    std::vector<std::uint32_t> c_;
};

inline Poly zero_like(const Poly& x) { return x.zero(); }
inline Poly one_like(const Poly& x) { return x.one(); }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline Poly from_int_like(const Poly& x, long long n) { return Poly::from_int(x.field(), n); }

/// Lagrange interpolation through (x_i, y_i) over a finite field; degree < n.
inline Poly interpolate(const GaloisField& F, const std::vector<std::uint32_t>& xs, const std::vector<std::uint32_t>& ys) {
    Poly result(F);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(F, 1);
        std::uint32_t denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly(F, {F.neg(xs[j]), 1});
            denom = F.mul(denom, F.sub(xs[i], xs[j]));
        }
        result += basis.scaled(F.div(ys[i], denom));
    }
    return result;
}

}  // namespace dhecke

#endif
