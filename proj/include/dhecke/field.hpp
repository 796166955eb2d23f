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

/**
 * @file field.hpp
 * @brief Finite fields F_{p^e} with table-driven arithmetic.
 *
 * An element of F_q = F_p[x]/(f) is stored as the integer sum c_i p^i of its
 * coefficient vector (c_0, ..., c_{e-1}). The prime subfield is therefore the
 * range [0, p). Multiplication goes through discrete log tables built from the
 * generator of F_q^x; addition uses a full table for q <= 1024 and digit-wise
 * arithmetic above that.
 *
 * Fields are interned: GaloisField::get() returns a reference that stays valid
 * for the lifetime of the program, so polynomials and matrices may carry a
 * plain pointer to their coefficient field.
 */

#ifndef DHECKE_FIELD_HPP
#define DHECKE_FIELD_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace dhecke {

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline long long parse_int(std::string_view s) {
    s = trim(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidInput("not an integer: '" + std::string(s) + "'");
    return v;
}

// Dense polynomials over the prime field F_p, ascending coefficients; used only
// while building extension fields.
using PrimePoly = std::vector<std::uint32_t>;

inline void pp_trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t pp_inv(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

inline PrimePoly pp_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
    pp_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t linv = pp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * linv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f) * m[i]) % p);
        pp_trim(a);
    }
    return a;
}

inline bool pp_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g(d + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i, t /= p) g[i] = static_cast<std::uint32_t>(t % p);
            g[d] = 1;
            if (pp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Parameters of F_q, q = p^e. A generator of 0 means "pick the smallest primitive element".
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::vector<std::uint32_t> modulus;  // ascending, monic, length e+1; empty selects the built-in modulus
    std::uint32_t generator = 0;

    std::uint64_t q() const { return detail::ipow(p, e); }

    /// Parses "p", "p^e", "p^e/c0,...,ce", or a plain prime power such as "9".
    static FieldSpec parse(std::string_view text) {
        text = detail::trim(text);
        FieldSpec s;
        auto slash = text.find('/');
        std::string_view head = text.substr(0, slash);
        auto caret = head.find('^');
        if (caret == std::string_view::npos) {
            const long long n = detail::parse_int(head);
            if (n < 2) throw InvalidInput("field size must be >= 2");
            // plain prime power
            std::uint64_t pp = 0;
            for (std::uint64_t d = 2; d <= static_cast<std::uint64_t>(n); ++d)
                if (n % d == 0) { pp = d; break; }
            std::uint32_t e = 0;
            std::uint64_t m = static_cast<std::uint64_t>(n);
            while (m % pp == 0) m /= pp, ++e;
            if (m != 1) throw InvalidInput("not a prime power: " + std::string(head));
            s.p = static_cast<std::uint32_t>(pp);
            s.e = e;
        } else {
            const long long p = detail::parse_int(head.substr(0, caret));
            const long long e = detail::parse_int(head.substr(caret + 1));
            if (!detail::is_prime(static_cast<std::uint64_t>(std::max(0LL, p))))
                throw InvalidInput("characteristic is not prime: " + std::to_string(p));
            if (e < 1) throw InvalidInput("extension degree must be positive");
            s.p = static_cast<std::uint32_t>(p);
            s.e = static_cast<std::uint32_t>(e);
        }
        if (slash != std::string_view::npos) {
            for (auto part : detail::split(text.substr(slash + 1), ',')) {
                const long long c = detail::parse_int(part);
                if (c < 0 || c >= static_cast<long long>(s.p))
                    throw InvalidInput("modulus coefficient out of range");
                s.modulus.push_back(static_cast<std::uint32_t>(c));
            }
            if (s.e == 1) s.modulus.clear();  // ignored for prime fields
        }
        return s;
    }

    std::string to_string() const {
        std::string out = std::to_string(p) + "^" + std::to_string(e);
        if (e > 1 && !modulus.empty()) {
            out += "/";
            for (std::size_t i = 0; i < modulus.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(modulus[i]);
            }
        }
        return out;
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// F_q with lookup tables. Obtain instances through get(); they are immutable and never freed.
class GaloisField {
   public:
    static const GaloisField& get(const FieldSpec& spec) {
        FieldSpec resolved = resolve(spec);
        static std::mutex mtx;
        static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>, std::uint32_t>,
                        std::unique_ptr<GaloisField>>
            registry;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_tuple(resolved.p, resolved.e, resolved.modulus, resolved.generator);
        auto it = registry.find(key);
        if (it == registry.end())
            it = registry.emplace(key, std::unique_ptr<GaloisField>(new GaloisField(resolved))).first;
        return *it->second;
    }

    static const GaloisField& get(std::uint32_t p, std::uint32_t e = 1) {
        FieldSpec s;
        s.p = p;
        s.e = e;
        return get(s);
    }

    static const GaloisField& parse(std::string_view text) { return get(FieldSpec::parse(text)); }

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t size() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
        if (p_ == 2) return a ^ b;
        return digitwise(a, b, false);
    }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, long long n) const {
        if (a == 0) {
            if (n < 0) throw DivisionByZero("negative power of zero");
            return n == 0 ? 1 : 0;
        }
        const long long m = static_cast<long long>(q_) - 1;
        long long k = (static_cast<long long>(log_[a]) * (n % m)) % m;
        if (k < 0) k += m;
        return exp_[static_cast<std::size_t>(k)];
    }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }
    std::uint32_t generator() const { return spec_.generator; }
    /// generator^n
    std::uint32_t gen_pow(long long n) const {
        const long long m = static_cast<long long>(q_) - 1;
        long long k = n % m;
        if (k < 0) k += m;
        return exp_[static_cast<std::size_t>(k)];
    }
    /// Discrete log to the base of the generator.
    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("log of zero");
        return log_[a];
    }
    /// Image of the integer n in the prime subfield.
    std::uint32_t from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t order(std::uint32_t a) const {
        if (a == 0) throw InvalidInput("zero has no multiplicative order");
        std::uint32_t m = q_ - 1, best = m;
        for (std::uint32_t d = 1; d <= m; ++d)
            if (m % d == 0 && pow(a, d) == 1) { best = d; break; }
        return best;
    }
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }
    bool in_prime_subfield(std::uint32_t a) const { return a < p_; }

    /// Elements in index order 0, 1, ..., q-1.
    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
        return out;
    }
    /// 0, a, a^2, ..., a^{q-1} = 1 for the generator a.
    std::vector<std::uint32_t> elements_generator_order() const {
        std::vector<std::uint32_t> out{0};
        for (std::uint32_t i = 1; i < q_; ++i) out.push_back(gen_pow(i));
        return out;
    }
    std::uint32_t position_in_generator_order(std::uint32_t a) const {
        if (a == 0) return 0;
        const std::uint32_t l = log_[a];
        return l == 0 ? q_ - 1 : l;
    }

    std::vector<std::uint32_t> coefficients(std::uint32_t a) const {
        std::vector<std::uint32_t> c(e_);
        for (std::uint32_t i = 0; i < e_; ++i, a /= p_) c[i] = a % p_;
        return c;
    }
    std::uint32_t from_coefficients(const std::vector<std::uint32_t>& c) const {
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
        return v;
    }

    /// Integer for prime fields, "(c0,...,c_{e-1})" otherwise.
    std::string to_string(std::uint32_t a) const {
        if (e_ == 1) return std::to_string(a);
        std::string out = "(";
        auto c = coefficients(a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c[i]);
        }
        return out + ")";
    }
    std::uint32_t parse_element(std::string_view s) const {
        s = detail::trim(s);
        if (!s.empty() && s.front() == '(') {
            if (s.back() != ')') throw InvalidInput("unbalanced element tuple");
            std::vector<std::uint32_t> c;
            for (auto part : detail::split(s.substr(1, s.size() - 2), ',')) {
                const long long v = detail::parse_int(part);
                if (v < 0 || v >= static_cast<long long>(p_)) throw InvalidInput("coefficient out of range");
                c.push_back(static_cast<std::uint32_t>(v));
            }
            if (c.size() != e_) throw InvalidInput("element tuple has wrong length");
            return from_coefficients(c);
        }
        const long long v = detail::parse_int(s);
        if (e_ == 1) {
            if (v < 0 || v >= static_cast<long long>(p_)) throw InvalidInput("element out of range");
            return static_cast<std::uint32_t>(v);
        }
        return from_int(v);
    }

    /// Residue of the modulus polynomial evaluated at the element y of this field.
    std::uint32_t eval_prime_poly(const std::vector<std::uint32_t>& f, std::uint32_t y) const {
        std::uint32_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, y), from_int(f[i]));
        return acc;
    }

    GaloisField(const GaloisField&) = delete;
    GaloisField& operator=(const GaloisField&) = delete;

   private:
    explicit GaloisField(const FieldSpec& s) : spec_(s), p_(s.p), e_(s.e), q_(static_cast<std::uint32_t>(s.q())) {
        build_tables();
    }

    static FieldSpec resolve(FieldSpec s) {
        if (!detail::is_prime(s.p)) throw InvalidInput("characteristic is not prime: " + std::to_string(s.p));
        if (s.e < 1) throw InvalidInput("extension degree must be positive");
        if (s.q() > (1u << 20)) throw InvalidInput("field too large for table arithmetic");
        if (s.e == 1) {
            s.modulus = {0, 1};
        } else if (s.modulus.empty()) {
            s.modulus = default_modulus(s.p, s.e);
        } else {
            if (s.modulus.size() != s.e + 1) throw InvalidInput("modulus must have e+1 coefficients");
            if (s.modulus.back() != 1) throw InvalidInput("modulus must be monic");
            if (!detail::pp_irreducible(s.modulus, s.p)) throw InvalidInput("modulus is not irreducible over F_p");
        }
        if (s.generator == 0) s.generator = first_primitive(s);
        else if (s.generator >= s.q()) throw InvalidInput("generator out of range");
        return s;
    }

    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e) {
        const std::uint64_t count = detail::ipow(p, e);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            detail::PrimePoly f(e + 1);
            std::uint64_t t = idx;
            for (std::uint32_t i = 0; i < e; ++i, t /= p) f[i] = static_cast<std::uint32_t>(t % p);
            f[e] = 1;
            if (detail::pp_irreducible(f, p)) return f;
        }
        throw InternalError("no irreducible polynomial found");
    }

    // multiplication of residues modulo the modulus, used only while building tables
    static std::uint32_t slow_mul(const FieldSpec& s, std::uint32_t a, std::uint32_t b) {
        const std::uint32_t p = s.p, e = s.e;
        detail::PrimePoly x(e), y(e);
        for (std::uint32_t i = 0; i < e; ++i, a /= p, b /= p) x[i] = a % p, y[i] = b % p;
        detail::PrimePoly prod(2 * e, 0);
        for (std::uint32_t i = 0; i < e; ++i)
            for (std::uint32_t j = 0; j < e; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(x[i]) * y[j]) % p);
        auto r = detail::pp_mod(prod, s.modulus, p);
        std::uint32_t v = 0;
        for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
        return v;
    }

    static std::uint32_t first_primitive(const FieldSpec& s) {
        const std::uint32_t q = static_cast<std::uint32_t>(s.q());
        if (q == 2) return 1;
        for (std::uint32_t g = 1; g < q; ++g) {
            std::uint32_t x = g, ord = 1;
            while (x != 1) {
                x = slow_mul(s, x, g);
                ++ord;
                if (ord > q) break;
            }
            if (ord == q - 1) return g;
        }
        throw InvalidInput("modulus is not irreducible (no primitive element)");
    }

    std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool) const {
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < e_; ++i, a /= p_, b /= p_, scale *= p_) r += ((a % p_ + b % p_) % p_) * scale;
        return r;
    }

    void build_tables() {
        const std::uint32_t q = q_;
        exp_.assign(2 * std::size_t(q), 0);
        log_.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
            if (i > 0 && x == 1) throw InvalidInput("generator does not have order q-1");
            exp_[i] = x;
            log_[x] = i;
            x = slow_mul(spec_, x, spec_.generator);
        }
        if (x != 1) throw InvalidInput("generator does not have order q-1");
        for (std::uint32_t i = q - 1; i < 2 * q; ++i) exp_[i] = exp_[i - (q - 1)];
        neg_.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t r = 0, scale = 1, t = a;
            for (std::uint32_t i = 0; i < e_; ++i, t /= p_, scale *= p_) r += ((p_ - t % p_) % p_) * scale;
            neg_[a] = r;
        }
        if (q <= 1024) {
            add_.assign(std::size_t(q) * q, 0);
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b) add_[std::size_t(a) * q + b] = digitwise(a, b, false);
        }
    }

    FieldSpec spec_;
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> exp_, log_, neg_, add_;
};

/// Field element bundled with its field, for generic linear algebra.
struct Gf {
    const GaloisField* F = nullptr;
    std::uint32_t v = 0;

    Gf() = default;
    Gf(const GaloisField& f, std::uint32_t value) : F(&f), v(value) {}

    friend Gf operator+(Gf a, Gf b) { return {*a.F, a.F->add(a.v, b.v)}; }
    friend Gf operator-(Gf a, Gf b) { return {*a.F, a.F->sub(a.v, b.v)}; }
    friend Gf operator*(Gf a, Gf b) { return {*a.F, a.F->mul(a.v, b.v)}; }
    friend Gf operator/(Gf a, Gf b) { return {*a.F, a.F->div(a.v, b.v)}; }
    Gf operator-() const { return {*F, F->neg(v)}; }
    Gf& operator+=(Gf b) { return *this = *this + b; }
    Gf& operator-=(Gf b) { return *this = *this - b; }
    Gf& operator*=(Gf b) { return *this = *this * b; }
    Gf& operator/=(Gf b) { return *this = *this / b; }
    friend bool operator==(Gf a, Gf b) { return a.v == b.v; }
    Gf inv() const { return {*F, F->inv(v)}; }
    Gf pow(long long n) const { return {*F, F->pow(v, n)}; }
    std::string to_string() const { return F->to_string(v); }
};

inline Gf zero_like(const Gf& x) { return {*x.F, 0}; }
inline Gf one_like(const Gf& x) { return {*x.F, 1}; }
inline bool is_zero(const Gf& x) { return x.v == 0; }
inline Gf from_int_like(const Gf& x, long long n) { return {*x.F, x.F->from_int(n)}; }

/// Field embedding F_small -> F_big sending the defining root x of F_small to the
/// first root (in index order) of its modulus inside F_big.
class FieldEmbedding {
   public:
    static const FieldEmbedding& get(const GaloisField& small, const GaloisField& big) {
        static std::mutex mtx;
        static std::map<std::pair<const GaloisField*, const GaloisField*>, std::unique_ptr<FieldEmbedding>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(&small, &big);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<FieldEmbedding>(new FieldEmbedding(small, big))).first;
        return *it->second;
    }

    const GaloisField& source() const { return *small_; }
    const GaloisField& target() const { return *big_; }
    std::uint32_t operator()(std::uint32_t x) const { return image_[x]; }
    std::optional<std::uint32_t> preimage(std::uint32_t y) const {
        if (preimage_[y] < 0) return std::nullopt;
        return static_cast<std::uint32_t>(preimage_[y]);
    }

   private:
    FieldEmbedding(const GaloisField& small, const GaloisField& big) : small_(&small), big_(&big) {
        if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0)
            throw InvalidInput("no embedding F_" + std::to_string(small.size()) + " -> F_" + std::to_string(big.size()));
        std::uint32_t root = 0;
        if (small.degree() > 1) {
            bool found = false;
            for (std::uint32_t y = 0; y < big.size() && !found; ++y)
                if (big.eval_prime_poly(small.spec().modulus, y) == 0) root = y, found = true;
            if (!found) throw InternalError("modulus has no root in the extension");
        }
        image_.assign(small.size(), 0);
        preimage_.assign(big.size(), -1);
        for (std::uint32_t x = 0; x < small.size(); ++x) {
            auto c = small.coefficients(x);
            std::uint32_t acc = 0;
            for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, root), big.from_int(c[i]));
            if (small.degree() == 1) acc = big.from_int(x);
            image_[x] = acc;
            preimage_[acc] = static_cast<std::int64_t>(x);
        }
    }

    const GaloisField* small_;
    const GaloisField* big_;
    std::vector<std::uint32_t> image_;
    std::vector<std::int64_t> preimage_;
};

/// C(n, k) mod p by Lucas' theorem.
inline std::uint32_t binom_mod_p_lucas(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // small binomial by multiplicative formula mod p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < ki; ++i) {
            num = num * ((ni - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        result = result * num % p * detail::pp_inv(static_cast<std::uint32_t>(den), p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

/// C(n, k) mod p through the exact integer value; requires n <= 64.
inline std::uint32_t binom_mod_p_exact(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (n > 64) throw InvalidInput("exact binomial path limited to n <= 64");
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return static_cast<std::uint32_t>(c % p);
}

/// C(n, k) mod p; 0 when k > n.
inline std::uint32_t binom_mod_p(long long n, long long k, std::uint32_t p) {
    if (n < 0 || k < 0) throw InvalidInput("binomial arguments must be nonnegative");
    if (k > n) return 0;
    if (n <= 64) return binom_mod_p_exact(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p);
    return binom_mod_p_lucas(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p);
}

}  // namespace dhecke

#endif
