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
 * @file tree.hpp
 * @brief The (q+1)-regular tree of PGL_2(K_inf), with K_inf = F_q((pi)), pi = 1/T.
 *
 * Vertex (n, u) is the class of (pi^n u; 0 1), u taken modulo pi^n O_inf. The
 * directed edge <g> runs from gK to g w K with w = (0 1; pi 0), so
 *   <I>          = (0,0) -> (-1,0)
 *   <(0 1;1 0)>  = (0,0) -> (1,0)
 *   <(r 1;1 0)>  = (0,0) -> (1,r)
 */

#ifndef DHECKE_TREE_HPP
#define DHECKE_TREE_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "cocycle.hpp"

namespace dhecke {

inline constexpr int kExactPrecision = std::numeric_limits<int>::max() / 4;

namespace detail {
inline int sat(long long x) {
    if (x >= kExactPrecision) return kExactPrecision;
    if (x <= -kExactPrecision) return -kExactPrecision;
    return static_cast<int>(x);
}
}  // namespace detail

/// Truncated Laurent series sum_i c_i pi^i known modulo pi^prec. prec == kExactPrecision
/// marks an exact value (a Laurent polynomial).
class LaurentNum {
   public:
    explicit LaurentNum(const GaloisField& F, int prec = kExactPrecision) : F_(&F), prec_(prec) {}

    static LaurentNum monomial(const GaloisField& F, std::uint32_t c, int e) {
        LaurentNum r(F);
        if (c != 0) {
            r.val_ = e;
            r.c_ = {c};
        }
        return r;
    }
    /// T^i = pi^{-i}; exact.
    static LaurentNum from_poly(const Poly& p) {
        LaurentNum r(p.field());
        if (p.is_zero()) return r;
        r.val_ = -p.degree();
        r.c_.assign(p.coeffs().rbegin(), p.coeffs().rend());
        r.normalize();
        return r;
    }
    /// Expansion at infinity, correct modulo pi^prec.
    static LaurentNum from_ratfunc(const RatFunc& f, int prec) {
        const auto n = from_poly(f.num());
        if (f.is_poly()) return n.truncated_to(prec);
        return div(n, from_poly(f.den()), prec);
    }

    const GaloisField& field() const { return *F_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExactPrecision; }
    /// True when no nonzero coefficient is known (exact zero or O(pi^prec)).
    bool is_zero() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    int valuation() const {
        if (c_.empty()) throw PrecisionError("valuation of a Laurent number with no known nonzero digit");
        return val_;
    }
    /// Lower bound for the valuation.
    int valuation_bound() const { return c_.empty() ? prec_ : val_; }
    std::uint32_t coeff(int e) const {
        if (e >= prec_) throw PrecisionError("coefficient beyond the known precision");
        if (c_.empty() || e < val_ || e >= val_ + static_cast<int>(c_.size())) return 0;
        return c_[e - val_];
    }
    /// Exponents with nonzero coefficient are val .. top.
    int top() const { return c_.empty() ? val_ - 1 : val_ + static_cast<int>(c_.size()) - 1; }

    /// Exact Laurent polynomial keeping the exponents < n; needs prec >= n.
    LaurentNum truncated(int n) const {
        if (prec_ < n) throw PrecisionError("truncation beyond the known precision");
        LaurentNum r(*F_);
        r.val_ = val_;
        r.c_ = c_;
        r.cut(n);
        return r;
    }
    /// Same value with precision lowered to min(prec, n).
    LaurentNum truncated_to(int n) const {
        LaurentNum r = *this;
        r.prec_ = std::min(prec_, n);
        r.cut(r.prec_);
        return r;
    }

    friend LaurentNum operator+(const LaurentNum& a, const LaurentNum& b) { return add(a, b, false); }
    friend LaurentNum operator-(const LaurentNum& a, const LaurentNum& b) { return add(a, b, true); }
    LaurentNum operator-() const {
        LaurentNum r = *this;
        for (auto& x : r.c_) x = F_->neg(x);
        return r;
    }
    friend LaurentNum operator*(const LaurentNum& a, const LaurentNum& b) {
        const GaloisField& F = *a.F_;
        const int prec = std::min(detail::sat(static_cast<long long>(a.valuation_bound()) + b.prec_),
                                  detail::sat(static_cast<long long>(b.valuation_bound()) + a.prec_));
        LaurentNum r(F, prec);
        if (a.c_.empty() || b.c_.empty()) return r;
        r.val_ = a.val_ + b.val_;
        const long long room = static_cast<long long>(prec) - r.val_;
        const std::size_t len = std::min<long long>(static_cast<long long>(a.c_.size() + b.c_.size() - 1), std::max(room, 0LL));
        r.c_.assign(len, 0);
        for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j)
                r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
        }
        r.normalize();
        return r;
    }
    /// a / b modulo pi^min(cap, what the inputs support).
    static LaurentNum div(const LaurentNum& a, const LaurentNum& b, int cap) {
        const GaloisField& F = *a.F_;
        if (b.c_.empty()) {
            if (b.is_exact()) throw DivisionByZero("Laurent division by zero");
            throw PrecisionError("Laurent division by a number with no known digit");
        }
        const long long vb = b.val_;
        const long long rel_b = static_cast<long long>(b.prec_) - vb;
        const int prec = std::min({detail::sat(a.prec_ - vb), detail::sat(a.valuation_bound() - vb + rel_b), cap});
        LaurentNum r(F, prec);
        if (a.c_.empty()) return r;
        r.val_ = a.val_ - b.val_;
        const long long nterms = static_cast<long long>(prec) - r.val_;
        if (nterms <= 0) {
            r.c_.clear();
            return r;
        }
        // long division of the digit strings
        std::vector<std::uint32_t> rem(static_cast<std::size_t>(nterms), 0);
        for (std::size_t i = 0; i < a.c_.size() && i < rem.size(); ++i) rem[i] = a.c_[i];
        const std::uint32_t inv0 = F.inv(b.c_[0]);
        r.c_.assign(rem.size(), 0);
        for (std::size_t i = 0; i < rem.size(); ++i) {
            const std::uint32_t q = F.mul(rem[i], inv0);
            r.c_[i] = q;
            if (q == 0) continue;
            for (std::size_t j = 1; j < b.c_.size() && i + j < rem.size(); ++j)
                rem[i + j] = F.sub(rem[i + j], F.mul(q, b.c_[j]));
        }
        r.normalize();
        return r;
    }

    /// Exact values only.
    RatFunc to_ratfunc() const {
        if (!is_exact()) throw PrecisionError("to_ratfunc of an inexact Laurent number");
        const GaloisField& F = *F_;
        if (c_.empty()) return RatFunc(Poly(F));
        // sum c_i T^{-(val+i)} = (sum c_i T^{N-val-i}) / T^N, N = max(0, top)
        const int N = std::max(0, top());
        std::vector<std::uint32_t> num(static_cast<std::size_t>(N - val_ + 1), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) num[static_cast<std::size_t>(N - val_) - i] = c_[i];
        return RatFunc(Poly(F, num), Poly::monomial(F, 1, static_cast<std::size_t>(N)));
    }

    friend bool operator==(const LaurentNum& a, const LaurentNum& b) {
        return a.prec_ == b.prec_ && a.c_ == b.c_ && (a.c_.empty() || a.val_ == b.val_);
    }
    friend bool operator<(const LaurentNum& a, const LaurentNum& b) {
        const int va = a.c_.empty() ? 0 : a.val_, vb = b.c_.empty() ? 0 : b.val_;
        return std::tie(a.prec_, va, a.c_) < std::tie(b.prec_, vb, b.c_);
    }

    /// "2pi^-1+pi^2+O(pi^5)"; exact zero is "0".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const int e = val_ + static_cast<int>(i);
            if (!s.empty()) s += "+";
            const std::string c = F_->degree() > 1 ? "(" + F_->to_string(c_[i]) + ")" : F_->to_string(c_[i]);
            if (e == 0) {
                s += c;
                continue;
            }
            if (c_[i] != 1) s += c;
            s += e == 1 ? "pi" : "pi^" + std::to_string(e);
        }
        if (!is_exact()) s += (s.empty() ? "" : "+") + std::string("O(pi^") + std::to_string(prec_) + ")";
        return s.empty() ? "0" : s;
    }

   private:
    static LaurentNum add(const LaurentNum& a, const LaurentNum& b, bool negate) {
        const GaloisField& F = *a.F_;
        LaurentNum r(F, std::min(a.prec_, b.prec_));
        if (a.c_.empty() && b.c_.empty()) return r;
        const int lo = a.c_.empty() ? b.val_ : (b.c_.empty() ? a.val_ : std::min(a.val_, b.val_));
        const int hi = std::min(std::max(a.top(), b.top()), r.prec_ - 1);
        if (hi < lo) return r;
        r.val_ = lo;
        r.c_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const int e = a.val_ + static_cast<int>(i);
            if (e <= hi) r.c_[e - lo] = a.c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            const int e = b.val_ + static_cast<int>(i);
            if (e <= hi) r.c_[e - lo] = negate ? F.sub(r.c_[e - lo], b.c_[i]) : F.add(r.c_[e - lo], b.c_[i]);
        }
        r.normalize();
        return r;
    }
    void cut(int n) {
        if (c_.empty()) return;
        if (n <= val_) {
            c_.clear();
            return;
        }
        if (val_ + static_cast<long long>(c_.size()) > n) c_.resize(static_cast<std::size_t>(n - val_));
        normalize();
    }
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = 0;
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<int>(lead);
        }
        while (c_.back() == 0) c_.pop_back();
    }

    const GaloisField* F_;
    int val_ = 0;
    std::vector<std::uint32_t> c_;
    int prec_;
};

/// Vertex (n, u): u is an exact Laurent polynomial with exponents < n.
struct TreeVertex {
    int n = 0;
    LaurentNum u;

    TreeVertex(int level, LaurentNum rep) : n(level), u(rep.truncated(level)) {}

    /// The q+1 neighbours: (n-1, u mod pi^{n-1}) first, then (n+1, u + c pi^n) for c in F_q.
    std::vector<TreeVertex> neighbours() const {
        const GaloisField& F = u.field();
        std::vector<TreeVertex> out{TreeVertex(n - 1, u)};
        for (std::uint32_t c : F.elements()) out.emplace_back(n + 1, u + LaurentNum::monomial(F, c, n));
        return out;
    }
    bool adjacent(const TreeVertex& o) const {
        if (o.n == n - 1) return o.u == u.truncated(n - 1);
        if (o.n == n + 1) return u == o.u.truncated(n);
        return false;
    }

    friend bool operator==(const TreeVertex& a, const TreeVertex& b) { return a.n == b.n && a.u == b.u; }
    friend bool operator<(const TreeVertex& a, const TreeVertex& b) { return std::tie(a.n, a.u) < std::tie(b.n, b.u); }
    std::string to_string() const { return "(" + std::to_string(n) + "; " + u.to_string() + ")"; }
};

struct TreeEdge {
    TreeVertex tail, head;

    TreeEdge(TreeVertex t, TreeVertex h) : tail(std::move(t)), head(std::move(h)) {
        if (!tail.adjacent(head)) throw InvalidInput("edge endpoints are not adjacent");
    }
    TreeEdge reversed() const { return TreeEdge(head, tail); }

    friend bool operator==(const TreeEdge& a, const TreeEdge& b) { return a.tail == b.tail && a.head == b.head; }
    friend bool operator<(const TreeEdge& a, const TreeEdge& b) { return std::tie(a.tail, a.head) < std::tie(b.tail, b.head); }
    std::string to_string() const { return tail.to_string() + " -> " + head.to_string(); }
};

/// 2x2 matrix over F_q[T]; group elements have determinant in F_q^x.
struct Mat2 {
    Poly a, b, c, d;

    static Mat2 identity(const GaloisField& F) { return {Poly::constant(F, 1), Poly(F), Poly(F), Poly::constant(F, 1)}; }
    Poly det() const { return a * d - b * c; }
    bool is_unit() const {
        const Poly D = det();
        return D.degree() == 0;
    }
    /// Inverse in GL_2(F_q[T]); needs det in F_q^x.
    Mat2 inverse() const {
        const Poly D = det();
        if (D.degree() != 0) throw InvalidInput("matrix is not invertible over F_q[T]");
        const std::uint32_t s = D.field().inv(D.coeff(0));
        return {d.scaled(s), (-b).scaled(s), (-c).scaled(s), a.scaled(s)};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
    int max_degree() const { return std::max({a.degree(), b.degree(), c.degree(), d.degree()}); }
    std::string to_string() const {
        return "(" + a.to_string() + " " + b.to_string() + "; " + c.to_string() + " " + d.to_string() + ")";
    }
};

inline bool in_group(const Mat2& g, GroupKind kind) {
    const Poly D = g.det();
    if (!(D.degree() == 0 && D.coeff(0) == 1)) return false;
    if (g.a.coeff(0) != 1 || g.d.coeff(0) != 1 || g.c.coeff(0) != 0) return false;
    return kind == GroupKind::Gamma1T || g.b.coeff(0) == 0;
}

/// 2x2 matrix over K_inf.
struct LMat2 {
    LaurentNum a, b, c, d;
    static LMat2 from(const Mat2& g) {
        return {LaurentNum::from_poly(g.a), LaurentNum::from_poly(g.b), LaurentNum::from_poly(g.c), LaurentNum::from_poly(g.d)};
    }
};

namespace detail {
/// Iwasawa reduction of (x y; z w) to the vertex (n', u'). vdet is the valuation of the determinant.
inline TreeVertex vertex_of(const LaurentNum& x, const LaurentNum& y, const LaurentNum& z, const LaurentNum& w, int vdet) {
    // pivot on the dominant entry of the bottom row
    bool use_w;
    if (z.is_exact_zero()) use_w = true;
    else if (w.is_exact_zero()) use_w = false;
    else if (!w.is_zero() && !z.is_zero()) use_w = w.valuation() <= z.valuation();
    else if (!w.is_zero()) {
        if (w.valuation() >= z.valuation_bound()) throw PrecisionError("cannot order the bottom row");
        use_w = true;
    } else if (!z.is_zero()) {
        if (z.valuation() >= w.valuation_bound()) throw PrecisionError("cannot order the bottom row");
        use_w = false;
    } else {
        throw PrecisionError("bottom row has no known digit");
    }
    const LaurentNum& piv = use_w ? w : z;
    const LaurentNum& top = use_w ? y : x;
    const int n = vdet - 2 * piv.valuation();
    const LaurentNum u = LaurentNum::div(top, piv, n);
    if (u.precision() < n) throw PrecisionError("not enough digits to place the vertex");
    return TreeVertex(n, u);
}

inline int det_valuation(const LMat2& m) {
    const LaurentNum D = m.a * m.d - m.b * m.c;
    if (D.is_exact_zero()) throw InvalidInput("singular matrix");
    return D.valuation();
}
}  // namespace detail

/// Vertex gK.
inline TreeVertex vertex_of_matrix(const LMat2& g) { return detail::vertex_of(g.a, g.b, g.c, g.d, detail::det_valuation(g)); }

/// <g> in normal form.
inline TreeEdge edge_of_matrix(const LMat2& g) {
    const GaloisField& F = g.a.field();
    const LaurentNum pi = LaurentNum::monomial(F, 1, 1);
    // g w = (b pi, a; d pi, c)
    const LMat2 gw{g.b * pi, g.a, g.d * pi, g.c};
    return TreeEdge(vertex_of_matrix(g), vertex_of_matrix(gw));
}
inline TreeEdge edge_of_matrix(const Mat2& g) { return edge_of_matrix(LMat2::from(g)); }

/// Entries over F_q(T): expands to `prec` digits, doubling on PrecisionError (at most 4 retries).
inline TreeEdge edge_of_matrix(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d, int prec = 16) {
    for (int attempt = 0;; ++attempt) {
        try {
            const LMat2 g{LaurentNum::from_ratfunc(a, prec), LaurentNum::from_ratfunc(b, prec), LaurentNum::from_ratfunc(c, prec),
                          LaurentNum::from_ratfunc(d, prec)};
            return edge_of_matrix(g);
        } catch (const PrecisionError&) {
            if (attempt >= 4) throw;
            prec *= 2;
        }
    }
}

/// Left translation of a vertex by g (any matrix with nonzero determinant).
inline TreeVertex act(const LMat2& g, const TreeVertex& v) {
    const GaloisField& F = g.a.field();
    const LaurentNum pn = LaurentNum::monomial(F, 1, v.n);
    // g (pi^n u; 0 1)
    const LaurentNum x = g.a * pn, y = g.a * v.u + g.b, z = g.c * pn, w = g.c * v.u + g.d;
    return detail::vertex_of(x, y, z, w, detail::det_valuation(g) + v.n);
}
inline TreeEdge act(const LMat2& g, const TreeEdge& e) { return TreeEdge(act(g, e.tail), act(g, e.head)); }
inline TreeVertex act(const Mat2& g, const TreeVertex& v) { return act(LMat2::from(g), v); }
inline TreeEdge act(const Mat2& g, const TreeEdge& e) { return act(LMat2::from(g), e); }

inline TreeVertex origin_vertex(const GaloisField& F) { return TreeVertex(0, LaurentNum(F)); }

namespace detail {
/// All polynomials of degree <= D (constant term fixed to c0 when c0 >= 0), zero first.
inline std::vector<Poly> polys_up_to(const GaloisField& F, int D, int c0) {
    std::vector<Poly> out;
    const std::uint32_t q = F.size();
    const int free = c0 >= 0 ? D : D + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> c;
        if (c0 >= 0) c.push_back(static_cast<std::uint32_t>(c0));
        std::uint64_t t = idx;
        for (int i = 0; i < free; ++i) {
            c.push_back(static_cast<std::uint32_t>(t % q));
            t /= q;
        }
        out.emplace_back(F, std::move(c));
    }
    return out;
}
}  // namespace detail

/// Elements of Gamma_1(T) or Gamma(T) whose entries have degree <= depth, ordered by
/// (max entry degree, a, b, c). Cached per (group, field, depth).
inline const std::vector<Mat2>& group_elements(GroupKind kind, const GaloisField& F, int depth) {
    static std::mutex mu;
    static std::map<std::tuple<int, const GaloisField*, int>, std::vector<Mat2>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(kind), &F, depth);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Mat2> out;
    const auto as = detail::polys_up_to(F, depth, 1);
    const auto bs = detail::polys_up_to(F, depth, kind == GroupKind::GammaT ? 0 : -1);
    const auto cs = detail::polys_up_to(F, depth, 0);
    const Poly one = Poly::constant(F, 1);
    for (const auto& a : as)
        for (const auto& c : cs)
            for (const auto& b : bs) {
                auto [d, rem] = Poly::divmod(one + b * c, a);
                if (!rem.is_zero() || d.degree() > depth) continue;
                out.push_back({a, b, c, d});
            }
    std::stable_sort(out.begin(), out.end(), [](const Mat2& x, const Mat2& y) { return x.max_degree() < y.max_degree(); });
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace dhecke

#endif
