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
 * @file eigen.hpp
 * @brief Eigenvalues in F_q[T], eigenspaces and a diagonalizability certificate.
 *
 * Diagonalizable over the algebraic closure of F_q(T) iff the minimal polynomial is
 * separable, which is decided by gcd(m, m') without factoring.
 */

#ifndef DHECKE_EIGEN_HPP
#define DHECKE_EIGEN_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charpoly.hpp"
#include "hecke.hpp"

namespace dhecke {

struct RationalEigen {
    Poly value;
    int algebraic = 0;
    int geometric = 0;
    std::vector<Vec<RatFunc>> basis;
};

/// What is left of the minimal polynomial after removing the linear factors over F_q[T].
/// Not factored further; `charpoly_degree` is the degree of the matching charpoly cofactor.
struct IrrationalPart {
    UPoly<RatFunc> factor;
    bool separable = true;
    int charpoly_degree = 0;
};

struct SpecializationInfo {
    std::string field;               // F_{q^s}
    std::vector<std::string> points;  // values of T used
};

struct EigenReport {
    std::string label;
    std::size_t size = 0;
    UPoly<RatFunc> charpoly;
    UPoly<RatFunc> minpoly;
    std::vector<RationalEigen> rational;
    std::vector<IrrationalPart> irrational;
    bool diagonalizable = false;
    UPoly<RatFunc> certificate_gcd;  // gcd(minpoly, minpoly')
    std::optional<bool> eigenone_holds;  // Gamma(T) only
    SpecializationInfo specialization;
};

namespace detail {

inline RatFunc eval_upoly_at(const UPoly<RatFunc>& f, const RatFunc& x) { return f.eval(x); }

/// Multiplicity of (X - lambda) in f.
inline int root_multiplicity(UPoly<RatFunc> f, const RatFunc& lambda) {
    const auto lin = UPoly<RatFunc>::linear(lambda);
    int m = 0;
    while (f.degree() > 0) {
        auto [qt, r] = UPoly<RatFunc>::divmod(f, lin);
        if (!r.is_zero()) break;
        f = std::move(qt);
        ++m;
    }
    return m;
}

inline UPoly<RatFunc> strip_root(UPoly<RatFunc> f, const RatFunc& lambda, int times) {
    const auto lin = UPoly<RatFunc>::linear(lambda);
    for (int i = 0; i < times; ++i) f = f / lin;
    return f;
}

inline std::vector<std::uint32_t> specialize(const UPoly<RatFunc>& chi, const FieldEmbedding& emb, std::uint32_t t) {
    std::vector<std::uint32_t> c;
    for (const auto& x : chi.coeffs()) c.push_back(x.eval(emb, t));
    return c;
}

inline std::uint32_t eval_dense(const GaloisField& G, const std::vector<std::uint32_t>& c, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = G.add(G.mul(acc, x), c[i]);
    return acc;
}

}  // namespace detail

/// Smallest s with q^s > 4 (bound + 1) + n.
inline int specialization_degree(const GaloisField& F, int degree_bound, std::size_t n) {
    const std::uint64_t need = 4ull * static_cast<std::uint64_t>(degree_bound + 1) + n;
    std::uint64_t qs = F.size();
    int s = 1;
    while (qs <= need) {
        qs *= F.size();
        ++s;
    }
    return s;
}

/// Every lambda in F_q[T] of degree <= degree_bound with det(M - lambda) = 0, plus the
/// verified caller candidates. Each returned value has a nonzero kernel of M - lambda.
inline std::vector<Poly> rational_eigenvalues(const MatrixQ& M, int degree_bound, const std::vector<Poly>& candidates = {},
                                              unsigned seed = 0, SpecializationInfo* info = nullptr,
                                              const UPoly<RatFunc>* chi_in = nullptr) {
    if (!M.is_square()) throw ShapeError("eigenvalues of a non-square matrix");
    if (degree_bound < 0) throw InvalidInput("degree bound must be >= 0");
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_poly()) throw InvalidInput("rational_eigenvalues needs polynomial entries");
    const GaloisField& F = M.zero().field();
    const std::size_t n = M.rows();
    const UPoly<RatFunc> chi = chi_in ? *chi_in : charpoly(M);
    std::vector<Poly> found;
    auto accept = [&](const Poly& lam) {
        if (std::find(found.begin(), found.end(), lam) != found.end()) return;
        if (!chi.eval(RatFunc(lam)).is_zero()) return;
        if (nullspace(M.minus_scalar(RatFunc(lam))).empty()) throw InternalError("charpoly root without kernel");
        found.push_back(lam);
    };
    for (const auto& c : candidates) accept(c);
    if (n == 0) return found;

    // specialize T at points of F_{q^s}
    const int s = specialization_degree(F, degree_bound, n);
    const GaloisField& G = GaloisField::get(F.characteristic(), F.degree() * s);
    const FieldEmbedding& emb = FieldEmbedding::get(F, G);
    std::vector<std::uint32_t> pts = G.elements();
    std::mt19937 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t npts = std::min<std::size_t>(pts.size(), static_cast<std::size_t>(degree_bound) + 3);
    pts.resize(npts);
    std::vector<std::vector<std::uint32_t>> roots(npts);
    std::vector<std::vector<std::uint32_t>> chis(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        chis[i] = detail::specialize(chi, emb, pts[i]);
        for (std::uint32_t y = 0; y < G.size(); ++y)
            if (detail::eval_dense(G, chis[i], y) == 0) roots[i].push_back(y);
    }
    if (info) {
        info->field = std::to_string(G.size());
        info->points.clear();
        for (auto t : pts) info->points.push_back(G.to_string(t));
    }
    const std::size_t base = static_cast<std::size_t>(degree_bound) + 1;
    // candidates agree with a root at every point
    auto passes_points = [&](const Poly& lam) {
        for (std::size_t i = 0; i < npts; ++i)
            if (detail::eval_dense(G, chis[i], lam.eval(emb, pts[i])) != 0) return false;
        return true;
    };
    long double combos = 1;
    for (std::size_t i = 0; i < base && i < npts; ++i) combos *= static_cast<long double>(roots[i].size());
    long double brute = 1;
    for (std::size_t i = 0; i < base; ++i) brute *= F.size();
    if (combos <= brute && npts >= base) {
        std::vector<std::size_t> idx(base, 0);
        bool empty = false;
        for (std::size_t i = 0; i < base; ++i) empty = empty || roots[i].empty();
        while (!empty) {
            std::vector<std::uint32_t> xs(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(base)), ys;
            for (std::size_t i = 0; i < base; ++i) ys.push_back(roots[i][idx[i]]);
            const Poly L = interpolate(G, xs, ys);
            std::vector<std::uint32_t> back;
            bool ok = true;
            for (auto c : L.coeffs()) {
                auto pre = emb.preimage(c);
                if (!pre) { ok = false; break; }
                back.push_back(*pre);
            }
            if (ok) {
                const Poly lam(F, back);
                if (passes_points(lam)) accept(lam);
            }
            std::size_t pos = 0;
            while (pos < base && ++idx[pos] == roots[pos].size()) idx[pos++] = 0;
            if (pos == base) break;
        }
    } else {
        std::vector<std::uint32_t> c(base, 0);
        while (true) {
            const Poly lam(F, c);
            if (passes_points(lam)) accept(lam);
            std::size_t pos = 0;
            while (pos < base && ++c[pos] == F.size()) c[pos++] = 0;
            if (pos == base) break;
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// Kernel of M - lambda, first nonzero coordinate scaled to 1.
inline std::vector<Vec<RatFunc>> eigenspace(const MatrixQ& M, const Poly& lambda) {
    if (!M.is_square()) throw ShapeError("eigenspace of a non-square matrix");
    auto basis = nullspace(M.minus_scalar(RatFunc(lambda)));
    for (auto& v : basis) v = normalize_first_nonzero(std::move(v));
    return basis;
}

struct DiagonalizabilityCertificate {
    bool diagonalizable = false;
    UPoly<RatFunc> minpoly;
    UPoly<RatFunc> gcd_with_derivative;
};

inline DiagonalizabilityCertificate diagonalizable(const MatrixQ& M) {
    if (!M.is_square()) throw ShapeError("diagonalizability of a non-square matrix");
    DiagonalizabilityCertificate c;
    c.minpoly = minpoly(M);
    c.gcd_with_derivative = UPoly<RatFunc>::gcd(c.minpoly, c.minpoly.derivative());
    c.diagonalizable = c.gcd_with_derivative.degree() == 0;
    return c;
}

/// Full report for a matrix with polynomial entries.
inline EigenReport analyze_matrix(const MatrixQ& M, int degree_bound, const std::vector<Poly>& candidates = {},
                                  std::string label = {}, unsigned seed = 0) {
    EigenReport R;
    R.label = std::move(label);
    R.size = M.rows();
    R.charpoly = charpoly(M);
    const auto cert = diagonalizable(M);
    R.minpoly = cert.minpoly;
    R.certificate_gcd = cert.gcd_with_derivative;
    R.diagonalizable = cert.diagonalizable;
    const auto eigs = rational_eigenvalues(M, degree_bound, candidates, seed, &R.specialization, &R.charpoly);
    UPoly<RatFunc> rest_min = R.minpoly, rest_char = R.charpoly;
    for (const auto& lam : eigs) {
        RationalEigen e;
        e.value = lam;
        const RatFunc l(lam);
        e.algebraic = detail::root_multiplicity(R.charpoly, l);
        e.basis = eigenspace(M, lam);
        e.geometric = static_cast<int>(e.basis.size());
        rest_char = detail::strip_root(rest_char, l, e.algebraic);
        rest_min = detail::strip_root(rest_min, l, detail::root_multiplicity(R.minpoly, l));
        R.rational.push_back(std::move(e));
    }
    if (rest_min.degree() > 0) R.irrational.push_back({rest_min.monic(), upoly_separable(rest_min), rest_char.degree()});
    return R;
}

/// Default degree bound d(k-2)/2 for a prime of degree d.
inline int default_degree_bound(const HeckeMatrix& H) { return H.prime.degree() * (H.spec.k - 2) / 2; }

inline std::string describe(const HeckeMatrix& H) {
    return to_string(H.spec.group) + " q=" + std::to_string(H.spec.q()) + " k=" + std::to_string(H.spec.k) + " P=" +
           H.prime.P.to_string();
}

/// Report for a Hecke matrix. For Gamma(T) it also checks that every rational eigenvector
/// with eigenvalue other than 1 satisfies the double-cusp constraints.
inline EigenReport analyze(const HeckeMatrix& H, const std::vector<Poly>& candidates, unsigned seed = 0) {
    EigenReport R = analyze_matrix(H.M, default_degree_bound(H), candidates, describe(H), seed);
    if (H.spec.group == GroupKind::GammaT && H.spec.layer == Layer::Cuspidal) {
        const MatrixQ C = double_cusp_constraints(H.spec);
        bool ok = true;
        for (const auto& e : R.rational) {
            if (e.value.is_one()) continue;
            for (const auto& v : e.basis)
                for (const auto& x : C * v) ok = ok && x.is_zero();
        }
        R.eigenone_holds = ok;
    }
    return R;
}

/// Candidates lambda_j(P), j = 0..k-2, for degree-one primes.
inline EigenReport analyze(const HeckeMatrix& H, unsigned seed = 0) {
    std::vector<Poly> cands;
    if (H.prime.degree() == 1) cands = distinct_lambdas(H.spec.k, H.prime);
    return analyze(H, cands, seed);
}

inline int total_geometric(const EigenReport& R) {
    int s = 0;
    for (const auto& e : R.rational) s += e.geometric;
    return s;
}

inline const RationalEigen* find_eigen(const EigenReport& R, const Poly& lam) {
    for (const auto& e : R.rational)
        if (e.value == lam) return &e;
    return nullptr;
}

}  // namespace dhecke

#endif
