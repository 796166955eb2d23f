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
 * @file hecke.hpp
 * @brief Closed-form matrices of the Hecke operator T_P for P = 1 + alpha T.
 *
 * Matrices act on coordinate columns: (T_P c)_row = sum_col M(row, col) c_col.
 * Row indices are output coordinates.
 */

#ifndef DHECKE_HECKE_HPP
#define DHECKE_HECKE_HPP

#include <map>
#include <vector>

#include "cocycle.hpp"
#include "upoly.hpp"

namespace dhecke {

/// Monic-at-zero irreducible P generating a prime other than (T).
struct HeckePrime {
    const GaloisField* F = nullptr;
    Poly P;

    HeckePrime() = default;
    explicit HeckePrime(Poly p) : F(&p.field()), P(std::move(p)) {
        if (P.degree() < 1) throw InvalidInput("Hecke prime must have positive degree");
        if (P.coeff(0) != 1) throw InvalidInput("Hecke prime must satisfy P(0) = 1");
        if (!P.is_irreducible()) throw InvalidInput("Hecke prime is reducible: " + P.to_string());
    }
    /// P = 1 + alpha T
    static HeckePrime degree_one(const GaloisField& F, std::uint32_t alpha) {
        if (alpha == 0 || alpha >= F.size()) throw InvalidInput("alpha must be a nonzero field element");
        return HeckePrime(Poly(F, {1, alpha}));
    }

    const GaloisField& field() const { return *F; }
    int degree() const { return P.degree(); }
    std::uint32_t alpha() const {
        if (degree() != 1) throw WrongDegree("alpha is only defined for degree-one primes");
        return P.coeff(1);
    }
    friend bool operator==(const HeckePrime& a, const HeckePrime& b) { return a.F == b.F && a.P == b.P; }
};

/// All degree-one primes 1 + alpha T, alpha in generator order a, a^2, ..., 1.
inline std::vector<HeckePrime> degree_one_primes(const GaloisField& F) {
    std::vector<HeckePrime> out;
    for (std::uint32_t i = 1; i < F.size(); ++i) out.push_back(HeckePrime::degree_one(F, F.gen_pow(i)));
    return out;
}

struct HeckeMatrix {
    SpaceSpec spec;
    HeckePrime prime;
    MatrixQ M;
};

namespace detail {

// C(n, k) mod p with the conventions C(n, k) = 0 for k < 0 or k > n
inline Poly binom_poly(const GaloisField& F, long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Poly(F);
    return Poly::constant(F, binom_mod_p(n, k, F.characteristic()));
}

// Powers 0..n of a polynomial
inline std::vector<Poly> powers(const Poly& x, int n) {
    std::vector<Poly> out{x.one()};
    for (int i = 1; i <= n; ++i) out.push_back(out.back() * x);
    return out;
}

inline void require_degree_one(const HeckePrime& prime) {
    if (prime.degree() != 1) throw WrongDegree("closed formulas need a degree-one prime, got degree " +
                                               std::to_string(prime.degree()));
}

}  // namespace detail

/// sum_l C(j,l) C(k-2-j,l) (-beta T)^l over the field G (lambda_j at Q = 1 + beta T).
inline Poly lambda_poly(const GaloisField& G, std::uint32_t beta, int j, int k) {
    if (j < 0 || j > k - 2) throw InvalidInput("j out of range [0, k-2]");
    Poly acc(G);
    const Poly base(G, {0, G.neg(beta)});
    Poly pw = Poly::constant(G, 1);
    for (int l = 0; l <= std::min(j, k - 2 - j); ++l) {
        const std::uint32_t c = G.mul(binom_mod_p(j, l, G.characteristic()), binom_mod_p(k - 2 - j, l, G.characteristic()));
        acc += pw.scaled(c);
        pw = pw * base;
    }
    return acc;
}

inline Poly lambda_eig(int j, int k, const HeckePrime& prime) {
    if (j < 0 || j > k - 2) throw InvalidInput("j out of range [0, k-2]");
    detail::require_degree_one(prime);
    return lambda_poly(prime.field(), prime.alpha(), j, k);
}

/// Distinct lambda_j(P), j = 0..k-2, in order of first appearance.
inline std::vector<Poly> distinct_lambdas(int k, const HeckePrime& prime) {
    std::vector<Poly> out;
    for (int j = 0; j <= k - 2; ++j) {
        Poly l = lambda_eig(j, k, prime);
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return out;
}

inline HeckeMatrix hecke_matrix_gamma1(const SpaceSpec& spec, const HeckePrime& prime) {
    if (spec.group != GroupKind::Gamma1T) throw GroupMismatch("hecke_matrix_gamma1 needs the Gamma_1(T) space");
    if (spec.layer != Layer::Cuspidal) throw InvalidInput("Hecke matrices are built on the cuspidal layer");
    detail::require_degree_one(prime);
    if (prime.F != spec.F) throw InvalidInput("prime and space use different fields");
    const GaloisField& F = spec.field();
    const int k = spec.k, q = spec.q(), s = q - 1;
    const Poly& P = prime.P;
    const auto Pp = detail::powers(P, k - 2);
    const auto Lp = detail::powers(P.one() - P, k - 2);
    const Poly Tpoly = Poly::T(F);
    MatrixQ M(k - 1, k - 1, spec.zero());
    auto add = [&](int row, int col, const Poly& v) {
        if (col < 0 || col > k - 2) throw InternalError("index shift left the range [0, k-2]");
        M(row, col) += RatFunc(v);
    };
    for (int j = 0; j <= k - 2; ++j) {
        add(j, j, Pp[k - 2 - j]);
        for (int m = 0; m <= j / s; ++m) {
            Poly v(F);
            for (int l = 0; l <= j - m * s; ++l)
                v += detail::binom_poly(F, j, l + m * s) * detail::binom_poly(F, k - 2 - j, l) * Lp[l];
            v -= Pp[k - 2 - j] * detail::binom_poly(F, j, m * s);
            add(j, j - m * s, v);
        }
        for (int n = 1; n <= (k - 2 - j) / s; ++n) {
            Poly v(F);
            for (int l = n * s; l <= k - 2 - j; ++l)
                v += detail::binom_poly(F, j, l - n * s) * detail::binom_poly(F, k - 2 - j, l) * Lp[l];
            v -= Pp[j] * detail::binom_poly(F, k - 2 - j, n * s) * Tpoly.pow(n * s);
            add(j, j + n * s, v);
        }
    }
    return {spec, prime, M};
}

struct HeckeBlock {
    int residue;
    std::vector<std::size_t> indices;
    MatrixQ M;
};

/// Restrictions to span{c_i, c_{i+(q-1)}, ...}, i = 0..min(q-2, k-2).
inline std::vector<HeckeBlock> block_decompose_gamma1(const HeckeMatrix& H) {
    if (H.spec.group != GroupKind::Gamma1T) throw GroupMismatch("block decomposition is for Gamma_1(T)");
    const int k = H.spec.k, s = H.spec.q() - 1;
    std::vector<HeckeBlock> out;
    for (int i = 0; i <= std::min(s - 1, k - 2); ++i) {
        std::vector<std::size_t> idx;
        for (int j = i; j <= k - 2; j += s) idx.push_back(j);
        out.push_back({i, idx, H.M.submatrix(idx, idx)});
    }
    return out;
}

/// Block [T_P]_i assembled from the alpha/beta closed forms (independent of hecke_matrix_gamma1).
inline MatrixQ block_closed_form(int i, int k, const HeckePrime& prime) {
    detail::require_degree_one(prime);
    const GaloisField& F = prime.field();
    const int s = static_cast<int>(F.size()) - 1;
    const int top = (k - 2 - i) / s;
    const Poly& P = prime.P;
    const Poly L = P.one() - P;
    const RatFunc zero(Poly{F});
    MatrixQ B(top + 1, top + 1, zero);
    auto C = [&](long long n, long long r) { return detail::binom_poly(F, n, r); };
    for (int mi = 0; mi <= top; ++mi) {
        const int J = i + mi * s;
        for (int mp = 0; mp <= mi; ++mp) {
            Poly a(F);
            for (int l = 0; l <= i + (mi - mp) * s; ++l) a += C(J, l + mp * s) * C(k - 2 - J, l) * L.pow(l);
            a -= P.pow(k - 2 - J) * C(J, mp * s);
            if (mp == 0) a += P.pow(k - 2 - J);
            B(mi, mi - mp) = RatFunc(a);
        }
        for (int n = 1; n <= top - mi; ++n) {
            Poly b(F);
            for (int l = n * s; l <= k - 2 - J; ++l) b += C(J, l - n * s) * C(k - 2 - J, l) * L.pow(l);
            b -= P.pow(J) * C(k - 2 - J, n * s) * Poly::T(F).pow(n * s);
            B(mi, mi + n) = RatFunc(b);
        }
    }
    return B;
}

/// Gamma(T) matrix in Z-coordinates from the general formula.
inline HeckeMatrix hecke_matrix_gammaT(const SpaceSpec& spec, const HeckePrime& prime) {
    if (spec.group != GroupKind::GammaT) throw GroupMismatch("hecke_matrix_gammaT needs the Gamma(T) space");
    if (spec.layer != Layer::Cuspidal) throw InvalidInput("Hecke matrices are built on the cuspidal layer");
    detail::require_degree_one(prime);
    if (prime.F != spec.F) throw InvalidInput("prime and space use different fields");
    const GaloisField& F = spec.field();
    const int k = spec.k, q = spec.q(), s = q - 1;
    const Poly& P = prime.P;
    const auto Pp = detail::powers(P, k - 2);
    const auto Lp = detail::powers(P.one() - P, k - 2);
    const auto elems = F.elements_generator_order();
    auto C = [&](long long n, long long r) { return detail::binom_poly(F, n, r); };
    MatrixQ M(spec.coord_dim(), spec.coord_dim(), spec.zero());

    for (int j = 0; j <= k - 2; ++j) {
        // coefficient polynomials depending only on (j, u)
        std::vector<Poly> low(j + 1, Poly(F)), high(k - 1, Poly(F));
        for (int u = 0; u <= j; ++u) {
            Poly v = Pp[k - 2 - j] * C(j, u);
            for (int l = 0; l <= u; ++l) v -= C(j, u - l) * C(k - 2 - j, l) * Lp[l];
            low[u] = v;
        }
        for (int u = j + 1; u <= k - 2; ++u) {
            Poly v(F);
            for (int l = u - j; l <= k - 2 - j; ++l) v += C(j, u - l) * C(k - 2 - j, l) * Lp[l];
            high[u] = v;
        }
        for (int rp = 0; rp < q; ++rp) {
            const std::uint32_t r = elems[rp];
            const std::size_t row = gammaT_index(rp, j, k);
            M(row, row) += RatFunc(Pp[k - 2 - j]);
            for (int n = 1; n <= (k - 2 - j) / s; ++n) {
                const int u = j + n * s;
                if (u > k - 2) throw InternalError("index shift left the range [0, k-2]");
                M(row, gammaT_index(rp, u, k)) -= RatFunc(Pp[j] * C(k - 2 - j, n * s) * Poly::T(F).pow(n * s));
            }
            for (int bp = 0; bp < q; ++bp) {
                if (bp == rp) continue;
                const std::uint32_t d = F.sub(elems[bp], r);
                for (int u = 0; u <= j; ++u)
                    M(row, gammaT_index(bp, u, k)) += RatFunc(low[u].scaled(F.pow(d, j - u)));
                for (int u = j + 1; u <= k - 2; ++u)
                    M(row, gammaT_index(bp, u, k)) -= RatFunc(high[u].scaled(F.pow(d, j - u)));
            }
        }
    }
    return {spec, prime, M};
}

/// Gamma(T) matrix from the reduced formula valid for q >= k (alpha_u, beta_u coefficients).
inline MatrixQ hecke_matrix_gammaT_reduced(const SpaceSpec& spec, const HeckePrime& prime) {
    if (spec.group != GroupKind::GammaT) throw GroupMismatch("reduced formula is for Gamma(T)");
    detail::require_degree_one(prime);
    const GaloisField& F = spec.field();
    const int k = spec.k, q = spec.q();
    if (q < k) throw InvalidInput("reduced formula needs q >= k");
    const Poly& P = prime.P;
    const Poly L = P.one() - P;
    const auto elems = F.elements_generator_order();
    auto C = [&](long long n, long long r) { return detail::binom_poly(F, n, r); };
    MatrixQ M(spec.coord_dim(), spec.coord_dim(), spec.zero());
    for (int j = 0; j <= k - 2; ++j) {
        const Poly lam = lambda_eig(j, k, prime);
        const Poly Pk = P.pow(k - 2 - j);
        std::vector<Poly> alpha(j, Poly(F)), beta(k - 1, Poly(F));
        for (int u = 0; u < j; ++u) {
            Poly v = Pk * C(j, u);
            for (int l = 0; l <= u; ++l) v -= C(j, u - l) * C(k - 2 - j, l) * L.pow(l);
            alpha[u] = v;
        }
        for (int u = j + 1; u <= k - 2; ++u) {
            Poly v(F);
            for (int l = u - j; l <= k - 2 - j; ++l) v += C(j, u - l) * C(k - 2 - j, l) * L.pow(l);
            beta[u] = v;
        }
        for (int rp = 0; rp < q; ++rp) {
            const std::uint32_t r = elems[rp];
            const std::size_t row = gammaT_index(rp, j, k);
            for (int bp = 0; bp < q; ++bp) {
                const std::uint32_t d = F.sub(elems[bp], r);
                for (int u = 0; u < j; ++u) M(row, gammaT_index(bp, u, k)) += RatFunc(alpha[u].scaled(F.pow(d, j - u)));
                M(row, gammaT_index(bp, j, k)) += RatFunc(Pk - lam);
                if (bp != rp)
                    for (int u = j + 1; u <= k - 2; ++u)
                        M(row, gammaT_index(bp, u, k)) -= RatFunc(beta[u].scaled(F.pow(d, j - u)));
            }
            M(row, row) += RatFunc(lam);
        }
    }
    return M;
}

inline HeckeMatrix hecke_matrix(const SpaceSpec& spec, const HeckePrime& prime) {
    return spec.group == GroupKind::Gamma1T ? hecke_matrix_gamma1(spec.with_layer(Layer::Cuspidal), prime)
                                            : hecke_matrix_gammaT(spec.with_layer(Layer::Cuspidal), prime);
}

/// Restriction of H to the double-cusp subspace, in the echelon basis of double_cusp_basis().
inline MatrixQ restrict_double_cusp(const HeckeMatrix& H) {
    const SpaceSpec cusp = H.spec.with_layer(Layer::Cuspidal);
    const auto B = double_cusp_basis(cusp);
    const std::size_t n = cusp.coord_dim(), d = B.size();
    // free (unit) coordinate of each basis vector
    std::vector<std::size_t> free_col;
    for (const auto& v : B) {
        for (std::size_t i = n; i-- > 0;)
            if (v[i].is_one()) {
                bool unit = true;
                for (const auto& w : B)
                    if (&w != &v && !w[i].is_zero()) unit = false;
                if (unit) { free_col.push_back(i); break; }
            }
    }
    if (free_col.size() != d) throw InternalError("double-cusp basis is not in echelon normal form");
    MatrixQ R(d, d, cusp.zero());
    for (std::size_t c = 0; c < d; ++c) {
        const auto img = H.M * B[c];
        Vec<RatFunc> recon(n, cusp.zero());
        for (std::size_t r = 0; r < d; ++r) {
            R(r, c) = img[free_col[r]];
            if (!R(r, c).is_zero())
                for (std::size_t i = 0; i < n; ++i) recon[i] += R(r, c) * B[r][i];
        }
        if (!(recon == img)) throw InvariantViolation("Hecke matrix does not preserve the double-cusp subspace");
    }
    return R;
}

inline bool commutes(const HeckeMatrix& A, const HeckeMatrix& B) {
    if (!(A.spec == B.spec)) throw GroupMismatch("Hecke matrices act on different spaces");
    return A.M * B.M == B.M * A.M;
}

/// prod_{i<d} lambda_j(1 - theta^{-q^i} T) for a root theta of P, pulled back to F_q[T].
inline Poly conjectured_eigenvalue(int j, int k, const HeckePrime& prime) {
    if (j < 0 || j > k - 2) throw InvalidInput("j out of range [0, k-2]");
    if (!prime.P.is_irreducible()) throw InvalidInput("P must be irreducible");
    const GaloisField& F = prime.field();
    const int d = prime.degree();
    const GaloisField& G = GaloisField::get(F.characteristic(), F.degree() * d);
    const FieldEmbedding& emb = FieldEmbedding::get(F, G);
    const Poly PG = prime.P.embedded(emb);
    std::vector<std::uint32_t> roots;
    for (std::uint32_t y = 0; y < G.size(); ++y)
        if (PG.eval(y) == 0) roots.push_back(y);
    if (static_cast<int>(roots.size()) != d) throw InternalError("P does not split in its splitting field");

    auto product_for = [&](std::uint32_t theta) {
        Poly acc = Poly::constant(G, 1);
        std::uint32_t t = theta;
        for (int i = 0; i < d; ++i) {
            // Q = 1 - t^{-1} T, so beta = -t^{-1}
            acc = acc * lambda_poly(G, G.neg(G.inv(t)), j, k);
            t = G.pow(t, F.size());
        }
        return acc;
    };
    const Poly big = product_for(roots.front());
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (!(product_for(roots[i]) == big)) throw InternalError("conjectured eigenvalue depends on the chosen root");
    // Galois invariance: x -> x^q fixes every coefficient
    for (auto c : big.coeffs())
        if (G.pow(c, F.size()) != c) throw InternalError("conjectured eigenvalue is not Galois invariant");
    std::vector<std::uint32_t> coeffs;
    for (auto c : big.coeffs()) {
        auto pre = emb.preimage(c);
        if (!pre) throw InternalError("coefficient outside the base field");
        coeffs.push_back(*pre);
    }
    return Poly(F, std::move(coeffs));
}

}  // namespace dhecke

#endif
