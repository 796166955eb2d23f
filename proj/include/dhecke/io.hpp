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
 * @file io.hpp
 * @brief JSON, CSV and text rendering of matrices, cocycles and eigen reports.
 *
 * Field elements and polynomials use the coefficient notation of Poly::to_coeff_string,
 * e.g. "1,0,2" for 1+2T^2 and "1,1/0,1" for (1+T)/T. JSON keys are emitted in a fixed order.
 */

#ifndef DHECKE_IO_HPP
#define DHECKE_IO_HPP

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigen.hpp"

namespace dhecke {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json vec_json(const Vec<RatFunc>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_coeff_string());
    return a;
}
inline Vec<RatFunc> vec_from_json(const GaloisField& F, const Json& a) {
    Vec<RatFunc> v;
    for (const auto& x : a) v.push_back(RatFunc::parse_coeffs(F, x.get<std::string>()));
    return v;
}
inline Json upoly_json(const UPoly<RatFunc>& f) {
    Json a = Json::array();
    for (const auto& x : f.coeffs()) a.push_back(x.to_coeff_string());
    return a;
}
inline UPoly<RatFunc> upoly_from_json(const GaloisField& F, const Json& a) {
    return UPoly<RatFunc>(vec_from_json(F, a), RatFunc(Poly(F)));
}
inline Json get_key(const Json& j, const char* key) {
    if (!j.contains(key)) throw InvalidInput(std::string("missing JSON key: ") + key);
    return j.at(key);
}

}  // namespace detail

inline Json to_json(const SpaceSpec& s) {
    return Json{{"group", to_string(s.group)}, {"q", s.field().spec().to_string()}, {"k", s.k}, {"m", s.m}, {"layer", to_string(s.layer)}};
}

inline SpaceSpec space_from_json(const Json& j) {
    const auto& F = GaloisField::parse(detail::get_key(j, "q").get<std::string>());
    const Layer layer = j.contains("layer") && j.at("layer") == "double" ? Layer::DoubleCuspidal : Layer::Cuspidal;
    return SpaceSpec(F, detail::get_key(j, "k").get<int>(), parse_group(detail::get_key(j, "group").get<std::string>()), layer,
                     j.value("m", 0));
}

inline Json matrix_json(const MatrixQ& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(detail::vec_json(M.row(i)));
    return rows;
}

inline MatrixQ matrix_from_json(const GaloisField& F, const Json& rows, std::size_t ncols) {
    const RatFunc z{Poly(F)};
    MatrixQ M(rows.size(), ncols, z);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto r = detail::vec_from_json(F, rows[i]);
        if (r.size() != ncols) throw ShapeError("ragged matrix in JSON");
        for (std::size_t j = 0; j < ncols; ++j) M(i, j) = r[j];
    }
    return M;
}

/// HeckeMatrix schema: {"spec", "prime", "labels", "size", "entries"} with entries row-major.
inline Json to_json(const HeckeMatrix& H) {
    return Json{{"spec", to_json(H.spec)},
                {"prime", H.prime.P.to_coeff_string()},
                {"labels", basis_labels(H.spec)},
                {"size", H.M.rows()},
                {"entries", matrix_json(H.M)}};
}

inline HeckeMatrix hecke_from_json(const Json& j) {
    HeckeMatrix H;
    H.spec = space_from_json(detail::get_key(j, "spec"));
    H.prime = HeckePrime(Poly::parse_coeffs(H.spec.field(), detail::get_key(j, "prime").get<std::string>()));
    const std::size_t n = detail::get_key(j, "size").get<std::size_t>();
    H.M = matrix_from_json(H.spec.field(), detail::get_key(j, "entries"), n);
    if (H.M.rows() != n) throw ShapeError("HeckeMatrix JSON size does not match its entries");
    return H;
}

/// CocycleVector schema: {"group", "q", "k", "coords"}.
inline Json to_json(const CocycleVector& c) {
    return Json{{"group", to_string(c.spec.group)}, {"q", c.spec.field().spec().to_string()}, {"k", c.spec.k}, {"coords", detail::vec_json(c.coords)}};
}

inline CocycleVector cocycle_from_json(const Json& j) {
    const SpaceSpec s = space_from_json(j);
    return CocycleVector(s, detail::vec_from_json(s.field(), detail::get_key(j, "coords")));
}

inline Json to_json(const EigenReport& R, const GaloisField& F) {
    Json rat = Json::array();
    for (const auto& e : R.rational) {
        Json basis = Json::array();
        for (const auto& v : e.basis) basis.push_back(detail::vec_json(v));
        rat.push_back(Json{{"eigenvalue", e.value.to_coeff_string()},
                           {"algebraic_mult", e.algebraic},
                           {"geometric_mult", e.geometric},
                           {"eigenbasis", basis}});
    }
    Json irr = Json::array();
    for (const auto& f : R.irrational)
        irr.push_back(Json{{"factor", detail::upoly_json(f.factor)}, {"separable", f.separable}, {"charpoly_degree", f.charpoly_degree}});
    Json out{{"matrix_ref", R.label},
             {"q", F.spec().to_string()},
             {"size", R.size},
             {"charpoly", detail::upoly_json(R.charpoly)},
             {"minpoly", detail::upoly_json(R.minpoly)},
             {"rational_eigs", rat},
             {"irrational_part", irr},
             {"diagonalizable", R.diagonalizable},
             {"certificate_gcd", detail::upoly_json(R.certificate_gcd)}};
    if (R.eigenone_holds) out["eigenone_holds"] = *R.eigenone_holds;
    out["specialization"] = Json{{"field_size", R.specialization.field}, {"points", R.specialization.points}};
    return out;
}

inline EigenReport eigen_from_json(const Json& j) {
    const auto& F = GaloisField::parse(detail::get_key(j, "q").get<std::string>());
    EigenReport R;
    R.label = j.value("matrix_ref", "");
    R.size = detail::get_key(j, "size").get<std::size_t>();
    R.charpoly = detail::upoly_from_json(F, detail::get_key(j, "charpoly"));
    R.minpoly = detail::upoly_from_json(F, detail::get_key(j, "minpoly"));
    for (const auto& e : detail::get_key(j, "rational_eigs")) {
        RationalEigen r;
        r.value = Poly::parse_coeffs(F, e.at("eigenvalue").get<std::string>());
        r.algebraic = e.at("algebraic_mult").get<int>();
        r.geometric = e.at("geometric_mult").get<int>();
        for (const auto& v : e.at("eigenbasis")) r.basis.push_back(detail::vec_from_json(F, v));
        R.rational.push_back(std::move(r));
    }
    for (const auto& f : detail::get_key(j, "irrational_part"))
        R.irrational.push_back({detail::upoly_from_json(F, f.at("factor")), f.at("separable").get<bool>(), f.at("charpoly_degree").get<int>()});
    R.diagonalizable = detail::get_key(j, "diagonalizable").get<bool>();
    R.certificate_gcd = detail::upoly_from_json(F, detail::get_key(j, "certificate_gcd"));
    if (j.contains("eigenone_holds")) R.eigenone_holds = j.at("eigenone_holds").get<bool>();
    if (j.contains("specialization")) {
        R.specialization.field = j.at("specialization").value("field_size", "");
        R.specialization.points = j.at("specialization").value("points", std::vector<std::string>{});
    }
    return R;
}

inline bool operator==(const RationalEigen& a, const RationalEigen& b) {
    return a.value == b.value && a.algebraic == b.algebraic && a.geometric == b.geometric && a.basis == b.basis;
}
inline bool operator==(const IrrationalPart& a, const IrrationalPart& b) {
    return a.factor == b.factor && a.separable == b.separable && a.charpoly_degree == b.charpoly_degree;
}
inline bool same_report(const EigenReport& a, const EigenReport& b) {
    return a.label == b.label && a.size == b.size && a.charpoly == b.charpoly && a.minpoly == b.minpoly && a.rational == b.rational &&
           a.irrational == b.irrational && a.diagonalizable == b.diagonalizable && a.certificate_gcd == b.certificate_gcd &&
           a.eigenone_holds == b.eigenone_holds && a.specialization.field == b.specialization.field &&
           a.specialization.points == b.specialization.points;
}

/// Aligned grid, one row per line, entries in the "1+2T^3" style.
inline std::string render_grid(const MatrixQ& M) {
    std::vector<std::vector<std::string>> cells(M.rows(), std::vector<std::string>(M.cols()));
    std::vector<std::size_t> width(M.cols(), 1);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            cells[i][j] = M(i, j).to_string();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << "  ";
            os << std::left << std::setw(static_cast<int>(width[j])) << row[j];
        }
        os << '\n';
    }
    std::string s = os.str();
    // strip trailing blanks per line
    std::string out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

inline std::string render_csv(const MatrixQ& M) {
    std::string out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out += ',';
            out += M(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

inline std::string upoly_text(const UPoly<RatFunc>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const RatFunc& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        if (cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
        if (!out.empty()) out += " + ";
        if (i == 0) out += cs;
        else {
            if (cs != "1") out += cs;
            out += i == 1 ? "X" : "X^" + std::to_string(i);
        }
    }
    return out;
}

/// Summary block: multiplicity table and verdict.
inline std::string render_summary(const EigenReport& R) {
    std::ostringstream os;
    if (!R.label.empty()) os << R.label << '\n';
    os << "space dim " << R.size << '\n';
    os << "charpoly  " << upoly_text(R.charpoly) << '\n';
    os << "minpoly   " << upoly_text(R.minpoly) << '\n';
    os << "eigenvalue : algebraic / geometric\n";
    for (const auto& e : R.rational) os << "  " << e.value.to_string() << " : " << e.algebraic << " / " << e.geometric << '\n';
    for (const auto& f : R.irrational)
        os << "  irrational factor " << upoly_text(f.factor) << (f.separable ? " (separable)" : " (inseparable)") << '\n';
    os << (R.diagonalizable ? "diagonalizable" : "not diagonalizable") << '\n';
    if (R.eigenone_holds) os << "eigenvectors off eigenvalue 1 are double cusp forms: " << (*R.eigenone_holds ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace dhecke

#endif
