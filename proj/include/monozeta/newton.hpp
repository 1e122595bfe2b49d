#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "numeric.hpp"
#include "poly.hpp"

namespace monozeta {

using Support = std::set<Exponent>;

// A primitive integer linear form with strictly positive weights on a
// coordinate subset.  Covectors select compact faces of Newton polyhedra:
// the face of a support is the subset where the form attains its minimum.
struct Covector {
    std::vector<int> subset;  // 0-based variable indices, strictly increasing
    Vec weights;              // strictly positive, coprime, one per subset entry
};

// A covector together with the data of the faces it cuts out of a support
// pair: the two minima and the support points lying on each minimizing face
// (mG and verticesG stay empty in single-support contexts).
struct FaceData {
    Covector covector;
    Int mF;
    std::optional<Int> mG;
    Support verticesF;
    Support verticesG;
};

namespace detail {

inline Vec project_exponent(const Exponent& e, const std::vector<int>& I) {
    Vec v(I.size());
    for (std::size_t j = 0; j < I.size(); ++j)
        v[j] = e[static_cast<std::size_t>(I[j])];
    return v;
}

} // namespace detail

// Monomials of A supported entirely inside the coordinate subset I (exponent
// zero everywhere else).
inline Support support_in(const Support& A, const std::vector<int>& I) {
    if (A.empty()) return {};
    const int n = static_cast<int>(A.begin()->size());
    std::vector<int> si = detail::checked_subset(I, n);
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int j : si) in[static_cast<std::size_t>(j)] = 1;
    Support out;
    for (const Exponent& e : A) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (!in[static_cast<std::size_t>(j)] && e[static_cast<std::size_t>(j)] != 0) {
                ok = false;
                break;
            }
        if (ok) out.insert(e);
    }
    return out;
}

// Minimum of the covector over the restricted support.
inline Int m_value(const Support& A, const Covector& a) {
    Support A_I = support_in(A, a.subset);
    if (A_I.empty()) throw PreconditionError("empty restricted support");
    bool first = true;
    Int m = 0;
    for (const Exponent& e : A_I) {
        Int v = dot(detail::project_exponent(e, a.subset), a.weights);
        if (first || v < m) m = v;
        first = false;
    }
    return m;
}

// Support points on the minimizing face of the covector.
inline Support face_of(const Support& A, const Covector& a) {
    Support A_I = support_in(A, a.subset);
    if (A_I.empty()) throw PreconditionError("empty restricted support");
    Int m = m_value(A, a);
    Support face;
    for (const Exponent& e : A_I)
        if (dot(detail::project_exponent(e, a.subset), a.weights) == m) face.insert(e);
    return face;
}

// Vertices of the Newton polyhedron conv(A_I) + R^I_{>=0}, i.e. the support
// points that are unique minimizers of some strictly positive covector.
// The unbounded polyhedron is replaced by a bounded proxy: adjoining the far
// points p + R*e_i for R beyond every coordinate keeps exactly the positive
// part of each vertex's normal cone, so the diagram vertices are the support
// points whose binding facet normals in the proxy hull span full rank.
inline Support diagram_vertices(const Support& A, const std::vector<int>& I) {
    if (A.empty()) throw PreconditionError("empty restricted support");
    const int n = static_cast<int>(A.begin()->size());
    std::vector<int> si = detail::checked_subset(I, n);
    Support A_I = support_in(A, si);
    if (A_I.empty()) throw PreconditionError("empty restricted support");
    const std::size_t k = si.size();

    std::vector<Exponent> orig(A_I.begin(), A_I.end());
    std::vector<Vec> pts;
    pts.reserve(orig.size());
    Int C = 0;
    for (const Exponent& e : orig) {
        Vec v = detail::project_exponent(e, si);
        for (const Int& x : v) C = std::max(C, x);
        pts.push_back(std::move(v));
    }
    const Int R = C + 1;

    std::vector<Vec> S = pts;
    for (const Vec& p : pts)
        for (std::size_t i = 0; i < k; ++i) {
            Vec q = p;
            q[i] += R;
            S.push_back(std::move(q));
        }

    std::vector<std::vector<Vec>> binding(pts.size());
    for (const Facet& F : hull_facets(S))
        for (std::size_t idx : F.members)
            if (idx < pts.size()) binding[idx].push_back(F.normal);

    Support out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (rank(binding[i]) == static_cast<int>(k)) out.insert(orig[i]);
    return out;
}

// The covectors whose joint face of the pair has top dimension |I|-1:
// the strictly positive primitive facet normals of the Minkowski sum of the
// two Newton polyhedra, in lexicographic order.  Pass G = {origin} for the
// single-support case.
inline std::vector<Covector> pair_face_normals(const Support& F, const Support& G,
                                               const std::vector<int>& I) {
    if (F.empty() || G.empty()) throw PreconditionError("empty restricted support");
    const int n = static_cast<int>(F.begin()->size());
    std::vector<int> si = detail::checked_subset(I, n);
    Support F_I = support_in(F, si);
    Support G_I = support_in(G, si);
    if (F_I.empty() || G_I.empty()) throw PreconditionError("empty restricted support");
    const std::size_t k = si.size();

    if (k == 1) return {Covector{si, Vec{Int(1)}}};

    std::set<Vec> sums;
    for (const Exponent& ef : F_I)
        for (const Exponent& eg : G_I) {
            Vec s = detail::project_exponent(ef, si);
            Vec t = detail::project_exponent(eg, si);
            for (std::size_t j = 0; j < k; ++j) s[j] += t[j];
            sums.insert(std::move(s));
        }
    std::vector<Vec> S(sums.begin(), sums.end());

    const int d = affine_dim(S);
    std::vector<Covector> out;
    if (d < static_cast<int>(k) - 1) return out;

    if (d == static_cast<int>(k) - 1) {
        // The sum spans a hyperplane; its unique normal direction is the only
        // candidate, usable iff it can be oriented strictly positive.
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < S.size(); ++i) diffs.push_back(sub(S[i], S[0]));
        std::vector<Vec> ker = kernel_basis(diffs, k);
        Vec a = make_primitive(std::move(ker.front()));
        if (a[0] < 0)
            for (Int& x : a) x = -x;
        for (const Int& x : a)
            if (x <= 0) return out;
        out.push_back(Covector{si, std::move(a)});
        return out;
    }

    for (Facet& f : hull_facets(S)) {
        bool positive = true;
        for (const Int& x : f.normal)
            if (x <= 0) {
                positive = false;
                break;
            }
        if (positive) out.push_back(Covector{si, std::move(f.normal)});
    }
    return out;
}

inline std::vector<FaceData> pair_faces(const Support& F, const Support& G,
                                        const std::vector<int>& I) {
    std::vector<FaceData> out;
    for (Covector& a : pair_face_normals(F, G, I)) {
        FaceData fd;
        fd.mF = m_value(F, a);
        fd.mG = m_value(G, a);
        fd.verticesF = face_of(F, a);
        fd.verticesG = face_of(G, a);
        fd.covector = std::move(a);
        out.push_back(std::move(fd));
    }
    return out;
}

inline std::vector<FaceData> diagram_faces(const Support& A, const std::vector<int>& I) {
    if (A.empty()) throw PreconditionError("empty restricted support");
    Support origin{Exponent(A.begin()->size(), 0)};
    std::vector<FaceData> out;
    for (Covector& a : pair_face_normals(A, origin, I)) {
        FaceData fd;
        fd.mF = m_value(A, a);
        fd.verticesF = face_of(A, a);
        fd.covector = std::move(a);
        out.push_back(std::move(fd));
    }
    return out;
}

namespace detail {

// Project face points to the subset coordinates, checking they lie on a
// common level set of the covector.
inline std::vector<Vec> coplanar_points(const Support& vertices, const Covector& a) {
    if (vertices.empty()) throw PreconditionError("empty vertex set");
    std::vector<Vec> pts;
    pts.reserve(vertices.size());
    bool first = true;
    Int m = 0;
    for (const Exponent& e : vertices) {
        Vec v = project_exponent(e, a.subset);
        Int val = dot(v, a.weights);
        if (first)
            m = val;
        else if (val != m)
            throw PreconditionError("vertices are not coplanar with respect to the covector");
        first = false;
        pts.push_back(std::move(v));
    }
    return pts;
}

inline Int plane_volume(const std::vector<Vec>& pts, const PlaneChart& chart) {
    std::vector<Vec> mapped;
    mapped.reserve(pts.size());
    for (const Vec& p : pts) mapped.push_back(chart.to_plane(p));
    return normalized_volume(std::move(mapped));
}

} // namespace detail

// Normalized (k-1)-dimensional volume of the face, measured against the
// lattice induced on the covector's level hyperplane.  Degenerate faces have
// volume 0; a point in a one-variable subset has volume 1.
inline Int normalized_volume(const Support& vertices, const Covector& a) {
    std::vector<Vec> pts = detail::coplanar_points(vertices, a);
    return detail::plane_volume(pts, plane_chart(a.weights));
}

// Sum of the normalized mixed volumes of the two faces: interpolate
// w(lambda) = volume(lambda*F + G) at lambda = 0..k-1 as
// sum_j C(k-1,j) V_j lambda^j and return sum_j V_j.  Each V_j must come out
// a nonnegative integer; anything else means the input violated the lattice
// assumptions and is reported as degenerate.
inline Int mixed_volume_sum(const Support& Fface, const Support& Gface, const Covector& a) {
    std::vector<Vec> FP = detail::coplanar_points(Fface, a);
    std::vector<Vec> GP = detail::coplanar_points(Gface, a);
    const std::size_t k = a.subset.size();
    const std::size_t d = k - 1;
    PlaneChart chart = plane_chart(a.weights);

    std::vector<Int> w(d + 1);
    for (std::size_t lam = 0; lam <= d; ++lam) {
        std::set<Vec> sums;
        for (const Vec& f : FP)
            for (const Vec& g : GP) {
                Vec s(k);
                for (std::size_t j = 0; j < k; ++j) s[j] = Int(lam) * f[j] + g[j];
                sums.insert(std::move(s));
            }
        w[lam] = detail::plane_volume(std::vector<Vec>(sums.begin(), sums.end()), chart);
    }

    // Solve the (d+1)-point Vandermonde system for the monomial coefficients.
    std::vector<std::vector<Rat>> M(d + 1, std::vector<Rat>(d + 2));
    for (std::size_t i = 0; i <= d; ++i) {
        Rat p = 1;
        for (std::size_t j = 0; j <= d; ++j) {
            M[i][j] = p;
            p *= Rat(Int(i));
        }
        M[i][d + 1] = Rat(w[i]);
    }
    for (std::size_t col = 0; col <= d; ++col) {
        std::size_t piv = col;
        while (M[piv][col] == 0) ++piv;  // Vandermonde on distinct nodes: pivot exists
        std::swap(M[piv], M[col]);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rat fct = M[i][col] / M[col][col];
            for (std::size_t j = col; j <= d + 1; ++j) M[i][j] -= fct * M[col][j];
        }
    }

    Int total = 0;
    for (std::size_t j = 0; j <= d; ++j) {
        Rat c = M[j][d + 1] / M[j][j];
        Rat vj = c / Rat(binomial(static_cast<long long>(d), static_cast<long long>(j)));
        if (denominator(vj) != 1 || vj < 0)
            throw PreconditionError(
                "degenerate face pair: interpolated mixed volume is not a nonnegative integer");
        total += numerator(vj);
    }
    return total;
}

// Milnor number of a convenient nondegenerate germ from its support alone:
// the alternating sum over coordinate subsets of the full-dimensional
// normalized volumes under the restricted diagrams, plus (-1)^n.  Each
// under-diagram volume is assembled as a fan over the diagram's top faces,
// with lattice height m_a over the origin.
inline Int kouchnirenko_mu(const Support& A) {
    if (A.empty()) throw PreconditionError("empty support");
    const int n = static_cast<int>(A.begin()->size());
    if (n < 1 || n > 16) throw PreconditionError("unsupported variable count");
    if (A.count(Exponent(static_cast<std::size_t>(n), 0)))
        throw PreconditionError("support contains the origin");
    for (int i = 0; i < n; ++i) {
        bool pure = false;
        for (const Exponent& e : A) {
            bool ok = e[static_cast<std::size_t>(i)] >= 1;
            for (int j = 0; ok && j < n; ++j)
                if (j != i && e[static_cast<std::size_t>(j)] != 0) ok = false;
            if (ok) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw PreconditionError("support is not convenient: no pure power of a variable");
    }

    Int mu = (n % 2 == 0) ? 1 : -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> I;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) I.push_back(j);
        Int nu = 0;
        for (const FaceData& fd : diagram_faces(A, I))
            nu += fd.mF * normalized_volume(fd.verticesF, fd.covector);
        const bool flip = ((n - static_cast<int>(I.size())) % 2) != 0;
        mu += flip ? -nu : nu;
    }
    return mu;
}

} // namespace monozeta
