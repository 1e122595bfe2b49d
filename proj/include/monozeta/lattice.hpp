#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace monozeta {

// Exact lattice-geometry kernel: integer vectors, kernels and hyperplane
// charts, convex-hull facets by gift wrapping, and normalized volumes.
// Coordinates are arbitrary-precision integers and every pivot decision uses
// cross-multiplied comparisons, so there is no rounding anywhere.
using Vec = std::vector<Int>;

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool is_zero_vec(const Vec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

// gcd of the entries' absolute values; 0 for the zero vector.
inline Int content(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, abs(x));
    return g;
}

inline Vec make_primitive(Vec a) {
    Int g = content(a);
    if (g == 0) throw PreconditionError("zero vector has no primitive form");
    if (g != 1)
        for (Int& x : a) x /= g;
    return a;
}

inline bool is_parallel(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

// Rank over the rationals of a list of integer vectors.
inline int rank(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rat>> a;
    a.reserve(rows.size());
    for (const Vec& r : rows) {
        std::vector<Rat> q(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) q[i] = Rat(r[i]);
        a.push_back(std::move(q));
    }
    const std::size_t m = a[0].size();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m && rk < a.size(); ++col) {
        std::size_t piv = rk;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t i = rk + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rk][col];
            for (std::size_t j = col; j < m; ++j) a[i][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return static_cast<int>(rk);
}

// Dimension of the affine hull of a nonempty point set.
inline int affine_dim(const std::vector<Vec>& pts) {
    if (pts.empty()) throw PreconditionError("affine hull of an empty set");
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return rank(diffs);
}

// Basis of { x in Z^m : r.x = 0 for every row r }, computed by integer
// column reduction of the row matrix with the elementary operations mirrored
// on an identity matrix.  The result is saturated: it spans the rational
// kernel and extends to a basis of Z^m.
inline std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, std::size_t m) {
    std::vector<Vec> a = rows;
    for (const Vec& r : a)
        if (r.size() != m) throw PreconditionError("vector length mismatch");
    std::vector<Vec> u(m, Vec(m, 0));  // u[j] = column j of the accumulated op matrix
    for (std::size_t j = 0; j < m; ++j) u[j][j] = 1;

    std::size_t pc = 0;
    for (std::size_t r = 0; r < a.size() && pc < m; ++r) {
        while (true) {
            std::size_t piv = m;
            for (std::size_t j = pc; j < m; ++j)
                if (a[r][j] != 0 && (piv == m || abs(a[r][j]) < abs(a[r][piv]))) piv = j;
            if (piv == m) break;  // row already vanishes on the free columns
            if (piv != pc) {
                std::swap(u[piv], u[pc]);
                for (Vec& row : a) std::swap(row[piv], row[pc]);
            }
            bool clean = true;
            for (std::size_t j = pc + 1; j < m; ++j) {
                if (a[r][j] == 0) continue;
                Int q = a[r][j] / a[r][pc];
                if (q != 0) {
                    for (std::size_t t = 0; t < m; ++t) u[j][t] -= q * u[pc][t];
                    for (Vec& row : a) row[j] -= q * row[pc];
                }
                if (a[r][j] != 0) clean = false;
            }
            if (clean) {
                ++pc;
                break;
            }
        }
    }
    return std::vector<Vec>(u.begin() + static_cast<std::ptrdiff_t>(pc), u.end());
}

// Unimodular coordinates on the lattice hyperplanes { x : a.x = c }.
// to_plane is an affine lattice isomorphism from each such hyperplane onto
// Z^(m-1); basis inverts it on difference vectors.  The two halves pair up:
// coord_rows[i] . basis[j] = (i == j).
struct PlaneChart {
    std::vector<Vec> basis;       // m-1 vectors spanning ker(a) in Z^m
    std::vector<Vec> coord_rows;  // m-1 integer coordinate functionals

    Vec to_plane(const Vec& x) const {
        Vec y(coord_rows.size());
        for (std::size_t i = 0; i < coord_rows.size(); ++i) y[i] = dot(coord_rows[i], x);
        return y;
    }
};

inline PlaneChart plane_chart(const Vec& a) {
    const std::size_t m = a.size();
    if (is_zero_vec(a)) throw PreconditionError("zero normal vector");
    // Column-reduce the single row a to (g, 0, ..., 0), accumulating the
    // column operations in u and their inverses in the row matrix v = u^-1.
    Vec row = a;
    std::vector<Vec> u(m, Vec(m, 0)), v(m, Vec(m, 0));
    for (std::size_t j = 0; j < m; ++j) u[j][j] = v[j][j] = 1;

    while (true) {
        std::size_t piv = 0;
        for (std::size_t j = 1; j < m; ++j)
            if (row[j] != 0 && (row[piv] == 0 || abs(row[j]) < abs(row[piv]))) piv = j;
        if (piv != 0) {
            std::swap(u[piv], u[0]);
            std::swap(v[piv], v[0]);
            std::swap(row[piv], row[0]);
        }
        bool clean = true;
        for (std::size_t j = 1; j < m; ++j) {
            if (row[j] == 0) continue;
            Int q = row[j] / row[0];
            if (q != 0) {
                row[j] -= q * row[0];
                for (std::size_t t = 0; t < m; ++t) u[j][t] -= q * u[0][t];
                for (std::size_t t = 0; t < m; ++t) v[0][t] += q * v[j][t];
            }
            if (row[j] != 0) clean = false;
        }
        if (clean) break;
    }

    PlaneChart c;
    c.basis.assign(u.begin() + 1, u.end());
    c.coord_rows.assign(v.begin() + 1, v.end());
    return c;
}

// One facet of a convex hull: the primitive inner normal, its minimum over
// the point set, and the indices of the points attaining that minimum.
struct Facet {
    Vec normal;  // normal.x >= offset for every input point
    Int offset;
    std::vector<std::size_t> members;
};

namespace detail {

inline std::pair<Int, std::vector<std::size_t>> support_face(const std::vector<Vec>& pts,
                                                             const Vec& u) {
    Int best = dot(u, pts[0]);
    std::vector<std::size_t> mem{0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Int val = dot(u, pts[i]);
        if (val < best) {
            best = val;
            mem.assign(1, i);
        } else if (val == best) {
            mem.push_back(i);
        }
    }
    return {std::move(best), std::move(mem)};
}

} // namespace detail

// All facets of conv(pts) for a full-dimensional, duplicate-free point set in
// dimension >= 1, found by gift wrapping: rotate a supporting functional
// until its contact set spans a hyperplane, then flood across ridges.  The
// facets come back sorted by normal, lexicographically.
inline std::vector<Facet> hull_facets(const std::vector<Vec>& pts) {
    if (pts.empty()) throw PreconditionError("convex hull of an empty set");
    const std::size_t m = pts[0].size();
    if (m == 0) throw PreconditionError("convex hull needs dimension at least 1");
    for (const Vec& p : pts)
        if (p.size() != m) throw PreconditionError("vector length mismatch");
    if (affine_dim(pts) != static_cast<int>(m))
        throw PreconditionError("point set is not full-dimensional");

    auto finish = [&](Vec n) -> Facet {
        n = make_primitive(std::move(n));
        auto [c, mem] = detail::support_face(pts, n);
        return Facet{std::move(n), std::move(c), std::move(mem)};
    };

    if (m == 1) {
        // A segment: its two endpoints.
        std::vector<Facet> out{finish(Vec{Int(-1)}), finish(Vec{Int(1)})};
        return out;
    }

    // Initial facet.  Maintain a supporting functional u; while its contact
    // set T spans less than a hyperplane, pick a second functional w constant
    // on T and rotate u toward the first point met, which enlarges span(T).
    Vec u(m, 0);
    u[0] = 1;
    while (true) {
        auto [c, T] = detail::support_face(pts, u);
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < T.size(); ++i) diffs.push_back(sub(pts[T[i]], pts[T[0]]));
        if (rank(diffs) == static_cast<int>(m) - 1) break;

        Vec w;
        for (Vec& k : kernel_basis(diffs, m))
            if (!is_parallel(k, u)) {
                w = std::move(k);
                break;
            }

        const Int wbase = dot(w, pts[T[0]]);
        std::vector<char> inT(pts.size(), 0);
        for (std::size_t i : T) inT[i] = 1;

        // Off-face values y = u.(p - base) > 0 and x = w.(p - base); rotate
        // toward whichever side of w has points, stopping at the extreme
        // ratio so that u stays supporting.
        bool anyZero = false, haveNeg = false, havePos = false;
        Int ny = 0, nx = 0, py = 0, px = 0;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            if (inT[p]) continue;
            Int x = dot(w, pts[p]) - wbase;
            Int y = dot(u, pts[p]) - c;
            if (x < 0) {
                if (!haveNeg || y * (-nx) < ny * (-x)) {
                    ny = y;
                    nx = x;
                    haveNeg = true;
                }
            } else if (x == 0) {
                anyZero = true;
            } else {
                if (!havePos || y * px < py * x) {
                    py = y;
                    px = x;
                    havePos = true;
                }
            }
        }

        Vec u2(m);
        if (haveNeg) {
            for (std::size_t t = 0; t < m; ++t) u2[t] = -nx * u[t] + ny * w[t];
        } else if (anyZero) {
            u2 = w;
        } else {
            for (std::size_t t = 0; t < m; ++t) u2[t] = px * u[t] - py * w[t];
        }
        u = make_primitive(std::move(u2));
    }

    // Flood fill over the facet adjacency graph.  Each facet's ridges are the
    // facets of its own contact set, computed recursively in hyperplane
    // coordinates; rotating the facet normal across a ridge yields the
    // neighboring facet.
    std::map<Vec, Facet> found;
    std::queue<Vec> work;
    {
        Facet f0 = finish(std::move(u));
        work.push(f0.normal);
        found.emplace(f0.normal, std::move(f0));
    }
    while (!work.empty()) {
        const Facet F = found.at(work.front());
        work.pop();
        PlaneChart chart = plane_chart(F.normal);
        std::vector<Vec> fpts;
        fpts.reserve(F.members.size());
        for (std::size_t i : F.members) fpts.push_back(chart.to_plane(pts[i]));

        for (const Facet& R : hull_facets(fpts)) {
            // Pull the ridge normal back to an ambient functional g that is
            // constant on the ridge and larger on the rest of the facet.
            Vec g(m, 0);
            for (std::size_t i = 0; i + 1 < m; ++i)
                for (std::size_t t = 0; t < m; ++t) g[t] += R.normal[i] * chart.coord_rows[i][t];
            const Int gr0 = dot(g, pts[F.members[R.members[0]]]);

            // Neighbor normal: among points strictly above F, take the
            // extreme rotation ratio x/y (full-dimensionality guarantees at
            // least one such point).
            Int by = 0, bx = 0;
            bool have = false;
            for (std::size_t p = 0; p < pts.size(); ++p) {
                Int y = dot(F.normal, pts[p]) - F.offset;
                if (y == 0) continue;
                Int x = dot(g, pts[p]) - gr0;
                if (!have || x * by < bx * y) {
                    bx = std::move(x);
                    by = std::move(y);
                    have = true;
                }
            }
            Vec n2(m);
            for (std::size_t t = 0; t < m; ++t) n2[t] = -bx * F.normal[t] + by * g[t];
            n2 = make_primitive(std::move(n2));
            if (!found.count(n2)) {
                Facet nf = finish(n2);
                work.push(nf.normal);
                found.emplace(std::move(n2), std::move(nf));
            }
        }
    }

    std::vector<Facet> out;
    out.reserve(found.size());
    for (auto& [n, f] : found) out.push_back(std::move(f));
    return out;
}

// Normalized lattice volume of conv(pts): m! times the Euclidean volume in
// dimension m.  Lower-dimensional sets have volume 0; the one-point set in
// dimension 0 has volume 1.  Computed as a fan over the facets not containing
// the base vertex: each pyramid contributes lattice height times the
// normalized volume of its base, taken in hyperplane coordinates.
inline Int normalized_volume(std::vector<Vec> pts) {
    if (pts.empty()) throw PreconditionError("volume of an empty set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t m = pts[0].size();
    for (const Vec& p : pts)
        if (p.size() != m) throw PreconditionError("vector length mismatch");
    if (m == 0) return 1;
    if (m == 1) return pts.back()[0] - pts.front()[0];
    if (affine_dim(pts) < static_cast<int>(m)) return 0;

    const Vec& apex = pts[0];
    Int total = 0;
    for (const Facet& F : hull_facets(pts)) {
        Int h = dot(F.normal, apex) - F.offset;
        if (h == 0) continue;
        PlaneChart chart = plane_chart(F.normal);
        std::vector<Vec> fpts;
        fpts.reserve(F.members.size());
        for (std::size_t i : F.members) fpts.push_back(chart.to_plane(pts[i]));
        total += h * normalized_volume(std::move(fpts));
    }
    return total;
}

} // namespace monozeta
