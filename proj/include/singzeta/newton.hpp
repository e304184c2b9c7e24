#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "singzeta/lattice.hpp"
#include "singzeta/polynomial.hpp"

namespace singzeta {

// Primitive supporting covector together with its level (the minimum of the
// pairing over the support).
struct Covector {
    IVec a;
    long long level = 0;

    bool strictly_positive() const {
        for (long long x : a)
            if (x <= 0) return false;
        return true;
    }
};

struct Face {
    int dim = 0;
    std::vector<Monomial> vertices;
    std::vector<Monomial> support_points;  // support points of the germ on the face
    Covector normal;                       // strictly positive covector supporting exactly this face
    std::vector<int> ambient_subset;       // coordinates in which the face is not identically zero

    IVec point(size_t i) const {
        IVec v;
        for (int x : vertices[i].e) v.push_back(x);
        return v;
    }
};

namespace detail {

inline IVec to_ivec(const Monomial& m) {
    IVec v;
    for (int x : m.e) v.push_back(x);
    return v;
}

inline Monomial to_monomial(const IVec& v) {
    std::vector<int> e;
    for (long long x : v) e.push_back(static_cast<int>(x));
    return Monomial(e);
}

// 2-d convex hull (monotone chain) on integer points; returns hull vertices
// in counter-clockwise order.
inline std::vector<IVec> hull2d(std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    auto cross2 = [](const IVec& o, const IVec& a, const IVec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<IVec> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace detail

// k-dimensional normalized lattice volume of the convex hull of `pts`
// (k! times the Euclidean volume measured in a basis of the saturated
// direction lattice of the affine span). A single point has volume 1.
inline Int normalized_volume(const std::vector<Monomial>& pts) {
    if (pts.empty()) throw std::invalid_argument("normalized_volume: empty point set");
    std::vector<IVec> P;
    for (const auto& m : pts) P.push_back(detail::to_ivec(m));
    std::vector<IVec> dirs;
    for (size_t i = 1; i < P.size(); ++i) dirs.push_back(sub(P[i], P[0]));
    auto basis = saturated_basis(dirs);
    size_t k = basis.size();
    if (k == 0) return 1;
    if (k == 1) {
        long long lo = 0, hi = 0;
        for (size_t i = 0; i < P.size(); ++i) {
            IVec c = lattice_coords(sub(P[i], P[0]), basis);
            lo = std::min(lo, c[0]);
            hi = std::max(hi, c[0]);
        }
        return hi - lo;
    }
    if (k == 2) {
        std::vector<IVec> plane;
        for (const auto& p : P) plane.push_back(lattice_coords(sub(p, P[0]), basis));
        auto h = detail::hull2d(plane);
        Int twice_area = 0;
        for (size_t i = 0; i < h.size(); ++i) {
            const IVec& a = h[i];
            const IVec& b = h[(i + 1) % h.size()];
            twice_area += Int(a[0]) * b[1] - Int(a[1]) * b[0];
        }
        if (twice_area < 0) twice_area = -twice_area;
        return twice_area;  // 2! * area, and the shoelace sum is twice the area
    }
    throw std::invalid_argument("normalized_volume: dimension > 2 not supported");
}

class NewtonBoundary {
public:
    int nvars = 0;
    std::vector<Face> faces;        // all compact faces, every dimension
    std::vector<Covector> facet_normals;  // all facets of the Newton polyhedron (incl. non-compact)
    std::vector<Monomial> support;
    bool convenient = false;

    std::vector<const Face*> faces_of_dim(int d) const {
        std::vector<const Face*> out;
        for (const auto& f : faces)
            if (f.dim == d) out.push_back(&f);
        return out;
    }

    // Compact facets: dimension nvars-1.
    std::vector<const Face*> top_faces() const { return faces_of_dim(nvars - 1); }

    // Containment in the face complex, by support-point inclusion.
    static bool contains(const Face& big, const Face& small) {
        for (const auto& p : small.support_points) {
            bool found = false;
            for (const auto& q : big.support_points)
                if (p == q) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    }
};

namespace detail {

struct FaceKey {
    std::vector<IVec> pts;
    bool operator<(const FaceKey& o) const { return pts < o.pts; }
};

inline NewtonBoundary boundary_from_support(int nvars, std::vector<IVec> S) {
    if (S.empty()) throw std::invalid_argument("newton boundary of zero polynomial");
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    for (const auto& p : S) {
        bool all_zero = true;
        for (long long x : p) all_zero = all_zero && x == 0;
        if (all_zero) throw std::invalid_argument("newton boundary: nonzero constant term");
    }
    const size_t n = static_cast<size_t>(nvars);

    // Candidate facet normals.
    std::set<IVec> cand;
    auto add_cand = [&](IVec v) {
        if (ivec_gcd(v) == 0) return;
        bool nonneg = true, nonpos = true;
        for (long long x : v) {
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
        }
        if (nonpos)
            for (auto& x : v) x = -x;
        else if (!nonneg)
            return;
        cand.insert(primitive(v));
    };
    for (size_t i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        add_cand(e);
    }
    if (nvars == 1) {
        // only candidate is (1)
    } else if (nvars == 2) {
        for (size_t i = 0; i < S.size(); ++i)
            for (size_t j = i + 1; j < S.size(); ++j) {
                IVec d = sub(S[j], S[i]);
                add_cand({d[1], -d[0]});
            }
    } else {
        std::vector<IVec> dirs;
        for (size_t i = 0; i < S.size(); ++i)
            for (size_t j = i + 1; j < S.size(); ++j) dirs.push_back(sub(S[j], S[i]));
        for (size_t k = 0; k < n; ++k) {
            IVec e(n, 0);
            e[k] = 1;
            dirs.push_back(e);
        }
        for (size_t i = 0; i < dirs.size(); ++i)
            for (size_t j = i + 1; j < dirs.size(); ++j) add_cand(cross(dirs[i], dirs[j]));
    }

    // Keep candidates whose face has dimension n-1 (genuine facets).
    struct RawFacet {
        IVec a;
        long long level;
        std::vector<IVec> pts;
        std::vector<size_t> rec;  // axes contained in the facet's recession cone
    };
    std::vector<RawFacet> facets;
    auto face_of = [&](const IVec& a) {
        RawFacet f;
        f.a = a;
        f.level = dot(a, S[0]);
        for (const auto& p : S) f.level = std::min(f.level, dot(a, p));
        for (const auto& p : S)
            if (dot(a, p) == f.level) f.pts.push_back(p);
        for (size_t k = 0; k < n; ++k)
            if (a[k] == 0) f.rec.push_back(k);
        return f;
    };
    auto face_dim = [&](const RawFacet& f) {
        std::vector<IVec> rows;
        for (size_t i = 1; i < f.pts.size(); ++i) rows.push_back(sub(f.pts[i], f.pts[0]));
        for (size_t k : f.rec) {
            IVec e(n, 0);
            e[k] = 1;
            rows.push_back(e);
        }
        return ivec_rank(rows);
    };
    for (const auto& a : cand) {
        RawFacet f = face_of(a);
        if (face_dim(f) == nvars - 1) facets.push_back(f);
    }

    // Compact faces: F_w for w a strictly positive sum of facet normals.
    // Every compact face is cut out by the sum of the normals of all facets
    // containing it, so subsets of facets exhaust the complex.
    std::map<FaceKey, Face> compact;
    size_t m = facets.size();
    if (m > 20) throw std::logic_error("unexpected facet count");
    for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
        IVec w(n, 0);
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i))
                for (size_t k = 0; k < n; ++k) w[k] += facets[i].a[k];
        bool pos = true;
        for (long long x : w) pos = pos && x > 0;
        if (!pos) continue;
        RawFacet f = face_of(primitive(w));
        FaceKey key{f.pts};
        if (compact.count(key)) continue;
        Face face;
        std::vector<IVec> rows;
        for (size_t i = 1; i < f.pts.size(); ++i) rows.push_back(sub(f.pts[i], f.pts[0]));
        face.dim = ivec_rank(rows);
        face.normal = Covector{f.a, f.level};
        for (const auto& p : f.pts) face.support_points.push_back(to_monomial(p));
        // Vertices of the face polytope.
        if (face.dim == 0) {
            face.vertices = face.support_points;
        } else if (face.dim == 1) {
            auto basis = saturated_basis(rows);
            long long lo = 0, hi = 0;
            size_t ilo = 0, ihi = 0;
            for (size_t i = 0; i < f.pts.size(); ++i) {
                IVec c = lattice_coords(sub(f.pts[i], f.pts[0]), basis);
                if (c[0] < lo) lo = c[0], ilo = i;
                if (c[0] > hi) hi = c[0], ihi = i;
            }
            face.vertices.push_back(to_monomial(f.pts[ilo]));
            face.vertices.push_back(to_monomial(f.pts[ihi]));
        } else {
            auto basis = saturated_basis(rows);
            std::map<IVec, IVec> back;
            std::vector<IVec> plane;
            for (const auto& p : f.pts) {
                IVec c = lattice_coords(sub(p, f.pts[0]), basis);
                plane.push_back(c);
                back[c] = p;
            }
            for (const auto& h : hull2d(plane)) face.vertices.push_back(to_monomial(back[h]));
        }
        for (size_t k = 0; k < n; ++k)
            for (const auto& p : f.pts)
                if (p[k] != 0) {
                    face.ambient_subset.push_back(static_cast<int>(k));
                    break;
                }
        compact.emplace(key, std::move(face));
    }

    NewtonBoundary b;
    b.nvars = nvars;
    for (const auto& p : S) b.support.push_back(to_monomial(p));
    for (auto& [k, f] : compact) b.faces.push_back(std::move(f));
    std::sort(b.faces.begin(), b.faces.end(), [](const Face& x, const Face& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        return x.normal.a < y.normal.a;
    });
    for (const auto& f : facets) b.facet_normals.push_back(Covector{f.a, f.level});
    // Convenience: a support point on every coordinate axis.
    b.convenient = true;
    for (size_t i = 0; i < n; ++i) {
        bool axis = false;
        for (const auto& p : S) {
            bool on = true;
            for (size_t k = 0; k < n; ++k)
                if (k != i && p[k] != 0) on = false;
            axis = axis || on;
        }
        b.convenient = b.convenient && axis;
    }
    return b;
}

}  // namespace detail

inline NewtonBoundary newton_boundary(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("newton boundary of zero polynomial");
    std::vector<IVec> S;
    for (const auto& [m, c] : p.terms()) S.push_back(detail::to_ivec(m));
    return detail::boundary_from_support(p.nvars(), std::move(S));
}

inline bool is_convenient(const NewtonBoundary& b) { return b.convenient; }

inline Int normalized_volume(const Face& f) { return normalized_volume(f.support_points); }

// Number of lattice points in the relative interior of a 2-dimensional face.
inline Int interior_lattice_points(const Face& f) {
    if (f.dim != 2) throw std::invalid_argument("interior_lattice_points: face must be 2-dimensional");
    std::vector<IVec> dirs;
    IVec p0 = detail::to_ivec(f.vertices[0]);
    for (size_t i = 1; i < f.vertices.size(); ++i)
        dirs.push_back(sub(detail::to_ivec(f.vertices[i]), p0));
    auto basis = saturated_basis(dirs);
    std::vector<IVec> poly;
    for (const auto& v : f.vertices)
        poly.push_back(lattice_coords(sub(detail::to_ivec(v), p0), basis));
    auto hull = detail::hull2d(poly);
    long long xlo = hull[0][0], xhi = xlo, ylo = hull[0][1], yhi = ylo;
    for (const auto& h : hull) {
        xlo = std::min(xlo, h[0]);
        xhi = std::max(xhi, h[0]);
        ylo = std::min(ylo, h[1]);
        yhi = std::max(yhi, h[1]);
    }
    Int count = 0;
    for (long long x = xlo; x <= xhi; ++x)
        for (long long y = ylo; y <= yhi; ++y) {
            bool strict = true;
            for (size_t i = 0; i < hull.size() && strict; ++i) {
                const IVec& a = hull[i];
                const IVec& b2 = hull[(i + 1) % hull.size()];
                Int c = Int(b2[0] - a[0]) * (y - a[1]) - Int(b2[1] - a[1]) * (x - a[0]);
                if (c <= 0) strict = false;  // hull is counter-clockwise
            }
            if (strict) ++count;
        }
    return count;
}

namespace detail {

// Normalized |I|-dimensional volume below the Newton boundary of the
// restriction to the coordinate subspace R^I: sum of level * NVol over the
// compact facets of the restricted boundary (coning to the origin).
inline Int under_boundary_volume(const NewtonBoundary& restricted) {
    Int total = 0;
    for (const auto* f : restricted.top_faces()) {
        if (!f->normal.strictly_positive())
            throw std::logic_error("compact facet without positive normal");
        total += Int(f->normal.level) * normalized_volume(*f);
    }
    return total;
}

inline std::vector<IVec> restrict_support(const std::vector<Monomial>& support,
                                          const std::vector<int>& I) {
    std::vector<IVec> out;
    for (const auto& m : support) {
        bool ok = true;
        for (int k = 0; k < m.nvars(); ++k) {
            if (std::find(I.begin(), I.end(), k) == I.end() && m[k] != 0) ok = false;
        }
        if (!ok) continue;
        IVec v;
        for (int k : I) v.push_back(m[k]);
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

// Kouchnirenko's Newton number of a convenient boundary.
inline Int newton_number(const NewtonBoundary& b) {
    if (!b.convenient) throw std::invalid_argument("newton_number requires a convenient boundary");
    int n = b.nvars;
    Int nu = (n % 2 == 0) ? Int(1) : Int(-1);
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        std::vector<int> I;
        for (int k = 0; k < n; ++k)
            if (mask & (size_t{1} << k)) I.push_back(k);
        auto S = detail::restrict_support(b.support, I);
        if (S.empty()) throw std::logic_error("convenient boundary with empty restriction");
        auto rb = detail::boundary_from_support(static_cast<int>(I.size()), std::move(S));
        Int vol = detail::under_boundary_volume(rb);
        int sign = (n - static_cast<int>(I.size())) % 2 == 0 ? 1 : -1;
        nu += sign * vol;
    }
    return nu;
}

}  // namespace singzeta
