#include "nbilliard/metric_linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace nbilliard {

NumericPolicy& policy() {
    static NumericPolicy p;
    return p;
}

double metric_inner(const Vector& u, const Vector& v, const Metric& g) {
    if (u.size() != g.ambient_dim() || v.size() != g.ambient_dim())
        throw std::invalid_argument("metric_inner: dimension mismatch");
    return u.cwiseProduct(g.weights()).dot(v);
}

double Subspace::gram_defect() const {
    if (dim() == 0) return 0.0;
    const Matrix be = metric.to_euclidean(basis);
    Matrix gram = be.transpose() * be;
    gram -= Matrix::Identity(dim(), dim());
    return gram.cwiseAbs().maxCoeff();
}

Vector Subspace::project(const Vector& x) const {
    if (dim() == 0) return Vector::Zero(ambient_dim);
    const Matrix be = metric.to_euclidean(basis);
    const Vector xe = metric.to_euclidean(x);
    const Vector proj_e = be * (be.transpose() * xe);
    return metric.from_euclidean(proj_e);
}

double Subspace::distance(const Vector& x) const {
    const Vector xe = metric.to_euclidean(x);
    if (dim() == 0) return xe.norm();
    const Matrix be = metric.to_euclidean(basis);
    return (xe - be * (be.transpose() * xe)).norm();
}

Subspace orthonormalize(const Matrix& columns, const Metric& g) {
    if (columns.rows() != g.ambient_dim())
        throw std::invalid_argument("orthonormalize: ambient dimension mismatch");
    const int n = static_cast<int>(columns.rows());
    Matrix work = g.to_euclidean(columns);

    double max_norm = 0.0;
    for (int c = 0; c < work.cols(); ++c) max_norm = std::max(max_norm, work.col(c).norm());
    const double cut = policy().rank_rel_tol * max_norm;

    Matrix q(n, work.cols());
    int rank = 0;
    // modified Gram-Schmidt, then one full re-orthogonalization pass
    for (int c = 0; c < work.cols(); ++c) {
        Vector v = work.col(c);
        for (int r = 0; r < rank; ++r) v -= q.col(r) * q.col(r).dot(v);
        for (int r = 0; r < rank; ++r) v -= q.col(r) * q.col(r).dot(v);
        const double norm = v.norm();
        if (max_norm > 0.0 && norm > cut) q.col(rank++) = v / norm;
    }

    Subspace s;
    s.ambient_dim = n;
    s.metric = g;
    s.basis = g.from_euclidean(Matrix(q.leftCols(rank)));
    return s;
}

Subspace orthonormalize(const std::vector<Vector>& vectors, const Metric& g) {
    if (vectors.empty()) throw std::invalid_argument("orthonormalize: empty input");
    Matrix m(g.ambient_dim(), static_cast<Eigen::Index>(vectors.size()));
    for (size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].size() != g.ambient_dim())
            throw std::invalid_argument("orthonormalize: vector dimension mismatch");
        m.col(static_cast<Eigen::Index>(c)) = vectors[c];
    }
    return orthonormalize(m, g);
}

static double clamped_acos(double s) {
    if (s > 1.0) {
        if (s > 1.0 + policy().clamp_guard)
            throw std::runtime_error("principal_angles: singular value above 1");
        s = 1.0;
    }
    if (s < 0.0) s = 0.0;
    return std::acos(s);
}

AngleVector principal_angles(const Subspace& F, const Subspace& G) {
    if (!F.metric.compatible(G.metric))
        throw std::invalid_argument("principal_angles: metric mismatch");
    AngleVector out;
    if (F.dim() == 0 || G.dim() == 0) return out;

    const Matrix fe = F.metric.to_euclidean(F.basis);
    const Matrix ge = G.metric.to_euclidean(G.basis);
    const Matrix cross = fe.transpose() * ge;

    Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector s = svd.singularValues();  // descending -> angles ascending
    const int q = static_cast<int>(s.size());

    // sine route: singular values of (I - P_F) G_e are the sines, accurate
    // for small angles where 1 - cos underflows
    const Matrix residual = (fe.cols() >= ge.cols()) ? Matrix(ge - fe * cross)
                                                     : Matrix(fe - ge * cross.transpose());
    Eigen::JacobiSVD<Matrix> svd_sin(residual);
    const Vector sines = svd_sin.singularValues();  // descending

    out.angles.resize(static_cast<size_t>(q));
    for (int k = 0; k < q; ++k) {
        const double c = std::min(s[k], 1.0 + policy().clamp_guard);
        if (c * c > 0.5) {
            const double sn = std::clamp(sines[q - 1 - k], 0.0, 1.0);
            out.angles[static_cast<size_t>(k)] = std::asin(sn);
        } else {
            out.angles[static_cast<size_t>(k)] = clamped_acos(c);
        }
    }
    out.principal_left = F.basis * svd.matrixU();
    out.principal_right = G.basis * svd.matrixV();
    return out;
}

namespace {

// grid of unit coefficient vectors covering a (hemi)sphere in dim 1..3,
// `resolution` samples per angular dimension
std::vector<Vector> sphere_grid(int dim, int resolution) {
    std::vector<Vector> pts;
    if (dim == 1) {
        Vector v(1);
        v << 1.0;
        pts.push_back(v);
    } else if (dim == 2) {
        pts.reserve(static_cast<size_t>(resolution));
        for (int i = 0; i < resolution; ++i) {
            const double phi = M_PI * i / resolution;
            Vector v(2);
            v << std::cos(phi), std::sin(phi);
            pts.push_back(v);
        }
    } else if (dim == 3) {
        pts.reserve(static_cast<size_t>(resolution) * resolution);
        for (int j = 0; j < resolution; ++j) {
            const double psi = 0.5 * M_PI * j / (resolution - 1);
            for (int i = 0; i < resolution; ++i) {
                const double phi = 2.0 * M_PI * i / resolution;
                Vector v(3);
                v << std::cos(phi) * std::sin(psi), std::sin(phi) * std::sin(psi), std::cos(psi);
                pts.push_back(v);
            }
        }
    } else {
        throw std::invalid_argument("principal_angles_oracle: dims above 3 not supported");
    }
    return pts;
}

// drop the direction u from the euclidean-orthonormal basis `b`
Matrix deflate(const Matrix& b, const Vector& u) {
    Matrix p = b - u * (u.transpose() * b);
    // re-orthonormalize, keeping rank cols(b) - 1
    const int n = static_cast<int>(p.rows());
    Matrix q(n, p.cols());
    int rank = 0;
    for (int c = 0; c < p.cols(); ++c) {
        Vector v = p.col(c);
        for (int r = 0; r < rank; ++r) v -= q.col(r) * q.col(r).dot(v);
        for (int r = 0; r < rank; ++r) v -= q.col(r) * q.col(r).dot(v);
        const double norm = v.norm();
        if (norm > 1e-8) q.col(rank++) = v / norm;
    }
    return q.leftCols(std::min(rank, static_cast<int>(b.cols()) - 1));
}

}  // namespace

AngleVector principal_angles_oracle(const Subspace& F, const Subspace& G, int resolution) {
    if (!F.metric.compatible(G.metric))
        throw std::invalid_argument("principal_angles_oracle: metric mismatch");
    if (F.dim() > 3 || G.dim() > 3)
        throw std::invalid_argument("principal_angles_oracle: dims above 3 not supported");
    if (resolution < 2) throw std::invalid_argument("principal_angles_oracle: resolution too small");

    AngleVector out;
    if (F.dim() == 0 || G.dim() == 0) return out;

    Matrix af = F.metric.to_euclidean(F.basis);
    Matrix ag = G.metric.to_euclidean(G.basis);
    const int count = std::min(F.dim(), G.dim());

    out.principal_left.resize(F.ambient_dim, count);
    out.principal_right.resize(G.ambient_dim, count);

    for (int k = 0; k < count; ++k) {
        const auto cu_grid = sphere_grid(static_cast<int>(af.cols()), resolution);
        const auto cv_grid = sphere_grid(static_cast<int>(ag.cols()), resolution);
        const Matrix cross = af.transpose() * ag;

        double best = -1.0;
        Vector best_u, best_v;
        for (const Vector& cv : cv_grid) {
            const Vector w = cross * cv;
            for (const Vector& cu : cu_grid) {
                const double val = std::abs(cu.dot(w));
                if (val > best) {
                    best = val;
                    best_u = cu;
                    best_v = cv;
                }
            }
        }
        const Vector u = af * best_u;
        const Vector v = ag * best_v;
        out.angles.push_back(clamped_acos(std::min(best, 1.0)));
        out.principal_left.col(k) = F.metric.from_euclidean(u);
        out.principal_right.col(k) = G.metric.from_euclidean(v);
        af = deflate(af, u);
        ag = deflate(ag, v);
        if (af.cols() == 0 || ag.cols() == 0) break;
    }
    return out;
}

Subspace subspace_intersection(const Subspace& F, const Subspace& G) {
    if (!F.metric.compatible(G.metric))
        throw std::invalid_argument("subspace_intersection: metric mismatch");
    const AngleVector av = principal_angles(F, G);
    int zeros = 0;
    for (double a : av.angles)
        if (a < policy().zero_angle_tol) ++zeros;

    Subspace s;
    s.ambient_dim = F.ambient_dim;
    s.metric = F.metric;
    if (zeros == 0) {
        s.basis.resize(F.ambient_dim, 0);
        return s;
    }
    // zero-angle principal vectors from the F side already form a
    // metric-orthonormal set
    s.basis = av.principal_left.leftCols(zeros);
    return s;
}

Subspace orthogonal_complement(const Subspace& F) {
    const int n = F.ambient_dim;
    Subspace s;
    s.ambient_dim = n;
    s.metric = F.metric;
    if (F.dim() == 0) {
        s.basis = F.metric.from_euclidean(Matrix(Matrix::Identity(n, n)));
        return s;
    }
    const Matrix fe = F.metric.to_euclidean(F.basis);
    Eigen::HouseholderQR<Matrix> qr(fe);
    const Matrix full_q = qr.householderQ() * Matrix::Identity(n, n);
    s.basis = F.metric.from_euclidean(Matrix(full_q.rightCols(n - F.dim())));
    return s;
}

namespace {

std::vector<double> padded(int zeros, const std::vector<double>& tail) {
    std::vector<double> v(static_cast<size_t>(std::max(zeros, 0)), 0.0);
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
}

DualityIdentity compare(std::string name, std::vector<double> lhs, std::vector<double> rhs) {
    DualityIdentity id{std::move(name), std::move(lhs), std::move(rhs), 0.0};
    if (id.lhs.size() != id.rhs.size()) {
        id.max_discrepancy = std::numeric_limits<double>::infinity();
        return id;
    }
    for (size_t k = 0; k < id.lhs.size(); ++k)
        id.max_discrepancy = std::max(id.max_discrepancy, std::abs(id.lhs[k] - id.rhs[k]));
    return id;
}

}  // namespace

DualityReport check_angle_duality(const Subspace& F, const Subspace& G) {
    if (!F.metric.compatible(G.metric))
        throw std::invalid_argument("check_angle_duality: metric mismatch");
    const int n = F.ambient_dim;
    const int p = F.dim(), q = G.dim();

    const Subspace fperp = orthogonal_complement(F);
    const Subspace gperp = orthogonal_complement(G);

    const auto fg = principal_angles(F, G).angles;
    const auto gf = principal_angles(G, F).angles;
    const auto fpgp = principal_angles(fperp, gperp).angles;
    const auto fgp = principal_angles(F, gperp).angles;
    const auto fpg = principal_angles(fperp, G).angles;

    DualityReport rep;
    rep.identities.push_back(compare("symmetry", fg, gf));
    rep.identities.push_back(
        compare("complement pair", padded(n - p - q, fg), padded(p + q - n, fpgp)));
    rep.identities.push_back(
        compare("mixed complements", padded(q - p, fgp), padded(p - q, fpg)));

    // pi/2-complement rule, stated for dim F >= dim G; use symmetry otherwise
    {
        const auto& big = (p >= q) ? fg : gf;
        const auto& mixed = (p >= q) ? fgp : fpg;  // angle(larger, smaller^perp)
        const int bp = std::max(p, q), bq = std::min(p, q);
        std::vector<double> lhs = big;
        lhs.insert(lhs.end(), static_cast<size_t>(bp - bq), M_PI / 2.0);
        std::vector<double> rhs(static_cast<size_t>(std::max(bp + bq - n, 0)), 0.0);
        for (auto it = mixed.rbegin(); it != mixed.rend(); ++it) rhs.push_back(M_PI / 2.0 - *it);
        rep.identities.push_back(compare("pi/2 complement", std::move(lhs), std::move(rhs)));
    }

    for (const auto& id : rep.identities)
        rep.max_discrepancy = std::max(rep.max_discrepancy, id.max_discrepancy);
    rep.pass = rep.max_discrepancy < 1e-8;
    return rep;
}

}  // namespace nbilliard
