#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace nbilliard {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Positive particle masses m_1..m_N. Defines the mass metric.
struct MassVector {
    std::vector<double> masses;

    MassVector() = default;
    explicit MassVector(std::vector<double> m) : masses(std::move(m)) {
        if (masses.empty())
            throw std::invalid_argument("MassVector: need at least one mass");
        for (double v : masses)
            if (!(v > 0.0))
                throw std::invalid_argument("MassVector: masses must be strictly positive");
    }

    int size() const { return static_cast<int>(masses.size()); }
    double operator[](int i) const { return masses[static_cast<size_t>(i)]; }

    static MassVector unit(int n) { return MassVector(std::vector<double>(static_cast<size_t>(n), 1.0)); }
};

/// Inner product on a configuration space: either plain Euclidean, or the
/// mass metric on R^N tensored with the Euclidean metric on R^m. Represented
/// by one positive weight per coordinate (coordinate layout is particle-major:
/// index = particle*m + axis).
class Metric {
public:
    enum class Kind { euclidean, mass };

    static Metric euclidean(int ambient_dim) {
        Metric g;
        g.kind_ = Kind::euclidean;
        g.weights_ = Vector::Ones(ambient_dim);
        g.sqrt_weights_ = g.weights_;
        return g;
    }

    static Metric mass(const MassVector& mv, int spatial_dim) {
        if (spatial_dim < 1) throw std::invalid_argument("Metric::mass: spatial_dim must be >= 1");
        Metric g;
        g.kind_ = Kind::mass;
        g.masses_ = mv;
        g.spatial_dim_ = spatial_dim;
        const int n = mv.size() * spatial_dim;
        g.weights_.resize(n);
        for (int k = 0; k < mv.size(); ++k)
            for (int a = 0; a < spatial_dim; ++a)
                g.weights_[k * spatial_dim + a] = mv[k];
        g.sqrt_weights_ = g.weights_.cwiseSqrt();
        return g;
    }

    Kind kind() const { return kind_; }
    int ambient_dim() const { return static_cast<int>(weights_.size()); }
    int spatial_dim() const { return spatial_dim_; }
    const Vector& weights() const { return weights_; }

    /// Coordinate rescaling x -> sqrt(w) .* x turning this metric into the
    /// Euclidean one. All factorizations happen in the rescaled frame.
    Vector to_euclidean(const Vector& x) const { return sqrt_weights_.cwiseProduct(x); }
    Vector from_euclidean(const Vector& x) const { return x.cwiseQuotient(sqrt_weights_); }
    Matrix to_euclidean(const Matrix& m) const { return sqrt_weights_.asDiagonal() * m; }
    Matrix from_euclidean(const Matrix& m) const { return sqrt_weights_.cwiseInverse().asDiagonal() * m; }

    bool compatible(const Metric& other) const {
        return ambient_dim() == other.ambient_dim() &&
               (weights_ - other.weights_).lpNorm<Eigen::Infinity>() == 0.0;
    }

private:
    Kind kind_ = Kind::euclidean;
    Vector weights_;
    Vector sqrt_weights_;
    MassVector masses_{std::vector<double>{1.0}};
    int spatial_dim_ = 1;
};

/// <u,v> under the metric. Throws on dimension mismatch.
double metric_inner(const Vector& u, const Vector& v, const Metric& g);

}  // namespace nbilliard
