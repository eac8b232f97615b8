#pragma once

#include "oinv/bigint.hpp"
#include "oinv/errors.hpp"
#include "oinv/orbits.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oinv {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Default ceiling on scalar multiplications in one polynomial evaluation.
inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000ULL;

// Orthogonality defect tolerated in generated / accepted group elements.
inline constexpr double kOrthogonalityTol = 1e-10;

// -------------------- tensors --------------------

/// Dense tensor with dims (n_1,...,n_r), entries row-major, 0-based indices
/// internally (all file formats are 1-based-free: flat row-major order).
template <class Scalar>
struct Tensor {
    std::vector<int> dims;
    std::vector<Scalar> entries;

    Tensor() = default;

    explicit Tensor(std::vector<int> ds) : dims(std::move(ds)) {
        std::size_t size = 1;
        for (int n : dims) {
            if (n < 1) throw std::invalid_argument("Tensor: dims must be >= 1");
            size *= static_cast<std::size_t>(n);
        }
        entries.assign(size, Scalar(0));
    }

    Tensor(std::vector<int> ds, std::vector<Scalar> es) : Tensor(std::move(ds)) {
        if (es.size() != entries.size())
            throw std::invalid_argument("Tensor: entry count does not match dims");
        entries = std::move(es);
    }

    int order() const { return static_cast<int>(dims.size()); }
    std::size_t size() const { return entries.size(); }

    std::size_t flat(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (int t = 0; t < order(); ++t) f = f * dims[t] + idx[t];
        return f;
    }
    Scalar& at(const std::vector<int>& idx) { return entries[flat(idx)]; }
    const Scalar& at(const std::vector<int>& idx) const { return entries[flat(idx)]; }
};

// -------------------- the invariant polynomials --------------------

/// Homogeneous degree-2m polynomial attached to an r-tuple of matchings:
/// one summation index per cycle of each factor, one tensor coordinate per
/// point. cycle_index[i][k] is the cycle of point k in tau_i, cycles numbered
/// by increasing smallest element (0-based).
struct InvariantPolynomial {
    int r = 0;
    int m = 0;
    std::vector<int> dims;
    std::vector<std::vector<int>> cycle_index;
};

inline InvariantPolynomial build_invariant(const MatchingTuple& t, const std::vector<int>& dims) {
    if (static_cast<int>(dims.size()) != t.r())
        throw std::invalid_argument("build_invariant: dims length must equal r");
    for (int n : dims)
        if (n < 1) throw std::invalid_argument("build_invariant: dims must be >= 1");
    InvariantPolynomial f;
    f.r = t.r();
    f.m = t.half();
    f.dims = dims;
    f.cycle_index.assign(f.r, std::vector<int>(t.points(), -1));
    for (int i = 0; i < f.r; ++i) {
        const auto pairs = t.taus[i].pairs_sorted(); // increasing smallest element
        for (int j = 0; j < static_cast<int>(pairs.size()); ++j) {
            f.cycle_index[i][pairs[j].first - 1] = j;
            f.cycle_index[i][pairs[j].second - 1] = j;
        }
    }
    return f;
}

namespace detail {

inline BigInt assignment_count(const InvariantPolynomial& f) {
    BigInt c = 1;
    for (int n : f.dims) c *= pow_int(n, f.m);
    return c;
}

} // namespace detail

/// Evaluates f on x by summing over all prod_i n_i^m cycle-index assignments,
/// multiplying 2m tensor entries per term. Exact for rational tensors.
template <class Scalar>
Scalar evaluate(const InvariantPolynomial& f, const Tensor<Scalar>& x,
                std::uint64_t budget = kDefaultEvalBudget) {
    if (x.dims != f.dims)
        throw std::invalid_argument("evaluate: tensor dims do not match polynomial dims");
    const int n_points = 2 * f.m;
    if (detail::assignment_count(f) * n_points > BigInt(budget))
        throw BudgetExceeded("evaluate: " + (detail::assignment_count(f) * n_points).str() +
                             " scalar multiplies exceed budget " + std::to_string(budget));

    // strides for flattening an (i_1,...,i_r) coordinate
    std::vector<std::size_t> stride(f.r, 1);
    for (int t = f.r - 2; t >= 0; --t) stride[t] = stride[t + 1] * f.dims[t + 1];

    // digit (i*m + j) is the value assigned to cycle j of factor i
    const int n_digits = f.r * f.m;
    std::vector<int> digits(n_digits, 0);
    std::vector<int> radix(n_digits);
    for (int i = 0; i < f.r; ++i)
        for (int j = 0; j < f.m; ++j) radix[i * f.m + j] = f.dims[i];

    Scalar total(0);
    while (true) {
        Scalar term(1);
        for (int k = 0; k < n_points; ++k) {
            std::size_t flat = 0;
            for (int i = 0; i < f.r; ++i)
                flat += static_cast<std::size_t>(digits[i * f.m + f.cycle_index[i][k]]) * stride[i];
            term *= x.entries[flat];
            if (term == Scalar(0)) break;
        }
        total += term;
        int pos = n_digits - 1;
        while (pos >= 0 && ++digits[pos] == radix[pos]) digits[pos--] = 0;
        if (pos < 0) break;
    }
    return total;
}

/// Subscript-style rendering, e.g.
///   sum over a^(1)_1..a^(1)_2 in 1..2; ... of
///     x_{a^(1)_1 a^(2)_1 a^(3)_1} x_{a^(1)_1 a^(2)_2 a^(3)_2} ...
inline std::string format_invariant(const InvariantPolynomial& f) {
    std::string s = "sum over ";
    for (int i = 0; i < f.r; ++i) {
        if (i) s += "; ";
        s += "a^(" + std::to_string(i + 1) + ")_1";
        if (f.m > 1) s += "..a^(" + std::to_string(i + 1) + ")_" + std::to_string(f.m);
        s += " in 1.." + std::to_string(f.dims[i]);
    }
    s += " of\n  ";
    for (int k = 0; k < 2 * f.m; ++k) {
        if (k) s += " ";
        s += "x_{";
        for (int i = 0; i < f.r; ++i) {
            if (i) s += " ";
            s += "a^(" + std::to_string(i + 1) + ")_" +
                 std::to_string(f.cycle_index[i][k] + 1);
        }
        s += "}";
    }
    return s;
}

// -------------------- group action on tensors --------------------

/// Tuple of complex orthogonal matrices (g^T g = I, plain transpose).
struct OrthogonalTuple {
    std::vector<CMatrix> mats;

    OrthogonalTuple() = default;

    explicit OrthogonalTuple(std::vector<CMatrix> ms) : mats(std::move(ms)) {
        for (const CMatrix& g : mats) {
            if (g.rows() != g.cols())
                throw std::invalid_argument("OrthogonalTuple: matrices must be square");
            const double defect =
                (g.transpose() * g - CMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
            if (defect > kOrthogonalityTol)
                throw std::invalid_argument("OrthogonalTuple: g^T g deviates from I by " +
                                            std::to_string(defect));
        }
    }

    int r() const { return static_cast<int>(mats.size()); }
};

namespace detail {

// Mode product: contract matrix g into the given mode of x.
inline Tensor<Cplx> apply_mode(const Tensor<Cplx>& x, const CMatrix& g, int mode) {
    const int n = x.dims[mode];
    Tensor<Cplx> y(x.dims);
    std::size_t inner = 1;
    for (int t = mode + 1; t < x.order(); ++t) inner *= x.dims[t];
    const std::size_t block = inner * n;
    const std::size_t outer = x.size() / block;
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t in = 0; in < inner; ++in) {
            const std::size_t base = o * block + in;
            for (int a = 0; a < n; ++a) {
                Cplx acc(0);
                for (int b = 0; b < n; ++b) acc += g(a, b) * x.entries[base + b * inner];
                y.entries[base + a * inner] = acc;
            }
        }
    return y;
}

} // namespace detail

/// (g_1,...,g_r) . x: multilinear action, matrix g_i contracted along mode i.
inline Tensor<Cplx> apply_group(const OrthogonalTuple& k, const Tensor<Cplx>& x) {
    if (k.r() != x.order())
        throw std::invalid_argument("apply_group: factor count mismatch");
    Tensor<Cplx> y = x;
    for (int i = 0; i < k.r(); ++i) {
        if (k.mats[i].rows() != x.dims[i])
            throw std::invalid_argument("apply_group: matrix size does not match mode " +
                                        std::to_string(i + 1));
        y = detail::apply_mode(y, k.mats[i], i);
    }
    return y;
}

// -------------------- random orthogonal matrices --------------------

enum class OrthogonalKind {
    real_householder, // product of n random reflections: real orthogonal
    complex_cayley    // (I - A)(I + A)^{-1} for complex antisymmetric A
};

/// Random element of the complex orthogonal group O(n), deterministic per rng
/// state. The real kind lands in the real form; the Cayley kind has genuinely
/// complex entries for n >= 2.
inline CMatrix random_orthogonal(int n, OrthogonalKind kind, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_orthogonal: n must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 32; ++attempt) {
        CMatrix q;
        if (kind == OrthogonalKind::real_householder) {
            q = CMatrix::Identity(n, n);
            for (int k = 0; k < n; ++k) {
                Eigen::VectorXd u(n);
                for (int i = 0; i < n; ++i) u(i) = gauss(rng);
                if (u.squaredNorm() < 1e-12) continue;
                const Eigen::MatrixXd h =
                    Eigen::MatrixXd::Identity(n, n) - (2.0 / u.squaredNorm()) * (u * u.transpose());
                q = h.cast<Cplx>() * q;
            }
        } else {
            // O(n, C) is non-compact: unbounded elements are legitimate but
            // wreck floating-point invariance checks through cancellation.
            // Moderate antisymmetric scale plus a norm rejection keeps the
            // sampled elements genuinely complex yet well-conditioned.
            CMatrix mrand(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mrand(i, j) = 0.5 * Cplx(gauss(rng), gauss(rng));
            const CMatrix a = 0.5 * (mrand - mrand.transpose()); // A^T = -A
            const CMatrix b = CMatrix::Identity(n, n) + a;
            Eigen::JacobiSVD<CMatrix> svd(b);
            const double smin = svd.singularValues().minCoeff();
            const double smax = svd.singularValues().maxCoeff();
            if (smin <= 0 || smax / smin > 1e8) continue; // near-singular I + A
            q = (CMatrix::Identity(n, n) - a) * b.inverse();
            // E = Q^T Q - I is complex symmetric, so Q(I - E/2) squares the
            // defect; polish until the inverse's rounding is gone
            for (int polish = 0; polish < 4; ++polish) {
                const CMatrix e = q.transpose() * q - CMatrix::Identity(n, n);
                if (e.cwiseAbs().maxCoeff() <= 1e-13) break;
                q -= 0.5 * (q * e);
            }
            if (q.cwiseAbs().maxCoeff() > 2.5) continue;
        }
        const double defect =
            (q.transpose() * q - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
        if (defect <= kOrthogonalityTol) return q;
    }
    throw std::runtime_error("random_orthogonal: no well-conditioned sample in 32 attempts");
}

inline OrthogonalTuple random_orthogonal_tuple(const std::vector<int>& dims, OrthogonalKind kind,
                                               std::mt19937_64& rng) {
    std::vector<CMatrix> ms;
    ms.reserve(dims.size());
    for (int n : dims) ms.push_back(random_orthogonal(n, kind, rng));
    return OrthogonalTuple(std::move(ms));
}

// -------------------- invariance checking --------------------

/// Relative invariance defect of an arbitrary evaluator under one group
/// element: |f(k.x) - f(x)| / max(1, |f(x)|).
template <class Evaluator>
double invariance_residual(Evaluator&& f, const Tensor<Cplx>& x, const OrthogonalTuple& k) {
    const Cplx before = f(x);
    const Cplx after = f(apply_group(k, x));
    return std::abs(after - before) / std::max(1.0, std::abs(before));
}

inline double verify_invariance(const InvariantPolynomial& f, const Tensor<Cplx>& x,
                                const OrthogonalTuple& k,
                                std::uint64_t budget = kDefaultEvalBudget) {
    return invariance_residual(
        [&](const Tensor<Cplx>& t) { return evaluate(f, t, budget); }, x, k);
}

// -------------------- exact rank of the evaluation matrix --------------------

/// Exact rank over Q of M[s][f] = fs[f](samples[s]) by fraction-free
/// (Bareiss) elimination; certifies linear independence of the polynomials.
inline int evaluation_rank(const std::vector<InvariantPolynomial>& fs,
                           const std::vector<Tensor<BigRational>>& samples,
                           std::uint64_t budget = kDefaultEvalBudget) {
    if (samples.size() < fs.size())
        throw std::invalid_argument("evaluation_rank: need at least as many samples as polynomials");
    const int rows = static_cast<int>(samples.size());
    const int cols = static_cast<int>(fs.size());

    std::vector<std::vector<BigInt>> mat(rows, std::vector<BigInt>(cols));
    for (int s = 0; s < rows; ++s) {
        std::vector<BigRational> vals(cols);
        BigInt lcm = 1;
        for (int c = 0; c < cols; ++c) {
            vals[c] = evaluate(fs[c], samples[s], budget);
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(vals[c]));
        }
        for (int c = 0; c < cols; ++c) { // row scaling preserves rank
            mat[s][c] = boost::multiprecision::numerator(vals[c]) *
                        checked_div(lcm, boost::multiprecision::denominator(vals[c]));
        }
    }

    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int rr = rank; rr < rows; ++rr)
            if (mat[rr][col] != 0) { piv = rr; break; }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        for (int rr = rank + 1; rr < rows; ++rr) {
            for (int cc = col + 1; cc < cols; ++cc)
                mat[rr][cc] =
                    checked_div(mat[rr][cc] * mat[rank][col] - mat[rr][col] * mat[rank][cc], prev);
            mat[rr][col] = 0;
        }
        prev = mat[rank][col];
        ++rank;
    }
    return rank;
}

// -------------------- random test tensors --------------------

inline Tensor<BigRational> random_rational_tensor(const std::vector<int>& dims, int lo, int hi,
                                                  std::mt19937_64& rng) {
    Tensor<BigRational> x(dims);
    std::uniform_int_distribution<int> dist(lo, hi);
    for (auto& e : x.entries) e = dist(rng);
    return x;
}

inline Tensor<Cplx> random_complex_tensor(const std::vector<int>& dims, std::mt19937_64& rng) {
    Tensor<Cplx> x(dims);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& e : x.entries) e = Cplx(gauss(rng), gauss(rng));
    return x;
}

} // namespace oinv
