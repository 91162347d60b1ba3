#include "coolsim/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "coolsim/detail/kernels.hpp"

namespace coolsim {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, {0.0, 0.0}) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& entries) {
  DenseMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  DenseMatrix m(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::complex<double> a = at(r, k);
      if (a == std::complex<double>{}) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) m.at(r, c) += a * other.at(k, c);
    }
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

std::vector<double> DenseMatrix::real_diagonal() const {
  std::vector<double> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i).real();
  return d;
}

namespace {

constexpr int kMaxDenseQubits = 10;

// |target><source| on the subset, identity on the spectators.
DenseMatrix embedded_dyad(const kernel::SubsetIndexer& ix, std::size_t dim,
                          std::uint64_t target, std::uint64_t source, double amplitude) {
  DenseMatrix m(dim, dim);
  for (std::uint64_t c = 0; c < ix.spectator_configs(); ++c) {
    const std::uint64_t base = ix.spectator_base(c);
    m.at(ix.with_label(base, target), ix.with_label(base, source)) = amplitude;
  }
  return m;
}

}  // namespace

std::vector<DenseMatrix> kraus_set(const StateResetSpec& spec, int n, bool corrupt) {
  spec.validate(n);
  if (n > kMaxDenseQubits)
    throw std::invalid_argument("dense Kraus oracle is capped at n <= 10");
  const std::size_t dim = std::size_t{1} << n;
  kernel::SubsetIndexer ix(n, spec.qubit_subset);
  const double sp = std::sqrt(spec.p);
  const double sq = std::sqrt(1.0 - spec.p);

  std::vector<DenseMatrix> ops;
  ops.push_back(embedded_dyad(ix, dim, spec.s1, spec.s1, sp));
  ops.push_back(embedded_dyad(ix, dim, spec.s1, spec.s2, sp));
  ops.push_back(embedded_dyad(ix, dim, spec.s2, spec.s2, sq));
  ops.push_back(embedded_dyad(ix, dim, spec.s2, spec.s1, sq));
  if (corrupt) return ops;

  // Projector onto the labels outside {s1, s2}, embedded on the spectators.
  // A single operator (rather than one projector per label) keeps the
  // untouched subspace's coherences intact, matching the relaxation process
  // the Kraus set discretizes.
  DenseMatrix rest(dim, dim);
  const std::uint64_t labels = std::uint64_t{1} << spec.qubit_subset.size();
  for (std::uint64_t lab = 0; lab < labels; ++lab) {
    if (lab == spec.s1 || lab == spec.s2) continue;
    for (std::uint64_t c = 0; c < ix.spectator_configs(); ++c) {
      const std::uint64_t i = ix.with_label(ix.spectator_base(c), lab);
      rest.at(i, i) = 1.0;
    }
  }
  ops.push_back(std::move(rest));
  return ops;
}

double kraus_completeness_defect(const std::vector<DenseMatrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("empty Kraus set");
  DenseMatrix sum(kraus[0].cols(), kraus[0].cols());
  for (const auto& a : kraus) sum += a.adjoint() * a;
  return sum.max_abs_diff(DenseMatrix::identity(sum.rows()));
}

DenseMatrix apply_kraus_dense(const DenseMatrix& rho, const StateResetSpec& spec,
                              bool corrupt) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("rho must be square");
  double trace = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    const auto d = rho.at(i, i);
    if (d.real() < -1e-12)
      throw std::invalid_argument("rho has a negative diagonal entry");
    trace += d.real();
    for (std::size_t j = i; j < rho.cols(); ++j)
      if (std::abs(rho.at(i, j) - std::conj(rho.at(j, i))) > 1e-12)
        throw std::invalid_argument("rho is not Hermitian");
  }
  if (std::abs(trace - 1.0) > 1e-10)
    throw std::invalid_argument("rho must have unit trace");

  int n = 0;
  while ((std::size_t{1} << n) < rho.rows()) ++n;
  if ((std::size_t{1} << n) != rho.rows())
    throw std::invalid_argument("rho dimension must be a power of two");

  const auto kraus = kraus_set(spec, n, corrupt);
  const double defect = kraus_completeness_defect(kraus);
  if (defect > 1e-12)
    throw std::runtime_error("Kraus completeness failure: sum A^dag A != I");

  DenseMatrix out(rho.rows(), rho.cols());
  for (const auto& a : kraus) out += a * rho * a.adjoint();
  return out;
}

namespace {

// exp(Q t) * v for a small generator, via scaling and squaring on the matrix.
std::array<double, 4> expm_apply(const std::array<std::array<double, 4>, 4>& q, double t,
                                 const std::array<double, 4>& v) {
  using Mat = std::array<std::array<double, 4>, 4>;
  double norm = 0.0;
  for (const auto& row : q)
    for (double x : row) norm = std::max(norm, std::abs(x) * t);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  const double h = t * scale;

  auto matmul = [](const Mat& a, const Mat& b) {
    Mat c{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const double aik = a[i][k];
        if (aik == 0.0) continue;
        for (int j = 0; j < 4; ++j) c[i][j] += aik * b[k][j];
      }
    return c;
  };

  // Taylor series of exp(Q h); ||Q h|| <= 1/2 so ~20 terms reach 1e-18.
  Mat result{};
  Mat term{};
  for (int i = 0; i < 4; ++i) {
    result[i][i] = 1.0;
    term[i][i] = 1.0;
  }
  for (int k = 1; k <= 24; ++k) {
    term = matmul(term, q);
    const double factor = h / k;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        term[i][j] *= factor;
        result[i][j] += term[i][j];
      }
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);

  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += result[i][j] * v[j];
  return out;
}

}  // namespace

std::array<double, 4> rate_matrix_evolve(const std::array<double, 4>& pops,
                                         const RateSet& rates, const BathModel& bath,
                                         double t) {
  rates.validate();
  if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
  double sum = 0.0;
  for (double p : pops) {
    if (p < -1e-12) throw std::invalid_argument("populations must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("populations must sum to 1");

  const double p1 = bath.reset_probability(1);  // single-quantum edges
  const double p2 = bath.reset_probability(2);  // double-quantum edge

  std::array<std::array<double, 4>, 4> q{};
  // a is the lower state of the edge (larger equilibrium population).
  auto add_edge = [&q](int a, int b, double rate, double p) {
    if (rate == 0.0) return;
    const double up = rate * (1.0 - p);  // a -> b
    const double down = rate * p;        // b -> a
    q[b][a] += up;
    q[a][a] -= up;
    q[a][b] += down;
    q[b][b] -= down;
  };
  // Basis order {N00, N01, N10, N11}.
  add_edge(0, 1, rates.g1, p1);   // qubit-2 flip
  add_edge(2, 3, rates.g1, p1);
  add_edge(0, 2, rates.g1p, p1);  // qubit-1 flip
  add_edge(1, 3, rates.g1p, p1);
  add_edge(0, 3, rates.g2, p2);   // double quantum
  add_edge(1, 2, rates.g2p, 0.5); // zero quantum
  return expm_apply(q, t, pops);
}

}  // namespace coolsim
