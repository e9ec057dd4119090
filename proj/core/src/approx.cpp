#include "saftwave/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "saftwave/error.hpp"
#include "saftwave/quadrature.hpp"

namespace saftwave::approx {
namespace {

constexpr double kEnvelopeFloor = 1e-12;

void require_sigma(int sigma, int M) {
  if (sigma < 1 || sigma > 2 * M) {
    throw Error(ErrorKind::IndexOutOfRange,
                "sigma " + std::to_string(sigma) + " outside [1, " +
                    std::to_string(2 * M) + "]");
  }
}

}  // namespace

std::string_view to_string(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::special_affine: return "special_affine";
    case BasisKind::classical_haar: return "classical_haar";
  }
  return "unknown";
}

BasisIndex BasisIndex::from_sigma(int sigma, int M) {
  if (sigma < 2 || sigma > 2 * M) {
    throw Error(ErrorKind::IndexOutOfRange,
                "sigma " + std::to_string(sigma) + " outside [2, " +
                    std::to_string(2 * M) + "]");
  }
  BasisIndex idx;
  idx.sigma = sigma;
  idx.j = 0;
  while ((2 << idx.j) <= sigma - 1) ++idx.j;
  idx.m = 1 << idx.j;
  idx.k = sigma - idx.m - 1;
  idx.mu = static_cast<double>(M) / idx.m;
  return idx;
}

Breakpoints breakpoints(const BasisIndex& idx, int M) {
  const double ds = 1.0 / (2.0 * M);
  const double w = idx.mu * ds;
  return {2.0 * idx.k * w, (2.0 * idx.k + 1.0) * w, 2.0 * (idx.k + 1.0) * w};
}

double envelope(const SaftParams& params, double s) noexcept {
  return std::sin(-(params.A * s * s + params.p) / (2.0 * params.B));
}

double basis_h(const CollocationProblem& problem, int sigma, double s) {
  const int M = problem.M();
  require_sigma(sigma, M);
  if (sigma == 1) return (s >= 0.0 && s < 1.0) ? 1.0 : 0.0;
  const Breakpoints b = breakpoints(BasisIndex::from_sigma(sigma, M), M);
  if (s < b.b1 || s >= b.b3) return 0.0;
  const double w = problem.basis == BasisKind::special_affine
                       ? envelope(problem.params, s)
                       : 1.0;
  return s < b.b2 ? -w : w;
}

std::vector<double> collocation_points(int M) {
  std::vector<double> pts(static_cast<std::size_t>(2 * M));
  for (int l = 1; l <= 2 * M; ++l) {
    pts[static_cast<std::size_t>(l - 1)] = (2.0 * l - 1.0) / (4.0 * M);
  }
  return pts;
}

ApproxResult::ApproxResult(CollocationProblem problem,
                           std::vector<double> coefficients, double condition)
    : problem_(std::move(problem)),
      coefficients_(std::move(coefficients)),
      condition_(condition) {}

double ApproxResult::operator()(double s) const {
  const double t = (s == 1.0) ? std::nextafter(1.0, 0.0) : s;
  std::vector<double> terms(coefficients_.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = coefficients_[i] * basis_h(problem_, static_cast<int>(i) + 1, t);
  }
  return quad::pairwise_sum(std::span<const double>(terms));
}

namespace {

// Row-pivoted LU factors of a square matrix, packed in place.
struct LuFactors {
  std::vector<std::vector<double>> lu;
  std::vector<std::size_t> perm;

  std::vector<double> solve(const std::vector<double>& rhs) const {
    const std::size_t n = perm.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = rhs[perm[i]];
      for (std::size_t c = 0; c < i; ++c) acc -= lu[i][c] * x[c];
      x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      double acc = x[i];
      for (std::size_t c = i + 1; c < n; ++c) acc -= lu[i][c] * x[c];
      x[i] = acc / lu[i][i];
    }
    return x;
  }
};

LuFactors factor(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double scale = 0.0;
  for (const auto& row : a) {
    if (row.size() != n) {
      throw Error(ErrorKind::InvalidArgument, "matrix is not square");
    }
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  const double tiny = 1e-14 * std::max(scale, 1e-300);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (!(std::abs(a[piv][col]) > tiny)) {
      throw Error(ErrorKind::SingularSystem,
                  "zero pivot in column " + std::to_string(col));
    }
    std::swap(a[piv], a[col]);
    std::swap(perm[piv], perm[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      a[r][col] = f;
      if (f == 0.0) continue;
      for (std::size_t c = col + 1; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return {std::move(a), std::move(perm)};
}

double norm1(const std::vector<std::vector<double>>& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    double col = 0.0;
    for (const auto& row : m) col += std::abs(row[c]);
    best = std::max(best, col);
  }
  return best;
}

double condition_from(const std::vector<std::vector<double>>& matrix,
                      const LuFactors& lu) {
  const std::size_t n = matrix.size();
  double inv_norm = 0.0;
  std::vector<double> e(n);
  for (std::size_t c = 0; c < n; ++c) {
    e[c] = 1.0;
    const std::vector<double> col = lu.solve(e);
    e[c] = 0.0;
    double sum = 0.0;
    for (double v : col) sum += std::abs(v);
    inv_norm = std::max(inv_norm, sum);
  }
  return norm1(matrix) * inv_norm;
}

}  // namespace

std::vector<double> solve_dense(std::vector<std::vector<double>> matrix,
                                std::vector<double> rhs) {
  if (matrix.size() != rhs.size()) {
    throw Error(ErrorKind::InvalidArgument, "matrix and rhs sizes differ");
  }
  return factor(std::move(matrix)).solve(rhs);
}

double condition_1norm(const std::vector<std::vector<double>>& matrix) {
  return condition_from(matrix, factor(matrix));
}

ApproxResult solve(const CollocationProblem& problem,
                   const SolveOptions& options) {
  if (problem.J < 0 || problem.J > 20) {
    throw Error(ErrorKind::InvalidArgument,
                "J must be in [0, 20], got " + std::to_string(problem.J));
  }
  if (!problem.target) {
    throw Error(ErrorKind::InvalidArgument, "target function is empty");
  }
  validate(problem.params);
  const int M = problem.M();
  const std::vector<double> eta = collocation_points(M);
  if (problem.basis == BasisKind::special_affine) {
    double peak = 0.0;
    for (double s : eta) peak = std::max(peak, std::abs(envelope(problem.params, s)));
    if (peak < kEnvelopeFloor) {
      throw Error(ErrorKind::SingularSystem,
                  "chirp envelope vanishes at every collocation point");
    }
  }
  const auto n = static_cast<std::size_t>(problem.size());
  std::vector<std::vector<double>> H(n, std::vector<double>(n));
  std::vector<double> rhs(n);
  quad::parallel_for(n, [&](std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) {
      H[r][c] = basis_h(problem, static_cast<int>(c) + 1, eta[r]);
    }
    rhs[r] = problem.target(eta[r]);
  });
  const LuFactors lu = factor(H);
  const double cond = condition_from(H, lu);
  if (!(cond <= options.max_condition)) {
    throw Error(ErrorKind::ConditionTooLarge,
                "condition number " + std::to_string(cond) + " exceeds " +
                    std::to_string(options.max_condition));
  }
  return ApproxResult(problem, lu.solve(rhs), cond);
}

UniformGrid error_grid(int grid_points) {
  if (grid_points < 2) {
    throw Error(ErrorKind::InvalidArgument, "grid_points must be >= 2");
  }
  return UniformGrid::spanning(0.0, 1.0, static_cast<std::size_t>(grid_points));
}

double linf_error(const ApproxResult& result, const Target& target,
                  int grid_points) {
  const UniformGrid grid = error_grid(grid_points);
  std::vector<double> err(grid.size());
  quad::parallel_for(grid.size(), [&](std::size_t i) {
    // The last point is exactly 1, not start + (n-1)*step.
    const double s = (i + 1 == grid.size()) ? 1.0 : grid[i];
    err[i] = std::abs(target(s) - result(s));
  });
  return *std::max_element(err.begin(), err.end());
}

std::vector<ErrorRow> error_table(const SaftParams& params,
                                  const Target& target, int j_max,
                                  int grid_points) {
  if (j_max < 1) throw Error(ErrorKind::InvalidArgument, "j_max must be >= 1");
  std::vector<ErrorRow> rows;
  for (int J = 1; J <= j_max; ++J) {
    CollocationProblem sa{J, params, BasisKind::special_affine, target};
    CollocationProblem ch{J, params, BasisKind::classical_haar, target};
    rows.push_back({J, linf_error(solve(sa), target, grid_points),
                    linf_error(solve(ch), target, grid_points)});
  }
  return rows;
}

}  // namespace saftwave::approx
