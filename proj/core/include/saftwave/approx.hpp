#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "saftwave/grid.hpp"
#include "saftwave/params.hpp"

namespace saftwave::approx {

enum class BasisKind { special_affine, classical_haar };

std::string_view to_string(BasisKind kind) noexcept;

using Target = std::function<double(double)>;

/// Truncated wavelet series on [0, 1] with 2M = 2^{J+1} terms.
struct CollocationProblem {
  int J = 1;
  SaftParams params;
  BasisKind basis = BasisKind::special_affine;
  Target target;

  int M() const noexcept { return 1 << J; }
  int size() const noexcept { return 2 * M(); }
  double cell() const noexcept { return 1.0 / (2.0 * M()); }
};

/// sigma = m + k + 1 with m = 2^j, 0 <= k < m; mu = M / m.
struct BasisIndex {
  int sigma = 2;
  int j = 0;
  int k = 0;
  int m = 1;
  double mu = 1.0;

  /// Throws Error{IndexOutOfRange} unless 2 <= sigma <= 2M.
  static BasisIndex from_sigma(int sigma, int M);
};

struct Breakpoints {
  double b1;
  double b2;
  double b3;
};

/// (2k mu ds, (2k+1) mu ds, 2(k+1) mu ds) with ds = 1/(2M).
Breakpoints breakpoints(const BasisIndex& idx, int M);

/// Imaginary chirp envelope Im(exp{-(i/2B)(A s^2 + p)}).
double envelope(const SaftParams& params, double s) noexcept;

/// h_sigma(s). sigma = 1 is the indicator of [0, 1); sigma >= 2 is -w(s) on
/// [b1, b2), +w(s) on [b2, b3), 0 elsewhere, with w the envelope for the
/// special-affine basis and w = 1 for classical Haar.
/// Throws Error{IndexOutOfRange} unless 1 <= sigma <= 2M.
double basis_h(const CollocationProblem& problem, int sigma, double s);

/// The 2M cell midpoints (2l - 1) / (4M).
std::vector<double> collocation_points(int M);

struct SolveOptions {
  double max_condition = 1e12;
};

inline constexpr int kDefaultGridPoints = 2001;

class ApproxResult {
 public:
  ApproxResult(CollocationProblem problem, std::vector<double> coefficients,
               double condition);

  const CollocationProblem& problem() const noexcept { return problem_; }
  const std::vector<double>& coefficients() const noexcept {
    return coefficients_;
  }
  /// 1-norm condition number of the collocation matrix.
  double condition() const noexcept { return condition_; }

  /// Series value at s in [0, 1]. At s = 1 the last cell is used (left
  /// limit), since every basis element is right-open.
  double operator()(double s) const;

 private:
  CollocationProblem problem_;
  std::vector<double> coefficients_;
  double condition_;
};

/// Collocation solve by Gaussian elimination with partial pivoting.
/// Throws Error{SingularSystem} or Error{ConditionTooLarge}.
ApproxResult solve(const CollocationProblem& problem,
                   const SolveOptions& options = {});

/// Evaluation grid for the sup-norm: grid_points points i/(grid_points-1)
/// on the closed interval [0, 1].
UniformGrid error_grid(int grid_points = kDefaultGridPoints);

/// max over error_grid(grid_points) of |target(s) - result(s)|.
double linf_error(const ApproxResult& result, const Target& target,
                  int grid_points = kDefaultGridPoints);

struct ErrorRow {
  int J;
  double special_affine;
  double classical_haar;
  double ratio() const noexcept { return special_affine / classical_haar; }
};

/// One row per level J = 1 .. j_max for both bases.
std::vector<ErrorRow> error_table(const SaftParams& params,
                                  const Target& target, int j_max,
                                  int grid_points = kDefaultGridPoints);

/// Dense square system solve with partial pivoting; exposed for tests.
/// Throws Error{SingularSystem} on an exactly or numerically zero pivot.
std::vector<double> solve_dense(std::vector<std::vector<double>> matrix,
                                std::vector<double> rhs);

/// ||M||_1 * ||M^-1||_1, computed from the explicit inverse.
double condition_1norm(const std::vector<std::vector<double>>& matrix);

}  // namespace saftwave::approx
