#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "csv.hpp"
#include "saftwave/saftwave.hpp"

namespace saftwave::cli {
namespace {

struct MatrixOptions {
  std::string preset = "figure1";
  std::optional<double> A, B, C, D, p, q;

  SaftParams resolve() const {
    static const std::map<std::string, SaftParams> kPresets = {
        {"figure1", presets::figure1()},
        {"figure2", presets::figure2()},
        {"fourier", presets::fourier()},
    };
    SaftParams s = kPresets.at(preset);
    if (A) s.A = *A;
    if (B) s.B = *B;
    if (C) s.C = *C;
    if (D) s.D = *D;
    if (p) s.p = *p;
    if (q) s.q = *q;
    return s;
  }
};

struct GridOptions {
  double min;
  double max;
  std::size_t count;

  UniformGrid grid() const { return UniformGrid::spanning(min, max, count); }
};

void add_grid(CLI::App* cmd, const std::string& prefix, GridOptions& g,
              const std::string& what) {
  cmd->add_option("--" + prefix + "-min", g.min, what + " grid start")
      ->capture_default_str();
  cmd->add_option("--" + prefix + "-max", g.max, what + " grid end")
      ->capture_default_str();
  cmd->add_option("--" + prefix + "-count", g.count, what + " grid points")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
}

std::function<cplx(double)> builtin_signal(const std::string& name,
                                           const SaftParams& s) {
  if (name == "gaussian") {
    return [](double x) { return cplx(std::exp(-0.5 * x * x)); };
  }
  if (name == "chirped_sinc") {
    return [s](double x) { return chirp(s, x) * sampling::sinc(x); };
  }
  if (name == "indicator") {
    return [](double x) { return cplx(std::abs(x) <= 1.0 ? 1.0 : 0.0); };
  }
  return [](double) { return cplx(0.0); };
}

std::function<double(double)> builtin_target(const std::string& name) {
  if (name == "x2") return [](double x) { return x * x; };
  if (name == "sin") return [](double x) { return std::sin(2.0 * kPi * x); };
  if (name == "exp") return [](double x) { return std::exp(x); };
  return [](double x) { return std::abs(x - 0.5); };
}

// Piecewise-linear interpolant through (x, value) rows sorted by x.
std::function<double(double)> table_target(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  auto rows = read_rows(in);
  if (rows.size() < 2) throw Error(ErrorKind::InvalidArgument, "target csv needs >= 2 rows");
  std::vector<double> xs;
  std::vector<double> ys;
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) {
    if (r.size() < 2) throw Error(ErrorKind::InvalidArgument, "target csv needs 2 columns");
    xs.push_back(r[0]);
    ys.push_back(r[1]);
  }
  return [xs, ys](double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  };
}

void write_complex(std::ostream& os, std::string_view axis, const SampledFunction& f,
                   bool with_abs) {
  if (with_abs) {
    CsvWriter csv(os, {axis, "re", "im", "abs"});
    for (std::size_t j = 0; j < f.size(); ++j) {
      csv.row({f.grid()[j], f[j].real(), f[j].imag(), std::abs(f[j])});
    }
  } else {
    CsvWriter csv(os, {axis, "re", "im"});
    for (std::size_t j = 0; j < f.size(); ++j) {
      csv.row({f.grid()[j], f[j].real(), f[j].imag()});
    }
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularSystem:
    case ErrorKind::ConditionTooLarge:
      return kExitInvariant;
    default:
      return kExitConfig;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Special affine Fourier transform and wavelet toolkit", "saftwave"};
  app.set_config("--config", "", "key=value config file (flags override it)");
  app.require_subcommand(1);
  app.fallthrough();

  MatrixOptions m;
  app.add_option("--preset", m.preset, "parameter preset")
      ->check(CLI::IsMember({"figure1", "figure2", "fourier"}))
      ->capture_default_str();
  app.add_option("--A", m.A, "matrix entry A");
  app.add_option("--B", m.B, "matrix entry B");
  app.add_option("--C", m.C, "matrix entry C");
  app.add_option("--D", m.D, "matrix entry D");
  app.add_option("--p", m.p, "offset p");
  app.add_option("--q", m.q, "offset q");
  std::string out_path;
  app.add_option("--out", out_path, "write results to this file instead of stdout");

  // transform
  auto* transform = app.add_subcommand("transform", "forward or inverse transform to CSV");
  std::string signal = "gaussian";
  std::string input;
  bool do_inverse = false;
  GridOptions in_grid{-20.0, 20.0, 1281};
  GridOptions out_grid{-8.0, 8.0, 321};
  transform->add_option("--signal", signal, "built-in input")
      ->check(CLI::IsMember({"gaussian", "chirped_sinc", "indicator", "zero"}))
      ->capture_default_str();
  transform->add_option("--input", input, "CSV input: x,value or x,re,im on a uniform grid");
  transform->add_flag("--inverse", do_inverse, "apply the inverse transform");
  add_grid(transform, "in", in_grid, "input");
  add_grid(transform, "out", out_grid, "output");

  // sample
  auto* sample = app.add_subcommand("sample", "sampling-series reconstruction to CSV");
  int window = sampling::kDefaultWindow;
  std::optional<double> omega;
  std::string sample_signal = "phi";
  GridOptions sample_grid{-4.0, 4.0, 801};
  sample->add_option("--window", window, "sample window N (|n| <= N)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sample->add_option("--omega", omega, "band limit (default B*pi)");
  sample->add_option("--signal", sample_signal, "phi: chirped sinc; shifted: phi at x - 1/2")
      ->check(CLI::IsMember({"phi", "shifted"}))
      ->capture_default_str();
  add_grid(sample, "x", sample_grid, "evaluation");

  // wavelet
  auto* wavelet = app.add_subcommand("wavelet", "mother wavelet samples to CSV");
  std::string kind = "shannon";
  int wavelet_window = wavelets::kShannonSynthesisWindow;
  std::string form = "closed";
  std::optional<double> w_min, w_max;
  std::optional<std::size_t> w_count;
  wavelet->add_option("--kind", kind, "wavelet family")
      ->check(CLI::IsMember({"shannon", "haar"}))
      ->capture_default_str();
  wavelet->add_option("--window", wavelet_window, "Shannon truncation |n| <= N")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  wavelet->add_option("--form", form, "haar: closed form or filter synthesis")
      ->check(CLI::IsMember({"closed", "synthesis"}))
      ->capture_default_str();
  wavelet->add_option("--x-min", w_min, "grid start");
  wavelet->add_option("--x-max", w_max, "grid end");
  wavelet->add_option("--x-count", w_count, "grid points")->check(CLI::Range(2, 10000000));

  // approx
  auto* approx_cmd = app.add_subcommand("approx", "collocation error table to CSV");
  int j_max = 6;
  std::string target = "x2";
  std::string target_csv;
  std::string coeffs_path;
  int grid_points = approx::kDefaultGridPoints;
  approx_cmd->add_option("--jmax", j_max, "highest level J")
      ->capture_default_str()
      ->check(CLI::Range(1, 12));
  approx_cmd->add_option("--target", target, "built-in target on [0, 1]")
      ->check(CLI::IsMember({"x2", "sin", "exp", "abs"}))
      ->capture_default_str();
  approx_cmd->add_option("--target-csv", target_csv, "target samples x,value (linear interpolation)");
  approx_cmd->add_option("--coeffs", coeffs_path, "also write coefficients a_sigma per level here");
  approx_cmd->add_option("--grid-points", grid_points, "sup-norm grid size")
      ->capture_default_str()
      ->check(CLI::Range(2, 10000000));

  // check
  auto* check = app.add_subcommand("check", "run every invariant suite, JSON report");
  std::optional<double> tol;
  check->add_option("--tol", tol, "override every tolerance")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitConfig;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: InvalidArgument: cannot open " << out_path << "\n";
      return kExitConfig;
    }
  }
  std::ostream& os = out_path.empty() ? out : file;

  int level = 0;
  try {
    const SaftParams s = m.resolve();
    validate(s);

    if (*transform) {
      SampledFunction f = input.empty()
                              ? SampledFunction::sample(in_grid.grid(), builtin_signal(signal, s))
                              : [&] {
                                  std::ifstream in(input);
                                  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + input);
                                  return read_signal(in);
                                }();
      const auto result = do_inverse ? inverse(s, f, out_grid.grid()) : forward(s, f, out_grid.grid());
      write_complex(os, do_inverse ? "x" : "zeta", result, false);
    } else if (*sample) {
      const auto spec = sampling::BandlimitSpec::for_params(s, omega.value_or(s.B * kPi));
      const double T = spec.period;
      const double shift = sample_signal == "shifted" ? 0.5 : 0.0;
      auto f = [&](double x) { return chirp(s, x) * sampling::sinc(x / T - shift); };
      const auto samples = sampling::SampleSet::from_function(f, T, window);
      const UniformGrid x = sample_grid.grid();
      const auto rec = sampling::reconstruct(s, samples, spec, x);
      CsvWriter csv(os, {"x", "re", "im", "exact_re", "exact_im", "abs_err"});
      for (std::size_t j = 0; j < x.size(); ++j) {
        const cplx e = f(x[j]);
        csv.row({x[j], rec[j].real(), rec[j].imag(), e.real(), e.imag(), std::abs(rec[j] - e)});
      }
    } else if (*wavelet) {
      const bool haar = kind == "haar";
      const GridOptions g{w_min.value_or(haar ? -0.5 : -3.0), w_max.value_or(haar ? 1.5 : 3.0),
                          w_count.value_or(haar ? 801 : 1201)};
      const auto fam = wavelets::make_family(haar ? wavelets::WaveletKind::haar
                                                  : wavelets::WaveletKind::shannon,
                                             s, wavelet_window);
      const auto psi = SampledFunction::sample(g.grid(), [&](double x) {
        return haar && form == "closed" ? wavelets::haar_psi(s, x) : fam.psi(x);
      });
      write_complex(os, "x", psi, true);
    } else if (*approx_cmd) {
      const auto f = target_csv.empty() ? builtin_target(target) : table_target(target_csv);
      std::ofstream coeffs;
      if (!coeffs_path.empty()) {
        coeffs.open(coeffs_path, std::ios::binary);
        if (!coeffs) throw Error(ErrorKind::InvalidArgument, "cannot open " + coeffs_path);
      }
      std::optional<CsvWriter> coeff_csv;
      if (coeffs) coeff_csv.emplace(coeffs, std::initializer_list<std::string_view>{"basis", "J", "sigma", "a"});
      CsvWriter csv(os, {"J", "special_affine_linf", "classical_haar_linf", "ratio"});
      for (level = 1; level <= j_max; ++level) {
        double errs[2];
        int b = 0;
        for (auto basis : {approx::BasisKind::special_affine, approx::BasisKind::classical_haar}) {
          const auto r = approx::solve({level, s, basis, f});
          errs[b++] = approx::linf_error(r, f, grid_points);
          if (coeff_csv) {
            for (std::size_t i = 0; i < r.coefficients().size(); ++i) {
              coeff_csv->row({static_cast<double>(basis == approx::BasisKind::special_affine ? 0 : 1),
                              static_cast<double>(level), static_cast<double>(i + 1),
                              r.coefficients()[i]});
            }
          }
        }
        csv.row({static_cast<double>(level), errs[0], errs[1], errs[0] / errs[1]});
      }
      level = 0;
    } else if (*check) {
      const auto results = run_checks(s, tol);
      os << check_report(s, results);
      const bool all = std::all_of(results.begin(), results.end(),
                                   [](const CheckResult& r) { return r.pass; });
      if (!all) {
        for (const auto& r : results) {
          if (!r.pass) err << "fail: " << r.name << "\n";
        }
        return kExitInvariant;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (level > 0) err << " (level J=" << level << ")";
    err << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace saftwave::cli
