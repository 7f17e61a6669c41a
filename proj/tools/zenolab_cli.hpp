#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "zenolab/model.hpp"
#include "zenolab/survival.hpp"

namespace zenolab::cli {

// exit codes: 0 success, 2 argument error, 3 numerical non-convergence,
// 4 output I/O failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerics = 3;
inline constexpr int kExitIo = 4;

enum class Format { table, csv, json };

// Parsed run configuration shared by every subcommand. z = 0 selects the
// synthetic mode, which requires chi and a; hydrogen mode rejects them.
struct RunConfig {
  int z = 1;
  double alpha_override = 0.0;      // 0 = CODATA default
  double chi_override = 0.0;        // synthetic only
  double a_override = 0.0;          // synthetic only
  double cutoff_override = 0.0;     // synthetic only; defaults to 1 rad/s
  double quad_tol = 1e-10;
  double pole_tol = 1e-13;
  bool laguerre = false;
  std::string output;               // empty = stdout
  Format format = Format::table;
  bool format_given = false;

  AtomParams make_params() const;
  CutQuadratureSpec cut_spec() const;
};

// Survival samples in the fixed column layout
//   t_s,tau,p,p_exponential,p_powerlaw,p_interference,y_re,y_im,h,eta
// (csv) or as {"params": {...}, "samples": [...]} with the same field names
// (json). All floating point is written with 17 significant digits.
void emit(std::ostream& os, const AtomParams& params,
          std::span<const SurvivalSample> samples, Format format);

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // without the program name

}  // namespace zenolab::cli
