// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_LP_HPP
#define SGINV_LP_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sginv/matrix.hpp"
#include "sginv/problem.hpp"
#include "sginv/svd.hpp"

namespace sginv {

/// The fifteen convex linear-optimization formulations. Suffixes:
///   MP        -- the defining Moore-Penrose property subset
///   RANGE     -- range-projector equations (AH = AA+ and/or HA = A+A)
///   PLS/PMN   -- least-squares / minimum-norm optimality systems
///   PLSR/PMX  -- single combined systems for P123 / P134
///   LIN       -- P2 replaced by its linearization H AA+ = H
///   CAL       -- structural form over the free Gamma blocks
enum class FormulationId {
  P13_MP,
  P13_RANGE,
  P13_PLS,
  P13_CAL,
  P123_LIN,
  P123_RANGE_LIN,
  P123_PLS_LIN,
  P123_PLSR,
  P123_CAL,
  P134_MP,
  P134_PMN3,
  P134_PLSPMN,
  P134_DOUBLE,
  P134_PMX,
  P134_CAL,
};

std::string_view to_string(FormulationId id);
std::optional<FormulationId> formulation_from_string(std::string_view name);
ProblemKind family_of(FormulationId id);
bool is_structural(FormulationId id);
std::vector<FormulationId> formulations_for(ProblemKind family);

struct LpCoeff {
  std::size_t col = 0;
  double value = 0.0;
  bool operator==(const LpCoeff&) const = default;
};

struct LpRow {
  std::vector<LpCoeff> coeffs;  // sorted by column
  double rhs = 0.0;
  bool operator==(const LpRow&) const = default;
};

/// A linear program in the two shapes used here. H-split models have
/// variables (H+, H-) >= 0 and equality rows only; structural models have
/// variables (H+, W, Z) with H+ >= 0, W/Z free, and ">=" rows only.
struct LpModel {
  std::string name;
  std::string var_map;  // human-readable mapping of variables back to H
  std::size_t num_vars = 0;
  std::vector<double> objective;      // minimized; length num_vars
  std::vector<std::string> var_names; // length num_vars
  std::vector<bool> var_free;         // true: unbounded; false: >= 0
  std::vector<LpRow> eq_rows;         // a.x == rhs
  std::vector<LpRow> ineq_rows;       // a.x >= rhs

  /// Solution-to-H mapping; produced by build_lp, not serialized to files.
  struct Recovery {
    enum class Layout { HSplit, Structural };
    Layout layout = Layout::HSplit;
    std::size_t h_rows = 0, h_cols = 0;  // n, m
    Matrix recon_const;                  // A+ (structural only)
    Matrix v2, u1, u2;                   // structural basis blocks
    std::size_t w_offset = 0, w_rows = 0, w_cols = 0;
    std::size_t z_offset = 0, z_rows = 0, z_cols = 0;
  };
  std::optional<Recovery> recovery;
};

/// Assembles the LP for the given formulation. The optimum of the model
/// equals min ||H||_1 over the formulation's feasible set. Coefficients of
/// magnitude below 1e-12 are dropped.
LpModel build_lp(const Svd& svd, const Matrix& a, FormulationId id);

/// Maps an LP solution vector back to the n x m matrix H.
Matrix recover_h(const LpModel& model, std::span<const double> solution);

/// Writes the model as an LP-format text file (objective, constraint and
/// bounds sections) readable by mainstream solvers. Throws on an empty
/// objective or I/O failure.
void write_lp_file(const LpModel& model, const std::filesystem::path& path);

/// Parses a file written by write_lp_file (round-trips exactly); recovery
/// metadata is not part of the file format.
LpModel read_lp_file(const std::filesystem::path& path);

/// Equality of the serialized surface (everything except recovery metadata).
bool same_lp(const LpModel& a, const LpModel& b);

struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  double objective = 0.0;
  std::vector<double> solution;  // length model.num_vars
  std::size_t iterations = 0;
};

/// Dense two-phase primal simplex with Bland's (lowest-index) anti-cycling
/// rule; returns an optimal basic solution. Intended as a correctness oracle
/// for small models, not a production solver.
SimplexResult reference_simplex(const LpModel& model);

}  // namespace sginv

#endif  // SGINV_LP_HPP
