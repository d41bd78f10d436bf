// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"
#include "sginv/lp.hpp"

namespace sginv {

std::string_view to_string(FormulationId id) {
  switch (id) {
    case FormulationId::P13_MP: return "p13_mp";
    case FormulationId::P13_RANGE: return "p13_range";
    case FormulationId::P13_PLS: return "p13_pls";
    case FormulationId::P13_CAL: return "p13_cal";
    case FormulationId::P123_LIN: return "p123_lin";
    case FormulationId::P123_RANGE_LIN: return "p123_range_lin";
    case FormulationId::P123_PLS_LIN: return "p123_pls_lin";
    case FormulationId::P123_PLSR: return "p123_plsr";
    case FormulationId::P123_CAL: return "p123_cal";
    case FormulationId::P134_MP: return "p134_mp";
    case FormulationId::P134_PMN3: return "p134_pmn3";
    case FormulationId::P134_PLSPMN: return "p134_plspmn";
    case FormulationId::P134_DOUBLE: return "p134_double";
    case FormulationId::P134_PMX: return "p134_pmx";
    case FormulationId::P134_CAL: return "p134_cal";
  }
  return "?";
}

std::optional<FormulationId> formulation_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(FormulationId::P134_CAL); ++i) {
    const auto id = static_cast<FormulationId>(i);
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

ProblemKind family_of(FormulationId id) {
  switch (id) {
    case FormulationId::P13_MP:
    case FormulationId::P13_RANGE:
    case FormulationId::P13_PLS:
    case FormulationId::P13_CAL:
      return ProblemKind::P13;
    case FormulationId::P123_LIN:
    case FormulationId::P123_RANGE_LIN:
    case FormulationId::P123_PLS_LIN:
    case FormulationId::P123_PLSR:
    case FormulationId::P123_CAL:
      return ProblemKind::P123;
    default:
      return ProblemKind::P134;
  }
}

bool is_structural(FormulationId id) {
  return id == FormulationId::P13_CAL || id == FormulationId::P123_CAL ||
         id == FormulationId::P134_CAL;
}

std::vector<FormulationId> formulations_for(ProblemKind family) {
  switch (family) {
    case ProblemKind::P13:
      return {FormulationId::P13_MP, FormulationId::P13_RANGE,
              FormulationId::P13_PLS, FormulationId::P13_CAL};
    case ProblemKind::P123:
      return {FormulationId::P123_LIN, FormulationId::P123_RANGE_LIN,
              FormulationId::P123_PLS_LIN, FormulationId::P123_PLSR,
              FormulationId::P123_CAL};
    case ProblemKind::P134:
      return {FormulationId::P134_MP, FormulationId::P134_PMN3,
              FormulationId::P134_PLSPMN, FormulationId::P134_DOUBLE,
              FormulationId::P134_PMX, FormulationId::P134_CAL};
  }
  return {};
}

namespace {

constexpr double kDropTol = 1e-12;  // orthogonality dust in U, V products

// One linear term of a matrix equation in H: scale * L * H * R, or with
// transpose_h, scale * L * H^T * R.
struct Term {
  const Eigen::MatrixXd* left;
  const Eigen::MatrixXd* right;
  bool transpose_h = false;
  double scale = 1.0;
};

class HSplitBuilder {
 public:
  HSplitBuilder(std::size_t n, std::size_t m) : n_(n), m_(m) {}

  // Adds the p x q equation block sum_t(term_t) == rhs, rows in column-major
  // order of the output block.
  void add_equation(std::span<const Term> terms, const Eigen::MatrixXd& rhs) {
    const auto p = static_cast<std::size_t>(rhs.rows());
    const auto q = static_cast<std::size_t>(rhs.cols());
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t i = 0; i < p; ++i) {
        std::map<std::size_t, double> acc;
        for (const Term& t : terms) accumulate(t, i, j, acc);
        push_row(acc, rhs(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j)));
      }
    }
  }

  // (E H)_{ij} = (E H)_{ji} for i < j, with E m x n; used for P3 (E = A) on
  // A H and, via add_symmetry_of_ha, for P4 on H A.
  void add_symmetry_of_ah(const Eigen::MatrixXd& a) {
    const auto m = static_cast<std::size_t>(a.rows());
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        std::map<std::size_t, double> acc;
        for (std::size_t k = 0; k < n_; ++k) {
          add(acc, h_index(k, j), a(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(k)));
          add(acc, h_index(k, i), -a(static_cast<Eigen::Index>(j),
                                     static_cast<Eigen::Index>(k)));
        }
        push_row(acc, 0.0);
      }
    }
  }

  // (H A)_{ij} = (H A)_{ji} for i < j.
  void add_symmetry_of_ha(const Eigen::MatrixXd& a) {
    const auto n = static_cast<std::size_t>(a.cols());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::map<std::size_t, double> acc;
        for (std::size_t k = 0; k < m_; ++k) {
          add(acc, h_index(i, k), a(static_cast<Eigen::Index>(k),
                                    static_cast<Eigen::Index>(j)));
          add(acc, h_index(j, k), -a(static_cast<Eigen::Index>(k),
                                     static_cast<Eigen::Index>(i)));
        }
        push_row(acc, 0.0);
      }
    }
  }

  LpModel finish(std::string name) {
    LpModel model;
    model.name = std::move(name);
    const std::size_t nm = n_ * m_;
    model.num_vars = 2 * nm;
    model.objective.assign(model.num_vars, 1.0);
    model.var_free.assign(model.num_vars, false);
    model.var_names.reserve(model.num_vars);
    for (std::size_t j = 0; j < m_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        model.var_names.push_back("hp_" + std::to_string(i + 1) + "_" +
                                  std::to_string(j + 1));
      }
    }
    for (std::size_t j = 0; j < m_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        model.var_names.push_back("hm_" + std::to_string(i + 1) + "_" +
                                  std::to_string(j + 1));
      }
    }
    model.eq_rows = std::move(rows_);
    model.var_map = "H(" + std::to_string(n_) + "x" + std::to_string(m_) +
                    ") = HP - HM, entries column-major";
    LpModel::Recovery rec;
    rec.layout = LpModel::Recovery::Layout::HSplit;
    rec.h_rows = n_;
    rec.h_cols = m_;
    model.recovery = std::move(rec);
    return model;
  }

 private:
  std::size_t h_index(std::size_t row, std::size_t col) const {
    return col * n_ + row;  // column-major vec(H)
  }

  static void add(std::map<std::size_t, double>& acc, std::size_t col,
                  double v) {
    acc[col] += v;
  }

  void accumulate(const Term& t, std::size_t i, std::size_t j,
                  std::map<std::size_t, double>& acc) const {
    const Eigen::MatrixXd& l = *t.left;
    const Eigen::MatrixXd& r = *t.right;
    if (!t.transpose_h) {
      // (L H R)_{ij} picks H_{k,l} with weight L_{ik} R_{lj}
      for (std::size_t k = 0; k < n_; ++k) {
        const double lv = l(static_cast<Eigen::Index>(i),
                            static_cast<Eigen::Index>(k));
        if (lv == 0.0) continue;
        for (std::size_t col = 0; col < m_; ++col) {
          const double rv = r(static_cast<Eigen::Index>(col),
                              static_cast<Eigen::Index>(j));
          if (rv == 0.0) continue;
          add(acc, h_index(k, col), t.scale * lv * rv);
        }
      }
    } else {
      // (L H^T R)_{ij} picks H_{l,k} with weight L_{ik} R_{lj}
      for (std::size_t k = 0; k < m_; ++k) {
        const double lv = l(static_cast<Eigen::Index>(i),
                            static_cast<Eigen::Index>(k));
        if (lv == 0.0) continue;
        for (std::size_t row = 0; row < n_; ++row) {
          const double rv = r(static_cast<Eigen::Index>(row),
                              static_cast<Eigen::Index>(j));
          if (rv == 0.0) continue;
          add(acc, h_index(row, k), t.scale * lv * rv);
        }
      }
    }
  }

  void push_row(const std::map<std::size_t, double>& acc, double rhs) {
    LpRow row;
    const std::size_t nm = n_ * m_;
    for (const auto& [col, v] : acc) {
      if (std::abs(v) <= kDropTol) continue;
      row.coeffs.push_back({col, v});
    }
    if (row.coeffs.empty()) {
      // e.g. the P2 linearization when A has full row rank
      if (std::abs(rhs) > 1e-9) {
        throw std::logic_error("build_lp: inconsistent constant row");
      }
      return;
    }
    // mirror each H coefficient onto the negative part
    const std::size_t h_terms = row.coeffs.size();
    row.coeffs.reserve(2 * h_terms);
    for (std::size_t t = 0; t < h_terms; ++t) {
      row.coeffs.push_back({row.coeffs[t].col + nm, -row.coeffs[t].value});
    }
    row.rhs = rhs;
    rows_.push_back(std::move(row));
  }

  std::size_t n_, m_;
  std::vector<LpRow> rows_;
};

LpModel build_structural(const Svd& svd, FormulationId id) {
  const std::size_t n = svd.n, m = svd.m, r = svd.r;
  const std::size_t nm = n * m;
  const bool with_w = id != FormulationId::P123_CAL;
  const bool with_z = id != FormulationId::P134_CAL;
  const std::size_t w_rows = n - r, w_cols = m - r;
  const std::size_t z_rows = n - r, z_cols = r;
  const std::size_t w_count = with_w ? w_rows * w_cols : 0;
  const std::size_t z_count = with_z ? z_rows * z_cols : 0;

  LpModel model;
  model.name = std::string(to_string(id));
  model.num_vars = nm + w_count + z_count;
  model.objective.assign(model.num_vars, 0.0);
  std::fill_n(model.objective.begin(), nm, 1.0);
  model.var_free.assign(model.num_vars, true);
  std::fill_n(model.var_free.begin(), nm, false);

  model.var_names.reserve(model.num_vars);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      model.var_names.push_back("hp_" + std::to_string(i + 1) + "_" +
                                std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < w_cols && with_w; ++j) {
    for (std::size_t i = 0; i < w_rows; ++i) {
      model.var_names.push_back("w_" + std::to_string(i + 1) + "_" +
                                std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < z_cols && with_z; ++j) {
    for (std::size_t i = 0; i < z_rows; ++i) {
      model.var_names.push_back("z_" + std::to_string(i + 1) + "_" +
                                std::to_string(j + 1));
    }
  }

  const Matrix pinv = pseudoinverse(svd);
  const std::size_t w_offset = nm;
  const std::size_t z_offset = nm + w_count;

  // |H| is modeled by H+ >= +-(F(W,Z) + A+): two ">=" rows per entry of H.
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (int sign : {+1, -1}) {
        LpRow row;
        row.coeffs.push_back({j * n + i, 1.0});
        const double s = static_cast<double>(-sign);
        if (with_w) {
          for (std::size_t l = 0; l < w_cols; ++l) {
            const double uv = svd.u2(j, l);
            if (uv == 0.0) continue;
            for (std::size_t k = 0; k < w_rows; ++k) {
              const double c = s * svd.v2(i, k) * uv;
              if (std::abs(c) > kDropTol) {
                row.coeffs.push_back({w_offset + l * w_rows + k, c});
              }
            }
          }
        }
        if (with_z) {
          for (std::size_t l = 0; l < z_cols; ++l) {
            const double uv = svd.u1(j, l);
            if (uv == 0.0) continue;
            for (std::size_t k = 0; k < z_rows; ++k) {
              const double c = s * svd.v2(i, k) * uv;
              if (std::abs(c) > kDropTol) {
                row.coeffs.push_back({z_offset + l * z_rows + k, c});
              }
            }
          }
        }
        std::sort(row.coeffs.begin(), row.coeffs.end(),
                  [](const LpCoeff& a, const LpCoeff& b) {
                    return a.col < b.col;
                  });
        row.rhs = sign * pinv(i, j);
        model.ineq_rows.push_back(std::move(row));
      }
    }
  }

  model.var_map = "H = pinv(A)" + std::string(with_w ? " + V2*W*U2'" : "") +
                  (with_z ? " + V2*Z*U1'" : "") +
                  "; H+ bounds |H| entrywise, column-major";

  LpModel::Recovery rec;
  rec.layout = LpModel::Recovery::Layout::Structural;
  rec.h_rows = n;
  rec.h_cols = m;
  rec.recon_const = pinv;
  rec.v2 = svd.v2;
  rec.u1 = svd.u1;
  rec.u2 = svd.u2;
  rec.w_offset = w_offset;
  rec.w_rows = with_w ? w_rows : 0;
  rec.w_cols = with_w ? w_cols : 0;
  rec.z_offset = z_offset;
  rec.z_rows = with_z ? z_rows : 0;
  rec.z_cols = with_z ? z_cols : 0;
  model.recovery = std::move(rec);
  return model;
}

}  // namespace

LpModel build_lp(const Svd& svd, const Matrix& a, FormulationId id) {
  if (svd.m != a.rows() || svd.n != a.cols()) {
    throw std::invalid_argument("build_lp: SVD does not match A");
  }
  if (is_structural(id)) return build_structural(svd, id);

  const auto ae = detail::as_eigen(a);
  const Eigen::MatrixXd at = ae.transpose();
  const Eigen::MatrixXd ata = at * ae;                       // A^T A
  const Eigen::MatrixXd aat = ae * at;                       // A A^T
  const Eigen::MatrixXd pinv = detail::as_eigen(pseudoinverse(svd));
  const Eigen::MatrixXd proj_row = ae * pinv;                // A A+
  const Eigen::MatrixXd proj_col = pinv * ae;                // A+ A
  const Eigen::MatrixXd id_m =
      Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(svd.m),
                                static_cast<Eigen::Index>(svd.m));
  const Eigen::MatrixXd id_n =
      Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(svd.n),
                                static_cast<Eigen::Index>(svd.n));

  HSplitBuilder b(svd.n, svd.m);
  const auto eq1 = [&](const Eigen::MatrixXd& l, const Eigen::MatrixXd& r,
                       bool tr, const Eigen::MatrixXd& rhs) {
    const Term t{&l, &r, tr, 1.0};
    b.add_equation(std::span<const Term>(&t, 1), rhs);
  };

  switch (id) {
    case FormulationId::P13_MP:
      eq1(ae, ae, false, ae);  // A H A = A
      b.add_symmetry_of_ah(ae);
      break;
    case FormulationId::P13_RANGE:
      eq1(ae, id_m, false, proj_row);  // A H = A A+
      break;
    case FormulationId::P13_PLS:
      eq1(ata, id_m, false, at);  // A^T A H = A^T
      break;
    case FormulationId::P123_LIN: {
      eq1(ae, ae, false, ae);
      const Term lin[] = {{&id_n, &proj_row, false, 1.0},
                          {&id_n, &id_m, false, -1.0}};
      b.add_equation(lin, Eigen::MatrixXd::Zero(ae.cols(), ae.rows()));
      b.add_symmetry_of_ah(ae);
      break;
    }
    case FormulationId::P123_RANGE_LIN: {
      eq1(ae, id_m, false, proj_row);
      const Term lin[] = {{&id_n, &proj_row, false, 1.0},
                          {&id_n, &id_m, false, -1.0}};
      b.add_equation(lin, Eigen::MatrixXd::Zero(ae.cols(), ae.rows()));
      break;
    }
    case FormulationId::P123_PLS_LIN: {
      eq1(ata, id_m, false, at);
      const Term lin[] = {{&id_n, &proj_row, false, 1.0},
                          {&id_n, &id_m, false, -1.0}};
      b.add_equation(lin, Eigen::MatrixXd::Zero(ae.cols(), ae.rows()));
      break;
    }
    case FormulationId::P123_PLSR: {
      // A^T H^T A^T + H A A+ - H = A^T
      const Term terms[] = {{&at, &at, true, 1.0},
                            {&id_n, &proj_row, false, 1.0},
                            {&id_n, &id_m, false, -1.0}};
      b.add_equation(terms, at);
      break;
    }
    case FormulationId::P134_MP:
      eq1(ae, ae, false, ae);
      b.add_symmetry_of_ah(ae);
      b.add_symmetry_of_ha(ae);
      break;
    case FormulationId::P134_PMN3:
      eq1(aat, id_n, true, ae);  // A A^T H^T = A
      b.add_symmetry_of_ah(ae);
      break;
    case FormulationId::P134_PLSPMN:
      eq1(ata, id_m, false, at);
      eq1(aat, id_n, true, ae);
      break;
    case FormulationId::P134_DOUBLE:
      eq1(ae, id_m, false, proj_row);  // A H = A A+
      eq1(id_n, ae, false, proj_col);  // H A = A+ A
      break;
    case FormulationId::P134_PMX: {
      // A A^T H^T + H^T A^T A = 2 A
      const Term terms[] = {{&aat, &id_n, true, 1.0},
                            {&id_m, &ata, true, 1.0}};
      b.add_equation(terms, 2.0 * ae);
      break;
    }
    default:
      throw std::invalid_argument("build_lp: unsupported formulation");
  }
  return b.finish(std::string(to_string(id)));
}

Matrix recover_h(const LpModel& model, std::span<const double> solution) {
  if (!model.recovery) {
    throw std::invalid_argument(
        "recover_h: model carries no recovery metadata (e.g. it was read "
        "back from a file)");
  }
  if (solution.size() != model.num_vars) {
    throw std::invalid_argument("recover_h: solution length mismatch");
  }
  const auto& rec = *model.recovery;
  const std::size_t n = rec.h_rows, m = rec.h_cols;
  if (rec.layout == LpModel::Recovery::Layout::HSplit) {
    Matrix h(n, m);
    const std::size_t nm = n * m;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        h(i, j) = solution[j * n + i] - solution[nm + j * n + i];
      }
    }
    return h;
  }
  Matrix h = rec.recon_const;
  auto he = detail::as_eigen(h);
  if (rec.w_rows > 0 && rec.w_cols > 0) {
    Eigen::Map<const Eigen::MatrixXd> w(solution.data() + rec.w_offset,
                                        static_cast<Eigen::Index>(rec.w_rows),
                                        static_cast<Eigen::Index>(rec.w_cols));
    he.noalias() += detail::as_eigen(rec.v2) * w *
                    detail::as_eigen(rec.u2).transpose();
  }
  if (rec.z_rows > 0 && rec.z_cols > 0) {
    Eigen::Map<const Eigen::MatrixXd> z(solution.data() + rec.z_offset,
                                        static_cast<Eigen::Index>(rec.z_rows),
                                        static_cast<Eigen::Index>(rec.z_cols));
    he.noalias() += detail::as_eigen(rec.v2) * z *
                    detail::as_eigen(rec.u1).transpose();
  }
  return h;
}

bool same_lp(const LpModel& a, const LpModel& b) {
  return a.name == b.name && a.num_vars == b.num_vars &&
         a.objective == b.objective && a.var_names == b.var_names &&
         a.var_free == b.var_free && a.eq_rows == b.eq_rows &&
         a.ineq_rows == b.ineq_rows;
}

}  // namespace sginv
