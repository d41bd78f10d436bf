// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SGINV_PROBLEM_HPP
#define SGINV_PROBLEM_HPP

#include <optional>
#include <string_view>

namespace sginv {

/// Which subset of the Moore-Penrose properties the solver targets.
///   P13  -- generalized inverse + ah-symmetric (universal least-squares)
///   P123 -- additionally reflexive (minimum-rank least-squares)
///   P134 -- ah- and ha-symmetric (least-squares + minimum 2-norm)
enum class ProblemKind { P13, P123, P134 };

constexpr std::string_view to_string(ProblemKind p) {
  switch (p) {
    case ProblemKind::P13: return "p13";
    case ProblemKind::P123: return "p123";
    case ProblemKind::P134: return "p134";
  }
  return "?";
}

std::optional<ProblemKind> problem_from_string(std::string_view name);

}  // namespace sginv

#endif  // SGINV_PROBLEM_HPP
