#pragma once

#include "hlts/deformation.hpp"
#include "hlts/hom_lie.hpp"

namespace hlts {

struct ActionRecord {
  std::string algebra, module;
  TensorK theta;
  bool operator==(const ActionRecord&) const = default;
};

struct LieActionRecord {
  std::string algebra, module;
  TensorK rho;
  bool operator==(const LieActionRecord&) const = default;
};

/// Linear map between named algebras; action and kappa are present for
/// weighted-operator records and absent for plain morphism records.
struct MapRecord {
  std::string from, to;
  std::optional<std::string> action;
  std::optional<Rat> kappa;
  QMat matrix;
  bool operator==(const MapRecord&) const = default;
};

struct DeformationRecord {
  std::string map;
  std::vector<QMat> terms;
  bool operator==(const DeformationRecord&) const = default;
};

struct Workspace {
  std::map<std::string, HomLts> algebras;
  std::map<std::string, HomLieAlgebra> lie_algebras;
  std::map<std::string, ActionRecord> actions;
  std::map<std::string, LieActionRecord> lie_actions;
  std::map<std::string, MapRecord> maps;
  std::map<std::string, HomPostLts> post_lts;
  std::map<std::string, HomPostLieAlgebra> post_lie;
  std::map<std::string, DeformationRecord> deformations;

  bool operator==(const Workspace&) const = default;
};

/// Parses the JSON workspace document, resolving and dimension-checking
/// every cross-reference; errors name the offending JSON path.
Workspace parse_workspace(const std::string& text);

/// Canonical printing; parse(print(ws)) == ws.
std::string print_workspace(const Workspace& ws);

Action resolve_action(const Workspace& ws, const std::string& name);
LieAction resolve_lie_action(const Workspace& ws, const std::string& name);
WeightedOOperator resolve_map(const Workspace& ws, const std::string& name);
TruncatedDeformation resolve_deformation(const Workspace& ws, const std::string& name);

/// Fills bracket entries forced by skew symmetry, then cyclic-orbit
/// entries derivable when exactly one member of an orbit is absent.
/// Applies to triple brackets, Lie brackets and post floor brackets;
/// never overwrites entries already present.
Workspace lint_complete_skew(const Workspace& ws);

}  // namespace hlts
