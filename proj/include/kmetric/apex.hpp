#pragma once

#include "kmetric/chain.hpp"
#include "kmetric/coboundary.hpp"
#include "kmetric/kmetric.hpp"

namespace kmetric {

/// (k+1)-metric on n+1 vertices; the apex is always the last vertex.
struct ApexExtensionResult {
  KMetric extended;
  int apex_index = 0;
};

/// d'(t) = d(t minus apex) when t contains the apex, 0 otherwise.
ApexExtensionResult apex_extend(const KMetric& d);

/// Projection P_h: h-chains on n+1 vertices (apex = n) to (h-1)-chains on n vertices.
/// Apex-free simplices map to zero; (x_1..x_h, a) maps to (x_1..x_h).
LinearChainOperator project_operator(int n, int h);

/// Lift L_{h-1} = P_h^T: (h-1)-chains on n vertices to h-chains on n+1 vertices.
LinearChainOperator lift_operator(int n, int h);

/// F' = L_{k-2} F, a chain matrix of arity k+1 on n+1 vertices inducing the apex extension.
ChainMatrix apex_extend_chain_matrix(const ChainMatrix& F);

}  // namespace kmetric
