#pragma once

#include "p13/rep.hpp"
#include "p13/unitary.hpp"

#include <array>

namespace p13 {

// ============================================================================
// Four-component machinery: gamma bases, projectors, diagonalizers
// ============================================================================

// Metric (+,-,-,-): {g_mu, g_nu} = 2 eta_munu.  g4 is the Hermitian product
// i g0 g1 g2 g3; it squares to one and anticommutes with every g_mu.
struct GammaBasis {
    char name = 'b';
    std::array<MatrixOp, 4> g;
    MatrixOp g4;
};

[[nodiscard]] const GammaBasis& gamma_basis(char name);

// Throws NotClosed if the anticommutation table, Hermiticity pattern or the
// g4 relations fail.
void certify_clifford(const GammaBasis& b);

// H = g0 g.p; J_kl = M_kl + (i/4)[g_k, g_l]; J_0k = t0 p_k - (1/2){x_k, H}.
[[nodiscard]] std::array<DiffOp, 10> dirac_gens(char basis);

// E + g.p over sqrt(2 E^2); forward conjugation sends H to g0 E.
[[nodiscard]] ScaledUnitary kernel_u(char basis);

// 1 + g4 g0 over sqrt(2); forward conjugation block-diagonalizes H into the
// two-component halves +sigma.p and -sigma.p.
[[nodiscard]] ScaledUnitary kernel_weyl(char basis);

// Projector family: kind 1 uses g4, kind 2 uses g4 H / E, kind 3 uses H / E.
// sign is +1 or -1.
[[nodiscard]] MatrixOp dirac_projector(char basis, int kind, int sign);

}  // namespace p13
