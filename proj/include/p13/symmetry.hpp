#pragma once

#include "p13/rep.hpp"

#include <string>
#include <vector>

namespace p13 {

// ============================================================================
// Discrete symmetry kinds and candidate operators
// ============================================================================

// A candidate operator has the form S = m(p) * Omega, with Omega the frame
// map (complex conjugation, momentum reflections, time reflection) encoded by
// `endo`, and m an invertible matrix over the scalar field.  S is a symmetry
// of a rep when S g = eta_g g S for all ten generators.
struct Kind {
    std::string name;
    EndoSpec endo;
    std::array<int, 10> eta{};  // indexed by Gen

    [[nodiscard]] bool antilinear() const { return endo.conj; }

    // Induced sign on the helicity Casimir; the three cyclic terms of the
    // helicity numerator must agree, which is asserted at construction.
    [[nodiscard]] int eta_lambda() const { return eta[GJ12] * eta[GP3]; }
    [[nodiscard]] int eta_epsilon() const { return eta[GP0]; }
};

// The seventeen kinds under classification: the seven base frames and the
// products that the composition law closes over.
[[nodiscard]] const std::vector<std::string>& kind_names();
[[nodiscard]] const Kind& kind_by_name(const std::string& name);
[[nodiscard]] Kind compose(const Kind& a, const Kind& b);

struct SymmetryCandidate {
    MatrixOp m;
    ScalarExpr unit_norm;   // m^dag m = unit_norm * Id
    ScalarExpr involution;  // m * endo(m) = involution * Id
};

struct CandidateCheck {
    bool holds = false;
    std::string detail;
    std::vector<DiffOp> residuals;  // the ten generator relations
    ScalarExpr unit_norm;
    ScalarExpr involution;
};

// Residuals m*endo(g) - eta_g g*m plus the scalar-ness certificates for
// m^dag m and m*endo(m).
[[nodiscard]] CandidateCheck check_candidate(const Rep& r, const Kind& k, const MatrixOp& m);

// Solves the relation system: exact ansatz-free elimination of the
// multiplicative subsystem (x-free generator rows, the x-degree >= 1 rows of
// the differential generators, and the Casimir intertwining rows), finished
// over a finite atom basis.  Every returned candidate passes the full
// derivative-aware check; emptiness is paired with casimir_obstruction by the
// callers, so a hole in the atom basis surfaces as an inconsistency instead
// of a silent verdict.
[[nodiscard]] std::vector<SymmetryCandidate> solve_candidates(const Rep& r, const Kind& k);

// Finite obstruction from the constant Casimir pair (routed through the
// rep's unitary partner when its own Casimirs are not constant): an
// invertible m with m ehat(L) = eta_L L m and m ehat(S) = eta_S S m exists
// iff an allowed-entry perfect matching exists.
struct Obstruction {
    bool exists = false;
    std::string detail;
    std::string route;  // rep the finite argument ran on
};

[[nodiscard]] Obstruction casimir_obstruction(const Rep& r, const Kind& k);

// a == f * b for some nonzero field scalar f.
[[nodiscard]] bool proportional(const MatrixOp& a, const MatrixOp& b);

}  // namespace p13
