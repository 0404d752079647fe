#pragma once

// Concrete compact Lie algebras as exact operator spaces:
//   f4  = Der(J)            : 52 exact 27x27 matrices (nullspace oracle)
//   e6  = f4 + { i T~ }     : 78 exact 54x54 matrices, T real traceless
//   e7  = { Phi(phi, A, -tau A, nu) } : 133 exact 112x112 matrices
// plus the parametrized stabilizer families, involution-fixed subalgebras
// and exact structure invariants.

#include <string>
#include <vector>

#include "exc/freudenthal.hpp"
#include "exc/jordan.hpp"
#include "exc/linalg_exact.hpp"
#include "exc/matrix.hpp"
#include "exc/rng.hpp"

namespace exc {

// ------------------------------------------------------- basic operators

// multiplication operator T~ : X -> T o X
MatQ mult_op27(const JordanQ& t);
MatQ mult_op54(const JordanCQ& t);  // C-linear, complex T allowed
MatD mult_op54f(const JordanCF& t);

OpQ sigma_op(Basis b);  // diagonal +-1 in coordinates on J27 / JC54 / PC112
OpQ gamma_op(Basis b);
OpQ tau_op(Basis b);  // JC54 / PC112 only (real-linear)

// complexify a 27x27 real operator to its C-linear 54x54 realization
MatQ complexify_op(const MatQ& d);

// --------------------------------------------------------------------- f4

// exact nullspace of D(X o Y) = DX o Y + X o DY over all 378 basis pairs
const std::vector<MatQ>& f4_basis();  // cached; dimension 52

// the sparse derivation constraint system itself (10206 x 729)
std::vector<SparseVec> f4_constraint_rows();

// unique derivation with D Ei = 0 and D F1(x) = F1(d1 x); d1 8x8 skew
MatQ so8_lift(const MatQ& d1);

// A~1(p) = 4 [F1(p)~, E2~]; kills E1 and F1(h e4) for p in H
MatQ a1_deriv(const Quat<Rat>& p);

// --------------------------------------------------------------------- e6

struct E6Elem {
    MatQ delta;  // 27x27 element of f4 (may be empty for none)
    JordanQ T;   // real part of i T~
};
MatQ realize_e6(const E6Elem& e);     // 54x54 exact
const std::vector<MatQ>& e6_basis();  // 78 elements

// --------------------------------------------------------------------- e7

struct E7Elem {
    MatQ delta;   // f4 part of phi (empty means 0)
    JordanQ T;    // phi = delta + i T~
    JordanCQ A;   // B is fixed to -tau A
    Rat nu_im;    // nu = i nu_im
};

// realized action on P^C; y_sign is the calibrated sign of the tphi term
MatQ realize_e7(const E7Elem& e);
MatQ realize_e7_with_sign(const E7Elem& e, int y_sign);
const std::vector<MatQ>& e7_basis();  // 133 elements

// general complex Phi(phi, A, B, nu) over floats; phi and tphi are C-linear
// 54x54 real realizations
MatD realize_phi_f(const MatD& phi, const MatD& tphi, const JordanCF& A, const JordanCF& B,
                   const CF& nu, int y_sign);

// spec op phi_action: tphi derived from phi via the trace-form transpose
MatD phi_action(const MatD& phi, const JordanCF& A, const JordanCF& B, const CF& nu);

// transpose of a C-linear operator w.r.t. the C-bilinear trace form
MatD trace_form_transpose(const MatD& phi54);

// X v W = [X~, W~] + (X o W - (1/3)(X, W) E)~
MatD vee(const JordanCF& x, const JordanCF& w);

// the calibrated sign (selected once against the closed-form anchors)
int phi_y_sign();

// ------------------------------------------------------------ subalgebras

struct SubalgebraBasis {
    std::vector<MatQ> ops;
    Basis basis = Basis::Generic;
    std::string label;

    std::size_t dim() const { return ops.size(); }
};

// {x in span : T x T^{-1} = x for every T}; each involution must normalize
// the span (checked; throws std::invalid_argument otherwise)
SubalgebraBasis fixed_subalgebra(const SubalgebraBasis& basis, const std::vector<MatQ>& involutions);

SubalgebraBasis f4_algebra();  // full f4 as a SubalgebraBasis on J27
SubalgebraBasis e6_algebra();  // on JC54
SubalgebraBasis e7_algebra();  // on PC112

enum class FamilyId { L3_2, L3_6, L3_10, L3_14, L3_18, L3_20 };

const char* family_name(FamilyId id);
std::size_t family_expected_dim(FamilyId id);  // 6, 15, 21, 28, 34, 37

// basis assembled from the printed parametrization of the lemma
SubalgebraBasis family_subalgebra(FamilyId id);

// the 3-dim su(2) family Phi(2 nu E1 v E1, a E1, -tau a E1, nu)
std::vector<E7Elem> su2_family_elems();

// -------------------------------------------------------------- invariants

struct StructureInvariants {
    std::size_t dim = 0;
    std::size_t rank = 0;        // min centralizer dim over 3 random elements
    std::size_t center_dim = 0;
    std::size_t derived_dim = 0;
    Signature killing;
    bool compact = false;  // Killing negative definite modulo the center
};

// requires bracket closure; throws std::invalid_argument if violated
StructureInvariants structure_invariants(const SubalgebraBasis& b, Rng& rng);

// bracket closure check on exact operators: all pairs if the count allows,
// otherwise n_random seeded pairs; returns false on the first failure
bool bracket_closed(const SubalgebraBasis& b, std::size_t max_pairs, Rng& rng);

}  // namespace exc
