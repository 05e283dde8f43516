//! Explicit matrix models of `𝔤 ⊂ 𝔰𝔬(n)` as stabilizers of defining tensors.

mod isotropy;
mod stabilizer;
mod tensor;
mod theta;

pub use stabilizer::{gram, stabilizer_algebra, OrthoBasis, StabilizerModel};
pub use tensor::{
    cayley_form, defining_tensor, g2_form, kaehler_form, so3_cubic, DefiningTensor, SymCubic,
    TensorKind, TENSOR_NAMES,
};
pub use theta::{
    casimir, check_gamma, e8_component, eigenspace, full_contraction, gamma_action, tensor_map_rank,
    solve_torsion, solve_with, theta_apply, theta_maps, theta_summary, GammaElement, ThetaMaps,
    ThetaSummary, TorsionSolution,
};
pub use isotropy::{
    heisenberg_example, heisenberg_lie_formula, heisenberg_torsion, in_span, invariance_constraints,
    invariant_subspace, is_abelian, isotropy_algebra, isotropy_within, lie_derivative,
    so_invariance_constraints, solvable_example, solvable_reference_basis, solvable_torsion,
    torsion_square, HeisenbergReport, SolvableReport, HEISENBERG_RICCI, HEISENBERG_SQUARE,
};
