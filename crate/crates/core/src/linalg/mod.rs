//! Exact linear algebra over a coefficient domain.

mod echelon;
mod matrix;
mod tensor;
mod vector;

pub(crate) use echelon::{echelonize, kernel_of_rows, solve_rows};
pub use echelon::{kernel_basis, membership, rank, solve_linear, Solution, Subspace};
pub use matrix::Matrix;
pub(crate) use tensor::group_by_left;
pub use tensor::{
    contract_left, contract_right, flip, outer, tensor_contract, tensor_multiply, CoproductTensor, StructureTensor,
};
pub use vector::{SparseAccumulator, SparseVec, Vector};
