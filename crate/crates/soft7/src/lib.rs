//! Exact computational algebra for the octonions, the canonical left/right
//! multiplication operators, the point-dependent structure functions of the
//! seven sphere, and the Lie-algebra structures built from them — together
//! with a verification suite that machine-checks every identity the crate
//! relies on.

pub mod appendix;
pub mod lie;
pub mod matrix;
pub mod octonion;
pub mod operators;
pub mod scalar;
pub mod torsion;
pub mod verify;
