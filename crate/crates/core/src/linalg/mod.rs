//! Dense complex matrix arithmetic and the spectral toolbox.

pub mod eigen;
pub mod matrix;
pub mod spectral;
