use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::complex::ComplexError;
use crate::homology::HomologyError;
use crate::io::IoError;
use crate::lefschetz::LefschetzError;
use crate::monomial::MonomialError;
use crate::squeeze::SqueezeError;
use crate::verify::VerifyError;

/// Any error raised by the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Squeeze(#[from] SqueezeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
