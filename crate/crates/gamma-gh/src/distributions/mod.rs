//! Distribution-level primitives of the gamma-GH family: the GIG normalizing
//! integral, mixture densities, characteristic function, moment transform and
//! exact samplers.

mod charfn;
mod gig;
mod params;
mod sample;

pub use charfn::{charfn_gamma_gh, moment_transform_gamma};
pub use gig::{gig_norm_constant, gig_norm_constant_ln, pdf_gamma_gh, pdf_gig_gh, pdf_ig_gh};
pub use params::{GammaGhParams, GigParams, IgParams};
pub use sample::{sample_gamma, sample_gamma_gh};
