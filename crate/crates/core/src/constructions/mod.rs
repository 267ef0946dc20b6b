//! The two construction pipelines and their auxiliary mapping classes.

mod braid_words;
pub mod psi;
mod first_family;
mod second_family;

pub use braid_words::{apply as braid_apply, rewrite as braid_rewrite, BraidOp};
pub use first_family::{build_first_family, chain_factorization, rearrange_chain, psi_catalog};
pub use second_family::{build_second_family, phi_n, phi_n_twists};

use crate::factorization::Factorization;

/// A named stage of a pipeline.
#[derive(Clone, Debug)]
pub struct Stage {
    pub name: String,
    pub factorization: Factorization,
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub name: String,
    pub stages: Vec<Stage>,
}

impl PipelineReport {
    pub fn final_factorization(&self) -> &Factorization {
        &self.stages.last().expect("pipelines have stages").factorization
    }

    pub fn stage(&self, name: &str) -> Option<&Factorization> {
        self.stages.iter().find(|s| s.name == name).map(|s| &s.factorization)
    }
}
