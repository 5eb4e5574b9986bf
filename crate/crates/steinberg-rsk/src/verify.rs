//! The full invariant suite: every named check below certifies one family
//! of properties of the correspondence against the finite-field oracle or
//! by exhaustive combinatorics. Shared by the `verify` subcommand and the
//! acceptance test target.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::rsk::VariantRsk;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Bound on p for exhaustive sweeps (each check also caps itself).
    pub pmax: usize,
    /// Bound on q for exhaustive sweeps.
    pub qmax: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            pmax: 3,
            qmax: 3,
            seed: 0,
            trials: crate::oracle::DEFAULT_TRIALS,
        }
    }
}

impl VerifyConfig {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt))
    }

    fn rsk(&self) -> Result<VariantRsk> {
        Ok(VariantRsk::new()?.with_trials(self.trials))
    }
}

mod checks;
pub use checks::*;

type CheckFn = fn(&VerifyConfig) -> Result<String>;

/// Runs every check in order; results carry one line of detail each.
pub fn run_all(cfg: &VerifyConfig) -> Vec<Check> {
    let list: Vec<(&str, CheckFn)> = vec![
        ("census-identity", census_identity),
        ("round-trip", round_trip),
        ("oracle-agreement", oracle_agreement),
        ("admissibility-equivalences", admissibility_equivalences),
        ("module-lemmas", module_lemmas),
        ("duality", duality),
        ("bordered-schubert-consistency", bordered_schubert_consistency),
        ("tableau-engine", tableau_engine),
        ("poset-lemmas", poset_lemmas),
    ];
    list.into_iter()
        .map(|(name, f)| match f(cfg) {
            Ok(detail) => Check {
                name: name.to_string(),
                ok: true,
                detail,
            },
            Err(e) => Check {
                name: name.to_string(),
                ok: false,
                detail: e.to_string(),
            },
        })
        .collect()
}
