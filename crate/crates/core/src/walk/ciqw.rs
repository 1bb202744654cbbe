use serde::{Deserialize, Serialize};

use super::{apply_ancilla, controlled_evolve, AncillaBlock, PhaseEstimationConfig, StateVector, WalkCounters, WalkError};
use crate::spectral::Spectrum;

/// A controlled intermittent quantum walk with `m = times.len()` steps:
/// `U_0`, then for each `j` the controlled walk for `times[j-1]` followed by
/// `U_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CiqwSchedule {
    s: u32,
    blocks: Vec<AncillaBlock>,
    times: Vec<f64>,
}

impl CiqwSchedule {
    pub fn new(s: u32, blocks: Vec<AncillaBlock>, times: Vec<f64>) -> Result<Self, WalkError> {
        if blocks.len() != times.len() + 1 {
            return Err(WalkError::ScheduleShape {
                blocks: blocks.len(),
                times: times.len(),
            });
        }
        for block in &blocks {
            block.validate(s)?;
        }
        Ok(Self { s, blocks, times })
    }

    /// The phase shift `e^{iβ|π⟩⟨π|}` as a two-step walk: `U_0 = H^{⊗s}`,
    /// `t_1 = t0`, `U_1 = QFT · phase(β) · QFT^{-1}`, `t_2 = -t0`,
    /// `U_2 = H^{⊗s}`.
    pub fn phase_shift(cfg: &PhaseEstimationConfig, beta: f64) -> Result<Self, WalkError> {
        let s = cfg.s;
        let middle = AncillaBlock::Qft
            .matrix(s)?
            .matmul(&AncillaBlock::ZeroControlledPhase { beta }.matrix(s)?)
            .matmul(&AncillaBlock::InverseQft.matrix(s)?);
        Self::new(
            s,
            vec![
                AncillaBlock::HadamardAll,
                AncillaBlock::Explicit { matrix: middle },
                AncillaBlock::HadamardAll,
            ],
            vec![cfg.t0, -cfg.t0],
        )
    }

    pub fn ancillas(&self) -> u32 {
        self.s
    }

    pub fn steps(&self) -> usize {
        self.times.len()
    }

    pub fn blocks(&self) -> &[AncillaBlock] {
        &self.blocks
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }
}

/// Runs `schedule` on `initial`, right-to-left operator order: `U_0` first.
pub fn run_ciqw(
    schedule: &CiqwSchedule,
    sp: &Spectrum,
    initial: &StateVector,
    counters: &mut WalkCounters,
) -> Result<StateVector, WalkError> {
    let (s, _) = initial.joint_dims()?;
    if s != schedule.s {
        return Err(WalkError::DimensionMismatch {
            expected: schedule.s as usize,
            found: s as usize,
        });
    }
    let mut state = initial.clone();
    apply_ancilla(&mut state, &schedule.blocks[0])?;
    for (t, block) in schedule.times.iter().zip(&schedule.blocks[1..]) {
        controlled_evolve(&mut state, sp, *t, counters)?;
        apply_ancilla(&mut state, block)?;
    }
    Ok(state)
}
