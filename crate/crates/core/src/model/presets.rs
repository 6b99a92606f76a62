use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{solve_params, ModelError, PrismatoidParams};

/// Named parameter sets.
///
/// `Fig3` and `Fig1b` are solved for `δ = ε/2` at `ε = 2°` and `ε = 1°`
/// (with `s = 1`, `y = 0.5`). `Fig1a` keeps the `Fig1b` bulge at the steep
/// proportion `z / y = 1/2`. `Acute` is a shallow-bulge shape whose odd
/// corners are clearly acute. `Control` is a right prism over a regular
/// hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Fig3,
    Fig1b,
    Fig1a,
    Acute,
    Control,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::Fig3,
        Preset::Fig1b,
        Preset::Fig1a,
        Preset::Acute,
        Preset::Control,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig3 => "fig3",
            Preset::Fig1b => "fig1b",
            Preset::Fig1a => "fig1a",
            Preset::Acute => "acute",
            Preset::Control => "control",
        }
    }

    /// `(ε, δ/ε)` targets for the solved presets.
    pub fn targets(self) -> Option<(f64, f64)> {
        match self {
            Preset::Fig3 => Some((2f64.to_radians(), 0.5)),
            Preset::Fig1b | Preset::Fig1a => Some((1f64.to_radians(), 0.5)),
            _ => None,
        }
    }

    pub fn params(self) -> Result<PrismatoidParams, ModelError> {
        let (s, y) = (1.0, 0.5);
        Ok(match self {
            Preset::Fig3 | Preset::Fig1b => {
                let (eps, ratio) = self.targets().expect("solved preset");
                solve_params(eps, ratio, s, y)?.params
            }
            Preset::Fig1a => {
                let h = Preset::Fig1b.params()?.h;
                PrismatoidParams::new(s, h, y, 0.5 * y)
            }
            Preset::Acute => PrismatoidParams::new(s, 0.05, y, 0.1),
            Preset::Control => {
                PrismatoidParams::new(s, PrismatoidParams::regular_bulge(s), 0.0, 0.3)
            }
        })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| ModelError::InvalidParams(format!("unknown preset `{s}`")))
    }
}
