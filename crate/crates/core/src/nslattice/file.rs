use serde::{Deserialize, Serialize};

use super::{BlowupLattice, CurveClass, LatticeError, LatticeSurface};

/// On-disk lattice description.
///
/// ```json
/// {"gram": [[1]], "canonical": [-3], "chi": 1, "points": [1],
///  "curves": [{"class": [1], "mults": [1]}]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub chi: i64,
    /// Residue degrees of the blown-up points.
    #[serde(default)]
    pub points: Vec<u64>,
    #[serde(default)]
    pub curves: Vec<CurveEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveEntry {
    pub class: Vec<i64>,
    pub mults: Vec<u32>,
}

impl LatticeFile {
    pub fn surface(&self) -> Result<LatticeSurface, LatticeError> {
        LatticeSurface::new(self.gram.clone(), self.canonical.clone(), self.chi)
    }

    pub fn blowup(&self) -> Result<BlowupLattice, LatticeError> {
        BlowupLattice::new(self.surface()?, self.points.clone())
    }

    pub fn curve_classes(&self, b: &BlowupLattice) -> Result<Vec<CurveClass>, LatticeError> {
        self.curves.iter().map(|c| CurveClass::new(c.class.clone(), c.mults.clone(), b)).collect()
    }
}
