//! Abstract surfaces through their Néron–Severi lattice.
//!
//! A surface is a symmetric integer Gram matrix together with the canonical
//! class and `χ(O_X)`. Blowing up closed points of residue degree `αᵢ` adds
//! orthogonal classes `Eᵢ` with `Eᵢ² = −αᵢ`. Curves are supplied by the caller
//! as classes with vanishing orders at the blown-up points; nothing here
//! discovers curves, so Seshadri values are suprema against the given list.

mod file;

pub use file::{CurveEntry, LatticeFile};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactalg::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vector of length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gram matrix is not square and symmetric")]
    NotSymmetric,
    #[error("residue degrees must be positive")]
    BadResidueDegree,
    #[error("point index {0} out of range")]
    BadPointIndex(usize),
    #[error("no listed curve passes through the chosen point(s)")]
    NoCurveThroughPoint,
    #[error("L pairs negatively with listed curve {0}")]
    NotNef(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSurface {
    gram: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    chi_o: i64,
}

impl LatticeSurface {
    pub fn new(gram: Vec<Vec<i64>>, canonical: Vec<i64>, chi_o: i64) -> Result<Self, LatticeError> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) || (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(LatticeError::NotSymmetric);
        }
        if canonical.len() != n {
            return Err(LatticeError::DimensionMismatch { expected: n, got: canonical.len() });
        }
        Ok(Self { gram, canonical, chi_o })
    }

    /// `ℙ²`: `H² = 1`, `K = −3H`, `χ(O) = 1`.
    pub fn projective_plane() -> Self {
        Self { gram: vec![vec![1]], canonical: vec![-3], chi_o: 1 }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    pub fn pairing(&self, u: &[i64], v: &[i64]) -> Result<i64, LatticeError> {
        bilinear(&self.gram, u, v)
    }

    /// `(n₊, n₋, n₀)` of the form, by congruence diagonalization over ℚ.
    pub fn signature(&self) -> (usize, usize, usize) {
        signature(&self.gram)
    }

    /// Human-readable warnings. A Gram matrix of signature other than
    /// `(1, ρ−1)` cannot be the Néron–Severi lattice of a surface.
    pub fn advisories(&self) -> Vec<String> {
        let (p, m, z) = self.signature();
        if p == 1 && z == 0 {
            vec![]
        } else {
            vec![format!("signature (+{p}, -{m}, 0:{z}) is not (1, rho-1); Hodge index fails for this lattice")]
        }
    }
}

fn bilinear(gram: &[Vec<i64>], u: &[i64], v: &[i64]) -> Result<i64, LatticeError> {
    let n = gram.len();
    for w in [u, v] {
        if w.len() != n {
            return Err(LatticeError::DimensionMismatch { expected: n, got: w.len() });
        }
    }
    let mut s = 0i64;
    for i in 0..n {
        for j in 0..n {
            s += u[i] * gram[i][j] * v[j];
        }
    }
    Ok(s)
}

fn signature(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = gram.len();
    let mut a: Vec<Vec<Rational>> = gram.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            a.swap(k, p);
            for r in a.iter_mut() {
                r.swap(k, p);
            }
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        {
            // a[i][i] = a[j][j] = 0: replace e_i by e_i + e_j, whose square is 2a[i][j].
            for c in 0..n {
                let t = a[j][c].clone();
                a[i][c] += t;
            }
            for r in 0..n {
                let t = a[r][j].clone();
                a[r][i] += t;
            }
            a.swap(k, i);
            for r in a.iter_mut() {
                r.swap(k, i);
            }
        } else {
            break;
        }
        let piv = a[k][k].clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &piv;
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let t = &f * &a[k][c];
                a[i][c] -= t;
            }
            for r in k..n {
                let t = &f * &a[r][k];
                a[r][i] -= t;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

/// `χ(D) = χ(O) + D·(D − K)/2`.
pub fn chi_rr_lattice(d: &[i64], s: &LatticeSurface) -> Result<Rational, LatticeError> {
    let dk: Vec<i64> = d.iter().zip(&s.canonical).map(|(a, k)| a - k).collect();
    Ok(int(s.chi_o) + Rational::new(BigInt::from(s.pairing(d, &dk)?), BigInt::from(2)))
}

/// Blow-up of a surface at closed points of residue degrees `alphas`.
/// Vectors have the base coordinates first, then one coefficient per `Eᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupLattice {
    base: LatticeSurface,
    alphas: Vec<u64>,
    gram: Vec<Vec<i64>>,
}

impl BlowupLattice {
    pub fn new(base: LatticeSurface, alphas: Vec<u64>) -> Result<Self, LatticeError> {
        if alphas.contains(&0) {
            return Err(LatticeError::BadResidueDegree);
        }
        let rho = base.rank();
        let n = rho + alphas.len();
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..rho {
            gram[i][..rho].copy_from_slice(&base.gram[i]);
        }
        for (i, &a) in alphas.iter().enumerate() {
            gram[rho + i][rho + i] = -(a as i64);
        }
        Ok(Self { base, alphas, gram })
    }

    pub fn base(&self) -> &LatticeSurface {
        &self.base
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn pairing(&self, u: &[i64], v: &[i64]) -> Result<i64, LatticeError> {
        bilinear(&self.gram, u, v)
    }

    /// `π*D`.
    pub fn pullback(&self, d: &[i64]) -> Result<Vec<i64>, LatticeError> {
        if d.len() != self.base.rank() {
            return Err(LatticeError::DimensionMismatch { expected: self.base.rank(), got: d.len() });
        }
        let mut v = d.to_vec();
        v.resize(self.rank(), 0);
        Ok(v)
    }

    /// Class of `Eᵢ`.
    pub fn exceptional(&self, i: usize) -> Result<Vec<i64>, LatticeError> {
        if i >= self.alphas.len() {
            return Err(LatticeError::BadPointIndex(i));
        }
        let mut v = vec![0; self.rank()];
        v[self.base.rank() + i] = 1;
        Ok(v)
    }
}

/// A curve on the base surface with its vanishing orders at the blown-up
/// points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub base_class: Vec<i64>,
    pub mults: Vec<u32>,
}

impl CurveClass {
    pub fn new(base_class: Vec<i64>, mults: Vec<u32>, b: &BlowupLattice) -> Result<Self, LatticeError> {
        if base_class.len() != b.base.rank() {
            return Err(LatticeError::DimensionMismatch { expected: b.base.rank(), got: base_class.len() });
        }
        if mults.len() != b.alphas.len() {
            return Err(LatticeError::DimensionMismatch { expected: b.alphas.len(), got: mults.len() });
        }
        let c = Self { base_class, mults };
        let st = c.strict_transform(b);
        for (i, (&l, &a)) in c.mults.iter().zip(&b.alphas).enumerate() {
            let e = b.exceptional(i).expect("index in range");
            assert_eq!(b.pairing(&e, &st).expect("lengths checked"), l as i64 * a as i64);
        }
        Ok(c)
    }

    /// `π*C − Σ lᵢEᵢ`.
    pub fn strict_transform(&self, b: &BlowupLattice) -> Vec<i64> {
        let mut v = self.base_class.clone();
        v.extend(self.mults.iter().map(|&l| -(l as i64)));
        debug_assert_eq!(v.len(), b.rank());
        v
    }
}

/// `class · C̃ ≥ 0` for every listed curve and `class · Eᵢ ≥ 0` for every `i`.
pub fn is_nef_against(class: &[i64], curves: &[CurveClass], b: &BlowupLattice) -> Result<bool, LatticeError> {
    for i in 0..b.alphas.len() {
        if b.pairing(class, &b.exceptional(i)?)? < 0 {
            return Ok(false);
        }
    }
    for c in curves {
        if b.pairing(class, &c.strict_transform(b))? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupStatus {
    /// The caller declared the curve list complete.
    Exact,
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupResult {
    /// `min (L·C) / Σ lᵢαᵢ` over the listed curves through the points.
    pub value: Rational,
    /// `L² / Σ αᵢ`: `ε²` never exceeds this.
    pub sq_cap: Rational,
    /// `value² > sq_cap`, so the cap is the sharper upper bound.
    pub capped: bool,
    pub status: SupStatus,
    /// Index of the curve attaining `value` (first on ties).
    pub curve: usize,
}

/// Seshadri supremum of `L` (a base class) at the blown-up points
/// `points`, using a single `λ` against `Σ Eᵢ`.
pub fn seshadri_sup(
    l: &[i64],
    points: &[usize],
    curves: &[CurveClass],
    complete: bool,
    b: &BlowupLattice,
) -> Result<SupResult, LatticeError> {
    if points.is_empty() {
        return Err(LatticeError::ShapeMismatch("no points chosen".into()));
    }
    if let Some(&i) = points.iter().find(|&&i| i >= b.alphas.len()) {
        return Err(LatticeError::BadPointIndex(i));
    }
    let pl = b.pullback(l)?;
    let mut best: Option<(Rational, usize)> = None;
    for (idx, c) in curves.iter().enumerate() {
        if c.mults.len() != b.alphas.len() {
            return Err(LatticeError::DimensionMismatch { expected: b.alphas.len(), got: c.mults.len() });
        }
        let lc = b.pairing(&pl, &b.pullback(&c.base_class)?)?;
        if lc < 0 {
            return Err(LatticeError::NotNef(idx));
        }
        let mult: u64 = points.iter().map(|&i| c.mults[i] as u64 * b.alphas[i]).sum();
        if mult == 0 {
            continue;
        }
        let r = Rational::new(BigInt::from(lc), BigInt::from(mult));
        if best.as_ref().is_none_or(|(v, _)| r < *v) {
            best = Some((r, idx));
        }
    }
    let (value, curve) = best.ok_or(LatticeError::NoCurveThroughPoint)?;
    let total: u64 = points.iter().map(|&i| b.alphas[i]).sum();
    let sq_cap = Rational::new(BigInt::from(b.base.pairing(l, l)?), BigInt::from(total));
    let capped = &value * &value > sq_cap;
    let status = if complete { SupStatus::Exact } else { SupStatus::UpperBound };
    Ok(SupResult { value, sq_cap, capped, status, curve })
}

/// `sup(n²L) = n²·sup(L)` and `sup(nL) = n·sup(L)` on the same data.
pub fn scaling_check(
    l: &[i64],
    n: i64,
    points: &[usize],
    curves: &[CurveClass],
    b: &BlowupLattice,
) -> Result<bool, LatticeError> {
    let base = seshadri_sup(l, points, curves, false, b)?;
    let scaled = |k: i64| -> Result<Rational, LatticeError> {
        let v: Vec<i64> = l.iter().map(|x| x * k).collect();
        Ok(seshadri_sup(&v, points, curves, false, b)?.value)
    };
    Ok(scaled(n * n)? == int(n * n) * &base.value && scaled(n)? == int(n) * &base.value)
}

/// One side of a cover comparison: a blown-up surface and its curve list.
#[derive(Clone, Debug)]
pub struct CoverSide<'a> {
    pub lattice: &'a BlowupLattice,
    pub curves: &'a [CurveClass],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    /// Multi-point value of `g*L` at all fiber points.
    pub eps_fiber: Rational,
    /// Value of `L` at `z`.
    pub eps_z: Rational,
    /// Single-point value of `g*L` at the first fiber point.
    pub eps_first: Rational,
    pub equality: bool,
    pub single_point_inequality: bool,
    /// Either comparison failed: the supplied lists cannot both be complete.
    pub list_incomplete: bool,
}

/// Compares `ε(Y, g*L, y₁…y_r)` with `ε(Z, L, z)`. `phi` is the pullback
/// `Pic Z → Pic Y` as a `rank Y × rank Z` matrix; the fiber points are all
/// blown-up points of `y`, and `z` is point `z_index` of `z`.
pub fn cover_check(
    phi: &[Vec<i64>],
    l: &[i64],
    z: CoverSide<'_>,
    z_index: usize,
    y: CoverSide<'_>,
) -> Result<CoverReport, LatticeError> {
    let (rz, ry) = (z.lattice.base.rank(), y.lattice.base.rank());
    if phi.len() != ry || phi.iter().any(|r| r.len() != rz) {
        return Err(LatticeError::ShapeMismatch(format!("pullback must be {ry} x {rz}")));
    }
    if l.len() != rz {
        return Err(LatticeError::DimensionMismatch { expected: rz, got: l.len() });
    }
    let za = *z.lattice.alphas.get(z_index).ok_or(LatticeError::BadPointIndex(z_index))?;
    if y.lattice.alphas.iter().any(|&a| a != za) {
        return Err(LatticeError::ShapeMismatch("fiber points must share the residue degree of z".into()));
    }
    let gl: Vec<i64> = phi.iter().map(|r| r.iter().zip(l).map(|(a, b)| a * b).sum()).collect();
    let fiber: Vec<usize> = (0..y.lattice.alphas.len()).collect();
    let eps_fiber = seshadri_sup(&gl, &fiber, y.curves, false, y.lattice)?.value;
    let eps_z = seshadri_sup(l, &[z_index], z.curves, false, z.lattice)?.value;
    let eps_first = seshadri_sup(&gl, &[0], y.curves, false, y.lattice)?.value;
    let equality = eps_fiber == eps_z;
    let single_point_inequality = eps_first >= eps_z;
    Ok(CoverReport {
        eps_fiber,
        eps_z,
        eps_first,
        equality,
        single_point_inequality,
        list_incomplete: !(equality && single_point_inequality),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn p2_at(alphas: Vec<u64>) -> BlowupLattice {
        BlowupLattice::new(LatticeSurface::projective_plane(), alphas).unwrap()
    }

    fn abelian() -> LatticeSurface {
        LatticeSurface::new(vec![vec![2]], vec![0], 0).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let s = LatticeSurface::projective_plane();
        assert_eq!(s.pairing(&[1], &[1]), Ok(1));
        let b = p2_at(vec![2]);
        let e = b.exceptional(0).unwrap();
        assert_eq!(b.pairing(&e, &e), Ok(-2));
        assert_eq!(b.pairing(&b.pullback(&[1]).unwrap(), &e), Ok(0));
        assert_eq!(b.gram(), &[vec![1, 0], vec![0, -2]]);
        assert!(matches!(s.pairing(&[1, 0], &[1]), Err(LatticeError::DimensionMismatch { .. })));
    }

    #[test]
    fn chi_examples() {
        let s = LatticeSurface::projective_plane();
        assert_eq!(chi_rr_lattice(&[3], &s).unwrap(), rat(10, 1));
        assert_eq!(chi_rr_lattice(&[0], &s).unwrap(), rat(1, 1));
        // D² = 2 on the abelian-type lattice: D = L.
        assert_eq!(chi_rr_lattice(&[1], &abelian()).unwrap(), rat(1, 1));
        for d in -10i64..=20 {
            assert_eq!(chi_rr_lattice(&[d], &s).unwrap(), rat(crate::linsys::chi_rr(d), 1));
        }
    }

    #[test]
    fn nef_examples() {
        let b = p2_at(vec![1]);
        let line = CurveClass::new(vec![1], vec![1], &b).unwrap();
        assert!(is_nef_against(&[1, -1], std::slice::from_ref(&line), &b).unwrap());
        assert!(!is_nef_against(&[1, -2], std::slice::from_ref(&line), &b).unwrap());
        assert!(is_nef_against(&[1, -5], &[], &b).unwrap());
        assert!(!is_nef_against(&[1, 1], &[], &b).unwrap());
    }

    #[test]
    fn sup_examples() {
        let b = p2_at(vec![1]);
        let line = CurveClass::new(vec![1], vec![1], &b).unwrap();
        let r = seshadri_sup(&[1], &[0], std::slice::from_ref(&line), true, &b).unwrap();
        assert_eq!((r.value.clone(), r.status, r.capped), (rat(1, 1), SupStatus::Exact, false));
        assert_eq!(seshadri_sup(&[3], &[0], &[line], true, &b).unwrap().value, rat(3, 1));

        let ab = BlowupLattice::new(abelian(), vec![1]).unwrap();
        let c = CurveClass::new(vec![1], vec![1], &ab).unwrap();
        let r = seshadri_sup(&[1], &[0], &[c], false, &ab).unwrap();
        assert_eq!((r.value, r.sq_cap, r.capped, r.status), (rat(2, 1), rat(2, 1), true, SupStatus::UpperBound));

        let two = p2_at(vec![1, 1]);
        let line = CurveClass::new(vec![1], vec![1, 1], &two).unwrap();
        assert_eq!(seshadri_sup(&[1], &[0, 1], std::slice::from_ref(&line), false, &two).unwrap().value, rat(1, 2));

        let off = CurveClass::new(vec![1], vec![0, 1], &two).unwrap();
        assert_eq!(seshadri_sup(&[1], &[0], &[off], false, &two), Err(LatticeError::NoCurveThroughPoint));
    }

    #[test]
    fn scaling_examples() {
        let b = p2_at(vec![1]);
        let line = [CurveClass::new(vec![1], vec![1], &b).unwrap()];
        let ab = BlowupLattice::new(abelian(), vec![1]).unwrap();
        let c = [CurveClass::new(vec![1], vec![1], &ab).unwrap()];
        for n in [1, 2, 3, 5] {
            assert!(scaling_check(&[1], n, &[0], &line, &b).unwrap());
            assert!(scaling_check(&[1], n, &[0], &c, &ab).unwrap());
        }
        assert_eq!(seshadri_sup(&[4], &[0], &c, false, &ab).unwrap().value, rat(8, 1));
        assert_eq!(seshadri_sup(&[9], &[0], &line, false, &b).unwrap().value, rat(9, 1));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(LatticeSurface::projective_plane().signature(), (1, 0, 0));
        let h = LatticeSurface::new(vec![vec![0, 1], vec![1, 0]], vec![-2, -2], 1).unwrap();
        assert_eq!(h.signature(), (1, 1, 0));
        assert!(h.advisories().is_empty());
        let bad = LatticeSurface::new(vec![vec![1, 0], vec![0, 1]], vec![0, 0], 0).unwrap();
        assert_eq!(bad.signature(), (2, 0, 0));
        assert_eq!(bad.advisories().len(), 1);
        assert_eq!(p2_at(vec![1, 3]).gram()[2][2], -3);
        assert!(LatticeSurface::new(vec![vec![0, 1], vec![2, 0]], vec![0, 0], 0).is_err());
    }

    fn quadric() -> LatticeSurface {
        LatticeSurface::new(vec![vec![0, 1], vec![1, 0]], vec![-2, -2], 1).unwrap()
    }

    #[test]
    fn cover_examples() {
        // Identity cover.
        let z = BlowupLattice::new(quadric(), vec![1]).unwrap();
        let zc = vec![
            CurveClass::new(vec![1, 0], vec![1], &z).unwrap(),
            CurveClass::new(vec![0, 1], vec![1], &z).unwrap(),
        ];
        let id = vec![vec![1, 0], vec![0, 1]];
        let zs = CoverSide { lattice: &z, curves: &zc };
        let rep = cover_check(&id, &[1, 1], zs.clone(), 0, zs.clone()).unwrap();
        assert!(rep.equality && !rep.list_incomplete);

        // Degree-2 model: pairings double on Y, each ruling pulls back to a
        // single curve through both fiber points.
        let yl = LatticeSurface::new(vec![vec![0, 2], vec![2, 0]], vec![0, 0], 0).unwrap();
        let y = BlowupLattice::new(yl, vec![1, 1]).unwrap();
        let yc = vec![
            CurveClass::new(vec![1, 0], vec![1, 1], &y).unwrap(),
            CurveClass::new(vec![0, 1], vec![1, 1], &y).unwrap(),
        ];
        let rep = cover_check(&id, &[1, 1], zs.clone(), 0, CoverSide { lattice: &y, curves: &yc }).unwrap();
        assert_eq!((rep.eps_fiber.clone(), rep.eps_z.clone(), rep.eps_first.clone()), (rat(1, 1), rat(1, 1), rat(2, 1)));
        assert!(rep.equality && rep.single_point_inequality && !rep.list_incomplete);

        // Truncated Y list: only a curve with a worse ratio survives.
        let trunc = vec![CurveClass::new(vec![1, 1], vec![1, 0], &y).unwrap()];
        let rep = cover_check(&id, &[1, 1], zs.clone(), 0, CoverSide { lattice: &y, curves: &trunc }).unwrap();
        assert!(rep.list_incomplete);

        assert!(matches!(
            cover_check(&[vec![1, 0]], &[1, 1], zs, 0, CoverSide { lattice: &y, curves: &yc }),
            Err(LatticeError::ShapeMismatch(_))
        ));
    }
}
