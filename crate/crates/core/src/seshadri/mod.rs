//! Seshadri constants of `O(d₀)` on the plane at closed points.
//!
//! For a closed point `x` of residue degree `α` and a rational threshold
//! `γ` with `αγ² < d₀²`, [`seshadri_p2`] either returns the exact value
//! `ε(ℙ², O(d₀), x) < γ` with a witness curve, or certifies `ε ≥ γ` and brackets
//! it from above by the best witness ratio found and by `ε² ≤ d₀²/α`.
//!
//! The search is finite because of a Bezout argument: pick `d` with `m = dγ`
//! integral and `h⁰(O(d·d₀)) > α·m(m+1)/2`. Then some `D ∈ |O(d·d₀)|` has
//! order `≥ m` at `x`, and every irreducible `C` with
//! `d₀·deg C / (α·mult_x C) < γ` must be a component of `D`, else
//! `deg D · deg C < (1/α)·mult_{x/k} D · mult_{x/k} C`. So all such curves have
//! degree at most `d·d₀`, and scanning `m_max(e)` for `e ≤ d·d₀` finds the
//! minimum. A reducible kernel form is never better than its best component,
//! so the minimum over the table is attained by an irreducible curve and no
//! factorization is needed.

mod base_change;
mod bracket;

pub use base_change::{base_change_compare, rational_point_gamma, BaseChangeCase, BaseChangeReport, Inequality};
pub use bracket::{degree_bound, seshadri_over, seshadri_p2, DegreeBound};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactalg::{Field, Rational};
use crate::linsys::MultTable;
use crate::numfield::{NumberField, NumberFieldError};
use crate::p2geom::{intersection_number, mult_point, vanishing_order, ClosedPoint, Form, LineBundleDeg};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeshadriError {
    #[error("gamma = {gamma} is outside 0 < gamma and alpha*gamma^2 < L^2 (alpha = {alpha}, L^2 = {l_self})")]
    GammaOutOfRange { gamma: String, alpha: u64, l_self: String },
    #[error("no degree bound found within {0} multiples of the denominator of gamma")]
    NoBoundInBudget(u64),
    #[error("unsupported base-change configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error(transparent)]
    NumberField(#[from] NumberFieldError),
}

/// Inputs of the bracket algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketParams {
    /// Threshold `γ > 0`.
    pub gamma: Rational,
    pub bundle: LineBundleDeg,
    /// Smallest integer `r` with `rL − K` ample, i.e. `r·d₀ + 3 ≥ 1`.
    pub r: i64,
    /// `χ(O_{ℙ²}) = 1`.
    pub chi: i64,
}

impl BracketParams {
    pub fn new(gamma: Rational, bundle: LineBundleDeg) -> Self {
        let d0 = bundle.degree() as i64;
        // r·d₀ ≥ −2
        let r = (-2i64).div_euclid(d0.max(1)) + i64::from((-2i64).rem_euclid(d0.max(1)) != 0);
        Self { gamma, bundle, r, chi: 1 }
    }

    /// `0 < γ` and `α·γ² < L·L`.
    pub fn check(&self, alpha: u64) -> Result<(), SeshadriError> {
        let l_self = self.bundle.self_intersection();
        let lhs = Rational::from_integer(BigInt::from(alpha)) * &self.gamma * &self.gamma;
        if !self.gamma.is_positive() || lhs >= l_self || self.bundle.degree() == 0 {
            return Err(SeshadriError::GammaOutOfRange {
                gamma: crate::exactalg::format_rational(&self.gamma),
                alpha,
                l_self: crate::exactalg::format_rational(&l_self),
            });
        }
        Ok(())
    }
}

/// The outcome: an exact value or a certified two-sided bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeshadriValue {
    /// `ε` itself, attained by the witness.
    Exact(Rational),
    /// `lower ≤ ε ≤ upper_candidate` and `ε² ≤ upper_sq_bound`.
    Interval { lower: Rational, upper_candidate: Rational, upper_sq_bound: Rational },
}

/// A form of degree `e` with verified order `≥ order` at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<T> {
    pub form: Form<T>,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeshadriResult<T = Rational> {
    pub alpha: u64,
    pub params: BracketParams,
    pub bound: DegreeBound,
    pub table: MultTable,
    pub value: SeshadriValue,
    /// Best witness found: attains `Exact`, or realizes `upper_candidate`.
    pub witness: Option<Witness<T>>,
}

impl<T> SeshadriResult<T> {
    pub fn is_exact(&self) -> bool {
        matches!(self.value, SeshadriValue::Exact(_))
    }

    /// Exact value, if any.
    pub fn exact(&self) -> Option<&Rational> {
        match &self.value {
            SeshadriValue::Exact(v) => Some(v),
            SeshadriValue::Interval { .. } => None,
        }
    }

    /// Best upper bound carried by the result: the exact value or the
    /// upper candidate.
    pub fn upper(&self) -> &Rational {
        match &self.value {
            SeshadriValue::Exact(v) => v,
            SeshadriValue::Interval { upper_candidate, .. } => upper_candidate,
        }
    }

    /// Certified lower bound: the exact value or `γ`.
    pub fn lower(&self) -> &Rational {
        match &self.value {
            SeshadriValue::Exact(v) => v,
            SeshadriValue::Interval { lower, .. } => lower,
        }
    }

    /// Structural invariants, all checked in exact arithmetic.
    pub fn check_invariants(&self) -> Result<(), String> {
        let d0 = Rational::from_integer(BigInt::from(self.params.bundle.degree()));
        let alpha = Rational::from_integer(BigInt::from(self.alpha));
        let sq = sqrt_bound_sq(&self.params.bundle.self_intersection(), self.alpha);
        if !self.table.is_consistent() {
            return Err("multiplicity table is not monotone or exceeds degrees".into());
        }
        let floor = &d0 / &alpha;
        match &self.value {
            SeshadriValue::Exact(v) => {
                let w = self.witness.as_ref().ok_or("exact result without witness")?;
                let ratio = ratio(self.params.bundle, w.form.degree(), self.alpha, w.order);
                if &ratio != v {
                    return Err(format!("witness ratio {ratio} differs from value {v}"));
                }
                if v >= &self.params.gamma {
                    return Err("exact value is not below gamma".into());
                }
                if v < &floor {
                    return Err("exact value is below d0/alpha".into());
                }
                if v * v > sq {
                    return Err("exact value violates epsilon^2 <= L^2/alpha".into());
                }
            }
            SeshadriValue::Interval { lower, upper_candidate, upper_sq_bound } => {
                if lower != &self.params.gamma || lower > upper_candidate {
                    return Err("interval endpoints out of order".into());
                }
                if upper_sq_bound != &sq || lower * lower > *upper_sq_bound {
                    return Err("lower bound squared exceeds the square-root bound".into());
                }
                if let Some(w) = &self.witness {
                    if &ratio(self.params.bundle, w.form.degree(), self.alpha, w.order) != upper_candidate {
                        return Err("witness does not realize the upper candidate".into());
                    }
                }
            }
        }
        Ok(())
    }
}

impl SeshadriResult<Rational> {
    /// Replays the witness through the independent multiplicity code path:
    /// recomputes its order at `x` and the ratio `L·C / mult_{x/k} C`.
    pub fn replay_witness(&self, x: &ClosedPoint) -> Result<(), String> {
        let Some(w) = &self.witness else {
            return if self.is_exact() { Err("missing witness".into()) } else { Ok(()) };
        };
        let order = vanishing_order(&w.form, x);
        if order < w.order {
            return Err(format!("witness vanishes to order {order} < {}", w.order));
        }
        let num = intersection_number(self.params.bundle, &w.form);
        let den = Rational::from_integer(BigInt::from(mult_point(&w.form, x)));
        let r = ratio(self.params.bundle, w.form.degree(), self.alpha, order);
        if num / den != r {
            return Err("ratio recomputation disagrees".into());
        }
        if &r > self.upper() {
            return Err("witness ratio exceeds the reported upper bound".into());
        }
        Ok(())
    }
}

/// `d₀·e / (α·m)`.
pub fn ratio(bundle: LineBundleDeg, e: u32, alpha: u64, m: u32) -> Rational {
    Rational::new(BigInt::from(bundle.degree()) * BigInt::from(e), BigInt::from(alpha) * BigInt::from(m))
}

/// The bound `ε ≤ √(L²/α)`, returned squared: `L² / α`.
pub fn sqrt_bound_sq(l_self: &Rational, alpha: u64) -> Rational {
    l_self / Rational::from_integer(BigInt::from(alpha))
}

/// The multi-point cover bound `ε ≤ (Lᵐ / Σ dᵢ)^{1/m}`, returned as the `m`-th
/// power `Lᵐ / Σ dᵢ`.
pub fn multipoint_bound_mth_power(l_top: &Rational, degs: &[u64], m: u32) -> Rational {
    debug_assert!(m >= 2 && !degs.is_empty());
    l_top / Rational::from_integer(BigInt::from(degs.iter().sum::<u64>()))
}

/// Witness ratios of the line `x2 = 0` through `[2^{1/δ} : 1 : 0]`, for
/// `δ = 2..=dmax`: `(α, 1/δ)` with `α = δ`, showing the global Seshadri
/// constant of the plane is zero.
pub fn global_trend(dmax: u32) -> Result<Vec<(u64, Rational)>, SeshadriError> {
    let line = Form::parse("x2").expect("literal");
    let mut out = Vec::new();
    for delta in 2..=dmax {
        let mut f = vec![Rational::zero(); delta as usize + 1];
        f[0] = Rational::from_integer(BigInt::from(-2));
        f[delta as usize] = Rational::one();
        let k = NumberField::new(f)?;
        let x = ClosedPoint::new(&k, [k.theta(), k.one(), k.zero()]).expect("nonzero");
        let alpha = x.residue_degree() as u64;
        let r = intersection_number(LineBundleDeg(1), &line) / Rational::from_integer(BigInt::from(mult_point(&line, &x)));
        out.push((alpha, r));
    }
    Ok(out)
}
