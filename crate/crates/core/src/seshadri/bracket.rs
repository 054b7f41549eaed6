use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{ratio, sqrt_bound_sq, BracketParams, SeshadriError, SeshadriResult, SeshadriValue, Witness};
use crate::exactalg::{Field, Rational};
use crate::linsys::{fat_point_conditions, h0, mult_table, mult_table_over, witness, witness_over, MultTable};
use crate::p2geom::{ClosedPoint, Form};

/// Degree bound `d` (with respect to `L`) and the data that justifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    pub d: u64,
    /// `m = d·γ`.
    pub m: u64,
    /// `h⁰(dL)`.
    pub h0: u64,
    /// `α·m(m+1)/2`.
    pub conditions: u64,
    /// `(L² − αγ²)d² − (αγ + rL²)d + 2χ`, logged for cross-checking.
    pub quadratic: Rational,
}

const BOUND_BUDGET: u64 = 1_000_000;

/// Smallest `d > r`, `d ≥ 1`, with `dγ = m` integral and `h⁰(dL) > α·m(m+1)/2`.
pub fn degree_bound(p: &BracketParams, alpha: u64) -> Result<DegreeBound, SeshadriError> {
    p.check(alpha)?;
    let den = p.gamma.denom().to_u64().ok_or(SeshadriError::NoBoundInBudget(0))?;
    let num = p.gamma.numer().to_u64().ok_or(SeshadriError::NoBoundInBudget(0))?;
    let d0 = p.bundle.degree();
    for k in 1..=BOUND_BUDGET {
        let d = den * k;
        if (d as i64) <= p.r {
            continue;
        }
        let m = num * k;
        let h = h0(d * d0);
        let c = fat_point_conditions(alpha, m);
        if h > c {
            return Ok(DegreeBound { d, m, h0: h, conditions: c, quadratic: quadratic(p, alpha, d) });
        }
    }
    Err(SeshadriError::NoBoundInBudget(BOUND_BUDGET))
}

fn quadratic(p: &BracketParams, alpha: u64, d: u64) -> Rational {
    let l2 = p.bundle.self_intersection();
    let a = Rational::from_integer(BigInt::from(alpha));
    let d = Rational::from_integer(BigInt::from(d));
    let r = Rational::from_integer(BigInt::from(p.r));
    let chi = Rational::from_integer(BigInt::from(p.chi));
    let g = &p.gamma;
    (&l2 - &a * g * g) * &d * &d - (&a * g + &r * &l2) * &d + Rational::from_integer(BigInt::from(2)) * chi
}

/// Chooses the best `(e, m_max(e))` pair by ratio, then by smallest degree.
fn best_pair(p: &BracketParams, alpha: u64, table: &MultTable) -> (u32, u32, Rational) {
    table
        .entries
        .iter()
        .filter(|r| r.m_max >= 1)
        .map(|r| (r.e, r.m_max, ratio(p.bundle, r.e, alpha, r.m_max)))
        .min_by(|a, b| a.2.cmp(&b.2).then(a.0.cmp(&b.0)))
        .expect("m_max(d·d0) ≥ dγ ≥ 1 by the choice of d")
}

fn assemble<T>(
    p: &BracketParams,
    alpha: u64,
    bound: DegreeBound,
    table: MultTable,
    find_witness: impl Fn(u32, u32) -> Option<Form<T>>,
) -> SeshadriResult<T> {
    let (e, m, best) = best_pair(p, alpha, &table);
    let witness = find_witness(e, m).map(|form| Witness { form, order: m });
    let value = if best < p.gamma {
        SeshadriValue::Exact(best)
    } else {
        SeshadriValue::Interval {
            lower: p.gamma.clone(),
            upper_candidate: best,
            upper_sq_bound: sqrt_bound_sq(&p.bundle.self_intersection(), alpha),
        }
    };
    SeshadriResult { alpha, params: p.clone(), bound, table, value, witness }
}

/// Certified value or bracket of `ε(ℙ², O(d₀), x)`.
pub fn seshadri_p2(x: &ClosedPoint, p: &BracketParams) -> Result<SeshadriResult, SeshadriError> {
    let alpha = x.residue_degree() as u64;
    let bound = degree_bound(p, alpha)?;
    let max_e = (bound.d * p.bundle.degree()).to_u32().ok_or(SeshadriError::NoBoundInBudget(bound.d))?;
    let table = mult_table(x, max_e);
    Ok(assemble(p, alpha, bound, table, |e, m| witness(x, e, m)))
}

/// The same algorithm for a point rational over the coefficient field `K`
/// of the forms (residue degree one over `K`).
pub fn seshadri_over<F: Field>(
    field: &F,
    x: &[F::Elem; 3],
    p: &BracketParams,
) -> Result<SeshadriResult<F::Elem>, SeshadriError> {
    let bound = degree_bound(p, 1)?;
    let max_e = (bound.d * p.bundle.degree()).to_u32().ok_or(SeshadriError::NoBoundInBudget(bound.d))?;
    let table = mult_table_over(field, x, max_e);
    Ok(assemble(p, 1, bound, table, |e, m| witness_over(field, x, e, m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::numfield::NumberField;
    use crate::p2geom::LineBundleDeg;

    fn params(n: i64, d: i64) -> BracketParams {
        BracketParams::new(rat(n, d), LineBundleDeg(1))
    }

    /// Oracle: the defining inequality checked directly over all candidate d.
    fn brute_bound(gamma: (u64, u64), alpha: u64) -> u64 {
        (1..)
            .find(|&d| (d * gamma.0) % gamma.1 == 0 && {
                let m = d * gamma.0 / gamma.1;
                (d + 1) * (d + 2) / 2 > alpha * m * (m + 1) / 2
            })
            .unwrap()
    }

    #[test]
    fn degree_bound_examples() {
        let b = degree_bound(&params(9, 10), 1).unwrap();
        assert_eq!((b.d, b.m, b.h0, b.conditions), (10, 9, 66, 45));
        let b = degree_bound(&params(3, 5), 2).unwrap();
        assert_eq!((b.d, b.m, b.h0, b.conditions), (5, 3, 21, 12));
        let b = degree_bound(&params(2, 5), 3).unwrap();
        assert_eq!((b.d, b.m, b.h0, b.conditions), (5, 2, 21, 9));
        for (g, a) in [((9, 10), 1), ((3, 5), 2), ((2, 5), 3), ((12, 25), 3), ((1, 3), 5)] {
            assert_eq!(degree_bound(&params(g.0 as i64, g.1 as i64), a).unwrap().d, brute_bound(g, a));
        }
    }

    #[test]
    fn quadratic_positive_at_large_d() {
        // The quadratic sufficient condition is eventually positive.
        let p = params(9, 10);
        assert!(quadratic(&p, 1, 1000) > rat(0, 1));
    }

    #[test]
    fn rational_point_interval() {
        let x = ClosedPoint::rational([rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap();
        let r = seshadri_p2(&x, &params(9, 10)).unwrap();
        assert_eq!(r.bound.d, 10);
        assert_eq!(
            r.value,
            SeshadriValue::Interval { lower: rat(9, 10), upper_candidate: rat(1, 1), upper_sq_bound: rat(1, 1) }
        );
        r.check_invariants().unwrap();
        r.replay_witness(&x).unwrap();
    }

    #[test]
    fn quadratic_point_exact() {
        let k = NumberField::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]).unwrap();
        let x = ClosedPoint::new(&k, [k.theta(), k.one(), k.zero()]).unwrap();
        let r = seshadri_p2(&x, &params(3, 5)).unwrap();
        assert_eq!(r.bound.d, 5);
        assert_eq!(r.exact(), Some(&rat(1, 2)));
        assert_eq!(r.witness.as_ref().unwrap().form.to_literal(), "x2");
        r.check_invariants().unwrap();
        r.replay_witness(&x).unwrap();
    }

    #[test]
    fn gamma_out_of_range() {
        let x = ClosedPoint::rational([rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap();
        assert!(matches!(seshadri_p2(&x, &params(1, 1)), Err(SeshadriError::GammaOutOfRange { .. })));
    }
}
