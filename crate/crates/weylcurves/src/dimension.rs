//! Euler-characteristic bookkeeping for divisors with assigned multiple
//! points and the (-1)-curve corrections to the naive count.
//!
//! The naive dimension of dH - sum m_i E_i is
//! binom(d+r, r) - sum binom(m_i+r-1, r); every (-1)-curve C contained k_C
//! times in the base locus (k_C = -(D.C)) contributes binom(r+k_C-2, r)
//! back. On spaces where the (-1)-curves are exactly the lines through
//! point pairs and the rational normal curves through r+3 points, the
//! ledger can be generated automatically.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chowcore::{intersect, ChowClass, CurveClass, DivisorClass, Space};
use crate::weylorbits::is_weyl_finite;
use crate::{Error, Result};
use itertools::Itertools;

/// Exact binomial coefficient with binom(n,k) = 0 whenever k < 0 or n < k.
pub fn binom(n: &BigInt, k: i64) -> BigInt {
    if k < 0 || n < &BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for j in 1..=k {
        acc = acc * (n - BigInt::from(k - j)) / BigInt::from(j);
    }
    acc
}

/// binom(d+r, r) - sum_i binom(m_i+r-1, r).
pub fn naive_chi(d: &DivisorClass) -> Result<BigInt> {
    let space = d.space();
    if d.mults().iter().any(|m| m.is_negative()) {
        return Err(Error::Precondition(format!(
            "{d} has a negative multiplicity"
        )));
    }
    let r = space.r() as i64;
    let mut total = binom(&(d.degree() + BigInt::from(r)), r);
    for m in d.mults() {
        total -= binom(&(m + BigInt::from(r - 1)), r);
    }
    Ok(total)
}

/// How many times C sits inside the base locus of D: max(0, -(D.C)).
pub fn containment_multiplicity(d: &DivisorClass, c: &CurveClass) -> Result<BigInt> {
    let v = intersect(d, c)?;
    Ok(if v.is_negative() { -v } else { BigInt::zero() })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorrectionEntry {
    pub curve: CurveClass,
    /// Containment multiplicity, always >= 1 for a recorded entry.
    pub k: BigInt,
    /// binom(r + k - 2, r).
    pub contribution: BigInt,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorrectionLedger {
    /// naive_chi(D), or the externally supplied base.
    pub base: BigInt,
    pub entries: Vec<CorrectionEntry>,
    /// base + sum of contributions.
    pub total: BigInt,
}

/// Correct the naive count by the supplied curves; curves meeting D
/// non-negatively are skipped. `base_override` substitutes an externally
/// computed expected dimension for naive_chi.
pub fn corrected_dimension(
    d: &DivisorClass,
    curves: &[CurveClass],
    base_override: Option<BigInt>,
) -> Result<CorrectionLedger> {
    for (i, c) in curves.iter().enumerate() {
        if curves[..i].contains(c) {
            return Err(Error::Precondition(format!(
                "duplicate curve {c} in the correction list"
            )));
        }
    }
    let base = match base_override {
        Some(b) => b,
        None => naive_chi(d)?,
    };
    let r = d.space().r() as i64;
    let mut entries = Vec::new();
    let mut total = base.clone();
    for c in curves {
        let k = containment_multiplicity(d, c)?;
        if k < BigInt::from(1) {
            continue;
        }
        let contribution = binom(&(&k + BigInt::from(r - 2)), r);
        total += &contribution;
        entries.push(CorrectionEntry {
            curve: c.clone(),
            k,
            contribution,
        });
    }
    Ok(CorrectionLedger {
        base,
        entries,
        total,
    })
}

/// The full labelled (-1)-curve list on spaces where it is known to be just
/// lines and rational normal curves: every line through a point pair, and
/// for s >= r+3 every RNC through an (r+3)-subset of the points.
pub fn auto_curves(space: Space) -> Result<Vec<CurveClass>> {
    let (r, s) = (space.r() as usize, space.s());
    if !is_weyl_finite(space) && !(space.r() == 5 && s == 9) {
        return Err(Error::Unsupported(format!(
            "no certified (-1)-curve list for {space}; supply curves explicitly"
        )));
    }
    let mut out = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            let mut m = vec![BigInt::zero(); s];
            m[i] = BigInt::from(1);
            m[j] = BigInt::from(1);
            out.push(CurveClass::rebuild(space, BigInt::from(1), m));
        }
    }
    if s >= r + 3 {
        for subset in (0..s).combinations(r + 3) {
            let mut m = vec![BigInt::zero(); s];
            for i in subset {
                m[i] = BigInt::from(1);
            }
            out.push(CurveClass::rebuild(space, BigInt::from(r as i64), m));
        }
    }
    Ok(out)
}

/// The published restriction chain for 6H - 4 sum E on nine points in P^5:
/// each stage drops by the dimension of the restricted system
/// [binom(6,4), binom(7,4)-8, binom(6,4), binom(7,4)-16], starting from
/// binom(11,5) - 7 binom(8,5) - 2 binom(6,5) + binom(7,2) = 79.
pub fn restriction_chain_fixture() -> Vec<BigInt> {
    let b = |n: i64, k: i64| binom(&BigInt::from(n), k);
    let start = b(11, 5) - BigInt::from(7) * b(8, 5) - BigInt::from(2) * b(6, 5) + b(7, 2);
    let steps = [
        b(6, 4),
        b(7, 4) - BigInt::from(8),
        b(6, 4),
        b(7, 4) - BigInt::from(16),
    ];
    let mut chain = vec![start];
    for step in steps {
        let next = chain.last().unwrap() - step;
        chain.push(next);
    }
    chain
}
