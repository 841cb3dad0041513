//! Effective-cone facets for divisors on r+2 or r+3 points, the movable-cone
//! extremal rays dual to them, the non-negativity screen against the
//! (0)-divisorial orbit, and base-locus orthogonality audits.
//!
//! On Y^r_{r+3} the effective cone is cut out by three facet families, each
//! dual to a curve ray under `intersect`:
//!   A_i:  d - m_i >= 0                               ray  h - e_i
//!   A'_i: r d - sum_{j != i} m_j >= 0                ray  r h - sum_{j != i} e_j
//!   B_{t,I}: [(t+1)r - t] d - t sum m - sum_I m >= 0 ray  beta_{t,I}
//! with beta_{t,I} of degree (t+1)r - t, multiplicity t+1 on I and t off I,
//! |I| = r - 2t + 1, and -1 <= t <= l + alpha where r = 2l + alpha. On r+2
//! points only the A/A' families apply.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chowcore::{bilinear_curve, bilinear_divisor, intersect, ChowClass, CurveClass, DivisorClass, Space};
use crate::cremona::{cremona_curve, IndexSet};
use crate::weylorbits::{canonicalize, enumerate_orbit, BoundHit, OrbitBounds};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FacetId {
    /// d >= m_i.
    A { i: usize },
    /// r d >= sum of the other multiplicities.
    APrime { i: usize },
    /// The k_{t,I} inequality; `set` holds the r-2t+1 marked labels.
    B { t: i64, set: Vec<usize> },
}

impl std::fmt::Display for FacetId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FacetId::A { i } => write!(f, "A_{i}"),
            FacetId::APrime { i } => write!(f, "A'_{i}"),
            FacetId::B { t, set } => {
                write!(f, "B_{{{t},{{")?;
                for (k, i) in set.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "}}}}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FacetReport {
    pub id: FacetId,
    /// Slack of the inequality; equals intersect(D, ray) for the dual ray.
    pub value: BigInt,
    pub satisfied: bool,
}

fn facet_scope(space: Space) -> Result<()> {
    let (r, s) = (space.r() as usize, space.s());
    if s != r + 2 && s != r + 3 {
        return Err(Error::Unsupported(format!(
            "facet description covers s = r+2 and r+3 only, got {space}"
        )));
    }
    Ok(())
}

/// Inclusive t-range for the B facets: -1 ..= l + alpha with r = 2l + alpha.
fn beta_t_max(r: u32) -> i64 {
    (r / 2 + r % 2) as i64
}

/// Every facet id legal on the space, in reporting order: A_0.., A'_0..,
/// then B by ascending t with index sets in lexicographic order.
fn facet_ids(space: Space) -> Result<Vec<FacetId>> {
    facet_scope(space)?;
    let (r, s) = (space.r() as usize, space.s());
    let mut out = Vec::new();
    for i in 0..s {
        out.push(FacetId::A { i });
    }
    for i in 0..s {
        out.push(FacetId::APrime { i });
    }
    if s == r + 3 {
        for t in -1..=beta_t_max(space.r()) {
            let size = r as i64 - 2 * t + 1;
            if size < 0 || size as usize > s {
                continue;
            }
            for set in (0..s).combinations(size as usize) {
                out.push(FacetId::B { t, set });
            }
        }
    }
    Ok(out)
}

/// The beta curve class: degree (t+1)r - t, multiplicity t+1 on `set`, t off.
pub fn beta_ray(space: Space, t: i64, set: &[usize]) -> Result<CurveClass> {
    facet_scope(space)?;
    let r = space.r() as i64;
    if t < -1 || t > beta_t_max(space.r()) || set.len() != (r - 2 * t + 1).max(0) as usize {
        return Err(Error::BadIndices(format!(
            "illegal beta parameters t={t}, |I|={}",
            set.len()
        )));
    }
    let mut m = vec![BigInt::from(t); space.s()];
    for &i in set {
        if i >= space.s() {
            return Err(Error::BadIndices(format!("label {i} out of range")));
        }
        m[i] = BigInt::from(t + 1);
    }
    Ok(CurveClass::rebuild(space, BigInt::from((t + 1) * r - t), m))
}

/// The curve ray dual to a facet.
pub fn facet_ray(space: Space, id: &FacetId) -> Result<CurveClass> {
    facet_scope(space)?;
    let s = space.s();
    match id {
        FacetId::A { i } => {
            if *i >= s {
                return Err(Error::BadIndices(format!("label {i} out of range")));
            }
            let mut m = vec![BigInt::zero(); s];
            m[*i] = BigInt::from(1);
            Ok(CurveClass::rebuild(space, BigInt::from(1), m))
        }
        FacetId::APrime { i } => {
            if *i >= s {
                return Err(Error::BadIndices(format!("label {i} out of range")));
            }
            let mut m = vec![BigInt::from(1); s];
            m[*i] = BigInt::zero();
            Ok(CurveClass::rebuild(space, BigInt::from(space.r()), m))
        }
        FacetId::B { t, set } => beta_ray(space, *t, set),
    }
}

/// Evaluate every facet inequality on D. D is effective iff all satisfied.
pub fn effective_membership(d: &DivisorClass) -> Result<Vec<FacetReport>> {
    let space = d.space();
    let ids = facet_ids(space)?;
    let r = BigInt::from(space.r());
    let total: BigInt = d.mults().iter().sum();
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        let value = match &id {
            FacetId::A { i } => d.degree() - &d.mults()[*i],
            FacetId::APrime { i } => &r * d.degree() - (&total - &d.mults()[*i]),
            FacetId::B { t, set } => {
                let tt = BigInt::from(*t);
                let marked: BigInt = set.iter().map(|&i| &d.mults()[i]).sum();
                ((&tt + 1) * &r - &tt) * d.degree() - &tt * &total - marked
            }
        };
        let satisfied = !value.is_negative();
        out.push(FacetReport {
            id,
            value,
            satisfied,
        });
    }
    Ok(out)
}

pub fn is_effective(d: &DivisorClass) -> Result<bool> {
    Ok(effective_membership(d)?.iter().all(|f| f.satisfied))
}

/// All extremal rays of the movable cone on r+3 points, in facet order.
pub fn movable_extremal_rays(space: Space) -> Result<Vec<CurveClass>> {
    if space.s() != space.r() as usize + 3 {
        return Err(Error::Unsupported(format!(
            "extremal rays are described on r+3 points only, got {space}"
        )));
    }
    facet_ids(space)?
        .iter()
        .map(|id| facet_ray(space, id))
        .collect()
}

/// What one Cremona step at the r+1 lowest multiplicities does to a beta ray.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BetaStep {
    /// Lands on the beta family at t+1.
    Advances { from: CurveClass, to: CurveClass },
    /// The class is fixed (even r at the top of the t-range).
    Fixed { class: CurveClass },
    /// Lands back on the family at t-1 (odd r at the top of the t-range).
    Retreats { from: CurveClass, to: CurveClass },
}

/// Apply the Cremona transformation centered at the r+1 lowest
/// multiplicities of beta_{t,I} and identify the resulting shape within the
/// beta family.
pub fn cremona_to_beta(space: Space, t: i64) -> Result<BetaStep> {
    let (r, s) = (space.r() as usize, space.s());
    if s != r + 3 {
        return Err(Error::Unsupported(format!(
            "beta rays live on r+3 points, got {space}"
        )));
    }
    let t_max = beta_t_max(space.r());
    if t < -1 || t > t_max {
        return Err(Error::BadIndices(format!(
            "t={t} outside the legal range -1..={t_max}"
        )));
    }
    let size = (space.r() as i64 - 2 * t + 1) as usize;
    let from = beta_ray(space, t, &(0..size).collect::<Vec<_>>())?;
    // r+1 lowest multiplicities, ties to the lowest labels
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by(|&a, &b| from.mults()[a].cmp(&from.mults()[b]).then(a.cmp(&b)));
    let idx = IndexSet::new(space, order[..r + 1].to_vec())?;
    let image = canonicalize(&cremona_curve(&from, &idx)?);
    let shape_at = |tt: i64| -> Result<CurveClass> {
        let size = (space.r() as i64 - 2 * tt + 1) as usize;
        Ok(canonicalize(&beta_ray(space, tt, &(0..size).collect::<Vec<_>>())?).into_class())
    };
    if t < t_max && image.class() == &shape_at(t + 1)? {
        return Ok(BetaStep::Advances {
            from,
            to: image.into_class(),
        });
    }
    if image == canonicalize(&from) {
        return Ok(BetaStep::Fixed { class: from });
    }
    if t > -1 && image.class() == &shape_at(t - 1)? {
        return Ok(BetaStep::Retreats {
            from,
            to: image.into_class(),
        });
    }
    Err(Error::Unsupported(format!(
        "Cremona image {} of beta_{t} left the beta family",
        image.class()
    )))
}

// ---------------------------------------------------------------------------
// The Z_{>=0} screen
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NonNegVerdict {
    /// intersect(D, c) >= 0 for every labelled member of the full orbit.
    Yes { shapes: usize },
    /// A labelled orbit member meets c negatively; first shape in canonical
    /// order, labelled to minimize the pairing.
    No { witness: DivisorClass, value: BigInt },
    /// Enumeration truncated with no violation found so far.
    Unknown { bound: BoundHit, shapes: usize },
}

/// Does c meet every divisor in the Weyl orbit of H - E_1 - ... - E_{r-1}
/// non-negatively? Per orbit shape the minimal pairing over relabellings is
/// deg_D*deg_c minus the descending-sorted dot product (rearrangement), so
/// only canonical representatives are scanned.
pub fn zero_divisorial_nonneg(c: &CurveClass, bounds: &OrbitBounds) -> Result<NonNegVerdict> {
    let space = c.space();
    let (r, s) = (space.r() as usize, space.s());
    if s < r - 1 {
        return Err(Error::Precondition(format!(
            "the (0)-divisorial seed needs {} points, {space} has {s}",
            r - 1
        )));
    }
    let mut m = vec![BigInt::zero(); s];
    for slot in m.iter_mut().take(r - 1) {
        *slot = BigInt::from(1);
    }
    let seed = DivisorClass::rebuild(space, BigInt::from(1), m);
    let orbit = enumerate_orbit(&seed, bounds);
    let mut c_desc = c.mults().to_vec();
    c_desc.sort();
    c_desc.reverse();
    for shape in &orbit.representatives {
        let d = shape.class();
        let dot: BigInt = d.mults().iter().zip(&c_desc).map(|(a, b)| a * b).sum();
        let min = d.degree() * c.degree() - dot;
        if min.is_negative() {
            // realize the minimizing labelling: largest divisor entries on
            // the largest multiplicities of c
            let mut order: Vec<usize> = (0..s).collect();
            order.sort_by(|&a, &b| c.mults()[b].cmp(&c.mults()[a]).then(a.cmp(&b)));
            let mut wm = vec![BigInt::zero(); s];
            for (entry, &pos) in d.mults().iter().zip(&order) {
                wm[pos] = entry.clone();
            }
            let witness = DivisorClass::rebuild(space, d.degree().clone(), wm);
            debug_assert_eq!(intersect(&witness, c)?, min);
            return Ok(NonNegVerdict::No {
                witness,
                value: min,
            });
        }
    }
    if orbit.complete {
        Ok(NonNegVerdict::Yes {
            shapes: orbit.representatives.len(),
        })
    } else {
        Ok(NonNegVerdict::Unknown {
            bound: orbit.bound_hit.expect("incomplete orbit reports its bound"),
            shapes: orbit.representatives.len(),
        })
    }
}

// ---------------------------------------------------------------------------
// Base-locus orthogonality audit
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// A detected curve crosses a detected hyperplane positively. A negative
    /// value means the curve lies inside the hyperplane and is not flagged:
    /// the orthogonality statement only rules out positive crossings.
    CurveHyperplane {
        curve: usize,
        hyperplane: usize,
        value: BigInt,
    },
    /// Two detected hyperplanes pair non-trivially under <.,.>_1.
    HyperplanePair {
        first: usize,
        second: usize,
        value: BigInt,
    },
}

/// Negative-pairing classes detected against D with all pairwise values.
/// The orthogonality statements apply to effective divisors in ranges where
/// the orbits are understood; outside them the report is informational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AuditReport {
    /// Labelled (-1)-Weyl hyperplanes G with <D,G>_1 < 0.
    pub hyperplanes: Vec<DivisorClass>,
    /// Labelled (-1)-Weyl lines C with d >= 1, m >= 0, and (D.C) < 0.
    pub curves: Vec<CurveClass>,
    /// (curve index, hyperplane index, (C.G)) for every detected pair.
    pub curve_hyperplane: Vec<(usize, usize, BigInt)>,
    /// (i, j, <G_i,G_j>_1) over detected hyperplane pairs, i < j.
    pub hyperplane_pairs: Vec<(usize, usize, BigInt)>,
    /// (i, j, <C_i,C_j>_1) over detected curve pairs, i < j; informational
    /// only (curve-curve orthogonality is known to fail).
    pub curve_pairs: Vec<(usize, usize, BigInt)>,
    pub violations: Vec<Violation>,
    /// Both source orbits closed within the bounds.
    pub complete: bool,
}

/// All orderings of a descending multiset, in lexicographically descending
/// order.
fn distinct_permutations(vals: &[BigInt]) -> Vec<Vec<BigInt>> {
    fn rec(
        pool: &mut Vec<(BigInt, usize)>,
        acc: &mut Vec<BigInt>,
        n: usize,
        out: &mut Vec<Vec<BigInt>>,
    ) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for k in 0..pool.len() {
            if pool[k].1 == 0 {
                continue;
            }
            pool[k].1 -= 1;
            acc.push(pool[k].0.clone());
            rec(pool, acc, n, out);
            acc.pop();
            pool[k].1 += 1;
        }
    }
    let mut pool: Vec<(BigInt, usize)> = Vec::new();
    for v in vals {
        match pool.iter_mut().find(|(w, _)| w == v) {
            Some((_, n)) => *n += 1,
            None => pool.push((v.clone(), 1)),
        }
    }
    let mut out = Vec::new();
    rec(&mut pool, &mut Vec::new(), vals.len(), &mut out);
    out
}

/// Enumerate the (-1)-orbits on both sides of D, detect the negative
/// pairings, and cross-tabulate.
pub fn base_locus_orthogonality_audit(
    d: &DivisorClass,
    bounds: &OrbitBounds,
) -> Result<AuditReport> {
    let space = d.space();
    let s = space.s();
    let mut d_desc = d.mults().to_vec();
    d_desc.sort();
    d_desc.reverse();
    let rm1 = BigInt::from(space.r() - 1);

    // hyperplane side: orbit of the exceptional divisor class
    let mut hyperplanes = Vec::new();
    let mut g_complete = true;
    if s >= 1 {
        let mut m = vec![BigInt::zero(); s];
        m[0] = BigInt::from(-1);
        let seed = DivisorClass::rebuild(space, BigInt::zero(), m);
        let orbit = enumerate_orbit(&seed, bounds);
        g_complete = orbit.complete;
        for shape in &orbit.representatives {
            let g = shape.class();
            let max_dot: BigInt = g.mults().iter().zip(&d_desc).map(|(a, b)| a * b).sum();
            if &rm1 * d.degree() * g.degree() - max_dot >= BigInt::zero() {
                continue; // even the minimal pairing is non-negative
            }
            for perm in distinct_permutations(g.mults()) {
                let cand = DivisorClass::rebuild(space, g.degree().clone(), perm);
                if bilinear_divisor(d, &cand)?.is_negative() {
                    hyperplanes.push(cand);
                }
            }
        }
    }

    // curve side: orbit of the line, effective candidates only
    let mut curves = Vec::new();
    let mut c_complete = true;
    if s >= 2 {
        let mut m = vec![BigInt::zero(); s];
        m[0] = BigInt::from(1);
        m[1] = BigInt::from(1);
        let seed = CurveClass::rebuild(space, BigInt::from(1), m);
        let orbit = enumerate_orbit(&seed, bounds);
        c_complete = orbit.complete;
        for shape in &orbit.representatives {
            let c = shape.class();
            if !c.degree().is_positive() || c.mults().iter().any(|v| v.is_negative()) {
                continue;
            }
            let max_dot: BigInt = c.mults().iter().zip(&d_desc).map(|(a, b)| a * b).sum();
            if d.degree() * c.degree() - max_dot >= BigInt::zero() {
                continue;
            }
            for perm in distinct_permutations(c.mults()) {
                let cand = CurveClass::rebuild(space, c.degree().clone(), perm);
                if intersect(d, &cand)?.is_negative() {
                    curves.push(cand);
                }
            }
        }
    }

    let mut curve_hyperplane = Vec::new();
    let mut violations = Vec::new();
    for (ci, c) in curves.iter().enumerate() {
        for (gi, g) in hyperplanes.iter().enumerate() {
            let v = intersect(g, c)?;
            if v.is_positive() {
                violations.push(Violation::CurveHyperplane {
                    curve: ci,
                    hyperplane: gi,
                    value: v.clone(),
                });
            }
            curve_hyperplane.push((ci, gi, v));
        }
    }
    let mut hyperplane_pairs = Vec::new();
    for i in 0..hyperplanes.len() {
        for j in i + 1..hyperplanes.len() {
            let v = bilinear_divisor(&hyperplanes[i], &hyperplanes[j])?;
            if !v.is_zero() {
                violations.push(Violation::HyperplanePair {
                    first: i,
                    second: j,
                    value: v.clone(),
                });
            }
            hyperplane_pairs.push((i, j, v));
        }
    }
    let mut curve_pairs = Vec::new();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            curve_pairs.push((i, j, bilinear_curve(&curves[i], &curves[j])?));
        }
    }
    Ok(AuditReport {
        hyperplanes,
        curves,
        curve_hyperplane,
        hyperplane_pairs,
        curve_pairs,
        violations,
        complete: g_complete && c_complete,
    })
}
