//! Cremona transformations, projections, and the reduction algorithm.
//!
//! The standard Cremona transformation phi_I is based at r+1 of the s blown-up
//! points, indexed by a set I of 0-based labels. On curve classes it sends
//! (d; m) to (d + (r-1)t; m_i + t for i in I) with t = d - sum_{i in I} m_i;
//! on divisor classes the step is t_1 = (r-1)d - sum_{i in I} m_i with new
//! degree d + t_1 and the same multiplicity update. Both maps are involutions
//! and preserve every pairing in `chowcore`, fix K and F, and commute with
//! relabelling the points: phi_{sigma(I)}(sigma(x)) = sigma(phi_I(x)).
//!
//! `cremona_reduce` repeatedly applies phi at the r+1 largest multiplicities
//! (ties broken toward the lowest labels), which strictly decreases the degree
//! until the class is Cremona reduced. The returned trace replays exactly.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chowcore::{ChowClass, CurveClass, Space};
use crate::{Error, Result};

/// A set of r+1 distinct 0-based point labels, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(space: Space, mut labels: Vec<usize>) -> Result<Self> {
        labels.sort_unstable();
        let need = space.r() as usize + 1;
        if labels.len() != need {
            return Err(Error::BadIndices(format!(
                "{} labels on {space} (need r+1 = {need})",
                labels.len()
            )));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadIndices("repeated label".into()));
        }
        if labels.last().is_some_and(|&l| l >= space.s()) {
            return Err(Error::BadIndices(format!(
                "label {} out of range for {space}",
                labels.last().unwrap()
            )));
        }
        Ok(IndexSet(labels))
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// phi_I on either kind of class; see the module header for the formulas.
pub fn cremona<C: ChowClass>(x: &C, idx: &IndexSet) -> Result<C> {
    if idx.labels().last().is_some_and(|&l| l >= x.space().s()) || idx.labels().len() != x.space().r() as usize + 1 {
        return Err(Error::BadIndices(format!(
            "{idx} is not an index set on {}",
            x.space()
        )));
    }
    let picked: BigInt = idx.labels().iter().map(|&i| &x.mults()[i]).sum();
    let t = x.cremona_t(&picked);
    let d2 = x.degree_after(&t);
    let mut m2 = x.mults().to_vec();
    for &i in idx.labels() {
        m2[i] += &t;
    }
    Ok(C::rebuild(x.space(), d2, m2))
}

pub fn cremona_curve(c: &CurveClass, idx: &IndexSet) -> Result<CurveClass> {
    cremona(c, idx)
}

pub fn cremona_divisor(
    d: &crate::chowcore::DivisorClass,
    idx: &IndexSet,
) -> Result<crate::chowcore::DivisorClass> {
    cremona(d, idx)
}

/// Projection from the i-th point: (d; m) on Y^r_s |-> (d - m_i; m with entry
/// i removed) on Y^{r-1}_{s-1}. Needs r >= 3 so the target is still a blow-up
/// of projective space of dimension >= 2.
pub fn project(c: &CurveClass, i: usize) -> Result<CurveClass> {
    let space = c.space();
    if space.r() < 3 {
        return Err(Error::Unsupported(format!(
            "projection needs r >= 3, got {space}"
        )));
    }
    if i >= space.s() {
        return Err(Error::BadIndices(format!(
            "point {i} out of range for {space}"
        )));
    }
    let target = Space::new(space.r() - 1, space.s() - 1)?;
    let d = c.degree() - &c.mults()[i];
    let m = c
        .mults()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, v)| v.clone())
        .collect();
    CurveClass::new(target, d, m)
}

/// Degree-drop screen for iterated projection: with multiplicities sorted in
/// non-increasing order, an irreducible candidate should satisfy
/// d + m_(1) <= sum_{i >= 2} m_(i); returns true when the inequality holds.
pub fn projection_expectation_screen(c: &CurveClass) -> bool {
    let mut m = c.mults().to_vec();
    m.sort_unstable_by(|a, b| b.cmp(a));
    if m.is_empty() {
        return false;
    }
    let tail: BigInt = m[1..].iter().sum();
    c.degree() + &m[0] <= tail
}

/// Why `cremona_reduce` stopped.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StopReason {
    /// d >= 2 and d >= the sum of the r+1 largest multiplicities.
    Inequality,
    /// d < 2; every Cremona step at most permutes such classes.
    SmallDegree,
    /// s < r+1, so no Cremona transformation exists on this space.
    NoCremona,
}

/// A witnessed run of the reduction algorithm. When `canonical_replay` is
/// false the steps replay verbatim from `start`; when true they replay up to
/// sorting multiplicities after each step (traces reconstructed from orbit
/// searches over sorted representatives).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace<C: ChowClass> {
    pub start: C,
    pub steps: Vec<IndexSet>,
    pub end: C,
    pub canonical_replay: bool,
    pub stop: StopReason,
}

impl<C: ChowClass> ReductionTrace<C> {
    /// Re-run the recorded steps and check they land on `end`.
    pub fn replay(&self) -> Result<bool> {
        let mut cur = self.start.clone();
        for idx in &self.steps {
            cur = cremona(&cur, idx)?;
            if self.canonical_replay {
                let mut m = cur.mults().to_vec();
                m.sort_unstable_by(|a, b| b.cmp(a));
                cur = C::rebuild(cur.space(), cur.degree().clone(), m);
            }
        }
        if !self.canonical_replay {
            return Ok(cur == self.end);
        }
        let mut want = self.end.mults().to_vec();
        want.sort_unstable_by(|a, b| b.cmp(a));
        Ok(cur.degree() == self.end.degree() && cur.mults() == want)
    }
}

/// Labels of the r+1 largest multiplicities, ties toward the lowest labels.
fn top_labels(c: &CurveClass) -> Vec<usize> {
    let mut order: Vec<usize> = (0..c.space().s()).collect();
    order.sort_by(|&a, &b| c.mults()[b].cmp(&c.mults()[a]).then(a.cmp(&b)));
    let mut top: Vec<usize> = order[..c.space().r() as usize + 1].to_vec();
    top.sort_unstable();
    top
}

/// True when no Cremona step can lower the degree: either d < 2, or d is at
/// least the sum of the r+1 largest multiplicities, or s < r+1 (no step
/// exists at all).
pub fn is_cremona_reduced(c: &CurveClass) -> bool {
    let space = c.space();
    if space.s() < space.r() as usize + 1 {
        return true;
    }
    if c.degree() < &BigInt::from(2) {
        return true;
    }
    let top_sum: BigInt = top_labels(c).iter().map(|&i| &c.mults()[i]).sum();
    c.degree() >= &top_sum
}

/// Greedy reduction: apply phi at the r+1 largest multiplicities while that
/// strictly lowers the degree. Terminates because degrees are positive and
/// strictly decreasing along the run.
pub fn cremona_reduce(c: &CurveClass) -> ReductionTrace<CurveClass> {
    let space = c.space();
    let mut cur = c.clone();
    let mut steps = Vec::new();
    let stop = loop {
        if space.s() < space.r() as usize + 1 {
            break StopReason::NoCremona;
        }
        if cur.degree() < &BigInt::from(2) {
            break StopReason::SmallDegree;
        }
        let labels = top_labels(&cur);
        let top_sum: BigInt = labels.iter().map(|&i| &cur.mults()[i]).sum();
        if cur.degree() >= &top_sum {
            break StopReason::Inequality;
        }
        let idx = IndexSet::new(space, labels).expect("top labels form an index set");
        cur = cremona(&cur, &idx).expect("index set fits the space");
        steps.push(idx);
    };
    ReductionTrace {
        start: c.clone(),
        steps,
        end: cur,
        canonical_replay: false,
        stop,
    }
}

/// One violated necessary condition for irreducibility.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScreenViolation {
    /// m_i outside [0, d] (0-based label).
    MultiplicityRange { label: usize },
    /// d >= 2 but d < m_i + m_j (0-based labels, i < j).
    PairSum { labels: (usize, usize) },
    /// With multiplicities sorted non-increasingly, d < m_(1)+..+m_(k) for
    /// some k <= r, yet a later multiplicity (at sorted position `position`,
    /// 0-based) is still nonzero.
    TailSupport { k: usize, position: usize },
}

/// Necessary conditions for (d; m) to be the class of an irreducible curve
/// through general points; returns every violation found.
pub fn irreducibility_screen(c: &CurveClass) -> Vec<ScreenViolation> {
    let mut out = Vec::new();
    let d = c.degree();
    let zero = BigInt::zero();
    for (i, v) in c.mults().iter().enumerate() {
        if v < &zero || v > d {
            out.push(ScreenViolation::MultiplicityRange { label: i });
        }
    }
    if d >= &BigInt::from(2) {
        for i in 0..c.mults().len() {
            for j in i + 1..c.mults().len() {
                if d < &(&c.mults()[i] + &c.mults()[j]) {
                    out.push(ScreenViolation::PairSum { labels: (i, j) });
                }
            }
        }
    }
    // sorted-tail condition: once the top k <= r multiplicities already
    // exceed d, the remaining ones must vanish
    let mut sorted = c.mults().to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut prefix = BigInt::zero();
    for k in 1..=(c.space().r() as usize).min(sorted.len()) {
        prefix += &sorted[k - 1];
        if d < &prefix {
            for (pos, v) in sorted.iter().enumerate().skip(k) {
                if !v.is_zero() {
                    out.push(ScreenViolation::TailSupport { k, position: pos });
                }
            }
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chowcore::{
        anticanonical_curve_class, canonical_class, intersect, q_curve, q_divisor, DivisorClass,
    };

    fn sp(r: u32, s: usize) -> Space {
        Space::new(r, s).unwrap()
    }

    fn idx(space: Space, labels: &[usize]) -> IndexSet {
        IndexSet::new(space, labels.to_vec()).unwrap()
    }

    #[test]
    fn index_set_validation() {
        let space = sp(3, 6);
        assert!(IndexSet::new(space, vec![0, 1, 2]).is_err()); // too few
        assert!(IndexSet::new(space, vec![0, 1, 2, 2]).is_err()); // repeat
        assert!(IndexSet::new(space, vec![0, 1, 2, 6]).is_err()); // out of range
        assert_eq!(idx(space, &[3, 0, 2, 1]).labels(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cremona_is_an_involution_preserving_pairings() {
        let space = sp(3, 6);
        let i = idx(space, &[0, 1, 2, 3]);
        let c = CurveClass::from_ints(space, 7, &[4, 3, 2, 1, 0, -1]).unwrap();
        let d = DivisorClass::from_ints(space, 5, &[3, 3, 2, 1, 1, 0]).unwrap();

        let c2 = cremona_curve(&c, &i).unwrap();
        let d2 = cremona_divisor(&d, &i).unwrap();
        assert_eq!(cremona_curve(&c2, &i).unwrap(), c);
        assert_eq!(cremona_divisor(&d2, &i).unwrap(), d);

        assert_eq!(q_curve(&c2), q_curve(&c));
        assert_eq!(q_divisor(&d2), q_divisor(&d));
        assert_eq!(intersect(&d2, &c2).unwrap(), intersect(&d, &c).unwrap());

        // K and F are fixed points
        let k = canonical_class(space);
        let f = anticanonical_curve_class(space);
        assert_eq!(cremona_divisor(&k, &i).unwrap(), k);
        assert_eq!(cremona_curve(&f, &i).unwrap(), f);
    }

    #[test]
    fn permutation_equivariance() {
        let space = sp(3, 6);
        let c = CurveClass::from_ints(space, 9, &[5, 4, 3, 2, 1, 0]).unwrap();
        let perm = [2usize, 0, 4, 1, 5, 3]; // sigma: position j gets old entry perm[j]
        let sigma_c = CurveClass::new(
            space,
            c.degree().clone(),
            perm.iter().map(|&j| c.mults()[j].clone()).collect(),
        )
        .unwrap();
        let i = idx(space, &[0, 1, 2, 3]);
        // sigma(I): new label j is in sigma(I) iff old label perm[j] is in I
        let sigma_i = idx(
            space,
            &(0..6).filter(|&j| i.labels().contains(&perm[j])).collect::<Vec<_>>(),
        );
        let lhs = cremona_curve(&sigma_c, &sigma_i).unwrap();
        let rhs = cremona_curve(&c, &i).unwrap();
        let sigma_rhs = CurveClass::new(
            space,
            rhs.degree().clone(),
            perm.iter().map(|&j| rhs.mults()[j].clone()).collect(),
        )
        .unwrap();
        assert_eq!(lhs, sigma_rhs);
    }

    #[test]
    fn reduction_examples() {
        // the first step lands on (4; 3,3,1,0^4) up to ordering; that class
        // still admits a degree-lowering step, which sends the degree
        // negative, after which the d < 2 convention halts the run
        let space = sp(4, 7);
        let c = CurveClass::from_ints(space, 13, &[4, 3, 3, 3, 3, 3, 3]).unwrap();
        let tr = cremona_reduce(&c);
        assert_eq!(tr.steps.len(), 2);
        assert_eq!(tr.stop, StopReason::SmallDegree);
        assert!(tr.replay().unwrap());
        assert!(is_cremona_reduced(&tr.end));
        assert_eq!(tr.end.degree(), &BigInt::from(-5));

        let mid = cremona_curve(&c, &tr.steps[0]).unwrap();
        let mut m = mid.mults().to_vec();
        m.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(mid.degree(), &BigInt::from(4));
        assert_eq!(m, [3i64, 3, 1, 0, 0, 0, 0].map(BigInt::from).to_vec());
        // ... and that intermediate fails the pair-sum screen (4 < 3+3)
        assert!(irreducibility_screen(&mid)
            .iter()
            .any(|v| matches!(v, ScreenViolation::PairSum { .. })));
        // K-degree is constant along the trace
        let k = canonical_class(space);
        assert_eq!(
            intersect(&k, &c).unwrap(),
            intersect(&k, &tr.end).unwrap()
        );

        // already reduced: 7 >= 4+1+1+1
        let c2 = CurveClass::from_ints(sp(3, 10), 7, &[4, 1, 1, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        assert!(is_cremona_reduced(&c2));
        let tr2 = cremona_reduce(&c2);
        assert!(tr2.steps.is_empty());
        assert_eq!(tr2.end, c2);

        // lines reduce to themselves via SmallDegree
        let line = CurveClass::from_ints(sp(2, 3), 1, &[1, 1, 0]).unwrap();
        let tr3 = cremona_reduce(&line);
        assert_eq!(tr3.stop, StopReason::SmallDegree);

        // s < r+1: no Cremona exists, any degree counts as reduced
        let c4 = CurveClass::from_ints(sp(4, 3), 9, &[5, 5, 5]).unwrap();
        assert!(is_cremona_reduced(&c4));
        assert_eq!(cremona_reduce(&c4).stop, StopReason::NoCremona);
    }

    #[test]
    fn reduction_strictly_decreases_degree() {
        let space = sp(2, 8);
        let c = CurveClass::from_ints(space, 17, &[7, 7, 6, 5, 4, 3, 2, 2]).unwrap();
        let tr = cremona_reduce(&c);
        assert!(tr.replay().unwrap());
        let mut cur = tr.start.clone();
        let mut prev = cur.degree().clone();
        for step in &tr.steps {
            cur = cremona_curve(&cur, step).unwrap();
            assert!(cur.degree() < &prev);
            prev = cur.degree().clone();
        }
        assert!(is_cremona_reduced(&tr.end));
    }

    #[test]
    fn projection_drops_a_point_and_commutes() {
        let space = sp(4, 7);
        let c = CurveClass::from_ints(space, 13, &[4, 3, 3, 3, 3, 3, 3]).unwrap();
        let p = project(&c, 0).unwrap();
        assert_eq!(p.space(), sp(3, 6));
        assert_eq!(p.degree(), &BigInt::from(9));
        assert_eq!(p.mults(), [3i64; 6].map(BigInt::from).to_vec());

        // pi_i . phi_I = phi_{I - {i}} . pi_i when i is in I
        let i_full = idx(space, &[0, 1, 2, 3, 4]);
        let left = project(&cremona_curve(&c, &i_full).unwrap(), 0).unwrap();
        let i_small = idx(sp(3, 6), &[0, 1, 2, 3]); // labels shift down past the dropped point
        let right = cremona_curve(&project(&c, 0).unwrap(), &i_small).unwrap();
        assert_eq!(left, right);

        // r = 2 has no projection
        assert!(project(&CurveClass::from_ints(sp(2, 3), 1, &[1, 0, 0]).unwrap(), 0).is_err());
    }

    #[test]
    fn expectation_screen() {
        let space = sp(3, 8);
        // d + m_(1) <= sum of the rest
        let good = CurveClass::from_ints(space, 4, &[2, 2, 2, 2, 1, 1, 1, 1]).unwrap();
        assert!(projection_expectation_screen(&good));
        let bad = CurveClass::from_ints(space, 9, &[3, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        assert!(!projection_expectation_screen(&bad));
    }

    #[test]
    fn screen_catches_each_condition() {
        let space = sp(3, 5);
        let neg = CurveClass::from_ints(space, 2, &[-1, 1, 0, 0, 0]).unwrap();
        assert!(matches!(
            irreducibility_screen(&neg)[0],
            ScreenViolation::MultiplicityRange { label: 0 }
        ));
        let over = CurveClass::from_ints(space, 1, &[2, 0, 0, 0, 0]).unwrap();
        assert!(irreducibility_screen(&over)
            .iter()
            .any(|v| matches!(v, ScreenViolation::MultiplicityRange { label: 0 })));
        let pair = CurveClass::from_ints(space, 3, &[2, 2, 0, 0, 0]).unwrap();
        assert!(irreducibility_screen(&pair)
            .iter()
            .any(|v| matches!(v, ScreenViolation::PairSum { labels: (0, 1) })));
        // top two mults exceed d but a third is nonzero
        let tail = CurveClass::from_ints(space, 3, &[2, 2, 1, 0, 0]).unwrap();
        assert!(irreducibility_screen(&tail)
            .iter()
            .any(|v| matches!(v, ScreenViolation::TailSupport { k: 2, position: 2 })));
        // clean class: no violations
        let line = CurveClass::from_ints(space, 1, &[1, 1, 0, 0, 0]).unwrap();
        assert!(irreducibility_screen(&line).is_empty());
        let f = anticanonical_curve_class(space);
        assert!(irreducibility_screen(&f).is_empty());
    }
}
