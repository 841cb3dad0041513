//! Classification predicates for curve classes: numerical (i)-types, the
//! quadratic signature, Weyl-class membership with witnesses, the mF + c'
//! decomposition on r+3 points, dimension formulas, the planar rationality
//! equivalences, and the divisorial numerical types.
//!
//! A numerical (i)-class satisfies <c,F> = 2 + i(r-1); a Weyl (i)-class
//! additionally lies in the Weyl orbit of the degree-1 seed for its type
//! (h - e_1 - e_2, h - e_1, or h for i = -1, 0, 1). Both the pairing against
//! F and q_curve are Weyl-invariant, so they filter candidates before any
//! orbit search runs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chowcore::{
    anticanonical_curve_class, bilinear_curve, canonical_class, intersect, q_curve, q_divisor,
    ChowClass, CurveClass, DivisorClass, Space,
};
use crate::cremona::{
    cremona_reduce, irreducibility_screen, is_cremona_reduced, ReductionTrace, ScreenViolation,
};
use crate::weylorbits::{
    canonicalize, is_weyl_finite, orbit_with_parents, trace_via_parents, BoundHit, Canonical,
    OrbitBounds,
};
use crate::{Error, Result};

/// <c,F> target for a numerical (i)-class.
fn pairing_target(space: Space, i: i8) -> BigInt {
    BigInt::from(2) + BigInt::from(i) * BigInt::from(space.r() - 1)
}

/// q_curve target for an (i)-Weyl class: 1 + (i-1)(r-1).
fn quadratic_target(space: Space, i: i8) -> BigInt {
    BigInt::from(1) + BigInt::from(i - 1) * BigInt::from(space.r() - 1)
}

/// The i in {-1,0,1} with <c,F> = 2 + i(r-1), if any.
pub fn numerical_type(c: &CurveClass) -> Option<i8> {
    let f = anticanonical_curve_class(c.space());
    let p = bilinear_curve(c, &f).expect("same space");
    (-1..=1).find(|&i| p == pairing_target(c.space(), i))
}

/// The i in {-1,0,1} with q_curve(c) = 1 + (i-1)(r-1), if any.
pub fn quadratic_signature(c: &CurveClass) -> Option<i8> {
    let q = q_curve(c);
    (-1..=1).find(|&i| q == quadratic_target(c.space(), i))
}

/// The degree-1 orbit seed for type i: h - e_1 - e_2, h - e_1, or h.
pub fn weyl_seed(space: Space, i: i8) -> Result<CurveClass> {
    let need = match i {
        -1 => 2,
        0 => 1,
        1 => 0,
        _ => {
            return Err(Error::Unsupported(format!(
                "numerical type {i} (expected -1, 0, or 1)"
            )))
        }
    };
    if space.s() < need {
        return Err(Error::Precondition(format!(
            "the ({i})-seed needs {need} points, {space} has {}",
            space.s()
        )));
    }
    let mut m = vec![0i64; space.s()];
    for slot in m.iter_mut().take(need) {
        *slot = 1;
    }
    CurveClass::from_ints(space, 1, &m)
}

/// Grounds for a definite "not a Weyl class".
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NoWitness {
    /// <c,F> or q_curve differs from the seed's Weyl-invariant values.
    InvariantMismatch { pairing: BigInt, quadratic: BigInt },
    /// Greedy reduction (or a completed orbit search) ended at this class,
    /// which is not the seed: a Cremona reduced class of degree >= 2 with
    /// non-negative multiplicities is never a Weyl class.
    ReducedWitness { witness: CurveClass },
    /// The space has too few points to contain the seed at all.
    NoSeed,
}

/// Answer of `is_weyl_class`, always carrying evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeylVerdict {
    /// In the orbit; the trace connects the class and the seed (its `start`
    /// and `end` fields say in which direction it replays).
    Yes { trace: ReductionTrace<CurveClass> },
    No { reason: NoWitness },
    /// Bounded search was inconclusive.
    Unknown { bound: BoundHit },
}

/// Decide whether c lies in the Weyl orbit of the (i)-seed.
///
/// Order of attack: invariant filter; greedy reduction (a hit is an exact
/// replayable witness); on finite-Weyl spaces a full orbit enumeration of the
/// seed settles membership either way; otherwise a reduced end with degree
/// >= 2 and non-negative multiplicities is a definite no, and degenerate ends
/// fall back to bounded searches from both sides.
pub fn is_weyl_class(c: &CurveClass, i: i8, bounds: &OrbitBounds) -> Result<WeylVerdict> {
    let space = c.space();
    let seed = match weyl_seed(space, i) {
        Ok(seed) => seed,
        Err(Error::Precondition(_)) => {
            return Ok(WeylVerdict::No {
                reason: NoWitness::NoSeed,
            })
        }
        Err(e) => return Err(e),
    };
    let f = anticanonical_curve_class(space);
    let pairing = bilinear_curve(c, &f)?;
    let quadratic = q_curve(c);
    if pairing != pairing_target(space, i) || quadratic != quadratic_target(space, i) {
        return Ok(WeylVerdict::No {
            reason: NoWitness::InvariantMismatch { pairing, quadratic },
        });
    }

    let seed_canon = canonicalize(&seed);
    let trace = cremona_reduce(c);
    if canonicalize(&trace.end) == seed_canon {
        return Ok(WeylVerdict::Yes { trace });
    }
    let c_canon = canonicalize(c);

    if is_weyl_finite(space) {
        let pm = orbit_with_parents(&seed, bounds);
        if let Some(tr) = trace_via_parents(&pm, c_canon.class(), trace.stop) {
            return Ok(WeylVerdict::Yes { trace: tr });
        }
        if pm.complete {
            return Ok(WeylVerdict::No {
                reason: NoWitness::ReducedWitness { witness: trace.end },
            });
        }
        return Ok(WeylVerdict::Unknown {
            bound: pm.bound_hit.expect("incomplete orbit reports its bound"),
        });
    }

    let end_nonneg = trace.end.mults().iter().all(|m| !m.is_negative());
    if is_cremona_reduced(&trace.end) && trace.end.degree() >= &BigInt::from(2) && end_nonneg {
        return Ok(WeylVerdict::No {
            reason: NoWitness::ReducedWitness { witness: trace.end },
        });
    }

    // degenerate end on an infinite-Weyl space: search from the seed, then
    // from the class; a completed closure on either side is decisive
    let pm = orbit_with_parents(&seed, bounds);
    if let Some(tr) = trace_via_parents(&pm, c_canon.class(), trace.stop) {
        return Ok(WeylVerdict::Yes { trace: tr });
    }
    if pm.complete {
        return Ok(WeylVerdict::No {
            reason: NoWitness::ReducedWitness { witness: trace.end },
        });
    }
    let pm2 = orbit_with_parents(c, bounds);
    if let Some(tr) = trace_via_parents(&pm2, seed_canon.class(), trace.stop) {
        return Ok(WeylVerdict::Yes { trace: tr });
    }
    if pm2.complete {
        return Ok(WeylVerdict::No {
            reason: NoWitness::ReducedWitness { witness: trace.end },
        });
    }
    Ok(WeylVerdict::Unknown {
        bound: pm
            .bound_hit
            .or(pm2.bound_hit)
            .expect("incomplete orbit reports its bound"),
    })
}

// ---------------------------------------------------------------------------
// Exhaustive (-1)-invariant scans
// ---------------------------------------------------------------------------

/// All canonical classes with 1 <= d <= max_degree, non-negative
/// multiplicities, <c,F> = 3-r, and q_curve(c) = 3-2r. Pure arithmetic over
/// the two Diophantine constraints; no orbit search and no space restriction.
pub fn minus1_invariant_scan(space: Space, max_degree: i64) -> BTreeSet<Canonical<CurveClass>> {
    let r = space.r() as i64;
    let s = space.s();
    let mut out = BTreeSet::new();
    for d in 1..=max_degree {
        // sum and sum-of-squares targets from the two invariants
        let sum_num = (r + 1) * d + r - 3;
        let sq_num = d * d + 2 * r - 3;
        if sum_num % (r - 1) != 0 || sq_num % (r - 1) != 0 {
            continue;
        }
        let target_sum = BigInt::from(sum_num / (r - 1));
        let target_sq = BigInt::from(sq_num / (r - 1));
        if target_sum.is_negative() || target_sq.is_negative() {
            continue;
        }
        let mut acc: Vec<BigInt> = Vec::new();
        let cap = target_sum.clone().min(target_sq.sqrt());
        descend(&target_sum, &target_sq, &cap, s, &mut acc, &mut |m| {
            let mut full = m.to_vec();
            full.resize(s, BigInt::zero());
            let c = CurveClass::rebuild(space, BigInt::from(d), full);
            out.insert(canonicalize(&c));
        });
    }
    out
}

/// Enumerate non-increasing positive vectors with the given sum and sum of
/// squares in at most `slots` entries.
fn descend(
    sum: &BigInt,
    sq: &BigInt,
    max_val: &BigInt,
    slots: usize,
    acc: &mut Vec<BigInt>,
    emit: &mut impl FnMut(&[BigInt]),
) {
    if sum.is_zero() {
        if sq.is_zero() {
            emit(acc);
        }
        return;
    }
    if slots == 0 || max_val.is_zero() {
        return;
    }
    let mut v = max_val.clone().min(sum.clone()).min(sq.sqrt());
    let one = BigInt::from(1);
    while v >= one {
        let rem_sum = sum - &v;
        let rem_sq = sq - &v * &v;
        let left = BigInt::from(slots as u64 - 1);
        // every later entry is <= v, so: rem_sum <= v * slots_left,
        // rem_sq <= v * rem_sum, and (Cauchy-Schwarz) rem_sum^2 <= rem_sq * slots_left
        if !rem_sq.is_negative()
            && rem_sum <= &v * &left
            && rem_sq <= &v * &rem_sum
            && &rem_sum * &rem_sum <= &rem_sq * &left
        {
            acc.push(v.clone());
            descend(&rem_sum, &rem_sq, &v, slots - 1, acc, emit);
            acc.pop();
        }
        v -= &one;
    }
}

/// The classes meeting both (-1)-invariants on a space with a finite Weyl
/// group (or on Y^5_9, where the same finite answer is known): a bounded
/// exhaustive scan whose degree cap per space makes it complete.
pub fn mds_minus1_solutions(space: Space) -> Result<BTreeSet<Canonical<CurveClass>>> {
    let r = space.r() as i64;
    let s = space.s() as i64;
    let exceptional = r == 5 && s == 9;
    if !is_weyl_finite(space) && !exceptional {
        return Err(Error::Unsupported(format!(
            "{space} has an infinite Weyl group and no finite solution list"
        )));
    }
    let dmax: i64 = if s <= r + 3 {
        r
    } else if s == r + 4 {
        match r {
            2 => 2,
            3 => 4,
            4 => 7,
            5 => 9,
            _ => unreachable!("no finite Weyl group at s = r+4 for r >= 6"),
        }
    } else {
        // only r = 2 reaches s = r+5 or r+6 with a finite group
        match s {
            7 => 3,
            8 => 7,
            _ => unreachable!("no finite Weyl group on Y^2_s for s >= 9"),
        }
    };
    Ok(minus1_invariant_scan(space, dmax))
}

// ---------------------------------------------------------------------------
// The mF + c' decomposition on r+3 points
// ---------------------------------------------------------------------------

/// Outcome of `one_class_decomposition`, always carrying the reduction trace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OneClassOutcome {
    /// Greedy reduction reached h: the class is a (1)-Weyl class.
    WeylLine { trace: ReductionTrace<CurveClass> },
    /// The reduced representative equals multiple*F + remainder with the
    /// remainder supported on at most r-2 points.
    Decomposition {
        multiple: BigInt,
        remainder: CurveClass,
        reduced: CurveClass,
        trace: ReductionTrace<CurveClass>,
    },
    /// No admissible multiple exists (always the case for even r when the
    /// reduced class is not h).
    NotDecomposable {
        reduced: CurveClass,
        trace: ReductionTrace<CurveClass>,
    },
}

/// Split a numerical (1)-class on Y^r_{r+3} along the F-direction: reduce
/// greedily, then look for c_reduced = mF + c' with 0 <= m <= (r+1)/4, all
/// remainder multiplicities non-negative and supported on the first r-2
/// sorted positions, and remainder degree (r+1)/2 - 2m (so r must be odd for
/// a nonzero outcome).
pub fn one_class_decomposition(c: &CurveClass) -> Result<OneClassOutcome> {
    let space = c.space();
    let (r, s) = (space.r() as usize, space.s());
    if s != r + 3 {
        return Err(Error::Precondition(format!(
            "decomposition lives on r+3 points, got {space}"
        )));
    }
    if numerical_type(c) != Some(1) {
        return Err(Error::Precondition(format!(
            "{c} is not a numerical (1)-class on {space}"
        )));
    }
    if c.mults().iter().any(|m| m.is_negative()) {
        return Err(Error::Precondition(format!(
            "{c} has a negative multiplicity"
        )));
    }
    let trace = cremona_reduce(c);
    let reduced = canonicalize(&trace.end).into_class();
    if reduced == canonicalize(&weyl_seed(space, 1)?).into_class() {
        return Ok(OneClassOutcome::WeylLine { trace });
    }
    let f = anticanonical_curve_class(space);
    for m in 0..=((r as i64 + 1) / 4) {
        let mult = BigInt::from(m);
        let rem_d = reduced.degree() - &mult * f.degree();
        let rem_m: Vec<BigInt> = reduced.mults().iter().map(|v| v - &mult).collect();
        if rem_d.is_negative() || rem_m.iter().any(|v| v.is_negative()) {
            continue;
        }
        // support confined to the first r-2 sorted positions
        if rem_m.iter().skip(r - 2).any(|v| !v.is_zero()) {
            continue;
        }
        let total: BigInt = rem_m.iter().sum();
        if total != rem_d {
            continue;
        }
        // remainder degree must be (r+1)/2 - 2m exactly
        if BigInt::from(2) * &rem_d != BigInt::from(r as i64 + 1) - BigInt::from(4 * m) {
            continue;
        }
        let remainder = CurveClass::rebuild(space, rem_d, rem_m);
        return Ok(OneClassOutcome::Decomposition {
            multiple: mult,
            remainder,
            reduced,
            trace,
        });
    }
    Ok(OneClassOutcome::NotDecomposable { reduced, trace })
}

// ---------------------------------------------------------------------------
// Dimension formulas
// ---------------------------------------------------------------------------

/// Virtual dimension (r+1)(d+1) - (r-1) sum(m) - 4; equals (-K.c) + (r-3).
pub fn vdim(c: &CurveClass) -> BigInt {
    let space = c.space();
    let total: BigInt = c.mults().iter().sum();
    BigInt::from(space.r() + 1) * (c.degree() + 1) - BigInt::from(space.r() - 1) * total
        - BigInt::from(4)
}

/// Euler characteristic of the normal bundle of a curve of arithmetic genus
/// g with class c: (r-3)(1-g) - (c.K). At g = 0 this is vdim(c).
pub fn chi_normal(c: &CurveClass, genus: u32) -> BigInt {
    let space = c.space();
    let k = canonical_class(space);
    let ck = intersect(&k, c).expect("same space");
    BigInt::from(space.r() as i64 - 3) * (BigInt::from(1) - BigInt::from(genus)) - ck
}

// ---------------------------------------------------------------------------
// Planar classification (r = 2)
// ---------------------------------------------------------------------------

/// The irreducible planar classes that satisfy an (i)-class numerical
/// condition without being Weyl lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlanarException {
    /// (3;1^8): the anticanonical class, a numerical (-1)-class of genus 1.
    AnticanonicalOn8Points,
    /// (3;1^7): the elliptic F-class, a numerical (0)-class.
    FClassOn7Points,
    /// (6;2^8): twice F, an irreducible numerical (0)-class.
    TwoFOn8Points,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanarReport {
    pub self_intersection: BigInt,
    pub k_degree: BigInt,
    /// Arithmetic genus (2 + c.c + c.K)/2.
    pub p_a: BigInt,
    /// (c.c - c.K)/2; for a rational class of type i this equals i+1.
    pub chi: BigInt,
    /// Some(c.c) exactly when p_a = 0, in which case all four rationality
    /// conditions hold with i = c.c.
    pub rational_type: Option<BigInt>,
    /// On s <= 8 points only: the i in {-1,0,1} with c.c = i and
    /// c.K = -2-i, which makes an effective class an (i)-curve class.
    pub del_pezzo_type: Option<i8>,
    pub exception: Option<PlanarException>,
    pub screens: Vec<ScreenViolation>,
}

/// Genus/Euler-characteristic bookkeeping for surface classes, the
/// rationality equivalences, and the short list of non-Weyl irreducible
/// exceptions.
pub fn planar_classify(c: &CurveClass) -> Result<PlanarReport> {
    let space = c.space();
    if space.r() != 2 {
        return Err(Error::Unsupported(format!(
            "planar classification needs r = 2, got {space}"
        )));
    }
    let cc = q_curve(c);
    let k = canonical_class(space);
    let ck = {
        // on a surface the curve/divisor distinction is immaterial
        let as_curve = CurveClass::rebuild(space, k.degree().clone(), k.mults().to_vec());
        bilinear_curve(c, &as_curve)?
    };
    let p_a = (BigInt::from(2) + &cc + &ck) / BigInt::from(2);
    let chi = (&cc - &ck) / BigInt::from(2);
    let rational_type = p_a.is_zero().then(|| cc.clone());
    let del_pezzo_type = (space.s() <= 8)
        .then(|| {
            (-1i8..=1).find(|&i| {
                cc == BigInt::from(i) && ck == BigInt::from(-2 - i as i64)
            })
        })
        .flatten();
    let shape = canonicalize(c);
    let shape_is = |d: i64, v: i64, n: usize| {
        space.s() == n
            && shape.class().degree() == &BigInt::from(d)
            && shape.class().mults().iter().all(|m| m == &BigInt::from(v))
    };
    let exception = if shape_is(3, 1, 8) {
        Some(PlanarException::AnticanonicalOn8Points)
    } else if shape_is(3, 1, 7) {
        Some(PlanarException::FClassOn7Points)
    } else if shape_is(6, 2, 8) {
        Some(PlanarException::TwoFOn8Points)
    } else {
        None
    };
    Ok(PlanarReport {
        self_intersection: cc,
        k_degree: ck,
        p_a,
        chi,
        rational_type,
        del_pezzo_type,
        exception,
        screens: irreducibility_screen(c),
    })
}

// ---------------------------------------------------------------------------
// Divisorial numerical types
// ---------------------------------------------------------------------------

/// The i in {-1,0,1} with <D,D>_1 = i and <D,-K>_1/(r-1) = 2+i, if any.
pub fn divisorial_numerical_type(d: &DivisorClass) -> Option<i8> {
    let space = d.space();
    let q1 = q_divisor(d);
    // <D,-K>_1 / (r-1) = (r+1) deg - sum(m), exactly
    let total: BigInt = d.mults().iter().sum();
    let lin = BigInt::from(space.r() + 1) * d.degree() - total;
    (-1..=1).find(|&i| q1 == BigInt::from(i) && lin == BigInt::from(2 + i as i64))
}

// ---------------------------------------------------------------------------
// Tail bound for Cremona reduced numerical classes
// ---------------------------------------------------------------------------

/// For a numerical (j)-class with positive degree, non-negative
/// multiplicities sorted descending, and d >= m_1 + ... + m_{r+1} (the
/// reduction inequality itself, not the small-degree stopping convention):
/// (r-1) sum_{i=r+2}^{s} m_i >= -2 - j(r-1) + 2 sum_{i=1}^{r+1} m_i.
/// The theory guarantees this; it is exposed as a consistency oracle.
pub fn reduced_class_tail_bound(c: &CurveClass, j: i8) -> Result<bool> {
    let space = c.space();
    if !c.degree().is_positive() {
        return Err(Error::Precondition(format!("{c} has non-positive degree")));
    }
    if c.mults().iter().any(|m| m.is_negative()) {
        return Err(Error::Precondition(format!(
            "{c} has a negative multiplicity"
        )));
    }
    if c.mults().windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(
            "multiplicities must be sorted descending".into(),
        ));
    }
    let head = space.s().min(space.r() as usize + 1);
    let head_sum: BigInt = c.mults()[..head].iter().sum();
    if c.degree() < &head_sum {
        return Err(Error::Precondition(format!(
            "{c} violates the reduction inequality"
        )));
    }
    if numerical_type(c) != Some(j) {
        return Err(Error::Precondition(format!(
            "{c} is not a numerical ({j})-class"
        )));
    }
    let tail_sum: BigInt = c.mults()[head..].iter().sum();
    let rm1 = BigInt::from(space.r() - 1);
    Ok(&rm1 * tail_sum >= BigInt::from(-2) - BigInt::from(j) * rm1 + BigInt::from(2) * head_sum)
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassificationReport {
    pub numerical_type: Option<i8>,
    pub quadratic_match: Option<i8>,
    pub weyl_class: WeylVerdict,
    pub screens: Vec<ScreenViolation>,
    /// Set when the class decomposes as multiple*F + remainder on r+3
    /// points.
    pub decomposition: Option<(BigInt, CurveClass)>,
}

/// Run every classifier on one class. `requested` overrides the inferred
/// numerical type for the orbit-membership question.
pub fn classification_report(
    c: &CurveClass,
    requested: Option<i8>,
    bounds: &OrbitBounds,
) -> Result<ClassificationReport> {
    let space = c.space();
    let nt = numerical_type(c);
    let qm = quadratic_signature(c);
    let weyl_class = match requested.or(nt) {
        Some(i) => is_weyl_class(c, i, bounds)?,
        None => {
            let f = anticanonical_curve_class(space);
            WeylVerdict::No {
                reason: NoWitness::InvariantMismatch {
                    pairing: bilinear_curve(c, &f)?,
                    quadratic: q_curve(c),
                },
            }
        }
    };
    let decomposition = if space.s() == space.r() as usize + 3
        && nt == Some(1)
        && c.mults().iter().all(|m| !m.is_negative())
    {
        match one_class_decomposition(c)? {
            OneClassOutcome::Decomposition {
                multiple,
                remainder,
                ..
            } => Some((multiple, remainder)),
            _ => None,
        }
    } else {
        None
    };
    Ok(ClassificationReport {
        numerical_type: nt,
        quadratic_match: qm,
        weyl_class,
        screens: irreducibility_screen(c),
        decomposition,
    })
}
