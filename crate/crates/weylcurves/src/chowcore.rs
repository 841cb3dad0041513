//! Core class types and intersection pairings on Y^r_s.
//!
//! Conventions used throughout the crate:
//!
//! * `Space { r, s }` is the blow-up of P^r at s general points, r >= 2.
//! * A curve class stores (d; m_1..m_s) for d*h - sum m_i e_i; a divisor class
//!   stores (d; m_1..m_s) for d*H - sum m_i E_i. Multiplicities keep the order
//!   they were given in; sorting is always an explicit, separate step.
//! * intersect(D, c)       = d_D d_c - sum m_D m_c            (A^1 x A^{r-1})
//! * q_curve(c)            = d^2 - (r-1) sum m_i^2
//! * q_divisor(D)          = (r-1) d^2 - sum m_i^2
//! * bilinear_curve(x,y)   = d d' - (r-1) sum m m'   (polarization of q_curve)
//! * bilinear_divisor(x,y) = (r-1) d d' - sum m m'
//! * canonical class       K = -(r+1) H + (r-1) sum E_i
//! * anticanonical curve   F = (r+1; 1^s), so  (-K . c) = bilinear_curve(F, c).

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::{Error, Result};

/// Blow-up of P^r at s general points. Invariant: r >= 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Space {
    r: u32,
    s: usize,
}

impl Space {
    pub fn new(r: u32, s: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::Unsupported(format!(
                "ambient dimension r = {r} (need r >= 2)"
            )));
        }
        Ok(Space { r, s })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// r - 1 as a BigInt; the coefficient that shows up in every pairing.
    pub(crate) fn rm1(&self) -> BigInt {
        BigInt::from(self.r - 1)
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Y^{}_{}", self.r, self.s)
    }
}

/// Shared shape of curve and divisor classes; lets orbit code act on both.
pub trait ChowClass: Sized + Clone + Ord + std::fmt::Display {
    const KIND: &'static str;

    fn space(&self) -> Space;
    fn degree(&self) -> &BigInt;
    fn mults(&self) -> &[BigInt];
    /// Length of `m` must equal s; internal callers guarantee it.
    fn rebuild(space: Space, d: BigInt, m: Vec<BigInt>) -> Self;

    /// Cremona increment t from the sum of the r+1 picked multiplicities.
    fn cremona_t(&self, picked_sum: &BigInt) -> BigInt;
    /// Degree after a Cremona step with increment t.
    fn degree_after(&self, t: &BigInt) -> BigInt;
}

macro_rules! class_type {
    ($name:ident, $kind:literal, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
        pub struct $name {
            space: Space,
            d: BigInt,
            m: Vec<BigInt>,
        }

        impl $name {
            pub fn new(space: Space, d: BigInt, m: Vec<BigInt>) -> Result<Self> {
                if m.len() != space.s() {
                    return Err(Error::Parse(format!(
                        "{} multiplicities for {space}",
                        m.len()
                    )));
                }
                Ok(Self { space, d, m })
            }

            /// Convenience constructor from machine integers.
            pub fn from_ints(space: Space, d: i64, m: &[i64]) -> Result<Self> {
                Self::new(space, BigInt::from(d), m.iter().map(|&v| BigInt::from(v)).collect())
            }

            pub fn to_json(&self) -> Value {
                class_to_json(Self::KIND, self.space, &self.d, &self.m)
            }

            pub fn from_json(v: &Value) -> Result<Self> {
                let (kind, space, d, m) = class_from_json(v)?;
                if kind != Self::KIND {
                    return Err(Error::Parse(format!(
                        "expected kind \"{}\", got \"{kind}\"",
                        Self::KIND
                    )));
                }
                Self::new(space, d, m)
            }
        }

        impl ChowClass for $name {
            const KIND: &'static str = $kind;

            fn space(&self) -> Space {
                self.space
            }

            fn degree(&self) -> &BigInt {
                &self.d
            }

            fn mults(&self) -> &[BigInt] {
                &self.m
            }

            fn rebuild(space: Space, d: BigInt, m: Vec<BigInt>) -> Self {
                assert_eq!(m.len(), space.s());
                Self { space, d, m }
            }

            fn cremona_t(&self, picked_sum: &BigInt) -> BigInt {
                if Self::KIND == "curve" {
                    &self.d - picked_sum
                } else {
                    self.space.rm1() * &self.d - picked_sum
                }
            }

            fn degree_after(&self, t: &BigInt) -> BigInt {
                if Self::KIND == "curve" {
                    &self.d + self.space.rm1() * t
                } else {
                    &self.d + t
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "({};", self.d)?;
                for (i, v) in self.m.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    };
}

class_type!(
    CurveClass,
    "curve",
    "A 1-cycle class (d; m_1..m_s) = d*h - sum m_i e_i on Y^r_s."
);
class_type!(
    DivisorClass,
    "divisor",
    "A divisor class (d; m_1..m_s) = d*H - sum m_i E_i on Y^r_s."
);

fn check_spaces(a: Space, b: Space) -> Result<()> {
    if a != b {
        return Err(Error::SpaceMismatch(format!("{a} vs {b}")));
    }
    Ok(())
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// (D . c) = d_D d_c - sum m_D m_c.
pub fn intersect(d: &DivisorClass, c: &CurveClass) -> Result<BigInt> {
    check_spaces(d.space(), c.space())?;
    Ok(d.degree() * c.degree() - dot(d.mults(), c.mults()))
}

/// q(c) = d^2 - (r-1) sum m_i^2 on curve classes.
pub fn q_curve(c: &CurveClass) -> BigInt {
    c.degree() * c.degree() - c.space().rm1() * dot(c.mults(), c.mults())
}

/// q_1(D) = (r-1) d^2 - sum m_i^2 on divisor classes.
pub fn q_divisor(d: &DivisorClass) -> BigInt {
    d.space().rm1() * d.degree() * d.degree() - dot(d.mults(), d.mults())
}

/// <x,y> = d d' - (r-1) sum m m'; the polarization of `q_curve`, so
/// 2<x,y> = q(x+y) - q(x) - q(y) holds exactly.
pub fn bilinear_curve(x: &CurveClass, y: &CurveClass) -> Result<BigInt> {
    check_spaces(x.space(), y.space())?;
    Ok(x.degree() * y.degree() - x.space().rm1() * dot(x.mults(), y.mults()))
}

/// <x,y>_1 = (r-1) d d' - sum m m'; the polarization of `q_divisor`.
pub fn bilinear_divisor(x: &DivisorClass, y: &DivisorClass) -> Result<BigInt> {
    check_spaces(x.space(), y.space())?;
    Ok(x.space().rm1() * x.degree() * y.degree() - dot(x.mults(), y.mults()))
}

/// K = -(r+1) H + (r-1) sum E_i, stored as (-(r+1); (-(r-1))^s).
pub fn canonical_class(space: Space) -> DivisorClass {
    let k = -BigInt::from(space.r() + 1);
    let m = vec![-space.rm1(); space.s()];
    DivisorClass::rebuild(space, k, m)
}

/// F = (r+1; 1^s); pairing a curve class against F computes (-K . c).
pub fn anticanonical_curve_class(space: Space) -> CurveClass {
    CurveClass::rebuild(
        space,
        BigInt::from(space.r() + 1),
        vec![BigInt::from(1); space.s()],
    )
}

/// F^2 = q(F) = (r+1)^2 - s(r-1). Positive exactly on the finite-Weyl-group
/// (Mori dream) list; see `weylorbits::is_weyl_finite`.
pub fn f_squared(space: Space) -> BigInt {
    q_curve(&anticanonical_curve_class(space))
}

// ---------------------------------------------------------------------------
// JSON wire format
//
// {"kind":"curve"|"divisor","r":R,"s":S,"d":INT,"m":[INT,..]}
// where INT is a JSON number when |v| <= 2^53 - 1 and a decimal string beyond
// that; both encodings are accepted on input.
// ---------------------------------------------------------------------------

const SAFE_INT: i64 = (1 << 53) - 1;

pub(crate) fn int_to_wire(v: &BigInt) -> Value {
    if v.abs() <= BigInt::from(SAFE_INT) {
        // in-range by the check above
        let (_, digits) = v.to_u64_digits();
        let mag = digits.first().copied().unwrap_or(0) as i64;
        json!(if v.is_negative() { -mag } else { mag })
    } else {
        json!(v.to_string())
    }
}

pub(crate) fn int_from_wire(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Parse(format!(
                    "non-integer numeric {n}; send magnitudes beyond 2^53 as strings"
                )))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer string {s:?}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

fn class_to_json(kind: &str, space: Space, d: &BigInt, m: &[BigInt]) -> Value {
    json!({
        "kind": kind,
        "r": space.r(),
        "s": space.s(),
        "d": int_to_wire(d),
        "m": m.iter().map(int_to_wire).collect::<Vec<_>>(),
    })
}

fn class_from_json(v: &Value) -> Result<(String, Space, BigInt, Vec<BigInt>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("class JSON must be an object".into()))?;
    let get = |key: &str| {
        obj.get(key)
            .ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
    };
    let kind = get("kind")?
        .as_str()
        .ok_or_else(|| Error::Parse("\"kind\" must be a string".into()))?
        .to_string();
    if kind != "curve" && kind != "divisor" {
        return Err(Error::Parse(format!("unknown kind {kind:?}")));
    }
    let r = get("r")?
        .as_u64()
        .filter(|&r| r >= 2 && r <= u32::MAX as u64)
        .ok_or_else(|| Error::Parse("\"r\" must be an integer >= 2".into()))?;
    let s = get("s")?
        .as_u64()
        .ok_or_else(|| Error::Parse("\"s\" must be a non-negative integer".into()))?;
    let d = int_from_wire(get("d")?)?;
    let m = get("m")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"m\" must be an array".into()))?
        .iter()
        .map(int_from_wire)
        .collect::<Result<Vec<_>>>()?;
    if m.len() != s as usize {
        return Err(Error::Parse(format!(
            "s = {s} but m has {} entries",
            m.len()
        )));
    }
    let space = Space::new(r as u32, s as usize)?;
    Ok((kind, space, d, m))
}

/// Either kind of class, as parsed from wire JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyClass {
    Curve(CurveClass),
    Divisor(DivisorClass),
}

pub fn any_class_from_json(v: &Value) -> Result<AnyClass> {
    let (kind, space, d, m) = class_from_json(v)?;
    Ok(match kind.as_str() {
        "curve" => AnyClass::Curve(CurveClass::new(space, d, m)?),
        _ => AnyClass::Divisor(DivisorClass::new(space, d, m)?),
    })
}

pub fn parse_any_class(text: &str) -> Result<AnyClass> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    any_class_from_json(&v)
}

pub fn parse_curve(text: &str) -> Result<CurveClass> {
    match parse_any_class(text)? {
        AnyClass::Curve(c) => Ok(c),
        AnyClass::Divisor(_) => Err(Error::Parse("expected a curve class".into())),
    }
}

pub fn parse_divisor(text: &str) -> Result<DivisorClass> {
    match parse_any_class(text)? {
        AnyClass::Divisor(d) => Ok(d),
        AnyClass::Curve(_) => Err(Error::Parse("expected a divisor class".into())),
    }
}
