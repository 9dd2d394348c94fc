//! Similarly/conversely ordered sequence tests and the discrete Chebyshev
//! sum inequality.
//!
//! Two sequences are similarly ordered when `(a_i - a_k)(b_i - b_k) >= 0`
//! for every index pair, conversely ordered when every such product is
//! `<= 0`. Only comparison results are needed to decide this, so the test is
//! generic over any ordered entry type and never forms the products.

use serde::Serialize;

use crate::error::Error;
use crate::rational::{rational_pow, serde_str, Rational};

/// Outcome of the pairwise ordering test.
///
/// Both flags are true exactly when every pair product is zero (constant or
/// near-constant sequences, or fewer than two entries). When a flag is false,
/// `witness` holds the first index pair in lexicographic order whose product
/// has the offending sign; when both flags are false it is the first pair
/// violating either relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderingVerdict {
    pub similarly: bool,
    pub conversely: bool,
    pub witness: Option<(usize, usize)>,
}

impl OrderingVerdict {
    /// True when the pair is simultaneously similarly and conversely ordered.
    pub fn both(&self) -> bool {
        self.similarly && self.conversely
    }
}

/// Which inequality direction a Chebyshev evaluation asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Le,
    Ge,
    None,
}

/// Exact evaluation of one Chebyshev sum inequality instance.
///
/// `direction` is `le` for similarly ordered inputs, `ge` for conversely
/// ordered ones and `none` when neither hypothesis applies; `holds` reports
/// whether the asserted comparison is satisfied (vacuously true for `none`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChebyshevReport {
    #[serde(serialize_with = "serde_str::rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serde_str::rational")]
    pub rhs: Rational,
    pub direction: Direction,
    pub holds: bool,
    pub equality: bool,
}

/// Decides whether `a` and `b` are similarly and/or conversely ordered.
///
/// Runs the O(n²) pairwise check over comparison signs; a sort-based
/// decision procedure exists and is used as an independent cross-check in the
/// test suites.
pub fn ordering_relation<A: Ord, B: Ord>(a: &[A], b: &[B]) -> Result<OrderingVerdict, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    let mut similarly = true;
    let mut conversely = true;
    let mut first_negative = None;
    let mut first_positive = None;
    'scan: for i in 0..n {
        for k in (i + 1)..n {
            let sa = a[i].cmp(&a[k]);
            let sb = b[i].cmp(&b[k]);
            if sa == std::cmp::Ordering::Equal || sb == std::cmp::Ordering::Equal {
                continue;
            }
            if sa == sb {
                // Positive product: violates "conversely".
                conversely = false;
                first_positive.get_or_insert((i, k));
            } else {
                // Negative product: violates "similarly".
                similarly = false;
                first_negative.get_or_insert((i, k));
            }
            if first_positive.is_some() && first_negative.is_some() {
                break 'scan;
            }
        }
    }
    let witness = match (similarly, conversely) {
        (true, true) => None,
        (false, true) => first_negative,
        (true, false) => first_positive,
        (false, false) => match (first_negative, first_positive) {
            (Some(x), Some(y)) => Some(x.min(y)),
            _ => unreachable!("both flags false implies both witnesses recorded"),
        },
    };
    Ok(OrderingVerdict {
        similarly,
        conversely,
        witness,
    })
}

/// Evaluates the weighted Chebyshev inequality
/// `(Σ p_i a_i)(Σ p_i b_i) vs (Σ p_i)(Σ p_i a_i b_i)` with nonnegative
/// weights: `<=` for similarly ordered `(a, b)`, `>=` for conversely ordered.
pub fn chebyshev_weighted(
    a: &[Rational],
    b: &[Rational],
    p: &[Rational],
) -> Result<ChebyshevReport, Error> {
    if a.len() != p.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: p.len(),
        });
    }
    let verdict = ordering_relation(a, b)?;
    if let Some(index) = p.iter().position(|w| w < &Rational::from_integer(0.into())) {
        return Err(Error::NegativeWeight { index });
    }

    let mut sum_p = Rational::from_integer(0.into());
    let mut sum_pa = sum_p.clone();
    let mut sum_pb = sum_p.clone();
    let mut sum_pab = sum_p.clone();
    for i in 0..a.len() {
        sum_p += &p[i];
        sum_pa += &p[i] * &a[i];
        sum_pb += &p[i] * &b[i];
        sum_pab += &p[i] * &a[i] * &b[i];
    }
    let lhs = sum_pa * sum_pb;
    let rhs = sum_p * sum_pab;

    let direction = if verdict.similarly {
        Direction::Le
    } else if verdict.conversely {
        Direction::Ge
    } else {
        Direction::None
    };
    let holds = match direction {
        Direction::Le => lhs <= rhs,
        Direction::Ge => lhs >= rhs,
        Direction::None => true,
    };
    let equality = lhs == rhs;
    Ok(ChebyshevReport {
        lhs,
        rhs,
        direction,
        holds,
        equality,
    })
}

/// The unweighted form: `(Σ a_i)(Σ b_i) vs n·Σ a_i b_i`.
pub fn chebyshev_unweighted(a: &[Rational], b: &[Rational]) -> Result<ChebyshevReport, Error> {
    let ones = vec![Rational::from_integer(1.into()); a.len()];
    chebyshev_weighted(a, b, &ones)
}

/// The exponent form: applies the weighted inequality to `(a_i^r)` and
/// `(b_i^r)`, comparing against `Σ p_i (a_i b_i)^r`. Negative exponents
/// require all entries of `a` and `b` to be nonzero.
pub fn chebyshev_power(
    a: &[Rational],
    b: &[Rational],
    p: &[Rational],
    r: i32,
) -> Result<ChebyshevReport, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut ap = Vec::with_capacity(a.len());
    let mut bp = Vec::with_capacity(b.len());
    for (i, x) in a.iter().enumerate() {
        ap.push(rational_pow(x, r, i)?);
    }
    for (i, x) in b.iter().enumerate() {
        bp.push(rational_pow(x, r, i)?);
    }
    // (a_i b_i)^r = a_i^r * b_i^r exactly, so the weighted form on the
    // powered vectors is the displayed inequality.
    chebyshev_weighted(&ap, &bp, p)
}
