//! Exact rational-function algebra over ℚ: canonical forms, composition,
//! Chebyshev and Klein functions, and decomposition certificates.

pub mod parse;
pub mod poly;
pub mod scenario;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use parse::parse_expr;
pub use poly::{q, q_ratio, Poly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("0^0 is undefined")]
    ZeroToZero,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("linking function must have degree 1, found degree {0}")]
    NotMobius(usize),
    #[error("certificate shape mismatch: {0}")]
    BadCertificate(String),
}

/// A rational function in canonical form: numerator and denominator
/// coprime, denominator monic and nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, RatError> {
        if den.is_zero() {
            return Err(RatError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g).unwrap();
        let (den, r2) = den.divrem(&g).unwrap();
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lead = den.leading().unwrap().recip();
        Ok(RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc::constant(q(n))
    }

    pub fn var() -> RatFunc {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Degree as a map: max(deg num, deg den); constants have degree 0.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominators multiply to nonzero")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators multiply to nonzero")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, RatError> {
        if other.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
            .map_err(|_| RatError::DivisionByZero)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc, RatError> {
        if e == 0 {
            if self.is_zero() {
                return Err(RatError::ZeroToZero);
            }
            return Ok(RatFunc::from_int(1));
        }
        let base = if e < 0 {
            RatFunc::from_int(1).div(self)?
        } else {
            self.clone()
        };
        let mut out = RatFunc::from_int(1);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// self(inner(z)), exact. Degrees multiply when both inputs are
    /// non-constant.
    pub fn compose(&self, inner: &RatFunc) -> Result<RatFunc, RatError> {
        if inner.is_constant() {
            let c = inner
                .eval(&q(0))
                .expect("constant has constant denominator");
            return match self.eval(&c) {
                Some(v) => Ok(RatFunc::constant(v)),
                None => Err(RatError::ZeroDenominator),
            };
        }
        let d = self.degree();
        let a = &inner.num;
        let b = &inner.den;
        // powers a^i b^(d-i) for i = 0..=d
        let mut a_pow = vec![Poly::one()];
        let mut b_pow = vec![Poly::one()];
        for i in 1..=d {
            a_pow.push(a_pow[i - 1].mul(a));
            b_pow.push(b_pow[i - 1].mul(b));
        }
        let homogenize = |p: &Poly| {
            let mut acc = Poly::zero();
            for i in 0..=d {
                let c = p.coeff(i);
                if !c.is_zero() {
                    acc = acc.add(&a_pow[i].mul(&b_pow[d - i]).scale(&c));
                }
            }
            acc
        };
        let num = homogenize(&self.num);
        let den = homogenize(&self.den);
        let out = RatFunc::new(num, den)?;
        if !self.is_constant() {
            debug_assert_eq!(out.degree(), self.degree() * inner.degree());
        }
        Ok(out)
    }

    /// Inverse of a degree-1 function: (az+b)/(cz+d) ↦ (dz−b)/(−cz+a).
    pub fn mobius_inverse(&self) -> Result<RatFunc, RatError> {
        if self.degree() != 1 {
            return Err(RatError::NotMobius(self.degree()));
        }
        let (a, b) = (self.num.coeff(1), self.num.coeff(0));
        let (c, d) = (self.den.coeff(1), self.den.coeff(0));
        let inv = RatFunc::new(
            Poly::from_coeffs(vec![-b, d]),
            Poly::from_coeffs(vec![a, -c]),
        )?;
        debug_assert_eq!(
            self.compose(&inv).unwrap(),
            RatFunc::var(),
            "Möbius inverse"
        );
        Ok(inv)
    }

    /// Number of poles on the sphere: distinct finite roots of the
    /// denominator plus the pole at infinity when deg num > deg den.
    pub fn pole_count(&self) -> usize {
        let finite = self.den.squarefree_part().degree().unwrap_or(0);
        let infinite =
            usize::from(self.num.degree().unwrap_or(0) > self.den.degree().unwrap_or(0));
        finite + infinite
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            debug_assert!(self.den.coeff(0).is_one() || self.num.is_zero());
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Chebyshev polynomial T_n via the three-term recurrence.
pub fn chebyshev(n: usize) -> Poly {
    let mut t0 = Poly::one();
    let mut t1 = Poly::var();
    if n == 0 {
        return t0;
    }
    for _ in 1..n {
        let next = Poly::var().scale(&q(2)).mul(&t1).sub(&t0);
        t0 = t1;
        t1 = next;
    }
    t1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KleinKind {
    Cn(usize),
    D2n(usize),
    A4,
    S4,
}

/// The Klein function with the given regular monodromy.
pub fn klein(kind: KleinKind) -> RatFunc {
    match kind {
        KleinKind::Cn(n) => {
            assert!(n >= 1);
            RatFunc::var().pow(n as i64).unwrap()
        }
        KleinKind::D2n(n) => {
            assert!(n >= 1);
            // (z^(2n) + 1) / (2 z^n)
            let zn = RatFunc::var().pow(n as i64).unwrap();
            zn.add(&RatFunc::from_int(1).div(&zn).unwrap())
                .mul(&RatFunc::constant(q_ratio(1, 2)))
        }
        KleinKind::A4 => parse_expr("-(1/64) * z^3 * (z^3 - 8)^3 / (z^3 + 1)^3")
            .expect("fixed formula parses"),
        KleinKind::S4 => parse_expr("256 * z^3 * (z^6 - 7*z^3 - 8)^3 / (z^6 + 20*z^3 - 8)^4")
            .expect("fixed formula parses"),
    }
}

/// Outcome of an exact composition check.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub ok: bool,
    pub composed: RatFunc,
    /// first differing coefficient: (which side, power, got, want)
    pub first_mismatch: Option<(String, usize, String, String)>,
    /// factors of degree < 2 are legal but flagged
    pub constant_or_linear_factors: Vec<usize>,
}

/// Compose `factors` left to right and compare exactly against `target`.
pub fn verify_composition(
    factors: &[RatFunc],
    target: &RatFunc,
) -> Result<CompositionReport, RatError> {
    if factors.is_empty() {
        return Err(RatError::BadCertificate("empty factor list".into()));
    }
    let mut composed = factors[0].clone();
    for f in &factors[1..] {
        composed = composed.compose(f)?;
    }
    let ok = composed == *target;
    let first_mismatch = if ok {
        None
    } else {
        Some(first_coeff_mismatch(&composed, target))
    };
    Ok(CompositionReport {
        ok,
        first_mismatch,
        constant_or_linear_factors: factors
            .iter()
            .enumerate()
            .filter(|(_, f)| f.degree() < 2)
            .map(|(i, _)| i)
            .collect(),
        composed,
    })
}

/// First coefficient where two canonical forms differ.
pub fn first_coeff_mismatch(got: &RatFunc, want: &RatFunc) -> (String, usize, String, String) {
    for (side, g, w) in [("num", got.num(), want.num()), ("den", got.den(), want.den())] {
        let top = g.degree().unwrap_or(0).max(w.degree().unwrap_or(0));
        for i in 0..=top {
            if g.coeff(i) != w.coeff(i) {
                return (side.to_string(), i, g.coeff(i).to_string(), w.coeff(i).to_string());
            }
        }
    }
    unreachable!("canonical forms differ somewhere when unequal")
}

/// Report on the three-pole function with maximal decompositions of
/// different lengths.
#[derive(Clone, Debug)]
pub struct ThreePoleReport {
    pub target: RatFunc,
    pub chain3: Vec<RatFunc>,
    pub chain2: Vec<RatFunc>,
    pub chain3_ok: bool,
    pub chain2_ok: bool,
    pub pole_count: usize,
    pub chain3_degrees: Vec<usize>,
    pub chain2_degrees: Vec<usize>,
    pub ok: bool,
}

/// Verifies both displayed decompositions of
/// −(1/27)(z⁴+2z²−3)³/(z²+1)⁴ and the structural facts that make the
/// pair a genuine different-length example: three poles, factor degrees
/// (3,2,2) and (4,3), products 12 both ways.
pub fn verify_three_pole_counterexample() -> ThreePoleReport {
    let target = parse_expr("-(1/27) * (z^4 + 2*z^2 - 3)^3 / (z^2 + 1)^4").unwrap();
    let chain3 = vec![
        parse_expr("(1/54) * (7 - z)^3 / (z + 1)^2").unwrap(),
        parse_expr("2*z^2 + 4*z + 1").unwrap(),
        parse_expr("z^2").unwrap(),
    ];
    let chain2 = vec![
        parse_expr("-(256/27) * z^3 * (z - 1)").unwrap(),
        parse_expr("(1/4) * (z - 1)^3 / (z^2 + 1) + 1").unwrap(),
    ];
    let r3 = verify_composition(&chain3, &target).unwrap();
    let r2 = verify_composition(&chain2, &target).unwrap();
    let chain3_degrees: Vec<usize> = chain3.iter().map(|f| f.degree()).collect();
    let chain2_degrees: Vec<usize> = chain2.iter().map(|f| f.degree()).collect();
    let pole_count = target.pole_count();
    let structural = chain3_degrees == [3, 2, 2]
        && chain2_degrees == [4, 3]
        && chain3_degrees.iter().product::<usize>() == 12
        && chain2_degrees.iter().product::<usize>() == 12
        && chain3_degrees.iter().all(|&d| d >= 2)
        && chain2_degrees.iter().all(|&d| d >= 2)
        && pole_count == 3
        && r3.composed == r2.composed;
    ThreePoleReport {
        target,
        chain3_ok: r3.ok,
        chain2_ok: r2.ok,
        ok: r3.ok && r2.ok && structural,
        pole_count,
        chain3_degrees,
        chain2_degrees,
        chain3,
        chain2,
    }
}

/// Verifies that two equal-length decompositions are linked step by step
/// by the given degree-one functions: with U = dec1, V = dec2 and k
/// factors, V_1 = U_1∘μ_1⁻¹, V_i = μ_{i−1}∘U_i∘μ_i⁻¹ for 1 < i < k, and
/// V_k = μ_{k−1}∘U_k. The telescoping product is asserted as a sanity
/// check whenever the certificate verifies.
pub fn equivalence_certificate(
    dec1: &[RatFunc],
    dec2: &[RatFunc],
    mus: &[RatFunc],
) -> Result<bool, RatError> {
    let k = dec1.len();
    if k == 0 || dec2.len() != k {
        return Err(RatError::BadCertificate(
            "decompositions must be nonempty and of equal length".into(),
        ));
    }
    if mus.len() + 1 != k {
        return Err(RatError::BadCertificate(format!(
            "need {} linking functions for length {}, found {}",
            k - 1,
            k,
            mus.len()
        )));
    }
    for mu in mus {
        if mu.degree() != 1 {
            return Err(RatError::NotMobius(mu.degree()));
        }
    }
    let mut ok = true;
    for i in 0..k {
        let mut expected = dec1[i].clone();
        if i > 0 {
            expected = mus[i - 1].compose(&expected)?;
        }
        if i + 1 < k {
            expected = expected.compose(&mus[i].mobius_inverse()?)?;
        }
        if expected != dec2[i] {
            ok = false;
            break;
        }
    }
    if ok {
        let prod1 = compose_all(dec1)?;
        let prod2 = compose_all(dec2)?;
        assert_eq!(prod1, prod2, "linked decompositions must compose equally");
    }
    Ok(ok)
}

/// Left-to-right composition of a factor list.
pub fn compose_all(factors: &[RatFunc]) -> Result<RatFunc, RatError> {
    let mut out = factors[0].clone();
    for f in &factors[1..] {
        out = out.compose(f)?;
    }
    Ok(out)
}
