//! Truncated power series with exact rational coefficients, the closed-form
//! generating functions of the bound sequences, and an identity suite that
//! checks how those closed forms fit together.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("series is not divisible by t^{0}")]
    NotDivisible(usize),
    #[error("unknown series name {0:?}")]
    UnknownName(String),
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_ints(&[1], order)
    }

    /// The polynomial with the given coefficients, truncated at `order`.
    pub fn from_ints(poly: &[i64], order: usize) -> Self {
        Self::from_rationals(poly.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    /// `t` truncated at `order`.
    pub fn t(order: usize) -> Self {
        Self::from_ints(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_rationals(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[k..=n].clone_from_slice(&self.coeffs[..=n - k]);
        TruncatedSeries { coeffs }
    }

    /// Exact division by `t^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible(k));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        Self::one(self.order()).div(self)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::DivisionByNonUnit);
        }
        let n = self.order().min(rhs.order());
        let b0_inv = b0.recip();
        let support: Vec<usize> = (1..=n).filter(|&i| !rhs.coeffs[i].is_zero()).collect();
        let mut q: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for &i in support.iter().take_while(|&&i| i <= k) {
                acc -= &rhs.coeffs[i] * &q[k - i];
            }
            q.push(acc * &b0_inv);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// The square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        // From r^2 = s: 2 r_n = s_n - sum_{0<i<n} r_i r_{n-i}.
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut r: Vec<BigRational> = vec![BigRational::one()];
        for k in 1..=n {
            let mut cross = BigRational::zero();
            for i in 1..=(k - 1) / 2 {
                if !r[i].is_zero() && !r[k - i].is_zero() {
                    cross += &r[i] * &r[k - i];
                }
            }
            cross = &cross + &cross;
            if k % 2 == 0 {
                cross += &r[k / 2] * &r[k / 2];
            }
            r.push((&self.coeffs[k] - cross) * &half);
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// Coefficients as integers, if every denominator is 1.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as non-negative integers, if they all are.
    pub fn to_naturals(&self) -> Option<Vec<BigUint>> {
        self.to_integers()?
            .into_iter()
            .map(|c| c.to_biguint())
            .collect()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order() + 1)
    }
}

/// Series in `t` whose coefficients are polynomials in a marker `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    /// `coeffs[g][j]` is the coefficient of `w^j t^g`.
    coeffs: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    /// Polynomial from `(t power, w power, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, usize, i64)], order: usize) -> Self {
        let mut coeffs = vec![Vec::new(); order + 1];
        for &(tp, wp, c) in terms {
            if tp > order {
                continue;
            }
            let row: &mut Vec<BigRational> = &mut coeffs[tp];
            if row.len() <= wp {
                row.resize(wp + 1, BigRational::zero());
            }
            row[wp] += rat(c);
        }
        BivariateSeries { coeffs }
    }

    /// `poly(t) * w^j`.
    pub fn from_t_poly(poly: &[i64], w_power: usize, order: usize) -> Self {
        let terms: Vec<(usize, usize, i64)> = poly
            .iter()
            .enumerate()
            .map(|(i, &c)| (i, w_power, c))
            .collect();
        Self::from_terms(&terms, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, t_power: usize, w_power: usize) -> BigRational {
        self.coeffs[t_power]
            .get(w_power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The polynomial in `w` at `t^g`.
    pub fn row(&self, t_power: usize) -> &[BigRational] {
        &self.coeffs[t_power]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![Vec::new(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                poly_mul_add(&mut out[i + j], &self.coeffs[i], &rhs.coeffs[j]);
            }
        }
        BivariateSeries { coeffs: out }
    }

    /// Division by a series whose `t^0` coefficient is a nonzero constant.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        let b0 = &rhs.coeffs[0];
        if b0.iter().skip(1).any(|c| !c.is_zero()) || b0.first().is_none_or(Zero::is_zero) {
            return Err(SeriesError::DivisionByNonUnit);
        }
        let b0_inv = b0[0].recip();
        let n = self.order().min(rhs.order());
        let mut q: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let neg: Vec<BigRational> = rhs.coeffs[i].iter().map(|c| -c).collect();
                poly_mul_add(&mut acc, &neg, &q[k - i]);
            }
            q.push(acc.into_iter().map(|c| c * &b0_inv).collect());
        }
        Ok(BivariateSeries { coeffs: q })
    }

    /// Substitutes a value for `w`.
    pub fn eval_w(&self, w: &BigRational) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| {
                row.iter()
                    .rev()
                    .fold(BigRational::zero(), |acc, c| acc * w + c)
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

fn poly_mul_add(out: &mut Vec<BigRational>, a: &[BigRational], b: &[BigRational]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if out.len() < a.len() + b.len() - 1 {
        out.resize(a.len() + b.len() - 1, BigRational::zero());
    }
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
}

fn poly(coeffs: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(coeffs, order)
}

fn product(factors: &[&[i64]], order: usize) -> TruncatedSeries {
    factors
        .iter()
        .fold(TruncatedSeries::one(order), |acc, f| &acc * &poly(f, order))
}

fn quotient(num: &TruncatedSeries, den: &TruncatedSeries) -> TruncatedSeries {
    num.div(den)
        .expect("closed-form denominators have constant term 1")
}

const FIB_DEN: &[i64] = &[1, -1, -1];
const ONE_MINUS_T: &[i64] = &[1, -1];
const ONE_PLUS_T: &[i64] = &[1, 1];
const A_DEN_CUBIC: &[i64] = &[1, -1, 0, -1];
const A_DEN_SEXTIC: &[i64] = &[1, 0, 0, -1, -2, -2, -1];
const C_DEN: &[i64] = &[1, -3, 3, -3, 4, -3, 2];

/// `F̄(1,t) = t/(1-t)`: one ordinary semigroup per genus.
pub fn fbar(order: usize) -> TruncatedSeries {
    quotient(&poly(&[0, 1], order), &poly(ONE_MINUS_T, order))
}

/// `F̃(1,t) = t²/(1-t)²`, the `P_{g,i}` nodes of tree A′.
pub fn ftilde(order: usize) -> TruncatedSeries {
    quotient(
        &poly(&[0, 0, 1], order),
        &product(&[ONE_MINUS_T, ONE_MINUS_T], order),
    )
}

/// `F(1,t) = t³/((1-t-t²)(1-t)²)`, the plain nodes of tree A′.
pub fn fprop1(order: usize) -> TruncatedSeries {
    quotient(
        &poly(&[0, 0, 0, 1], order),
        &product(&[FIB_DEN, ONE_MINUS_T, ONE_MINUS_T], order),
    )
}

/// `L(t) = t/((1-t-t²)(1-t))`, coefficients `F_{g+2} - 1`.
pub fn lower_simple(order: usize) -> TruncatedSeries {
    quotient(
        &poly(&[0, 1], order),
        &product(&[FIB_DEN, ONE_MINUS_T], order),
    )
}

/// Generating function of `a_g`, the level totals of tree A″.
pub fn lower_a(order: usize) -> TruncatedSeries {
    let num = poly(&[0, 1, 0, -1, -2, -3, 1, 2, 3, 3, 1], order);
    let den = product(
        &[ONE_PLUS_T, ONE_MINUS_T, FIB_DEN, A_DEN_CUBIC, A_DEN_SEXTIC],
        order,
    );
    quotient(&num, &den)
}

/// `G(1,1,t)`, the `(e,s)` nodes of tree A″.
pub fn g111(order: usize) -> TruncatedSeries {
    let num = poly(&[0, 0, 0, 1, 0, -1, 0, -5, -3, 2, 5, 6, 4, 1], order);
    let den = product(
        &[
            ONE_PLUS_T,
            ONE_MINUS_T,
            ONE_MINUS_T,
            FIB_DEN,
            A_DEN_CUBIC,
            A_DEN_SEXTIC,
        ],
        order,
    );
    quotient(&num, &den)
}

/// `H(u,v,t)` for fixed `u`, `v`: the `P_{g,k+1}` semigroups with `u`
/// marking effective and `v` strong generators.
pub fn h_closed_form(u: &BigRational, v: &BigRational, order: usize) -> TruncatedSeries {
    let one = BigRational::one();
    let (u2, u3) = (u * u, u * u * u);
    let bracket = vec![
        one.clone(),
        BigRational::zero(),
        &u2 * (v - &one) - u,
        &u2 * (&one - v - v),
        &u3 * v * (&one - v),
        &u3 * v * v,
    ];
    let num = TruncatedSeries::from_rationals(bracket, order)
        .shift_up(2)
        .scale(&(u * v));
    let factor = |coeffs: Vec<BigRational>| TruncatedSeries::from_rationals(coeffs, order);
    let z = BigRational::zero;
    let den = [
        factor(vec![one.clone(), -u.clone()]),
        factor(vec![one.clone(), z(), z(), -(&u2 * v)]),
        factor(vec![one.clone(), -one.clone()]),
        factor(vec![one.clone(), z(), -(u * v)]),
    ]
    .iter()
    .fold(TruncatedSeries::one(order), |acc, f| &acc * f);
    quotient(&num, &den)
}

/// `H(1,1,t)`.
pub fn h11(order: usize) -> TruncatedSeries {
    h_closed_form(&BigRational::one(), &BigRational::one(), order)
}

/// `sqrt((1+2t)/(1-2t))`.
pub fn sqrt_ratio(order: usize) -> TruncatedSeries {
    quotient(&poly(&[1, 2], order), &poly(&[1, -2], order))
        .sqrt()
        .expect("constant term is 1")
}

/// `sqrt(1-4t²)`.
pub fn sqrt_one_minus_4t2(order: usize) -> TruncatedSeries {
    poly(&[1, 0, -4], order).sqrt().expect("constant term is 1")
}

fn over_c_den(num: &TruncatedSeries, order: usize) -> TruncatedSeries {
    quotient(num, &poly(C_DEN, order).scale(&rat(2)))
}

/// Generating function of `c_g`, the level totals of tree C.
pub fn upper_c(order: usize) -> TruncatedSeries {
    let radical = &poly(&[0, 1, -1, 0, -1], order) * &sqrt_ratio(order);
    let inner = &poly(&[2, -3, 1, -4, 3, -2], order) + &radical;
    over_c_den(&inner.shift_up(1), order)
}

/// `K_1(1,t)`: tree C nodes with `d = 1`.
pub fn k1(order: usize) -> TruncatedSeries {
    let rational = poly(&[1, -2, -1, 3, -1, 4, -8, 6, -4], order);
    let radical = &poly(&[1, -2, 1, -1, 1], order) * &sqrt_one_minus_4t2(order);
    over_c_den(&(&rational - &radical), order)
}

/// `K_0(1,t)`: tree C nodes with `d = 0`.
pub fn k0(order: usize) -> TruncatedSeries {
    let rational = poly(&[-1, 1, 3, -2, 0, -5, 4, -4], order);
    let radical = &poly(&[1, -3, 3, -2, 2, -1], order) * &sqrt_ratio(order);
    over_c_den(&(&rational + &radical), order)
}

/// Generating function of `d_g`, the level totals of tree I.
pub fn infinite_d(order: usize) -> TruncatedSeries {
    quotient(&poly(&[0, 1, 1, 0, -1, -1], order), &poly(FIB_DEN, order))
}

/// Multiplicity-refined lower bound: coefficient of `w^λ t^g`.
pub fn lower_a_mult(order: usize) -> BivariateSeries {
    let bi = |terms: &[(usize, usize, i64)]| BivariateSeries::from_terms(terms, order);
    let t_poly = |p: &[i64], w: usize| BivariateSeries::from_t_poly(p, w, order);
    let t_product = |fs: &[&[i64]]| {
        product(fs, order + 8)
            .to_integers()
            .expect("integer polynomial")
            .iter()
            .map(|c| c.to_i64().expect("small coefficient"))
            .collect::<Vec<i64>>()
    };
    let trim = |mut v: Vec<i64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };

    // 1 - w t²(1+t+t²-t³) - w² t³(1+t)(1+t+t³) + w³ t⁵(1+t)²(1+t+t²)
    let p1 = trim(t_product(&[&[0, 0, 1, 1, 1, -1]]));
    let p2 = trim(t_product(&[&[0, 0, 0, 1], ONE_PLUS_T, A_DEN_CUBIC_POS]));
    let p3 = trim(t_product(&[
        &[0, 0, 0, 0, 0, 1],
        ONE_PLUS_T,
        ONE_PLUS_T,
        &[1, 1, 1],
    ]));
    let bracket = sum_bi(&[
        bi(&[(0, 0, 1)]),
        t_poly(&negate(&p1), 1),
        t_poly(&negate(&p2), 2),
        t_poly(&p3, 3),
    ]);
    let num = bi(&[(1, 2, 1)]).mul(&bracket);

    // (1-t)[1 - w t(1+t)][1 - w t²(1+t+t²)][1 - w² t³(1+t)(1+t+t²)]
    let q3 = trim(t_product(&[&[0, 0, 0, 1], ONE_PLUS_T, &[1, 1, 1]]));
    let den = [
        t_poly(ONE_MINUS_T, 0),
        sum_bi(&[bi(&[(0, 0, 1)]), t_poly(&[0, -1, -1], 1)]),
        sum_bi(&[bi(&[(0, 0, 1)]), t_poly(&[0, 0, -1, -1, -1], 1)]),
        sum_bi(&[bi(&[(0, 0, 1)]), t_poly(&negate(&q3), 2)]),
    ]
    .iter()
    .fold(bi(&[(0, 0, 1)]), |acc, f| acc.mul(f));
    num.div(&den).expect("denominator has constant term 1")
}

const A_DEN_CUBIC_POS: &[i64] = &[1, 1, 0, 1];

fn negate(p: &[i64]) -> Vec<i64> {
    p.iter().map(|c| -c).collect()
}

fn sum_bi(parts: &[BivariateSeries]) -> BivariateSeries {
    let order = parts[0].order();
    let mut coeffs = vec![Vec::new(); order + 1];
    for part in parts {
        for (g, row) in part.coeffs.iter().enumerate() {
            let out: &mut Vec<BigRational> = &mut coeffs[g];
            if out.len() < row.len() {
                out.resize(row.len(), BigRational::zero());
            }
            for (j, c) in row.iter().enumerate() {
                out[j] += c;
            }
        }
    }
    BivariateSeries { coeffs }
}

/// Names accepted by [`named_series`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    LowerSimple,
    LowerA,
    LowerAMult,
    UpperC,
    InfiniteD,
    K1,
    K0,
    G111,
    Fprop1,
    H11,
    Fbar,
    Ftilde,
}

impl SeriesName {
    pub const ALL: [SeriesName; 12] = [
        SeriesName::LowerSimple,
        SeriesName::LowerA,
        SeriesName::LowerAMult,
        SeriesName::UpperC,
        SeriesName::InfiniteD,
        SeriesName::K1,
        SeriesName::K0,
        SeriesName::G111,
        SeriesName::Fprop1,
        SeriesName::H11,
        SeriesName::Fbar,
        SeriesName::Ftilde,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::LowerSimple => "lower_simple",
            SeriesName::LowerA => "lower_a",
            SeriesName::LowerAMult => "lower_a_mult",
            SeriesName::UpperC => "upper_c",
            SeriesName::InfiniteD => "infinite_d",
            SeriesName::K1 => "K1",
            SeriesName::K0 => "K0",
            SeriesName::G111 => "G111",
            SeriesName::Fprop1 => "Fprop1",
            SeriesName::H11 => "H11",
            SeriesName::Fbar => "Fbar",
            SeriesName::Ftilde => "Ftilde",
        }
    }
}

impl FromStr for SeriesName {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeriesName::ALL
            .into_iter()
            .find(|name| name.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| SeriesError::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedSeries {
    Univariate(TruncatedSeries),
    Bivariate(BivariateSeries),
}

pub fn named_series(name: SeriesName, order: usize) -> NamedSeries {
    let uni = |s| NamedSeries::Univariate(s);
    match name {
        SeriesName::LowerSimple => uni(lower_simple(order)),
        SeriesName::LowerA => uni(lower_a(order)),
        SeriesName::LowerAMult => NamedSeries::Bivariate(lower_a_mult(order)),
        SeriesName::UpperC => uni(upper_c(order)),
        SeriesName::InfiniteD => uni(infinite_d(order)),
        SeriesName::K1 => uni(k1(order)),
        SeriesName::K0 => uni(k0(order)),
        SeriesName::G111 => uni(g111(order)),
        SeriesName::Fprop1 => uni(fprop1(order)),
        SeriesName::H11 => uni(h11(order)),
        SeriesName::Fbar => uni(fbar(order)),
        SeriesName::Ftilde => uni(ftilde(order)),
    }
}

/// `v*(t) = (1 - sqrt(1-4t²)) / (2t²)`, the root that cancels the kernel
/// `1 - v²t²/(v-1)`.
pub fn kernel_root(order: usize) -> TruncatedSeries {
    let numerator = &TruncatedSeries::one(order + 2) - &sqrt_one_minus_4t2(order + 2);
    numerator
        .shift_down(2)
        .expect("1 - sqrt(1-4t²) starts at t²")
        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub order: usize,
    pub passed: bool,
}

/// Smallest order at which the identity suite is meaningful.
pub const MIN_IDENTITY_ORDER: usize = 16;

/// Checks that the closed forms assemble into one another.
pub fn identity_suite(order: usize) -> Vec<IdentityCheck> {
    let n = order.max(MIN_IDENTITY_ORDER);
    let check = |name, passed| IdentityCheck {
        name,
        order: n,
        passed,
    };
    let one_minus_t = poly(ONE_MINUS_T, n);

    let a_parts = &(&fbar(n) + &h11(n)) + &g111(n);
    let lower_a_n = lower_a(n);

    let c_parts = &(&k0(n) + &quotient(&k1(n), &one_minus_t)) + &fbar(n);

    let v = kernel_root(n);
    let t2 = TruncatedSeries::t(n).shift_up(1);
    let kernel = &(&v - &TruncatedSeries::one(n)) - &(&(&v * &v) * &t2);

    let reduced = lower_a_mult(n).eval_w(&BigRational::one());

    let l_parts = &(&fbar(n) + &ftilde(n)) + &fprop1(n);

    vec![
        check("lower_a assembly", a_parts == lower_a_n),
        check("upper_c assembly", c_parts == upper_c(n)),
        check("kernel vanishing", kernel.is_zero()),
        check("w = 1 reduction", reduced == lower_a_n),
        check("lower_simple assembly", l_parts == lower_simple(n)),
    ]
}

/// `c_{g+1} / c_g` from the closed form, as a float.
pub fn upper_c_ratio(g: usize) -> f64 {
    let c = upper_c(g + 1);
    let ratio = c.coeff(g + 1) / c.coeff(g);
    ratio.to_f64().unwrap_or(f64::NAN)
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::strong_count_formula;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    /// `H(u,v,t)` summed term by term over `(g, k)`.
    fn h_by_summation(u: &BigRational, v: &BigRational, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for g in 1..order as u32 {
            for k in 2.. {
                let level = (g + k - 1) as usize;
                if level > order {
                    break;
                }
                let s = strong_count_formula(g, k).expect("valid range");
                coeffs[level] +=
                    num_traits::pow(u.clone(), g as usize) * num_traits::pow(v.clone(), s as usize);
            }
        }
        TruncatedSeries::from_rationals(coeffs, order)
    }

    #[test]
    fn arithmetic() {
        let fib = poly(&[1], 6).div(&poly(FIB_DEN, 6)).unwrap();
        assert_eq!(ints(&fib), vec![1, 1, 2, 3, 5, 8, 13]);

        let x = poly(ONE_MINUS_T, 10);
        let prod = &x * &x.inverse().unwrap();
        assert_eq!(prod, TruncatedSeries::one(10));

        assert_eq!(ints(&lower_simple(6)), vec![0, 1, 2, 4, 7, 12, 20]);
        assert_eq!(
            poly(&[0, 1], 5).inverse(),
            Err(SeriesError::DivisionByNonUnit)
        );
    }

    #[test]
    fn square_roots() {
        let r = sqrt_one_minus_4t2(8);
        assert_eq!(ints(&r), vec![1, 0, -2, 0, -2, 0, -4, 0, -10]);
        assert_eq!(&r * &r, poly(&[1, 0, -4], 8));

        assert_eq!(
            TruncatedSeries::one(5).sqrt().unwrap(),
            TruncatedSeries::one(5)
        );
        assert_eq!(poly(&[2, 1], 5).sqrt(), Err(SeriesError::BadConstantTerm));

        let s = sqrt_ratio(40);
        let target = poly(&[1, 2], 40).div(&poly(&[1, -2], 40)).unwrap();
        assert_eq!(&s * &s, target);
    }

    /// `[x^n] sqrt(1-4x) = -(2/n) C(2n-2, n-1)` for `n >= 1`.
    #[test]
    fn sqrt_matches_binomial_formula() {
        let r = sqrt_one_minus_4t2(60);
        for n in 1..=30u64 {
            let mut binom = BigInt::one();
            for i in 0..(n - 1) {
                binom = binom * BigInt::from(2 * n - 2 - i) / BigInt::from(i + 1);
            }
            let expected = -BigRational::new(BigInt::from(2) * binom, BigInt::from(n));
            assert_eq!(r.coeff(2 * n as usize), &expected);
            assert!(r.coeff(2 * n as usize - 1).is_zero());
        }
    }

    #[test]
    fn named_values() {
        assert_eq!(ints(&upper_c(7)), vec![0, 1, 2, 4, 7, 13, 24, 44]);
        assert_eq!(
            ints(&lower_a(10))[1..],
            [1, 2, 4, 7, 12, 22, 37, 62, 104, 175]
        );
        assert_eq!(ints(&infinite_d(6)), vec![0, 1, 2, 3, 4, 6, 10]);
        assert_eq!(ints(&h11(6)), vec![0, 0, 1, 2, 3, 4, 5]);
        assert_eq!(ints(&fbar(4)), vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn h_closed_form_matches_summation() {
        for (u, v) in [(1, 1), (2, 3), (3, 2), (-1, 5)] {
            let (u, v) = (rat(u), rat(v));
            assert_eq!(h_closed_form(&u, &v, 40), h_by_summation(&u, &v, 40));
        }
    }

    #[test]
    fn identities_hold() {
        for check in identity_suite(64) {
            assert!(check.passed, "{} failed", check.name);
            assert_eq!(check.order, 64);
        }
        assert_eq!(identity_suite(3)[0].order, MIN_IDENTITY_ORDER);
    }

    #[test]
    fn fibonacci_convention() {
        let f: Vec<u64> = (0..10).map(|n| fibonacci(n).try_into().unwrap()).collect();
        assert_eq!(f, vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let l = lower_simple(60).to_naturals().unwrap();
        for g in 0..=60u32 {
            assert_eq!(l[g as usize], fibonacci(g + 2) - 1u32);
        }
    }

    #[test]
    fn bivariate_small_coefficients() {
        let w = lower_a_mult(12);
        for g in 1..=12 {
            assert_eq!(w.coeff(g, 2), rat(1), "w^2 t^{g}");
        }
        assert!(w.coeff(0, 0).is_zero());
        assert_eq!(w.eval_w(&BigRational::one()), lower_a(12));
    }

    #[test]
    fn names_round_trip() {
        for name in SeriesName::ALL {
            assert_eq!(name.as_str().parse::<SeriesName>().unwrap(), name);
        }
        assert_eq!(
            "nope".parse::<SeriesName>(),
            Err(SeriesError::UnknownName("nope".into()))
        );
    }
}
