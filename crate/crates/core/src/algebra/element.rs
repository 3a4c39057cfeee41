use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};

pub type Rational = BigRational;

/// Canonical `num/den` text for a rational.
pub fn rational_text(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// An element of `QG`, stored as integer numerators over one common
/// positive denominator, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    num: Vec<BigInt>,
    den: BigInt,
}

impl AlgebraElement {
    pub fn zero(order: usize) -> Self {
        Self { num: vec![BigInt::zero(); order], den: BigInt::one() }
    }

    pub fn one(order: usize) -> Self {
        Self::basis(order, 0)
    }

    pub fn basis(order: usize, x: usize) -> Self {
        let mut e = Self::zero(order);
        e.num[x] = BigInt::one();
        e
    }

    pub fn from_parts(num: Vec<BigInt>, den: BigInt) -> Self {
        let mut e = Self { num, den };
        e.normalize();
        e
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coeffs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Self::from_parts(num, den)
    }

    /// `hat(S) = (1/|S|) * sum of S`
    pub fn hat(order: usize, s: &Subgroup) -> Self {
        let mut num = vec![BigInt::zero(); order];
        for &x in s.members() {
            num[x] = BigInt::one();
        }
        Self::from_parts(num, BigInt::from(s.order()))
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeff(&self, x: usize) -> Rational {
        Rational::new(self.num[x].clone(), self.den.clone())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.support().count()
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = self.num.iter().zip(&other.num).map(|(a, b)| a * &fa + b * &fb).collect();
        Self::from_parts(num, den)
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_parts(num, &self.den * q.denom())
    }

    /// Convolution product in `QG`.
    pub fn mul(&self, other: &Self, g: &GroupTable) -> Self {
        let n = g.order();
        let left: Vec<(usize, &BigInt)> = self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let right: Vec<(usize, &BigInt)> = other.num.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let den = &self.den * &other.den;
        if let Some(num) = small_convolution(&left, &right, g) {
            return Self::from_parts(num, den);
        }
        let mut acc = vec![BigInt::zero(); n];
        for &(a, ca) in &left {
            for &(b, cb) in &right {
                acc[g.mul(a, b)] += ca * cb;
            }
        }
        Self::from_parts(acc, den)
    }

    /// `x^g`: coefficient of `h` moves to `g^-1 h g`.
    pub fn conj(&self, gp: &GroupTable, g: usize) -> Self {
        let mut num = vec![BigInt::zero(); self.num.len()];
        for (h, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                num[gp.conj(h, g)] = c.clone();
            }
        }
        Self { num, den: self.den.clone() }
    }

    /// `x^g == x` without materializing `x^g`.
    pub fn is_fixed_by(&self, gp: &GroupTable, g: usize) -> bool {
        self.num.iter().enumerate().all(|(h, c)| c.is_zero() || self.num[gp.conj(h, g)] == *c)
    }

    pub fn is_idempotent(&self, g: &GroupTable) -> bool {
        &self.mul(self, g) == self
    }

    /// Commutes with every element of `U` (enough to test generators).
    pub fn is_central_in(&self, gp: &GroupTable, u: &Subgroup) -> bool {
        u.gens().iter().all(|&x| self.is_fixed_by(gp, x))
    }

    /// Canonical text: `(label, "num/den")` pairs for the support, by index.
    pub fn canonical_text(&self, g: &GroupTable) -> Vec<(String, String)> {
        self.support().map(|x| (g.label(x), rational_text(&self.coeff(x)))).collect()
    }
}

/// Exact convolution through `i128` when every numerator fits in `i64` and
/// the worst-case accumulated sum cannot overflow.
fn small_convolution(left: &[(usize, &BigInt)], right: &[(usize, &BigInt)], g: &GroupTable) -> Option<Vec<BigInt>> {
    let l: Vec<(usize, i64)> = left.iter().map(|&(i, c)| c.to_i64().map(|v| (i, v))).collect::<Option<_>>()?;
    let r: Vec<(usize, i64)> = right.iter().map(|&(i, c)| c.to_i64().map(|v| (i, v))).collect::<Option<_>>()?;
    let ml = l.iter().map(|&(_, v)| v.unsigned_abs() as u128).max().unwrap_or(0);
    let mr = r.iter().map(|&(_, v)| v.unsigned_abs() as u128).max().unwrap_or(0);
    let terms = l.len().min(r.len()) as u128;
    let bound = ml.checked_mul(mr)?.checked_mul(terms.max(1))?;
    if bound >= i128::MAX as u128 {
        return None;
    }
    let mut acc = vec![0i128; g.order()];
    for &(a, ca) in &l {
        for &(b, cb) in &r {
            acc[g.mul(a, b)] += ca as i128 * cb as i128;
        }
    }
    Some(acc.into_iter().map(BigInt::from).collect())
}

/// `eps(H,K)`: `hat(H)` when `H = K`, otherwise the product of
/// `hat(K) - hat(L)` over minimal normal subgroups `L` of `H` properly
/// containing `K`.
pub fn epsilon(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Result<AlgebraElement> {
    if !g.is_normal_in(k, h) {
        return Err(Error::NotNormal("epsilon needs K normal in H".into()));
    }
    let n = g.order();
    let khat = AlgebraElement::hat(n, k);
    if h == k {
        return Ok(khat);
    }
    let mut acc = khat.clone();
    for l in g.minimal_normals_over(h, k) {
        let factor = khat.sub(&AlgebraElement::hat(n, &l));
        acc = acc.mul(&factor, g);
    }
    Ok(acc)
}

/// `Cen_U(x) = { u in U : x^u = x }`.
pub fn centralizer_of_element_in(g: &GroupTable, u: &Subgroup, x: &AlgebraElement) -> Subgroup {
    let members = u.members().iter().copied().filter(|&y| x.is_fixed_by(g, y)).collect();
    let c = Subgroup::from_members(g, members);
    debug_assert!(c.is_valid_in(g));
    c
}

/// The distinct `U`-conjugates of `x`, in order of first appearance.
pub fn distinct_conjugates(g: &GroupTable, u: &Subgroup, x: &AlgebraElement) -> Vec<AlgebraElement> {
    let mut seen: HashSet<AlgebraElement> = HashSet::new();
    let mut out = Vec::new();
    for &y in u.members() {
        let c = x.conj(g, y);
        if !seen.contains(&c) {
            seen.insert(c.clone());
            out.push(c);
        }
    }
    out
}

/// `e(U,H,K)`: sum of the distinct `U`-conjugates of `eps(H,K)`.
pub fn e_sum(g: &GroupTable, u: &Subgroup, h: &Subgroup, k: &Subgroup) -> Result<AlgebraElement> {
    if !h.is_subgroup_of(u) {
        return Err(Error::Precondition("e(U,H,K) needs H <= U".into()));
    }
    let eps = epsilon(g, h, k)?;
    Ok(sum_of_conjugates(g, u, &eps))
}

pub fn sum_of_conjugates(g: &GroupTable, u: &Subgroup, x: &AlgebraElement) -> AlgebraElement {
    distinct_conjugates(g, u, x).iter().fold(AlgebraElement::zero(g.order()), |acc, c| acc.add(c))
}

/// The rational `lambda` with `x^2 = lambda x`.
pub fn idempotency_scalar(g: &GroupTable, x: &AlgebraElement) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::Precondition("idempotency scalar of zero".into()));
    }
    let sq = x.mul(x, g);
    let pivot = x.support().next().expect("non-zero");
    let lambda = sq.coeff(pivot) / x.coeff(pivot);
    if sq != x.scale(&lambda) {
        return Err(Error::NotScalarMultiple);
    }
    if lambda.is_zero() {
        return Err(Error::NotScalarMultiple);
    }
    Ok(lambda)
}
