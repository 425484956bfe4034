//! Orthogonal representations of `GL2(F_q)`, `q` odd.
//!
//! All cohomology is computed after restriction to the diagonal torus
//! `D = C_(q-1) x C_(q-1)`, which detects mod-2 cohomology. Characters of
//! `F_q^x` are indexed by `j mod q-1` against a fixed generator and those of
//! `F_(q^2)^x` by `u mod q^2-1`; only values at `+-1` are ever needed, where
//! `chi_j(-1) = (-1)^j` and `theta_u(-1) = (-1)^u`.

mod descriptor;
mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{min_valuation, ord2, scaled_bit, Valuation};
use crate::bicyclic::{
    obstruction_closed, obstruction_from_profile_oracle, total_sw_reduced, ParityProfile, Regime,
};
use crate::error::{Error, Result};
use crate::ring::{Mod2Class, Obstruction, RingDescriptor};

pub use descriptor::parse_descriptor;
pub use tables::{discrepancy_report, emit_table, Discrepancy, DiscrepancyKind, Table, TableRow};

/// The field size `q`, validated as an odd prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldParam {
    q: u64,
}

impl FieldParam {
    pub fn new(q: u64) -> Result<Self> {
        if q < 3 || q % 2 == 0 {
            return Err(Error::Precondition(format!(
                "q must be an odd prime power, got {q}"
            )));
        }
        // q < 2^32 keeps q^2 - 1 and the group order comfortably in range
        if q >= 1 << 31 {
            return Err(Error::Precondition(format!("q = {q} is too large")));
        }
        let p = (3..)
            .step_by(2)
            .take_while(|d| d * d <= q)
            .find(|d| q % d == 0)
            .unwrap_or(q);
        let mut r = q;
        while r % p == 0 {
            r /= p;
        }
        if r != 1 {
            return Err(Error::Precondition(format!(
                "q must be an odd prime power, got {q}"
            )));
        }
        Ok(FieldParam { q })
    }

    pub fn q(self) -> u64 {
        self.q
    }

    /// Order of `F_q^x`, the exponent of the diagonal torus.
    pub fn n(self) -> u64 {
        self.q - 1
    }

    fn cusp_modulus(self) -> u64 {
        self.q * self.q - 1
    }

    /// Mod4 when `q = 1 mod 4`, Mod2 when `q = 3 mod 4`.
    pub fn regime(self) -> Regime {
        if self.q % 4 == 1 {
            Regime::Mod4
        } else {
            Regime::Mod2
        }
    }

    pub fn ring(self) -> RingDescriptor {
        self.regime().ring()
    }

    /// `|GL2(F_q)| = (q^2 - 1)(q^2 - q)`.
    pub fn order(self) -> BigUint {
        let q = BigUint::from(self.q);
        (&q * &q - 1u32) * (&q * &q - &q)
    }

    /// Index of the quadratic character `sgn`.
    pub fn sgn_index(self) -> u64 {
        (self.q - 1) / 2
    }

    pub fn linear(self, j: u64) -> Irrep {
        Irrep::Linear(j % self.n())
    }

    pub fn steinberg(self, j: u64) -> Irrep {
        Irrep::SteinbergTwist(j % self.n())
    }

    pub fn principal(self, j1: u64, j2: u64) -> Result<Irrep> {
        let (a, b) = (j1 % self.n(), j2 % self.n());
        if a == b {
            return Err(Error::Precondition(format!(
                "principal series needs distinct characters, got j1 = j2 = {a} mod {}",
                self.n()
            )));
        }
        Ok(Irrep::PrincipalSeries(a.min(b), a.max(b)))
    }

    pub fn cuspidal(self, u: u64) -> Result<Irrep> {
        let m = self.cusp_modulus();
        let u = u % m;
        if u % (self.q + 1) == 0 {
            return Err(Error::Precondition(format!(
                "cusp({u}) is not regular for q = {}: theta = theta^q",
                self.q
            )));
        }
        let conj = mul_mod(u, self.q, m);
        Ok(Irrep::Cuspidal(u.min(conj)))
    }

    pub fn dim(self, irrep: Irrep) -> u64 {
        match irrep {
            Irrep::Linear(_) => 1,
            Irrep::SteinbergTwist(_) => self.q,
            Irrep::PrincipalSeries(..) => self.q + 1,
            Irrep::Cuspidal(_) => self.q - 1,
        }
    }

    pub fn dual(self, irrep: Irrep) -> Irrep {
        let n = self.n();
        let neg = |j: u64| (n - j) % n;
        match irrep {
            Irrep::Linear(j) => Irrep::Linear(neg(j)),
            Irrep::SteinbergTwist(j) => Irrep::SteinbergTwist(neg(j)),
            Irrep::PrincipalSeries(a, b) => self.principal(neg(a), neg(b)).expect("distinct"),
            Irrep::Cuspidal(u) => {
                let m = self.cusp_modulus();
                self.cuspidal((m - u) % m).expect("regular")
            }
        }
    }

    /// Orthogonal irreducibles: `1`, `sgn`, `St`, `St x sgn`, `pi(1,sgn)`,
    /// `pi(chi,chi^-1)`, and cuspidals with `theta^q = theta^-1`.
    pub fn is_orthogonal(self, irrep: Irrep) -> bool {
        let n = self.n();
        match irrep {
            Irrep::Linear(j) | Irrep::SteinbergTwist(j) => (2 * j) % n == 0,
            Irrep::PrincipalSeries(a, b) => (a + b) % n == 0 || (a, b) == (0, self.sgn_index()),
            Irrep::Cuspidal(u) => u % (self.q - 1) == 0,
        }
    }

    pub fn diagonal(self, irrep: Irrep) -> DiagonalValues {
        let q = self.q as i64;
        let sign = |j: u64| if j % 2 == 0 { 1i64 } else { -1 };
        let (z1, zm1, t) = match irrep {
            Irrep::Linear(j) => (1, 1, sign(j)),
            Irrep::SteinbergTwist(j) => (q, q, sign(j)),
            Irrep::PrincipalSeries(a, b) => (q + 1, (q + 1) * sign(a + b), sign(a) + sign(b)),
            Irrep::Cuspidal(u) => (q - 1, (q - 1) * sign(u), 0),
        };
        DiagonalValues::new(z1, zm1, t)
    }

    /// Every irreducible representation, each exactly once.
    pub fn irreps(self) -> Vec<Irrep> {
        let n = self.n();
        let mut out = Vec::new();
        out.extend((0..n).map(Irrep::Linear));
        out.extend((0..n).map(Irrep::SteinbergTwist));
        for a in 0..n {
            for b in a + 1..n {
                out.push(Irrep::PrincipalSeries(a, b));
            }
        }
        let m = self.cusp_modulus();
        for u in 0..m {
            if let Ok(Irrep::Cuspidal(c)) = self.cuspidal(u) {
                if c == u {
                    out.push(Irrep::Cuspidal(u));
                }
            }
        }
        out
    }

    pub fn orth(self, irrep: Irrep) -> Result<Oir> {
        if self.is_orthogonal(irrep) {
            Ok(Oir::Orth(irrep))
        } else {
            Err(Error::Precondition(format!(
                "{} is not orthogonal for q = {}; use S(...)",
                irrep, self.q
            )))
        }
    }

    /// `S(phi) = phi + dual(phi)` for non-orthogonal `phi`, stored by the
    /// smaller of `phi` and its dual.
    pub fn sym(self, irrep: Irrep) -> Result<Oir> {
        if self.is_orthogonal(irrep) {
            return Err(Error::Precondition(format!(
                "{} is already orthogonal for q = {}; S(...) needs a non-orthogonal irreducible",
                irrep, self.q
            )));
        }
        Ok(Oir::Sym(irrep.min(self.dual(irrep))))
    }

    /// Every orthogonally irreducible representation, each exactly once.
    pub fn oirs(self) -> Vec<Oir> {
        let mut out = Vec::new();
        for irrep in self.irreps() {
            if self.is_orthogonal(irrep) {
                out.push(Oir::Orth(irrep));
            } else if irrep <= self.dual(irrep) {
                out.push(Oir::Sym(irrep));
            }
        }
        out
    }

    pub fn oir_dim(self, oir: Oir) -> u64 {
        match oir {
            Oir::Orth(i) => self.dim(i),
            Oir::Sym(i) => 2 * self.dim(i),
        }
    }

    pub fn oir_diagonal(self, oir: Oir) -> DiagonalValues {
        match oir {
            Oir::Orth(i) => self.diagonal(i),
            Oir::Sym(i) => self.diagonal(i).scale(&BigInt::from(2)),
        }
    }

    pub fn family(self, oir: Oir) -> Family {
        let s = self.sgn_index();
        match oir {
            Oir::Orth(Irrep::Linear(0)) => Family::Trivial,
            Oir::Orth(Irrep::Linear(_)) => Family::Sign,
            Oir::Orth(Irrep::SteinbergTwist(0)) => Family::Steinberg,
            Oir::Orth(Irrep::SteinbergTwist(_)) => Family::SteinbergSgn,
            Oir::Orth(Irrep::PrincipalSeries(a, b)) if (a, b) == (0, s) => Family::PiOneSgn,
            Oir::Orth(Irrep::PrincipalSeries(..)) => Family::PiChiChiInv,
            Oir::Orth(Irrep::Cuspidal(_)) => Family::CuspOrth,
            Oir::Sym(Irrep::Linear(_)) => Family::SLinear,
            Oir::Sym(Irrep::SteinbergTwist(_)) => Family::SSteinberg,
            Oir::Sym(Irrep::PrincipalSeries(..)) => Family::SPrincipal,
            Oir::Sym(Irrep::Cuspidal(_)) => Family::SCusp,
        }
    }

    /// Coefficients of `b1` in `w1` and `b2` in `w2`.
    pub fn table1(self, oir: Oir) -> (bool, bool) {
        let q = self.q;
        let one_mod4 = q % 4 == 1;
        let odd = |x: u64| x % 2 == 1;
        let half = (q - 1) / 2;
        match (self.family(oir), oir) {
            (Family::Trivial, _) => (false, false),
            (Family::Sign, _) => (true, false),
            (Family::PiChiChiInv, Oir::Orth(Irrep::PrincipalSeries(a, _))) => {
                let base = if one_mod4 { (q - 1) / 4 } else { (q - 3) / 4 };
                (true, odd(base + a))
            }
            (Family::PiOneSgn | Family::SteinbergSgn, _) => {
                (false, odd(if one_mod4 { (q - 1) / 4 } else { (q + 1) / 4 }))
            }
            (Family::Steinberg | Family::CuspOrth, _) => {
                (true, odd(if one_mod4 { (q - 1) / 4 } else { (q - 3) / 4 }))
            }
            (Family::SLinear, Oir::Sym(Irrep::Linear(j))) => (false, odd(j)),
            (Family::SSteinberg, Oir::Sym(Irrep::SteinbergTwist(j))) => (false, odd(j + half)),
            (Family::SPrincipal, Oir::Sym(Irrep::PrincipalSeries(a, b))) => {
                (false, odd(a + b + half))
            }
            (Family::SCusp, _) => (false, odd(half)),
            (family, oir) => unreachable!("{family:?} does not match {oir:?}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

/// Irreducible complex representations of `GL2(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irrep {
    /// `chi_j o det`.
    Linear(u64),
    /// `St x (chi_j o det)`.
    SteinbergTwist(u64),
    /// `pi(chi_a, chi_b)`, `a < b`.
    PrincipalSeries(u64, u64),
    /// `pi_theta` for `theta = theta_u`, `u` the smaller of `u`, `uq`.
    Cuspidal(u64),
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irrep::Linear(j) => write!(f, "lin({j})"),
            Irrep::SteinbergTwist(j) => write!(f, "st({j})"),
            Irrep::PrincipalSeries(a, b) => write!(f, "ps({a},{b})"),
            Irrep::Cuspidal(u) => write!(f, "cusp({u})"),
        }
    }
}

/// Orthogonally irreducible representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Oir {
    Orth(Irrep),
    Sym(Irrep),
}

impl fmt::Display for Oir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Oir::Orth(i) => write!(f, "{i}"),
            Oir::Sym(i) => write!(f, "S({i})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Trivial,
    Sign,
    PiChiChiInv,
    PiOneSgn,
    Steinberg,
    SteinbergSgn,
    CuspOrth,
    SLinear,
    SSteinberg,
    SPrincipal,
    SCusp,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Trivial => "1",
            Family::Sign => "sgn_G",
            Family::PiChiChiInv => "pi(chi,chi^-1)",
            Family::PiOneSgn => "pi(1,sgn)",
            Family::Steinberg => "St_G",
            Family::SteinbergSgn => "St_G*sgn_G",
            Family::CuspOrth => "pi_theta",
            Family::SLinear => "S(chi)",
            Family::SSteinberg => "S(St_G*chi)",
            Family::SPrincipal => "S(pi(chi1,chi2))",
            Family::SCusp => "S(pi_theta)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Character values at `z_1`, `z_-1` and `t_(1,-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalValues {
    pub at_z1: BigInt,
    pub at_zminus1: BigInt,
    pub at_t1minus1: BigInt,
}

impl DiagonalValues {
    pub fn new(z1: i64, zm1: i64, t: i64) -> Self {
        DiagonalValues {
            at_z1: z1.into(),
            at_zminus1: zm1.into(),
            at_t1minus1: t.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        DiagonalValues {
            at_z1: &self.at_z1 * c,
            at_zminus1: &self.at_zminus1 * c,
            at_t1minus1: &self.at_t1minus1 * c,
        }
    }

    pub fn add(&self, o: &DiagonalValues) -> Self {
        DiagonalValues {
            at_z1: &self.at_z1 + &o.at_z1,
            at_zminus1: &self.at_zminus1 + &o.at_zminus1,
            at_t1minus1: &self.at_t1minus1 + &o.at_t1minus1,
        }
    }
}

/// `m10 = m01 = (z1 - z_-1)/d`, `m11 = (z1 - 2 t + z_-1)/d`, with `d = 8`
/// for `q = 1 mod 4` and `d = 4` for `q = 3 mod 4`.
pub fn profile_from_diagonal(fp: FieldParam, dv: &DiagonalValues) -> Result<ParityProfile> {
    let regime = fp.regime();
    let d = BigInt::from(regime.divisor());
    let num01 = &dv.at_z1 - &dv.at_zminus1;
    let num11 = &dv.at_z1 - &dv.at_t1minus1 * 2 + &dv.at_zminus1;
    let mut vals = Vec::with_capacity(2);
    for num in [num01, num11] {
        if !(&num % &d).is_zero() {
            return Err(Error::Precondition(format!(
                "diagonal values ({}, {}, {}) are not those of a real representation of GL2(F_{})",
                dv.at_z1, dv.at_zminus1, dv.at_t1minus1, fp.q
            )));
        }
        let v = (num / &d).to_biguint().ok_or_else(|| {
            Error::Precondition("diagonal values give a negative multiplicity".into())
        })?;
        vals.push(v);
    }
    let m11 = vals.pop().expect("two values");
    let m01 = vals.pop().expect("two values");
    Ok(ParityProfile {
        m10: m01.clone(),
        m01,
        m11,
        regime,
    })
}

/// Formal nonnegative combination of OIRs of `GL2(F_q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthRep {
    field: FieldParam,
    terms: BTreeMap<Oir, BigUint>,
}

/// Obstruction of a `GL2` representation, plus anything the available data
/// cannot pin down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gl2Obstruction {
    pub obstruction: Option<Obstruction>,
    pub undetermined: Vec<String>,
}

impl OrthRep {
    pub fn zero(field: FieldParam) -> Self {
        OrthRep {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(field: FieldParam, oir: Oir) -> Self {
        Self::zero(field).plus(oir, BigUint::one())
    }

    pub fn plus(mut self, oir: Oir, mult: BigUint) -> Self {
        if !mult.is_zero() {
            *self.terms.entry(oir).or_insert_with(BigUint::zero) += mult;
        }
        self
    }

    pub fn add(&self, other: &OrthRep) -> Result<OrthRep> {
        if self.field != other.field {
            return Err(Error::Invalid(
                "cannot add representations of different groups".into(),
            ));
        }
        let mut out = self.clone();
        for (oir, m) in &other.terms {
            out = out.plus(*oir, m.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigUint) -> OrthRep {
        let mut out = Self::zero(self.field);
        for (oir, m) in &self.terms {
            out = out.plus(*oir, m * c);
        }
        out
    }

    /// The regular representation: every orthogonal irreducible and every
    /// `S(phi)` with multiplicity `dim(phi)`.
    pub fn regular(field: FieldParam) -> OrthRep {
        let mut out = Self::zero(field);
        for oir in field.oirs() {
            let d = match oir {
                Oir::Orth(i) | Oir::Sym(i) => field.dim(i),
            };
            out = out.plus(oir, BigUint::from(d));
        }
        out
    }

    pub fn field(&self) -> FieldParam {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Oir, BigUint> {
        &self.terms
    }

    pub fn dim(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(oir, m)| m * self.field.oir_dim(*oir))
            .sum()
    }

    pub fn diagonal_values(&self) -> DiagonalValues {
        self.terms
            .iter()
            .fold(DiagonalValues::zero(), |acc, (oir, m)| {
                acc.add(
                    &self
                        .field
                        .oir_diagonal(*oir)
                        .scale(&BigInt::from(m.clone())),
                )
            })
    }

    pub fn profile(&self) -> Result<ParityProfile> {
        profile_from_diagonal(self.field, &self.diagonal_values())
    }

    /// Number of chiral summands, counted with multiplicity.
    fn chiral_count(&self) -> BigUint {
        self.terms
            .iter()
            .filter(|(oir, _)| self.field.table1(**oir).0)
            .map(|(_, m)| m.clone())
            .sum()
    }

    /// Coefficient of `b1` in `w1`.
    pub fn w1(&self) -> bool {
        self.chiral_count().bit(0)
    }

    /// Coefficient of `b2` in `w2`. For `q = 3 mod 4` a sum with an odd
    /// number of pairs of chiral summands picks up `b1^2`, whose expression
    /// in `b2` is not available; the coefficient is then `None`.
    pub fn w2(&self) -> Option<bool> {
        let sum = self
            .terms
            .iter()
            .filter(|(oir, m)| self.field.table1(**oir).1 && m.bit(0))
            .count()
            % 2
            == 1;
        if self.field.regime() == Regime::Mod2 {
            let c = self.chiral_count();
            // C(c, 2) is odd iff c = 2 or 3 mod 4
            if c.bit(1) {
                return None;
            }
        }
        Some(sum)
    }

    pub fn is_achiral(&self) -> bool {
        !self.w1()
    }

    /// `w2 = w1^2`. For `q = 1 mod 4` that is `w2 = 0` since `b1^2`
    /// restricts to `(s1+s2)^2 = 0`; for `q = 3 mod 4` it is decided in
    /// `H*(D)` from the profile.
    pub fn is_spinorial(&self) -> Result<bool> {
        match self.field.regime() {
            Regime::Mod4 => Ok(self.w2() == Some(false)),
            Regime::Mod2 => {
                let total = total_sw_reduced(&self.profile()?, 2);
                let w1 = total.homogeneous(1);
                Ok(total.homogeneous(2) == w1.square(None))
            }
        }
    }

    /// `w1` and `w2` as classes in `H*(D)`. With `q = 1 mod 4`, the `s1*s2`
    /// part of `w2` needs `m0`, the multiplicity of the trivial character of
    /// `D`; without it the `t` part alone is returned and flagged.
    pub fn w1_w2_classes(
        &self,
        m0: Option<&BigUint>,
    ) -> Result<(Mod2Class, Mod2Class, Vec<String>)> {
        let ring = self.field.ring();
        match self.field.regime() {
            Regime::Mod4 => {
                let b1 = Mod2Class::parse(ring, "s1 + s2").expect("literal");
                let w1 = if self.w1() { b1 } else { Mod2Class::zero(ring) };
                let p = self.profile()?;
                let mut w2 = if (&p.m01 + &p.m11).bit(0) {
                    Mod2Class::parse(ring, "t1 + t2").expect("literal")
                } else {
                    Mod2Class::zero(ring)
                };
                let mut notes = Vec::new();
                match m0 {
                    Some(m0) => {
                        // with m1 = m2 = m3 mod 2 (achiral) the s1*s2
                        // coefficient is m1 = dim + m0; with exactly one of
                        // them off (chiral) it is dim + m0 + 1
                        let bit = (self.dim() + m0).bit(0) ^ self.w1();
                        if bit {
                            w2 = w2.add(&Mod2Class::parse(ring, "s1*s2").expect("literal"))?;
                        }
                    }
                    None => notes.push("s1*s2 coefficient of w2 undetermined without m0".into()),
                }
                Ok((w1, w2, notes))
            }
            Regime::Mod2 => {
                let total = total_sw_reduced(&self.profile()?, 2);
                Ok((total.homogeneous(1), total.homogeneous(2), Vec::new()))
            }
        }
    }

    /// Closed-form obstruction.
    ///
    /// - chiral: degree 1, `b1` restricted (`k = 0`)
    /// - `q = 1 mod 4`, achiral spinorial: `k = min(Ord2(m01+m11), Ord2(m01)+1)`,
    ///   degree `2^(k+1)`
    /// - `q = 1 mod 4`, achiral non-spinorial: degree 2
    /// - `q = 3 mod 4`, achiral: same `k`, degree `2^k`, in `v1, v2`
    pub fn obstruction(&self, m0: Option<&BigUint>) -> Result<Gl2Obstruction> {
        let ring = self.field.ring();
        let regime = self.field.regime();
        if self.w1() {
            let class = match regime {
                Regime::Mod4 => Mod2Class::parse(ring, "s1 + s2"),
                Regime::Mod2 => Mod2Class::parse(ring, "v1 + v2"),
            }
            .expect("literal");
            return Ok(Gl2Obstruction {
                obstruction: Some(Obstruction {
                    degree: 1,
                    class,
                    k: Some(0),
                }),
                undetermined: Vec::new(),
            });
        }
        let profile = self.profile()?;
        if regime == Regime::Mod4 && !self.is_spinorial()? {
            let (_, w2, notes) = self.w1_w2_classes(m0)?;
            return Ok(Gl2Obstruction {
                obstruction: Some(Obstruction {
                    degree: 2,
                    class: w2,
                    k: None,
                }),
                undetermined: notes,
            });
        }
        Ok(Gl2Obstruction {
            obstruction: theorem_obstruction(&profile)?,
            undetermined: Vec::new(),
        })
    }

    /// First nonzero class of the profile oracle, for cross-checking. Only
    /// meaningful for achiral spinorial representations when
    /// `q = 1 mod 4`; for `q = 3 mod 4` it is the exact answer.
    pub fn obstruction_oracle(&self) -> Result<Option<Obstruction>> {
        let profile = self.profile()?;
        let dim = u64::try_from(self.dim()).unwrap_or(u64::MAX);
        Ok(obstruction_from_profile_oracle(&profile, dim))
    }
}

/// `k = min(Ord2(m01 + m11), Ord2(m01) + 1)` for a profile with
/// `m10 = m01` and `m01 + m11` even.
pub fn gl2_k(profile: &ParityProfile) -> Result<Valuation> {
    if profile.m10 != profile.m01 {
        return Err(Error::Invalid("GL2 profiles have m10 = m01".into()));
    }
    let s = &profile.m01 + &profile.m11;
    if s.bit(0) {
        return Err(Error::Precondition(
            "w2 != 0: m01 + m11 must be even for the closed form".into(),
        ));
    }
    Ok(min_valuation([ord2(&s), ord2(&profile.m01).plus(1)]))
}

/// Two-term closed form for `m10 = m01`:
/// `((m01+m11)/2^k)(x1^(2^k) + x2^(2^k)) + (m01/2^(k-1)) x1^(2^(k-1)) x2^(2^(k-1))`
/// with `x = t` (degree `2^(k+1)`) or `x = v` (degree `2^k`). Checked
/// against the three-term bicyclic form.
pub fn theorem_obstruction(profile: &ParityProfile) -> Result<Option<Obstruction>> {
    let k = match gl2_k(profile)? {
        Valuation::Infinite => return Ok(None),
        Valuation::Finite(k) => k,
    };
    let ring = profile.ring();
    let (g1, g2, degree) = match profile.regime {
        Regime::Mod4 => ("t1", "t2", 1u64.checked_shl((k + 1) as u32)),
        Regime::Mod2 => ("v1", "v2", 1u64.checked_shl(k as u32)),
    };
    let degree = degree
        .filter(|_| k < 62)
        .ok_or_else(|| Error::Invalid(format!("k = {k} is out of range")))?;
    let (big, small) = (1u64 << k, 1u64 << (k - 1));
    let mut class = Mod2Class::zero(ring);
    if scaled_bit(&(&profile.m01 + &profile.m11), k) {
        class = class.add(&Mod2Class::parse(
            ring,
            &format!("{g1}^{big} + {g2}^{big}"),
        )?)?;
    }
    if scaled_bit(&profile.m01, k - 1) {
        class = class.add(&Mod2Class::parse(
            ring,
            &format!("{g1}^{small}*{g2}^{small}"),
        )?)?;
    }
    let out = Obstruction {
        degree,
        class,
        k: Some(k),
    };
    match obstruction_closed(profile)? {
        Some(o) if o.same_class(&out) && o.k == out.k => Ok(Some(out)),
        other => Err(Error::Invalid(format!(
            "closed forms disagree on {profile:?}: {out:?} vs {other:?}"
        ))),
    }
}
