//! Dense univariate polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{Fp, FpPoly};

/// Coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    #[cfg(test)]
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Number of factors `x` dividing `self`.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn drop_x_power(&self, k: usize) -> Self {
        Self::new(self.coeffs[k..].to_vec())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient over the integers, if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let dl = divisor.lc();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * &qc;
            }
            q[k] = qc;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }

    pub fn to_fp(&self, field: &Fp) -> FpPoly {
        field.poly(self.coeffs.iter().map(|c| field.reduce_big(c)).collect())
    }

    /// Lifts a polynomial mod `m` to coefficients in `(-m/2, m/2]`.
    pub fn symmetric_mod(&self, m: &BigInt) -> Self {
        let half = m >> 1;
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Euclidean norm rounded up.
    pub fn norm2_ceil(&self) -> BigInt {
        let sq: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        let r = sq.sqrt();
        if &r * &r == sq {
            r
        } else {
            r + 1
        }
    }
}

/// Greatest common divisor over the integers, primitive with positive
/// leading coefficient.
///
/// Modular images over word-sized primes are combined by CRT until the
/// primitive lift divides both inputs.
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let a = a.primitive();
    let b = b.primitive();
    if a.degree() == 0 || b.degree() == 0 {
        return ZPoly::one();
    }
    let gamma = a.lc().gcd(&b.lc());
    let mut acc: Option<(ZPoly, BigInt, usize)> = None;
    for p in super::modp::large_primes() {
        let field = Fp::new(p);
        let pb = BigInt::from(p);
        if (a.lc() % &pb).is_zero() || (b.lc() % &pb).is_zero() {
            continue;
        }
        let g = field.gcd(&a.to_fp(&field), &b.to_fp(&field));
        let d = g.degree();
        if d == 0 {
            return ZPoly::one();
        }
        let g = field.scale(&g, field.reduce_big(&gamma));
        let image = ZPoly::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect());
        let next = match acc.take() {
            Some((h, m, deg)) if deg == d => {
                let combined = crt(&h, &m, &image, &pb);
                (combined, m * &pb, d)
            }
            Some((h, m, deg)) if deg < d => {
                acc = Some((h, m, deg));
                continue;
            }
            _ => (image, pb.clone(), d),
        };
        let candidate = next.0.symmetric_mod(&next.1).primitive();
        if candidate.degree() == d
            && a.div_exact(&candidate).is_some()
            && b.div_exact(&candidate).is_some()
        {
            return candidate;
        }
        acc = Some(next);
    }
    unreachable!("prime supply exhausted in modular gcd")
}

fn crt(h: &ZPoly, m: &BigInt, image: &ZPoly, p: &BigInt) -> ZPoly {
    // x = h (mod m), x = image (mod p)
    let inv = m.extended_gcd(p).x.mod_floor(p);
    let n = h.coeffs.len().max(image.coeffs.len());
    let coeffs = (0..n)
        .map(|k| {
            let hk = h.coeffs.get(k).cloned().unwrap_or_default();
            let ik = image.coeffs.get(k).cloned().unwrap_or_default();
            let t = ((ik - &hk) * &inv).mod_floor(p);
            hk + t * m
        })
        .collect();
    ZPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let a = ZPoly::from_i64(&[1, 1]);
        let b = ZPoly::from_i64(&[-3, 0, 2]);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(ZPoly::from_i64(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(
            ZPoly::from_i64(&[1, 1]).div_exact(&ZPoly::from_i64(&[1, 2])),
            None
        );
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let common = ZPoly::from_i64(&[3, -1, 0, 5]);
        let a = common.mul(&ZPoly::from_i64(&[1, 1]));
        let b = common.mul(&ZPoly::from_i64(&[-2, 0, 7]));
        assert_eq!(gcd(&a, &b), common);
        assert_eq!(
            gcd(&ZPoly::from_i64(&[1, 1]), &ZPoly::from_i64(&[1, -1])),
            ZPoly::one()
        );
    }

    #[test]
    fn gcd_with_large_coefficients() {
        let big = BigInt::from(10).pow(30u32);
        let common = ZPoly::new(vec![big.clone(), BigInt::from(1), -big]);
        let a = common.mul(&common).mul(&ZPoly::from_i64(&[7, 1]));
        let b = common.mul(&ZPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(gcd(&a, &b), common.primitive());
    }

    #[test]
    fn symmetric_mod_range() {
        let m = BigInt::from(10);
        let p = ZPoly::from_i64(&[4, 5, 6, 23]);
        assert_eq!(p.symmetric_mod(&m), ZPoly::from_i64(&[4, 5, -4, 3]));
    }
}
