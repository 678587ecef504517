//! Univariate polynomials over a prime field `Z/p`, `p < 2^32`.
//!
//! Squarefree factorization over `Z/p` is distinct-degree splitting followed
//! by Cantor-Zassenhaus equal-degree splitting (odd `p` only).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Coefficients low to high, reduced, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpPoly(Vec<u64>);

impl FpPoly {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }

    fn is_one(&self) -> bool {
        self.0 == [1]
    }
}

/// The prime field `Z/p`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..(1 << 32)).contains(&p));
        Self { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn poly(&self, mut coeffs: Vec<u64>) -> FpPoly {
        for c in coeffs.iter_mut() {
            *c %= self.p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly(coeffs)
    }

    pub fn reduce_big(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits in u64")
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn one(&self) -> FpPoly {
        FpPoly(vec![1])
    }

    fn x(&self) -> FpPoly {
        self.poly(vec![0, 1])
    }

    #[cfg(test)]
    pub fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| (a.0.get(i).copied().unwrap_or(0) + b.0.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        self.poly(v)
    }

    pub fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| {
                let x = a.0.get(i).copied().unwrap_or(0);
                let y = b.0.get(i).copied().unwrap_or(0);
                (x + self.p - y) % self.p
            })
            .collect();
        self.poly(v)
    }

    pub fn scale(&self, a: &FpPoly, k: u64) -> FpPoly {
        self.poly(a.0.iter().map(|&c| self.mulm(c, k % self.p)).collect())
    }

    pub fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_zero() || b.is_zero() {
            return FpPoly(vec![]);
        }
        let mut out = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.poly(out)
    }

    pub fn monic(&self, a: &FpPoly) -> FpPoly {
        if a.is_zero() {
            return a.clone();
        }
        self.scale(a, self.inv(a.lc()))
    }

    pub fn divrem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!b.is_zero(), "division by zero polynomial");
        if a.0.len() < b.0.len() {
            return (FpPoly(vec![]), a.clone());
        }
        let inv = self.inv(b.lc());
        let db = b.degree();
        let mut rem = a.0.clone();
        let mut q = vec![0u64; a.0.len() - db];
        for k in (0..q.len()).rev() {
            let top = rem[k + db];
            if top == 0 {
                continue;
            }
            let qc = self.mulm(top, inv);
            q[k] = qc;
            for (j, &c) in b.0.iter().enumerate() {
                rem[k + j] = (rem[k + j] + self.p - self.mulm(c, qc)) % self.p;
            }
        }
        (self.poly(q), self.poly(rem))
    }

    pub fn rem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), FpPoly(vec![]));
        let (mut t0, mut t1) = (FpPoly(vec![]), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let k = self.inv(r0.lc());
        (self.scale(&r0, k), self.scale(&s0, k), self.scale(&t0, k))
    }

    pub fn derivative(&self, a: &FpPoly) -> FpPoly {
        self.poly(
            a.0.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &FpPoly, exp: &BigUint, modulus: &FpPoly) -> FpPoly {
        let mut acc = self.one();
        let base = self.rem(base, modulus);
        for bit in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(bit) {
                acc = self.rem(&self.mul(&acc, &base), modulus);
            }
        }
        self.rem(&acc, modulus)
    }

    /// True iff `a` has no repeated factor over `Z/p`.
    pub fn is_squarefree(&self, a: &FpPoly) -> bool {
        let da = self.derivative(a);
        !da.is_zero() && self.gcd(a, &da).is_one()
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self, f: &FpPoly) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x = self.x();
        let p = BigUint::from(self.p);
        let mut h = x.clone();
        let mut d = 0;
        while rest.degree() >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if !g.is_one() {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        if rest.degree() > 0 {
            let deg = rest.degree();
            out.push((rest, deg));
        }
        out
    }

    /// Splits a monic product of distinct degree-`d` irreducibles.
    pub fn equal_degree(&self, f: &FpPoly, d: usize, rng: &mut StdRng) -> Vec<FpPoly> {
        if f.degree() == d {
            return vec![f.clone()];
        }
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        let exp = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a = self.poly((0..f.degree()).map(|_| rng.gen_range(0..self.p)).collect());
            if a.degree() == 0 {
                continue;
            }
            let g = self.gcd(&a, f);
            let g = if !g.is_one() {
                g
            } else {
                let b = self.sub(&self.powmod(&a, &exp, f), &self.one());
                self.gcd(&b, f)
            };
            if !g.is_one() && g.degree() < f.degree() {
                let other = self.monic(&self.divrem(f, &g).0);
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree(&self, f: &FpPoly) -> Vec<FpPoly> {
        debug_assert!(self.is_squarefree(f), "input must be squarefree");
        let mut rng = StdRng::seed_from_u64(0x6b6e_6f74 ^ self.p);
        let mut out: Vec<FpPoly> = self
            .distinct_degree(f)
            .into_iter()
            .flat_map(|(g, d)| self.equal_degree(&g, d, &mut rng))
            .collect();
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Number of irreducible factors of a monic squarefree polynomial.
    pub fn count_factors(&self, f: &FpPoly) -> usize {
        self.distinct_degree(f)
            .iter()
            .map(|(g, d)| g.degree() / d)
            .sum()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Odd primes in increasing order, starting at 3.
pub(crate) fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime(n))
}

/// Primes below `2^31` in decreasing order.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31)
        .rev()
        .filter(|&n| n % 2 == 1 && is_prime(n))
}
