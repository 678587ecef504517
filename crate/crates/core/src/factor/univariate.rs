//! Factorization in `Z[x]`: squarefree split, factorization modulo a small
//! odd prime, quadratic Hensel lifting past the Mignotte bound, and subset
//! recombination of the lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{small_primes, Fp, FpPoly};
use super::zpoly::{self, ZPoly};

/// Number of usable primes tried when looking for the one giving the fewest
/// modular factors.
const PRIME_TRIALS: usize = 4;

/// Irreducible factors of `f` with multiplicities, each primitive with
/// positive leading coefficient. `f` must be nonzero; its content and sign
/// are discarded.
pub(crate) fn factor(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let f = f.primitive();
    let mut out = Vec::new();
    let k = f.x_valuation();
    if k > 0 {
        out.push((ZPoly::x(), k));
    }
    let f = f.drop_x_power(k);
    if f.degree() == 0 {
        return out;
    }
    let g = zpoly::gcd(&f, &f.derivative());
    let squarefree = if g.degree() == 0 {
        f.clone()
    } else {
        f.div_exact(&g).expect("gcd divides").primitive()
    };
    for q in zassenhaus(&squarefree) {
        let mut rest = f.clone();
        let mut mult = 0;
        while let Some(next) = rest.div_exact(&q) {
            rest = next;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((q, mult));
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

/// Irreducible factors of a squarefree primitive polynomial with nonzero
/// constant term.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    if f.degree() <= 1 {
        return vec![f.primitive()];
    }
    let lc = f.lc();
    let mut best: Option<(Fp, FpPoly, usize)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let field = Fp::new(p);
        let image = field.monic(&f.to_fp(&field));
        if image.degree() != f.degree() || !field.is_squarefree(&image) {
            continue;
        }
        let count = field.count_factors(&image);
        if best.as_ref().is_none_or(|b| count < b.2) {
            best = Some((field, image, count));
        }
        tried += 1;
        if count == 1 || tried >= PRIME_TRIALS {
            break;
        }
    }
    let (field, image, count) = best.expect("some prime keeps a squarefree image");
    if count == 1 {
        return vec![f.primitive()];
    }
    let modular = field.factor_squarefree(&image);
    let bound = mignotte_bound(f);
    let p = BigInt::from(field.modulus());
    let mut modulus = p.clone();
    while modulus <= &bound * 2 {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_tree(f, &modular, &field, &modulus);
    recombine(f, lifted, &modulus)
}

/// `|lc| * 2^deg * ||f||_2`, which bounds `lc(f)/lc(g) * g` for any factor `g`.
fn mignotte_bound(f: &ZPoly) -> BigInt {
    (f.lc().abs() * f.norm2_ceil()) << f.degree()
}

fn mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    a.mul(b).reduce_mod(m)
}

fn add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let v = (0..n)
        .map(|k| {
            let x = a.coeffs().get(k).cloned().unwrap_or_default();
            let y = b.coeffs().get(k).cloned().unwrap_or_default();
            (x + y).mod_floor(m)
        })
        .collect();
    ZPoly::new(v)
}

fn sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    add_mod(a, &b.scale(&BigInt::from(-1)), m)
}

/// Division with remainder by a monic polynomial, coefficients mod `m`.
fn divrem_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(b.lc().is_one());
    let a = a.reduce_mod(m);
    if a.is_zero() || a.degree() < b.degree() {
        return (ZPoly::new(vec![]), a);
    }
    let db = b.degree();
    let mut rem = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); a.degree() - db + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + db].mod_floor(m);
        if top.is_zero() {
            continue;
        }
        for (j, c) in b.coeffs().iter().enumerate() {
            rem[k + j] = (&rem[k + j] - c * &top).mod_floor(m);
        }
        q[k] = top;
    }
    (ZPoly::new(q), ZPoly::new(rem).reduce_mod(m))
}

fn from_fp(a: &FpPoly) -> ZPoly {
    ZPoly::new(a.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` mod `m` to the
/// same identities mod `m^2`. `h` is monic.
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let (q, r) = divrem_monic(&mul_mod(s, &e, &m2), h, &m2);
    let g_new = add_mod(
        g,
        &add_mod(&mul_mod(t, &e, &m2), &mul_mod(&q, g, &m2), &m2),
        &m2,
    );
    let h_new = add_mod(h, &r, &m2);
    let b = sub_mod(
        &add_mod(&mul_mod(s, &g_new, &m2), &mul_mod(t, &h_new, &m2), &m2),
        &ZPoly::one(),
        &m2,
    );
    let (c, d) = divrem_monic(&mul_mod(s, &b, &m2), &h_new, &m2);
    let s_new = sub_mod(s, &d, &m2);
    let t_new = sub_mod(
        t,
        &add_mod(&mul_mod(t, &b, &m2), &mul_mod(&c, &g_new, &m2), &m2),
        &m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lifts `f = lc(f) * prod(factors) mod p` to monic factors mod `target`,
/// where `target` is `p^(2^k)`.
fn lift_tree(f: &ZPoly, factors: &[FpPoly], field: &Fp, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = f.lc().mod_floor(target);
        let inv = lc.extended_gcd(target).x.mod_floor(target);
        return vec![f.scale(&inv).reduce_mod(target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lc_p = field.reduce_big(&f.lc());
    let g0 = left
        .iter()
        .fold(field.poly(vec![lc_p]), |acc, u| field.mul(&acc, u));
    let h0 = right.iter().fold(field.one(), |acc, u| field.mul(&acc, u));
    let (_, s0, t0) = field.ext_gcd(&g0, &h0);
    let p = BigInt::from(field.modulus());
    let (mut g, mut h, mut s, mut t) = (from_fp(&g0), from_fp(&h0), from_fp(&s0), from_fp(&t0));
    let mut m = p;
    while &m < target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = lift_tree(&g, left, field, target);
    out.extend(lift_tree(&h, right, field, target));
    out
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = idx.clone();
        // advance to the next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    })
}

/// Groups lifted monic factors into true factors over `Z`.
fn recombine(f: &ZPoly, mut pool: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let lc = f.lc();
        let target_const = &lc * &f.coeffs()[0];
        let mut found = None;
        for subset in combinations(pool.len(), size) {
            let c0 = subset.iter().fold(lc.clone(), |acc, &i| {
                (acc * &pool[i].coeffs()[0]).mod_floor(modulus)
            });
            let c0 = symmetric(&c0, modulus);
            if c0.is_zero() || !(&target_const % &c0).is_zero() {
                continue;
            }
            let product = subset.iter().fold(ZPoly::new(vec![lc.clone()]), |acc, &i| {
                mul_mod(&acc, &pool[i], modulus)
            });
            let candidate = product.symmetric_mod(modulus).primitive();
            if let Some(quotient) = f.div_exact(&candidate) {
                found = Some((subset, candidate, quotient));
                break;
            }
        }
        match found {
            Some((subset, candidate, quotient)) => {
                out.push(candidate);
                f = quotient;
                for &i in subset.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.degree() > 0 {
        out.push(f.primitive());
    }
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    if c > &(m >> 1) {
        c - m
    } else {
        c.clone()
    }
}
