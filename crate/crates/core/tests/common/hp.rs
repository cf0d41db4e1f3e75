//! Arbitrary-precision fixed-point arithmetic (512 fractional bits) on
//! `BigInt`, used as an independent oracle for the special functions and for
//! extracting power-series coefficients of the subsampled PGF by forward
//! differences with an exactly representable binary step.
//!
//! Rational powers x^(p/q) go through integer nth roots, so the oracle never
//! touches floating point except at the final conversion.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

pub const FRAC_BITS: u64 = 512;

#[derive(Clone, Debug)]
pub struct Fx(pub BigInt);

impl Fx {
    pub fn zero() -> Fx {
        Fx(BigInt::zero())
    }

    pub fn one() -> Fx {
        Fx(BigInt::from(1) << FRAC_BITS)
    }

    pub fn from_u64(v: u64) -> Fx {
        Fx(BigInt::from(v) << FRAC_BITS)
    }

    /// Exact embedding of a (finite) f64.
    pub fn from_f64(v: f64) -> Fx {
        assert!(v.is_finite());
        let scaled = v * 2f64.powi(60);
        let int = BigInt::from(scaled.round() as i128);
        // v had at most 53 significant bits; 60 extra bits keep it exact
        Fx((int << FRAC_BITS) >> 60)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("in f64 range") / 2f64.powi(FRAC_BITS as i32)
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx((&self.0 * &o.0) >> FRAC_BITS)
    }

    pub fn div(&self, o: &Fx) -> Fx {
        Fx((&self.0 << FRAC_BITS) / &o.0)
    }

    pub fn mul_int(&self, k: i64) -> Fx {
        Fx(&self.0 * BigInt::from(k))
    }

    pub fn div_big(&self, k: &BigInt) -> Fx {
        Fx(&self.0 / k)
    }

    pub fn recip(&self) -> Fx {
        Fx((BigInt::from(1) << (2 * FRAC_BITS)) / &self.0)
    }

    /// x^(p/q) for positive x via integer nth roots.
    pub fn pow_ratio(&self, p: u32, q: u32) -> Fx {
        assert_eq!(self.0.sign(), Sign::Plus);
        let raised = self.0.magnitude().pow(p);
        let shifted: BigUint = if q >= p {
            raised << ((q - p) as u64 * FRAC_BITS)
        } else {
            raised >> ((p - q) as u64 * FRAC_BITS)
        };
        Fx(BigInt::from(shifted.nth_root(q)))
    }
}

/// Bernoulli numbers B_2..B_24 as exact fractions.
const BERNOULLI: [(i64, i64); 12] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
];

fn factorial_big(n: u64) -> BigInt {
    let mut f = BigInt::from(1);
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// zeta(p/q) for p/q > 1 by Euler-Maclaurin with exact Bernoulli fractions;
/// accurate far beyond f64.
pub fn zeta_rational(p: u32, q: u32) -> Fx {
    assert!(p > q);
    let n: u64 = 64;
    let mut sum = Fx::zero();
    for k in 1..n {
        sum = sum.add(&Fx::from_u64(k).pow_ratio(p, q).recip());
    }
    let nf = Fx::from_u64(n);
    let n_pow_minus_s = nf.pow_ratio(p, q).recip();
    let t1 = nf
        .mul(&n_pow_minus_s)
        .mul_int(q as i64)
        .div_big(&BigInt::from(p as i64 - q as i64));
    let t2 = n_pow_minus_s.div_big(&BigInt::from(2));
    sum = sum.add(&t1).add(&t2);
    let s = Fx::from_u64(p as u64).div(&Fx::from_u64(q as u64));
    let mut rising = s.clone();
    let mut npow = n_pow_minus_s.div(&nf);
    let n2 = nf.mul(&nf);
    for (j, (bn, bd)) in BERNOULLI.iter().enumerate() {
        let j1 = (j + 1) as u64;
        let coeff_den = factorial_big(2 * j1) * BigInt::from(*bd);
        let term = rising.mul(&npow).mul_int(*bn).div_big(&coeff_den);
        sum = sum.add(&term);
        let two_j = Fx::from_u64(2 * j1);
        rising = rising
            .mul(&s.add(&two_j).sub(&Fx::one()))
            .mul(&s.add(&two_j));
        npow = npow.div(&n2);
    }
    sum
}

/// Li_2(1/2) by direct summation of exact dyadic rationals.
pub fn dilog_half() -> Fx {
    let mut sum = BigInt::zero();
    for k in 1u64..560 {
        let den = BigInt::from(k * k) << k;
        sum += (BigInt::from(1) << FRAC_BITS) / den;
    }
    Fx(sum)
}

/// High-precision replica of the zero-truncated subsampled PGF for a Zipf
/// parent: G*(s) = [G(1-p(1-s)) - G(1-p)] / [1 - G(1-p)] with
/// G(x) = Li_alpha(x) / zeta(alpha), alpha = num/den.
pub struct SubsampledPgfOracle {
    /// Zipf weights pi_j = j^(-alpha) / zeta(alpha), j = 1..=terms.
    weights: Vec<Fx>,
    p: Fx,
}

impl SubsampledPgfOracle {
    /// `p` is embedded exactly from the same f64 the implementation uses.
    pub fn new(alpha_num: u32, alpha_den: u32, p: f64, terms: usize) -> Self {
        let zeta = zeta_rational(alpha_num, alpha_den);
        let weights = (1..=terms as u64)
            .map(|j| {
                Fx::from_u64(j)
                    .pow_ratio(alpha_num, alpha_den)
                    .recip()
                    .div(&zeta)
            })
            .collect();
        SubsampledPgfOracle {
            weights,
            p: Fx::from_f64(p),
        }
    }

    /// G(x) = sum_j pi_j x^j, truncated at `terms` (geometric tail).
    pub fn parent_pgf(&self, x: &Fx) -> Fx {
        let mut sum = Fx::zero();
        let mut xpow = Fx::one();
        for w in &self.weights {
            xpow = xpow.mul(x);
            sum = sum.add(&w.mul(&xpow));
        }
        sum
    }

    /// G*(s) for s given as an exact dyadic rational (num / 2^log2_den).
    pub fn subsampled_pgf(&self, s: &Fx) -> Fx {
        let one = Fx::one();
        let x0 = one.sub(&self.p); // 1 - p
        let xs = x0.add(&self.p.mul(s)); // 1 - p(1-s)
        let g0 = self.parent_pgf(&x0);
        let gs = self.parent_pgf(&xs);
        gs.sub(&g0).div(&one.sub(&g0))
    }

    /// Power-series coefficients q_1..q_max_k of G* at s = 0 by forward
    /// differences with step h = 2^-20 (exact in binary fixed point):
    /// q_k ~= sum_i (-1)^(k-i) C(k,i) G*(i h) / (h^k k!).
    pub fn coefficients_by_forward_differences(&self, max_k: usize) -> Vec<f64> {
        const LOG2_H: u64 = 20;
        let h = Fx(BigInt::from(1) << (FRAC_BITS - LOG2_H));
        // G*(i h) for i = 0..=max_k
        let samples: Vec<Fx> = (0..=max_k as u64)
            .map(|i| self.subsampled_pgf(&Fx(&h.0 * BigInt::from(i))))
            .collect();
        let mut out = Vec::with_capacity(max_k);
        for k in 1..=max_k {
            let mut delta = BigInt::zero();
            let mut binom = BigInt::from(1);
            for i in 0..=k {
                // sign (-1)^(k-i)
                let term = &binom * &samples[i].0;
                if (k - i) % 2 == 0 {
                    delta += term;
                } else {
                    delta -= term;
                }
                binom = binom * BigInt::from((k - i) as u64) / BigInt::from(i as u64 + 1);
            }
            // divide by h^k k! ; h^k is an exact left shift
            let coeff = Fx((delta << (LOG2_H * k as u64)) / factorial_big(k as u64));
            out.push(coeff.to_f64());
        }
        out
    }
}
