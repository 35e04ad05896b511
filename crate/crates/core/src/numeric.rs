//! Small numeric utilities: stable sigmoid, Neumaier summation, and a
//! minimal double-double type used where a correctly rounded result is
//! required (notably the Pearson correlation).

/// Numerically stable logistic function.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Inverse of [`sigmoid`]; `p` must lie strictly inside (0, 1).
pub fn inverse_sigmoid(p: f64) -> f64 {
    (p / (1.0 - p)).ln()
}

/// Neumaier-compensated sum of an iterator of f64 values.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Double-double value: an unevaluated sum `hi + lo` carrying ~106 bits of
/// significand. Enough operations for dot products, one division and one
/// square root; not a general-purpose extended float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    // mul_add is a fused multiply-add with a single rounding, so this
    // recovers the exact low part of the product.
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two f64 values as a double-double.
    pub fn prod(a: f64, b: f64) -> Dd {
        two_prod(a, b)
    }

    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        quick_two_sum(s.hi, s.lo + self.lo + other.lo)
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        quick_two_sum(p.hi, p.lo + self.hi * other.lo + self.lo * other.hi)
    }

    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        quick_two_sum(p.hi, p.lo + self.lo * x)
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let s = quick_two_sum(q1, q2);
        quick_two_sum(s.hi, s.lo + q3)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        // One Newton correction on top of the f64 square root.
        let y0 = self.hi.sqrt();
        let err = self.sub(two_prod(y0, y0));
        quick_two_sum(y0, err.hi / (2.0 * y0))
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Double-double dot product of two equal-length slices.
pub fn dd_dot(a: &[f64], b: &[f64]) -> Dd {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Dd::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = acc.add(two_prod(x, y));
    }
    acc
}

/// Double-double sum of a slice.
pub fn dd_sum(a: &[f64]) -> Dd {
    let mut acc = Dd::ZERO;
    for &x in a {
        acc = acc.add(Dd::from_f64(x));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigmoid_matches_plain_form() {
        for &x in &[-30.0, -2.0, 0.0, 0.5, 10.0, 40.0] {
            let plain = 1.0 / (1.0 + (-x as f64).exp());
            assert!((sigmoid(x) - plain).abs() < 1e-15);
        }
    }

    #[test]
    fn inverse_sigmoid_round_trips() {
        for &p in &[1e-6, 0.2, 0.5, 0.9, 1.0 - 1e-9] {
            assert!((sigmoid(inverse_sigmoid(p)) - p).abs() < 1e-12);
        }
    }

    #[test]
    fn compensated_sum_beats_naive() {
        // 1 + 1e-16 added 10^6 times loses the tail in naive order.
        let mut vals = vec![1.0f64];
        vals.extend(std::iter::repeat(1e-16).take(1_000_000));
        let exact = 1.0 + 1e-10;
        assert!((compensated_sum(vals.iter().copied()) - exact).abs() < 1e-18);
    }

    #[test]
    fn dd_recovers_product_tail() {
        let a = 1.0 + 2f64.powi(-30);
        let b = 1.0 - 2f64.powi(-31);
        let p = Dd::prod(a, b);
        // Exact: 1 + 2^-30 - 2^-31 - 2^-61; hi alone cannot hold the 2^-61.
        assert_ne!(p.lo, 0.0);
        let err = (p.hi + p.lo) - a * b;
        assert!(err.abs() <= f64::EPSILON * a * b);
    }

    #[test]
    fn dd_div_and_sqrt_identities() {
        let a = Dd::from_f64(2.0);
        let r = a.sqrt();
        let back = r.mul(r).sub(a);
        assert!(back.to_f64().abs() < 1e-30);
        let q = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let three_q = q.mul_f64(3.0);
        assert!((three_q.to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn dd_dot_exactness_on_cancelling_terms() {
        // x . y with massive cancellation: plain f64 loses all digits,
        // double-double keeps them.
        let x = vec![1e16, 1.0, -1e16];
        let y = vec![1.0, 0.5, 1.0];
        assert_eq!(dd_dot(&x, &y).to_f64(), 0.5);
    }
}
