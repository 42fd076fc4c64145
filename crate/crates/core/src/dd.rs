//! Minimal double-double (unevaluated f64 pair) arithmetic.
//!
//! Used internally by the Bessel/Hankel series, where the ascending series
//! accumulates alternating terms as large as ~1e7 while the result is O(0.1);
//! plain f64 term recurrences cannot guarantee the 1e-10 relative target
//! there. A hi/lo pair carries ~31 significant digits, which is enough to
//! make the series error negligible next to the final rounding.

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    // mul_add is the fused multiply-add; the second component is exact
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two f64 values as a Dd.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, other);
        let s2 = s2 + self.lo;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, other);
        let p2 = p2 + self.lo * other;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, other: f64) -> Dd {
        self.div(Dd::from_f64(other))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    /// exp(self) for small arguments (|x| <~ 0.05), by plain Taylor series.
    pub fn exp_small(self) -> Dd {
        debug_assert!(self.hi.abs() < 0.1);
        let mut sum = Dd::ONE;
        let mut term = Dd::ONE;
        for k in 1..=24 {
            term = term.mul(self).div_f64(k as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 {
                break;
            }
        }
        sum
    }

    /// sin(self) for small arguments (|x| <~ 0.05).
    pub fn sin_small(self) -> Dd {
        let x2 = self.mul(self);
        let mut term = self;
        let mut sum = self;
        for k in 1..=12 {
            let den = (2 * k) as f64 * (2 * k + 1) as f64;
            term = term.mul(x2).div_f64(-den);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 {
                break;
            }
        }
        sum
    }

    /// cos(self) for small arguments (|x| <~ 0.05).
    pub fn cos_small(self) -> Dd {
        let x2 = self.mul(self);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 1..=12 {
            let den = (2 * k - 1) as f64 * (2 * k) as f64;
            term = term.mul(x2).div_f64(-den);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 {
                break;
            }
        }
        sum
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}
