//! Rectangular complex arithmetic on rug::Float pairs. The underlying MPFR
//! build has no MPC, so the handful of operations the evaluators need are
//! implemented here directly; all follow principal branches.

use rug::Float;

/// Complex number with both parts at the same MPFR precision.
#[derive(Clone, Debug)]
pub struct APComplex {
    pub re: Float,
    pub im: Float,
}

impl APComplex {
    pub fn new(re: Float, im: Float) -> Self {
        debug_assert_eq!(re.prec(), im.prec());
        APComplex { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let p = re.prec();
        APComplex { re, im: Float::new(p) }
    }

    pub fn zero(prec: u32) -> Self {
        APComplex { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn with_f64(prec: u32, re: f64, im: f64) -> Self {
        APComplex { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec();
        APComplex::new(
            Float::with_val(p, &self.re + &o.re),
            Float::with_val(p, &self.im + &o.im),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec();
        APComplex::new(
            Float::with_val(p, &self.re - &o.re),
            Float::with_val(p, &self.im - &o.im),
        )
    }

    pub fn neg(&self) -> Self {
        let p = self.prec();
        APComplex::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }

    pub fn conj(&self) -> Self {
        let p = self.prec();
        APComplex::new(self.re.clone(), Float::with_val(p, -&self.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec();
        let mut re = Float::with_val(p, &self.re * &o.re);
        re -= Float::with_val(p, &self.im * &o.im);
        let mut im = Float::with_val(p, &self.re * &o.im);
        im += Float::with_val(p, &self.im * &o.re);
        APComplex::new(re, im)
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let mut n = Float::with_val(p, &self.re * &self.re);
        n += Float::with_val(p, &self.im * &self.im);
        n
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.prec();
        let re = Float::with_val(p, &self.re / &n);
        let mut im = Float::with_val(p, &self.im / &n);
        im = -im;
        APComplex::new(re, im)
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn scale(&self, f: &Float) -> Self {
        let p = self.prec();
        APComplex::new(Float::with_val(p, &self.re * f), Float::with_val(p, &self.im * f))
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let p = self.prec();
        APComplex::new(Float::with_val(p, &self.re * k), Float::with_val(p, &self.im * k))
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> Self {
        let p = self.prec();
        APComplex::new(Float::with_val(p, -&self.im), self.re.clone())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        let r = self.abs();
        if r.is_zero() {
            return APComplex::zero(p);
        }
        if self.re.is_sign_positive() || self.re.is_zero() {
            // a = sqrt((r + re)/2), b = im / (2a); stable for re >= 0.
            let mut a = Float::with_val(p, &r + &self.re);
            a /= 2u32;
            let a = a.sqrt();
            let mut b = Float::with_val(p, &self.im / &a);
            b /= 2u32;
            APComplex::new(a, b)
        } else {
            // b carries the sign of im, a = im / (2b); stable for re < 0.
            let mut m = Float::with_val(p, &r - &self.re);
            m /= 2u32;
            let m = m.sqrt();
            let b = m.copysign(&self.im);
            let mut a = Float::with_val(p, &self.im / &b);
            a /= 2u32;
            APComplex::new(a, b)
        }
    }

    /// Complex exponential.
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let er = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        APComplex::new(Float::with_val(p, &er * &c), Float::with_val(p, &er * &s))
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        APComplex::new(self.abs().ln(), self.arg())
    }

    /// Principal real power exp(p ln z).
    pub fn pow_real(&self, e: &Float) -> Self {
        self.ln().scale(e).exp()
    }

    /// Integer power by repeated squaring (exact branch handling).
    pub fn powi(&self, n: i64) -> Self {
        if n == 0 {
            let p = self.prec();
            return APComplex::new(Float::with_val(p, 1), Float::new(p));
        }
        let neg = n < 0;
        let mut e = n.unsigned_abs();
        let mut base = self.clone();
        let mut acc: Option<APComplex> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        let v = acc.expect("n != 0");
        if neg {
            v.recip()
        } else {
            v
        }
    }

    /// |self - other|.
    pub fn dist(&self, o: &Self) -> Float {
        self.sub(o).abs()
    }
}

impl std::ops::Add for &APComplex {
    type Output = APComplex;
    fn add(self, rhs: &APComplex) -> APComplex {
        APComplex::add(self, rhs)
    }
}

impl std::ops::Sub for &APComplex {
    type Output = APComplex;
    fn sub(self, rhs: &APComplex) -> APComplex {
        APComplex::sub(self, rhs)
    }
}

impl std::ops::Mul for &APComplex {
    type Output = APComplex;
    fn mul(self, rhs: &APComplex) -> APComplex {
        APComplex::mul(self, rhs)
    }
}

impl std::ops::Div for &APComplex {
    type Output = APComplex;
    fn div(self, rhs: &APComplex) -> APComplex {
        APComplex::div(self, rhs)
    }
}

impl std::fmt::Display for APComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{} - {}i", self.re, self.im.clone().abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}
