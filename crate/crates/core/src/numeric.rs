//! Log-domain helpers: compensated summation, decimal magnitude, and `log2` of
//! big integers.

use num_bigint::BigUint;

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of a sequence of floats.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<CompensatedSum>().value()
}

/// Splits `2^bits` into `mantissa * 10^exponent` with `1 <= mantissa < 10`.
///
/// The fractional part of `bits * log10(2)` carries an absolute error of at
/// most `bits * 2^-52 + 1e-12`, so the mantissa holds about four significant
/// digits even at `bits = 1e11`.
pub fn decimal_magnitude(bits: f64) -> (f64, i64) {
    if bits.is_nan() || bits <= 0.0 {
        return (1.0, 0);
    }
    let log10 = bits * std::f64::consts::LOG10_2;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    if mantissa >= 10.0 {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    if mantissa < 1.0 {
        mantissa = 1.0;
    }
    (mantissa, exponent as i64)
}

/// `log2(n)` from the integer's bit length and its top 64 bits.
///
/// Independent of any floating-point product, so it serves as a check on the
/// log-domain sum. Returns negative infinity for zero.
pub fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        let v = n.iter_u64_digits().next().unwrap_or(0);
        return (v as f64).log2();
    }
    let shift = bits - 64;
    let top = (n >> shift).iter_u64_digits().next().unwrap_or(0);
    (top as f64).log2() + shift as f64
}
