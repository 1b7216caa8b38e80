use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Requested decimal digits P plus guard digits g; arithmetic runs at P + g digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    decimal_digits: u32,
    guard_digits: u32,
}

impl PrecisionContext {
    pub const DEFAULT_GUARD: u32 = 10;
    pub const MIN_DIGITS: u32 = 10;
    pub const MIN_GUARD: u32 = 5;

    pub fn new(decimal_digits: u32) -> Result<Self> {
        Self::with_guard(decimal_digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(decimal_digits: u32, guard_digits: u32) -> Result<Self> {
        if decimal_digits < Self::MIN_DIGITS {
            return Err(Error::Domain(format!(
                "precision of {decimal_digits} digits is below the minimum {}",
                Self::MIN_DIGITS
            )));
        }
        if guard_digits < Self::MIN_GUARD {
            return Err(Error::Domain(format!("{guard_digits} guard digits is below the minimum {}", Self::MIN_GUARD)));
        }
        Ok(PrecisionContext { decimal_digits, guard_digits })
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.decimal_digits + self.guard_digits
    }

    /// Fractional bits of the fixed-point representation.
    pub fn working_bits(&self) -> u32 {
        (self.working_digits() as f64 * LOG2_10).ceil() as u32 + 4
    }

    /// Same target P with `extra` more guard digits.
    pub fn boosted(&self, extra: u32) -> Self {
        PrecisionContext { decimal_digits: self.decimal_digits, guard_digits: self.guard_digits + extra }
    }

    /// Same guard, a different target.
    pub fn with_digits(&self, decimal_digits: u32) -> Self {
        PrecisionContext { decimal_digits: decimal_digits.max(Self::MIN_DIGITS), guard_digits: self.guard_digits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        assert!(PrecisionContext::new(9).is_err());
        assert!(PrecisionContext::with_guard(20, 4).is_err());
        let ctx = PrecisionContext::new(20).unwrap();
        assert_eq!(ctx.working_digits(), 30);
        assert!(ctx.working_bits() as f64 >= 30.0 * LOG2_10);
        assert_eq!(ctx.boosted(7).guard_digits(), 17);
    }
}
