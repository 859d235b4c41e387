use std::fmt;
use std::str::FromStr;

/// Moduli accepted by `--field gfp:P`.
pub const SUPPORTED_PRIMES: [u64; 10] = [
    2,
    3,
    5,
    7,
    101,
    7919,
    32003,
    65521,
    1_000_003,
    2_147_483_647,
];

/// Coefficient field for the linear algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldMode {
    #[default]
    Rational,
    Prime(u64),
}

impl FieldMode {
    /// Exact ranks. Prime fields may undercount them.
    pub fn is_exact(self) -> bool {
        matches!(self, FieldMode::Rational)
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => write!(f, "rational"),
            FieldMode::Prime(p) => write!(f, "gfp:{p}"),
        }
    }
}

impl FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "rational" {
            return Ok(FieldMode::Rational);
        }
        let p = s
            .strip_prefix("gfp:")
            .ok_or_else(|| format!("expected `rational` or `gfp:P`, got `{s}`"))?;
        let p: u64 = p.parse().map_err(|_| format!("`{p}` is not an integer"))?;
        if !pseudoroot::scalar::is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(format!(
                "unsupported prime {p}; choose one of {SUPPORTED_PRIMES:?}"
            ));
        }
        Ok(FieldMode::Prime(p))
    }
}

/// Calls a function generic over one `Field` parameter with the type selected by a [`FieldMode`].
#[macro_export]
macro_rules! with_field {
    ($mode:expr, $func:ident ( $($arg:expr),* $(,)? )) => {{
        use pseudoroot::{Fp, Rational};
        match $mode {
            $crate::field::FieldMode::Rational => $func::<Rational>($($arg),*),
            $crate::field::FieldMode::Prime(2) => $func::<Fp<2>>($($arg),*),
            $crate::field::FieldMode::Prime(3) => $func::<Fp<3>>($($arg),*),
            $crate::field::FieldMode::Prime(5) => $func::<Fp<5>>($($arg),*),
            $crate::field::FieldMode::Prime(7) => $func::<Fp<7>>($($arg),*),
            $crate::field::FieldMode::Prime(101) => $func::<Fp<101>>($($arg),*),
            $crate::field::FieldMode::Prime(7919) => $func::<Fp<7919>>($($arg),*),
            $crate::field::FieldMode::Prime(32003) => $func::<Fp<32003>>($($arg),*),
            $crate::field::FieldMode::Prime(65521) => $func::<Fp<65521>>($($arg),*),
            $crate::field::FieldMode::Prime(1_000_003) => $func::<Fp<1_000_003>>($($arg),*),
            $crate::field::FieldMode::Prime(2_147_483_647) => $func::<Fp<2_147_483_647>>($($arg),*),
            $crate::field::FieldMode::Prime(p) => unreachable!("prime {p} passed validation"),
        }
    }};
}
