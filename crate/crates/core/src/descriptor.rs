use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple Euclidean Jordan algebra of one of the four supported families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleFactor {
    /// Real symmetric `n x n` matrices.
    RealSym(usize),
    /// Complex Hermitian `n x n` matrices.
    ComplexHerm(usize),
    /// Quaternionic Hermitian `n x n` matrices.
    QuatHerm(usize),
    /// The spin factor `R^d ⊕ R`.
    SpinFactor(usize),
}

impl SimpleFactor {
    pub fn size(&self) -> usize {
        match *self {
            Self::RealSym(n) | Self::ComplexHerm(n) | Self::QuatHerm(n) | Self::SpinFactor(n) => n,
        }
    }

    pub fn dimension(&self) -> usize {
        match *self {
            Self::RealSym(n) => n * (n + 1) / 2,
            Self::ComplexHerm(n) => n * n,
            Self::QuatHerm(n) => n * (2 * n - 1),
            Self::SpinFactor(d) => d + 1,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Self::RealSym(n) | Self::ComplexHerm(n) | Self::QuatHerm(n) => n,
            Self::SpinFactor(_) => 2,
        }
    }

    /// Side length of the native matrix storage; spin factors have none.
    pub fn matrix_size(&self) -> Option<usize> {
        match *self {
            Self::RealSym(n) | Self::ComplexHerm(n) => Some(n),
            Self::QuatHerm(n) => Some(2 * n),
            Self::SpinFactor(_) => None,
        }
    }

    fn keyword(&self) -> &'static str {
        match self {
            Self::RealSym(_) => "real",
            Self::ComplexHerm(_) => "complex",
            Self::QuatHerm(_) => "quat",
            Self::SpinFactor(_) => "spin",
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.keyword(), self.size())
    }
}

/// A Euclidean Jordan algebra described as a direct sum of simple factors.
///
/// The textual form is `kind:n` joined by `+`, e.g. `complex:2+spin:3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraDescriptor {
    factors: Vec<SimpleFactor>,
}

impl AlgebraDescriptor {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        let text = factors.iter().map(ToString::to_string).collect::<Vec<_>>().join("+");
        if factors.is_empty() {
            return Err(Error::Parse {
                input: text,
                reason: "at least one factor is required".into(),
            });
        }
        if let Some(bad) = factors.iter().find(|f| f.size() == 0) {
            return Err(Error::Parse {
                input: text.clone(),
                reason: format!("factor `{bad}` must have a positive size"),
            });
        }
        Ok(Self { factors })
    }

    pub fn simple(factor: SimpleFactor) -> Result<Self> {
        Self::new(vec![factor])
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn dimension(&self) -> usize {
        self.factors.iter().map(SimpleFactor::dimension).sum()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(SimpleFactor::rank).sum()
    }

    /// The descriptors the verification suites run on when none is given.
    pub fn default_zoo() -> Vec<Self> {
        [
            "real:2",
            "real:3",
            "complex:2",
            "complex:3",
            "quat:2",
            "spin:3",
            "spin:5",
            "complex:2+spin:3",
        ]
        .iter()
        .map(|s| s.parse().expect("zoo descriptors are valid"))
        .collect()
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for AlgebraDescriptor {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: String| Error::Parse {
            input: input.to_string(),
            reason,
        };
        if input.is_empty() {
            return Err(fail("empty descriptor".into()));
        }
        let mut factors = Vec::new();
        for part in input.split('+') {
            let (kind, size) = part
                .split_once(':')
                .ok_or_else(|| fail(format!("`{part}` is not of the form kind:n")))?;
            if size.is_empty() || !size.bytes().all(|b| b.is_ascii_digit()) {
                return Err(fail(format!("`{size}` is not a decimal integer")));
            }
            let n: usize = size
                .parse()
                .map_err(|_| fail(format!("`{size}` is out of range")))?;
            if n == 0 {
                return Err(fail(format!("`{part}` must have a positive size")));
            }
            let factor = match kind {
                "real" => SimpleFactor::RealSym(n),
                "complex" => SimpleFactor::ComplexHerm(n),
                "quat" => SimpleFactor::QuatHerm(n),
                "spin" => SimpleFactor::SpinFactor(n),
                other => return Err(fail(format!("unknown factor kind `{other}`"))),
            };
            factors.push(factor);
        }
        Self::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_ranks() {
        let d: AlgebraDescriptor = "real:3+complex:2+quat:2+spin:4".parse().unwrap();
        assert_eq!(d.dimension(), 6 + 4 + 6 + 5);
        assert_eq!(d.rank(), 3 + 2 + 2 + 2);
        assert_eq!(SimpleFactor::QuatHerm(3).dimension(), 15);
    }

    #[test]
    fn canonical_round_trip() {
        for s in ["complex:2+spin:3", "real:1", "quat:4+quat:4"] {
            let d: AlgebraDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            assert_eq!(d.to_string().parse::<AlgebraDescriptor>().unwrap(), d);
        }
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "bogus:9", "real:0", "real", "real:", "real:2+", " real:2", "real:-1", "real:+2", "spin:3 "] {
            assert!(bad.parse::<AlgebraDescriptor>().is_err(), "{bad:?} should not parse");
        }
    }
}
