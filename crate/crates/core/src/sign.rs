use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{ModfError, Result};
use crate::MAX_VERTICES;

/// A `{-1, +1}` labelling of the vertices `0..n`, stored as the set of `+1`
/// vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignFunction {
    n: usize,
    positives: VertexSet,
}

impl SignFunction {
    pub fn new(n: usize, positives: VertexSet) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(ModfError::TooLarge(n));
        }
        if positives.bound() > n {
            return Err(ModfError::VertexOutOfRange {
                vertex: positives.bound() - 1,
                order: n,
            });
        }
        Ok(SignFunction { n, positives })
    }

    pub fn from_positives<I: IntoIterator<Item = usize>>(n: usize, positives: I) -> Result<Self> {
        let mut set = VertexSet::EMPTY;
        for v in positives {
            if v >= n {
                return Err(ModfError::VertexOutOfRange { vertex: v, order: n });
            }
            set.insert(v);
        }
        SignFunction::new(n, set)
    }

    /// From a sequence of `+1` / `-1` values.
    pub fn from_values(values: &[i8]) -> Result<Self> {
        let mut set = VertexSet::EMPTY;
        for (v, &x) in values.iter().enumerate() {
            match x {
                1 => set.insert(v),
                -1 => {}
                other => {
                    return Err(ModfError::InvalidParameter(format!(
                        "sign value {other} at vertex {v} is not +1 or -1"
                    )))
                }
            }
        }
        SignFunction::new(values.len(), set)
    }

    /// Parses a `+-` string such as `"--++"`.
    pub fn from_sign_string(s: &str) -> Result<Self> {
        let values = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(ModfError::InvalidParameter(format!(
                    "unexpected character {other:?} in sign string"
                ))),
            })
            .collect::<Result<Vec<i8>>>()?;
        SignFunction::from_values(&values)
    }

    pub(crate) const fn from_parts(n: usize, positives: VertexSet) -> Self {
        SignFunction { n, positives }
    }

    pub fn all_positive(n: usize) -> Self {
        SignFunction::from_parts(n, VertexSet::full(n))
    }

    pub fn all_negative(n: usize) -> Self {
        SignFunction::from_parts(n, VertexSet::EMPTY)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn positives(&self) -> VertexSet {
        self.positives
    }

    #[inline]
    pub fn negatives(&self) -> VertexSet {
        VertexSet::full(self.n) - self.positives
    }

    #[inline]
    pub fn value(&self, v: usize) -> i64 {
        if self.positives.contains(v) {
            1
        } else {
            -1
        }
    }

    #[inline]
    pub fn is_positive(&self, v: usize) -> bool {
        self.positives.contains(v)
    }

    /// `f(V) = 2|f^-1(1)| - n`.
    #[inline]
    pub fn weight(&self) -> i64 {
        2 * self.positives.len() as i64 - self.n as i64
    }

    /// `f(X)` for an arbitrary vertex set.
    #[inline]
    pub fn sum_over(&self, set: VertexSet) -> i64 {
        2 * (set & self.positives).len() as i64 - set.len() as i64
    }

    pub fn with_sign(&self, v: usize, positive: bool) -> Self {
        let positives = if positive {
            self.positives.with(v)
        } else {
            self.positives.without(v)
        };
        SignFunction::from_parts(self.n, positives)
    }

    pub fn flipped(&self, v: usize) -> Self {
        self.with_sign(v, !self.is_positive(v))
    }

    /// Renders as a `+-` string, vertex 0 first.
    pub fn sign_string(&self) -> String {
        (0..self.n)
            .map(|v| if self.is_positive(v) { '+' } else { '-' })
            .collect()
    }

    pub fn values(&self) -> Vec<i8> {
        (0..self.n).map(|v| self.value(v) as i8).collect()
    }
}

impl fmt::Debug for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignFunction({})", self.sign_string())
    }
}
