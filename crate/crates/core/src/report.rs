use crate::exactalg::{format_scalar, Field, Matrix};
use crate::gradedcat::GradedMorphism;

/// Location and value of a nonzero residual entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// Outcome of one exact identity check.
#[derive(Clone, Debug)]
pub struct Check<K: Field> {
    pub name: String,
    pub passed: bool,
    /// Left-hand side minus right-hand side, when the check is a matrix
    /// identity.
    pub residual: Option<Matrix<K>>,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl<K: Field> Check<K> {
    pub fn from_residual(name: impl Into<String>, residual: Matrix<K>) -> Self {
        let witness = residual.first_nonzero().map(|(row, col, v)| Witness {
            row,
            col,
            value: format_scalar(v),
        });
        Check {
            name: name.into(),
            passed: witness.is_none(),
            residual: Some(residual),
            witness,
            note: None,
        }
    }

    /// Compares two matrices of the same shape.
    pub fn equal(name: impl Into<String>, lhs: &Matrix<K>, rhs: &Matrix<K>) -> Self {
        let name = name.into();
        match lhs.try_sub(rhs) {
            Ok(r) => Self::from_residual(name, r),
            Err(e) => Self::failed(name, e.to_string()),
        }
    }

    pub fn morphisms(name: impl Into<String>, lhs: &GradedMorphism<K>, rhs: &GradedMorphism<K>) -> Self {
        Self::equal(name, lhs.matrix(), rhs.matrix())
    }

    pub fn zero(name: impl Into<String>, m: &Matrix<K>) -> Self {
        Self::from_residual(name, m.clone())
    }

    pub fn flag(name: impl Into<String>, passed: bool, note: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            residual: None,
            witness: None,
            note: Some(note.into()),
        }
    }

    pub fn failed(name: impl Into<String>, note: impl Into<String>) -> Self {
        Self::flag(name, false, note)
    }
}

/// Ordered list of checks.
#[derive(Clone, Debug)]
pub struct CheckReport<K: Field> {
    pub checks: Vec<Check<K>>,
}

impl<K: Field> Default for CheckReport<K> {
    fn default() -> Self {
        CheckReport { checks: Vec::new() }
    }
}

impl<K: Field> CheckReport<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check<K>) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: CheckReport<K>) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every check name prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport<K>) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{prefix}.{}", c.name);
            c
        }));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check<K>> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check<K>> {
        self.checks.iter().find(|c| c.name == name)
    }
}
