use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Ordered list of distinct variable names.
///
/// The position of a name is the index used by every exponent vector over
/// this ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

/// Shared handle to a variable set; cheap to clone and compared by value.
pub type Ring = Arc<VariableSet>;

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::DuplicateVariable(a.clone()));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// `x1, ..., xn`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Ring> {
        Self::new((1..=n).map(|i| alloc::format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders a monomial as `x^2*y`, or `1`.
    pub fn display<'a>(&'a self, m: &'a Monomial) -> impl fmt::Display + 'a {
        MonomialDisplay { ring: self, m }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.display(m).to_string()
    }
}

struct MonomialDisplay<'a> {
    ring: &'a VariableSet,
    m: &'a Monomial,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
