use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Coefficient ring `Z[x_1, ..., x_r]`, optionally with inverted variables.
///
/// `r = 0` is the plain integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    variable_names: Vec<String>,
    laurent_allowed: bool,
}

/// Shared handle to a ring; polynomials and series hold one of these.
pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new<S: AsRef<str>>(variable_names: &[S], laurent_allowed: bool) -> Result<Ring> {
        let names: Vec<String> = variable_names.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            let mut chars = name.chars();
            let first = chars.next().unwrap_or('0');
            if !(first.is_ascii_alphabetic() || first == '_') || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        Ok(Arc::new(RingDescriptor { variable_names: names, laurent_allowed }))
    }

    /// The integers.
    pub fn integers() -> Ring {
        Arc::new(RingDescriptor { variable_names: Vec::new(), laurent_allowed: false })
    }

    /// `Z[L, L^-1]`, the image of the localized Grothendieck ring.
    pub fn motivic() -> Ring {
        Self::new(&["L"], true).expect("valid ring")
    }

    /// `Z[u, v]`, the target of the Hodge-Deligne polynomial.
    pub fn hodge() -> Ring {
        Self::new(&["u", "v"], false).expect("valid ring")
    }

    pub fn variables(&self) -> &[String] {
        &self.variable_names
    }

    pub fn arity(&self) -> usize {
        self.variable_names.len()
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent_allowed
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variable_names.iter().position(|v| v == name)
    }

    /// Same ring with one more variable appended.
    pub fn extended(&self, name: &str) -> Result<Ring> {
        let mut names = self.variable_names.clone();
        names.push(name.to_owned());
        Self::new(&names, self.laurent_allowed)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.variable_names.is_empty() {
            return write!(f, "Z");
        }
        let vars = self.variable_names.join(",");
        if self.laurent_allowed {
            let inv: Vec<String> = self.variable_names.iter().map(|v| format!("{v}^-1")).collect();
            write!(f, "Z[{vars},{}]", inv.join(","))
        } else {
            write!(f, "Z[{vars}]")
        }
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: a.to_string(), right: b.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(RingDescriptor::new(&["u", "u"], false).is_err());
        assert!(RingDescriptor::new(&[""], false).is_err());
        assert!(RingDescriptor::new(&["1x"], false).is_err());
        assert!(RingDescriptor::new(&["u", "v2", "_w"], true).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(RingDescriptor::integers().to_string(), "Z");
        assert_eq!(RingDescriptor::hodge().to_string(), "Z[u,v]");
        assert_eq!(RingDescriptor::motivic().to_string(), "Z[L,L^-1]");
    }
}
