//! Ambient ring descriptions: which generators span the base ring `A` and
//! which are the coordinates of `B = A[X_1, ..., X_n]`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Names the generators of the ambient ring `B = Q[base][vars]`.
///
/// `base` generates the coefficient ring `A` over the rationals (possibly
/// empty, in which case `A = Q`) and `vars` is the distinguished coordinate
/// system of `B` over `A`. Monomial exponent slots are laid out base-first,
/// then variables, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    base: Vec<String>,
    vars: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    /// Builds a ring description. Names must be distinct ASCII identifiers;
    /// a leading underscore is reserved for internal tag variables.
    pub fn new<S: Into<String>>(
        base: impl IntoIterator<Item = S>,
        vars: impl IntoIterator<Item = S>,
    ) -> Result<Arc<RingSpec>> {
        let base: Vec<String> = base.into_iter().map(Into::into).collect();
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for name in base.iter().chain(vars.iter()) {
            if !valid_name(name) {
                return Err(Error::InvalidRing(format!(
                    "invalid generator name `{name}` (identifiers start with a letter; \
                     leading underscores are reserved)"
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in base.iter().chain(vars.iter()) {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate generator name `{name}`")));
            }
        }
        Ok(Arc::new(RingSpec { base, vars }))
    }

    /// Extends this ring with `count` trailing tag variables `_t1, _t2, ...`.
    /// Tags are appended after the existing variables, so exponent vectors of
    /// the original ring embed by zero-padding on the right.
    pub(crate) fn with_tags(&self, count: usize) -> Arc<RingSpec> {
        let mut vars = self.vars.clone();
        vars.extend((1..=count).map(|i| format!("_t{i}")));
        Arc::new(RingSpec {
            base: self.base.clone(),
            vars,
        })
    }

    pub fn base_count(&self) -> usize {
        self.base.len()
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    /// Total number of generators (base plus variables).
    pub fn len(&self) -> usize {
        self.base.len() + self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn base_names(&self) -> impl Iterator<Item = &str> {
        self.base.iter().map(String::as_str)
    }

    pub fn var_names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(String::as_str)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.base.iter().chain(self.vars.iter()).map(String::as_str)
    }

    pub fn name(&self, index: usize) -> &str {
        if index < self.base.len() {
            &self.base[index]
        } else {
            &self.vars[index - self.base.len()]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().position(|n| n == name)
    }

    /// True when the generator at `index` belongs to the base ring `A`.
    pub fn is_base(&self, index: usize) -> bool {
        index < self.base.len()
    }

    /// Generator indices of the variables, in declaration order.
    pub fn var_indices(&self) -> std::ops::Range<usize> {
        self.base.len()..self.len()
    }

    /// Generator index of the `i`-th variable.
    pub fn var_index(&self, i: usize) -> usize {
        self.base.len() + i
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        if !self.base.is_empty() {
            write!(f, "[{}]", self.base.join(","))?;
        }
        write!(f, "[{}]", self.vars.join(","))
    }
}

/// Two polynomials are compatible when their rings are the same description,
/// whether or not they share the allocation.
pub fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
