//! Interned identifiers for objects, 1-cells, and 2-cells.

use std::fmt;
use std::sync::Arc;

/// Name of an object, 1-cell, or 2-cell.
///
/// Names are globally unique per kind within a bicategory. The lexicographic
/// order on names is the canonical order used by every search and tie-break
/// in the kernel, so all constructions are reproducible.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(Arc<str>);

impl CellId {
    pub fn new(name: impl AsRef<str>) -> Self {
        CellId(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl From<&str> for CellId {
    fn from(s: &str) -> Self {
        CellId::new(s)
    }
}

impl From<String> for CellId {
    fn from(s: String) -> Self {
        CellId::new(s)
    }
}

impl From<&CellId> for CellId {
    fn from(s: &CellId) -> Self {
        s.clone()
    }
}

impl AsRef<str> for CellId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}
