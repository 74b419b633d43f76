//! Confidence regions as finite unions of disjoint closed components.

use crate::error::{Error, Result};

/// One closed component of the real line. `lo`/`hi` may be infinite, in
/// which case the component is an unbounded ray (or the whole line); a
/// finite `lo == hi` is a singleton. Infinite bounds are stored as IEEE
/// infinities, never as large finite sentinels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Component {
    pub lo: f64,
    pub hi: f64,
}

impl Component {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "component bounds out of order: {lo} > {hi}");
        Self { lo, hi }
    }

    pub fn contains(&self, z: f64) -> bool {
        self.lo <= z && z <= self.hi
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi && self.lo.is_finite()
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }
}

/// A finite union of disjoint, non-adjacent closed components, kept sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfidenceRegion {
    components: Vec<Component>,
}

impl ConfidenceRegion {
    pub fn empty() -> Self {
        Self { components: vec![] }
    }

    /// The whole real line.
    pub fn full() -> Self {
        Self {
            components: vec![Component::new(f64::NEG_INFINITY, f64::INFINITY)],
        }
    }

    /// Builds from components already sorted, disjoint, and separated by
    /// gaps of positive length.
    pub(crate) fn from_sorted_components(components: Vec<Component>) -> Self {
        debug_assert!(components
            .windows(2)
            .all(|w| w[0].hi < w[1].lo));
        Self { components }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.components.len() == 1
            && self.components[0].lo == f64::NEG_INFINITY
            && self.components[0].hi == f64::INFINITY
    }

    /// Membership test; exact at stored endpoints.
    pub fn contains(&self, z: f64) -> bool {
        self.components.iter().any(|c| c.contains(z))
    }

    /// Length of the smallest interval containing the whole region;
    /// infinite when any component is unbounded.
    pub fn hull_width(&self) -> Result<f64> {
        let first = self.components.first().ok_or(Error::EmptyRegion)?;
        let last = self.components.last().unwrap();
        Ok(last.hi - first.lo)
    }

    /// Components that are isolated single points.
    pub fn singletons(&self) -> Vec<f64> {
        self.components
            .iter()
            .filter(|c| c.is_singleton())
            .map(|c| c.lo)
            .collect()
    }

    /// Set intersection; the result again has sorted disjoint components.
    pub fn intersect(&self, other: &ConfidenceRegion) -> ConfidenceRegion {
        let (a, b) = (&self.components, &other.components);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let lo = a[i].lo.max(b[j].lo);
            let hi = a[i].hi.min(b[j].hi);
            if lo <= hi {
                out.push(Component::new(lo, hi));
            }
            if a[i].hi <= b[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        ConfidenceRegion { components: out }
    }
}
