//! Finite discrete dynamical models of partial actions by clopen subsets.
//!
//! On a finite discrete space every subset is clopen, so topological
//! freeness collapses to "no non-identity component fixes a point" and
//! minimality to "every singleton's invariant closure is everything". The
//! simplicity equivalence (the skew ring is simple iff the system is
//! topologically free and minimal) is checked here against the exhaustive
//! ring oracle, over a prime field rather than the complex continuous
//! functions of the compact setting; the algebraic skeleton is what is
//! being verified.

use std::collections::BTreeSet;

use crate::group::GroupElem;
use crate::linalg::PrimeField;
use crate::paction::{AlgebraPartialAction, SetPartialAction};
use crate::ring::{Agreement, RingError, SkewRing};

/// A partial action viewed as a dynamical system on a finite discrete
/// space.
#[derive(Clone, Debug)]
pub struct DiscreteSystem {
    action: SetPartialAction,
}

impl DiscreteSystem {
    pub fn new(action: SetPartialAction) -> Self {
        DiscreteSystem { action }
    }

    pub fn action(&self) -> &SetPartialAction {
        &self.action
    }

    /// A fixed point of a non-identity component, if any: in the discrete
    /// model "F_t has empty interior" means F_t = ∅.
    pub fn fixed_point_witness(&self) -> Option<(GroupElem, usize)> {
        let id = self.action.group().identity();
        for t in self.action.support() {
            if *t == id {
                continue;
            }
            if let Some(&x) = self.action.map(t).unwrap().fixed_points().first() {
                return Some((t.clone(), x));
            }
        }
        None
    }

    pub fn is_topologically_free(&self) -> bool {
        self.fixed_point_witness().is_none()
    }

    /// A proper nonempty invariant subset, if any: with every subset open,
    /// minimality is exactly that no singleton closure stays proper.
    pub fn minimality_witness(&self) -> Option<BTreeSet<usize>> {
        let n = self.action.size();
        (0..n).find_map(|x| {
            let closure = self.action.invariant_closure([x]);
            (closure.len() < n).then_some(closure)
        })
    }

    pub fn is_minimal(&self) -> bool {
        self.minimality_witness().is_none()
    }

    pub fn ring(&self, field: PrimeField) -> Result<SkewRing, RingError> {
        SkewRing::new(AlgebraPartialAction::new(self.action.clone(), field))
    }

    /// The full cross-check on one system: simplicity of the skew ring
    /// against topological freeness and minimality, plus the two
    /// ingredient equivalences (minimal ⇔ G-simple, and topologically
    /// free ⇔ maximal commutative, which in the discrete model is an
    /// equality of fixed-point conditions).
    pub fn check_simplicity_equivalence(
        &self,
        field: PrimeField,
        budget_log2: u32,
    ) -> Result<DynamicsReport, RingError> {
        let ring = self.ring(field)?;
        let top_free = self.is_topologically_free();
        let minimal = self.is_minimal();
        let simple = ring.is_simple_oracle(budget_log2);
        Ok(DynamicsReport {
            topologically_free: top_free,
            minimal,
            g_simple: self.action.is_g_simple(),
            maximal_commutative: ring.is_maximal_commutative(),
            equivalence: Agreement { left: top_free && minimal, right: simple.as_bool() },
        })
    }
}

/// Outcome of the simplicity equivalence check on one discrete system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsReport {
    pub topologically_free: bool,
    pub minimal: bool,
    pub g_simple: bool,
    pub maximal_commutative: bool,
    /// left: topologically free ∧ minimal; right: the ring oracle.
    pub equivalence: Agreement,
}

impl DynamicsReport {
    /// All three checks: the headline equivalence plus the minimality and
    /// freeness ingredients. `None` when the oracle was skipped.
    pub fn all_agree(&self) -> Option<bool> {
        let headline = self.equivalence.agrees()?;
        Some(headline && self.minimal == self.g_simple && self.topologically_free == self.maximal_commutative)
    }
}
