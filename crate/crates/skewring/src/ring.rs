//! The partial skew group ring R₀⋊_αG of an algebra-level partial action.
//!
//! Elements are finite formal sums Σ a_t δ_t with a_t ∈ D_t, multiplied by
//! (a_t δ_t)(b_s δ_s) = α_t(α_{t⁻¹}(a_t)·b_s) δ_{ts}. Over D_t = K^{X_t}
//! the products of coordinate basis elements are again (scalar multiples
//! of) basis elements:
//!
//!   (1_x δ_t)(1_y δ_s) = 1_x δ_{ts}  if y = h_t⁻¹(x),  0 otherwise,
//!
//! so the whole ring is described by one N×N monomial table over the
//! flattened coordinate index {(t, x) : t ∈ T, x ∈ X_t}. All ideal,
//! centralizer, and simplicity computations reduce to exact linear algebra
//! on that table.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{elem_label, GroupElem};
use crate::linalg::{Subspace, Vector};
use crate::paction::AlgebraPartialAction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// A basis product escaped the coordinate index, meaning the underlying
    /// action violates the compatibility axiom.
    ProductOutsideBasis { t: String, x: String },
    /// h_{t⁻¹} is not defined on all of X_t; the action violates the
    /// inverse axiom.
    MissingInverse { t: String, x: String },
    /// An element of the wrong dimension was passed in.
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::ProductOutsideBasis { t, x } => write!(
                f,
                "basis product lands outside the coordinate index at (δ_{t}, {x}); \
                 the action does not satisfy the compatibility axiom"
            ),
            RingError::MissingInverse { t, x } => {
                write!(f, "h_{t}⁻¹ is undefined at {x}; the action violates the inverse axiom")
            }
            RingError::DimensionMismatch { expected, got } => {
                write!(f, "element has {got} coordinates, ring has {expected}")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// Outcome of an exhaustive oracle run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Holds,
    /// The property fails; the witness generates a counterexample ideal.
    Fails { witness: Vector },
    /// p^N exceeds the enumeration budget.
    Infeasible { log2_required: u32, log2_budget: u32 },
}

impl OracleOutcome {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            OracleOutcome::Holds => Some(true),
            OracleOutcome::Fails { .. } => Some(false),
            OracleOutcome::Infeasible { .. } => None,
        }
    }
}

/// Agreement between the two sides of a cross-check on one instance.
/// `None` means the oracle side was skipped for budget reasons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    pub left: bool,
    pub right: Option<bool>,
}

impl Agreement {
    pub fn agrees(&self) -> Option<bool> {
        self.right.map(|r| r == self.left)
    }
}

/// The partial skew group ring over a partial action on K^X, with its
/// flattened coordinate index and precomputed basis multiplication table.
/// Immutable after construction.
///
/// ```
/// use skewring::corpus::c4_three_point_action;
/// use skewring::linalg::PrimeField;
/// use skewring::paction::AlgebraPartialAction;
/// use skewring::ring::SkewRing;
///
/// let field = PrimeField::new(2).unwrap();
/// let algebra = AlgebraPartialAction::new(c4_three_point_action(), field);
/// let ring = SkewRing::new(algebra).unwrap();
/// assert_eq!(ring.dim(), 9);
/// assert!(ring.is_maximal_commutative());
/// assert_eq!(ring.is_simple_oracle(16).as_bool(), Some(true));
/// ```
#[derive(Clone, Debug)]
pub struct SkewRing {
    action: AlgebraPartialAction,
    /// Coordinate i ↦ (t, x) with x ∈ X_t.
    index: Vec<(GroupElem, usize)>,
    coord: BTreeMap<(GroupElem, usize), usize>,
    /// table[i·N + j] = Some(k) when e_i·e_j = e_k, None when the product
    /// vanishes.
    table: Vec<Option<u32>>,
    /// Coordinates carrying the t = 0 component R₀δ₀.
    r0_coords: Vec<usize>,
}

impl SkewRing {
    /// Builds the ring, verifying that basis products close into the
    /// coordinate index. Assumes the underlying action has been validated.
    pub fn new(action: AlgebraPartialAction) -> Result<Self, RingError> {
        let base = action.base();
        let group = base.group().clone();
        let mut index = Vec::new();
        let mut coord = BTreeMap::new();
        for t in base.support() {
            for x in base.carrier_subset(t) {
                coord.insert((t.clone(), x), index.len());
                index.push((t.clone(), x));
            }
        }
        let n = index.len();

        // h_t⁻¹(x) for every coordinate, for the product condition.
        let mut preimage = Vec::with_capacity(n);
        for (t, x) in &index {
            let t_inv = group.invert(t);
            match base.apply(&t_inv, *x) {
                Some(y) => preimage.push(y),
                None => {
                    return Err(RingError::MissingInverse {
                        t: elem_label(t, None),
                        x: base.point_label(*x).to_string(),
                    })
                }
            }
        }

        let mut table = vec![None; n * n];
        for i in 0..n {
            let (t, x) = &index[i];
            for j in 0..n {
                let (s, y) = &index[j];
                if preimage[i] != *y {
                    continue;
                }
                let ts = group.multiply(t, s);
                match coord.get(&(ts.clone(), *x)) {
                    Some(&k) => table[i * n + j] = Some(k as u32),
                    None => {
                        return Err(RingError::ProductOutsideBasis {
                            t: elem_label(&ts, None),
                            x: base.point_label(*x).to_string(),
                        })
                    }
                }
            }
        }

        let id = group.identity();
        let r0_coords = index
            .iter()
            .enumerate()
            .filter(|(_, (t, _))| *t == id)
            .map(|(i, _)| i)
            .collect();

        Ok(SkewRing { action, index, coord, table, r0_coords })
    }

    pub fn action(&self) -> &AlgebraPartialAction {
        &self.action
    }

    /// Total dimension N = Σ_t |X_t|.
    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn coordinate(&self, i: usize) -> &(GroupElem, usize) {
        &self.index[i]
    }

    pub fn coordinate_of(&self, t: &GroupElem, x: usize) -> Option<usize> {
        self.coord.get(&(t.clone(), x)).copied()
    }

    pub fn zero(&self) -> Vector {
        Vector::zero(self.action.field(), self.dim())
    }

    /// The multiplicative unit 1_X δ₀.
    pub fn one(&self) -> Vector {
        let mut v = self.zero();
        for &i in &self.r0_coords {
            v.set(i, 1);
        }
        v
    }

    /// The basis element 1_x δ_t.
    pub fn basis_element(&self, t: &GroupElem, x: usize) -> Option<Vector> {
        self.coordinate_of(t, x).map(|i| {
            let mut v = self.zero();
            v.set(i, 1);
            v
        })
    }

    /// Embeds a_t δ_t for a function a_t on X supported in X_t.
    pub fn monomial(&self, t: &GroupElem, a_t: &Vector) -> Result<Vector, RingError> {
        let x_size = self.action.base().size();
        if a_t.dim() != x_size {
            return Err(RingError::DimensionMismatch { expected: x_size, got: a_t.dim() });
        }
        let mut v = self.zero();
        for x in 0..a_t.dim() {
            let c = a_t.get(x);
            if c == 0 {
                continue;
            }
            match self.coordinate_of(t, x) {
                Some(i) => v.set(i, c),
                None => {
                    return Err(RingError::ProductOutsideBasis {
                        t: elem_label(t, None),
                        x: self.action.base().point_label(x).to_string(),
                    })
                }
            }
        }
        Ok(v)
    }

    fn check_dim(&self, a: &Vector) -> Result<(), RingError> {
        if a.dim() != self.dim() {
            return Err(RingError::DimensionMismatch { expected: self.dim(), got: a.dim() });
        }
        Ok(())
    }

    /// The ring product, extended bilinearly from the basis table.
    pub fn multiply(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.dim();
        let field = self.action.field();
        let mut out = self.zero();
        for i in 0..n {
            let ca = a.get(i);
            if ca == 0 {
                continue;
            }
            for j in 0..n {
                let cb = b.get(j);
                if cb == 0 {
                    continue;
                }
                if let Some(k) = self.table[i * n + j] {
                    let k = k as usize;
                    out.set(k, field.add(out.get(k), field.mul(ca, cb)));
                }
            }
        }
        out
    }

    /// Left multiplication of a vector by the basis element with index i.
    fn basis_mul_left(&self, i: usize, a: &Vector, out: &mut Vector) {
        let n = self.dim();
        for k in 0..n {
            out.set(k, 0);
        }
        for j in 0..n {
            let cb = a.get(j);
            if cb == 0 {
                continue;
            }
            if let Some(k) = self.table[i * n + j] {
                let k = k as usize;
                let field = self.action.field();
                out.set(k, field.add(out.get(k), cb));
            }
        }
    }

    fn basis_mul_right(&self, a: &Vector, j: usize, out: &mut Vector) {
        let n = self.dim();
        for k in 0..n {
            out.set(k, 0);
        }
        for i in 0..n {
            let ca = a.get(i);
            if ca == 0 {
                continue;
            }
            if let Some(k) = self.table[i * n + j] {
                let k = k as usize;
                let field = self.action.field();
                out.set(k, field.add(out.get(k), ca));
            }
        }
    }

    /// P_g: the g-component of an element, as a function on X.
    pub fn project(&self, a: &Vector, g: &GroupElem) -> Vector {
        let base = self.action.base();
        let mut out = Vector::zero(self.action.field(), base.size());
        for (i, (t, x)) in self.index.iter().enumerate() {
            if t == g {
                out.set(*x, a.get(i));
            }
        }
        out
    }

    /// The augmentation ε(Σ a_t δ_t) = Σ_t a_t, as a function on X.
    pub fn augment(&self, a: &Vector) -> Vector {
        let base = self.action.base();
        let field = self.action.field();
        let mut out = Vector::zero(field, base.size());
        for (i, (_, x)) in self.index.iter().enumerate() {
            out.set(*x, field.add(out.get(*x), a.get(i)));
        }
        out
    }

    /// The support {t : a_t ≠ 0} of an element.
    pub fn support_of(&self, a: &Vector) -> Vec<GroupElem> {
        let mut seen = Vec::new();
        for (i, (t, _)) in self.index.iter().enumerate() {
            if a.get(i) != 0 && !seen.contains(t) {
                seen.push(t.clone());
            }
        }
        seen
    }

    /// The coordinate subspace R₀δ₀.
    pub fn r0_subspace(&self) -> Subspace {
        let field = self.action.field();
        let gens: Vec<Vector> = self
            .r0_coords
            .iter()
            .map(|&i| Vector::unit(field, self.dim(), i))
            .collect();
        Subspace::span(field, self.dim(), &gens).expect("same space")
    }

    fn r0_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.dim()];
        for &i in &self.r0_coords {
            mask[i] = true;
        }
        mask
    }

    /// The centralizer C_R(R₀δ₀), computed as the nullspace of the linear
    /// system a·(1_z δ₀) − (1_z δ₀)·a = 0 over all z ∈ X.
    pub fn centralizer_of_r0(&self) -> Subspace {
        let n = self.dim();
        let field = self.action.field();
        let base = self.action.base();
        let id = base.group().identity();

        // Rows of the constraint matrix: for each z and each output
        // coordinate k, one linear functional of the unknown a.
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut left = self.zero();
        let mut right = self.zero();
        for z in 0..base.size() {
            let f = match self.coordinate_of(&id, z) {
                Some(i) => i,
                None => continue,
            };
            // For unknown a = Σ c_j e_j: a·e_f − e_f·a is linear in c.
            let mut constraint = vec![vec![0u32; n]; n];
            for j in 0..n {
                let mut unit = self.zero();
                unit.set(j, 1);
                self.basis_mul_right(&unit, f, &mut left);
                self.basis_mul_left(f, &unit, &mut right);
                for k in 0..n {
                    constraint[k][j] = field.sub(left.get(k), right.get(k));
                }
            }
            rows.extend(constraint);
        }

        nullspace(field, n, &rows)
    }

    /// Whether R₀δ₀ equals its own centralizer.
    pub fn is_maximal_commutative(&self) -> bool {
        self.centralizer_of_r0() == self.r0_subspace()
    }

    /// The two-sided ideal generated by an element: the least subspace
    /// containing it that is closed under multiplication by every basis
    /// element, computed by worklist saturation with incremental echelon
    /// insertion.
    pub fn ideal_generated(&self, a: &Vector) -> Result<Subspace, RingError> {
        self.check_dim(a)?;
        let mut ideal = Subspace::zero(self.action.field(), self.dim());
        self.saturate_ideal(&mut ideal, a, None);
        Ok(ideal)
    }

    /// Extends `ideal` to the two-sided ideal generated by it and `a`.
    /// Stops early when the ideal already meets the stopping condition:
    /// full rank, or (when `stop_mask` is given) a nonzero intersection
    /// with that coordinate block.
    fn saturate_ideal(&self, ideal: &mut Subspace, a: &Vector, stop_mask: Option<&[bool]>) -> bool {
        let n = self.dim();
        let mut queue: Vec<Vector> = Vec::new();
        if ideal.insert_in_place(a) {
            queue.push(a.clone());
        }
        let meets = |s: &Subspace| match stop_mask {
            Some(mask) => s.rank() > s.rank_outside(mask),
            None => false,
        };
        if ideal.is_full() || meets(ideal) {
            return true;
        }
        let mut product = self.zero();
        while let Some(v) = queue.pop() {
            for b in 0..n {
                self.basis_mul_left(b, &v, &mut product);
                if !product.is_zero() && ideal.insert_in_place(&product) {
                    queue.push(product.clone());
                }
                self.basis_mul_right(&v, b, &mut product);
                if !product.is_zero() && ideal.insert_in_place(&product) {
                    queue.push(product.clone());
                }
            }
            if ideal.is_full() || meets(ideal) {
                return true;
            }
        }
        meets(ideal) || ideal.is_full()
    }

    /// Whether a subspace is a two-sided ideal.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        let mut product = self.zero();
        for row in s.basis() {
            for b in 0..n {
                self.basis_mul_left(b, row, &mut product);
                if !s.contains(&product).expect("same space") {
                    return false;
                }
                self.basis_mul_right(row, b, &mut product);
                if !s.contains(&product).expect("same space") {
                    return false;
                }
            }
        }
        true
    }

    /// (a·b)·c = a·(b·c) on every basis triple, straight off the table.
    pub fn verify_associativity(&self) -> bool {
        let n = self.dim();
        let at = |i: usize, j: usize| self.table[i * n + j];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = at(i, j).and_then(|ij| at(ij as usize, k));
                    let rhs = at(j, k).and_then(|jk| at(i, jk as usize));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Feasibility of enumerating all p^N coefficient vectors: p^N must
    /// not exceed 2^budget.
    pub(crate) fn enumeration_feasible(&self, budget_log2: u32) -> Result<(), (u32, u32)> {
        let p = self.action.field().modulus() as u128;
        let cap = 1u128 << budget_log2.min(100);
        let mut count: u128 = 1;
        for _ in 0..self.dim() {
            count = count.saturating_mul(p);
            if count > cap {
                let required =
                    (self.dim() as f64 * (self.action.field().modulus() as f64).log2()).ceil();
                return Err((required as u32, budget_log2));
            }
        }
        Ok(())
    }

    /// Walks all nonzero coefficient vectors whose leading nonzero entry is
    /// 1, one representative per scalar line, which is enough for any
    /// question about the generated ideal since ideal_generated(λa) =
    /// ideal_generated(a).
    pub(crate) fn for_each_normalized<F>(&self, mut f: F) -> Option<Vector>
    where
        F: FnMut(&SkewRing, &Vector) -> bool,
    {
        let p = self.action.field().modulus();
        let n = self.dim();
        let mut digits = vec![0u32; n];
        loop {
            // advance odometer
            let mut i = 0;
            while i < n {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == n {
                return None;
            }
            if digits.iter().rev().find(|&&d| d != 0) != Some(&1) {
                continue;
            }
            let v = Vector::from_coords(self.action.field(), digits.clone());
            if !f(self, &v) {
                return Some(v);
            }
        }
    }

    /// Exhaustive simplicity oracle: the ring is simple iff every nonzero
    /// element generates the whole ring as a two-sided ideal.
    pub fn is_simple_oracle(&self, budget_log2: u32) -> OracleOutcome {
        match self.enumeration_feasible(budget_log2) {
            Err((required, budget)) => {
                return OracleOutcome::Infeasible { log2_required: required, log2_budget: budget }
            }
            Ok(_) => {}
        }
        let witness = self.for_each_normalized(|ring, v| {
            let mut ideal = Subspace::zero(ring.action.field(), ring.dim());
            ring.saturate_ideal(&mut ideal, v, None);
            ideal.is_full()
        });
        match witness {
            None => OracleOutcome::Holds,
            Some(v) => OracleOutcome::Fails { witness: v },
        }
    }

    /// Exhaustive ideal-intersection oracle: every nonzero principal ideal
    /// must meet R₀δ₀ nontrivially. Since every nonzero ideal contains a
    /// nonzero principal one, this decides the property for all ideals.
    pub fn has_ideal_intersection_property_oracle(&self, budget_log2: u32) -> OracleOutcome {
        match self.enumeration_feasible(budget_log2) {
            Err((required, budget)) => {
                return OracleOutcome::Infeasible { log2_required: required, log2_budget: budget }
            }
            Ok(_) => {}
        }
        let mask = self.r0_mask();
        let witness = self.for_each_normalized(|ring, v| {
            let mut ideal = Subspace::zero(ring.action.field(), ring.dim());
            ring.saturate_ideal(&mut ideal, v, Some(&mask))
        });
        match witness {
            None => OracleOutcome::Holds,
            Some(v) => OracleOutcome::Fails { witness: v },
        }
    }

    /// Cross-check on one instance: R₀δ₀ is maximal commutative iff R₀ has
    /// the ideal intersection property.
    pub fn check_commutativity_iip_equivalence(&self, budget_log2: u32) -> Agreement {
        let left = self.is_maximal_commutative();
        let right = self.has_ideal_intersection_property_oracle(budget_log2).as_bool();
        Agreement { left, right }
    }

    /// Cross-check on one instance: the ring is simple iff R₀ is G-simple
    /// and R₀δ₀ is maximal commutative.
    pub fn check_simplicity_criterion(&self, budget_log2: u32) -> Agreement {
        let left = self.action.base().is_g_simple() && self.is_maximal_commutative();
        let right = self.is_simple_oracle(budget_log2).as_bool();
        Agreement { left, right }
    }

    /// Renders an element as a sum of labelled monomials.
    pub fn format_element(&self, a: &Vector) -> String {
        let base = self.action.base();
        let mut parts = Vec::new();
        for (i, (t, x)) in self.index.iter().enumerate() {
            let c = a.get(i);
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 { String::new() } else { format!("{c}·") };
            parts.push(format!("{coeff}1_{{{}}}δ_{{{}}}", base.point_label(*x), elem_label(t, None)));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The nullspace of a stacked constraint matrix, as a canonical subspace.
fn nullspace(field: crate::linalg::PrimeField, n: usize, rows: &[Vec<u32>]) -> Subspace {
    let mut echelon = Subspace::zero(field, n);
    for row in rows {
        let v = Vector::from_coords(field, row.clone());
        echelon.insert_in_place(&v);
    }
    // Pivot columns of the constraint matrix; the free columns parametrize
    // the nullspace.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    for (r, row) in echelon.basis().iter().enumerate() {
        if let Some(c) = (0..n).find(|&c| row.get(c) != 0) {
            pivot_of_col[c] = Some(r);
        }
    }
    let mut result = Subspace::zero(field, n);
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = Vector::zero(field, n);
        v.set(free, 1);
        for c in 0..n {
            if let Some(r) = pivot_of_col[c] {
                let coeff = echelon.basis()[r].get(free);
                v.set(c, field.neg(coeff));
            }
        }
        result.insert_in_place(&v);
    }
    result
}
