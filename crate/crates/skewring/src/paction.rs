//! Set-level partial actions on a finite carrier, validation of the
//! partial-action axioms, invariant-subset analysis, and the induced
//! action on the function algebra K^X.
//!
//! A partial action of a group G on a set X is a family of subsets X_t and
//! bijections h_t : X_{t⁻¹} → X_t such that X_0 = X, h_0 = id,
//! h_{t⁻¹} = h_t⁻¹, h_t(X_{t⁻¹} ∩ X_s) = X_t ∩ X_{ts}, and
//! h_t(h_s(x)) = h_{ts}(x) wherever the left side must be defined. Only the
//! elements with nonempty domain are stored; everything else acts on the
//! empty set.
//!
//! Ideals of K^X correspond to subsets of X (every ideal of a finite
//! product of fields is spanned by coordinate idempotents), which makes
//! G-invariance a purely combinatorial question.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::group::{elem_label, Group, GroupElem};
use crate::linalg::{PrimeField, Subspace, Vector};

/// Errors raised while assembling an action from raw data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    EmptyCarrier,
    PointOutOfRange { t: String, point: usize },
    DuplicateDomainPoint { t: String, point: usize },
    DuplicateSupport { t: String },
    ExplicitIdentity,
    ElemKindMismatch,
    NotAPermutation,
    PermOrderMismatch { n: usize },
    SubsetOutOfRange { point: usize },
    ZeroOrderGroup,
}

impl fmt::Display for ActionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionError::EmptyCarrier => write!(f, "the carrier set must be nonempty"),
            ActionError::PointOutOfRange { t, point } => {
                write!(f, "map for {t} mentions point index {point} outside the carrier")
            }
            ActionError::DuplicateDomainPoint { t, point } => {
                write!(f, "map for {t} defines point index {point} twice")
            }
            ActionError::DuplicateSupport { t } => write!(f, "two maps given for {t}"),
            ActionError::ExplicitIdentity => {
                write!(f, "the identity map is implicit and must not be listed")
            }
            ActionError::ElemKindMismatch => write!(f, "group element kind does not match the group"),
            ActionError::NotAPermutation => write!(f, "the global map is not a permutation"),
            ActionError::PermOrderMismatch { n } => {
                write!(f, "the permutation's order does not divide {n}")
            }
            ActionError::SubsetOutOfRange { point } => {
                write!(f, "subset point index {point} outside the universe")
            }
            ActionError::ZeroOrderGroup => write!(f, "the acting group must have positive order"),
        }
    }
}

impl std::error::Error for ActionError {}

/// A partial map on carrier indices, stored densely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialMap {
    img: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn identity(n: usize) -> Self {
        PartialMap { img: (0..n).map(Some).collect() }
    }

    fn from_pairs(n: usize, pairs: &[(usize, usize)], label: &str) -> Result<Self, ActionError> {
        let mut img = vec![None; n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(ActionError::PointOutOfRange { t: label.to_string(), point: x.max(y) });
            }
            if img[x].is_some() {
                return Err(ActionError::DuplicateDomainPoint { t: label.to_string(), point: x });
            }
            img[x] = Some(y);
        }
        Ok(PartialMap { img })
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.img.get(x).copied().flatten()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.iter().enumerate().filter_map(|(x, y)| y.map(|_| x))
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.img.iter().flatten().copied().collect()
    }

    pub fn domain_set(&self) -> BTreeSet<usize> {
        self.domain().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.img.iter().all(|y| y.is_none())
    }

    /// The first pair of domain points sharing an image, if any.
    fn injectivity_failure(&self) -> Option<(usize, usize)> {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for x in self.domain() {
            let y = self.img[x].unwrap();
            if let Some(&x0) = seen.get(&y) {
                return Some((x0, x));
            }
            seen.insert(y, x);
        }
        None
    }

    /// Points x with h(x) = x.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.domain().filter(|&x| self.img[x] == Some(x)).collect()
    }
}

/// One violated axiom, with the offending group elements and a witness
/// point, all rendered as labels so the report stands on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonInjective { t: String, x1: String, x2: String },
    IdentityBroken,
    MissingInverse { t: String },
    InverseMismatch { t: String, x: String },
    Compatibility { s: String, t: String, ts: String, witness: String },
    CompositionUndefined { s: String, t: String, ts: String, x: String },
    Composition { s: String, t: String, ts: String, x: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonInjective { t, x1, x2 } => {
                write!(f, "structural: h_{t} is not injective ({x1} and {x2} share an image)")
            }
            Violation::IdentityBroken => write!(f, "identity axiom: h_0 is not the identity on X"),
            Violation::MissingInverse { t } => {
                write!(f, "inverse axiom: {t} has a nonempty domain but {t}⁻¹ does not")
            }
            Violation::InverseMismatch { t, x } => {
                write!(f, "inverse axiom: h_{t}⁻¹ does not undo h_{t} at {x}")
            }
            Violation::Compatibility { s, t, ts, witness } => write!(
                f,
                "compatibility axiom: h_{t}(X_{t}⁻¹ ∩ X_{s}) ≠ X_{t} ∩ X_{ts} (witness {witness})"
            ),
            Violation::CompositionUndefined { s, t, ts, x } => write!(
                f,
                "composition axiom: h_{t}∘h_{s} is undefined at {x} where h_{ts} is defined"
            ),
            Violation::Composition { s, t, ts, x } => {
                write!(f, "composition axiom: h_{t}(h_{s}({x})) ≠ h_{ts}({x})")
            }
        }
    }
}

/// The outcome of checking every axiom; empty means the action is valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "all partial-action axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A partial action of a group on a finite indexed carrier set.
///
/// The stored maps are exactly the elements of the support T (nonempty
/// domain); the identity is always present and total. Values are immutable
/// after construction.
#[derive(Clone, PartialEq, Debug)]
pub struct SetPartialAction {
    group: Group,
    points: Vec<String>,
    maps: BTreeMap<GroupElem, PartialMap>,
}

impl SetPartialAction {
    /// Assembles an action from per-element (x, h_t(x)) pair lists. The
    /// identity must be omitted; empty maps are dropped. Structural
    /// problems that make the data unrepresentable are errors here, while
    /// axiom violations are the business of [`SetPartialAction::validate`].
    pub fn new(
        group: Group,
        points: Vec<String>,
        maps: Vec<(GroupElem, Vec<(usize, usize)>)>,
    ) -> Result<Self, ActionError> {
        if points.is_empty() {
            return Err(ActionError::EmptyCarrier);
        }
        let n = points.len();
        let mut stored: BTreeMap<GroupElem, PartialMap> = BTreeMap::new();
        for (elem, pairs) in maps {
            let kind_ok = matches!(
                (&group, &elem),
                (Group::Table(_), GroupElem::Table(_)) | (Group::Free { .. }, GroupElem::Word(_))
            );
            if !kind_ok {
                return Err(ActionError::ElemKindMismatch);
            }
            if group.is_identity(&elem) {
                return Err(ActionError::ExplicitIdentity);
            }
            if pairs.is_empty() {
                continue;
            }
            let label = elem_label(&elem, None);
            if stored.contains_key(&elem) {
                return Err(ActionError::DuplicateSupport { t: label });
            }
            let map = PartialMap::from_pairs(n, &pairs, &label)?;
            stored.insert(elem, map);
        }
        stored.insert(group.identity(), PartialMap::identity(n));
        Ok(SetPartialAction { group, points, maps: stored })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn point_label(&self, x: usize) -> &str {
        &self.points[x]
    }

    /// The support T, identity included, in a deterministic order.
    pub fn support(&self) -> impl Iterator<Item = &GroupElem> {
        self.maps.keys()
    }

    pub fn map(&self, t: &GroupElem) -> Option<&PartialMap> {
        self.maps.get(t)
    }

    /// h_t(x), or None when x is outside X_{t⁻¹} (or t outside the support).
    pub fn apply(&self, t: &GroupElem, x: usize) -> Option<usize> {
        self.maps.get(t).and_then(|m| m.apply(x))
    }

    /// X_t, the codomain of h_t. Empty for elements outside the support.
    pub fn carrier_subset(&self, t: &GroupElem) -> BTreeSet<usize> {
        match self.maps.get(t) {
            Some(m) => m.image(),
            None => BTreeSet::new(),
        }
    }

    /// Checks every axiom and returns the full list of violations, each
    /// with the pair of group elements involved and a witness point.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.size();
        let id = self.group.identity();

        match self.maps.get(&id) {
            Some(m) if *m == PartialMap::identity(n) => {}
            _ => violations.push(Violation::IdentityBroken),
        }

        for (t, m) in &self.maps {
            if let Some((x1, x2)) = m.injectivity_failure() {
                violations.push(Violation::NonInjective {
                    t: self.label(t),
                    x1: self.points[x1].clone(),
                    x2: self.points[x2].clone(),
                });
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }

        // h_{t⁻¹} must be present and undo h_t. The remaining axiom checks
        // only apply maps forwards, so they stay meaningful and are still
        // collected when this pairing fails.
        for (t, m) in &self.maps {
            let t_inv = self.group.invert(t);
            match self.maps.get(&t_inv) {
                None => violations.push(Violation::MissingInverse { t: self.label(t) }),
                Some(m_inv) => {
                    for x in m.domain() {
                        let y = m.apply(x).unwrap();
                        if m_inv.apply(y) != Some(x) {
                            violations.push(Violation::InverseMismatch {
                                t: self.label(t),
                                x: self.points[x].clone(),
                            });
                            break;
                        }
                    }
                }
            }
        }

        let support: Vec<GroupElem> = self.maps.keys().cloned().collect();
        let empty = PartialMap { img: vec![None; n] };

        // Compatibility h_t(X_{t⁻¹} ∩ X_s) = X_t ∩ X_{ts}, once for every
        // pair (s, t) in the support and once for the induced pairs
        // s = t⁻¹u with u in the support, which covers the elements whose
        // domain must stay empty.
        let mut compat_pairs: BTreeSet<(GroupElem, GroupElem)> = BTreeSet::new();
        for s in &support {
            for t in &support {
                compat_pairs.insert((s.clone(), t.clone()));
            }
        }
        for u in &support {
            for t in &support {
                let s = self.group.multiply(&self.group.invert(t), u);
                compat_pairs.insert((s, t.clone()));
            }
        }
        for (s, t) in &compat_pairs {
            if let Some(v) = self.compatibility_witness(s, t, &empty) {
                violations.push(Violation::Compatibility {
                    s: self.label(s),
                    t: self.label(t),
                    ts: self.label(&self.group.multiply(t, s)),
                    witness: self.points[v].clone(),
                });
            }
        }

        // Composition h_t(h_s(x)) = h_{ts}(x) on X_{s⁻¹} ∩ X_{(ts)⁻¹}; the
        // domain is empty unless ts lies in the support.
        for s in &support {
            for t in &support {
                let ts = self.group.multiply(t, s);
                let m_ts = match self.maps.get(&ts) {
                    Some(m) => m,
                    None => continue,
                };
                let m_s = &self.maps[s];
                let m_t = &self.maps[t];
                for x in m_ts.domain() {
                    let mid = match m_s.apply(x) {
                        Some(y) => y,
                        None => continue, // x outside X_{s⁻¹}
                    };
                    match m_t.apply(mid) {
                        None => violations.push(Violation::CompositionUndefined {
                            s: self.label(s),
                            t: self.label(t),
                            ts: self.label(&ts),
                            x: self.points[x].clone(),
                        }),
                        Some(z) => {
                            if Some(z) != m_ts.apply(x) {
                                violations.push(Violation::Composition {
                                    s: self.label(s),
                                    t: self.label(t),
                                    ts: self.label(&ts),
                                    x: self.points[x].clone(),
                                });
                            }
                        }
                    }
                }
            }
        }

        ValidationReport { violations }
    }

    fn label(&self, t: &GroupElem) -> String {
        elem_label(t, None)
    }

    fn compatibility_witness(&self, s: &GroupElem, t: &GroupElem, empty: &PartialMap) -> Option<usize> {
        let m_s = self.maps.get(s).unwrap_or(empty);
        let m_t = self.maps.get(t).unwrap_or(empty);
        let ts = self.group.multiply(t, s);
        let m_ts = self.maps.get(&ts).unwrap_or(empty);

        let x_s = m_s.image();
        let x_t = m_t.image();
        let x_ts = m_ts.image();
        let dom_t = m_t.domain_set();

        let lhs: BTreeSet<usize> = dom_t
            .intersection(&x_s)
            .map(|&x| m_t.apply(x).unwrap())
            .collect();
        let rhs: BTreeSet<usize> = x_t.intersection(&x_ts).copied().collect();
        lhs.symmetric_difference(&rhs).next().copied()
    }

    /// The smallest superset of `seed` with h_t(S ∩ X_{t⁻¹}) ⊆ S for every
    /// t, by breadth-first saturation.
    pub fn invariant_closure(&self, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut closed: BTreeSet<usize> = seed.into_iter().collect();
        let mut queue: VecDeque<usize> = closed.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for m in self.maps.values() {
                if let Some(y) = m.apply(x) {
                    if closed.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
        }
        closed
    }

    /// G-simplicity of K^X under the induced action: no invariant subset of
    /// X other than ∅ and X, decided through singleton closures.
    pub fn is_g_simple(&self) -> bool {
        (0..self.size()).all(|x| self.invariant_closure([x]).len() == self.size())
    }

    /// Whether a subset is invariant: h_t(S ∩ X_{t⁻¹}) ⊆ S for all t.
    pub fn is_invariant_subset(&self, subset: &BTreeSet<usize>) -> bool {
        self.maps.values().all(|m| {
            subset
                .iter()
                .filter_map(|&x| m.apply(x))
                .all(|y| subset.contains(&y))
        })
    }

    /// Independent ground-truth route for G-simplicity: enumerate all 2^|X|
    /// subsets and keep the invariant ones. Only for small carriers.
    pub fn invariant_subsets_exhaustive(&self) -> Vec<BTreeSet<usize>> {
        let n = self.size();
        assert!(n <= 20, "exhaustive subset enumeration is limited to |X| ≤ 20");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let subset: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if self.is_invariant_subset(&subset) {
                out.push(subset);
            }
        }
        out
    }
}

/// Restriction of a global cyclic action: given a permutation of a
/// universe Y with order dividing n and a nonempty subset X ⊆ Y, the data
/// X_t = X ∩ perm^t(X), h_t = perm^t always satisfies the axioms.
pub fn restrict_global(
    labels: &[String],
    perm: &[usize],
    subset: &[usize],
    n: usize,
) -> Result<SetPartialAction, ActionError> {
    let m = labels.len();
    if n == 0 {
        return Err(ActionError::ZeroOrderGroup);
    }
    if perm.len() != m {
        return Err(ActionError::NotAPermutation);
    }
    let mut seen = vec![false; m];
    for &y in perm {
        if y >= m || seen[y] {
            return Err(ActionError::NotAPermutation);
        }
        seen[y] = true;
    }
    // perm^n = id
    let mut power: Vec<usize> = (0..m).collect();
    for _ in 0..n {
        power = power.iter().map(|&y| perm[y]).collect();
    }
    if power.iter().enumerate().any(|(y, &py)| y != py) {
        return Err(ActionError::PermOrderMismatch { n });
    }
    if subset.is_empty() {
        return Err(ActionError::EmptyCarrier);
    }
    let mut chosen: Vec<usize> = subset.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if let Some(&bad) = chosen.iter().find(|&&y| y >= m) {
        return Err(ActionError::SubsetOutOfRange { point: bad });
    }

    let group = Group::cyclic(n).map_err(|_| ActionError::ZeroOrderGroup)?;
    let mut local = vec![None; m];
    for (i, &y) in chosen.iter().enumerate() {
        local[y] = Some(i);
    }
    let points: Vec<String> = chosen.iter().map(|&y| labels[y].clone()).collect();

    let mut maps = Vec::new();
    let mut step: Vec<usize> = (0..m).collect();
    for t in 1..n {
        step = step.iter().map(|&y| perm[y]).collect();
        let pairs: Vec<(usize, usize)> = chosen
            .iter()
            .filter_map(|&y| local[step[y]].map(|img| (local[y].unwrap(), img)))
            .collect();
        maps.push((GroupElem::Table(t), pairs));
    }
    SetPartialAction::new(group, points, maps)
}

/// The induced partial action on the function algebra K^X: the ideal D_t
/// is K^{X_t} and α_t(f) = f ∘ h_{t⁻¹}. Each D_t is unital with unit
/// 1_{X_t}.
#[derive(Clone, Debug)]
pub struct AlgebraPartialAction {
    base: SetPartialAction,
    field: PrimeField,
}

impl AlgebraPartialAction {
    pub fn new(base: SetPartialAction, field: PrimeField) -> Self {
        AlgebraPartialAction { base, field }
    }

    pub fn base(&self) -> &SetPartialAction {
        &self.base
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.base.size()
    }

    /// α_t(f) for f supported in X_{t⁻¹}; coordinates of f outside the
    /// domain of h_t are ignored.
    pub fn apply(&self, t: &GroupElem, f: &Vector) -> Vector {
        let mut out = Vector::zero(self.field, self.base.size());
        if let Some(m) = self.base.map(t) {
            for x in m.domain() {
                let y = m.apply(x).unwrap();
                out.set(y, f.get(x));
            }
        }
        out
    }

    /// The unit 1_{X_t} of the ideal D_t.
    pub fn unit_of(&self, t: &GroupElem) -> Vector {
        self.indicator(self.base.carrier_subset(t).iter().copied())
    }

    /// The indicator function of a set of points.
    pub fn indicator(&self, xs: impl IntoIterator<Item = usize>) -> Vector {
        let mut v = Vector::zero(self.field, self.base.size());
        for x in xs {
            v.set(x, 1);
        }
        v
    }

    /// Whether a subspace ideal I of K^X is G-invariant:
    /// α_t(I ∩ D_{t⁻¹}) ⊆ I for every t in the support.
    pub fn is_invariant_ideal(&self, ideal: &Subspace) -> bool {
        let n = self.base.size();
        for t in self.base.support() {
            let t_inv = self.base.group().invert(t);
            let dom = self.base.carrier_subset(&t_inv);
            let dom_vectors: Vec<Vector> =
                dom.iter().map(|&x| Vector::unit(self.field, n, x)).collect();
            let d_tinv = Subspace::span(self.field, n, &dom_vectors).expect("same space");
            let part = ideal.intersect(&d_tinv).expect("same space");
            for row in part.basis() {
                let moved = self.apply(t, row);
                if !ideal.contains(&moved).expect("same space") {
                    return false;
                }
            }
        }
        true
    }
}

/// Pointwise product in K^X.
pub fn pointwise_mul(f: &Vector, g: &Vector) -> Vector {
    assert_eq!(f.dim(), g.dim());
    let field = f.field();
    let coords = (0..f.dim()).map(|i| field.mul(f.get(i), g.get(i))).collect();
    Vector::from_coords(field, coords)
}

/// Every ring ideal of K^n, computed from first principles: close each
/// principal ideal under multiplication by coordinate functions, then
/// close the resulting set under sums. For a finite product of fields this
/// recovers exactly the coordinate subspaces K^S.
pub fn function_ring_ideals(field: PrimeField, n: usize) -> Vec<Subspace> {
    let p = field.modulus() as u64;
    let total = p.checked_pow(n as u32).expect("carrier too large to enumerate");
    assert!(total <= 1 << 20, "ideal enumeration is limited to p^n ≤ 2^20");

    let mut ideals: Vec<Subspace> = vec![Subspace::zero(field, n)];
    let full = Subspace::full(field, n);
    for code in 1..total {
        let mut digits = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            digits.push((c % p) as u32);
            c /= p;
        }
        let v = Vector::from_coords(field, digits);
        // span{v · e_i} ∪ {v} is the principal ideal of v.
        let mut gens = vec![v.clone()];
        for i in 0..n {
            let mut w = Vector::zero(field, n);
            w.set(i, v.get(i));
            gens.push(w);
        }
        let principal = Subspace::span(field, n, &gens).expect("same space");
        if !ideals.contains(&principal) {
            ideals.push(principal);
        }
    }
    // Sums of ideals are ideals; close up to the full lattice.
    loop {
        let mut added = false;
        let snapshot = ideals.clone();
        for a in &snapshot {
            for b in &snapshot {
                let s = a.sum(b).expect("same space");
                if !ideals.contains(&s) {
                    ideals.push(s);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    if !ideals.contains(&full) {
        ideals.push(full);
    }
    ideals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// The order-4 cyclic action on three coordinate idempotents:
    /// h_g : e2 ↦ e1, e3 ↦ e2 with the induced squares and inverses.
    fn c4_action() -> SetPartialAction {
        let group = Group::cyclic(4).unwrap();
        SetPartialAction::new(
            group,
            labels(&["e1", "e2", "e3"]),
            vec![
                (GroupElem::Table(1), vec![(1, 0), (2, 1)]),
                (GroupElem::Table(2), vec![(0, 2), (2, 0)]),
                (GroupElem::Table(3), vec![(0, 1), (1, 2)]),
            ],
        )
        .unwrap()
    }

    fn identity_only(n_points: usize, group_order: usize) -> SetPartialAction {
        SetPartialAction::new(
            Group::cyclic(group_order).unwrap(),
            (0..n_points).map(|i| format!("x{i}")).collect(),
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn c4_action_is_valid() {
        let report = c4_action().validate();
        assert!(report.is_valid(), "unexpected violations: {report}");
    }

    #[test]
    fn identity_only_action_is_valid() {
        assert!(identity_only(3, 4).validate().is_valid());
    }

    #[test]
    fn redirected_c4_violates_composition() {
        // h_g changed to e2 ↦ e2, e3 ↦ e1: still a bijection onto {e1, e2},
        // but the axioms break.
        let group = Group::cyclic(4).unwrap();
        let broken = SetPartialAction::new(
            group,
            labels(&["e1", "e2", "e3"]),
            vec![
                (GroupElem::Table(1), vec![(1, 1), (2, 0)]),
                (GroupElem::Table(2), vec![(0, 2), (2, 0)]),
                (GroupElem::Table(3), vec![(0, 1), (1, 2)]),
            ],
        )
        .unwrap();
        let report = broken.validate();
        assert!(!report.is_valid());
        assert!(
            report.violations.iter().any(|v| matches!(
                v,
                Violation::Composition { .. } | Violation::CompositionUndefined { .. }
            )),
            "expected a composition violation, got: {report}"
        );
    }

    #[test]
    fn non_injective_map_is_a_structural_violation() {
        let group = Group::cyclic(2).unwrap();
        let broken = SetPartialAction::new(
            group,
            labels(&["a", "b"]),
            vec![(GroupElem::Table(1), vec![(0, 0), (1, 0)])],
        )
        .unwrap();
        let report = broken.validate();
        assert!(matches!(report.violations[0], Violation::NonInjective { .. }));
    }

    #[test]
    fn explicit_identity_rejected() {
        let group = Group::cyclic(2).unwrap();
        let err = SetPartialAction::new(
            group,
            labels(&["a"]),
            vec![(GroupElem::Table(0), vec![(0, 0)])],
        )
        .unwrap_err();
        assert_eq!(err, ActionError::ExplicitIdentity);
    }

    #[test]
    fn restrict_global_full_subset_is_global() {
        let names = labels(&["1", "2", "3"]);
        let perm = vec![1, 2, 0];
        let a = restrict_global(&names, &perm, &[0, 1, 2], 3).unwrap();
        assert!(a.validate().is_valid());
        for t in 1..3 {
            assert_eq!(a.carrier_subset(&GroupElem::Table(t)).len(), 3);
        }
    }

    #[test]
    fn restrict_global_hand_evaluated_example() {
        // Y = {1,2,3,4}, perm = (1 2 3 4), X = {1,2}, n = 4:
        // X_g = X ∩ perm(X) = {2} and h_g(1) = 2.
        let names = labels(&["1", "2", "3", "4"]);
        let perm = vec![1, 2, 3, 0];
        let a = restrict_global(&names, &perm, &[0, 1], 4).unwrap();
        assert!(a.validate().is_valid());
        let g = GroupElem::Table(1);
        let x_g: Vec<String> = a
            .carrier_subset(&g)
            .iter()
            .map(|&x| a.point_label(x).to_string())
            .collect();
        assert_eq!(x_g, vec!["2".to_string()]);
        // local index of "1" is 0; h_g("1") = "2"
        assert_eq!(a.apply(&g, 0), Some(1));
    }

    #[test]
    fn restrict_global_fixed_singleton() {
        let names = labels(&["1", "2"]);
        let perm = vec![0, 1];
        let a = restrict_global(&names, &perm, &[0], 2).unwrap();
        assert!(a.validate().is_valid());
        assert_eq!(a.size(), 1);
        assert_eq!(a.carrier_subset(&GroupElem::Table(1)).len(), 1);
    }

    #[test]
    fn restrict_global_rejects_wrong_order() {
        let names = labels(&["1", "2", "3"]);
        let perm = vec![1, 2, 0]; // order 3
        let err = restrict_global(&names, &perm, &[0], 2).unwrap_err();
        assert_eq!(err, ActionError::PermOrderMismatch { n: 2 });
    }

    #[test]
    fn restrict_global_rejects_empty_subset() {
        let names = labels(&["1"]);
        assert_eq!(restrict_global(&names, &[0], &[], 1).unwrap_err(), ActionError::EmptyCarrier);
    }

    #[test]
    fn closure_of_empty_is_empty() {
        assert!(c4_action().invariant_closure([]).is_empty());
    }

    #[test]
    fn closure_in_c4_example_is_everything() {
        // No proper invariant ideal contains e1.
        let a = c4_action();
        let closure = a.invariant_closure([0]);
        assert_eq!(closure.len(), 3);
    }

    #[test]
    fn closure_under_identity_only_action_is_the_seed() {
        let a = identity_only(3, 2);
        assert_eq!(a.invariant_closure([1]), BTreeSet::from([1]));
    }

    #[test]
    fn c4_example_is_g_simple() {
        assert!(c4_action().is_g_simple());
    }

    #[test]
    fn identity_only_on_two_points_is_not_g_simple() {
        assert!(!identity_only(2, 2).is_g_simple());
    }

    #[test]
    fn global_rotation_is_g_simple_and_matches_oracle() {
        let names = labels(&["1", "2", "3", "4"]);
        let perm = vec![1, 2, 3, 0];
        let a = restrict_global(&names, &perm, &[0, 1, 2, 3], 4).unwrap();
        assert!(a.is_g_simple());
        let invariant = a.invariant_subsets_exhaustive();
        assert_eq!(invariant.len(), 2); // ∅ and X only
    }

    fn scramble(state: &mut u64) -> u64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Random order-dividing permutation: universe is partitioned into
    /// cycles whose lengths divide n.
    fn random_restriction(state: &mut u64, n: usize, universe: usize, carrier_max: usize) -> SetPartialAction {
        let mut perm = vec![usize::MAX; universe];
        let mut unplaced: Vec<usize> = (0..universe).collect();
        while !unplaced.is_empty() {
            let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0 && *d <= unplaced.len()).collect();
            let len = divisors[(scramble(state) % divisors.len() as u64) as usize];
            let mut cycle = Vec::with_capacity(len);
            for _ in 0..len {
                let i = (scramble(state) % unplaced.len() as u64) as usize;
                cycle.push(unplaced.swap_remove(i));
            }
            for k in 0..len {
                perm[cycle[k]] = cycle[(k + 1) % len];
            }
        }
        let size = 1 + (scramble(state) % carrier_max as u64) as usize;
        let mut subset: Vec<usize> = (0..universe).collect();
        while subset.len() > size {
            let i = (scramble(state) % subset.len() as u64) as usize;
            subset.swap_remove(i);
        }
        let names: Vec<String> = (0..universe).map(|i| format!("y{i}")).collect();
        restrict_global(&names, &perm, &subset, n).unwrap()
    }

    #[test]
    fn restrictions_always_pass_validation() {
        let mut state = 42u64;
        for _ in 0..120 {
            let n = 2 + (scramble(&mut state) % 3) as usize;
            let a = random_restriction(&mut state, n, 6, 4);
            let report = a.validate();
            assert!(report.is_valid(), "restriction produced violations: {report}");
        }
    }

    #[test]
    fn closure_is_monotone_idempotent_extensive() {
        let mut state = 7u64;
        for _ in 0..60 {
            let a = random_restriction(&mut state, 4, 5, 4);
            let n = a.size();
            let mask = scramble(&mut state) as usize % (1 << n);
            let seed: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = a.invariant_closure(seed.iter().copied());
            assert!(seed.is_subset(&closed), "extensive");
            assert_eq!(a.invariant_closure(closed.iter().copied()), closed, "idempotent");
            let bigger: BTreeSet<usize> = closed.union(&BTreeSet::from([0])).copied().collect();
            let closed_bigger = a.invariant_closure(bigger.iter().copied());
            assert!(closed.is_subset(&closed_bigger), "monotone");
        }
    }

    #[test]
    fn g_simplicity_agrees_with_subset_enumeration() {
        let mut state = 2024u64;
        for _ in 0..80 {
            let n = 2 + (scramble(&mut state) % 3) as usize;
            let a = random_restriction(&mut state, n, 6, 6);
            let only_trivial = a.invariant_subsets_exhaustive().len() == 2;
            assert_eq!(a.is_g_simple(), only_trivial);
        }
    }

    #[test]
    fn algebra_action_is_multiplicative_and_invertible_on_basis() {
        let field = PrimeField::new(3).unwrap();
        let mut state = 5u64;
        for _ in 0..40 {
            let a = random_restriction(&mut state, 4, 5, 4);
            let alg = AlgebraPartialAction::new(a.clone(), field);
            let support: Vec<GroupElem> = a.support().cloned().collect();
            for t in &support {
                let t_inv = a.group().invert(t);
                let dom = a.carrier_subset(&t_inv);
                for &x in &dom {
                    for &y in &dom {
                        let fx = alg.indicator([x]);
                        let fy = alg.indicator([y]);
                        let lhs = alg.apply(t, &pointwise_mul(&fx, &fy));
                        let rhs = pointwise_mul(&alg.apply(t, &fx), &alg.apply(t, &fy));
                        assert_eq!(lhs, rhs, "α_t must be multiplicative");
                    }
                    let fx = alg.indicator([x]);
                    let roundtrip = alg.apply(&t_inv, &alg.apply(t, &fx));
                    assert_eq!(roundtrip, fx, "α_{{t⁻¹}} must undo α_t on D_{{t⁻¹}}");
                }
            }
        }
    }

    #[test]
    fn function_ring_ideal_lattice_is_the_subset_lattice() {
        for p in [2u32, 3] {
            let field = PrimeField::new(p).unwrap();
            let ideals = function_ring_ideals(field, 3);
            assert_eq!(ideals.len(), 8, "K^3 has exactly 2^3 ideals over F_{p}");
            let proper_nonzero = ideals
                .iter()
                .filter(|i| !i.is_zero() && !i.is_full())
                .count();
            assert_eq!(proper_nonzero, 6);
        }
    }

    #[test]
    fn c4_example_has_no_invariant_proper_ideal() {
        let field = PrimeField::new(2).unwrap();
        let a = c4_action();
        let alg = AlgebraPartialAction::new(a, field);
        for ideal in function_ring_ideals(field, 3) {
            if ideal.is_zero() || ideal.is_full() {
                assert!(alg.is_invariant_ideal(&ideal));
            } else {
                assert!(!alg.is_invariant_ideal(&ideal), "proper ideal must not be invariant");
            }
        }
    }
}
