//! Deterministic instance generators: the worked cyclic-group action, seeded
//! random restrictions of global actions, and exhaustive sweeps of small
//! systems. Runs are reproducible from the seed alone.

use crate::group::{Group, GroupElem};
use crate::leavitt::{Edge, Graph};
use crate::paction::{restrict_global, SetPartialAction};

/// SplitMix64. Small, seedable, and identical on every platform.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// The order-4 cyclic action on three points used throughout: h_g sends
/// e2 ↦ e1 and e3 ↦ e2, h_{g²} swaps e1 and e3, h_{g³} is the inverse of
/// h_g. K^X under this action is C4-simple and the skew ring over it is
/// simple with R₀δ₀ maximal commutative.
pub fn c4_three_point_action() -> SetPartialAction {
    let group = Group::cyclic(4).expect("order 4");
    SetPartialAction::new(
        group,
        vec!["e1".into(), "e2".into(), "e3".into()],
        vec![
            (GroupElem::Table(1), vec![(1, 0), (2, 1)]),
            (GroupElem::Table(2), vec![(0, 2), (2, 0)]),
            (GroupElem::Table(3), vec![(0, 1), (1, 2)]),
        ],
    )
    .expect("well-formed")
}

/// The global identity action of C2 on `n` points: every point is fixed by
/// the generator, so nothing is G-simple or maximal commutative about it.
pub fn trivial_c2_action(n: usize) -> SetPartialAction {
    let group = Group::cyclic(2).expect("order 2");
    let points: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let pairs: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
    SetPartialAction::new(group, points, vec![(GroupElem::Table(1), pairs)]).expect("well-formed")
}

/// The global swap action of C2 on two points.
pub fn swap_c2_action() -> SetPartialAction {
    let group = Group::cyclic(2).expect("order 2");
    SetPartialAction::new(
        group,
        vec!["x1".into(), "x2".into()],
        vec![(GroupElem::Table(1), vec![(0, 1), (1, 0)])],
    )
    .expect("well-formed")
}

/// The identity-only action (empty domains off the identity) of a cyclic
/// group on `n` points.
pub fn identity_only_action(n: usize, order: usize) -> SetPartialAction {
    let group = Group::cyclic(order).expect("positive order");
    let points: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    SetPartialAction::new(group, points, vec![]).expect("well-formed")
}

/// A random restriction of a global cyclic action. The universe is
/// partitioned into cycles whose lengths divide the group order, so the
/// permutation always has order dividing n; a random nonempty subset of
/// size at most `max_carrier` becomes the carrier.
pub fn random_restriction(rng: &mut Rng, order: usize, max_carrier: usize) -> SetPartialAction {
    assert!(order >= 1 && max_carrier >= 1);
    let universe = max_carrier + order;
    let mut perm = vec![usize::MAX; universe];
    let mut unplaced: Vec<usize> = (0..universe).collect();
    while !unplaced.is_empty() {
        let divisors: Vec<usize> = (1..=order)
            .filter(|d| order % d == 0 && *d <= unplaced.len())
            .collect();
        let len = divisors[rng.below(divisors.len())];
        let mut cycle = Vec::with_capacity(len);
        for _ in 0..len {
            let i = rng.below(unplaced.len());
            cycle.push(unplaced.swap_remove(i));
        }
        for k in 0..len {
            perm[cycle[k]] = cycle[(k + 1) % len];
        }
    }
    let size = 1 + rng.below(max_carrier);
    let mut subset: Vec<usize> = (0..universe).collect();
    while subset.len() > size {
        let i = rng.below(subset.len());
        subset.swap_remove(i);
    }
    let labels: Vec<String> = (0..universe).map(|i| format!("y{i}")).collect();
    restrict_global(&labels, &perm, &subset, order).expect("restriction is always valid")
}

/// Every C2 partial action on a carrier of at most `max_points` points, up
/// to the choice of domain and involution. A C2 action is exactly a subset
/// D ⊆ X together with an involution of D, and each such datum arises as a
/// restriction of a global involution on a larger universe.
pub fn all_c2_actions(max_points: usize) -> Vec<SetPartialAction> {
    let mut out = Vec::new();
    for n in 1..=max_points {
        let points: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
        for mask in 0u32..(1 << n) {
            let domain: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            for inv in involutions(&domain) {
                let group = Group::cyclic(2).expect("order 2");
                let action = SetPartialAction::new(
                    group,
                    points.clone(),
                    vec![(GroupElem::Table(1), inv)],
                )
                .expect("well-formed");
                out.push(action);
            }
        }
    }
    out
}

/// Every acyclic directed graph with the given bounds, one representative
/// per isomorphism class. Parallel edges and isolated vertices are
/// included; self-loops never are (they are cycles).
pub fn acyclic_graphs_up_to_iso(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for v in 1..=max_vertices {
        // Edge slots are ordered pairs of distinct vertices; an edge
        // multiset is a sorted list of slot indices (repeats allowed).
        let slots: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (0..v).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        let mut multisets: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..max_edges {
            let mut next = multisets.clone();
            for m in &multisets {
                let start = m.last().copied().unwrap_or(0);
                for s in start..slots.len() {
                    let mut bigger = m.clone();
                    bigger.push(s);
                    next.push(bigger);
                }
            }
            multisets = next;
            multisets.sort();
            multisets.dedup();
        }
        let mut seen = std::collections::BTreeSet::new();
        for m in multisets {
            let pairs: Vec<(usize, usize)> = m.iter().map(|&s| slots[s]).collect();
            if !canonical_under_permutation(v, &pairs, &mut seen) {
                continue;
            }
            let vertices: Vec<String> = (1..=v).map(|i| format!("v{i}")).collect();
            let edges: Vec<Edge> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| Edge { name: format!("e{}", i + 1), src: a, rng: b })
                .collect();
            let g = Graph::new(vertices, edges).expect("well-formed");
            if g.is_acyclic() {
                out.push(g);
            }
        }
    }
    out
}

/// Records the canonical relabeling of an edge multiset; returns false if
/// an isomorphic graph was seen before.
fn canonical_under_permutation(
    v: usize,
    pairs: &[(usize, usize)],
    seen: &mut std::collections::BTreeSet<Vec<(usize, usize)>>,
) -> bool {
    let mut perm: Vec<usize> = (0..v).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute_all(&mut perm, 0, &mut |p| {
        let mut relabeled: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (p[a], p[b])).collect();
        relabeled.sort();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    seen.insert(best.expect("at least the identity permutation"))
}

fn permute_all(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// All involutions of the given points, as (x, h(x)) pair lists.
fn involutions(domain: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if domain.is_empty() {
        return vec![vec![]];
    }
    let first = domain[0];
    let rest = &domain[1..];
    let mut out = Vec::new();
    // first is a fixed point
    for mut tail in involutions(rest) {
        tail.push((first, first));
        out.push(tail);
    }
    // first is swapped with a later point
    for (i, &partner) in rest.iter().enumerate() {
        let mut remaining: Vec<usize> = rest.to_vec();
        remaining.remove(i);
        for mut tail in involutions(&remaining) {
            tail.push((first, partner));
            tail.push((partner, first));
            out.push(tail);
        }
    }
    out
}
