//! Exact linear algebra over prime fields F_p.
//!
//! Everything downstream, from ideal lattices to centralizers to the
//! simplicity oracles, reduces to row-echelon computations on dense vectors over a
//! prime field. Subspaces are kept in reduced row-echelon form at all
//! times, so set equality of subspaces is structural equality of their
//! bases.

use std::fmt;

/// Errors raised by vector and subspace operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    /// The modulus is not a prime in the supported range 2 ≤ p < 2^16.
    NotPrime(u32),
    /// Operands live in spaces of different dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// Operands are defined over different prime fields.
    FieldMismatch { left: u32, right: u32 },
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::NotPrime(p) => write!(f, "{p} is not a prime in [2, 2^16)"),
            LinAlgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LinAlgError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: F_{left} vs F_{right}")
            }
        }
    }
}

impl std::error::Error for LinAlgError {}

/// The prime field F_p with canonical representatives in [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds F_p, rejecting composite or out-of-range moduli.
    pub fn new(p: u32) -> Result<Self, LinAlgError> {
        if p < 2 || p >= (1 << 16) || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b { a - b } else { a + self.p - b }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 { 0 } else { self.p - a }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse of a nonzero element, via Fermat's little theorem.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Canonical representative of an integer.
    pub fn reduce(&self, a: u64) -> u32 {
        (a % self.p as u64) as u32
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense vector over a prime field. Length is fixed at creation.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Vector {
    field: PrimeField,
    coords: Vec<u32>,
}

impl Vector {
    pub fn zero(field: PrimeField, dim: usize) -> Self {
        Vector { field, coords: vec![0; dim] }
    }

    /// Builds a vector from raw coordinates, reducing each entry mod p.
    pub fn from_coords(field: PrimeField, coords: Vec<u32>) -> Self {
        let coords = coords.into_iter().map(|c| field.reduce(c as u64)).collect();
        Vector { field, coords }
    }

    /// The standard basis vector e_i.
    pub fn unit(field: PrimeField, dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(field, dim);
        v.coords[i] = 1;
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, i: usize) -> u32 {
        self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: u32) {
        self.coords[i] = self.field.reduce(value as u64);
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Vector { field: self.field, coords }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Vector { field: self.field, coords }
    }

    pub fn scale(&self, c: u32) -> Vector {
        let coords = self.coords.iter().map(|&a| self.field.mul(a, c)).collect();
        Vector { field: self.field, coords }
    }

    /// In-place a ← a − c·b, the row operation used throughout reduction.
    fn submul(&mut self, c: u32, b: &Vector) {
        if c == 0 {
            return;
        }
        for (ai, &bi) in self.coords.iter_mut().zip(&b.coords) {
            *ai = self.field.sub(*ai, self.field.mul(c, bi));
        }
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.coords.iter().position(|&c| c != 0)
    }
}

/// A subspace of F_p^n stored as a reduced row-echelon basis.
///
/// Invariants: rows are nonzero, pivot columns strictly increase, each
/// pivot entry is 1 and is the only nonzero entry in its column. Two
/// subspaces are set-equal iff their bases are identical sequences.
///
/// ```
/// use skewring::linalg::{PrimeField, Subspace, Vector};
///
/// let f2 = PrimeField::new(2).unwrap();
/// let line = Subspace::span(f2, 2, &[Vector::from_coords(f2, vec![1, 1])]).unwrap();
/// let (plane, grew) = line.span_insert(&Vector::unit(f2, 2, 0)).unwrap();
/// assert!(grew && plane.is_full());
/// assert!(line.intersect(&Subspace::span(f2, 2, &[Vector::unit(f2, 2, 0)]).unwrap()).unwrap().is_zero());
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: PrimeField,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    /// The span of the given vectors, in canonical form.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vector]) -> Result<Self, LinAlgError> {
        let mut s = Subspace::zero(field, ambient_dim);
        for v in vectors {
            s.check_compatible(v)?;
            s.insert_in_place(v);
        }
        Ok(s)
    }

    /// The whole space F_p^n.
    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| Vector::unit(field, ambient_dim, i)).collect();
        Subspace { field, ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn check_compatible(&self, v: &Vector) -> Result<(), LinAlgError> {
        if v.field != self.field {
            return Err(LinAlgError::FieldMismatch { left: self.field.p, right: v.field.p });
        }
        if v.dim() != self.ambient_dim {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient_dim, got: v.dim() });
        }
        Ok(())
    }

    /// Reduces v against the current basis; the remainder is zero iff v lies
    /// in the subspace.
    fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (row, &piv) in self.basis.iter().zip(&self.pivots) {
            let c = r.coords[piv];
            if c != 0 {
                r.submul(c, row);
            }
        }
        r
    }

    /// Inserts v into the span, keeping the basis in reduced echelon form.
    /// Returns true iff the rank grew (v was independent).
    pub fn insert_in_place(&mut self, v: &Vector) -> bool {
        let mut r = self.reduce(v);
        let piv = match r.first_nonzero() {
            None => return false,
            Some(c) => c,
        };
        let inv = self.field.inv(r.coords[piv]);
        r = r.scale(inv);
        // Clear the new pivot column from the existing rows.
        for row in &mut self.basis {
            let c = row.coords[piv];
            if c != 0 {
                row.submul(c, &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(pos, piv);
        self.basis.insert(pos, r);
        true
    }

    /// The subspace spanned by self and v, plus a flag telling whether v was
    /// outside self.
    pub fn span_insert(&self, v: &Vector) -> Result<(Subspace, bool), LinAlgError> {
        self.check_compatible(v)?;
        let mut s = self.clone();
        let grew = s.insert_in_place(v);
        Ok((s, grew))
    }

    /// Membership test: v lies in the subspace.
    pub fn contains(&self, v: &Vector) -> Result<bool, LinAlgError> {
        self.check_compatible(v)?;
        Ok(self.reduce(v).is_zero())
    }

    /// The sum S + T.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_same_space(other)?;
        let mut s = self.clone();
        for row in &other.basis {
            s.insert_in_place(row);
        }
        Ok(s)
    }

    /// The intersection S ∩ T, via the Zassenhaus block construction: row
    /// reducing [A|A; B|0] leaves the intersection in the right halves of
    /// the rows whose left halves vanished.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_same_space(other)?;
        let n = self.ambient_dim;
        let field = self.field;
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.rank() + other.rank());
        for a in &self.basis {
            let mut row = vec![0u32; 2 * n];
            row[..n].copy_from_slice(a.coords());
            row[n..].copy_from_slice(a.coords());
            rows.push(row);
        }
        for b in &other.basis {
            let mut row = vec![0u32; 2 * n];
            row[..n].copy_from_slice(b.coords());
            rows.push(row);
        }
        row_reduce(field, &mut rows);
        let mut result = Subspace::zero(field, n);
        for row in &rows {
            if row[..n].iter().all(|&c| c == 0) {
                let v = Vector::from_coords(field, row[n..].to_vec());
                result.insert_in_place(&v);
            }
        }
        Ok(result)
    }

    fn check_same_space(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if other.field != self.field {
            return Err(LinAlgError::FieldMismatch { left: self.field.p, right: other.field.p });
        }
        if other.ambient_dim != self.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Rank of the basis rows after zeroing the given coordinates. Used to
    /// decide whether a subspace meets a coordinate block: the intersection
    /// with {v : v_i = 0 outside `coords`} is nonzero iff this rank drops
    /// below the subspace rank.
    pub fn rank_outside(&self, coords: &[bool]) -> usize {
        let field = self.field;
        let mut rows: Vec<Vec<u32>> = self
            .basis
            .iter()
            .map(|row| {
                row.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| if coords[i] { 0 } else { c })
                    .collect()
            })
            .collect();
        row_reduce(field, &mut rows);
        rows.iter().filter(|r| r.iter().any(|&c| c != 0)).count()
    }

    /// All vectors of the subspace. Only sensible for small ranks; the
    /// caller is responsible for keeping p^rank within reach.
    pub fn enumerate(&self) -> Vec<Vector> {
        let p = self.field.p;
        let r = self.rank();
        let count = (p as u64).checked_pow(r as u32).expect("enumeration overflow");
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0u32; r];
        loop {
            let mut v = Vector::zero(self.field, self.ambient_dim);
            for (d, row) in digits.iter().zip(&self.basis) {
                if *d != 0 {
                    v = v.add(&row.scale(*d));
                }
            }
            out.push(v);
            let mut i = 0;
            while i < r {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
        out
    }
}

/// In-place reduced row echelon form on raw rows.
fn row_reduce(field: PrimeField, rows: &mut [Vec<u32>]) {
    if rows.is_empty() {
        return;
    }
    let width = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == rows.len() {
            break;
        }
        let found = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0);
        let r = match found {
            None => continue,
            Some(r) => r,
        };
        rows.swap(pivot_row, r);
        let inv = field.inv(rows[pivot_row][col]);
        for c in col..width {
            rows[pivot_row][c] = field.mul(rows[pivot_row][c], inv);
        }
        for other in 0..rows.len() {
            if other != pivot_row && rows[other][col] != 0 {
                let factor = rows[other][col];
                for c in col..width {
                    let sub = field.mul(factor, rows[pivot_row][c]);
                    rows[other][c] = field.sub(rows[other][c], sub);
                }
            }
        }
        pivot_row += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn vec_of(field: PrimeField, coords: &[u32]) -> Vector {
        Vector::from_coords(field, coords.to_vec())
    }

    #[test]
    fn primality_guard() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(65521).is_ok());
        assert_eq!(PrimeField::new(0), Err(LinAlgError::NotPrime(0)));
        assert_eq!(PrimeField::new(1), Err(LinAlgError::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(LinAlgError::NotPrime(4)));
        assert_eq!(PrimeField::new(65536), Err(LinAlgError::NotPrime(65536)));
    }

    #[test]
    fn field_arithmetic_inverses() {
        for p in [2u32, 3, 5, 7, 251] {
            let field = f(p);
            for a in 1..p {
                let inv = field.inv(a);
                assert_eq!(field.mul(a, inv), 1, "a·a⁻¹ = 1 in F_{p}");
            }
        }
    }

    #[test]
    fn span_insert_independent_vector_grows() {
        let field = f(5);
        let s = Subspace::span(field, 2, &[vec_of(field, &[1, 0])]).unwrap();
        let (t, grew) = s.span_insert(&vec_of(field, &[0, 1])).unwrap();
        assert!(grew);
        assert_eq!(t.rank(), 2);
    }

    #[test]
    fn span_insert_member_does_not_grow() {
        let field = f(5);
        let s = Subspace::span(field, 2, &[vec_of(field, &[1, 0])]).unwrap();
        let (t, grew) = s.span_insert(&vec_of(field, &[1, 0])).unwrap();
        assert!(!grew);
        assert_eq!(t.rank(), 1);
    }

    #[test]
    fn span_insert_member_over_f2() {
        let field = f(2);
        let s = Subspace::span(field, 3, &[vec_of(field, &[1, 1, 0])]).unwrap();
        let (_, grew) = s.span_insert(&vec_of(field, &[1, 1, 0])).unwrap();
        assert!(!grew);
    }

    #[test]
    fn span_insert_dimension_mismatch() {
        let field = f(2);
        let s = Subspace::zero(field, 3);
        let err = s.span_insert(&vec_of(field, &[1, 0])).unwrap_err();
        assert_eq!(err, LinAlgError::DimensionMismatch { expected: 3, got: 2 });
    }

    #[test]
    fn intersect_coordinate_subspaces() {
        let field = f(3);
        let e = |i| Vector::unit(field, 3, i);
        let s = Subspace::span(field, 3, &[e(0), e(1)]).unwrap();
        let t = Subspace::span(field, 3, &[e(1), e(2)]).unwrap();
        let expected = Subspace::span(field, 3, &[e(1)]).unwrap();
        assert_eq!(s.intersect(&t).unwrap(), expected);
    }

    #[test]
    fn intersect_idempotent() {
        let field = f(7);
        let s = Subspace::span(field, 3, &[vec_of(field, &[1, 2, 3]), vec_of(field, &[0, 1, 5])]).unwrap();
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    // Expected value frozen from enumerating the ≤ 2 nonzero vectors of each
    // side over F_2: span{(1,1)} = {00, 11}, span{(1,0)} = {00, 10}, common
    // part {00}.
    #[test]
    fn intersect_f2_lines_is_zero() {
        let field = f(2);
        let s = Subspace::span(field, 2, &[vec_of(field, &[1, 1])]).unwrap();
        let t = Subspace::span(field, 2, &[vec_of(field, &[1, 0])]).unwrap();
        let brute: Vec<Vector> = s
            .enumerate()
            .into_iter()
            .filter(|v| t.enumerate().contains(v))
            .collect();
        assert_eq!(brute.len(), 1);
        assert!(brute[0].is_zero());
        let i = s.intersect(&t).unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn contains_examples() {
        let field = f(2);
        let s = Subspace::span(field, 2, &[vec_of(field, &[1, 0])]).unwrap();
        assert!(s.contains(&vec_of(field, &[1, 0])).unwrap());
        assert!(!s.contains(&vec_of(field, &[0, 1])).unwrap());
        let z = Subspace::zero(field, 2);
        assert!(z.contains(&Vector::zero(field, 2)).unwrap());
    }

    /// Deterministic pseudo-random vectors for property checks.
    fn scramble(state: &mut u64) -> u64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn random_vector(field: PrimeField, dim: usize, state: &mut u64) -> Vector {
        let coords = (0..dim).map(|_| field.reduce(scramble(state))).collect();
        Vector::from_coords(field, coords)
    }

    #[test]
    fn canonical_form_matches_set_equality() {
        // ambient_dim · log2(p) ≤ 12 keeps full enumeration cheap.
        let mut state = 11u64;
        for p in [2u32, 3] {
            let field = f(p);
            let dim = 4;
            for _ in 0..40 {
                let a = random_vector(field, dim, &mut state);
                let b = random_vector(field, dim, &mut state);
                let s = Subspace::span(field, dim, &[a.clone(), b.clone()]).unwrap();
                let t = Subspace::span(field, dim, &[b.add(&a), a.scale(p - 1), b]).unwrap();
                let mut sv = s.enumerate();
                let mut tv = t.enumerate();
                sv.sort_by(|x, y| x.coords().cmp(y.coords()));
                tv.sort_by(|x, y| x.coords().cmp(y.coords()));
                assert_eq!(sv == tv, s == t);
                assert_eq!(s, t, "same span must produce identical echelon bases");
            }
        }
    }

    #[test]
    fn dimension_formula_on_random_instances() {
        let mut state = 7u64;
        for p in [2u32, 3, 5] {
            let field = f(p);
            let dim = 5;
            for _ in 0..60 {
                let vs: Vec<Vector> = (0..3).map(|_| random_vector(field, dim, &mut state)).collect();
                let ws: Vec<Vector> = (0..3).map(|_| random_vector(field, dim, &mut state)).collect();
                let s = Subspace::span(field, dim, &vs).unwrap();
                let t = Subspace::span(field, dim, &ws).unwrap();
                let inter = s.intersect(&t).unwrap();
                let sum = s.sum(&t).unwrap();
                assert_eq!(inter.rank() + sum.rank(), s.rank() + t.rank());
                for v in inter.basis() {
                    assert!(s.contains(v).unwrap());
                    assert!(t.contains(v).unwrap());
                }
            }
        }
    }

    #[test]
    fn rank_monotone_and_bounded() {
        let mut state = 3u64;
        let field = f(3);
        let dim = 4;
        let mut s = Subspace::zero(field, dim);
        for _ in 0..30 {
            let v = random_vector(field, dim, &mut state);
            let before = s.rank();
            let (next, grew) = s.span_insert(&v).unwrap();
            assert!(next.rank() >= before);
            assert_eq!(next.rank() > before, grew);
            assert!(next.rank() <= dim);
            s = next;
        }
    }

    #[test]
    fn rank_outside_detects_block_intersection() {
        let field = f(2);
        // span{e0 + e2, e1} meets the block {coords 0,1} exactly in span{e1}.
        let s = Subspace::span(
            field,
            3,
            &[vec_of(field, &[1, 0, 1]), vec_of(field, &[0, 1, 0])],
        )
        .unwrap();
        let block = [true, true, false];
        let outside = s.rank_outside(&block);
        assert_eq!(s.rank() - outside, 1);
    }
}
