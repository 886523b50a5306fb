//! Exact linear algebra over `Q` on sparse row vectors, and degreewise slices
//! of `S^points` (one polynomial per fixed point, all homogeneous of one degree).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::{SPoly, Q};

/// Sparse vector: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, Q)>;

/// One polynomial per point of the ambient index set.
pub type PointTuple = Vec<SPoly>;

/// `a - c * b`.
pub fn sub_scaled(a: &SparseVec, b: &SparseVec, c: &Q) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(&b[j].1 * c)));
            j += 1;
        } else {
            let v = &a[i].1 - &(&b[j].1 * c);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_vec(a: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

fn entry(a: &SparseVec, col: usize) -> Option<&Q> {
    a.binary_search_by_key(&col, |(i, _)| *i)
        .ok()
        .map(|k| &a[k].1)
}

pub fn dense_to_sparse(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Reduced row-echelon form maintained under insertion. Rows are keyed by
/// pivot column; the pivot entry is 1 and every other row is zero there, so
/// the basis of a given span is canonical.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// `v` minus its projection onto pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        for (col, val) in v {
            if let Some(row) = self.rows.get(col) {
                cur = sub_scaled(&cur, row, val);
            }
        }
        cur
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ncols));
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let (pivot, lead) = r[0].clone();
        let r = scale_vec(&r, &lead.recip());
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let row = self.rows.get(&k).unwrap();
            if let Some(c) = entry(row, pivot) {
                let c = c.clone();
                let updated = sub_scaled(row, &r, &c);
                self.rows.insert(k, updated);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a SparseVec>>(ncols: usize, rows: I) -> Self {
        let mut e = RowEchelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Basis of the null space `{x : row . x = 0 for every row}`.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        // column -> list of (pivot, coefficient) for rows having that column
        let mut by_col: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            for (c, v) in row {
                if *c != p {
                    by_col.entry(*c).or_default().push((p, v.clone()));
                }
            }
        }
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v: Vec<(usize, Q)> = vec![(f, Q::one())];
            if let Some(list) = by_col.get(&f) {
                for (p, c) in list {
                    v.push((*p, -c.clone()));
                }
            }
            v.sort_by_key(|(i, _)| *i);
            out.push(v);
        }
        out
    }
}

/// Degree-`k` slice of an `S`-submodule of `S^points`, as a `Q`-subspace.
///
/// Coordinates: point `p`, monomial `t1^(k-j) t2^j` sits at column
/// `p * (k + 1) + j`, so pivots follow (point id, graded-lex monomial).
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    npoints: usize,
    degree: u32,
    echelon: RowEchelon,
}

impl GradedSubspace {
    pub fn zero(npoints: usize, degree: u32) -> Self {
        GradedSubspace {
            npoints,
            degree,
            echelon: RowEchelon::new(npoints * (degree as usize + 1)),
        }
    }

    pub fn full(npoints: usize, degree: u32) -> Self {
        let mut s = Self::zero(npoints, degree);
        for c in 0..s.ambient_dim() {
            s.echelon.insert(&vec![(c, Q::one())]);
        }
        s
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(
        npoints: usize,
        degree: u32,
        rows: I,
    ) -> Self {
        let mut s = Self::zero(npoints, degree);
        for r in rows {
            s.echelon.insert(r);
        }
        s
    }

    /// Panics if some entry is not homogeneous of `degree`.
    pub fn from_tuples(npoints: usize, degree: u32, tuples: &[PointTuple]) -> Self {
        let mut s = Self::zero(npoints, degree);
        for t in tuples {
            let v = s.encode(t);
            s.echelon.insert(&v);
        }
        s
    }

    /// Solutions of the linear equations (each a functional on coordinates).
    pub fn from_equations<'a, I: IntoIterator<Item = &'a SparseVec>>(
        npoints: usize,
        degree: u32,
        eqs: I,
    ) -> Self {
        let ncols = npoints * (degree as usize + 1);
        let e = RowEchelon::from_rows(ncols, eqs);
        let kernel = e.kernel();
        Self::from_vectors(npoints, degree, kernel.iter())
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.npoints * (self.degree as usize + 1)
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &RowEchelon {
        &self.echelon
    }

    pub fn column(&self, point: usize, j: usize) -> usize {
        point * (self.degree as usize + 1) + j
    }

    pub fn encode(&self, t: &PointTuple) -> SparseVec {
        assert_eq!(t.len(), self.npoints, "tuple length does not match ambient");
        let k = self.degree;
        let mut out = Vec::new();
        for (p, f) in t.iter().enumerate() {
            assert!(
                f.is_homogeneous_of(k),
                "entry {f} is not homogeneous of degree {k}"
            );
            for (j, c) in f.homogeneous_coords(k).into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((self.column(p, j), c));
                }
            }
        }
        out
    }

    pub fn decode(&self, v: &SparseVec) -> PointTuple {
        let w = self.degree as usize + 1;
        let mut coords = vec![vec![Q::zero(); w]; self.npoints];
        for (c, x) in v {
            coords[c / w][c % w] = x.clone();
        }
        coords
            .iter()
            .map(|cs| SPoly::from_homogeneous_coords(self.degree, cs))
            .collect()
    }

    pub fn basis_vectors(&self) -> Vec<SparseVec> {
        self.echelon.rows().cloned().collect()
    }

    pub fn basis(&self) -> Vec<PointTuple> {
        self.echelon.rows().map(|r| self.decode(r)).collect()
    }

    pub fn contains(&self, t: &PointTuple) -> bool {
        self.echelon.contains(&self.encode(t))
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.same_shape(other) && self.echelon.rows().all(|r| other.echelon.contains(r))
    }

    pub fn same_shape(&self, other: &GradedSubspace) -> bool {
        self.npoints == other.npoints && self.degree == other.degree
    }

    /// Linear equations cutting out this subspace.
    pub fn annihilator(&self) -> Vec<SparseVec> {
        self.echelon.kernel()
    }

    pub fn intersect(&self, other: &GradedSubspace) -> GradedSubspace {
        assert!(
            self.same_shape(other),
            "intersecting subspaces of different ambients"
        );
        let mut eqs = self.annihilator();
        eqs.extend(other.annihilator());
        GradedSubspace::from_equations(self.npoints, self.degree, eqs.iter())
    }

    /// Intersection of many subspaces in one kernel computation.
    pub fn intersect_all(npoints: usize, degree: u32, spaces: &[GradedSubspace]) -> GradedSubspace {
        let mut eqs = Vec::new();
        for s in spaces {
            assert_eq!((s.npoints, s.degree), (npoints, degree));
            eqs.extend(s.annihilator());
        }
        GradedSubspace::from_equations(npoints, degree, eqs.iter())
    }

    pub fn sum(&self, other: &GradedSubspace) -> GradedSubspace {
        assert!(self.same_shape(other));
        let mut s = self.clone();
        for r in other.echelon.rows() {
            s.echelon.insert(r);
        }
        s
    }
}

impl PartialEq for GradedSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.same_shape(other)
            && self.dim() == other.dim()
            && self
                .echelon
                .rows()
                .zip(other.echelon.rows())
                .all(|(a, b)| a == b)
    }
}

/// Coordinates of vectors of `space` modulo `sub` in terms of chosen lifts.
///
/// Built by appending an identity block for the lifts: reducing `(x, 0)`
/// against the combined echelon leaves `(0, -c)` where `x = sum c_e lift_e`
/// modulo `sub`.
pub struct QuotientCoordinates {
    ncols: usize,
    nlifts: usize,
    echelon: RowEchelon,
}

impl QuotientCoordinates {
    pub fn new(sub: &[SparseVec], lifts: &[SparseVec], ncols: usize) -> Self {
        let total = ncols + lifts.len();
        let mut echelon = RowEchelon::new(total);
        for r in sub {
            echelon.insert(r);
        }
        for (e, l) in lifts.iter().enumerate() {
            let mut v = l.clone();
            v.push((ncols + e, Q::one()));
            echelon.insert(&v);
        }
        QuotientCoordinates {
            ncols,
            nlifts: lifts.len(),
            echelon,
        }
    }

    /// `None` if `x` is outside `sub + span(lifts)`.
    pub fn coordinates(&self, x: &SparseVec) -> Option<Vec<Q>> {
        let r = self.echelon.reduce(x);
        if r.iter().any(|(c, _)| *c < self.ncols) {
            return None;
        }
        let mut out = vec![Q::zero(); self.nlifts];
        for (c, v) in r {
            out[c - self.ncols] = -v;
        }
        Some(out)
    }
}
