//! Per-bidegree quotient bases of the graph homology space.
//!
//! For a fixed bidegree (legs, trivalent vertices) the space is
//! spanned by the finitely many isomorphism classes of Jacobi diagrams
//! (disconnected ones and strut components included; classes that
//! vanish by antisymmetry are dropped at the door). One IHX relation
//! is generated per class and per edge joining two trivalent vertices,
//! the relation matrix is row-reduced exactly, and the non-pivot
//! classes form the basis. Bases are cached in memory and optionally
//! on disk, one versioned file per bidegree.

use super::canonical::{canonicalize, CanonicalDiagram};
use super::diagram::{JacobiDiagram, Vertex};
use super::vector::GraphVector;
use super::GraphError;
use crate::arith::{QMatrix, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

/// Largest total degree for which bases are built by default. The
/// bidegree (4, 6) quotient is the largest one the identity checks
/// need.
pub const DEFAULT_DEGREE_CAP: usize = 10;

const CACHE_VERSION: u32 = 1;

/// An exact basis of one bidegree of the AS/IHX quotient, with the
/// reduction map onto it.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    u: usize,
    t: usize,
    diagrams: Vec<CanonicalDiagram>,
    index: BTreeMap<CanonicalDiagram, usize>,
    basis: Vec<usize>,
    reduction: Vec<Vec<Rat>>,
    relation_count: usize,
    rank: usize,
}

impl QuotientBasis {
    pub fn bidegree(&self) -> (usize, usize) {
        (self.u, self.t)
    }

    /// Dimension of the quotient at this bidegree.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Number of spanning diagram classes before imposing IHX.
    pub fn spanning_count(&self) -> usize {
        self.diagrams.len()
    }

    /// Rank of the generated IHX relation matrix.
    pub fn relation_rank(&self) -> usize {
        self.rank
    }

    pub fn relation_count(&self) -> usize {
        self.relation_count
    }

    /// The spanning diagram classes, in their canonical order.
    pub fn diagrams(&self) -> &[CanonicalDiagram] {
        &self.diagrams
    }

    /// The canonical diagrams representing the basis.
    pub fn basis_diagrams(&self) -> Vec<&CanonicalDiagram> {
        self.basis.iter().map(|&i| &self.diagrams[i]).collect()
    }

    /// Coordinates of a vector over this basis. The vector must live
    /// entirely in this bidegree.
    pub fn reduce(&self, vector: &GraphVector) -> Result<Vec<Rat>, GraphError> {
        let mut coords = vec![Rat::zero(); self.basis.len()];
        for (diagram, coeff) in vector.terms() {
            if diagram.bidegree() != (self.u, self.t) {
                return Err(GraphError::BidegreeMismatch);
            }
            let &idx = self
                .index
                .get(diagram)
                .ok_or(GraphError::BidegreeMismatch)?;
            for (c, r) in coords.iter_mut().zip(&self.reduction[idx]) {
                *c += coeff * r;
            }
        }
        Ok(coords)
    }

    /// Whether the vector reduces to zero in the quotient.
    pub fn reduces_to_zero(&self, vector: &GraphVector) -> Result<bool, GraphError> {
        Ok(self.reduce(vector)?.iter().all(|c| c.is_zero()))
    }

    fn compute(u: usize, t: usize) -> Self {
        let diagrams = enumerate_classes(u, t);
        let index: BTreeMap<CanonicalDiagram, usize> = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for diagram in &diagrams {
            for relation in ihx_relations(diagram) {
                let mut row = vec![Rat::zero(); diagrams.len()];
                for (term, coeff) in relation.terms() {
                    let idx = index
                        .get(term)
                        .expect("IHX term outside the enumerated span");
                    row[*idx] += coeff;
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let relation_count = rows.len();
        let (rank, basis, reduction) = Self::eliminate(&diagrams, rows);
        QuotientBasis {
            u,
            t,
            diagrams,
            index,
            basis,
            reduction,
            relation_count,
            rank,
        }
    }

    /// Row-reduces the relation rows and produces the basis column
    /// set together with the reduction matrix.
    fn eliminate(
        diagrams: &[CanonicalDiagram],
        rows: Vec<Vec<Rat>>,
    ) -> (usize, Vec<usize>, Vec<Vec<Rat>>) {
        if rows.is_empty() {
            (
                0,
                (0..diagrams.len()).collect::<Vec<_>>(),
                (0..diagrams.len())
                    .map(|i| {
                        let mut v = vec![Rat::zero(); diagrams.len()];
                        v[i] = Rat::one();
                        v
                    })
                    .collect(),
            )
        } else {
            let mut matrix = QMatrix::from_rows(rows);
            let pivots = matrix.rref_in_place();
            let rank = pivots.len();
            let basis: Vec<usize> = (0..diagrams.len())
                .filter(|c| !pivots.contains(c))
                .collect();
            let basis_pos: BTreeMap<usize, usize> =
                basis.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            let mut reduction = Vec::with_capacity(diagrams.len());
            for col in 0..diagrams.len() {
                let mut coords = vec![Rat::zero(); basis.len()];
                if let Some(&pos) = basis_pos.get(&col) {
                    coords[pos] = Rat::one();
                } else {
                    let row = pivots.iter().position(|&p| p == col).unwrap();
                    for (&bcol, &pos) in &basis_pos {
                        coords[pos] = -matrix.at(row, bcol).clone();
                    }
                }
                reduction.push(coords);
            }
            (rank, basis, reduction)
        }
    }
}

/// All nonzero isomorphism classes of Jacobi diagrams at bidegree
/// (u, t), sorted canonically. A nonzero class has no loops and at
/// most one leg per trivalent vertex, so the enumeration runs over
/// strut counts, leg placements and loop-free multigraphs with vertex
/// degrees two or three.
fn enumerate_classes(u: usize, t: usize) -> Vec<CanonicalDiagram> {
    let mut found: BTreeSet<CanonicalDiagram> = BTreeSet::new();
    for struts in 0..=u / 2 {
        let attached = u - 2 * struts;
        if attached > t {
            continue;
        }
        if t == 0 {
            if attached == 0 {
                let mut diagram = JacobiDiagram::empty();
                for _ in 0..struts {
                    diagram = diagram.disjoint_union(&JacobiDiagram::strut());
                }
                let (c, s) = canonicalize(&diagram);
                debug_assert_eq!(s, 1);
                found.insert(c);
            }
            continue;
        }
        if !(3 * t - attached).is_multiple_of(2) {
            continue;
        }
        // choose which vertices carry a leg
        let mut legged = vec![false; t];
        choose_legs(&mut legged, 0, attached, &mut |legged| {
            let degrees: Vec<u8> = legged.iter().map(|&l| if l { 2 } else { 3 }).collect();
            let mut mult = vec![vec![0u8; t]; t];
            enumerate_multigraphs(&degrees, &mut mult, 0, 1, &mut |mult| {
                if let Some(diagram) = build_diagram(legged, mult, struts) {
                    let (c, s) = canonicalize(&diagram);
                    if s != 0 {
                        found.insert(c);
                    }
                }
            });
        });
    }
    found.into_iter().collect()
}

fn choose_legs(
    legged: &mut Vec<bool>,
    from: usize,
    remaining: usize,
    visit: &mut impl FnMut(&[bool]),
) {
    if remaining == 0 {
        visit(legged);
        return;
    }
    if legged.len() - from < remaining {
        return;
    }
    for v in from..legged.len() {
        legged[v] = true;
        choose_legs(legged, v + 1, remaining - 1, visit);
        legged[v] = false;
        if legged.len() - (v + 1) < remaining {
            break;
        }
    }
}

/// Enumerates loop-free multigraphs with the given degree sequence by
/// backtracking over vertex pairs in lexicographic order.
fn enumerate_multigraphs(
    degrees: &[u8],
    mult: &mut Vec<Vec<u8>>,
    i: usize,
    j: usize,
    visit: &mut impl FnMut(&Vec<Vec<u8>>),
) {
    let t = degrees.len();
    if i == t {
        visit(mult);
        return;
    }
    if j == t {
        // all pairs containing i decided; degree must be saturated
        let used: u8 = (0..t).map(|k| mult[i][k]).sum();
        if used == degrees[i] {
            enumerate_multigraphs(degrees, mult, i + 1, i + 2, visit);
        }
        return;
    }
    let used: u8 = (0..t).map(|k| mult[i][k]).sum();
    let rem_i = degrees[i] - used;
    let used_j: u8 = (0..t).map(|k| mult[j][k]).sum();
    let rem_j = degrees[j] - used_j;
    let max_mult = rem_i.min(rem_j).min(3);
    for m in 0..=max_mult {
        mult[i][j] = m;
        mult[j][i] = m;
        enumerate_multigraphs(degrees, mult, i, j + 1, visit);
    }
    mult[i][j] = 0;
    mult[j][i] = 0;
}

fn build_diagram(legged: &[bool], mult: &[Vec<u8>], struts: usize) -> Option<JacobiDiagram> {
    let t = legged.len();
    let mut vertex_flags: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut edges = Vec::new();
    let mut next_flag = 0;
    for i in 0..t {
        for j in i + 1..t {
            for _ in 0..mult[i][j] {
                vertex_flags[i].push(next_flag);
                vertex_flags[j].push(next_flag + 1);
                edges.push((next_flag, next_flag + 1));
                next_flag += 2;
            }
        }
    }
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut uni = Vec::new();
    for (i, flags) in vertex_flags.iter_mut().enumerate() {
        if legged[i] {
            flags.push(next_flag);
            uni.push(Vertex::Univalent(next_flag + 1));
            edges.push((next_flag, next_flag + 1));
            next_flag += 2;
        }
        if flags.len() != 3 {
            return None;
        }
        vertices.push(Vertex::Trivalent([flags[0], flags[1], flags[2]]));
    }
    vertices.extend(uni);
    for _ in 0..struts {
        vertices.push(Vertex::Univalent(next_flag));
        vertices.push(Vertex::Univalent(next_flag + 1));
        edges.push((next_flag, next_flag + 1));
        next_flag += 2;
    }
    JacobiDiagram::new(vertices, &edges).ok()
}

/// The IHX relations of one diagram class: for every edge joining two
/// distinct trivalent vertices, the first graph minus the two
/// re-pairings of its four outer flags, each with the cyclic orders
/// (edge, a, c) / (edge, b, d) and (edge, a, d) / (edge, b, c).
fn ihx_relations(class: &CanonicalDiagram) -> Vec<GraphVector> {
    let rep = class.reconstruct();
    let mut relations = Vec::new();
    let mut seen = vec![false; rep.flag_count()];
    for x in 0..rep.flag_count() {
        if seen[x] {
            continue;
        }
        let y = rep.partner(x);
        seen[x] = true;
        seen[y] = true;
        let v = rep.vertex_of(x);
        let w = rep.vertex_of(y);
        if v == w {
            continue;
        }
        let (Vertex::Trivalent(v_triple), Vertex::Trivalent(w_triple)) =
            (&rep.vertices()[v], &rep.vertices()[w])
        else {
            continue;
        };
        let (a, b) = other_two(v_triple, x);
        let (c, d) = other_two(w_triple, y);
        let h = rewire(&rep, v, w, [x, a, c], [y, b, d]);
        let x_term = rewire(&rep, v, w, [x, a, d], [y, b, c]);
        let relation = GraphVector::from_diagram(&rep)
            .sub(&GraphVector::from_diagram(&h))
            .add(&GraphVector::from_diagram(&x_term));
        relations.push(relation);
    }
    relations
}

/// The two flags of a trivalent triple other than `flag`, in the order
/// induced by the cyclic orientation starting at `flag`.
fn other_two(triple: &[usize; 3], flag: usize) -> (usize, usize) {
    let pos = triple.iter().position(|&f| f == flag).unwrap();
    (triple[(pos + 1) % 3], triple[(pos + 2) % 3])
}

/// Rebuilds the diagram with the two incident vertices replaced by the
/// given oriented triples; edges are untouched.
fn rewire(
    rep: &JacobiDiagram,
    v: usize,
    w: usize,
    v_triple: [usize; 3],
    w_triple: [usize; 3],
) -> JacobiDiagram {
    let mut vertices = rep.vertices().to_vec();
    vertices[v] = Vertex::Trivalent(v_triple);
    vertices[w] = Vertex::Trivalent(w_triple);
    let mut edges = Vec::with_capacity(rep.flag_count() / 2);
    for f in 0..rep.flag_count() {
        let p = rep.partner(f);
        if f < p {
            edges.push((f, p));
        }
    }
    JacobiDiagram::new(vertices, &edges).expect("rewiring preserves well-formedness")
}

/// Provider of quotient bases with in-memory and optional on-disk
/// caching. Distinct bidegrees are independent; the in-memory map is
/// the only shared state.
pub struct BasisContext {
    cache_dir: Option<PathBuf>,
    degree_cap: usize,
    memory: Mutex<BTreeMap<(usize, usize), Arc<QuotientBasis>>>,
}

impl BasisContext {
    /// Purely in-memory context with the default degree cap.
    pub fn in_memory() -> Self {
        BasisContext {
            cache_dir: None,
            degree_cap: DEFAULT_DEGREE_CAP,
            memory: Mutex::new(BTreeMap::new()),
        }
    }

    /// Context backed by a cache directory (created on demand).
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        BasisContext {
            cache_dir: Some(dir.into()),
            degree_cap: DEFAULT_DEGREE_CAP,
            memory: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// The quotient basis at bidegree (u, t), computed at most once.
    pub fn basis(&self, u: usize, t: usize) -> Result<Arc<QuotientBasis>, GraphError> {
        if !(u + t).is_multiple_of(2) {
            return Err(GraphError::Malformed(format!(
                "bidegree ({u}, {t}) has odd total degree"
            )));
        }
        if u + t > self.degree_cap {
            return Err(GraphError::DegreeCapExceeded {
                degree: u + t,
                cap: self.degree_cap,
            });
        }
        if let Some(hit) = self.memory.lock().unwrap().get(&(u, t)) {
            return Ok(hit.clone());
        }
        let basis = match self.load_from_disk(u, t) {
            Some(basis) => Arc::new(basis),
            None => {
                let basis = Arc::new(QuotientBasis::compute(u, t));
                self.store_to_disk(&basis);
                basis
            }
        };
        self.memory.lock().unwrap().insert((u, t), basis.clone());
        Ok(basis)
    }

    /// Reduces an arbitrary (mixed-bidegree) vector; returns the
    /// coordinates per bidegree.
    pub fn reduce_all(
        &self,
        vector: &GraphVector,
    ) -> Result<Vec<((usize, usize), Vec<Rat>)>, GraphError> {
        let mut out = Vec::new();
        for (u, t) in vector.bidegrees() {
            let basis = self.basis(u, t)?;
            out.push(((u, t), basis.reduce(&vector.bidegree_part(u, t))?));
        }
        Ok(out)
    }

    /// Whether a vector reduces to zero in every bidegree.
    pub fn reduces_to_zero(&self, vector: &GraphVector) -> Result<bool, GraphError> {
        Ok(self
            .reduce_all(vector)?
            .iter()
            .all(|(_, coords)| coords.iter().all(|c| c.is_zero())))
    }

    fn cache_path(&self, u: usize, t: usize) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|dir| dir.join(format!("basis-u{u}-t{t}.json")))
    }

    fn load_from_disk(&self, u: usize, t: usize) -> Option<QuotientBasis> {
        let path = self.cache_path(u, t)?;
        let text = std::fs::read_to_string(path).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.version != CACHE_VERSION || file.u != u || file.t != t {
            return None;
        }
        file.into_basis()
    }

    fn store_to_disk(&self, basis: &QuotientBasis) {
        let Some(path) = self.cache_path(basis.u, basis.t) else {
            return;
        };
        if let Some(dir) = path.parent() {
            if std::fs::create_dir_all(dir).is_err() {
                return;
            }
        }
        let file = CacheFile::from_basis(basis);
        if let Ok(text) = serde_json::to_string(&file) {
            let _ = std::fs::write(path, text);
        }
    }
}

/// On-disk form of a basis: canonical diagram encodings plus the exact
/// reduction matrix as numerator/denominator pairs.
#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    u: usize,
    t: usize,
    diagrams: Vec<CanonicalDiagram>,
    basis: Vec<usize>,
    relation_count: usize,
    rank: usize,
    reduction: Vec<Vec<(String, String)>>,
}

impl CacheFile {
    fn from_basis(basis: &QuotientBasis) -> Self {
        CacheFile {
            version: CACHE_VERSION,
            u: basis.u,
            t: basis.t,
            diagrams: basis.diagrams.clone(),
            basis: basis.basis.clone(),
            relation_count: basis.relation_count,
            rank: basis.rank,
            reduction: basis
                .reduction
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|r| (r.numer().to_string(), r.denom().to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    fn into_basis(self) -> Option<QuotientBasis> {
        let mut reduction = Vec::with_capacity(self.reduction.len());
        for row in self.reduction {
            let mut out = Vec::with_capacity(row.len());
            for (numer, denom) in row {
                let numer: BigInt = numer.parse().ok()?;
                let denom: BigInt = denom.parse().ok()?;
                if denom.is_zero() {
                    return None;
                }
                out.push(Rat::new(numer, denom));
            }
            reduction.push(out);
        }
        let index = self
            .diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        Some(QuotientBasis {
            u: self.u,
            t: self.t,
            diagrams: self.diagrams,
            index,
            basis: self.basis,
            reduction,
            relation_count: self.relation_count,
            rank: self.rank,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn degree_zero_is_spanned_by_the_empty_diagram() {
        let ctx = BasisContext::in_memory();
        let basis = ctx.basis(0, 0).unwrap();
        assert_eq!(basis.dimension(), 1);
        assert_eq!(basis.spanning_count(), 1);
    }

    #[test]
    fn theta_is_nonzero_in_its_quotient() {
        let ctx = BasisContext::in_memory();
        let basis = ctx.basis(0, 2).unwrap();
        let theta = GraphVector::from_diagram(&JacobiDiagram::theta());
        assert!(!basis.reduces_to_zero(&theta).unwrap());
    }

    #[test]
    fn two_wheel_is_nonzero_in_its_quotient() {
        let ctx = BasisContext::in_memory();
        let basis = ctx.basis(2, 2).unwrap();
        let w2 = GraphVector::from_diagram(&JacobiDiagram::wheel(2));
        assert!(!basis.reduces_to_zero(&w2).unwrap());
        // the strut-theta class is also present in the span
        assert!(basis.diagrams().iter().any(|d| d.strut_count() == 1));
    }

    #[test]
    fn ihx_relations_reduce_to_zero_in_their_own_quotient() {
        let ctx = BasisContext::in_memory();
        let mut bidegrees = Vec::new();
        for degree in (0..=6usize).step_by(2) {
            for u in 0..=degree {
                bidegrees.push((u, degree - u));
            }
        }
        for (u, t) in bidegrees {
            let basis = ctx.basis(u, t).unwrap();
            for class in basis.diagrams() {
                for relation in ihx_relations(class) {
                    assert!(
                        basis.reduces_to_zero(&relation).unwrap(),
                        "IHX relation not killed at ({u}, {t})"
                    );
                }
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_through_representatives() {
        let ctx = BasisContext::in_memory();
        let basis = ctx.basis(2, 4).unwrap();
        for (k, &idx) in basis.basis.iter().enumerate() {
            let rep = GraphVector::from_canonical(basis.diagrams[idx].clone(), Rat::one());
            let coords = basis.reduce(&rep).unwrap();
            for (pos, c) in coords.iter().enumerate() {
                assert_eq!(c, &if pos == k { Rat::one() } else { Rat::zero() });
            }
        }
    }

    #[test]
    fn dumbbell_reduces_to_twice_the_double_wheel() {
        // One cross-glueing of two 2-wheels equals twice the (1,1)
        // double wheel after IHX reduction.
        let ctx = BasisContext::in_memory();
        let basis = ctx.basis(2, 4).unwrap();
        let w2 = GraphVector::from_diagram(&JacobiDiagram::wheel(2));
        let bridge = w2.partial_bilinear(&w2).unwrap(); // 4 glueings
        let dw = GraphVector::from_diagram(&JacobiDiagram::double_wheel(1, 1));
        let defect = bridge.sub(&dw.scale(&rat_int(8)));
        assert!(basis.reduces_to_zero(&defect).unwrap());
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("hrr-basis-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let ctx = BasisContext::with_cache_dir(&dir);
        let fresh = ctx.basis(2, 2).unwrap();
        // a second context must load the same basis from disk
        let ctx2 = BasisContext::with_cache_dir(&dir);
        let loaded = ctx2.basis(2, 2).unwrap();
        assert_eq!(fresh.diagrams(), loaded.diagrams());
        assert_eq!(fresh.dimension(), loaded.dimension());
        assert_eq!(fresh.relation_rank(), loaded.relation_rank());
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn corrupt_cache_files_are_rebuilt() {
        let dir = std::env::temp_dir().join(format!("hrr-corrupt-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("basis-u0-t2.json"), "not json at all").unwrap();
        std::fs::write(
            dir.join("basis-u2-t2.json"),
            r#"{"version":999,"u":2,"t":2,"diagrams":[],"basis":[],"relation_count":0,"rank":0,"reduction":[]}"#,
        )
        .unwrap();
        let ctx = BasisContext::with_cache_dir(&dir);
        assert_eq!(ctx.basis(0, 2).unwrap().dimension(), 1);
        assert_eq!(ctx.basis(2, 2).unwrap().dimension(), 2);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let ctx = BasisContext::in_memory();
        assert!(matches!(
            ctx.basis(6, 6),
            Err(GraphError::DegreeCapExceeded { .. })
        ));
    }
}
