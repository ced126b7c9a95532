//! Multicomplexes over `ℕ ∪ {∞}`, simplicial complexes of squarefree ideals,
//! and non-pure shellings.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::Monomial;
use crate::polarization::{polarize_ideal, PolarizedRing};
use crate::ring::Ring;

/// One coordinate of a face. `Finite(k) < Infinite` for every `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Finite(u32),
    Infinite,
}

impl Entry {
    pub fn is_infinite(self) -> bool {
        matches!(self, Entry::Infinite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(k) => Some(k),
            Entry::Infinite => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Finite(k) => write!(f, "{k}"),
            Entry::Infinite => f.write_str("inf"),
        }
    }
}

/// A vector in `(ℕ ∪ {∞})^n`, ordered componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<Entry>);

impl Face {
    pub fn new<I: IntoIterator<Item = Entry>>(entries: I) -> Self {
        Self(entries.into_iter().collect())
    }

    /// Shorthand for tests and fixtures: `None` is `∞`.
    pub fn from_options(entries: &[Option<u32>]) -> Self {
        Self(
            entries
                .iter()
                .map(|e| e.map_or(Entry::Infinite, Entry::Finite))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `infpt(a) = {i : a(i) = ∞}`.
    pub fn infpt(&self) -> BitSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_infinite())
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn is_below(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every entry is `0` or `∞`.
    pub fn is_zero_infinity(&self) -> bool {
        self.0
            .iter()
            .all(|e| matches!(e, Entry::Infinite | Entry::Finite(0)))
    }

    /// The finite part as an exponent vector (`∞` read as 0).
    pub fn finite_part(&self) -> Monomial {
        Monomial::new(self.0.iter().map(|e| e.finite().unwrap_or(0)))
    }

    /// `I(Γ(a))`: monomials `x^b` with `b ≰ a`, i.e. `(x_i^{a(i)+1} : a(i) < ∞)`.
    pub fn ideal(&self, ring: Ring) -> Result<MonomialIdeal> {
        let n = self.0.len();
        let mut gens = Vec::new();
        for (i, e) in self.0.iter().enumerate() {
            if let Entry::Finite(k) = e {
                let mut v = alloc::vec![0u32; n];
                v[i] = k.checked_add(1).ok_or(Error::ExponentOverflow)?;
                gens.push(Monomial::from(v));
            }
        }
        if gens.is_empty() {
            return Ok(MonomialIdeal::zero(ring));
        }
        MonomialIdeal::new(ring, gens)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// The multicomplex `Γ(I)` of a proper nonzero monomial ideal.
#[derive(Debug, Clone)]
pub struct Multicomplex {
    ideal: MonomialIdeal,
    maximal: Vec<Face>,
    facets: Vec<Face>,
}

impl Multicomplex {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let maximal = maximal_facets(ideal)?;
        let facets = facets(ideal)?;
        Ok(Self {
            ideal: ideal.clone(),
            maximal,
            facets,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn contains(&self, a: &Face) -> bool {
        face_in(&self.ideal, a)
    }

    pub fn maximal_facets(&self) -> &[Face] {
        &self.maximal
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }
}

/// `a ∈ Γ(I)`: no minimal generator lies below `a` (`∞` dominates everything).
pub fn face_in(ideal: &MonomialIdeal, a: &Face) -> bool {
    ideal.generators().iter().all(|g| {
        g.exponents().iter().zip(a.entries()).any(|(&gi, ai)| match ai {
            Entry::Finite(k) => gi > *k,
            Entry::Infinite => false,
        })
    })
}

/// Maximal elements of `Γ(I)`, one candidate per irreducible component.
pub fn maximal_facets(ideal: &MonomialIdeal) -> Result<Vec<Face>> {
    let candidates: Vec<Face> = ideal
        .irreducible_decomposition()?
        .iter()
        .map(|c| {
            Face(
                c.powers()
                    .iter()
                    .map(|&p| if p == 0 { Entry::Infinite } else { Entry::Finite(p - 1) })
                    .collect(),
            )
        })
        .collect();
    let mut out: Vec<Face> = candidates
        .iter()
        .filter(|a| !candidates.iter().any(|b| b != *a && a.is_below(b)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Facets of `Γ(I)`, computed as `β⁻¹(Min(I^p))`.
pub fn facets(ideal: &MonomialIdeal) -> Result<Vec<Face>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let (ring, ip) = polarize_ideal(ideal)?;
    let mut out = ip
        .minimal_primes()?
        .iter()
        .map(|p| beta_inv(p, &ring))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `β(a)`: the prime `(x_{i, a(i)+1} : a(i) < ∞)` of the polarized ring.
pub fn beta(a: &Face, ring: &PolarizedRing) -> Result<PrimeSupport> {
    if a.len() != ring.source().len() {
        return Err(Error::AmbientMismatch);
    }
    let mut vars = BitSet::new();
    for (i, e) in a.entries().iter().enumerate() {
        if let Entry::Finite(k) = *e {
            if k >= ring.blocks()[i] {
                return Err(Error::ExceedsBlock {
                    var: i,
                    exponent: k,
                    block: ring.blocks()[i],
                });
            }
            vars.insert(ring.block_var(i, k + 1));
        }
    }
    PrimeSupport::new(ring.target().clone(), vars)
}

/// Inverse of [`beta`]; fails when the prime uses two variables of one block.
pub fn beta_inv(p: &PrimeSupport, ring: &PolarizedRing) -> Result<Face> {
    if p.ring() != ring.target() {
        return Err(Error::AmbientMismatch);
    }
    let mut entries = alloc::vec![Entry::Infinite; ring.source().len()];
    for t in p.variables().iter() {
        let (i, j) = ring.block_of(t);
        if entries[i] != Entry::Infinite {
            return Err(Error::Precondition("prime meets a block twice"));
        }
        entries[i] = Entry::Finite(j - 1);
    }
    Ok(Face(entries))
}

/// A simplicial complex given by its facets (pairwise incomparable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Ring,
    facets: Vec<BitSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets among `sets`.
    pub fn from_facets<I: IntoIterator<Item = BitSet>>(vertices: Ring, sets: I) -> Result<Self> {
        let mut sets: Vec<BitSet> = sets.into_iter().collect();
        if sets.iter().flat_map(BitSet::iter).any(|v| v >= vertices.len()) {
            return Err(Error::Precondition("facet vertex outside the vertex set"));
        }
        sets.sort();
        sets.dedup();
        let facets = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t != *s && s.is_subset(t)))
            .cloned()
            .collect();
        Ok(Self { vertices, facets })
    }

    /// Stanley–Reisner complex: facets are complements of the minimal primes.
    pub fn from_squarefree(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let facets = ideal
            .minimal_primes()?
            .iter()
            .map(PrimeSupport::complement)
            .collect::<Vec<_>>();
        Self::from_facets(ideal.ring().clone(), facets)
    }

    pub fn vertices(&self) -> &Ring {
        &self.vertices
    }

    pub fn facets(&self) -> &[BitSet] {
        &self.facets
    }

    pub fn is_face(&self, s: &BitSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Stanley–Reisner ideal: minimal non-faces as squarefree monomials.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        // Minimal non-faces are the minimal transversals of the facet complements.
        let n = self.vertices.len();
        let complements: Vec<BitSet> = self
            .facets
            .iter()
            .map(|f| BitSet::full(n).difference(f))
            .collect();
        let gens = crate::hypergraph::minimal_transversals(&complements)
            .into_iter()
            .map(|s| Monomial::from_support(n, &s));
        MonomialIdeal::new(self.vertices.clone(), gens)
    }
}

/// A shelling: facets in order, with the restriction face `R_i` of each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingOrder {
    facets: Vec<BitSet>,
    restrictions: Vec<BitSet>,
}

impl ShellingOrder {
    pub fn facets(&self) -> &[BitSet] {
        &self.facets
    }

    /// `R_i`: the unique minimal face of `F_i` not in any earlier facet.
    pub fn restrictions(&self) -> &[BitSet] {
        &self.restrictions
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

/// Unique minimal new face of `f` after `prefix`, if it exists.
///
/// The new faces of `f` are the sets meeting every `f \ g`, `g` in the prefix;
/// there is a unique minimal one iff each such difference contains a
/// singleton difference, and then it is the union of those singletons.
fn restriction_face<'a, I>(f: &BitSet, prefix: I) -> Option<BitSet>
where
    I: IntoIterator<Item = &'a BitSet> + Clone,
{
    let mut diffs: Vec<BitSet> = Vec::new();
    for g in prefix {
        let d = f.difference(g);
        if d.is_empty() {
            return None;
        }
        diffs.push(d);
    }
    let singles: BitSet = diffs
        .iter()
        .filter(|d| d.len() == 1)
        .flat_map(BitSet::iter)
        .collect();
    diffs.iter().all(|d| d.intersects(&singles)).then_some(singles)
}

/// Checks `order` against the unique-minimal-new-face criterion.
pub fn is_shelling_order(
    complex: &SimplicialComplex,
    order: &[BitSet],
) -> Result<Option<ShellingOrder>> {
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != complex.facets {
        return Err(Error::NotAPermutation);
    }
    let mut restrictions = Vec::with_capacity(order.len());
    for (i, f) in order.iter().enumerate() {
        match restriction_face(f, &order[..i]) {
            Some(r) => restrictions.push(r),
            None => return Ok(None),
        }
    }
    Ok(Some(ShellingOrder {
        facets: order.to_vec(),
        restrictions,
    }))
}

/// Backtracking search for a shelling; `None` iff the complex is not shellable.
///
/// Candidates at each step are the facets of largest remaining dimension
/// whose new faces have a unique minimal element; dead ends are memoized on
/// the set of placed facets. The result is the lexicographically least
/// dimension-non-increasing shelling in the canonical facet order.
pub fn find_shelling(complex: &SimplicialComplex) -> Option<ShellingOrder> {
    let facets = &complex.facets;
    let mut order: Vec<usize> = Vec::with_capacity(facets.len());
    let mut dead: BTreeSet<BitSet> = BTreeSet::new();
    let mut used = BitSet::new();
    if shell_dfs(facets, &mut used, &mut order, &mut dead) {
        let order: Vec<BitSet> = order.iter().map(|&i| facets[i].clone()).collect();
        is_shelling_order(complex, &order).ok().flatten()
    } else {
        None
    }
}

fn shell_dfs(
    facets: &[BitSet],
    used: &mut BitSet,
    order: &mut Vec<usize>,
    dead: &mut BTreeSet<BitSet>,
) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if dead.contains(used) {
        return false;
    }
    let top = (0..facets.len())
        .filter(|i| !used.contains(*i))
        .map(|i| facets[i].len())
        .max()
        .unwrap_or(0);
    for i in 0..facets.len() {
        if used.contains(i) || facets[i].len() != top {
            continue;
        }
        let prefix = order.iter().map(|&k| &facets[k]);
        if restriction_face(&facets[i], prefix).is_none() {
            continue;
        }
        used.insert(i);
        order.push(i);
        if shell_dfs(facets, used, order, dead) {
            return true;
        }
        order.pop();
        used.remove(i);
    }
    dead.insert(used.clone());
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VariableSet;

    fn set(v: &[usize]) -> BitSet {
        BitSet::from_indices(v.iter().copied())
    }

    fn inf() -> Option<u32> {
        None
    }

    #[test]
    fn face_membership() {
        let r = VariableSet::new(["x", "y"]).unwrap();
        let xy = MonomialIdeal::from_exponents(r, &[&[1, 1]]).unwrap();
        assert!(face_in(&xy, &Face::from_options(&[Some(0), inf()])));
        assert!(!face_in(&xy, &Face::from_options(&[Some(1), Some(1)])));
        assert!(face_in(&xy, &Face::from_options(&[inf(), Some(0)])));
        assert!(!face_in(&xy, &Face::from_options(&[inf(), inf()])));
    }

    #[test]
    fn facets_of_small_ideals() {
        let r = VariableSet::new(["x", "y"]).unwrap();
        let xy = MonomialIdeal::from_exponents(r.clone(), &[&[1, 1]]).unwrap();
        let expect = [
            Face::from_options(&[Some(0), inf()]),
            Face::from_options(&[inf(), Some(0)]),
        ];
        assert_eq!(maximal_facets(&xy).unwrap(), expect);
        assert_eq!(facets(&xy).unwrap(), expect);
        let i = MonomialIdeal::from_exponents(r.clone(), &[&[2, 0], &[1, 1]]).unwrap();
        assert_eq!(
            facets(&i).unwrap(),
            [Face::from_options(&[Some(0), inf()]), Face::from_options(&[Some(1), Some(0)])]
        );
        let p = MonomialIdeal::from_exponents(r, &[&[1, 0]]).unwrap();
        assert_eq!(maximal_facets(&p).unwrap(), [Face::from_options(&[Some(0), inf()])]);
    }

    #[test]
    fn beta_round_trip() {
        let r = VariableSet::new(["x", "y"]).unwrap();
        let pr = PolarizedRing::new(r.clone(), alloc::vec![1, 1]).unwrap();
        let p = beta(&Face::from_options(&[Some(0), inf()]), &pr).unwrap();
        assert_eq!(p.variables(), &set(&[0]));
        let pr = PolarizedRing::new(r, alloc::vec![2, 1]).unwrap();
        let a = Face::from_options(&[Some(1), Some(0)]);
        let p = beta(&a, &pr).unwrap();
        // x_{1,2}, x_{2,1}
        assert_eq!(p.variables(), &set(&[1, 2]));
        assert_eq!(beta_inv(&p, &pr).unwrap(), a);
        assert!(beta(&Face::from_options(&[Some(2), Some(0)]), &pr).is_err());
    }

    #[test]
    fn simplicial_complexes_of_squarefree_ideals() {
        let r = VariableSet::numbered("x", 4).unwrap();
        let i = MonomialIdeal::from_exponents(
            r,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        )
        .unwrap();
        let d = SimplicialComplex::from_squarefree(&i).unwrap();
        assert_eq!(d.facets(), [set(&[0, 1]), set(&[2, 3])]);
        assert_eq!(d.stanley_reisner_ideal().unwrap(), i);
        let r2 = VariableSet::new(["x", "y"]).unwrap();
        let sq = MonomialIdeal::from_exponents(r2, &[&[2, 0]]).unwrap();
        assert_eq!(SimplicialComplex::from_squarefree(&sq), Err(Error::NotSquarefree));
    }

    #[test]
    fn shelling_checks() {
        let r = VariableSet::numbered("v", 4).unwrap();
        let single = SimplicialComplex::from_facets(r.clone(), [set(&[0, 1, 2])]).unwrap();
        let s = is_shelling_order(&single, &[set(&[0, 1, 2])]).unwrap().unwrap();
        assert_eq!(s.restrictions(), [BitSet::new()]);

        let disjoint = SimplicialComplex::from_facets(r.clone(), [set(&[0, 1]), set(&[2, 3])]).unwrap();
        assert!(is_shelling_order(&disjoint, &[set(&[0, 1]), set(&[2, 3])]).unwrap().is_none());
        assert!(is_shelling_order(&disjoint, &[set(&[2, 3]), set(&[0, 1])]).unwrap().is_none());
        assert!(find_shelling(&disjoint).is_none());
        assert_eq!(
            is_shelling_order(&disjoint, &[set(&[0, 1])]),
            Err(Error::NotAPermutation)
        );

        let triangle = SimplicialComplex::from_facets(
            r.clone(),
            [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])],
        )
        .unwrap();
        let order = [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])];
        let s = is_shelling_order(&triangle, &order).unwrap().unwrap();
        assert_eq!(s.restrictions(), [BitSet::new(), set(&[2]), set(&[0, 2])]);
        let found = find_shelling(&triangle).unwrap();
        assert!(is_shelling_order(&triangle, found.facets()).unwrap().is_some());

        let boundary = SimplicialComplex::from_facets(
            r,
            [set(&[0, 1, 2]), set(&[0, 1, 3]), set(&[0, 2, 3]), set(&[1, 2, 3])],
        )
        .unwrap();
        assert!(find_shelling(&boundary).is_some());
    }

    #[test]
    fn non_pure_shelling() {
        // a triangle with a pendant edge: shellable, triangle first
        let r = VariableSet::numbered("v", 4).unwrap();
        let d = SimplicialComplex::from_facets(r, [set(&[0, 1, 2]), set(&[2, 3])]).unwrap();
        let s = find_shelling(&d).unwrap();
        assert_eq!(s.facets(), [set(&[0, 1, 2]), set(&[2, 3])]);
        assert_eq!(s.restrictions(), [BitSet::new(), set(&[3])]);
    }
}
