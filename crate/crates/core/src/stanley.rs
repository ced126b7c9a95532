//! Stanley decompositions `S/I = ⊕ u_i K[Z_i]` and their relation to prime
//! filtrations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filtration::{is_pretty_clean, saturation_chain, verify, PrimeFiltration};
use crate::hilbert::{hilbert_of_spaces, hilbert_series, HilbertSeries};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::invariants::depth;
use crate::monomial::Monomial;

/// The K-vector space `u K[Z]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StanleySpace {
    u: Monomial,
    z: BitSet,
}

impl StanleySpace {
    pub fn new(u: Monomial, z: BitSet) -> Self {
        Self { u, z }
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn z(&self) -> &BitSet {
        &self.z
    }

    pub fn dimension(&self) -> usize {
        self.z.len()
    }

    pub fn degree(&self) -> u64 {
        self.u.degree()
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        w.div(&self.u).is_some_and(|q| q.support().is_subset(&self.z))
    }

    fn meets(&self, other: &Self) -> bool {
        let l = self.u.lcm(&other.u).expect("same ring");
        let a = l.div(&self.u).expect("lcm is a multiple");
        let b = l.div(&other.u).expect("lcm is a multiple");
        a.support().is_subset(&self.z) && b.support().is_subset(&other.z)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    ideal: MonomialIdeal,
    spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(ideal: MonomialIdeal, spaces: Vec<StanleySpace>) -> Result<Self> {
        let n = ideal.nvars();
        for s in &spaces {
            if s.u.len() != n || s.z.iter().any(|i| i >= n) {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(Self { ideal, spaces })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// Spaces as a sorted list, for comparisons up to order.
    pub fn sorted_spaces(&self) -> Vec<StanleySpace> {
        let mut s = self.spaces.clone();
        s.sort();
        s
    }
}

/// One space `(u_i, complement of P_i)` per step.
pub fn from_filtration(f: &PrimeFiltration) -> Result<StanleyDecomposition> {
    let report = verify(f);
    if !report.valid {
        let (step, reason) = report.failure.unwrap_or((0, "invalid"));
        return Err(Error::InvalidFiltration { step, reason });
    }
    let spaces = f
        .adjoined()
        .iter()
        .zip(&report.support)
        .map(|(u, p)| StanleySpace::new(u.clone(), p.complement()))
        .collect();
    StanleyDecomposition::new(f.base().clone(), spaces)
}

/// `Σ t^{deg u_i} / (1 - t)^{|Z_i|}`.
pub fn hilbert_of_decomposition(d: &StanleyDecomposition) -> HilbertSeries {
    hilbert_of_spaces(
        d.ideal.nvars(),
        d.spaces.iter().map(|s| (s.degree(), s.dimension())),
    )
}

/// Exact validity: every space avoids `I`, the spaces are pairwise disjoint,
/// and their Hilbert series add up to that of `S/I`.
pub fn verify_decomposition(d: &StanleyDecomposition) -> bool {
    let avoids = d.spaces.iter().all(|s| {
        d.ideal
            .colon(&s.u)
            .expect("checked on construction")
            .generators()
            .iter()
            .all(|g| !g.support().is_subset(&s.z))
    });
    if !avoids {
        return false;
    }
    let disjoint = (0..d.spaces.len())
        .all(|i| (i + 1..d.spaces.len()).all(|j| !d.spaces[i].meets(&d.spaces[j])));
    disjoint && hilbert_of_decomposition(d) == hilbert_series(&d.ideal)
}

fn require_valid(d: &StanleyDecomposition) -> Result<()> {
    if verify_decomposition(d) {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition("not a Stanley decomposition of S/I"))
    }
}

/// `I_k ⊕ uK[Z]` is the ideal `(I_k, u)` exactly when `I_k : u` is the prime
/// generated by the variables outside `Z`.
fn legal_step(cur: &MonomialIdeal, s: &StanleySpace) -> bool {
    !cur.contains(&s.u)
        && cur
            .colon(&s.u)
            .expect("same ring")
            .is_prime()
            .is_some_and(|p| p.complement() == s.z)
}

/// An ordering `T_1, ..., T_r` of the spaces such that every
/// `I ⊕ T_1 ⊕ ... ⊕ T_k` is a monomial ideal, or `None`.
///
/// Full backtracking, with dead sets of used spaces memoized.
pub fn corresponds_to_filtration(d: &StanleyDecomposition) -> Result<Option<Vec<usize>>> {
    require_valid(d)?;
    let mut dead = BTreeSet::new();
    let mut order = Vec::new();
    let mut used = BitSet::new();
    if order_dfs(d, &d.ideal, &mut used, &mut order, &mut dead) {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

fn order_dfs(
    d: &StanleyDecomposition,
    cur: &MonomialIdeal,
    used: &mut BitSet,
    order: &mut Vec<usize>,
    dead: &mut BTreeSet<BitSet>,
) -> bool {
    if order.len() == d.spaces.len() {
        return cur.is_unit();
    }
    if dead.contains(used) {
        return false;
    }
    for (k, s) in d.spaces.iter().enumerate() {
        if used.contains(k) || !legal_step(cur, s) {
            continue;
        }
        let next = cur.add_monomial(&s.u).expect("same ring");
        used.insert(k);
        order.push(k);
        if order_dfs(d, &next, used, order, dead) {
            return true;
        }
        order.pop();
        used.remove(k);
    }
    dead.insert(used.clone());
    false
}

/// The prime filtration adjoining `u` of each space in the given order.
pub fn ordering_to_filtration(d: &StanleyDecomposition, order: &[usize]) -> Result<PrimeFiltration> {
    let adjoined = order
        .iter()
        .map(|&k| {
            d.spaces
                .get(k)
                .map(|s| s.u.clone())
                .ok_or(Error::NotAPermutation)
        })
        .collect::<Result<Vec<_>>>()?;
    PrimeFiltration::new(d.ideal.clone(), adjoined)
}

/// Ordering of a decomposition in two variables without search.
///
/// After the forced 0-dimensional spaces of `Ĩ \ I`, the ideal is principal,
/// `(x^α y^β)`. Some space is `x^{α-1} y^γ K[y]` with `γ ≥ β` or
/// `x^θ y^{β-1} K[x]` with `θ ≥ α`; it is taken together with the
/// 0-dimensional spaces between it and the principal ideal, which leaves
/// `(x^{α-1} y^β)` or `(x^α y^{β-1})`.
pub fn order_in_two_vars(d: &StanleyDecomposition) -> Result<Vec<usize>> {
    if d.ideal.nvars() != 2 {
        return Err(Error::Precondition("needs exactly two variables"));
    }
    require_valid(d)?;
    let stuck = Error::InvalidDecomposition("no boundary space found");
    let mut left: Vec<Option<&StanleySpace>> = d.spaces.iter().map(Some).collect();
    fn take(left: &mut [Option<&StanleySpace>], u: &Monomial, z: &BitSet, order: &mut Vec<usize>) -> bool {
        let found = left
            .iter()
            .position(|s| s.is_some_and(|s| s.u == *u && s.z == *z));
        if let Some(k) = found {
            left[k] = None;
            order.push(k);
        }
        found.is_some()
    }

    let mut order = Vec::with_capacity(d.len());
    let empty = BitSet::new();
    let mut cur = d.ideal.clone();
    for w in saturation_chain(&cur) {
        if !take(&mut left, &w, &empty, &mut order) {
            return Err(stuck);
        }
    }
    cur = cur.saturation();
    if cur.is_zero() {
        let Some(k) = d.spaces.iter().position(|s| s.dimension() == 2) else {
            return Err(stuck);
        };
        let u = d.spaces[k].u.clone();
        take(&mut left, &u, &BitSet::full(2), &mut order);
        cur = cur.add_monomial(&u)?;
    }
    if !cur.is_unit() && cur.mu() != 1 {
        return Err(stuck);
    }
    let mut g = cur.generators()[0].clone();
    while !g.is_one() {
        let mut moved = false;
        for (p, q) in [(0usize, 1usize), (1, 0)] {
            let (a, b) = (g.exponent(p), g.exponent(q));
            if a == 0 {
                continue;
            }
            let z = BitSet::from_indices([q]);
            let tail = left.iter().flatten().find_map(|s| {
                (s.z == z && s.u.exponent(p) == a - 1 && s.u.exponent(q) >= b).then(|| s.u.exponent(q))
            });
            let Some(top) = tail else {
                continue;
            };
            let at = |e: u32| g.with_exponent(p, a - 1).with_exponent(q, e);
            take(&mut left, &at(top), &z, &mut order);
            for e in (b..top).rev() {
                if !take(&mut left, &at(e), &empty, &mut order) {
                    return Err(stuck);
                }
            }
            g = g.with_exponent(p, a - 1);
            moved = true;
            break;
        }
        if !moved {
            return Err(stuck);
        }
    }
    if order.len() != d.len() {
        return Err(stuck);
    }
    Ok(order)
}

/// `min |Z_i|`.
pub fn stanley_depth(d: &StanleyDecomposition) -> Result<usize> {
    require_valid(d)?;
    d.spaces
        .iter()
        .map(StanleySpace::dimension)
        .min()
        .ok_or(Error::InvalidDecomposition("empty decomposition"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub depth: usize,
    /// Present when a pretty clean filtration supplied a decomposition.
    pub stanley_depth: Option<usize>,
    /// `None` means unknown.
    pub satisfied: Option<bool>,
    pub decomposition: Option<StanleyDecomposition>,
}

/// Checks `sdepth ≥ depth(S/I)` on the decomposition of a pretty clean
/// filtration; reports unknown when `I` is not pretty clean.
pub fn check_conjecture(ideal: &MonomialIdeal) -> Result<ConjectureReport> {
    let depth = depth(ideal)?;
    let Some(f) = is_pretty_clean(ideal)? else {
        return Ok(ConjectureReport {
            depth,
            stanley_depth: None,
            satisfied: None,
            decomposition: None,
        });
    };
    let d = from_filtration(&f)?;
    let sdepth = stanley_depth(&d)?;
    Ok(ConjectureReport {
        depth,
        stanley_depth: Some(sdepth),
        satisfied: Some(sdepth >= depth),
        decomposition: Some(d),
    })
}

/// `Ĩ \ I`: each `u` here is a space `uK` of every decomposition.
pub fn forced_zero_spaces(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut out = saturation_chain(ideal);
    out.sort();
    out
}

/// The prime whose variables lie outside `Z`.
pub fn space_prime(d: &StanleyDecomposition, s: &StanleySpace) -> PrimeSupport {
    let free = BitSet::full(d.ideal.nvars()).difference(&s.z);
    PrimeSupport::new(d.ideal.ring().clone(), free).expect("inside the ring")
}
