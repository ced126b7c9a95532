//! Polarization into squarefree ideals and specialization back.
//!
//! A monomial `∏ x_i^{a_i}` polarizes to `∏_i ∏_{j ≤ a_i} x_{i,j}` in a ring
//! with one block of variables `x_{i,1}, ..., x_{i,r_i}` per source variable.
//! Specialization sends every `x_{i,j}` back to `x_i`.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filtration::{verify, FiltrationReport, PrimeFiltration};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::Monomial;
use crate::ring::{Ring, VariableSet};

/// Source ring, block sizes, and the squarefree target ring.
///
/// Target variables are ordered `(1,1), (1,2), ..., (n, r_n)` and named
/// `{name}_{j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedRing {
    source: Ring,
    blocks: Vec<u32>,
    offsets: Vec<usize>,
    target: Ring,
}

/// The map `x_{i,j} ↦ x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationMap {
    ring: PolarizedRing,
}

impl PolarizedRing {
    pub fn new(source: Ring, blocks: Vec<u32>) -> Result<Self> {
        if blocks.len() != source.len() {
            return Err(Error::LengthMismatch {
                expected: source.len(),
                got: blocks.len(),
            });
        }
        if blocks.contains(&0) {
            return Err(Error::Precondition("block sizes must be positive"));
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut names = Vec::new();
        for (i, &r) in blocks.iter().enumerate() {
            offsets.push(names.len());
            for j in 1..=r {
                names.push(format!("{}_{}", source.name(i), j));
            }
        }
        let target = VariableSet::new(names)?;
        Ok(Self {
            source,
            blocks,
            offsets,
            target,
        })
    }

    /// Smallest blocks covering every given monomial (each block at least 1).
    pub fn covering<'a, I>(source: Ring, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let mut blocks = alloc::vec![1u32; source.len()];
        for m in monomials {
            if m.len() != source.len() {
                return Err(Error::LengthMismatch {
                    expected: source.len(),
                    got: m.len(),
                });
            }
            for (b, &e) in blocks.iter_mut().zip(m.exponents()) {
                *b = (*b).max(e);
            }
        }
        Self::new(source, blocks)
    }

    /// Blocks sized by the maximal exponents of the minimal generators.
    pub fn for_ideal(ideal: &MonomialIdeal) -> Self {
        Self::covering(ideal.ring().clone(), ideal.generators())
            .expect("generators match the ring")
    }

    /// Componentwise maximum of the block sizes: a common extension.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.source != other.source {
            return Err(Error::AmbientMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Self::new(self.source.clone(), blocks)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    /// Number of linear forms `x_{i,1} - x_{i,j}` cut out by specialization.
    pub fn extra_variables(&self) -> usize {
        self.target.len() - self.source.len()
    }

    /// Target index of `x_{i,j}` (`j` is 1-based).
    pub fn block_var(&self, i: usize, j: u32) -> usize {
        debug_assert!(j >= 1 && j <= self.blocks[i]);
        self.offsets[i] + (j as usize - 1)
    }

    /// Inverse of [`block_var`](Self::block_var).
    pub fn block_of(&self, target_index: usize) -> (usize, u32) {
        let i = match self.offsets.binary_search(&target_index) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        (i, (target_index - self.offsets[i]) as u32 + 1)
    }

    pub fn polarize_monomial(&self, u: &Monomial) -> Result<Monomial> {
        if u.len() != self.source.len() {
            return Err(Error::AmbientMismatch);
        }
        let mut e = alloc::vec![0u32; self.target.len()];
        for (i, &a) in u.exponents().iter().enumerate() {
            if a > self.blocks[i] {
                return Err(Error::ExceedsBlock {
                    var: i,
                    exponent: a,
                    block: self.blocks[i],
                });
            }
            for j in 1..=a {
                e[self.block_var(i, j)] = 1;
            }
        }
        Ok(Monomial::from(e))
    }

    /// `I^p` inside this target ring.
    pub fn polarize_ideal(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        if ideal.ring() != &self.source {
            return Err(Error::AmbientMismatch);
        }
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.polarize_monomial(g))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.target.clone(), gens)
    }

    pub fn specialization(&self) -> SpecializationMap {
        SpecializationMap { ring: self.clone() }
    }
}

impl SpecializationMap {
    pub fn ring(&self) -> &PolarizedRing {
        &self.ring
    }

    /// Exponent of `x_i` in `π(v)` is the sum over the block of `x_i`.
    pub fn monomial(&self, v: &Monomial) -> Result<Monomial> {
        let r = &self.ring;
        if v.len() != r.target.len() {
            return Err(Error::AmbientMismatch);
        }
        let mut e = alloc::vec![0u32; r.source.len()];
        for (t, &a) in v.exponents().iter().enumerate() {
            let (i, _) = r.block_of(t);
            e[i] = e[i].checked_add(a).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial::from(e))
    }

    pub fn ideal(&self, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        if j.ring() != &self.ring.target {
            return Err(Error::AmbientMismatch);
        }
        let gens = j
            .generators()
            .iter()
            .map(|g| self.monomial(g))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.ring.source.clone(), gens)
    }

    /// `π(Q)` for a monomial prime of the target.
    pub fn prime(&self, q: &PrimeSupport) -> Result<PrimeSupport> {
        if q.ring() != &self.ring.target {
            return Err(Error::AmbientMismatch);
        }
        let vars: BitSet = q.variables().iter().map(|t| self.ring.block_of(t).0).collect();
        PrimeSupport::new(self.ring.source.clone(), vars)
    }
}

/// Polarizes `I` with blocks sized by its maximal exponents.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<(PolarizedRing, MonomialIdeal)> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = PolarizedRing::for_ideal(ideal);
    let p = ring.polarize_ideal(ideal)?;
    Ok((ring, p))
}

/// `F^p`: `J_0 = I^p`, `J_k = (J_{k-1}, u_k^p)`, in the smallest ring covering
/// the generators of `I` and every adjoined monomial.
pub fn polarize_filtration(f: &PrimeFiltration) -> Result<(PolarizedRing, PrimeFiltration)> {
    let report = verify(f);
    if !report.valid {
        let (step, reason) = report.failure.unwrap_or((0, "invalid"));
        return Err(Error::InvalidFiltration { step, reason });
    }
    let base = f.base();
    let ring = PolarizedRing::covering(
        base.ring().clone(),
        base.generators().iter().chain(f.adjoined()),
    )?;
    let pf = polarize_filtration_in(&ring, f)?;
    Ok((ring, pf))
}

/// `F^p` inside a caller-chosen polarized ring.
pub fn polarize_filtration_in(ring: &PolarizedRing, f: &PrimeFiltration) -> Result<PrimeFiltration> {
    let base = ring.polarize_ideal(f.base())?;
    let adjoined = f
        .adjoined()
        .iter()
        .map(|u| ring.polarize_monomial(u))
        .collect::<Result<Vec<_>>>()?;
    PrimeFiltration::new(base, adjoined)
}

/// Step-wise specialization of a filtration of `I^p`, with its verification
/// report. For a clean input the result is a pretty clean filtration of `I`
/// whose k-th prime is `π(Q_k)`; other inputs still get the chain and report.
pub fn specialize_filtration(
    map: &SpecializationMap,
    g: &PrimeFiltration,
) -> Result<(PrimeFiltration, FiltrationReport)> {
    let base = map.ideal(g.base())?;
    let adjoined = g
        .adjoined()
        .iter()
        .map(|v| map.monomial(v))
        .collect::<Result<Vec<_>>>()?;
    let f = PrimeFiltration::new(base, adjoined)?;
    let report = verify(&f);
    Ok((f, report))
}
