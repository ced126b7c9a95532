//! Multiplicity, dimension, length multiplicities, arithmetic degree, Betti
//! numbers and depth.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complexes::facets;
use crate::error::{Error, Result};
use crate::hilbert::hilbert_series;
use crate::homology::{homology_ranks, IntMatrix};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::Monomial;

/// Largest generator count accepted by the Taylor complex.
pub const TAYLOR_LIMIT: usize = 24;

/// `e(S/I)`.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(hilbert_series(ideal).multiplicity() as u64)
}

/// `dim S/I`.
pub fn dimension(ideal: &MonomialIdeal) -> Result<usize> {
    hilbert_series(ideal).dimension().ok_or(Error::UnitIdeal)
}

/// Number of facets of `Γ(I)` whose infinite part is the complement of `P`.
pub fn mult_length(ideal: &MonomialIdeal, p: &PrimeSupport) -> Result<usize> {
    if p.ring() != ideal.ring() {
        return Err(Error::AmbientMismatch);
    }
    if ideal.is_unit() {
        return Ok(0);
    }
    if ideal.is_zero() {
        return Ok(usize::from(p.is_empty()));
    }
    let free = p.complement();
    Ok(facets(ideal)?.iter().filter(|a| a.infpt() == free).count())
}

/// Number of facets of `Γ(I)`.
pub fn adeg(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(facets(ideal)?.len())
}

/// Multigraded Betti numbers `β_{i,b}(S/I)` over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    /// Nonzero entries keyed by homological degree and multidegree.
    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// `β_i = Σ_b β_{i,b}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `β_{i,j}` summed over multidegrees of total degree `j`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            *out.entry((*i, b.degree())).or_insert(0) += v;
        }
        out
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `n - pd(S/I)`.
    pub fn depth(&self) -> usize {
        self.nvars - self.projective_dimension()
    }
}

/// Homology of the Taylor complex tensored with `K`, one multidegree at a
/// time: the subsets `T` with `lcm(T) = b` span degree `|T|`, and `T → T \ {j}`
/// carries `(-1)^{pos(j)}` exactly when removing `j` keeps the lcm.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens = ideal.generators();
    let mu = gens.len();
    if mu > TAYLOR_LIMIT {
        return Err(Error::Precondition("too many generators for the Taylor complex"));
    }
    let n = ideal.nvars();
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << mu);
    lcms.push(Monomial::one(n));
    for mask in 1usize..(1 << mu) {
        let low = mask.trailing_zeros() as usize;
        let l = lcms[mask & (mask - 1)].lcm(&gens[low])?;
        lcms.push(l);
    }
    let mut by_degree: BTreeMap<&Monomial, Vec<usize>> = BTreeMap::new();
    for (mask, l) in lcms.iter().enumerate() {
        by_degree.entry(l).or_default().push(mask);
    }

    let mut entries = BTreeMap::new();
    for (b, masks) in by_degree {
        let mut levels: Vec<Vec<usize>> = alloc::vec![Vec::new(); mu + 1];
        for &mask in &masks {
            levels[mask.count_ones() as usize].push(mask);
        }
        let top = levels.iter().rposition(|l| !l.is_empty()).expect("nonempty");
        let bottom = levels.iter().position(|l| !l.is_empty()).expect("nonempty");
        let levels = &levels[bottom..=top];
        let dims: Vec<usize> = levels.iter().map(Vec::len).collect();
        let maps: Vec<IntMatrix> = (1..levels.len())
            .map(|k| {
                let mut d = IntMatrix::zeros(dims[k - 1], dims[k]);
                for (c, &t) in levels[k].iter().enumerate() {
                    let mut pos = 0;
                    for j in 0..mu {
                        if t & (1 << j) == 0 {
                            continue;
                        }
                        let s = t & !(1 << j);
                        if lcms[s] == *b {
                            let r = levels[k - 1].binary_search(&s).expect("same lcm, one level down");
                            d.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
                        }
                        pos += 1;
                    }
                }
                d
            })
            .collect();
        for (k, h) in homology_ranks(&dims, &maps)?.into_iter().enumerate() {
            if h > 0 {
                entries.insert((bottom + k, b.clone()), h);
            }
        }
    }
    Ok(BettiTable { nvars: n, entries })
}

/// `depth(S/I) = n - pd(S/I)`.
pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_table(ideal)?.depth())
}
