#![allow(dead_code)]

pub mod oracles;

use cleanideal::core::complexes::Face;
use cleanideal::core::filtration::PrimeFiltration;
use cleanideal::core::stanley::{from_filtration, StanleyDecomposition, StanleySpace};
use cleanideal::core::{BitSet, Monomial, MonomialIdeal, Ring, VariableSet};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use oracles::{Exps, Point};

pub fn ring(n: usize) -> Ring {
    VariableSet::numbered("x", n).unwrap()
}

pub fn gens_of(i: &MonomialIdeal) -> Vec<Exps> {
    i.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn ideal(ring: &Ring, gens: &[Exps]) -> MonomialIdeal {
    MonomialIdeal::new(ring.clone(), gens.iter().map(|g| Monomial::new(g.iter().copied()))).unwrap()
}

pub fn point_of(face: &Face) -> Point {
    face.entries().iter().map(|e| e.finite()).collect()
}

/// All ideals of `K[x_1..x_n]` minimally generated inside the box
/// `[0, max]^n`, excluding the zero and unit ideals.
pub fn all_ideals(n: usize, max: u32) -> Vec<Vec<Exps>> {
    let mut cells = oracles::grid(&vec![max; n]);
    cells.retain(|c| c.iter().any(|&e| e > 0));
    cells.sort_by_key(|c| (c.iter().sum::<u32>(), c.clone()));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_antichains(&cells, 0, &mut chosen, &mut out);
    out
}

fn extend_antichains(cells: &[Exps], from: usize, chosen: &mut Vec<Exps>, out: &mut Vec<Vec<Exps>>) {
    if !chosen.is_empty() {
        out.push(chosen.clone());
    }
    for k in from..cells.len() {
        let c = &cells[k];
        // cells are sorted by degree, so only earlier picks can divide c
        if chosen.iter().any(|g| oracles::divides(g, c)) {
            continue;
        }
        chosen.push(c.clone());
        extend_antichains(cells, k + 1, chosen, out);
        chosen.pop();
    }
}

/// Refines a decomposition by random splits
/// `uK[Z] = u·x_i K[Z] ⊕ uK[Z \ {x_i}]` and shuffles the spaces.
pub fn random_refinement<R: Rng>(rng: &mut R, d: &StanleyDecomposition, splits: usize) -> StanleyDecomposition {
    let mut spaces: Vec<StanleySpace> = d.spaces().to_vec();
    for _ in 0..splits {
        let candidates: Vec<usize> = (0..spaces.len()).filter(|&k| spaces[k].dimension() > 0).collect();
        let Some(&k) = candidates.choose(rng) else {
            break;
        };
        let s = spaces.swap_remove(k);
        let vars: Vec<usize> = s.z().iter().collect();
        let i = *vars.choose(rng).unwrap();
        let x = Monomial::var(s.u().len(), i);
        let mut rest: BitSet = s.z().clone();
        rest.remove(i);
        spaces.push(StanleySpace::new(s.u().mul(&x).unwrap(), s.z().clone()));
        spaces.push(StanleySpace::new(s.u().clone(), rest));
    }
    spaces.shuffle(rng);
    StanleyDecomposition::new(d.ideal().clone(), spaces).unwrap()
}

pub fn random_decomposition_from<R: Rng>(rng: &mut R, f: &PrimeFiltration) -> StanleyDecomposition {
    let d = from_filtration(f).unwrap();
    let splits = rng.random_range(0..=6);
    random_refinement(rng, &d, splits)
}

pub fn spaces_of(d: &StanleyDecomposition) -> Vec<(Exps, Vec<usize>)> {
    d.spaces()
        .iter()
        .map(|s| (s.u().exponents().to_vec(), s.z().iter().collect()))
        .collect()
}
