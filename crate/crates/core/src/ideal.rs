//! Monomial ideals and their exact arithmetic.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::{minimal_sets, minimal_transversals};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A monomial ideal, held by its unique minimal generating set.
///
/// Generators are sorted lexicographically by exponent vector. The unit ideal
/// is `(1)`; the zero ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// A monomial prime ideal `(x_i : i ∈ vars)`. The empty set is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    vars: BitSet,
    ring: Ring,
}

/// An irreducible monomial ideal `(x_i^{a_i} : a_i > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Ring,
    powers: Vec<u32>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to its minimal generators.
    pub fn new<I: IntoIterator<Item = Monomial>>(ring: Ring, gens: I) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.len() != ring.len()) {
            return Err(Error::LengthMismatch {
                expected: ring.len(),
                got: g.len(),
            });
        }
        Ok(Self {
            gens: minimalize(gens),
            ring,
        })
    }

    pub fn from_exponents(ring: Ring, gens: &[&[u32]]) -> Result<Self> {
        Self::new(ring, gens.iter().map(|e| Monomial::new(e.iter().copied())))
    }

    pub fn zero(ring: Ring) -> Self {
        Self {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Ring) -> Self {
        let n = ring.len();
        Self {
            ring,
            gens: alloc::vec![Monomial::one(n)],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators, `μ(I)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars()), |acc, g| {
                acc.lcm(g).expect("generators share the ambient length")
            })
    }

    /// Per-variable maximum exponent over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        self.lcm_of_generators().exponents().to_vec()
    }

    fn check_ring(&self, other: &Ring) -> Result<()> {
        if &self.ring == other {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn check_monomial(&self, u: &Monomial) -> Result<()> {
        if u.len() == self.nvars() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.nvars(),
                got: u.len(),
            })
        }
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(&other.ring)?;
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    /// `(I, u)`.
    pub fn add_monomial(&self, u: &Monomial) -> Result<Self> {
        self.check_monomial(u)?;
        if self.contains(u) {
            return Ok(self.clone());
        }
        let mut gens: Vec<Monomial> = self.gens.iter().filter(|g| !u.divides(g)).cloned().collect();
        gens.push(u.clone());
        gens.sort();
        Ok(Self {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// `u·I`.
    pub fn mul_monomial(&self, u: &Monomial) -> Result<Self> {
        self.check_monomial(u)?;
        let gens = self.gens.iter().map(|g| g.mul(u)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `I : u`, minimally generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> Result<Self> {
        self.check_monomial(u)?;
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.colon(u)).collect()),
        })
    }

    /// `I ∩ J`, minimally generated by the pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b)?);
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// `Some(P)` iff every minimal generator is a variable (the zero ideal is prime).
    pub fn is_prime(&self) -> Option<PrimeSupport> {
        let mut vars = BitSet::new();
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            vars.insert(g.support().iter().next()?);
        }
        Some(PrimeSupport {
            vars,
            ring: self.ring.clone(),
        })
    }

    /// `I : m`, where `m` is the maximal ideal.
    pub fn colon_maximal(&self) -> Self {
        let n = self.nvars();
        let mut acc = Self::unit(self.ring.clone());
        for i in 0..n {
            let c = self.colon(&Monomial::var(n, i)).expect("same ring");
            acc = acc.intersect(&c).expect("same ring");
        }
        acc
    }

    /// `Ĩ = I : m^∞`, the fixpoint of colon by the maximal ideal.
    pub fn saturation(&self) -> Self {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_maximal();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.colon_maximal() == *self
    }

    fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// The irredundant decomposition into irreducible monomial ideals.
    ///
    /// Uses `J + (g) = ∩_{i ∈ supp g} (J + x_i^{g_i})` generator by generator,
    /// keeping only inclusion-minimal components after each step. Irreducible
    /// monomial ideals are meet-prime, so the minimal ones form the unique
    /// irredundant decomposition.
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>> {
        self.require_proper_nonzero()?;
        let n = self.nvars();
        let mut comps: Vec<Vec<u32>> = alloc::vec![alloc::vec![0; n]];
        for g in &self.gens {
            let e = g.exponents();
            let mut next: Vec<Vec<u32>> = Vec::new();
            for c in comps {
                let holds = (0..n).any(|i| c[i] > 0 && e[i] >= c[i]);
                if holds {
                    next.push(c);
                    continue;
                }
                for i in (0..n).filter(|&i| e[i] > 0) {
                    let mut d = c.clone();
                    d[i] = e[i];
                    next.push(d);
                }
            }
            comps = minimal_components(next);
        }
        let mut out: Vec<IrreducibleComponent> = comps
            .into_iter()
            .map(|powers| IrreducibleComponent {
                ring: self.ring.clone(),
                powers,
            })
            .collect();
        out.sort_by(|a, b| {
            a.support_size()
                .cmp(&b.support_size())
                .then_with(|| a.radical().vars.cmp(&b.radical().vars))
                .then_with(|| a.powers.cmp(&b.powers))
        });
        Ok(out)
    }

    /// Ass(S/I): radicals of the irreducible components.
    pub fn associated_primes(&self) -> Result<Vec<PrimeSupport>> {
        let mut primes: Vec<PrimeSupport> = self
            .irreducible_decomposition()?
            .iter()
            .map(IrreducibleComponent::radical)
            .collect();
        primes.sort();
        primes.dedup();
        Ok(primes)
    }

    /// Min(S/I). Squarefree ideals go through minimal vertex covers of the
    /// generator supports; others take the minimal associated primes.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSupport>> {
        self.require_proper_nonzero()?;
        let supports: Vec<BitSet> = if self.is_squarefree() {
            let edges: Vec<BitSet> = self.gens.iter().map(Monomial::support).collect();
            minimal_transversals(&edges)
        } else {
            minimal_sets(
                self.associated_primes()?
                    .into_iter()
                    .map(|p| p.vars)
                    .collect(),
            )
        };
        let mut primes: Vec<PrimeSupport> = supports
            .into_iter()
            .map(|vars| PrimeSupport {
                vars,
                ring: self.ring.clone(),
            })
            .collect();
        primes.sort();
        Ok(primes)
    }

    /// Height: smallest number of generators of a minimal prime. The zero ideal has height 0.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Ok(0);
        }
        Ok(self
            .minimal_primes()?
            .iter()
            .map(PrimeSupport::len)
            .min()
            .unwrap_or(0))
    }

    /// Monomials `w` with `w ∉ I`, every exponent `w_i < bound_i`.
    pub fn standard_monomials_below(&self, bounds: &[u32]) -> Vec<Monomial> {
        box_monomials(bounds)
            .into_iter()
            .filter(|w| !self.contains(w))
            .collect()
    }

    pub fn gcd_of_generators(&self) -> Monomial {
        let mut it = self.gens.iter();
        match it.next() {
            None => Monomial::one(self.nvars()),
            Some(first) => it.fold(first.clone(), |acc, g| acc.gcd(g).expect("same ring")),
        }
    }

    /// `I / u` for a monomial dividing every generator.
    pub fn divide_by(&self, u: &Monomial) -> Option<Self> {
        let gens = self.gens.iter().map(|g| g.div(u)).collect::<Option<Vec<_>>>()?;
        Some(Self {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        IdealDisplay(self)
    }
}

/// All monomials with `w_i < bounds[i]`, in lexicographic order.
pub fn box_monomials(bounds: &[u32]) -> Vec<Monomial> {
    let mut out: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * b as usize);
        for prefix in &out {
            for e in 0..b {
                let mut v = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::from).collect()
}

/// All divisors of `u`, in lexicographic order.
pub fn divisors(u: &Monomial) -> Vec<Monomial> {
    let bounds: Vec<u32> = u.exponents().iter().map(|&e| e + 1).collect();
    box_monomials(&bounds)
}

fn component_contains(big: &[u32], small: &[u32]) -> bool {
    // ideal(small) ⊆ ideal(big)
    small
        .iter()
        .zip(big)
        .all(|(&s, &b)| s == 0 || (b > 0 && b <= s))
}

fn minimal_components(mut comps: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| j != i && component_contains(c, d))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

struct IdealDisplay<'a>(&'a MonomialIdeal);

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.0.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.0.ring.display(g))?;
        }
        f.write_str(")")
    }
}

impl PrimeSupport {
    pub fn new(ring: Ring, vars: BitSet) -> Result<Self> {
        if vars.iter().any(|v| v >= ring.len()) {
            return Err(Error::Precondition("prime support outside the ring"));
        }
        Ok(Self { vars, ring })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(ring: Ring, vars: I) -> Result<Self> {
        Self::new(ring, vars.into_iter().collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn variables(&self) -> &BitSet {
        &self.vars
    }

    /// Number of generators, `μ(P)`.
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// Variables not in the prime, the `Z` of the matching Stanley space.
    pub fn complement(&self) -> BitSet {
        BitSet::full(self.ring.len()).difference(&self.vars)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.vars.is_subset(&other.vars)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.ring.len();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: {
                let mut g: Vec<Monomial> = self.vars.iter().map(|i| Monomial::var(n, i)).collect();
                g.sort();
                g
            },
        }
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        PrimeDisplay(self)
    }
}

impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
            .then_with(|| self.ring.names().cmp(other.ring.names()))
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

struct PrimeDisplay<'a>(&'a PrimeSupport);

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.0.vars.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(self.0.ring.name(i))?;
        }
        f.write_str(")")
    }
}

impl IrreducibleComponent {
    /// Exponent of `x_i` among the generators, `0` when absent.
    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn support_size(&self) -> usize {
        self.powers.iter().filter(|&&p| p > 0).count()
    }

    pub fn radical(&self) -> PrimeSupport {
        PrimeSupport {
            vars: self
                .powers
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, _)| i)
                .collect(),
            ring: self.ring.clone(),
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.powers.len();
        let gens = self
            .powers
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, &p)| Monomial::one(n).with_exponent(i, p));
        MonomialIdeal::new(self.ring.clone(), gens).expect("lengths agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VariableSet;
    use alloc::string::ToString;

    fn ring(n: usize) -> Ring {
        match n {
            2 => VariableSet::new(["x", "y"]).unwrap(),
            3 => VariableSet::new(["x", "y", "z"]).unwrap(),
            _ => VariableSet::numbered("x", n).unwrap(),
        }
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring(n), gens).unwrap()
    }

    #[test]
    fn minimal_generators_are_canonical() {
        let a = ideal(2, &[&[2, 0], &[1, 1], &[2, 1], &[3, 0]]);
        assert_eq!(a.generators(), ideal(2, &[&[1, 1], &[2, 0]]).generators());
        assert_eq!(a.display().to_string(), "(x*y, x^2)");
        assert!(ideal(2, &[&[1, 0], &[0, 0]]).is_unit());
    }

    #[test]
    fn colon_examples() {
        // (xy, xz) : x = (y, z)
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(i.colon(&Monomial::new([1, 0, 0])).unwrap(), ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        let xy = ideal(2, &[&[1, 1]]);
        assert!(xy.colon(&Monomial::new([1, 1])).unwrap().is_unit());
        assert_eq!(
            xy.colon(&Monomial::new([1, 1, 1])),
            Err(Error::LengthMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn prime_detection() {
        let p = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]).is_prime().unwrap();
        assert_eq!(p.variables(), &BitSet::from_indices([0, 2]));
        assert!(ideal(2, &[&[2, 0], &[0, 1]]).is_prime().is_none());
        assert!(ideal(3, &[&[1, 1, 0], &[0, 0, 1]]).is_prime().is_none());
        assert!(MonomialIdeal::zero(ring(2)).is_prime().unwrap().is_empty());
        assert!(MonomialIdeal::unit(ring(2)).is_prime().is_none());
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1]]).saturation(), ideal(2, &[&[1, 0]]));
        assert_eq!(ideal(2, &[&[1, 0]]).saturation(), ideal(2, &[&[1, 0]]));
        assert!(ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]).saturation().is_unit());
        assert!(MonomialIdeal::zero(ring(2)).saturation().is_zero());
    }

    #[test]
    fn intersection_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let xy = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let z = ideal(3, &[&[0, 0, 1]]);
        assert_eq!(xy.intersect(&z).unwrap(), ideal(3, &[&[1, 0, 1], &[0, 1, 1]]));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(ring(2))).unwrap(), i);
        assert_eq!(x.intersect(&ideal(3, &[&[1, 0, 0]])), Err(Error::AmbientMismatch));
    }

    #[test]
    fn decomposition_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        let comps: Vec<MonomialIdeal> =
            i.irreducible_decomposition().unwrap().iter().map(|c| c.ideal()).collect();
        assert_eq!(comps, [ideal(3, &[&[1, 0, 0]]), ideal(3, &[&[0, 1, 0], &[0, 0, 1]])]);
        let already = ideal(2, &[&[2, 0], &[0, 1]]);
        let d = already.irreducible_decomposition().unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].ideal(), already);
        assert_eq!(MonomialIdeal::zero(ring(2)).irreducible_decomposition(), Err(Error::ZeroIdeal));
        assert_eq!(MonomialIdeal::unit(ring(2)).associated_primes(), Err(Error::UnitIdeal));
    }

    #[test]
    fn primes_of_a_principal_ideal() {
        let xy = ideal(2, &[&[1, 1]]);
        let expect = [
            PrimeSupport::from_indices(ring(2), [0]).unwrap(),
            PrimeSupport::from_indices(ring(2), [1]).unwrap(),
        ];
        assert_eq!(xy.associated_primes().unwrap(), expect);
        assert_eq!(xy.minimal_primes().unwrap(), expect);
        let p = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(p.associated_primes().unwrap(), [p.is_prime().unwrap()]);
        assert_eq!(p.minimal_primes().unwrap(), [p.is_prime().unwrap()]);
        assert_eq!(p.height().unwrap(), 2);
    }

    #[test]
    fn boxes_and_divisors() {
        assert_eq!(box_monomials(&[2, 1]).len(), 2);
        assert_eq!(divisors(&Monomial::new([1, 2])).len(), 6);
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(i.standard_monomials_below(&[3, 3]).len(), 3);
    }
}
