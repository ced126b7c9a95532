//! Prime filtrations `I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S` of `S/I` with
//! `I_j = (I_{j-1}, u_j)` and cyclic quotients `I_j / I_{j-1} ≅ S/P_j`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::complexes::{find_shelling, Face, ShellingOrder, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{box_monomials, divisors, MonomialIdeal, PrimeSupport};
use crate::invariants::mult_length;
use crate::monomial::Monomial;
use crate::polarization::{polarize_ideal, specialize_filtration};

/// A base ideal together with the ordered monomials adjoined to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFiltration {
    base: MonomialIdeal,
    adjoined: Vec<Monomial>,
}

/// One step `I_{j-1} ⊂ I_j = (I_{j-1}, u_j)` with its colon ideal.
#[derive(Debug, Clone)]
pub struct Step {
    pub before: MonomialIdeal,
    pub adjoined: Monomial,
    pub after: MonomialIdeal,
    pub colon: MonomialIdeal,
    pub prime: Option<PrimeSupport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Clean,
    PrettyClean,
    PrettyCleanAndClean,
    Neither,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Clean => "clean",
            Classification::PrettyClean => "pretty_clean",
            Classification::PrettyCleanAndClean => "pretty_clean_and_clean",
            Classification::Neither => "neither",
        }
    }

    pub fn is_pretty_clean(self) -> bool {
        matches!(self, Classification::PrettyClean | Classification::PrettyCleanAndClean)
    }

    pub fn is_clean(self) -> bool {
        matches!(self, Classification::Clean | Classification::PrettyCleanAndClean)
    }
}

/// Outcome of [`verify`]. Invalid filtrations report `Neither` and false flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub valid: bool,
    /// First failing step (1-based) and the reason.
    pub failure: Option<(usize, &'static str)>,
    /// `P_1, ..., P_r` in step order, with multiplicity.
    pub support: Vec<PrimeSupport>,
    pub classification: Classification,
    pub supp_equals_ass: bool,
    pub supp_equals_min: bool,
    /// `μ(P_i) ≥ μ(P_{i+1})` for every consecutive pair.
    pub mu_nonincreasing: bool,
}

impl FiltrationReport {
    pub fn length(&self) -> usize {
        self.support.len()
    }

    pub fn distinct_support(&self) -> Vec<PrimeSupport> {
        let mut s = self.support.clone();
        s.sort();
        s.dedup();
        s
    }

    /// How often `p` occurs as a quotient prime.
    pub fn multiplicity(&self, p: &PrimeSupport) -> usize {
        self.support.iter().filter(|q| *q == p).count()
    }
}

impl PrimeFiltration {
    pub fn new(base: MonomialIdeal, adjoined: Vec<Monomial>) -> Result<Self> {
        if let Some(u) = adjoined.iter().find(|u| u.len() != base.nvars()) {
            return Err(Error::LengthMismatch {
                expected: base.nvars(),
                got: u.len(),
            });
        }
        Ok(Self { base, adjoined })
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    /// `u_1, ..., u_r`; the exponent vectors are the shifts of the quotients.
    pub fn adjoined(&self) -> &[Monomial] {
        &self.adjoined
    }

    /// `ℓ(F)`.
    pub fn len(&self) -> usize {
        self.adjoined.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjoined.is_empty()
    }

    /// `I_0, ..., I_r`.
    pub fn ideals(&self) -> Vec<MonomialIdeal> {
        let mut out = Vec::with_capacity(self.adjoined.len() + 1);
        let mut cur = self.base.clone();
        out.push(cur.clone());
        for u in &self.adjoined {
            cur = cur.add_monomial(u).expect("lengths checked on construction");
            out.push(cur.clone());
        }
        out
    }

    pub fn steps(&self) -> Vec<Step> {
        let mut out = Vec::with_capacity(self.adjoined.len());
        let mut cur = self.base.clone();
        for u in &self.adjoined {
            let colon = cur.colon(u).expect("lengths checked on construction");
            let after = cur.add_monomial(u).expect("lengths checked on construction");
            out.push(Step {
                before: cur,
                adjoined: u.clone(),
                prime: colon.is_prime(),
                colon,
                after: after.clone(),
            });
            cur = after;
        }
        out
    }

    /// `u·F`: the filtration of `u·I` up to `(u)` with the same quotient primes.
    pub fn scaled(&self, u: &Monomial) -> Result<Self> {
        let base = self.base.mul_monomial(u)?;
        let adjoined = self
            .adjoined
            .iter()
            .map(|v| v.mul(u))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, adjoined)
    }
}

/// `(Ass(S/I), Min(S/I))`, with `S/0` having `{(0)}` and `S/S` nothing.
pub(crate) fn ass_and_min(ideal: &MonomialIdeal) -> (Vec<PrimeSupport>, Vec<PrimeSupport>) {
    if ideal.is_unit() {
        return (Vec::new(), Vec::new());
    }
    if ideal.is_zero() {
        let zero = PrimeSupport::new(ideal.ring().clone(), BitSet::new()).expect("empty support");
        return (alloc::vec![zero.clone()], alloc::vec![zero]);
    }
    (
        ideal.associated_primes().expect("proper nonzero"),
        ideal.minimal_primes().expect("proper nonzero"),
    )
}

/// Checks every step and classifies the filtration.
pub fn verify(f: &PrimeFiltration) -> FiltrationReport {
    let mut support = Vec::with_capacity(f.len());
    let mut failure = None;
    let mut cur = f.base.clone();
    for (k, u) in f.adjoined.iter().enumerate() {
        let step = k + 1;
        if cur.contains(u) {
            failure = Some((step, "adjoined monomial already in the ideal"));
            break;
        }
        match cur.colon(u).expect("lengths checked").is_prime() {
            Some(p) => support.push(p),
            None => {
                failure = Some((step, "colon ideal is not prime"));
                break;
            }
        }
        cur = cur.add_monomial(u).expect("lengths checked");
    }
    if failure.is_none() && !cur.is_unit() {
        failure = Some((f.len(), "chain does not end at the unit ideal"));
    }
    if failure.is_some() {
        return FiltrationReport {
            valid: false,
            failure,
            support,
            classification: Classification::Neither,
            supp_equals_ass: false,
            supp_equals_min: false,
            mu_nonincreasing: false,
        };
    }

    let (ass, min) = ass_and_min(&f.base);
    let mut distinct = support.clone();
    distinct.sort();
    distinct.dedup();
    let clean = distinct == min;
    let pretty_clean = !(0..support.len()).any(|i| {
        (i + 1..support.len())
            .any(|j| support[i].is_subset(&support[j]) && support[i] != support[j])
    });
    let classification = match (clean, pretty_clean) {
        (true, true) => Classification::PrettyCleanAndClean,
        (true, false) => Classification::Clean,
        (false, true) => Classification::PrettyClean,
        (false, false) => Classification::Neither,
    };
    let mu_nonincreasing = support.windows(2).all(|w| w[0].len() >= w[1].len());
    FiltrationReport {
        valid: true,
        failure: None,
        supp_equals_ass: distinct == ass,
        supp_equals_min: clean,
        support,
        classification,
        mu_nonincreasing,
    }
}

/// Monomials of `Ĩ \ I`, grouped by the least `k` with `u ∈ I : m^k`, each
/// group in lexicographic order. Adjoining them in this order gives steps
/// whose quotients are all `S/m`.
pub fn saturation_chain(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let sat = ideal.saturation();
    if sat == *ideal {
        return Vec::new();
    }
    // Every variable occurs in I here, and each u ∈ Ĩ \ I has u_i below the
    // maximal exponent of x_i.
    let bounds = ideal.max_exponents();
    let mut levels = alloc::vec![ideal.clone()];
    while levels.last() != Some(&sat) {
        let next = levels.last().expect("nonempty").colon_maximal();
        levels.push(next);
    }
    let mut graded: Vec<(usize, Monomial)> = box_monomials(&bounds)
        .into_iter()
        .filter(|w| !ideal.contains(w) && sat.contains(w))
        .map(|w| {
            let k = levels
                .iter()
                .position(|l| l.contains(&w))
                .expect("w lies in the saturation");
            (k, w)
        })
        .collect();
    graded.sort();
    graded.into_iter().map(|(_, w)| w).collect()
}

/// Candidate filtration from a facet order `a_1, ..., a_r` of `Γ(I)`:
/// `I_i = ∩_{k ≤ r-i} I(Γ(a_k))`, peeling facets from the end.
///
/// Each step adjoins the least minimal generator of `I_i` not in `I_{i-1}`;
/// the result must be verified, arbitrary orders need not give a filtration.
pub fn order_to_filtration(ideal: &MonomialIdeal, order: &[Face]) -> Result<PrimeFiltration> {
    let ring = ideal.ring().clone();
    let mut prefix = alloc::vec![MonomialIdeal::unit(ring.clone())];
    for a in order {
        if a.len() != ideal.nvars() {
            return Err(Error::AmbientMismatch);
        }
        let next = prefix
            .last()
            .expect("nonempty")
            .intersect(&a.ideal(ring.clone())?)?;
        prefix.push(next);
    }
    let r = order.len();
    let mut adjoined = Vec::with_capacity(r);
    let mut prev = ideal.clone();
    for i in 1..=r {
        let cur = &prefix[r - i];
        let u = cur
            .generators()
            .iter()
            .find(|g| !prev.contains(g))
            .or_else(|| cur.generators().first())
            .cloned()
            .unwrap_or_else(|| Monomial::one(ideal.nvars()));
        adjoined.push(u);
        prev = cur.clone();
    }
    PrimeFiltration::new(ideal.clone(), adjoined)
}

/// Filtration of a squarefree ideal from a shelling of its Stanley–Reisner
/// complex: adjoin `x^{R_r}, ..., x^{R_1}` (the last is `1`).
pub fn shelling_to_filtration(ideal: &MonomialIdeal, shelling: &ShellingOrder) -> Result<PrimeFiltration> {
    let n = ideal.nvars();
    let adjoined = shelling
        .restrictions()
        .iter()
        .rev()
        .map(|r| Monomial::from_support(n, r))
        .collect();
    PrimeFiltration::new(ideal.clone(), adjoined)
}

/// Some prime filtration of `S/I`, built greedily: at each step adjoin the
/// lexicographically first divisor `u` of the generator lcm with `u ∉ I_j`
/// and `I_j : u` prime. Such a `u` always exists, since an associated prime
/// `I_j : v` is also `I_j : gcd(v, lcm)`.
pub fn prime_filtration(ideal: &MonomialIdeal) -> PrimeFiltration {
    let n = ideal.nvars();
    let mut adjoined = Vec::new();
    if ideal.is_zero() {
        adjoined.push(Monomial::one(n));
    } else {
        let candidates = divisors(&ideal.lcm_of_generators());
        let mut cur = ideal.clone();
        while !cur.is_unit() {
            let u = candidates
                .iter()
                .find(|u| !cur.contains(u) && cur.colon(u).expect("same ring").is_prime().is_some())
                .expect("an associated prime is a colon by a divisor of the lcm")
                .clone();
            cur = cur.add_monomial(&u).expect("same ring");
            adjoined.push(u);
        }
    }
    PrimeFiltration::new(ideal.clone(), adjoined).expect("same ring")
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// A clean filtration of `S/I`, or `None` when `I` is not clean.
///
/// Squarefree ideals are clean exactly when their Stanley–Reisner complex is
/// shellable. Otherwise `I` is clean iff it is pretty clean with
/// `Ass = Min`: a pretty clean filtration has support `Ass`, and any clean
/// one is pretty clean with support `Min ⊇ Ass`.
pub fn is_clean(ideal: &MonomialIdeal) -> Result<Option<PrimeFiltration>> {
    require_proper_nonzero(ideal)?;
    if ideal.is_squarefree() {
        let complex = SimplicialComplex::from_squarefree(ideal)?;
        return match find_shelling(&complex) {
            Some(s) => shelling_to_filtration(ideal, &s).map(Some),
            None => Ok(None),
        };
    }
    let (ass, min) = ass_and_min(ideal);
    if ass != min {
        return Ok(None);
    }
    is_pretty_clean(ideal)
}

/// Direct search for a clean filtration: depth-first over adjunctions of
/// divisors of the generator lcm whose colon is a minimal prime, pruning
/// states with an embedded associated prime and memoizing dead ideals.
///
/// Independent of the polarization route taken by [`is_clean`].
pub fn search_clean_filtration(ideal: &MonomialIdeal) -> Result<Option<PrimeFiltration>> {
    require_proper_nonzero(ideal)?;
    let min = ideal.minimal_primes()?;
    let candidates = divisors(&ideal.lcm_of_generators());
    let mut dead = BTreeSet::new();
    let mut path = Vec::new();
    if clean_dfs(ideal, &min, &candidates, &mut dead, &mut path) {
        Ok(Some(PrimeFiltration::new(ideal.clone(), path)?))
    } else {
        Ok(None)
    }
}

fn clean_dfs(
    cur: &MonomialIdeal,
    min: &[PrimeSupport],
    candidates: &[Monomial],
    dead: &mut BTreeSet<Vec<Monomial>>,
    path: &mut Vec<Monomial>,
) -> bool {
    if cur.is_unit() {
        return true;
    }
    if dead.contains(cur.generators()) {
        return false;
    }
    let (ass, _) = ass_and_min(cur);
    if ass.iter().all(|p| min.contains(p)) {
        for u in candidates {
            if cur.contains(u) {
                continue;
            }
            let Some(p) = cur.colon(u).expect("same ring").is_prime() else {
                continue;
            };
            if !min.contains(&p) {
                continue;
            }
            let next = cur.add_monomial(u).expect("same ring");
            path.push(u.clone());
            if clean_dfs(&next, min, candidates, dead, path) {
                return true;
            }
            path.pop();
        }
    }
    dead.insert(cur.generators().to_vec());
    false
}

/// A pretty clean filtration of `S/I`, or `None` when none exists.
///
/// Polarizes, looks for a clean filtration of `I^p`, and specializes it.
pub fn is_pretty_clean(ideal: &MonomialIdeal) -> Result<Option<PrimeFiltration>> {
    require_proper_nonzero(ideal)?;
    let (ring, ip) = polarize_ideal(ideal)?;
    let complex = SimplicialComplex::from_squarefree(&ip)?;
    let Some(shelling) = find_shelling(&complex) else {
        return Ok(None);
    };
    let g = shelling_to_filtration(&ip, &shelling)?;
    let (f, _) = specialize_filtration(&ring.specialization(), &g)?;
    Ok(Some(f))
}

/// Pretty clean filtration built without search, following the constructive
/// proofs for `n ≤ 3` or height `≥ n - 1`:
///
/// 1. adjoin the saturation chain of `Ĩ \ I` (quotients `S/m`);
/// 2. for saturated height `n - 1`, shell the primary components one block at
///    a time (each block in increasing degree) and peel the facets;
/// 3. for height 1 in at most three variables, write `Ĩ = uJ`, filter `uJ`
///    up to `(u)` by `u` times a filtration of `J`, then walk down the
///    principal staircase of `(u)`.
pub fn construct_pretty_clean_small(ideal: &MonomialIdeal) -> Result<PrimeFiltration> {
    let adjoined = construct_adjoined(ideal)?;
    PrimeFiltration::new(ideal.clone(), adjoined)
}

fn construct_adjoined(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let n = ideal.nvars();
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    if ideal.is_zero() {
        return Ok(alloc::vec![Monomial::one(n)]);
    }
    let mut out = saturation_chain(ideal);
    let sat = ideal.saturation();
    if sat.is_unit() {
        return Ok(out);
    }
    let height = sat.height()?;
    if height + 1 >= n {
        out.extend(codim_one_shelling(&sat)?);
    } else if n <= 3 {
        let u = sat.gcd_of_generators();
        let j = sat.divide_by(&u).expect("gcd divides every generator");
        for v in construct_adjoined(&j)? {
            out.push(v.mul(&u)?);
        }
        out.extend(staircase(&u));
    } else {
        return Err(Error::Precondition(
            "needs at most three variables or height at least n - 1",
        ));
    }
    Ok(out)
}

/// `(u) ⊂ (x_{i_1}^{a_1 - 1} u_1) ⊂ ... ⊂ (u_1) ⊂ ... ⊂ (x_{i_k}) ⊂ S`
/// where `u_t` drops the first `t` variables of `u`.
fn staircase(u: &Monomial) -> Vec<Monomial> {
    let n = u.len();
    let support: Vec<usize> = u.support().iter().collect();
    let mut out = Vec::new();
    for (t, &i) in support.iter().enumerate() {
        let mut rest = Monomial::one(n);
        for &k in &support[t + 1..] {
            rest = rest.with_exponent(k, u.exponent(k));
        }
        for e in (0..u.exponent(i)).rev() {
            out.push(rest.with_exponent(i, e));
        }
    }
    out
}

/// Saturated ideal whose minimal primes all have height `n - 1`.
fn codim_one_shelling(sat: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let n = sat.nvars();
    let comps = sat.irreducible_decomposition()?;
    let mut order: Vec<Face> = Vec::new();
    for j in 0..n {
        let block: Vec<_> = comps
            .iter()
            .filter(|c| c.support_size() == n - 1 && c.powers()[j] == 0)
            .collect();
        if block.is_empty() {
            continue;
        }
        let mut primary = MonomialIdeal::unit(sat.ring().clone());
        for c in &block {
            primary = primary.intersect(&c.ideal())?;
        }
        let mut bounds = primary.max_exponents();
        bounds[j] = 1;
        let mut standard = primary.standard_monomials_below(&bounds);
        standard.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        for w in standard {
            let mut face: Vec<Option<u32>> = w.exponents().iter().map(|&e| Some(e)).collect();
            face[j] = None;
            order.push(Face::from_options(&face));
        }
    }
    if comps.iter().any(|c| c.support_size() != n - 1) {
        return Err(Error::Precondition("saturated ideal is not of pure height n - 1"));
    }
    Ok(order_to_filtration(sat, &order)?.adjoined().to_vec())
}

/// `mult_I(P) ≤ #{j : P_j = P}` for every `P ∈ Ass(S/I)`.
pub fn mult_bound_check(f: &PrimeFiltration) -> Result<bool> {
    let report = verify(f);
    if !report.valid {
        let (step, reason) = report.failure.unwrap_or((0, "invalid"));
        return Err(Error::InvalidFiltration { step, reason });
    }
    let (ass, _) = ass_and_min(f.base());
    for p in &ass {
        if mult_length(f.base(), p)? > report.multiplicity(p) {
            return Ok(false);
        }
    }
    Ok(true)
}
