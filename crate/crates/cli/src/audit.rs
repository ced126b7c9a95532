//! Seeded random ideals and the invariant suite run on each of them.

use cleanideal_core::complexes::facets;
use cleanideal_core::filtration::{
    construct_pretty_clean_small, is_clean, is_pretty_clean, mult_bound_check, prime_filtration,
    verify, PrimeFiltration,
};
use cleanideal_core::hilbert::hilbert_series;
use cleanideal_core::invariants::{adeg, depth, multiplicity, mult_length, TAYLOR_LIMIT};
use cleanideal_core::polarization::{polarize_ideal, PolarizedRing};
use cleanideal_core::stanley::{forced_zero_spaces, from_filtration, hilbert_of_decomposition, verify_decomposition};
use cleanideal_core::{BitSet, Monomial, MonomialIdeal, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::format::render_ideal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditConfig {
    pub nvars: usize,
    pub max_exponent: u32,
    pub max_generators: usize,
    pub count: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            nvars: 3,
            max_exponent: 4,
            max_generators: 8,
            count: 100,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub ideal: String,
    pub property: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub checked: usize,
    pub pretty_clean: usize,
    pub clean: usize,
    pub violations: Vec<Violation>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_exponent: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.random_range(0..=max_exponent)))
}

/// A proper nonzero ideal with between 1 and `max_generators` random
/// generators of exponent at most `max_exponent`.
pub fn random_ideal<R: Rng>(rng: &mut R, ring: &Ring, max_exponent: u32, max_generators: usize) -> MonomialIdeal {
    let n = ring.len();
    let k = rng.random_range(1..=max_generators.max(1));
    let gens: Vec<Monomial> = (0..k)
        .map(|_| loop {
            let m = random_monomial(rng, n, max_exponent.max(1));
            if !m.is_one() {
                break m;
            }
        })
        .collect();
    MonomialIdeal::new(ring.clone(), gens).expect("generators match the ring")
}

/// Squarefree variant: random nonempty supports.
pub fn random_squarefree_ideal<R: Rng>(rng: &mut R, ring: &Ring, max_generators: usize) -> MonomialIdeal {
    random_ideal(rng, ring, 1, max_generators)
}

type Found = Vec<(&'static str, String)>;

fn check(found: &mut Found, ok: bool, property: &'static str, detail: impl FnOnce() -> String) {
    if !ok {
        found.push((property, detail()));
    }
}

/// Length bound: `ℓ(F) ≥ adeg(I)`, with equality exactly for pretty clean `F`.
pub fn check_length_bound(f: &PrimeFiltration, adeg: usize, found: &mut Found) {
    let rep = verify(f);
    check(found, rep.valid, "filtration verifies", || format!("{:?}", rep.failure));
    if !rep.valid {
        return;
    }
    check(found, f.len() >= adeg, "length at least adeg", || format!("{} < {adeg}", f.len()));
    check(
        found,
        (f.len() == adeg) == rep.classification.is_pretty_clean(),
        "length equals adeg iff pretty clean",
        || format!("length {} adeg {adeg} {}", f.len(), rep.classification.as_str()),
    );
    check(found, mult_bound_check(f).unwrap_or(false), "mult bound", String::new);
}

/// Polarization transfer for `I`, a second ideal `J` and a monomial `u`.
pub fn check_polarization(i: &MonomialIdeal, j: &MonomialIdeal, u: &Monomial, found: &mut Found) {
    let ring = PolarizedRing::covering(
        i.ring().clone(),
        i.generators().iter().chain(j.generators()).chain([u]),
    )
    .expect("same ring");
    let pi = ring.specialization();
    let ip = ring.polarize_ideal(i).expect("covered");
    let jp = ring.polarize_ideal(j).expect("covered");
    let up = ring.polarize_monomial(u).expect("covered");

    let colon = i.colon(u).expect("same ring").is_prime();
    let colon_p = ip.colon(&up).expect("same ring").is_prime();
    check(found, colon.is_some() == colon_p.is_some(), "colon primality transfers", || {
        format!("u = {}", i.ring().display(u))
    });
    if let (Some(p), Some(q)) = (&colon, &colon_p) {
        check(found, pi.prime(q).ok().as_ref() == Some(p), "colon specializes", String::new);
    }

    let meet = i.intersect(j).expect("same ring");
    let meet_p = ring.polarize_ideal(&meet).expect("covered");
    check(
        found,
        meet_p == ip.intersect(&jp).expect("same ring"),
        "polarization commutes with intersection",
        String::new,
    );
    check(found, pi.ideal(&ip).ok().as_ref() == Some(i), "specialization inverts polarization", String::new);

    let (_, own) = polarize_ideal(i).expect("nonzero");
    let fs = facets(i).expect("proper nonzero").len();
    let min_p = own.minimal_primes().expect("proper nonzero").len();
    check(found, fs == min_p, "facets match minimal primes of the polarization", || {
        format!("{fs} facets, {min_p} primes")
    });
    let a = adeg(i).expect("proper nonzero");
    let ap = adeg(&ip).expect("proper nonzero");
    check(found, a == ap, "adeg is polarization invariant", || format!("{a} vs {ap}"));
}

/// All invariants for one proper nonzero ideal. Returns the violations and
/// whether the ideal was found pretty clean and clean.
pub fn audit_ideal(i: &MonomialIdeal) -> (Found, bool, bool) {
    let mut found = Vec::new();
    let n = i.nvars();
    let a = adeg(i).expect("proper nonzero");
    let ass = i.associated_primes().expect("proper nonzero");

    let total: usize = ass.iter().map(|p| mult_length(i, p).unwrap_or(0)).sum();
    check(&mut found, total == a, "length multiplicities sum to adeg", || format!("{total} vs {a}"));
    check(
        &mut found,
        ass.iter().all(|p| mult_length(i, p).unwrap_or(0) > 0),
        "associated primes have positive length multiplicity",
        String::new,
    );

    let pc = is_pretty_clean(i).expect("proper nonzero");
    if let Some(f) = &pc {
        let rep = verify(f);
        check(&mut found, rep.classification.is_pretty_clean(), "pretty clean witness", || {
            rep.classification.as_str().to_string()
        });
        check(&mut found, rep.supp_equals_ass, "pretty clean support is Ass", String::new);
        check_length_bound(f, a, &mut found);
    }
    if n <= 3 {
        check(&mut found, pc.is_some(), "three variables are pretty clean", String::new);
    }
    let height = i.height().expect("nonzero");
    if n <= 3 || height + 1 >= n {
        match construct_pretty_clean_small(i) {
            Ok(f) => {
                let rep = verify(&f);
                check(&mut found, rep.classification.is_pretty_clean(), "construction is pretty clean", || {
                    format!("{:?} {}", rep.failure, rep.classification.as_str())
                });
                check_length_bound(&f, a, &mut found);
            }
            Err(e) => found.push(("construction applies", e.to_string())),
        }
    }

    let clean = is_clean(i).expect("proper nonzero");
    if let Some(f) = &clean {
        check(&mut found, verify(f).classification.is_clean(), "clean witness", String::new);
        check(&mut found, pc.is_some(), "clean implies pretty clean", String::new);
    }

    let g = prime_filtration(i);
    check_length_bound(&g, a, &mut found);
    match from_filtration(&g) {
        Ok(d) => {
            check(&mut found, verify_decomposition(&d), "filtration decomposition verifies", String::new);
            check(
                &mut found,
                hilbert_of_decomposition(&d) == hilbert_series(i),
                "decomposition Hilbert series",
                String::new,
            );
            let h = hilbert_series(i);
            let dim = h.dimension().expect("proper");
            let top = d.spaces().iter().filter(|s| s.dimension() == dim).count() as u64;
            let e = multiplicity(i).expect("proper");
            check(&mut found, top == e, "top-dimensional spaces count the multiplicity", || {
                format!("{top} vs {e}")
            });
            let empty = BitSet::new();
            check(
                &mut found,
                forced_zero_spaces(i)
                    .iter()
                    .all(|w| d.spaces().iter().any(|s| s.u() == w && s.z() == &empty)),
                "forced zero-dimensional spaces",
                String::new,
            );
        }
        Err(e) => found.push(("filtration decomposition", e.to_string())),
    }

    if i.mu() <= TAYLOR_LIMIT {
        let dp = depth(i).expect("proper nonzero");
        check(
            &mut found,
            ass.iter().all(|p| dp <= n - p.len()),
            "depth bounded by associated prime dimensions",
            || format!("depth {dp}"),
        );
    }
    let is_pc = pc.is_some();
    (found, is_pc, clean.is_some())
}

pub fn run_audit(cfg: &AuditConfig) -> AuditSummary {
    let ring = cleanideal_core::VariableSet::numbered("x", cfg.nvars).expect("at least one variable");
    let mut rng = rng(cfg.seed);
    let mut summary = AuditSummary::default();
    for _ in 0..cfg.count {
        let i = random_ideal(&mut rng, &ring, cfg.max_exponent, cfg.max_generators);
        let j = random_ideal(&mut rng, &ring, cfg.max_exponent, cfg.max_generators);
        let u = random_monomial(&mut rng, cfg.nvars, cfg.max_exponent);
        let (mut found, pc, clean) = audit_ideal(&i);
        check_polarization(&i, &j, &u, &mut found);
        summary.checked += 1;
        summary.pretty_clean += usize::from(pc);
        summary.clean += usize::from(clean);
        let text = render_ideal(&i);
        summary.violations.extend(found.into_iter().map(|(property, detail)| Violation {
            ideal: text.clone(),
            property,
            detail,
        }));
    }
    summary
}
