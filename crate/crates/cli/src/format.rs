//! Line-oriented input files.
//!
//! ```text
//! # comment
//! vars: x y z
//! gen: x^2*y
//! adjoin: x*y
//! space: x | x z
//! space: 1 | -
//! ```
//!
//! `vars:` comes first; `gen:` lines give the ideal, `adjoin:` lines an
//! ordered filtration, `space:` lines a Stanley decomposition.

use std::fmt::Write as _;

use cleanideal_core::filtration::PrimeFiltration;
use cleanideal_core::stanley::{StanleyDecomposition, StanleySpace};
use cleanideal_core::{BitSet, Monomial, MonomialIdeal, Ring, VariableSet};

/// Largest exponent the parser accepts.
pub const MAX_EXPONENT: u32 = 65_535;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone)]
pub struct InputFile {
    pub ring: Ring,
    pub gens: Vec<Monomial>,
    pub adjoined: Vec<Monomial>,
    pub spaces: Vec<StanleySpace>,
}

impl InputFile {
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.clone(), self.gens.iter().cloned())
            .expect("parsed monomials match the ring")
    }

    pub fn filtration(&self) -> PrimeFiltration {
        PrimeFiltration::new(self.ideal(), self.adjoined.clone()).expect("parsed monomials match the ring")
    }

    pub fn decomposition(&self) -> StanleyDecomposition {
        StanleyDecomposition::new(self.ideal(), self.spaces.clone()).expect("parsed spaces match the ring")
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_monomial(ring: &Ring, text: &str, line: usize) -> Result<Monomial, ParseError> {
    let text = text.trim();
    let mut e = vec![0u32; ring.len()];
    if text == "1" {
        return Ok(Monomial::new(e));
    }
    if text.is_empty() {
        return err(line, "empty monomial");
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, x)) => {
                let x = x.trim();
                if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
                    return err(line, format!("bad exponent in `{factor}`"));
                }
                let v: u64 = x.parse().unwrap_or(u64::MAX);
                if v > u64::from(MAX_EXPONENT) {
                    return err(line, format!("exponent {x} exceeds {MAX_EXPONENT}"));
                }
                (n.trim(), v as u32)
            }
            None => (factor, 1),
        };
        if !is_name(name) {
            return err(line, format!("`{factor}` is not a monomial factor"));
        }
        let Some(i) = ring.index_of(name) else {
            return err(line, format!("unknown variable `{name}`"));
        };
        e[i] = match e[i].checked_add(exp) {
            Some(v) if v <= MAX_EXPONENT => v,
            _ => return err(line, format!("exponent of `{name}` exceeds {MAX_EXPONENT}")),
        };
    }
    Ok(Monomial::new(e))
}

fn parse_space(ring: &Ring, text: &str, line: usize) -> Result<StanleySpace, ParseError> {
    let Some((u, z)) = text.split_once('|') else {
        return err(line, "space needs `<monomial> | <variables or ->`");
    };
    let u = parse_monomial(ring, u, line)?;
    let z = z.trim();
    let mut set = BitSet::new();
    if z != "-" {
        for name in z.split_whitespace() {
            let Some(i) = ring.index_of(name) else {
                return err(line, format!("unknown variable `{name}`"));
            };
            if set.contains(i) {
                return err(line, format!("variable `{name}` repeated"));
            }
            set.insert(i);
        }
    }
    Ok(StanleySpace::new(u, set))
}

pub fn parse(text: &str) -> Result<InputFile, ParseError> {
    let mut ring: Option<Ring> = None;
    let mut gens = Vec::new();
    let mut adjoined = Vec::new();
    let mut spaces = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return err(line, format!("expected `key: value`, got `{content}`"));
        };
        let (key, value) = (key.trim(), value.trim());
        if key == "vars" {
            if ring.is_some() {
                return err(line, "`vars:` given twice");
            }
            let names: Vec<&str> = value.split_whitespace().collect();
            if let Some(bad) = names.iter().find(|n| !is_name(n)) {
                return err(line, format!("`{bad}` is not a variable name"));
            }
            ring = Some(VariableSet::new(names).or_else(|e| err(line, e.to_string()))?);
            continue;
        }
        let Some(r) = ring.as_ref() else {
            return err(line, "`vars:` must come first");
        };
        match key {
            "gen" => gens.push(parse_monomial(r, value, line)?),
            "adjoin" => adjoined.push(parse_monomial(r, value, line)?),
            "space" => spaces.push(parse_space(r, value, line)?),
            other => return err(line, format!("unknown key `{other}`")),
        }
    }
    let Some(ring) = ring else {
        return err(0, "missing `vars:` line");
    };
    Ok(InputFile {
        ring,
        gens,
        adjoined,
        spaces,
    })
}

pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let ring = ideal.ring();
    let mut out = format!("vars: {}\n", ring.names().join(" "));
    for g in ideal.generators() {
        let _ = writeln!(out, "gen: {}", ring.display(g));
    }
    out
}

pub fn render_filtration(f: &PrimeFiltration) -> String {
    let ring = f.base().ring();
    let mut out = render_ideal(f.base());
    for u in f.adjoined() {
        let _ = writeln!(out, "adjoin: {}", ring.display(u));
    }
    out
}

pub fn render_space(ring: &Ring, s: &StanleySpace) -> String {
    let z: Vec<&str> = s.z().iter().map(|i| ring.name(i)).collect();
    let z = if z.is_empty() { "-".to_string() } else { z.join(" ") };
    format!("{} | {}", ring.display(s.u()), z)
}

pub fn render_decomposition(d: &StanleyDecomposition) -> String {
    let ring = d.ideal().ring();
    let mut out = render_ideal(d.ideal());
    for s in d.spaces() {
        let _ = writeln!(out, "space: {}", render_space(ring, s));
    }
    out
}
