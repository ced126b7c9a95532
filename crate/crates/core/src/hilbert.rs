//! Hilbert series `Q(t) / (1 - t)^d` with integer numerators.

use alloc::vec::Vec;
use core::fmt;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Above this many generators the numerator is computed by pivot splitting
/// instead of inclusion–exclusion over generator subsets.
const INCLUSION_EXCLUSION_LIMIT: usize = 12;

#[derive(Debug, Clone)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    denominator_power: usize,
}

impl HilbertSeries {
    /// `numerator[k]` is the coefficient of `t^k`.
    pub fn new(numerator: Vec<i64>, denominator_power: usize) -> Self {
        let mut s = Self {
            numerator,
            denominator_power,
        };
        s.trim();
        s
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), 0)
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_power(&self) -> usize {
        self.denominator_power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    fn trim(&mut self) {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        if self.numerator.is_empty() {
            self.denominator_power = 0;
        }
    }

    /// Cancels every common factor `1 - t`, leaving `Q(1) ≠ 0`.
    pub fn reduced(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut d = self.denominator_power;
        while d > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            // Q = (1 - t) Q' with Q'_k = Σ_{j ≤ k} Q_j; the top prefix sum is 0.
            let mut acc = 0;
            for c in num.iter_mut() {
                acc += *c;
                *c = acc;
            }
            num.pop();
            d -= 1;
        }
        Self::new(num, d)
    }

    /// Krull dimension; `None` for the zero module.
    pub fn dimension(&self) -> Option<usize> {
        let r = self.reduced();
        (!r.is_zero()).then_some(r.denominator_power)
    }

    /// `Q(1)` of the reduced form.
    pub fn multiplicity(&self) -> i64 {
        self.reduced().numerator.iter().sum()
    }

    /// Coefficients of `t^0, ..., t^{up_to}` in the power series expansion.
    pub fn coefficients(&self, up_to: usize) -> Vec<i64> {
        let mut c = alloc::vec![0i64; up_to + 1];
        for (k, &q) in self.numerator.iter().enumerate().take(up_to + 1) {
            c[k] = q;
        }
        for _ in 0..self.denominator_power {
            let mut acc = 0;
            for x in c.iter_mut() {
                acc += *x;
                *x = acc;
            }
        }
        c
    }

    /// Brings `other` over the denominator `(1 - t)^d` for `d ≥` both powers.
    fn lifted(&self, d: usize) -> Vec<i64> {
        let mut num = self.numerator.clone();
        for _ in self.denominator_power..d {
            num = mul_one_minus_t_pow(&num, 1, 1);
        }
        num
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.denominator_power.max(other.denominator_power);
        let a = self.lifted(d);
        let b = other.lifted(d);
        let mut num = alloc::vec![0i64; a.len().max(b.len())];
        for (k, x) in a.iter().enumerate() {
            num[k] += x;
        }
        for (k, x) in b.iter().enumerate() {
            num[k] += x;
        }
        Self::new(num, d)
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.reduced(), other.reduced());
        a.numerator == b.numerator && a.denominator_power == b.denominator_power
    }
}

impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let abs = c.unsigned_abs();
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if !first {
                write!(f, " ")?;
            }
            match (k, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => write!(f, "t")?,
                _ => write!(f, "{abs}*t")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")/(1-t)^{}", self.denominator_power)
    }
}

/// `p · (1 - t^e)^times`.
fn mul_one_minus_t_pow(p: &[i64], e: usize, times: usize) -> Vec<i64> {
    let mut out = p.to_vec();
    for _ in 0..times {
        let mut next = alloc::vec![0i64; out.len() + e];
        for (k, &c) in out.iter().enumerate() {
            next[k] += c;
            next[k + e] -= c;
        }
        out = next;
    }
    out
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize, sign: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += sign * c;
    }
}

/// Hilbert series of `S/I` over `(1 - t)^n`.
pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    let num = if ideal.mu() <= INCLUSION_EXCLUSION_LIMIT {
        inclusion_exclusion(ideal.generators())
    } else {
        pivot_numerator(ideal.generators().to_vec())
    };
    HilbertSeries::new(num, ideal.nvars())
}

/// `Σ_{A ⊆ gens} (-1)^{|A|} t^{deg lcm(A)}`.
fn inclusion_exclusion(gens: &[Monomial]) -> Vec<i64> {
    let mut num = Vec::new();
    let Some(first) = gens.first() else {
        return alloc::vec![1];
    };
    let mut stack: Vec<(usize, Monomial, i64)> = alloc::vec![(0, Monomial::one(first.len()), 1)];
    while let Some((next, lcm, sign)) = stack.pop() {
        add_shifted(&mut num, &[1], lcm.degree() as usize, sign);
        for (k, g) in gens.iter().enumerate().skip(next) {
            stack.push((k + 1, lcm.lcm(g).expect("same ring"), -sign));
        }
    }
    num
}

/// `N(I) = N(I + (x_i)) + t·N(I : x_i)` on a variable of a nonlinear
/// generator, with pairwise coprime generators as the base case.
fn pivot_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return alloc::vec![1];
    }
    let n = gens[0].len();
    let mut used = alloc::vec![0usize; n];
    let mut coprime = true;
    for g in &gens {
        for i in g.support().iter() {
            used[i] += 1;
            if used[i] > 1 {
                coprime = false;
            }
        }
    }
    if coprime {
        return gens.iter().fold(alloc::vec![1], |acc, g| {
            mul_one_minus_t_pow(&acc, g.degree() as usize, 1)
        });
    }
    let pivot = (0..n)
        .filter(|&i| gens.iter().any(|g| g.exponent(i) > 0 && g.degree() > 1))
        .max_by_key(|&i| (used[i], core::cmp::Reverse(i)))
        .expect("a shared variable lies in a nonlinear generator");
    let x = Monomial::var(n, pivot);
    let mut sum: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    sum.push(x.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&x)).collect();
    let mut num = pivot_numerator(minimalize(sum));
    add_shifted(&mut num, &pivot_numerator(minimalize(colon)), 1, 1);
    num
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// `Σ t^{deg u} (1 - t)^{n - |Z|} / (1 - t)^n` over spaces given as
/// `(deg u, |Z|)`.
pub fn hilbert_of_spaces<I: IntoIterator<Item = (u64, usize)>>(n: usize, spaces: I) -> HilbertSeries {
    let mut num = Vec::new();
    for (deg, dim) in spaces {
        let term = mul_one_minus_t_pow(&[1], 1, n.saturating_sub(dim));
        add_shifted(&mut num, &term, deg as usize, 1);
    }
    HilbertSeries::new(num, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ring, VariableSet};
    use alloc::string::ToString;

    fn xy() -> Ring {
        VariableSet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn series_of_small_quotients() {
        let i = MonomialIdeal::from_exponents(xy(), &[&[1, 1]]).unwrap();
        let h = hilbert_series(&i);
        assert_eq!(h.numerator(), [1, 0, -1]);
        assert_eq!(h.denominator_power(), 2);
        assert_eq!(h.coefficients(4), [1, 2, 2, 2, 2]);
        assert_eq!(h.reduced().numerator(), [1, 1]);
        assert_eq!(h.dimension(), Some(1));
        assert_eq!(h.multiplicity(), 2);

        let s = hilbert_series(&MonomialIdeal::zero(xy()));
        assert_eq!((s.numerator(), s.denominator_power()), (&[1][..], 2));

        let m2 = MonomialIdeal::from_exponents(xy(), &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let r = hilbert_series(&m2).reduced();
        assert_eq!((r.numerator(), r.denominator_power()), (&[1, 2][..], 0));

        let unit = hilbert_series(&MonomialIdeal::unit(xy()));
        assert!(unit.is_zero());
        assert_eq!(unit.dimension(), None);
    }

    #[test]
    fn pivot_agrees_with_inclusion_exclusion() {
        let gens = [
            Monomial::new([2, 1, 0]),
            Monomial::new([1, 1, 1]),
            Monomial::new([0, 2, 1]),
            Monomial::new([0, 0, 3]),
            Monomial::new([1, 0, 2]),
        ];
        let a = HilbertSeries::new(inclusion_exclusion(&gens), 3);
        let b = HilbertSeries::new(pivot_numerator(gens.to_vec()), 3);
        assert_eq!(a.numerator(), b.numerator());
    }

    #[test]
    fn space_sums() {
        // x K[x] ⊕ y K[y] ⊕ K
        let h = hilbert_of_spaces(2, [(1, 1), (1, 1), (0, 0)]);
        let i = MonomialIdeal::from_exponents(xy(), &[&[1, 1]]).unwrap();
        assert_eq!(h, hilbert_series(&i));
        // x K[x] ⊕ K[y]
        let g = hilbert_of_spaces(2, [(1, 1), (0, 1)]);
        assert_eq!(g, hilbert_series(&i));
        assert_eq!(hilbert_of_spaces(3, [(0, 2)]).reduced().denominator_power(), 2);
        assert_eq!(h.to_string(), "(1 - t^2)/(1-t)^2");
    }
}
