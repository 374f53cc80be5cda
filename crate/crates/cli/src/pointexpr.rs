//! Integer combinations of Mordell–Weil generators: `"4*P"`, `"P - 3*T"`,
//! `"2*P1 + T2"`, `"0"`. `P`/`T` (aliases of `P1`/`T1`) name free and
//! torsion generators; coefficients are signed integers.

use anyhow::{bail, ensure, Context, Result};
use twodiv_core::{Curve, MordellWeilElement, Point, RatFunc};

use crate::spec::LoadedMw;

/// A parsed combination: one coefficient per free and torsion generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Combination {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl Combination {
    /// As a lattice element of the presentation.
    pub fn element(&self, mw: &LoadedMw) -> Result<MordellWeilElement> {
        mw.group
            .element(self.free.clone(), self.torsion.clone())
            .context("combination does not match the presentation's shape")
    }

    /// The exact point of `E(F_q(t))` the combination names.
    pub fn materialize(&self, curve: &Curve<RatFunc>, mw: &LoadedMw) -> Point<RatFunc> {
        let mut acc = Point::Infinity;
        let gens = self.free.iter().zip(&mw.free).chain(self.torsion.iter().zip(&mw.torsion));
        for (&n, g) in gens {
            let term = curve.mul_scalar(n.unsigned_abs(), g);
            let term = if n < 0 { curve.neg(&term) } else { term };
            acc = curve.add_points(&acc, &term);
        }
        acc
    }
}

/// Parse an expression against a presentation with `free_count` free and
/// `torsion_count` torsion generators.
pub fn parse_combination(
    text: &str,
    free_count: usize,
    torsion_count: usize,
) -> Result<Combination> {
    let mut combo =
        Combination { free: vec![0; free_count], torsion: vec![0; torsion_count] };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    ensure!(!compact.is_empty(), "empty point expression");

    let mut rest = compact.as_str();
    let mut leading_sign = 1i64;
    if let Some(tail) = rest.strip_prefix('-') {
        leading_sign = -1;
        rest = tail;
    } else if let Some(tail) = rest.strip_prefix('+') {
        rest = tail;
    }

    loop {
        let split = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(split);
        add_term(&mut combo, term, leading_sign)
            .with_context(|| format!("in point expression {text:?}"))?;
        if tail.is_empty() {
            return Ok(combo);
        }
        leading_sign = if tail.starts_with('-') { -1 } else { 1 };
        rest = &tail[1..];
    }
}

/// One term: `coeff*GEN`, `GEN`, or a bare `0`.
fn add_term(combo: &mut Combination, term: &str, sign: i64) -> Result<()> {
    ensure!(!term.is_empty(), "empty term");
    if term == "0" {
        return Ok(());
    }
    let (coeff, gen) = match term.split_once('*') {
        Some((n, gen)) => {
            let n: i64 = n.parse().with_context(|| format!("bad coefficient {n:?}"))?;
            (n, gen)
        }
        None => (1, term),
    };
    let (kind, index_text) = match gen.split_at(1) {
        ("P", idx) => ('P', idx),
        ("T", idx) => ('T', idx),
        _ => bail!("unknown generator {gen:?} (expected P, T, P<k>, or T<k>)"),
    };
    let index: usize = if index_text.is_empty() {
        1
    } else {
        index_text.parse().with_context(|| format!("bad generator index {index_text:?}"))?
    };
    ensure!(index >= 1, "generator indices start at 1");
    let slot = match kind {
        'P' => combo.free.get_mut(index - 1),
        _ => combo.torsion.get_mut(index - 1),
    };
    match slot {
        Some(c) => *c += sign * coeff,
        None => bail!("the presentation has no generator {gen}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_parse_with_signs_aliases_and_indices() {
        let c = parse_combination("4*P", 1, 1).unwrap();
        assert_eq!(c, Combination { free: vec![4], torsion: vec![0] });
        let c = parse_combination("P - 3*T", 1, 1).unwrap();
        assert_eq!(c, Combination { free: vec![1], torsion: vec![-3] });
        let c = parse_combination("-2*P1 + T2 + T2", 2, 2).unwrap();
        assert_eq!(c, Combination { free: vec![-2, 0], torsion: vec![0, 2] });
        let c = parse_combination("0", 1, 1).unwrap();
        assert_eq!(c, Combination { free: vec![0], torsion: vec![0] });
    }

    #[test]
    fn malformed_expressions_are_rejected() {
        assert!(parse_combination("Q", 1, 1).is_err());
        assert!(parse_combination("P3", 1, 1).is_err());
        assert!(parse_combination("", 1, 1).is_err());
        assert!(parse_combination("2**P", 1, 1).is_err());
        assert!(parse_combination("P +", 1, 1).is_err());
    }
}
