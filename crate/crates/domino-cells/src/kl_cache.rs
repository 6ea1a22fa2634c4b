//! Persistent cache of Kazhdan–Lusztig bases, and cell computation over a
//! worker pool.
//!
//! A cache file holds the `T`-expansion of every `C_w` for one `(n, a, b)`:
//!
//! ```text
//! domino-cells kl-basis v1
//! n 2 a 1 b 2 order 8
//! [1,2] = [1,2] 0:1
//! [-1,2] = [1,2] -2:1; [-1,2] 0:1
//! ```
//!
//! Each line after the header is `[w] = [y] e:c e:c; [y] ...`, listing the
//! coefficient of `T_y` as exponent/coefficient pairs.

use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};

use domino_cells_core::hecke::{Expansion, HeckeError, KlBasis, KlCellData, LaurentPolynomial, WeightFunction, WeylGroupB};
use domino_cells_core::SignedPermutation;
use rayon::prelude::*;

const MAGIC: &str = "domino-cells kl-basis v1";

#[derive(Debug)]
pub enum CacheError {
    Io(io::Error),
    Parse { line: usize, message: String },
    Hecke(HeckeError),
}

impl fmt::Display for CacheError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CacheError::Io(e) => write!(f, "cache IO: {e}"),
            CacheError::Parse { line, message } => write!(f, "cache line {line}: {message}"),
            CacheError::Hecke(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CacheError {}

impl From<io::Error> for CacheError {
    fn from(e: io::Error) -> Self {
        CacheError::Io(e)
    }
}

impl From<HeckeError> for CacheError {
    fn from(e: HeckeError) -> Self {
        CacheError::Hecke(e)
    }
}

pub fn cache_file_name(n: usize, weight: WeightFunction) -> String {
    format!("kl-basis-n{n}-a{}-b{}.txt", weight.a, weight.b)
}

fn window(w: &SignedPermutation) -> String {
    format!("[{w}]")
}

pub fn write_basis(basis: &KlBasis, out: &mut impl Write) -> io::Result<()> {
    let group = basis.group();
    let weight = basis.algebra().weight();
    writeln!(out, "{MAGIC}")?;
    writeln!(out, "n {} a {} b {} order {}", group.rank(), weight.a, weight.b, group.order())?;
    for (w, exp) in basis.expansions().iter().enumerate() {
        let terms: Vec<String> = exp
            .iter()
            .map(|(y, c)| {
                let monomials: Vec<String> = c.terms().map(|(e, k)| format!("{e}:{k}")).collect();
                format!("{} {}", window(group.element(*y)), monomials.join(" "))
            })
            .collect();
        writeln!(out, "{} = {}", window(group.element(w)), terms.join("; "))?;
    }
    Ok(())
}

pub fn read_basis(input: impl BufRead, n: usize, weight: WeightFunction) -> Result<KlBasis, CacheError> {
    let group = WeylGroupB::new(n);
    let mut lines = input.lines().enumerate();
    let mut next = |what: &str| -> Result<(usize, String), CacheError> {
        match lines.next() {
            Some((i, l)) => Ok((i + 1, l?)),
            None => Err(CacheError::Parse { line: 0, message: format!("missing {what}") }),
        }
    };
    let (line, magic) = next("header")?;
    if magic.trim() != MAGIC {
        return Err(CacheError::Parse { line, message: "not a kl-basis cache file".into() });
    }
    let (line, header) = next("parameters")?;
    let expected = format!("n {n} a {} b {} order {}", weight.a, weight.b, group.order());
    if header.trim() != expected {
        return Err(CacheError::Parse { line, message: format!("expected {expected:?}, found {header:?}") });
    }
    let mut c: Vec<Option<Expansion>> = vec![None; group.order()];
    for _ in 0..group.order() {
        let (line, text) = next("expansion")?;
        let bad = |message: String| CacheError::Parse { line, message };
        let parse_window = |s: &str| -> Result<usize, CacheError> {
            let w: SignedPermutation = s.parse().map_err(|e| bad(format!("{e}")))?;
            group.index_of(&w).ok_or_else(|| bad(format!("{s} is not in W_{n}")))
        };
        let (lhs, rhs) = text.split_once(" = ").ok_or_else(|| bad("missing ' = '".into()))?;
        let w = parse_window(lhs.trim())?;
        let mut exp = Vec::new();
        for term in rhs.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let mut parts = term.split_whitespace();
            let y = parse_window(parts.next().unwrap_or_default())?;
            let monomials = parts
                .map(|m| {
                    let (e, k) = m.split_once(':').ok_or_else(|| bad(format!("bad monomial {m:?}")))?;
                    Ok((e.parse().map_err(|_| bad(format!("bad exponent {e:?}")))?, k.parse().map_err(|_| bad(format!("bad coefficient {k:?}")))?))
                })
                .collect::<Result<Vec<(i32, i64)>, CacheError>>()?;
            exp.push((y, LaurentPolynomial::from_terms(monomials)));
        }
        exp.sort_by_key(|(y, _)| *y);
        if c[w].replace(exp).is_some() {
            return Err(bad(format!("{lhs} listed twice")));
        }
    }
    let c = c.into_iter().map(|e| e.expect("each of the order-many lines fills a distinct slot")).collect();
    Ok(KlBasis::from_expansions(n, weight, c)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Stored,
}

/// Loads the basis from `dir` if present there, else computes it (and stores it when `dir` is given).
pub fn load_or_compute(dir: Option<&Path>, n: usize, weight: WeightFunction) -> Result<(KlBasis, CacheStatus), CacheError> {
    let Some(dir) = dir else {
        return Ok((KlBasis::compute(n, weight)?, CacheStatus::Disabled));
    };
    let path: PathBuf = dir.join(cache_file_name(n, weight));
    if path.exists() {
        let basis = read_basis(io::BufReader::new(fs::File::open(&path)?), n, weight)?;
        return Ok((basis, CacheStatus::Hit));
    }
    let basis = KlBasis::compute(n, weight)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("tmp");
    {
        let mut out = BufWriter::new(fs::File::create(&tmp)?);
        write_basis(&basis, &mut out)?;
        out.flush()?;
    }
    fs::rename(&tmp, &path)?;
    Ok((basis, CacheStatus::Stored))
}

/// Kazhdan–Lusztig cells, with the structure constants evaluated in parallel.
pub fn kl_cells_parallel(basis: &KlBasis) -> KlCellData {
    let edges: Vec<Vec<usize>> = (0..basis.group().order())
        .into_par_iter()
        .map(|w| basis.left_edges_from(w))
        .collect();
    KlCellData::from_left_edges(basis.group(), basis.algebra().weight(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use domino_cells_core::hecke::kl_cells;
    use domino_cells_core::Side;

    #[test]
    fn text_round_trip() {
        let weight = WeightFunction::new(1, 2).unwrap();
        let basis = KlBasis::compute(3, weight).unwrap();
        let mut buf = Vec::new();
        write_basis(&basis, &mut buf).unwrap();
        let back = read_basis(io::Cursor::new(&buf), 3, weight).unwrap();
        assert_eq!(back.expansions(), basis.expansions());
        assert!(read_basis(io::Cursor::new(&buf), 3, WeightFunction::equal()).is_err());
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(3).unwrap().starts_with("[-1,2,3] = [1,2,3] -2:1; [-1,2,3] 0:1"));
    }

    #[test]
    fn corrupt_cache_is_rejected() {
        let weight = WeightFunction::equal();
        let basis = KlBasis::compute(2, weight).unwrap();
        let mut buf = Vec::new();
        write_basis(&basis, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap().replace("-1:1", "1:1");
        assert!(matches!(read_basis(io::Cursor::new(text), 2, weight), Err(CacheError::Hecke(_))));
    }

    #[test]
    fn parallel_cells_agree() {
        let weight = WeightFunction::new(2, 3).unwrap();
        let basis = KlBasis::compute(3, weight).unwrap();
        let par = kl_cells_parallel(&basis);
        let seq = kl_cells(3, weight).unwrap();
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            assert_eq!(par.cells(side), seq.cells(side));
        }
    }
}
