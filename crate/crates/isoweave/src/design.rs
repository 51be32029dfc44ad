//! Periodic weave designs: construction, parsing, and structural checks.
//!
//! A design is a doubly-periodic binary matrix; `cell(i, j) = true` means
//! warp `j` passes over weft `i` (the dark cell of normal colouring, `'#'`
//! in the text format).

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("no satin ({n},{s}): need gcd(n,s)=1 and 2 <= s <= n-2")]
    InvalidSatin { n: i64, s: i64 },
    #[error("line {line}: row has {got} cells, expected {expected}")]
    RaggedRow {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: illegal character {ch:?} (expected '#' or '.')")]
    IllegalChar { line: usize, ch: char },
    #[error("empty input: no design rows")]
    Empty,
}

/// A doubly-periodic binary design.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Design {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
    pub label: Option<String>,
}

impl fmt::Debug for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Design {}x{} {:?}", self.rows, self.cols, self.label)?;
        write!(f, "{}", self.to_text())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a.rem_euclid(b))
    }
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

impl Design {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Design {
        assert!(rows >= 1 && cols >= 1);
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                cells.push(f(i, j));
            }
        }
        Design {
            rows,
            cols,
            cells,
            label: None,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Design {
        self.label = Some(label.into());
        self
    }

    /// Cell of the infinite design: indices taken modulo the periods.
    pub fn at(&self, i: i64, j: i64) -> bool {
        let r = i.rem_euclid(self.rows as i64) as usize;
        let c = j.rem_euclid(self.cols as i64) as usize;
        self.cells[r * self.cols + c]
    }

    pub fn dark_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    /// Simplest twill: row `i` is row 0 shifted by `i * shift`, with one
    /// dark cell per row.
    pub fn twill(order: usize, shift: i64) -> Result<Design, DesignError> {
        if order == 0 {
            return Err(DesignError::ZeroOrder);
        }
        let n = order as i64;
        Ok(
            Design::from_fn(order, order, |i, j| (i as i64 * shift).rem_euclid(n) == j as i64)
                .with_label(format!("twill({order},{shift})")),
        )
    }

    /// Satin `(n, s)`: one dark cell per row and column, row `i` dark at
    /// column `i*s mod n`. There are no satins of order 3, 4 or 6.
    pub fn satin(n: usize, s: i64) -> Result<Design, DesignError> {
        if n == 0 {
            return Err(DesignError::ZeroOrder);
        }
        let ni = n as i64;
        if gcd(ni, s) != 1 || s < 2 || s > ni - 2 {
            return Err(DesignError::InvalidSatin { n: ni, s });
        }
        Ok(
            Design::from_fn(n, n, |i, j| (i as i64 * s).rem_euclid(ni) == j as i64)
                .with_label(format!("({n},{s}) satin")),
        )
    }

    /// Replace every strand by two behaving the same: each cell becomes a
    /// 2x2 block.
    pub fn doubled(&self) -> Design {
        let mut d = Design::from_fn(self.rows * 2, self.cols * 2, |i, j| {
            self.at(i as i64 / 2, j as i64 / 2)
        });
        d.label = self.label.as_ref().map(|l| format!("{l} doubled"));
        d
    }

    /// Colour complement (the reverse of a design).
    pub fn reversed(&self) -> Design {
        let mut d = Design::from_fn(self.rows, self.cols, |i, j| !self.at(i as i64, j as i64));
        d.label = self.label.as_ref().map(|l| format!("{l} reversed"));
        d
    }

    pub fn transposed(&self) -> Design {
        Design::from_fn(self.cols, self.rows, |i, j| self.at(j as i64, i as i64))
    }

    /// Rotate the matrix a quarter turn counterclockwise as drawn.
    pub fn rotated90(&self) -> Design {
        // new row i, col j <- old row j, col (cols-1-i)
        Design::from_fn(self.cols, self.rows, |i, j| {
            self.at(j as i64, (self.cols - 1 - i) as i64)
        })
    }

    pub fn shifted(&self, dr: i64, dc: i64) -> Design {
        Design::from_fn(self.rows, self.cols, |i, j| {
            self.at(i as i64 - dr, j as i64 - dc)
        })
    }

    fn flipped_rows(&self) -> Design {
        Design::from_fn(self.rows, self.cols, |i, j| {
            self.at((self.rows - 1 - i) as i64, j as i64)
        })
    }

    /// Smallest row period dividing `rows` and column period dividing `cols`.
    pub fn minimal_period(&self) -> Design {
        let mut r = self.rows;
        for cand in 1..=self.rows {
            if self.rows % cand != 0 {
                continue;
            }
            let ok = (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.at(i as i64, j as i64) == self.at((i % cand) as i64, j as i64))
            });
            if ok {
                r = cand;
                break;
            }
        }
        let mut c = self.cols;
        for cand in 1..=self.cols {
            if self.cols % cand != 0 {
                continue;
            }
            let ok = (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.at(i as i64, j as i64) == self.at(i as i64, (j % cand) as i64))
            });
            if ok {
                c = cand;
                break;
            }
        }
        let mut d = Design::from_fn(r, c, |i, j| self.at(i as i64, j as i64));
        d.label = self.label.clone();
        d
    }

    fn as_bits(&self) -> Vec<bool> {
        self.cells.clone()
    }

    /// Canonical representative of the design-equivalence class: the
    /// lexicographically least bit matrix over row/column cyclic shifts
    /// and the eight grid symmetries. The complement is *not* identified.
    pub fn canonical_form(&self) -> Vec<bool> {
        let mut best: Option<Vec<bool>> = None;
        let mut variants = Vec::with_capacity(8);
        let mut d = self.clone();
        for _ in 0..4 {
            variants.push(d.clone());
            variants.push(d.flipped_rows());
            d = d.rotated90();
        }
        for v in &variants {
            for dr in 0..v.rows as i64 {
                for dc in 0..v.cols as i64 {
                    let bits = v.shifted(dr, dc).as_bits();
                    if best.as_ref().map_or(true, |b| bits < *b) {
                        best = Some(bits);
                    }
                }
            }
        }
        best.unwrap()
    }

    pub fn equivalent_to(&self, other: &Design) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.canonical_form() == other.canonical_form()
    }

    /// True when the design's dark cells equal `other`'s after some
    /// whole-cell translation.
    pub fn equals_up_to_translation(&self, other: &Design) -> bool {
        let a = self.minimal_period();
        let b = other.minimal_period();
        if a.rows != b.rows || a.cols != b.cols {
            return false;
        }
        for dr in 0..a.rows as i64 {
            for dc in 0..a.cols as i64 {
                if a.shifted(dr, dc).cells == b.cells {
                    return true;
                }
            }
        }
        false
    }

    /// One dark cell in every row and every column of the period.
    pub fn is_one_per_order(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        (0..n).all(|i| (0..n).filter(|&j| self.at(i as i64, j as i64)).count() == 1)
            && (0..n).all(|j| (0..n).filter(|&i| self.at(i as i64, j as i64)).count() == 1)
    }

    /// For a one-per-order design, the permutation `row -> dark column`.
    pub fn dark_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_one_per_order() {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|i| (0..self.cols).find(|&j| self.at(i as i64, j as i64)).unwrap())
                .collect(),
        )
    }

    /// A twill is a one-per-order design whose dark column is an affine
    /// function of the row index.
    pub fn is_twill(&self) -> bool {
        let Some(p) = self.dark_permutation() else {
            return false;
        };
        let n = self.rows as i64;
        let s = (p[1 % self.rows] as i64 - p[0] as i64).rem_euclid(n);
        (0..self.rows)
            .all(|i| (p[0] as i64 + i as i64 * s).rem_euclid(n) == p[i] as i64)
            && (s.rem_euclid(n) == 1 || (n - s).rem_euclid(n) == 1 || n == 1)
    }

    /// True when the weave cannot be separated into layers: the directed
    /// "passes-under" graph on the strands of one period (edge from the
    /// under-strand to the over-strand at each crossing) is strongly
    /// connected.
    pub fn hangs_together(&self) -> bool {
        let d = self.minimal_period();
        let nw = d.rows; // wefts 0..nw
        let np = d.cols; // warps nw..nw+np
        let n = nw + np;
        if n == 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        let mut radj = vec![Vec::new(); n];
        for i in 0..nw {
            for j in 0..np {
                let (from, to) = if d.at(i as i64, j as i64) {
                    (i, nw + j) // warp over weft: weft -> warp
                } else {
                    (nw + j, i)
                };
                adj[from].push(to);
                radj[to].push(from);
            }
        }
        reachable_all(&adj, 0) && reachable_all(&radj, 0)
    }

    /// Serialize to the text format: '#' dark, '.' pale, LF-terminated rows.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                s.push(if self.at(i as i64, j as i64) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }

    /// Parse the text format. Rows of '#'/'.' of equal length; lines
    /// starting with '%' are comments; errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Design, DesignError> {
        let mut rows: Vec<Vec<bool>> = Vec::new();
        let mut width: Option<usize> = None;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.starts_with('%') || line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '#' => row.push(true),
                    '.' => row.push(false),
                    _ => return Err(DesignError::IllegalChar { line: lineno, ch }),
                }
            }
            if let Some(w) = width {
                if row.len() != w {
                    return Err(DesignError::RaggedRow {
                        line: lineno,
                        expected: w,
                        got: row.len(),
                    });
                }
            } else {
                width = Some(row.len());
            }
            rows.push(row);
        }
        let w = width.ok_or(DesignError::Empty)?;
        if w == 0 {
            return Err(DesignError::Empty);
        }
        Ok(Design::from_fn(rows.len(), w, |i, j| rows[i][j]))
    }
}

fn reachable_all(adj: &[Vec<usize>], start: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == adj.len()
}

/// A strand of the infinite weave, reduced modulo the relevant period.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Strand {
    /// Vertical strand: the `j`-th column class.
    Warp(i64),
    /// Horizontal strand: the `i`-th row class.
    Weft(i64),
}

impl Strand {
    pub fn reduce(self, rows: i64, cols: i64) -> Strand {
        match self {
            Strand::Warp(j) => Strand::Warp(j.rem_euclid(cols)),
            Strand::Weft(i) => Strand::Weft(i.rem_euclid(rows)),
        }
    }
}

/// All order-n one-dark-cell-per-row-and-column designs that are isonemal,
/// up to design equivalence (row/column cyclic shifts, transposition and
/// the eight grid symmetries; the complement is not identified).
pub fn enumerate_one_per_order(order: usize) -> Vec<Design> {
    assert!(order >= 2, "order must be at least 2");
    let mut seen: std::collections::BTreeSet<Vec<bool>> = std::collections::BTreeSet::new();
    let mut reps: Vec<Design> = Vec::new();
    let mut perm: Vec<usize> = (0..order).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let d = Design::from_fn(order, order, |i, j| p[i] == j);
        let canon = d.canonical_form();
        if seen.insert(canon.clone()) {
            reps.push(Design {
                rows: order,
                cols: order,
                cells: canon,
                label: None,
            });
        }
    });
    let mut out: Vec<Design> = reps
        .into_iter()
        .filter(|d| crate::symmetry::is_isonemal(d))
        .collect();
    out.sort_by_key(|d| d.as_bits());
    out
}

fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute_all(p, k + 1, f);
        p.swap(k, i);
    }
}

/// The order-6 twillin 6-1-1: the unique non-twill one-dark-per-order
/// isonemal design of order less than 8.
pub fn twillin() -> Design {
    let mut found: Vec<Design> = enumerate_one_per_order(6)
        .into_iter()
        .filter(|d| !d.is_twill())
        .collect();
    assert_eq!(found.len(), 1, "expected exactly one order-6 twillin");
    found.pop().unwrap().with_label("6-1-1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_hangs(d: &Design) -> bool {
        // Separable iff some nonempty proper strand subset S has every
        // crossing against its complement with the S-strand on top.
        let nw = d.rows();
        let np = d.cols();
        let n = nw + np;
        assert!(n <= 20);
        'subsets: for mask in 1..(1u32 << n) - 1 {
            let in_s = |k: usize| mask >> k & 1 == 1;
            for i in 0..nw {
                for j in 0..np {
                    let weft_in = in_s(i);
                    let warp_in = in_s(nw + j);
                    if weft_in == warp_in {
                        continue;
                    }
                    let warp_over = d.at(i as i64, j as i64);
                    let s_on_top = if warp_in { warp_over } else { !warp_over };
                    if !s_on_top {
                        continue 'subsets;
                    }
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn twill_shapes() {
        let t = Design::twill(3, 1).unwrap();
        assert_eq!(t.to_text(), "#..\n.#.\n..#\n");
        let t1 = Design::twill(1, 1).unwrap();
        assert_eq!(t1.to_text(), "#\n");
        assert_eq!(Design::twill(0, 1), Err(DesignError::ZeroOrder));
    }

    #[test]
    fn satin_examples() {
        let s = Design::satin(5, 3).unwrap();
        for i in 0..5i64 {
            for j in 0..5i64 {
                assert_eq!(s.at(i, j), (3 * i).rem_euclid(5) == j);
            }
        }
        for s in 2..=4 {
            assert!(Design::satin(6, s).is_err());
        }
        assert!(Design::satin(3, 2).is_err());
        assert!(Design::satin(4, 2).is_err());
        assert!(Design::satin(10, 3).is_ok());
    }

    #[test]
    fn satin_inverse_shift_is_transpose() {
        // s*s' = 1 (mod n) gives transposed designs.
        let a = Design::satin(5, 3).unwrap();
        let b = Design::satin(5, 2).unwrap();
        assert_eq!(a.transposed().as_bits(), b.as_bits());
        let c = Design::satin(13, 5).unwrap();
        let d = Design::satin(13, 8).unwrap(); // 5*8 = 40 = 3*13 + 1
        assert_eq!(c.transposed().as_bits(), d.as_bits());
    }

    #[test]
    fn doubling() {
        let d = Design::twill(3, 1).unwrap().doubled();
        assert_eq!(d.rows(), 6);
        for i in 0..6i64 {
            for j in 0..6i64 {
                assert_eq!(d.at(i, j), (i / 2) == (j / 2));
            }
        }
        let one = Design::from_fn(1, 1, |_, _| true);
        assert_eq!(one.doubled().to_text(), "##\n##\n");
    }

    #[test]
    fn reverse_is_involution() {
        let d = Design::satin(5, 3).unwrap();
        assert_eq!(d.reversed().reversed().as_bits(), d.as_bits());
        let r = d.reversed();
        for i in 0..5 {
            let dark = (0..5).filter(|&j| r.at(i, j)).count();
            assert_eq!(dark, 4);
        }
        let all_dark = Design::from_fn(2, 2, |_, _| true);
        assert_eq!(all_dark.reversed().dark_count(), 0);
    }

    #[test]
    fn hang_together_basics() {
        assert!(Design::twill(2, 1).unwrap().hangs_together());
        let layered = Design::from_fn(2, 2, |_, _| true);
        assert!(!layered.hangs_together());
        assert!(Design::satin(5, 3).unwrap().hangs_together());
    }

    #[test]
    fn hang_together_matches_brute_force_small() {
        let mut designs = vec![
            Design::twill(2, 1).unwrap(),
            Design::twill(3, 1).unwrap(),
            Design::twill(4, 1).unwrap(),
            Design::twill(5, 1).unwrap(),
            Design::twill(6, 1).unwrap(),
            Design::satin(5, 2).unwrap(),
            Design::satin(5, 3).unwrap(),
            Design::twill(2, 1).unwrap().doubled(),
            Design::twill(3, 1).unwrap().doubled(),
            Design::from_fn(2, 2, |_, _| true),
            Design::from_fn(1, 1, |_, _| true),
            Design::from_fn(3, 3, |i, j| i == 0 || j == 0),
        ];
        designs.push(twillin());
        for d in &designs {
            assert!(d.rows() + d.cols() <= 12);
            assert_eq!(
                d.hangs_together(),
                brute_force_hangs(d),
                "disagreement on {:?}",
                d
            );
        }
    }

    #[test]
    fn double_preserves_hang_together() {
        for d in [
            Design::twill(2, 1).unwrap(),
            Design::twill(3, 1).unwrap(),
            Design::satin(5, 3).unwrap(),
            twillin(),
        ] {
            if d.hangs_together() {
                assert!(d.doubled().hangs_together());
            }
        }
    }

    #[test]
    fn parse_and_serialize() {
        let d = Design::parse("#.\n.#\n").unwrap();
        assert_eq!(d.rows(), 2);
        assert!(d.at(0, 0) && d.at(1, 1));
        assert!(!d.at(0, 1));
        let s = Design::satin(5, 3).unwrap();
        assert_eq!(Design::parse(&s.to_text()).unwrap().as_bits(), s.as_bits());
        assert_eq!(
            Design::parse("##\n#\n"),
            Err(DesignError::RaggedRow {
                line: 2,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Design::parse("#x\n"),
            Err(DesignError::IllegalChar { line: 1, ch: 'x' })
        );
        assert_eq!(Design::parse("% nothing\n"), Err(DesignError::Empty));
        // comments and blank lines are skipped, with line numbers preserved
        let with_comment = Design::parse("% plain weave\n#.\n.#\n").unwrap();
        assert_eq!(with_comment.rows(), 2);
    }

    #[test]
    fn minimal_period_reduction() {
        let d = Design::from_fn(4, 6, |i, j| (i % 2 + j % 3) % 2 == 0);
        let m = d.minimal_period();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        for i in 0..4 {
            for j in 0..6 {
                assert_eq!(d.at(i, j), m.at(i, j));
            }
        }
    }

    #[test]
    fn is_twill_detects_both_directions() {
        assert!(Design::twill(5, 1).unwrap().is_twill());
        assert!(Design::twill(5, 4).unwrap().is_twill());
        assert!(!Design::satin(5, 3).unwrap().is_twill());
    }
}
