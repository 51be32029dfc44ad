//! Construct designs invariant under a prescribed set of operations.
//!
//! Cells of an order x order torus are linked by the symmetry rule
//! `image = source XOR swaps XOR tau`; each consistent assignment of the
//! free orbits yields a design with at least the requested symmetry.

use crate::design::Design;
use crate::symmetry::RawOp;
use crate::geom::Point2H;

struct ParityUnionFind {
    parent: Vec<usize>,
    /// parity of the cell value relative to its root's value
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    /// Enforce value(a) = value(b) XOR flip. False on contradiction.
    fn union(&mut self, a: usize, b: usize, flip: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == flip;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ flip;
        true
    }
}

/// All order x order designs invariant under every given operation (and
/// the torus translations), one per assignment of the free cell orbits.
/// Returns an empty list when the constraints contradict each other, and
/// panics if there are more than 2^20 assignments.
pub fn designs_invariant_under(order: usize, ops: &[RawOp]) -> Vec<Design> {
    let n = order as i64;
    let idx = |i: i64, j: i64| -> usize {
        (i.rem_euclid(n) * n + j.rem_euclid(n)) as usize
    };
    let mut uf = ParityUnionFind::new(order * order);
    for op in ops {
        let flip = op.iso.swaps_directions() ^ op.tau;
        for i in 0..n {
            for j in 0..n {
                let q = op.iso.apply(Point2H::cell_centre(i, j));
                let (qi, qj) = q.as_cell().expect("synthesis ops must preserve the grid");
                if !uf.union(idx(i, j), idx(qi, qj), flip) {
                    return Vec::new();
                }
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut cell_root = vec![(0usize, false); order * order];
    for c in 0..order * order {
        let (r, p) = uf.find(c);
        if !roots.contains(&r) {
            roots.push(r);
        }
        cell_root[c] = (r, p);
    }
    roots.sort_unstable();
    assert!(roots.len() <= 20, "too many free orbits: {}", roots.len());
    let mut out = Vec::new();
    for mask in 0u32..1 << roots.len() {
        let value = |c: usize| -> bool {
            let (r, p) = cell_root[c];
            let bit = roots.iter().position(|&x| x == r).unwrap();
            (mask >> bit & 1 == 1) ^ p
        };
        out.push(Design::from_fn(order, order, |i, j| value(i * order + j)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::Design;
    use crate::geom::{Isometry, Point2H};
    use crate::symmetry::{enumerate_symmetries, is_symmetry_raw, RawOp};

    #[test]
    fn synthesised_designs_have_the_requested_symmetry() {
        // quarter turn with tau at a cell centre, order 5: the satin's
        // symmetry type
        let rot = RawOp::new(Isometry::rotation(Point2H::cell_centre(0, 0), 1), true);
        let tr = RawOp::new(
            Isometry::translation(Point2H::cells(2, 1)),
            false,
        );
        let designs = designs_invariant_under(5, &[rot, tr]);
        assert!(!designs.is_empty());
        for d in &designs {
            assert!(is_symmetry_raw(d, rot.iso, rot.tau));
            assert!(is_symmetry_raw(d, tr.iso, tr.tau));
        }
        // the (5,3) satin itself appears among the assignments
        let satin = Design::satin(5, 3).unwrap();
        assert!(designs
            .iter()
            .any(|d| d.equals_up_to_translation(&satin)));
    }

    #[test]
    fn contradictory_constraints_give_nothing() {
        // a tau-free quarter turn at a cell centre forces a cell to be
        // its own complement
        let rot = RawOp::new(Isometry::rotation(Point2H::cell_centre(0, 0), 1), false);
        assert!(designs_invariant_under(4, &[rot]).is_empty());
    }

    #[test]
    fn enumerated_group_contains_requested_ops() {
        let rot = RawOp::new(Isometry::rotation(Point2H::cell_corner(0, 0), 1), true);
        let tr = RawOp::new(Isometry::translation(Point2H::cells(4, 2)), false);
        for d in designs_invariant_under(10, &[rot, tr]) {
            let g = enumerate_symmetries(&d).unwrap();
            assert!(g.contains(rot));
            assert!(g.contains(tr));
        }
    }
}
