//! Exact half-cell geometry.
//!
//! All point coordinates are integers in *half-cell* units: `(x2, y2)`
//! names the Euclidean point `(x2/2, y2/2)`. Cell `(i, j)` of a design
//! occupies `[j, j+1] x [-i-1, -i]` in cell units, so its centre is the
//! half-unit point `(2j+1, -2i-1)`; cell corners have both coordinates
//! even, cell centres both odd. No floating point is used anywhere.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A point (or vector) in half-cell units.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Point2H {
    pub x2: i64,
    pub y2: i64,
}

impl Point2H {
    pub const ZERO: Point2H = Point2H { x2: 0, y2: 0 };

    pub fn new(x2: i64, y2: i64) -> Self {
        Point2H { x2, y2 }
    }

    /// The centre of cell `(i, j)`.
    pub fn cell_centre(i: i64, j: i64) -> Self {
        Point2H::new(2 * j + 1, -2 * i - 1)
    }

    /// The corner shared by cells `(i-1, j-1)`, `(i-1, j)`, `(i, j-1)`, `(i, j)`.
    pub fn cell_corner(i: i64, j: i64) -> Self {
        Point2H::new(2 * j, -2 * i)
    }

    /// A whole-cell vector `(vx, vy)` in cell units.
    pub fn cells(vx: i64, vy: i64) -> Self {
        Point2H::new(2 * vx, 2 * vy)
    }

    pub fn is_cell_centre(self) -> bool {
        self.x2.rem_euclid(2) == 1 && self.y2.rem_euclid(2) == 1
    }

    pub fn is_cell_corner(self) -> bool {
        self.x2.rem_euclid(2) == 0 && self.y2.rem_euclid(2) == 0
    }

    /// Whole-cell vector, if both coordinates are even.
    pub fn as_cells(self) -> Option<(i64, i64)> {
        if self.x2 % 2 == 0 && self.y2 % 2 == 0 {
            Some((self.x2 / 2, self.y2 / 2))
        } else {
            None
        }
    }

    /// Cell indices `(i, j)` if this is a cell centre.
    pub fn as_cell(self) -> Option<(i64, i64)> {
        if self.is_cell_centre() {
            Some((-(self.y2 + 1) / 2, (self.x2 - 1) / 2))
        } else {
            None
        }
    }

    pub fn norm2_quarters(self) -> i64 {
        self.x2 * self.x2 + self.y2 * self.y2
    }
}

impl Add for Point2H {
    type Output = Point2H;
    fn add(self, o: Point2H) -> Point2H {
        Point2H::new(self.x2 + o.x2, self.y2 + o.y2)
    }
}

impl Sub for Point2H {
    type Output = Point2H;
    fn sub(self, o: Point2H) -> Point2H {
        Point2H::new(self.x2 - o.x2, self.y2 - o.y2)
    }
}

impl Neg for Point2H {
    type Output = Point2H;
    fn neg(self) -> Point2H {
        Point2H::new(-self.x2, -self.y2)
    }
}

impl fmt::Display for Point2H {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/2, {}/2)", self.x2, self.y2)
    }
}

/// The eight linear parts a grid-preserving plane isometry can have.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub enum D4 {
    /// Identity.
    E,
    /// Quarter turn counterclockwise.
    R90,
    /// Half turn.
    R180,
    /// Three quarter turns counterclockwise.
    R270,
    /// Reflection across a horizontal line (y -> -y).
    Mx,
    /// Reflection across a vertical line (x -> -x).
    My,
    /// Reflection across the slope +1 diagonal y = x.
    Md,
    /// Reflection across the slope -1 diagonal y = -x.
    Ma,
}

impl D4 {
    pub const ALL: [D4; 8] = [
        D4::E,
        D4::R90,
        D4::R180,
        D4::R270,
        D4::Mx,
        D4::My,
        D4::Md,
        D4::Ma,
    ];

    /// Row-major 2x2 integer matrix `[a, b, c, d]` mapping `(x, y)` to
    /// `(a x + b y, c x + d y)`.
    pub fn mat(self) -> [i64; 4] {
        match self {
            D4::E => [1, 0, 0, 1],
            D4::R90 => [0, -1, 1, 0],
            D4::R180 => [-1, 0, 0, -1],
            D4::R270 => [0, 1, -1, 0],
            D4::Mx => [1, 0, 0, -1],
            D4::My => [-1, 0, 0, 1],
            D4::Md => [0, 1, 1, 0],
            D4::Ma => [0, -1, -1, 0],
        }
    }

    fn from_mat(m: [i64; 4]) -> D4 {
        for d in D4::ALL {
            if d.mat() == m {
                return d;
            }
        }
        unreachable!("matrix {m:?} is not in D4");
    }

    pub fn apply(self, p: Point2H) -> Point2H {
        let [a, b, c, d] = self.mat();
        Point2H::new(a * p.x2 + b * p.y2, c * p.x2 + d * p.y2)
    }

    /// `self` after `other`: `(self.compose(other)).apply(p) == self.apply(other.apply(p))`.
    pub fn compose(self, other: D4) -> D4 {
        let [a, b, c, d] = self.mat();
        let [e, f, g, h] = other.mat();
        D4::from_mat([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    pub fn inverse(self) -> D4 {
        match self {
            D4::R90 => D4::R270,
            D4::R270 => D4::R90,
            other => other,
        }
    }

    /// True when the map exchanges vertical and horizontal lines, hence
    /// warps and wefts.
    pub fn swaps_directions(self) -> bool {
        matches!(self, D4::R90 | D4::R270 | D4::Md | D4::Ma)
    }
}

/// A grid-preserving plane isometry `p -> lin(p) + t`.
///
/// For an isometry to map the cell grid to itself, `t` must be a
/// whole-cell vector (both half-unit coordinates even); this holds for
/// every symmetry a periodic design can have.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Isometry {
    pub lin: D4,
    pub t: Point2H,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        lin: D4::E,
        t: Point2H::ZERO,
    };

    pub fn new(lin: D4, t: Point2H) -> Self {
        Isometry { lin, t }
    }

    pub fn translation(v: Point2H) -> Self {
        Isometry::new(D4::E, v)
    }

    /// Rotation by `quarter_turns` (1..=3) quarter turns ccw about `center`.
    pub fn rotation(center: Point2H, quarter_turns: u8) -> Self {
        let lin = match quarter_turns {
            1 => D4::R90,
            2 => D4::R180,
            3 => D4::R270,
            q => panic!("quarter_turns must be 1..=3, got {q}"),
        };
        Isometry::new(lin, center - lin.apply(center))
    }

    pub fn is_grid_op(self) -> bool {
        self.t.x2 % 2 == 0 && self.t.y2 % 2 == 0
    }

    pub fn apply(self, p: Point2H) -> Point2H {
        self.lin.apply(p) + self.t
    }

    /// `self` after `other`.
    pub fn compose(self, other: Isometry) -> Isometry {
        Isometry::new(
            self.lin.compose(other.lin),
            self.lin.apply(other.t) + self.t,
        )
    }

    pub fn inverse(self) -> Isometry {
        let li = self.lin.inverse();
        Isometry::new(li, -li.apply(self.t))
    }

    /// Conjugate by the translation `v`: the same isometry relocated.
    pub fn translated(self, v: Point2H) -> Isometry {
        Isometry::new(self.lin, self.t + v - self.lin.apply(v))
    }

    pub fn swaps_directions(self) -> bool {
        self.lin.swaps_directions()
    }

    /// Fixed point of a rotation, if this is one.
    pub fn rotation_center(self) -> Option<Point2H> {
        match self.lin {
            D4::R180 => Some(Point2H::new(self.t.x2 / 2, self.t.y2 / 2)),
            D4::R90 => Some(Point2H::new(
                (self.t.x2 - self.t.y2) / 2,
                (self.t.x2 + self.t.y2) / 2,
            )),
            D4::R270 => Some(Point2H::new(
                (self.t.x2 + self.t.y2) / 2,
                (self.t.y2 - self.t.x2) / 2,
            )),
            _ => None,
        }
    }
}

/// A full-rank integer sublattice of the half-unit (or cell-unit) grid,
/// kept as `{ a*(g, y0) + b*(0, h) : a, b integers }` with `g, h > 0`
/// and `0 <= y0 < h` (a Hermite normal form).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Lattice2 {
    g: i64,
    y0: i64,
    h: i64,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl Lattice2 {
    /// Lattice spanned by the generators. Returns `None` if they do not
    /// span a rank-2 lattice.
    pub fn from_generators(gens: &[(i64, i64)]) -> Option<Lattice2> {
        // Reduce to one generator with minimal positive x (via Bezout)
        // plus the pure-y residuals.
        let mut lead: Option<(i64, i64)> = None;
        let mut ys: Vec<i64> = Vec::new();
        for &(x, y) in gens {
            if x == 0 {
                ys.push(y);
                continue;
            }
            match lead {
                None => lead = Some((x, y)),
                Some((lx, ly)) => {
                    let (g, p, q) = ext_gcd(lx, x);
                    let ny = p * ly + q * y;
                    // residual of the old lead and the new generator
                    ys.push(-(x / g) * ly + (lx / g) * y);
                    lead = Some((g, ny));
                }
            }
        }
        let (g, mut y0) = lead?;
        let mut h = 0i64;
        for y in ys {
            h = ext_gcd(h, y).0;
        }
        if h == 0 {
            return None;
        }
        y0 = y0.rem_euclid(h);
        Some(Lattice2 { g: g.abs(), y0, h })
    }

    pub fn det(&self) -> i64 {
        self.g * self.h
    }

    pub fn basis(&self) -> [(i64, i64); 2] {
        [(self.g, self.y0), (0, self.h)]
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        if v.0.rem_euclid(self.g) != 0 {
            return false;
        }
        (v.1 - (v.0 / self.g) * self.y0).rem_euclid(self.h) == 0
    }

    /// Canonical residue of `v` modulo the lattice: x in `[0, g)`,
    /// then y in `[0, h)`.
    pub fn reduce(&self, v: (i64, i64)) -> (i64, i64) {
        let x = v.0.rem_euclid(self.g);
        let a = (v.0 - x) / self.g;
        let y = (v.1 - a * self.y0).rem_euclid(self.h);
        (x, y)
    }

    pub fn contains_lattice(&self, other: &Lattice2) -> bool {
        other.basis().iter().all(|&b| self.contains(b))
    }

    /// All lattice points in the half-open box `[0, w) x [0, hgt)`.
    pub fn points_in_box(&self, w: i64, hgt: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let mut x = 0;
        while x < w {
            let a = x / self.g;
            let base = (a * self.y0).rem_euclid(self.h);
            let mut y = base;
            while y < hgt {
                out.push((x, y));
                y += self.h;
            }
            x += self.g;
        }
        out.sort_unstable();
        out
    }

    /// A nonzero vector of minimal Euclidean norm.
    pub fn minimal_vector(&self) -> (i64, i64) {
        let mut best = (0i64, self.h);
        let mut best_n = self.h * self.h;
        let mut a = 1i64;
        while (a * self.g).pow(2) <= best_n {
            let x = a * self.g;
            let yc = (a * self.y0).rem_euclid(self.h);
            for y in [yc, yc - self.h] {
                let n = x * x + y * y;
                if n < best_n {
                    best_n = n;
                    best = (x, y);
                }
            }
            a += 1;
        }
        best
    }

    /// All vectors of minimal norm (up to sign: one of `v`, `-v` listed).
    pub fn minimal_vectors(&self) -> Vec<(i64, i64)> {
        let (mx, my) = self.minimal_vector();
        let best_n = mx * mx + my * my;
        let mut out = Vec::new();
        let mut a = 0i64;
        while (a * self.g).pow(2) <= best_n {
            let x = a * self.g;
            let yc = (a * self.y0).rem_euclid(self.h);
            for y in [yc, yc - self.h] {
                if x * x + y * y == best_n && (x, y) != (0, 0) && !out.contains(&(x, y)) {
                    out.push((x, y));
                }
            }
            a += 1;
        }
        out
    }

    /// True when a quarter turn maps the lattice to itself (a square lattice).
    pub fn is_square(&self) -> bool {
        self.basis()
            .iter()
            .all(|&(x, y)| self.contains((-y, x)))
    }
}
