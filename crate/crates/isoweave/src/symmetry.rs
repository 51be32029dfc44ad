//! Symmetry groups of periodic designs.
//!
//! A symmetry of a fabric is a plane isometry, possibly combined with the
//! three-dimensional reflection tau in the fabric plane, that maps strands
//! to strands and preserves or reverses all over/under rankings. On the
//! design matrix this is the exact rule
//!
//! `image cell value = source cell value XOR swaps_directions(iso) XOR tau`
//!
//! because a direction-swapping isometry exchanges warps and wefts and
//! hence complements the normal colouring, and tau complements it again.
//! Side-preserving symmetries are the tau-free ones; they form the
//! subgroup H1 of index 1 or 2 in G1.

use crate::design::{gcd, Design, Strand};
use crate::geom::{Isometry, Lattice2, Point2H, D4};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("period {rows}x{cols} exceeds the supported bound of {max}")]
    PeriodTooLarge { rows: usize, cols: usize, max: usize },
    #[error("group has no quarter turn; lattice units apply to quarter-turn species only")]
    NoQuarterTurn,
    #[error("design is not isonemal")]
    NotIsonemal,
    #[error("lattice-unit legs ({m},{n}) are beyond level 5")]
    UnsupportedLevel { m: i64, n: i64 },
}

/// A symmetry element in raw form: a grid isometry plus the side-reversal
/// flag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct RawOp {
    pub iso: Isometry,
    pub tau: bool,
}

impl RawOp {
    pub fn new(iso: Isometry, tau: bool) -> RawOp {
        RawOp { iso, tau }
    }

    pub fn compose(self, other: RawOp) -> RawOp {
        RawOp::new(self.iso.compose(other.iso), self.tau ^ other.tau)
    }

    pub fn inverse(self) -> RawOp {
        RawOp::new(self.iso.inverse(), self.tau)
    }
}

/// A diagonal axis: the line of slope `+1` or `-1` through `anchor`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Axis {
    pub slope: i8,
    pub anchor: Point2H,
}

/// Classified isometry part of a symmetry operation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OpIso {
    Identity,
    Translation { v: Point2H },
    Rotation { center: Point2H, quarter_turns: u8 },
    Reflection { axis: Axis },
    Glide { axis: Axis, glide: Point2H },
}

/// A symmetry operation in the paper's terms: an isometry with exact
/// half-integer geometry plus the side-reversal flag tau.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SymmetryOp {
    #[serde(flatten)]
    pub iso: OpIso,
    pub tau: bool,
}

impl SymmetryOp {
    /// The raw isometry, if the operation is geometrically well formed
    /// (axis slopes +-1, glide parallel to its axis, whole-cell
    /// translation part).
    pub fn to_isometry(&self) -> Option<Isometry> {
        let iso = match self.iso {
            OpIso::Identity => Isometry::IDENTITY,
            OpIso::Translation { v } => Isometry::translation(v),
            OpIso::Rotation {
                center,
                quarter_turns,
            } => {
                if !(1..=3).contains(&quarter_turns) {
                    return None;
                }
                Isometry::rotation(center, quarter_turns)
            }
            OpIso::Reflection { axis } => reflect_iso(axis, Point2H::ZERO)?,
            OpIso::Glide { axis, glide } => {
                if glide == Point2H::ZERO {
                    return None;
                }
                reflect_iso(axis, glide)?
            }
        };
        iso.is_grid_op().then_some(iso)
    }

    pub fn raw(&self) -> Option<RawOp> {
        Some(RawOp::new(self.to_isometry()?, self.tau))
    }
}

fn reflect_iso(axis: Axis, glide: Point2H) -> Option<Isometry> {
    match axis.slope {
        1 => {
            if glide.x2 != glide.y2 {
                return None;
            }
            let c = axis.anchor.y2 - axis.anchor.x2;
            let g = glide.x2;
            Some(Isometry::new(D4::Md, Point2H::new(g - c, g + c)))
        }
        -1 => {
            if glide.x2 != -glide.y2 {
                return None;
            }
            let s = axis.anchor.x2 + axis.anchor.y2;
            let g = glide.x2;
            Some(Isometry::new(D4::Ma, Point2H::new(s + g, s - g)))
        }
        _ => None,
    }
}

/// Classify a raw isometry. Horizontal/vertical reflections (`Mx`/`My`)
/// return `None`; isonemal fabrics have only diagonal axes, so those are
/// reported separately as anomalies.
pub fn classify_isometry(iso: Isometry) -> Option<OpIso> {
    match iso.lin {
        D4::E => Some(if iso.t == Point2H::ZERO {
            OpIso::Identity
        } else {
            OpIso::Translation { v: iso.t }
        }),
        D4::R90 => Some(OpIso::Rotation {
            center: iso.rotation_center().unwrap(),
            quarter_turns: 1,
        }),
        D4::R180 => Some(OpIso::Rotation {
            center: iso.rotation_center().unwrap(),
            quarter_turns: 2,
        }),
        D4::R270 => Some(OpIso::Rotation {
            center: iso.rotation_center().unwrap(),
            quarter_turns: 3,
        }),
        D4::Md => {
            let c = (iso.t.y2 - iso.t.x2) / 2;
            let g = (iso.t.x2 + iso.t.y2) / 2;
            let axis = Axis {
                slope: 1,
                anchor: Point2H::new(0, c),
            };
            Some(if g == 0 {
                OpIso::Reflection { axis }
            } else {
                OpIso::Glide {
                    axis,
                    glide: Point2H::new(g, g),
                }
            })
        }
        D4::Ma => {
            let s = (iso.t.x2 + iso.t.y2) / 2;
            let g = (iso.t.x2 - iso.t.y2) / 2;
            let axis = Axis {
                slope: -1,
                anchor: Point2H::new(s, 0),
            };
            Some(if g == 0 {
                OpIso::Reflection { axis }
            } else {
                OpIso::Glide {
                    axis,
                    glide: Point2H::new(g, -g),
                }
            })
        }
        D4::Mx | D4::My => None,
    }
}

/// Test whether a raw operation is a symmetry of the infinite design.
pub fn is_symmetry_raw(d: &Design, iso: Isometry, tau: bool) -> bool {
    test_op(&d.minimal_period(), iso, tau)
}

/// As `is_symmetry_raw`, but `dm` must already have minimal periods.
fn test_op(dm: &Design, iso: Isometry, tau: bool) -> bool {
    if !iso.is_grid_op() {
        return false;
    }
    let (r, c) = (dm.rows() as i64, dm.cols() as i64);
    if iso.swaps_directions() && r != c {
        return false;
    }
    let flip = iso.swaps_directions() ^ tau;
    for i in 0..r {
        for j in 0..c {
            let q = iso.apply(Point2H::cell_centre(i, j));
            let (qi, qj) = q.as_cell().expect("grid op maps cell centres to cell centres");
            if dm.at(qi, qj) != (dm.at(i, j) ^ flip) {
                return false;
            }
        }
    }
    true
}

/// Test the spec-level operation against the design.
pub fn is_symmetry(d: &Design, op: &SymmetryOp) -> bool {
    match op.to_isometry() {
        Some(iso) => is_symmetry_raw(d, iso, op.tau),
        None => false,
    }
}

/// How an isometry maps a strand (centre-line) of the weave.
pub fn map_strand(iso: Isometry, s: Strand) -> Strand {
    let [a, b, c, d] = iso.lin.mat();
    match s {
        Strand::Warp(j) => {
            let x2 = 2 * j + 1;
            if iso.swaps_directions() {
                let y2p = c * x2 + iso.t.y2;
                Strand::Weft(-(y2p + 1) / 2)
            } else {
                let x2p = a * x2 + iso.t.x2;
                Strand::Warp((x2p - 1) / 2)
            }
        }
        Strand::Weft(i) => {
            let y2 = -2 * i - 1;
            if iso.swaps_directions() {
                let x2p = b * y2 + iso.t.x2;
                Strand::Warp((x2p - 1) / 2)
            } else {
                let y2p = d * y2 + iso.t.y2;
                Strand::Weft(-(y2p + 1) / 2)
            }
        }
    }
}

/// An axis family of the group: one coset representative's worth of
/// parallel mirror or glide axes. `intercept` is `y2 - x2` of the anchor
/// for slope +1, `x2 + y2` for slope -1; axes of the family repeat with
/// period `intercept_step`. `glide` is the smallest glide carried by any
/// axis of the family; `glide == 0` means the family contains mirrors.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AxisFamily {
    pub slope: i8,
    pub tau: bool,
    pub intercept: i64,
    pub intercept_step: i64,
    pub glide: i64,
}

/// A single axis of the arrangement, with the smallest glide any group
/// element on it carries. `glide == 0` is a mirror axis. An axis is in
/// mirror position when it runs through cells corner to corner (even
/// intercept); otherwise it runs mid-side to mid-side.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct ConcreteAxis {
    pub slope: i8,
    pub intercept: i64,
    pub tau: bool,
    pub glide: i64,
    pub mirror_position: bool,
}

/// A family of rotation centres: the representative centre repeats over
/// the translation lattice of like-tau elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CentreFamily {
    pub quarter_turns: u8,
    pub tau: bool,
    pub centre: Point2H,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct GroupFlags {
    pub has_tau_free_quarter: bool,
    pub has_tau_quarter: bool,
    pub has_tau_free_half: bool,
    pub has_tau_half: bool,
    pub mirror_families: usize,
    pub glide_families: usize,
    pub has_tau_translation: bool,
    pub has_orthogonal_axis_anomaly: bool,
}

/// The symmetry group of a design: the lattice of side-preserving
/// translations plus the finitely many coset representatives of
/// everything else.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDescription {
    rows: usize,
    cols: usize,
    trans: Lattice2,
    reps: Vec<RawOp>,
    anomalies: Vec<RawOp>,
}

impl GroupDescription {
    /// Row/column periods of the (minimised) source design.
    pub fn periods(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Basis of the side-preserving translation lattice, in cell units.
    pub fn translation_basis(&self) -> [(i64, i64); 2] {
        self.trans.basis()
    }

    pub fn translations(&self) -> &Lattice2 {
        &self.trans
    }

    pub fn coset_reps(&self) -> &[RawOp] {
        &self.reps
    }

    pub fn anomalies(&self) -> &[RawOp] {
        &self.anomalies
    }

    /// Canonical form of an operation modulo the translation lattice.
    fn reduce_op(&self, op: RawOp) -> RawOp {
        let (tx, ty) = (op.iso.t.x2 / 2, op.iso.t.y2 / 2);
        let (rx, ry) = self.trans.reduce((tx, ty));
        RawOp::new(Isometry::new(op.iso.lin, Point2H::cells(rx, ry)), op.tau)
    }

    /// Membership of a raw operation in the group.
    pub fn contains(&self, op: RawOp) -> bool {
        if !op.iso.is_grid_op() {
            return false;
        }
        let red = self.reduce_op(op);
        if red.iso.lin == D4::E && !red.tau && red.iso.t == Point2H::ZERO {
            return true;
        }
        self.reps.contains(&red) || self.anomalies.contains(&red)
    }

    pub fn has_tau_ops(&self) -> bool {
        self.reps.iter().any(|r| r.tau) || self.anomalies.iter().any(|r| r.tau)
    }

    /// The side-preserving subgroup H1: the tau-free part. Its index in
    /// the whole group is 1 or 2.
    pub fn side_preserving(&self) -> GroupDescription {
        GroupDescription {
            rows: self.rows,
            cols: self.cols,
            trans: self.trans,
            reps: self.reps.iter().copied().filter(|r| !r.tau).collect(),
            anomalies: self.anomalies.iter().copied().filter(|r| !r.tau).collect(),
        }
    }

    /// Index of H1 in the group (1 or 2).
    pub fn side_preserving_index(&self) -> usize {
        if self.has_tau_ops() {
            2
        } else {
            1
        }
    }

    /// The isometry group G2: tau flags erased, duplicate isometries
    /// merged. A tau-translation widens the translation lattice.
    pub fn isometry_projection(&self) -> GroupDescription {
        let mut gens: Vec<(i64, i64)> = self.trans.basis().to_vec();
        for r in &self.reps {
            if r.iso.lin == D4::E {
                gens.push((r.iso.t.x2 / 2, r.iso.t.y2 / 2));
            }
        }
        let trans = Lattice2::from_generators(&gens).expect("translation lattice is full rank");
        let mut tmp = GroupDescription {
            rows: self.rows,
            cols: self.cols,
            trans,
            reps: Vec::new(),
            anomalies: Vec::new(),
        };
        let mut reps: Vec<RawOp> = Vec::new();
        let mut anomalies: Vec<RawOp> = Vec::new();
        for r in self.reps.iter().chain(self.anomalies.iter()) {
            if r.iso.lin == D4::E {
                continue;
            }
            let red = tmp.reduce_op(RawOp::new(r.iso, false));
            let bucket = if matches!(r.iso.lin, D4::Mx | D4::My) {
                &mut anomalies
            } else {
                &mut reps
            };
            if !bucket.contains(&red) {
                bucket.push(red);
            }
        }
        reps.sort_unstable();
        anomalies.sort_unstable();
        tmp.reps = reps;
        tmp.anomalies = anomalies;
        tmp
    }

    /// All group elements whose whole-cell translation part lies in the
    /// box `[0, w) x [0, h)` (cell units).
    pub fn elements_in_box(&self, w: i64, h: i64) -> Vec<RawOp> {
        let mut out = Vec::new();
        let mut ids: Vec<RawOp> = vec![RawOp::new(Isometry::IDENTITY, false)];
        ids.extend(self.reps.iter().copied());
        ids.extend(self.anomalies.iter().copied());
        for rep in ids {
            let (ox, oy) = (rep.iso.t.x2 / 2, rep.iso.t.y2 / 2);
            for x in 0..w {
                for y in 0..h {
                    if self.trans.contains((x - ox, y - oy)) {
                        out.push(RawOp::new(
                            Isometry::new(rep.iso.lin, Point2H::cells(x, y)),
                            rep.tau,
                        ));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Classified coset representatives (anomalies excluded).
    pub fn classified_ops(&self) -> Vec<SymmetryOp> {
        self.reps
            .iter()
            .filter_map(|r| {
                classify_isometry(r.iso).map(|iso| SymmetryOp { iso, tau: r.tau })
            })
            .collect()
    }

    /// Rotation-centre families, one per rotation coset representative.
    pub fn centre_families(&self) -> Vec<CentreFamily> {
        let mut out = Vec::new();
        for r in &self.reps {
            let q = match r.iso.lin {
                D4::R90 => 1,
                D4::R180 => 2,
                D4::R270 => continue, // inverse of the R90 family, same centres
                _ => continue,
            };
            out.push(CentreFamily {
                quarter_turns: q,
                tau: r.tau,
                centre: r.iso.rotation_center().unwrap(),
            });
        }
        out.sort_by_key(|c| (c.quarter_turns, c.tau, c.centre));
        out
    }

    /// The lattice of centres attached to one rotation family: the set of
    /// all centres of group elements T-equivalent to the representative,
    /// relative to the representative's centre. In half-cell units.
    pub fn centre_lattice(&self, quarter_turns: u8) -> Lattice2 {
        let gens: Vec<(i64, i64)> = self
            .trans
            .basis()
            .iter()
            .map(|&(x, y)| match quarter_turns {
                // (I - R90)^-1 v and (I - R270)^-1 v, in half units
                1 => (x - y, x + y),
                3 => (x + y, y - x),
                // (I - R180)^-1 v = v/2, in half units = v
                2 => (x, y),
                _ => unreachable!(),
            })
            .collect();
        Lattice2::from_generators(&gens).expect("full-rank centre lattice")
    }

    /// Intercept/glide coordinates of an axial rep and the lattice of
    /// changes translations can make to them, all in half units.
    fn axis_coords(&self, r: &RawOp) -> Option<(i8, i64, i64, Lattice2)> {
        let slope = match r.iso.lin {
            D4::Md => 1i8,
            D4::Ma => -1i8,
            _ => return None,
        };
        let (c, g) = if slope == 1 {
            ((r.iso.t.y2 - r.iso.t.x2) / 2, (r.iso.t.x2 + r.iso.t.y2) / 2)
        } else {
            ((r.iso.t.x2 + r.iso.t.y2) / 2, (r.iso.t.x2 - r.iso.t.y2) / 2)
        };
        let gens: Vec<(i64, i64)> = self
            .trans
            .basis()
            .iter()
            .map(|&(x, y)| {
                if slope == 1 {
                    (y - x, x + y)
                } else {
                    (x + y, x - y)
                }
            })
            .collect();
        let lat = Lattice2::from_generators(&gens).expect("full-rank axis lattice");
        Some((slope, c, g, lat))
    }

    /// Axis families (mirrors and proper glides), canonicalized: the
    /// glide is the minimal one obtainable for any axis of the family, so
    /// `glide == 0` identifies families containing genuine mirrors.
    pub fn axis_families(&self) -> Vec<AxisFamily> {
        let mut out = Vec::new();
        for r in &self.reps {
            let Some((slope, c, g, lat)) = self.axis_coords(r) else {
                continue;
            };
            let glide_step = lat.basis().iter().map(|&(_, y)| y).fold(0, gcd);
            let rem = g.rem_euclid(glide_step);
            let min_glide = rem.min(glide_step - rem);
            let step = lat.basis()[0].0;
            out.push(AxisFamily {
                slope,
                tau: r.tau,
                intercept: c.rem_euclid(step),
                intercept_step: step,
                glide: min_glide,
            });
        }
        out.sort_by_key(|a| (a.slope, a.tau, a.intercept, a.glide));
        out.dedup();
        out
    }

    /// Every axis of the given slope with intercept in `[0, limit)`
    /// (half units), with the smallest glide carried on that axis.
    /// Mirror and glide elements sharing one axis merge into a single
    /// entry with `glide == 0`.
    pub fn concrete_axes(&self, slope: i8, limit: i64) -> Vec<ConcreteAxis> {
        use std::collections::BTreeMap;
        let mut best: BTreeMap<(i64, bool), i64> = BTreeMap::new();
        for r in &self.reps {
            let Some((s, c, g, lat)) = self.axis_coords(r) else {
                continue;
            };
            if s != slope {
                continue;
            }
            let [(gx, y0), (_, h)] = lat.basis();
            // Axis at intercept c' = c + a*gx carries glides g + a*y0 + h*Z.
            let amin = (0 - c).div_euclid(gx) - 1;
            let amax = (limit - c).div_euclid(gx) + 1;
            for a in amin..=amax {
                let ci = c + a * gx;
                if !(0..limit).contains(&ci) {
                    continue;
                }
                let rem = (g + a * y0).rem_euclid(h);
                let min_glide = rem.min(h - rem);
                best.entry((ci, r.tau))
                    .and_modify(|e| *e = (*e).min(min_glide))
                    .or_insert(min_glide);
            }
        }
        best.into_iter()
            .map(|((intercept, tau), glide)| ConcreteAxis {
                slope,
                intercept,
                tau,
                glide,
                mirror_position: intercept.rem_euclid(2) == 0,
            })
            .collect()
    }

    pub fn flags(&self) -> GroupFlags {
        let mut f = GroupFlags::default();
        for r in &self.reps {
            match r.iso.lin {
                D4::R90 | D4::R270 => {
                    if r.tau {
                        f.has_tau_quarter = true;
                    } else {
                        f.has_tau_free_quarter = true;
                    }
                }
                D4::R180 => {
                    if r.tau {
                        f.has_tau_half = true;
                    } else {
                        f.has_tau_free_half = true;
                    }
                }
                D4::E => f.has_tau_translation = true,
                _ => {}
            }
        }
        for a in self.axis_families() {
            if a.glide == 0 {
                f.mirror_families += 1;
            } else {
                f.glide_families += 1;
            }
        }
        f.has_orthogonal_axis_anomaly = !self.anomalies.is_empty();
        f
    }

    fn verify_closure(&self) {
        let mut all: Vec<RawOp> = vec![RawOp::new(Isometry::IDENTITY, false)];
        all.extend(self.reps.iter().copied());
        all.extend(self.anomalies.iter().copied());
        for a in &all {
            assert!(
                self.contains(a.inverse()),
                "group not closed under inverse: {a:?}"
            );
            for b in &all {
                let c = a.compose(*b);
                assert!(
                    self.contains(c),
                    "group not closed under composition: {a:?} * {b:?} = {c:?}"
                );
            }
        }
    }
}

/// Enumerate the full symmetry group of a design by exhaustive test of
/// all candidate operations with translation parts in one period,
/// rotations of 1..3 quarter turns, both diagonal axis slopes and all
/// glide vectors, each with and without tau. Closure is verified.
pub fn enumerate_symmetries(d: &Design) -> Result<GroupDescription, SymmetryError> {
    const MAX: usize = 64;
    let dm = d.minimal_period();
    let (r, c) = (dm.rows(), dm.cols());
    if r > MAX || c > MAX {
        return Err(SymmetryError::PeriodTooLarge {
            rows: r,
            cols: c,
            max: MAX,
        });
    }
    let (ri, ci) = (r as i64, c as i64);

    // Side-preserving translations.
    let mut gens: Vec<(i64, i64)> = vec![(ci, 0), (0, ri)];
    for vx in 0..ci {
        for vy in 0..ri {
            if (vx, vy) != (0, 0)
                && test_op(&dm, Isometry::translation(Point2H::cells(vx, vy)), false)
            {
                gens.push((vx, vy));
            }
        }
    }
    let trans = Lattice2::from_generators(&gens).expect("translation lattice is full rank");
    let mut group = GroupDescription {
        rows: r,
        cols: c,
        trans,
        reps: Vec::new(),
        anomalies: Vec::new(),
    };

    let mut reps: Vec<RawOp> = Vec::new();
    let mut anomalies: Vec<RawOp> = Vec::new();
    let lins = [
        D4::R90,
        D4::R180,
        D4::R270,
        D4::Md,
        D4::Ma,
        D4::Mx,
        D4::My,
        D4::E, // tau-translations only
    ];
    for lin in lins {
        if lin.swaps_directions() && r != c {
            continue;
        }
        for vx in 0..ci {
            for vy in 0..ri {
                let iso = Isometry::new(lin, Point2H::cells(vx, vy));
                for tau in [false, true] {
                    if lin == D4::E && !tau {
                        continue;
                    }
                    if test_op(&dm, iso, tau) {
                        let red = group.reduce_op(RawOp::new(iso, tau));
                        let bucket = if matches!(lin, D4::Mx | D4::My) {
                            &mut anomalies
                        } else {
                            &mut reps
                        };
                        if !bucket.contains(&red) {
                            bucket.push(red);
                        }
                    }
                }
            }
        }
    }
    reps.sort_unstable();
    anomalies.sort_unstable();
    group.reps = reps;
    group.anomalies = anomalies;
    group.verify_closure();
    Ok(group)
}

/// True iff every generator of `inner`, conjugated by the whole-cell
/// translation `offset`, is an element of `outer`. Both groups must be
/// tau-erased (isometry projections).
pub fn is_subgroup_of(inner: &GroupDescription, outer: &GroupDescription, offset: Point2H) -> bool {
    debug_assert!(
        !inner.has_tau_ops() && !outer.has_tau_ops(),
        "is_subgroup_of expects isometry projections"
    );
    debug_assert!(
        offset.x2 % 2 == 0 && offset.y2 % 2 == 0,
        "offset must be a whole-cell translation"
    );
    for &(x, y) in inner.trans.basis().iter() {
        if !outer.trans.contains((x, y)) {
            return false;
        }
    }
    inner
        .reps
        .iter()
        .chain(inner.anomalies.iter())
        .all(|r| outer.contains(RawOp::new(r.iso.translated(offset), false)))
}

/// Isonemality: the design hangs together and its symmetry group is
/// transitive on the strands of one period.
pub fn is_isonemal(d: &Design) -> bool {
    if !d.hangs_together() {
        return false;
    }
    let dm = d.minimal_period();
    let Ok(g) = enumerate_symmetries(&dm) else {
        return false;
    };
    strand_transitive(&dm, &g)
}

/// Orbit check: does the group act transitively on the rows + cols strand
/// classes of one period?
pub fn strand_transitive(d: &Design, g: &GroupDescription) -> bool {
    let (r, c) = (d.rows() as i64, d.cols() as i64);
    let mut isos: Vec<Isometry> = Vec::new();
    for &(x, y) in g.translation_basis().iter() {
        isos.push(Isometry::translation(Point2H::cells(x, y)));
    }
    for rep in g.coset_reps().iter().chain(g.anomalies().iter()) {
        isos.push(rep.iso);
    }
    let mut more: Vec<Isometry> = isos.iter().map(|i| i.inverse()).collect();
    isos.append(&mut more);
    let mut seen = std::collections::BTreeSet::new();
    let start = Strand::Warp(0).reduce(r, c);
    seen.insert(start);
    let mut queue = vec![start];
    while let Some(s) = queue.pop() {
        for iso in &isos {
            let img = map_strand(*iso, s).reduce(r, c);
            if seen.insert(img) {
                queue.push(img);
            }
        }
    }
    seen.len() == (r + c) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain_weave() -> Design {
        Design::twill(2, 1).unwrap()
    }

    #[test]
    fn identity_is_always_a_symmetry() {
        let d = Design::satin(5, 3).unwrap();
        let op = SymmetryOp {
            iso: OpIso::Identity,
            tau: false,
        };
        assert!(is_symmetry(&d, &op));
    }

    #[test]
    fn plain_weave_quarter_turn_at_corner_without_tau() {
        let d = plain_weave();
        let op = SymmetryOp {
            iso: OpIso::Rotation {
                center: Point2H::cell_corner(0, 0),
                quarter_turns: 1,
            },
            tau: false,
        };
        assert!(is_symmetry(&d, &op));
    }

    #[test]
    fn satin_quarter_turn_with_tau_at_dark_cell_centre() {
        let d = Design::satin(5, 3).unwrap();
        let op = SymmetryOp {
            iso: OpIso::Rotation {
                center: Point2H::cell_centre(0, 0),
                quarter_turns: 1,
            },
            tau: true,
        };
        assert!(is_symmetry(&d, &op));
        // and without tau it is not a symmetry
        let op2 = SymmetryOp {
            tau: false,
            ..op
        };
        assert!(!is_symmetry(&d, &op2));
    }

    #[test]
    fn satin_group_contents() {
        let d = Design::satin(5, 3).unwrap();
        let g = enumerate_symmetries(&d).unwrap();
        assert_eq!(g.translations().det(), 5);
        assert!(g.translations().contains((2, 1)));
        let f = g.flags();
        assert!(f.has_tau_quarter);
        assert!(!f.has_tau_free_quarter);
        assert!(f.has_tau_free_half);
        assert!(!f.has_tau_half);
        assert_eq!(f.mirror_families, 0);
        assert_eq!(f.glide_families, 0);
        assert!(!f.has_tau_translation);
        // square satins have no orthogonal-axis anomalies
        assert!(g.anomalies().is_empty());
        // H1 is a proper subgroup of index 2
        assert_eq!(g.side_preserving_index(), 2);
        let h1 = g.side_preserving();
        assert!(h1.coset_reps().iter().all(|r| !r.tau));
        assert!(h1.coset_reps().len() < g.coset_reps().len());
    }

    #[test]
    fn plain_weave_has_tau_translation_and_mixed_quarters() {
        let g = enumerate_symmetries(&plain_weave()).unwrap();
        let f = g.flags();
        assert!(f.has_tau_translation);
        assert!(f.has_tau_quarter && f.has_tau_free_quarter);
    }

    #[test]
    fn all_dark_design_has_mirrors_on_both_diagonals() {
        let d = Design::from_fn(1, 1, |_, _| true);
        let g = enumerate_symmetries(&d).unwrap();
        let axes = g.axis_families();
        assert!(axes.iter().any(|a| a.slope == 1 && a.glide == 0));
        assert!(axes.iter().any(|a| a.slope == -1 && a.glide == 0));
        // mirrors always require tau
        assert!(axes.iter().filter(|a| a.glide == 0).all(|a| a.tau));
    }

    #[test]
    fn projection_is_idempotent_and_erases_tau() {
        let d = Design::satin(5, 3).unwrap();
        let g = enumerate_symmetries(&d).unwrap();
        let p = g.isometry_projection();
        assert!(!p.has_tau_ops());
        let pp = p.isometry_projection();
        assert_eq!(p.coset_reps(), pp.coset_reps());
        assert_eq!(p.translation_basis(), pp.translation_basis());
    }

    #[test]
    fn any_projected_group_is_subgroup_of_itself() {
        let g = enumerate_symmetries(&Design::satin(5, 3).unwrap())
            .unwrap()
            .isometry_projection();
        assert!(is_subgroup_of(&g, &g, Point2H::ZERO));
    }

    #[test]
    fn tau_square_of_side_reversing_quarter_is_plain_half_turn() {
        // blacksquare^2 = diamond: at every tau quarter-turn centre the
        // tau-free half turn is in the group.
        for d in [
            Design::satin(5, 3).unwrap(),
            Design::satin(5, 3).unwrap().doubled(),
            Design::satin(10, 3).unwrap(),
        ] {
            let g = enumerate_symmetries(&d).unwrap();
            for fam in g.centre_families() {
                if fam.quarter_turns == 1 && fam.tau {
                    let half = RawOp::new(Isometry::rotation(fam.centre, 2), false);
                    assert!(g.contains(half));
                }
            }
        }
    }

    #[test]
    fn mirrors_always_require_tau() {
        for d in [
            Design::satin(8, 3).unwrap(),
            crate::design::twillin(),
            Design::from_fn(1, 1, |_, _| true),
        ] {
            let g = enumerate_symmetries(&d).unwrap();
            for a in g.axis_families() {
                if a.glide == 0 {
                    assert!(a.tau, "tau-free mirror found in {:?}", d.label);
                }
            }
        }
    }

    #[test]
    fn twill_is_isonemal_for_all_small_orders() {
        for n in 2..=8 {
            assert!(is_isonemal(&Design::twill(n, 1).unwrap()), "twill({n},1)");
        }
    }

    #[test]
    fn satin_5_3_is_isonemal_and_7_2_is_not() {
        assert!(is_isonemal(&Design::satin(5, 3).unwrap()));
        // order-7 satins have no direction-swapping symmetry at all, so
        // warps and wefts lie in different orbits
        assert!(!is_isonemal(&Design::satin(7, 2).unwrap()));
    }

    #[test]
    fn asymmetric_design_is_not_isonemal() {
        let d = Design::parse("##..\n....\n#.#.\n....\n").unwrap();
        assert!(!is_isonemal(&d));
    }

    #[test]
    fn h1_index_is_one_or_two_on_corpus() {
        for d in [
            Design::twill(3, 1).unwrap(),
            Design::satin(5, 3).unwrap(),
            Design::satin(10, 3).unwrap(),
            crate::design::twillin(),
        ] {
            let g = enumerate_symmetries(&d).unwrap();
            assert!(matches!(g.side_preserving_index(), 1 | 2));
        }
    }

    /// Brute-force oracle: every candidate op with translation part in a
    /// window twice the period, tested blindly, must match the expanded
    /// group description.
    #[test]
    fn enumeration_matches_windowed_brute_force() {
        let designs = [
            Design::twill(2, 1).unwrap(),
            Design::twill(3, 1).unwrap(),
            Design::satin(5, 2).unwrap(),
            Design::satin(5, 3).unwrap(),
            crate::design::twillin(),
            Design::satin(8, 3).unwrap(),
            Design::twill(4, 1).unwrap().doubled(),
        ];
        for d in designs {
            let dm = d.minimal_period();
            let (r, c) = (dm.rows() as i64, dm.cols() as i64);
            assert!(r <= 8 && c <= 8);
            let (w, h) = (2 * c, 2 * r);
            let g = enumerate_symmetries(&dm).unwrap();
            let expanded: std::collections::BTreeSet<RawOp> =
                g.elements_in_box(w, h).into_iter().collect();
            let mut brute: std::collections::BTreeSet<RawOp> = Default::default();
            for lin in D4::ALL {
                for vx in 0..w {
                    for vy in 0..h {
                        let iso = Isometry::new(lin, Point2H::cells(vx, vy));
                        for tau in [false, true] {
                            if lin == D4::E && !tau && (vx, vy) == (0, 0) {
                                brute.insert(RawOp::new(iso, false));
                                continue;
                            }
                            if is_symmetry_raw(&dm, iso, tau) {
                                brute.insert(RawOp::new(iso, tau));
                            }
                        }
                    }
                }
            }
            assert_eq!(expanded, brute, "mismatch for {:?}", d.label);
        }
    }
}
