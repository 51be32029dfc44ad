//! Lattice units, levels and species classification.
//!
//! Quarter-turn designs (species 33 to 39) are classified exactly from
//! the level of the lattice unit, the marker kinds at its corners and
//! centre, and where the centres sit in the cells. Designs with axes of
//! symmetry get a feature descriptor sufficient for the twillin
//! admissibility rules, with an exact species label where the structure
//! determines one.

use crate::design::{gcd, Design};
use crate::geom::{Isometry, Lattice2, Point2H};
use crate::symmetry::{
    enumerate_symmetries, strand_transitive, ConcreteAxis, GroupDescription, RawOp,
    SymmetryError,
};
use serde::{Deserialize, Serialize};

/// The four marker glyphs of the diagrams.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, Hash, PartialOrd, Ord)]
pub enum MarkerKind {
    /// Hollow box: side-preserving quarter turn.
    Quarter,
    /// Filled box: quarter turn combined with tau.
    QuarterTau,
    /// Hollow diamond: side-preserving half turn.
    Half,
    /// Filled diamond: half turn combined with tau.
    HalfTau,
}

impl MarkerKind {
    pub fn glyph(self) -> &'static str {
        match self {
            MarkerKind::Quarter => "\u{25a1}",
            MarkerKind::QuarterTau => "\u{25a0}",
            MarkerKind::Half => "\u{25c7}",
            MarkerKind::HalfTau => "\u{25c6}",
        }
    }
}

/// Where a point sits relative to the cells.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, Hash, PartialOrd, Ord)]
pub enum CellPosition {
    Corner,
    Centre,
    EdgeMid,
}

pub fn cell_position(p: Point2H) -> CellPosition {
    if p.is_cell_corner() {
        CellPosition::Corner
    } else if p.is_cell_centre() {
        CellPosition::Centre
    } else {
        CellPosition::EdgeMid
    }
}

/// The oblique square on quarter-turn centres of like kind: level, legs
/// and marker kinds.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeUnit {
    pub level: u8,
    pub m: i64,
    pub n: i64,
    pub anchor: Point2H,
    pub corner_kind: MarkerKind,
    pub center_kind: MarkerKind,
    pub midside_kinds: Vec<MarkerKind>,
    /// The equally valid unit with corners on the other centre class.
    pub alternative: Option<AlternativeUnit>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlternativeUnit {
    pub anchor: Point2H,
    pub corner_kind: MarkerKind,
    pub center_kind: MarkerKind,
}

impl LatticeUnit {
    pub fn area(&self) -> i64 {
        self.m * self.m + self.n * self.n
    }

    /// Unit edge as a whole-cell vector.
    pub fn leg_vector(&self) -> (i64, i64) {
        (self.m, self.n)
    }
}

/// Level from the legs: level 1 has coprime legs of opposite parity and
/// each level doubles two levels down.
pub fn level_of_legs(m: i64, n: i64) -> Option<u8> {
    let g = gcd(m, n);
    if g == 0 {
        return None;
    }
    let (a, b) = (m / g, n / g);
    let opposite = (a + b).rem_euclid(2) == 1;
    match (g, opposite) {
        (1, true) => Some(1),
        (1, false) => Some(2),
        (2, true) => Some(3),
        (2, false) => Some(4),
        (4, true) => Some(5),
        _ => None,
    }
}

/// Canonical orientation of a lattice-unit edge: rotate into x > 0, y >= 0.
fn canonical_leg(v: (i64, i64)) -> (i64, i64) {
    let mut w = v;
    for _ in 0..4 {
        if w.0 > 0 && w.1 >= 0 {
            return w;
        }
        w = (w.1, -w.0);
    }
    v
}

fn quarter_kind(tau: bool) -> MarkerKind {
    if tau {
        MarkerKind::QuarterTau
    } else {
        MarkerKind::Quarter
    }
}

fn half_kinds_at(g: &GroupDescription, p: Point2H) -> Vec<MarkerKind> {
    let mut out = Vec::new();
    for tau in [false, true] {
        if g.contains(RawOp::new(Isometry::rotation(p, 2), tau)) {
            out.push(if tau { MarkerKind::HalfTau } else { MarkerKind::Half });
        }
    }
    out
}

fn quarter_at(g: &GroupDescription, p: Point2H, tau: bool) -> bool {
    g.contains(RawOp::new(Isometry::rotation(p, 1), tau))
}

/// The minimal oblique square with quarter-turn centres of like kind at
/// its corners and a quarter-turn centre at its middle.
pub fn lattice_unit_of(g: &GroupDescription) -> Result<LatticeUnit, SymmetryError> {
    let quarters: Vec<_> = g
        .centre_families()
        .into_iter()
        .filter(|f| f.quarter_turns == 1)
        .collect();
    if quarters.is_empty() {
        return Err(SymmetryError::NoQuarterTurn);
    }
    let trans = *g.translations();
    // Reduce anchors into a fundamental box of the translation lattice
    // (in half units, translations are doubled).
    let t_half = Lattice2::from_generators(
        &trans
            .basis()
            .iter()
            .map(|&(x, y)| (2 * x, 2 * y))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let reduce_h = |p: Point2H| {
        let (x, y) = t_half.reduce((p.x2, p.y2));
        Point2H::new(x, y)
    };

    let (legs_cells, anchor, corner_kind, center_kind, alternative) = if quarters.len() == 1 {
        // Pure species: corners on the translation lattice itself, centre
        // in the same like-kind class.
        let u = canonical_leg(trans.minimal_vector());
        let kind = quarter_kind(quarters[0].tau);
        (u, reduce_h(quarters[0].centre), kind, kind, None)
    } else {
        // Mixed species: two classes of opposite kind spaced by the
        // quarter-centre lattice; the unit with the hollow box at its
        // corners is the canonical one.
        assert_eq!(quarters.len(), 2, "more than two quarter-turn classes");
        assert_ne!(quarters[0].tau, quarters[1].tau, "like-tau classes should be one coset");
        let lam_h = g.centre_lattice(1); // half units
        let gens_cells: Vec<(i64, i64)> = lam_h
            .basis()
            .iter()
            .map(|&(x, y)| {
                assert!(
                    x % 2 == 0 && y % 2 == 0,
                    "mixed species with non-integral centre lattice"
                );
                (x / 2, y / 2)
            })
            .collect();
        let lam = Lattice2::from_generators(&gens_cells).unwrap();
        let u = canonical_leg(lam.minimal_vector());
        let plain = quarters.iter().find(|f| !f.tau).unwrap();
        let rev = quarters.iter().find(|f| f.tau).unwrap();
        (
            u,
            reduce_h(plain.centre),
            MarkerKind::Quarter,
            MarkerKind::QuarterTau,
            Some(AlternativeUnit {
                anchor: reduce_h(rev.centre),
                corner_kind: MarkerKind::QuarterTau,
                center_kind: MarkerKind::Quarter,
            }),
        )
    };

    let (m, n) = legs_cells;
    let level = level_of_legs(m, n).ok_or(SymmetryError::UnsupportedLevel { m, n })?;

    // Consistency: the putative centre carries a quarter turn of the
    // recorded centre kind.
    let centre_pt = anchor + Point2H::new(m - n, m + n);
    debug_assert!(quarter_at(g, centre_pt, center_kind == MarkerKind::QuarterTau));

    let mut midside_kinds = Vec::new();
    for ms in [
        anchor + Point2H::new(m, n),
        anchor + Point2H::new(-n, m),
    ] {
        for k in half_kinds_at(g, ms) {
            if !midside_kinds.contains(&k) {
                midside_kinds.push(k);
            }
        }
    }
    midside_kinds.sort_unstable();

    Ok(LatticeUnit {
        level,
        m,
        n,
        anchor,
        corner_kind,
        center_kind,
        midside_kinds,
        alternative,
    })
}

/// Exact quarter-turn species labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum QuarterSpecies {
    S33_3,
    S33_4,
    S34,
    S35_3,
    S35_4,
    S36_1,
    S36_2,
    S36S,
    S37,
    S38,
    S39,
}

impl QuarterSpecies {
    pub fn label(self) -> &'static str {
        match self {
            QuarterSpecies::S33_3 => "33_3",
            QuarterSpecies::S33_4 => "33_4",
            QuarterSpecies::S34 => "34",
            QuarterSpecies::S35_3 => "35_3",
            QuarterSpecies::S35_4 => "35_4",
            QuarterSpecies::S36_1 => "36_1",
            QuarterSpecies::S36_2 => "36_2",
            QuarterSpecies::S36S => "36_s",
            QuarterSpecies::S37 => "37",
            QuarterSpecies::S38 => "38",
            QuarterSpecies::S39 => "39",
        }
    }
}

/// A half-turn centre class with the cell positions its members occupy.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HalfTurnClass {
    pub centre: Point2H,
    pub tau: bool,
    pub positions: Vec<CellPosition>,
}

/// Feature descriptor for axis (no-quarter-turn) designs: everything the
/// twillin admissibility rules consume, plus spacing data for the species
/// signatures the structure determines.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AxisFeatures {
    pub axes_up: Vec<ConcreteAxis>,
    pub up_period: i64,
    pub axes_down: Vec<ConcreteAxis>,
    pub down_period: i64,
    pub half_turns: Vec<HalfTurnClass>,
    pub all_glide_axes_in_mirror_position: bool,
    pub all_half_turn_centres_at_cell_corners: bool,
    /// Spacing of the tau-free half-turn lattice along the two diagonal
    /// directions, in whole multiples of delta (the cell diagonal), when
    /// the lattice is diagonal-rhombic.
    pub diamond_spacing_delta: Option<(i64, i64)>,
}

/// Species report: exact for quarter-turn designs, feature-driven for
/// axis designs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpeciesReport {
    QuarterTurn {
        species: QuarterSpecies,
        unit: LatticeUnit,
    },
    QuarterUnresolved {
        unit: Option<LatticeUnit>,
        note: String,
    },
    Axis {
        label: Option<String>,
        features: AxisFeatures,
    },
}

impl SpeciesReport {
    pub fn label(&self) -> String {
        match self {
            SpeciesReport::QuarterTurn { species, .. } => species.label().to_string(),
            SpeciesReport::QuarterUnresolved { note, .. } => format!("quarter-turn, {note}"),
            SpeciesReport::Axis { label, .. } => label
                .clone()
                .unwrap_or_else(|| "axis species, unresolved".to_string()),
        }
    }
}

fn axis_intercept_period(g: &GroupDescription, slope: i8) -> i64 {
    let gens: Vec<(i64, i64)> = g
        .translations()
        .basis()
        .iter()
        .map(|&(x, y)| if slope == 1 { (y - x, x + y) } else { (x + y, x - y) })
        .collect();
    let [(gx, y0), (_, h)] = Lattice2::from_generators(&gens).unwrap().basis();
    // Axes recur every gx in intercept, but the glide carried on an axis
    // repeats only after h/gcd(y0, h) such steps.
    gx * (h / gcd(y0, h))
}

fn half_turn_classes(g: &GroupDescription) -> Vec<HalfTurnClass> {
    let mut out = Vec::new();
    for f in g.centre_families() {
        if f.quarter_turns != 2 {
            continue;
        }
        // Family centres move by whole translation-halves: parity classes
        // of the translation basis give the cell positions occupied.
        let basis = g.translations().basis();
        let mut offsets = vec![Point2H::ZERO];
        for combo in 1..4u8 {
            let mut p = Point2H::ZERO;
            if combo & 1 != 0 {
                p = p + Point2H::new(basis[0].0, basis[0].1);
            }
            if combo & 2 != 0 {
                p = p + Point2H::new(basis[1].0, basis[1].1);
            }
            offsets.push(p);
        }
        let mut positions: Vec<CellPosition> = offsets
            .into_iter()
            .map(|o| cell_position(f.centre + o))
            .collect();
        positions.sort_unstable();
        positions.dedup();
        out.push(HalfTurnClass {
            centre: f.centre,
            tau: f.tau,
            positions,
        });
    }
    out
}

/// Rhombic spacing of the tau-free half-turn centre set along the two
/// diagonal directions, in delta units, if the set forms a lattice with
/// pure diagonal periods.
fn diamond_spacing(g: &GroupDescription) -> Option<(i64, i64)> {
    // Gather all tau-free half-turn centres of all classes relative to
    // one of them, spanning their difference lattice.
    let classes: Vec<_> = half_turn_classes(g)
        .into_iter()
        .filter(|c| !c.tau)
        .collect();
    let base = classes.first()?.centre;
    let mut gens: Vec<(i64, i64)> = Vec::new();
    for &(x, y) in g.translations().basis().iter() {
        gens.push((x, y)); // half-turn centres move by translation halves
    }
    for c in &classes {
        let d = c.centre - base;
        gens.push((d.x2, d.y2));
    }
    let lat = Lattice2::from_generators(&gens)?;
    // Diagonal coordinates: v -> ((x+y)/2, (x-y)/2) in delta units means
    // looking for pure multiples of (k, k) and (k, -k) in half units.
    let pure = |dirx: i64| -> Option<i64> {
        for k in 1..=64 {
            if lat.contains((k, dirx * k)) {
                return Some(k);
            }
        }
        None
    };
    // (k, k) in half units is k/2 cells along the diagonal = k/2 * delta.
    let a = pure(1)?;
    let b = pure(-1)?;
    if a % 2 == 0 && b % 2 == 0 {
        Some((a / 2, b / 2))
    } else {
        // spacing is a half-odd multiple of delta; not rhombic in whole delta
        None
    }
}

fn axis_species_label(f: &AxisFeatures) -> Option<String> {
    let mirrors_up = f.axes_up.iter().any(|a| a.glide == 0);
    let mirrors_down = f.axes_down.iter().any(|a| a.glide == 0);
    let glides_up = f.axes_up.iter().any(|a| a.glide != 0);
    let glides_down = f.axes_down.iter().any(|a| a.glide != 0);
    let tau_half = f.half_turns.iter().any(|h| h.tau);
    let plain_half = f.half_turns.iter().any(|h| !h.tau);
    let spacing = f.diamond_spacing_delta;

    if mirrors_up && mirrors_down {
        if !glides_up && !glides_down {
            // Perpendicular mirrors: species 25 (intersections at cell
            // corners) or 26 (at cell centres).
            let at_centres = f
                .half_turns
                .iter()
                .any(|h| h.positions.contains(&CellPosition::Centre));
            let base = if at_centres { "26" } else { "25" };
            return Some(match spacing {
                Some((l, w)) if l % 2 == 1 && w % 2 == 1 => format!("{base}_o"),
                Some((l, w)) if l % 2 == 0 && w % 2 == 0 => format!("{base}_e"),
                _ => base.to_string(),
            });
        }
        let glide_tau = f
            .axes_up
            .iter()
            .chain(f.axes_down.iter())
            .filter(|a| a.glide != 0)
            .all(|a| a.tau);
        if glide_tau && plain_half && !tau_half {
            // 6-1-1 signature: side-reversing mirrors and glides,
            // side-preserving half turns at their intersections.
            return Some(match spacing {
                Some((l, w)) if l % 2 == 0 && w % 2 == 0 => "27_e".to_string(),
                Some(_) => "27_o".to_string(),
                None => "27".to_string(),
            });
        }
        if !glide_tau && tau_half {
            // Side-preserving glides parallel to mirrors in both
            // directions: species 29 to 32; 29 has even-by-even spacing.
            return Some(match spacing {
                Some((l, w)) if l % 2 == 0 && w % 2 == 0 => "29".to_string(),
                _ => "30".to_string(),
            });
        }
        return None;
    }
    if (mirrors_up && !mirrors_down && glides_down) || (mirrors_down && !mirrors_up && glides_up) {
        // Glide axes perpendicular to mirrors: species 17 to 24; species
        // 21 and 22 differ in whether the spacing of closest
        // side-preserving half turns perpendicular to the mirrors is even
        // or odd in delta.
        if let Some((l, w)) = spacing {
            // one direction parallel to mirrors, the other perpendicular
            let perp = if mirrors_up { l } else { w };
            let par = if mirrors_up { w } else { l };
            if par % 2 == 0 {
                return Some(if perp % 2 == 1 { "22" } else { "21" }.to_string());
            }
        }
        return None;
    }
    None
}

/// Classify an isonemal design: exact subspecies for quarter-turn
/// designs, a feature descriptor (with a label where determined) for
/// axis designs.
pub fn classify_species(d: &Design) -> Result<SpeciesReport, SymmetryError> {
    let dm = d.minimal_period();
    let g = enumerate_symmetries(&dm)?;
    if !dm.hangs_together() || !strand_transitive(&dm, &g) {
        return Err(SymmetryError::NotIsonemal);
    }
    classify_species_of_group(&g)
}

/// Classification from an already-enumerated group.
pub fn classify_species_of_group(g: &GroupDescription) -> Result<SpeciesReport, SymmetryError> {
    let has_quarter = g
        .centre_families()
        .iter()
        .any(|f| f.quarter_turns == 1);
    if has_quarter {
        let unit = match lattice_unit_of(g) {
            Ok(u) => u,
            Err(SymmetryError::UnsupportedLevel { m, n }) => {
                return Ok(SpeciesReport::QuarterUnresolved {
                    unit: None,
                    note: format!("legs ({m},{n}) beyond level 5"),
                })
            }
            Err(e) => return Err(e),
        };
        let mixed = unit.corner_kind != unit.center_kind;
        let all_tau = unit.corner_kind == MarkerKind::QuarterTau && !mixed;
        let species = match (mixed, all_tau, unit.level) {
            (false, false, 2) => Some(QuarterSpecies::S34),
            (false, false, 3) => Some(QuarterSpecies::S33_3),
            (false, false, 4) => Some(QuarterSpecies::S33_4),
            (false, true, 1) => Some(QuarterSpecies::S36_1),
            (false, true, 2) => {
                if unit.anchor.is_cell_centre() {
                    Some(QuarterSpecies::S36S)
                } else {
                    Some(QuarterSpecies::S36_2)
                }
            }
            (false, true, 3) => Some(QuarterSpecies::S35_3),
            (false, true, 4) => Some(QuarterSpecies::S35_4),
            (true, _, 1) => Some(QuarterSpecies::S39),
            (true, _, 3) => Some(QuarterSpecies::S38),
            (true, _, 4) => Some(QuarterSpecies::S37),
            _ => None,
        };
        return Ok(match species {
            Some(sp) => SpeciesReport::QuarterTurn { species: sp, unit },
            None => SpeciesReport::QuarterUnresolved {
                note: format!(
                    "level {} with {:?}/{:?} markers matches no species",
                    unit.level, unit.corner_kind, unit.center_kind
                ),
                unit: Some(unit),
            },
        });
    }

    let features = axis_features(g);
    let label = axis_species_label(&features);
    Ok(SpeciesReport::Axis { label, features })
}

/// The axis feature vector of a group (meaningful when it has no quarter
/// turns).
pub fn axis_features(g: &GroupDescription) -> AxisFeatures {
    let up_period = axis_intercept_period(g, 1);
    let down_period = axis_intercept_period(g, -1);
    let axes_up = g.concrete_axes(1, up_period);
    let axes_down = g.concrete_axes(-1, down_period);
    let half_turns = half_turn_classes(g);
    let all_glide_axes_in_mirror_position = axes_up
        .iter()
        .chain(axes_down.iter())
        .all(|a| a.mirror_position);
    let all_half_turn_centres_at_cell_corners = half_turns
        .iter()
        .all(|h| h.positions == vec![CellPosition::Corner]);
    let diamond_spacing_delta = diamond_spacing(g);
    AxisFeatures {
        axes_up,
        up_period,
        axes_down,
        down_period,
        half_turns,
        all_glide_axes_in_mirror_position,
        all_half_turn_centres_at_cell_corners,
        diamond_spacing_delta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::twillin;

    fn unit_of(d: &Design) -> LatticeUnit {
        lattice_unit_of(&enumerate_symmetries(d).unwrap()).unwrap()
    }

    #[test]
    fn satin_5_3_unit_is_level_1_m2_n1() {
        let u = unit_of(&Design::satin(5, 3).unwrap());
        assert_eq!((u.level, u.m, u.n), (1, 2, 1));
        assert_eq!(u.corner_kind, MarkerKind::QuarterTau);
        assert_eq!(u.center_kind, MarkerKind::QuarterTau);
        assert_eq!(u.area(), 5);
        assert_eq!(u.midside_kinds, vec![MarkerKind::Half]);
    }

    #[test]
    fn doubled_satin_unit_is_level_3_m4_n2() {
        let u = unit_of(&Design::satin(5, 3).unwrap().doubled());
        assert_eq!((u.level, u.m, u.n), (3, 4, 2));
        assert!(u.anchor.is_cell_corner());
    }

    #[test]
    fn satin_10_3_unit_is_level_2() {
        let u = unit_of(&Design::satin(10, 3).unwrap());
        assert_eq!(u.level, 2);
        assert_eq!(u.area(), 10);
        assert!(u.anchor.is_cell_centre());
    }

    #[test]
    fn level_chain_arithmetic() {
        assert_eq!(level_of_legs(2, 1), Some(1));
        assert_eq!(level_of_legs(3, 1), Some(2));
        assert_eq!(level_of_legs(4, 2), Some(3));
        assert_eq!(level_of_legs(6, 2), Some(4));
        assert_eq!(level_of_legs(8, 4), Some(5));
        assert_eq!(level_of_legs(3, 4), Some(1));
        assert_eq!(level_of_legs(7, 1), Some(2));
        assert_eq!(level_of_legs(6, 3), None);
    }

    #[test]
    fn doubling_shifts_level_by_two() {
        // legs double, levels go 1 -> 3 -> 5 and 2 -> 4
        let s = Design::satin(5, 3).unwrap();
        let u1 = unit_of(&s);
        let u3 = unit_of(&s.doubled());
        assert_eq!((u3.m, u3.n), (2 * u1.m, 2 * u1.n));
        assert_eq!(u3.level, 3);
        let u5 = unit_of(&s.doubled().doubled());
        assert_eq!((u5.m, u5.n), (4 * u1.m, 4 * u1.n));
        assert_eq!(u5.level, 5);
        let t = Design::satin(10, 3).unwrap();
        let u2 = unit_of(&t);
        let u4 = unit_of(&t.doubled());
        assert_eq!((u4.m, u4.n), (2 * u2.m, 2 * u2.n));
        assert_eq!((u2.level, u4.level), (2, 4));
    }

    #[test]
    fn species_of_square_satins() {
        let r = classify_species(&Design::satin(5, 3).unwrap()).unwrap();
        assert_eq!(r.label(), "36_1");
        let r = classify_species(&Design::satin(10, 3).unwrap()).unwrap();
        assert_eq!(r.label(), "36_s");
        let r = classify_species(&Design::satin(13, 5).unwrap()).unwrap();
        assert_eq!(r.label(), "36_1");
    }

    #[test]
    fn species_of_doubled_satin_is_35_3() {
        let r = classify_species(&Design::satin(5, 3).unwrap().doubled()).unwrap();
        assert_eq!(r.label(), "35_3");
    }

    #[test]
    fn twillin_is_27_o_with_delta_and_3delta_spacings() {
        let t = twillin();
        let r = classify_species(&t).unwrap();
        assert_eq!(r.label(), "27_o");
        let SpeciesReport::Axis { features, .. } = r else {
            panic!("twillin should be an axis species");
        };
        assert!(features.all_glide_axes_in_mirror_position);
        assert!(features.all_half_turn_centres_at_cell_corners);
        // reflection and glide axes alternate delta apart in one
        // direction and 3*delta apart in the other: intercept gaps of 2
        // and 6 half-delta steps
        let gaps = |axes: &[ConcreteAxis], period: i64| -> Vec<i64> {
            let mut is: Vec<i64> = axes.iter().map(|a| a.intercept).collect();
            is.sort_unstable();
            let mut gs: Vec<i64> = is.windows(2).map(|w| w[1] - w[0]).collect();
            if let (Some(&first), Some(&last)) = (is.first(), is.last()) {
                gs.push(first + period - last);
            }
            gs
        };
        let mut all_gaps = vec![
            gaps(&features.axes_up, features.up_period),
            gaps(&features.axes_down, features.down_period),
        ];
        all_gaps.sort_by_key(|g| g[0]);
        assert!(all_gaps[0].iter().all(|&g| g == 2)); // delta apart
        assert!(all_gaps[1].iter().all(|&g| g == 6)); // 3*delta apart
        // mirrors and glides alternate along the delta-spaced direction
        assert_eq!(features.diamond_spacing_delta, Some((3, 1)));
    }

    #[test]
    fn rectangular_satin_has_half_turns_at_cell_centres() {
        // satin(8,3) has mirrors and half turns at dark-cell centres, the
        // species-26 style feature that excludes twillin colouring
        let r = classify_species(&Design::satin(8, 3).unwrap()).unwrap();
        let SpeciesReport::Axis { features, .. } = &r else {
            panic!("satin(8,3) should be an axis species");
        };
        assert!(!features.all_half_turn_centres_at_cell_corners);
        assert!(features
            .half_turns
            .iter()
            .any(|h| h.positions.contains(&CellPosition::Centre)));
    }

    #[test]
    fn side_preserving_quarter_centres_never_at_cell_centres() {
        for d in [
            Design::twill(2, 1).unwrap(),
            Design::satin(5, 3).unwrap(),
            Design::satin(5, 3).unwrap().doubled(),
            Design::satin(10, 3).unwrap(),
            Design::satin(13, 5).unwrap(),
        ] {
            let g = enumerate_symmetries(&d).unwrap();
            let lam = g.centre_lattice(1);
            for f in g.centre_families() {
                if f.quarter_turns != 1 || f.tau {
                    continue;
                }
                // all parity classes of the family: representative plus
                // the basis-combination offsets
                let b = lam.basis();
                for combo in 0..4u8 {
                    let mut p = f.centre;
                    if combo & 1 != 0 {
                        p = p + Point2H::new(b[0].0, b[0].1);
                    }
                    if combo & 2 != 0 {
                        p = p + Point2H::new(b[1].0, b[1].1);
                    }
                    assert!(!p.is_cell_centre(), "tau-free quarter turn at cell centre");
                }
            }
        }
    }

    #[test]
    fn non_isonemal_input_is_rejected() {
        let e = classify_species(&Design::satin(7, 2).unwrap());
        assert_eq!(e.unwrap_err(), SymmetryError::NotIsonemal);
    }
}
