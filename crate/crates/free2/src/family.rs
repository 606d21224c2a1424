//! The ten parametric word families attached to the two-parameter knot
//! family `K(p, q)`, plus the boundary-slope formula.
//!
//! The knots live on a genus-two handlebody whose fundamental group is the
//! rank-two free group; `p` and `q` count Dehn twists along two annuli and
//! `n` indexes the lifts of certain curves to a twisted neighborhood. Each
//! family is a fixed template: a sequence of literal runs and of
//! parenthesized blocks raised to the `n`-th power, every atom being a
//! generator with an exponent affine in `p` and `q`. Substitution happens
//! on the template data and free reduction does the rest, so degenerate
//! parameter values (`p = 0`, `q = 0`, `n = 0`) need no special cases.
//!
//! Negative `n` expands a block as the `|n|`-th power of its inverse.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Word, DEFAULT_LENGTH_CAP};

/// Identifies one of the ten word families.
///
/// The first seven families take the full `(n, p, q)` triple; `M0`, `M1`,
/// and `DP` ignore the lift index and take `(p, q)` only. The short tags
/// (`c0p`, `l0`, `dp`, ...) are the names used on the command line and in
/// reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// First lift of the first annulus core, `c0'`.
    C0P,
    /// Second lift of the first annulus core, `c0''`.
    C0PP,
    /// First lift of the second annulus core, `c1'`.
    C1P,
    /// Second lift of the second annulus core, `c1''`.
    C1PP,
    /// Lifted center circle `l0'` of the twisted neighborhood.
    L0,
    /// Lifted center circle `l1'` of the twisted neighborhood.
    L1,
    /// Boundary of the lifted waist disk.
    D2,
    /// Core of the first companion annulus candidate.
    M0,
    /// Core of the second companion annulus candidate.
    M1,
    /// Boundary of the once-punctured Klein bottle; the knot itself.
    DP,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::C0P,
        FamilyId::C0PP,
        FamilyId::C1P,
        FamilyId::C1PP,
        FamilyId::L0,
        FamilyId::L1,
        FamilyId::D2,
        FamilyId::M0,
        FamilyId::M1,
        FamilyId::DP,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::C0P => "c0p",
            FamilyId::C0PP => "c0pp",
            FamilyId::C1P => "c1p",
            FamilyId::C1PP => "c1pp",
            FamilyId::L0 => "l0",
            FamilyId::L1 => "l1",
            FamilyId::D2 => "d2",
            FamilyId::M0 => "m0",
            FamilyId::M1 => "m1",
            FamilyId::DP => "dp",
        }
    }

    pub fn from_tag(text: &str) -> Option<FamilyId> {
        FamilyId::ALL.into_iter().find(|f| f.tag() == text)
    }

    /// Whether the template contains `n`-power blocks.
    pub fn takes_n(self) -> bool {
        !matches!(self, FamilyId::M0 | FamilyId::M1 | FamilyId::DP)
    }

    fn pieces(self) -> &'static [Piece] {
        match self {
            FamilyId::C0P => C0P_PIECES,
            FamilyId::C0PP => C0PP_PIECES,
            FamilyId::C1P => C1P_PIECES,
            FamilyId::C1PP => C1PP_PIECES,
            FamilyId::L0 => L0_PIECES,
            FamilyId::L1 => L1_PIECES,
            FamilyId::D2 => D2_PIECES,
            FamilyId::M0 => M0_PIECES,
            FamilyId::M1 => M1_PIECES,
            FamilyId::DP => DP_PIECES,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl serde::Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// Parameter triple `(n, p, q)`. All integer values are legal; degenerate
/// substitutions collapse by free reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamTriple {
    pub n: i64,
    pub p: i64,
    pub q: i64,
}

impl ParamTriple {
    pub fn new(n: i64, p: i64, q: i64) -> ParamTriple {
        ParamTriple { n, p, q }
    }

    /// Parameters for the families without a lift index.
    pub fn pq(p: i64, q: i64) -> ParamTriple {
        ParamTriple { n: 0, p, q }
    }
}

/// Exponent affine in the twist counts: `k + cp·p + cq·q`.
#[derive(Clone, Copy)]
struct Affine {
    k: i64,
    cp: i64,
    cq: i64,
}

impl Affine {
    fn eval(self, p: i64, q: i64) -> i128 {
        self.k as i128 + self.cp as i128 * p as i128 + self.cq as i128 * q as i128
    }
}

/// One template atom: a positive generator with a symbolic exponent.
#[derive(Clone, Copy)]
struct Atom {
    base: Letter,
    exp: Affine,
}

/// `x^(k + cp·p + cq·q)`.
const fn xa(k: i64, cp: i64, cq: i64) -> Atom {
    Atom {
        base: Letter::X,
        exp: Affine { k, cp, cq },
    }
}

/// `y^(k + cp·p + cq·q)`.
const fn ya(k: i64, cp: i64, cq: i64) -> Atom {
    Atom {
        base: Letter::Y,
        exp: Affine { k, cp, cq },
    }
}

enum Piece {
    /// Atoms substituted literally.
    Run(&'static [Atom]),
    /// A parenthesized block raised to the `n`-th power.
    Block(&'static [Atom]),
}

// x^{p+1} y x^p y^{q+1} x^p y
const C0P_BLOCK: &[Atom] = &[xa(1, 1, 0), ya(1, 0, 0), xa(0, 1, 0), ya(1, 0, 1), xa(0, 1, 0), ya(1, 0, 0)];
// ybar x^p y x^p y^q x^p y x^p ybar xbar^p
const C0PP_BLOCK: &[Atom] = &[
    ya(-1, 0, 0),
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(0, 0, 1),
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(-1, 0, 0),
    xa(0, -1, 0),
];
// y^{q+1} x^p y x^{p+1} y x^p
const C1P_BLOCK: &[Atom] = &[ya(1, 0, 1), xa(0, 1, 0), ya(1, 0, 0), xa(1, 1, 0), ya(1, 0, 0), xa(0, 1, 0)];
// x^p y x^p y^q x^p y x^p ybar xbar^p ybar
const C1PP_BLOCK: &[Atom] = &[
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(0, 0, 1),
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(-1, 0, 0),
    xa(0, -1, 0),
    ya(-1, 0, 0),
];

// x^p y x^{p+1} y x^p y^{q+1}; also the whole m1 template.
const M1_ATOMS: &[Atom] = &[xa(0, 1, 0), ya(1, 0, 0), xa(1, 1, 0), ya(1, 0, 0), xa(0, 1, 0), ya(1, 0, 1)];

// x^p (x^{p+1} y x^p y^{q+1} x^p y)^n
const C0P_PIECES: &[Piece] = &[Piece::Run(&[xa(0, 1, 0)]), Piece::Block(C0P_BLOCK)];

// x^p y x y (ybar x^p y x^p y^q x^p y x^p ybar xbar^p)^n
const C0PP_PIECES: &[Piece] = &[
    Piece::Run(&[xa(0, 1, 0), ya(1, 0, 0), xa(1, 0, 0), ya(1, 0, 0)]),
    Piece::Block(C0PP_BLOCK),
];

// y xbar^p ybar xbar^p ybar^q (y^{q+1} x^p y x^{p+1} y x^p)^n
const C1P_PIECES: &[Piece] = &[
    Piece::Run(&[ya(1, 0, 0), xa(0, -1, 0), ya(-1, 0, 0), xa(0, -1, 0), ya(0, 0, -1)]),
    Piece::Block(C1P_BLOCK),
];

// ybar^q xbar^p ybar xbar^p (x^p y x^p y^q x^p y x^p ybar xbar^p ybar)^n
const C1PP_PIECES: &[Piece] = &[
    Piece::Run(&[ya(0, 0, -1), xa(0, -1, 0), ya(-1, 0, 0), xa(0, -1, 0)]),
    Piece::Block(C1PP_BLOCK),
];

// (x^{p+1} y x^p y^{q+1} x^p y)^n x^{p+1} y
//     (ybar x^p y x^p y^q x^p y x^p ybar xbar^p)^n x^p y
const L0_PIECES: &[Piece] = &[
    Piece::Block(C0P_BLOCK),
    Piece::Run(&[xa(1, 1, 0), ya(1, 0, 0)]),
    Piece::Block(C0PP_BLOCK),
    Piece::Run(&[xa(0, 1, 0), ya(1, 0, 0)]),
];

// (y^{q+1} x^p y x^{p+1} y x^p)^n y xbar^p ybar xbar^p ybar^q xbar^p ybar xbar^p
//     (x^p y x^p y^q x^p y x^p ybar xbar^p ybar)^n ybar^q
const L1_PIECES: &[Piece] = &[
    Piece::Block(C1P_BLOCK),
    Piece::Run(&[
        ya(1, 0, 0),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
        ya(0, 0, -1),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
    ]),
    Piece::Block(C1PP_BLOCK),
    Piece::Run(&[ya(0, 0, -1)]),
];

// (x^p y x^{p+1} y x^p y^{q+1})^n
// (ybar^q xbar^p ybar xbar^p y x^p y xbar^p ybar xbar^p)^n
// (y x^p y xbar^p ybar xbar^p ybar^q xbar^p ybar xbar^p)^n
// x^p y x^p (y^q x^p y x^p ybar xbar^p ybar x^p y x^p)^n ybar
// (xbar^p ybar xbar^{p+1} ybar xbar^p ybar^{q+1})^n
// xbar^p ybar xbar^p (x^p y x^p y^q x^p y x^p ybar xbar^p ybar)^n y
const D2_PIECES: &[Piece] = &[
    Piece::Block(M1_ATOMS),
    Piece::Block(&[
        ya(0, 0, -1),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
        ya(1, 0, 0),
        xa(0, 1, 0),
        ya(1, 0, 0),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
    ]),
    Piece::Block(&[
        ya(1, 0, 0),
        xa(0, 1, 0),
        ya(1, 0, 0),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
        ya(0, 0, -1),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
    ]),
    Piece::Run(&[xa(0, 1, 0), ya(1, 0, 0), xa(0, 1, 0)]),
    Piece::Block(&[
        ya(0, 0, 1),
        xa(0, 1, 0),
        ya(1, 0, 0),
        xa(0, 1, 0),
        ya(-1, 0, 0),
        xa(0, -1, 0),
        ya(-1, 0, 0),
        xa(0, 1, 0),
        ya(1, 0, 0),
        xa(0, 1, 0),
    ]),
    Piece::Run(&[ya(-1, 0, 0)]),
    Piece::Block(&[xa(0, -1, 0), ya(-1, 0, 0), xa(-1, -1, 0), ya(-1, 0, 0), xa(0, -1, 0), ya(-1, 0, -1)]),
    Piece::Run(&[xa(0, -1, 0), ya(-1, 0, 0), xa(0, -1, 0)]),
    Piece::Block(C1PP_BLOCK),
    Piece::Run(&[ya(1, 0, 0)]),
];

// x^p y x^p ybar xbar^p ybar x^p y x^p y^q
const M0_PIECES: &[Piece] = &[Piece::Run(&[
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(-1, 0, 0),
    xa(0, -1, 0),
    ya(-1, 0, 0),
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(0, 0, 1),
])];

// x^p y x^{p+1} y x^p y^{q+1}
const M1_PIECES: &[Piece] = &[Piece::Run(M1_ATOMS)];

// x^p y x^{2p+1} y x^p y^q x^p y x^p y^q
const DP_PIECES: &[Piece] = &[Piece::Run(&[
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(1, 2, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(0, 0, 1),
    xa(0, 1, 0),
    ya(1, 0, 0),
    xa(0, 1, 0),
    ya(0, 0, 1),
])];

fn run_letters(atoms: &[Atom], p: i64, q: i64) -> u128 {
    atoms
        .iter()
        .fold(0u128, |acc, a| acc.saturating_add(a.exp.eval(p, q).unsigned_abs()))
}

fn expand_run(atoms: &[Atom], p: i64, q: i64) -> Word {
    let mut letters = Vec::new();
    for atom in atoms {
        let e = atom.exp.eval(p, q);
        let letter = if e < 0 { atom.base.inverse() } else { atom.base };
        letters.extend(std::iter::repeat(letter).take(e.unsigned_abs() as usize));
    }
    Word::from_letters(letters)
}

/// Expands `family` at `params` and freely reduces, with the default
/// length cap.
pub fn generate(family: FamilyId, params: ParamTriple) -> Result<Word> {
    generate_with_cap(family, params, DEFAULT_LENGTH_CAP)
}

/// Expands `family` at `params`, erroring when the unreduced letter count
/// would exceed `cap`. Families without a lift index reject `n ≠ 0`.
pub fn generate_with_cap(family: FamilyId, params: ParamTriple, cap: usize) -> Result<Word> {
    if !family.takes_n() && params.n != 0 {
        return Err(Error::NoTwistParameter { family: family.tag() });
    }
    let ParamTriple { n, p, q } = params;
    let mut needed: u128 = 0;
    for piece in family.pieces() {
        let piece_len = match piece {
            Piece::Run(atoms) => run_letters(atoms, p, q),
            Piece::Block(atoms) => run_letters(atoms, p, q).saturating_mul(n.unsigned_abs() as u128),
        };
        needed = needed.saturating_add(piece_len);
    }
    if needed > cap as u128 {
        return Err(Error::LengthCap { needed, cap });
    }
    let mut acc = Word::identity();
    for piece in family.pieces() {
        let next = match piece {
            Piece::Run(atoms) => expand_run(atoms, p, q),
            Piece::Block(atoms) => expand_run(atoms, p, q).checked_pow(n, cap)?,
        };
        acc = acc.multiply(&next);
    }
    Ok(acc)
}

/// The boundary slope `4q − 36p` of the twisted spanning surface at
/// `(p, q)`: each of the two twists changes the framing by the square of
/// the number of strands it crosses (6 and 2).
pub fn boundary_slope(p: i64, q: i64) -> i64 {
    4 * q - 36 * p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::equiv;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    fn gen(f: FamilyId, n: i64, p: i64, q: i64) -> Word {
        generate(f, ParamTriple::new(n, p, q)).unwrap()
    }

    #[test]
    fn tags_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(FamilyId::from_tag(f.tag()), Some(f));
            assert_eq!(f.to_string(), f.tag());
        }
        assert_eq!(FamilyId::from_tag("c2p"), None);
        let with_n: Vec<bool> = FamilyId::ALL.iter().map(|f| f.takes_n()).collect();
        assert_eq!(with_n, [true, true, true, true, true, true, true, false, false, false]);
    }

    #[test]
    fn zero_twists_delete_the_blocks() {
        for f in FamilyId::ALL {
            for p in -4..=4 {
                for q in -4..=4 {
                    let at_zero = gen(f, 0, p, q);
                    let mut runs_only = Word::identity();
                    for piece in f.pieces() {
                        if let Piece::Run(atoms) = piece {
                            runs_only = runs_only.multiply(&expand_run(atoms, p, q));
                        }
                    }
                    assert_eq!(at_zero, runs_only, "{f} at (0, {p}, {q})");
                }
            }
        }
    }

    #[test]
    fn first_lift_at_zero_is_a_power_of_x() {
        for p in -6..=6 {
            for q in -6..=6 {
                assert_eq!(gen(FamilyId::C0P, 0, p, q), Word::x().pow(p));
            }
        }
    }

    #[test]
    fn first_lift_example_is_a_cube() {
        assert_eq!(gen(FamilyId::C0P, 1, -1, 0), w("(X y)^3"));
    }

    #[test]
    fn center_circle_identity_at_zero() {
        for p in -6..=6 {
            for q in -6..=6 {
                let l0 = gen(FamilyId::L0, 0, p, q);
                let expected = Word::x().multiply(&Word::x().pow(p).multiply(&Word::y()).pow(2));
                assert_eq!(l0, expected, "l0 at (0, {p}, {q})");
            }
        }
    }

    #[test]
    fn knot_word_at_q0_matches_the_short_form() {
        for p in -4..=4 {
            let dp = gen(FamilyId::DP, 0, p, 0);
            let short = Word::x().multiply(&Word::x().pow(2 * p).multiply(&Word::y()).pow(3));
            assert_eq!(dp.cyclic_core(), short.cyclic_core(), "dp at ({p}, 0)");
        }
    }

    #[test]
    fn waist_disk_at_zero_is_a_commutator_of_conjugate_pairs() {
        for p in -4..=4 {
            for q in -4..=4 {
                let d2 = gen(FamilyId::D2, 0, p, q);
                let yxp = Word::y().multiply(&Word::x().pow(p));
                let ybar_xbar = Word::y().invert().multiply(&Word::x().pow(-p));
                let expected = yxp.pow(2).multiply(&ybar_xbar.pow(2));
                assert_eq!(d2.cyclic_core(), expected.cyclic_core(), "d2 at (0, {p}, {q})");
            }
        }
    }

    #[test]
    fn annulus_core_merges_runs_at_q0() {
        let m0 = gen(FamilyId::M0, 0, 2, 0);
        assert_eq!(m0.cyclic_core(), w("x^4 y x^2 Y X^2 Y x^2 y").cyclic_core());
        // At q != 0 the word keeps both y and ybar letters.
        let m0 = gen(FamilyId::M0, 0, 2, 3);
        let letters = m0.cyclic_core();
        assert!(letters.letters().contains(&Letter::Y));
        assert!(letters.letters().contains(&Letter::YBar));
    }

    #[test]
    fn exponent_sum_formulas() {
        for p in -6..=6 {
            for q in -6..=6 {
                let dp = gen(FamilyId::DP, 0, p, q).exponent_sums();
                assert_eq!((dp.x, dp.y), (6 * p + 1, 2 * q + 3));
                let l0 = gen(FamilyId::L0, 0, p, q).exponent_sums();
                assert_eq!((l0.x, l0.y), (2 * p + 1, 2));
            }
        }
    }

    #[test]
    fn negative_twists_invert_the_block() {
        for p in -3..=3 {
            for q in -3..=3 {
                for n in 1..=3 {
                    let head = Word::x().pow(p);
                    let block = head.invert().multiply(&gen(FamilyId::C0P, 1, p, q));
                    let direct = gen(FamilyId::C0P, -n, p, q);
                    assert_eq!(direct, head.multiply(&block.pow(-n)), "c0p at ({n}, {p}, {q})");
                }
            }
        }
    }

    #[test]
    fn twisting_is_equivalence_preserving_sanity() {
        // Spot check that small parameter changes really change the class.
        assert!(!equiv(&gen(FamilyId::DP, 0, 1, 1), &gen(FamilyId::DP, 0, 1, 2)));
        assert!(!equiv(&gen(FamilyId::DP, 0, 1, 1), &gen(FamilyId::DP, 0, 2, 1)));
    }

    #[test]
    fn lift_index_rejected_where_meaningless() {
        assert_eq!(
            generate(FamilyId::M0, ParamTriple::new(1, 1, 1)),
            Err(Error::NoTwistParameter { family: "m0" })
        );
        assert!(generate(FamilyId::M0, ParamTriple::pq(1, 1)).is_ok());
    }

    #[test]
    fn expansion_respects_the_cap() {
        let err = generate_with_cap(FamilyId::D2, ParamTriple::new(50, 6, 6), 100);
        assert!(matches!(err, Err(Error::LengthCap { needed, cap: 100 }) if needed > 100));
        // Extreme parameters must not panic on overflow.
        let err = generate(FamilyId::D2, ParamTriple::new(i64::MAX, i64::MAX, i64::MIN));
        assert!(matches!(err, Err(Error::LengthCap { .. })));
    }

    #[test]
    fn slope_formula() {
        assert_eq!(boundary_slope(0, 0), 0);
        assert_eq!(boundary_slope(1, 0), -36);
        assert_eq!(boundary_slope(0, 1), 4);
        assert_eq!(boundary_slope(-2, 5), 92);
    }
}
