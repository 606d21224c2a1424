//! Per-`(p, q)` classification of the knot family: special forms, boundary
//! injectivity, a tunnel witness, atoroidality certificate inputs, the
//! `(1,1)`-decomposition search, and surgery invariants, plus grid surveys.
//!
//! Everything here is window-bounded where the underlying statement
//! quantifies over all lift indices `n`: a certificate says "verified for
//! `|n| ≤ window`", never more. The lift index order used by every search
//! is `0, 1, -1, 2, -2, ...` so reports are reproducible.

use serde::Serialize;

use crate::aut::{is_primitive, multiplicity};
use crate::conjugacy::{comm_power_form, comm_power_pair, equiv, CommCondition, CommPowerWitness};
use crate::error::{Error, Result};
use crate::family::{boundary_slope, generate, FamilyId, ParamTriple};
use crate::word::Word;

/// Coarse type of the knot at `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnotForm {
    Trivial,
    /// A torus knot with the given parameter pair.
    Torus(i64, i64),
    General,
}

impl KnotForm {
    pub fn tag(self) -> &'static str {
        match self {
            KnotForm::Trivial => "trivial",
            KnotForm::Torus(..) => "torus",
            KnotForm::General => "general",
        }
    }

    pub fn torus_params(self) -> Option<(i64, i64)> {
        match self {
            KnotForm::Torus(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl Serialize for KnotForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// The special-form table: trivial at `(0,0)` and `(0,1)`; the `(2, 2q-1)`
/// torus knot at `p = 0` for `q` other than `-1, 0, 1`; the `(5, 8)` torus
/// knot at `(-1, 1)`. Everything else, including `(0, -1)`, runs through
/// the general pipeline.
pub fn special_form(p: i64, q: i64) -> KnotForm {
    match (p, q) {
        (0, 0) | (0, 1) => KnotForm::Trivial,
        (0, -1) => KnotForm::General,
        (0, q) => KnotForm::Torus(2, 2 * q - 1),
        (-1, 1) => KnotForm::Torus(5, 8),
        _ => KnotForm::General,
    }
}

fn knot_word(p: i64, q: i64) -> Word {
    generate(FamilyId::DP, ParamTriple::pq(p, q))
        .expect("knot template stays under the default cap for in-range parameters")
}

/// Whether the boundary of the spanning surface is injective on
/// fundamental groups: true iff the knot word is neither primitive nor a
/// proper power of a primitive.
pub fn pi1_injective(p: i64, q: i64) -> bool {
    let dp = knot_word(p, q);
    if is_primitive(&dp) {
        return false;
    }
    // Never empty: its exponent sums (6p+1, 2q+3) cannot both vanish.
    let m = multiplicity(&dp).expect("knot word is nonempty");
    !(m.exponent >= 2 && m.root_is_primitive)
}

/// Searches the lifted center circles for a primitive one and returns it
/// as an unknotting-tunnel witness. Lift index 0 of the first circle works
/// for every `(p, q)` (it reduces to `x (x^p y)^2`), so the search order
/// makes the answer deterministic.
pub fn tunnel_one(p: i64, q: i64, window: u32) -> Option<Word> {
    for n in n_order(window) {
        for family in [FamilyId::L0, FamilyId::L1] {
            if let Ok(lift) = generate(family, ParamTriple::new(n, p, q)) {
                if is_primitive(&lift) {
                    return Some(lift);
                }
            }
        }
    }
    None
}

/// Outcome of the atoroidality input checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CertificateStatus {
    /// Every lifted center circle with `|n| ≤ window` has multiplicity 1,
    /// and at least one of the two annulus-core words does too.
    VerifiedWithinWindow { window: u32 },
    /// A word that needed multiplicity 1 is a proper power (exponent 0
    /// records the degenerate case of an empty word).
    Counterexample {
        family: FamilyId,
        n: Option<i64>,
        exponent: u64,
    },
}

impl CertificateStatus {
    pub fn verified(&self) -> bool {
        matches!(self, CertificateStatus::VerifiedWithinWindow { .. })
    }
}

fn multiplicity_exponent(w: &Word) -> u64 {
    // Exponent 0 marks the empty word, which never passes a
    // multiplicity-1 requirement.
    multiplicity(w).map(|m| m.exponent).unwrap_or(0)
}

/// Window-bounded check of the inputs to the no-essential-torus argument:
/// each lifted center circle must have multiplicity 1 for `|n| ≤ window`,
/// and at least one of the two candidate companion-annulus cores must
/// have multiplicity 1.
pub fn atoroidality_certificate(p: i64, q: i64, window: u32) -> CertificateStatus {
    for n in n_order(window) {
        for family in [FamilyId::L0, FamilyId::L1] {
            let lift = match generate(family, ParamTriple::new(n, p, q)) {
                Ok(w) => w,
                Err(_) => {
                    return CertificateStatus::Counterexample {
                        family,
                        n: Some(n),
                        exponent: 0,
                    }
                }
            };
            let exponent = multiplicity_exponent(&lift);
            if exponent != 1 {
                return CertificateStatus::Counterexample {
                    family,
                    n: Some(n),
                    exponent,
                };
            }
        }
    }
    let m0 = multiplicity_exponent(&knot_core(FamilyId::M0, p, q));
    let m1 = multiplicity_exponent(&knot_core(FamilyId::M1, p, q));
    if m0 != 1 && m1 != 1 {
        // Either annulus core suffices; report the one closer to passing.
        let (family, exponent) = if m0 <= m1 { (FamilyId::M0, m0) } else { (FamilyId::M1, m1) };
        return CertificateStatus::Counterexample {
            family,
            n: None,
            exponent,
        };
    }
    CertificateStatus::VerifiedWithinWindow { window }
}

fn knot_core(family: FamilyId, p: i64, q: i64) -> Word {
    generate(family, ParamTriple::pq(p, q))
        .expect("annulus-core templates stay under the default cap for in-range parameters")
}

/// A candidate lift pairing that the dispatcher could not test: one of its
/// words was a proper power of a non-primitive word (outside the decision
/// procedures' domain) or collapsed to the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedCandidate {
    pub n: i64,
    pub c0: FamilyId,
    pub c1: FamilyId,
    pub reason: Error,
}

/// A successful `(1,1)`-decomposition certificate: at lift index `n`, the
/// recorded pairing satisfied the recorded condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneOneWitness {
    pub n: i64,
    pub c0: FamilyId,
    pub c1: FamilyId,
    pub condition: CommCondition,
    /// The verified commutator decomposition behind conditions ii and iii.
    #[serde(skip)]
    pub detail: Option<CommPowerWitness>,
}

/// Result of the window-bounded `(1,1)`-decomposition search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneOneDecision {
    pub decided: bool,
    pub window: u32,
    pub witness: Option<OneOneWitness>,
    /// Candidates skipped for being outside the procedures' domain.
    #[serde(skip)]
    pub skipped: Vec<SkippedCandidate>,
}

impl OneOneDecision {
    /// The placeholder attached to rows that never run the search.
    pub fn not_run() -> OneOneDecision {
        OneOneDecision {
            decided: false,
            window: 0,
            witness: None,
            skipped: Vec::new(),
        }
    }
}

const PAIRINGS: [(FamilyId, FamilyId); 4] = [
    (FamilyId::C0P, FamilyId::C1P),
    (FamilyId::C0P, FamilyId::C1PP),
    (FamilyId::C0PP, FamilyId::C1P),
    (FamilyId::C0PP, FamilyId::C1PP),
];

/// Searches lift indices `0, 1, -1, ..., ±window` and the four lift
/// pairings for a `(1,1)`-decomposition certificate on the waist-disk word
/// `D(n)`:
///
/// * both lifts have multiplicity 1: condition i, `D(n) ≡ [x, y]`;
/// * exactly one is a proper power: condition ii via [`comm_power_form`];
/// * both are proper powers: condition iii via [`comm_power_pair`].
///
/// The first success in the fixed order is returned. Pairings whose words
/// fall outside the procedures' domain (power of a non-primitive, empty
/// word) are recorded as skipped rather than treated as failures. Errors
/// only on expansion overflow of the configured length cap.
pub fn decide_11(p: i64, q: i64, window: u32) -> Result<OneOneDecision> {
    let mut skipped = Vec::new();
    let comm = Word::commutator(&Word::x(), &Word::y());
    for n in n_order(window) {
        let disk = generate(FamilyId::D2, ParamTriple::new(n, p, q))?;
        for (f0, f1) in PAIRINGS {
            let gamma0 = generate(f0, ParamTriple::new(n, p, q))?;
            let gamma1 = generate(f1, ParamTriple::new(n, p, q))?;
            let mut skip = |reason: Error| {
                skipped.push(SkippedCandidate { n, c0: f0, c1: f1, reason });
            };
            let (e0, e1) = match (multiplicity(&gamma0), multiplicity(&gamma1)) {
                (Ok(m0), Ok(m1)) => (m0.exponent, m1.exponent),
                (Err(e), _) | (_, Err(e)) => {
                    skip(e);
                    continue;
                }
            };
            let outcome = match (e0 >= 2, e1 >= 2) {
                (false, false) => {
                    if equiv(&disk, &comm) {
                        Ok(Some((CommCondition::I, None)))
                    } else {
                        Ok(None)
                    }
                }
                (true, false) => {
                    comm_power_form(&disk, &gamma0).map(|w| w.map(|w| (CommCondition::II, Some(w))))
                }
                (false, true) => {
                    comm_power_form(&disk, &gamma1).map(|w| w.map(|w| (CommCondition::II, Some(w))))
                }
                (true, true) => comm_power_pair(&disk, &gamma0, &gamma1)
                    .map(|w| w.map(|w| (CommCondition::III, Some(w)))),
            };
            match outcome {
                Ok(Some((condition, detail))) => {
                    return Ok(OneOneDecision {
                        decided: true,
                        window,
                        witness: Some(OneOneWitness { n, c0: f0, c1: f1, condition, detail }),
                        skipped,
                    });
                }
                Ok(None) => {}
                Err(e @ (Error::NonPrimitiveRoot { .. } | Error::EmptyWord)) => skip(e),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(OneOneDecision { decided: false, window, witness: None, skipped })
}

/// Surgery description at the once-punctured Klein bottle's boundary
/// slope: filling there yields a Seifert fibered space over the disk with
/// singular fibers of indices `(2, 2, seifert_index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurgeryInvariant {
    pub slope: i64,
    #[serde(rename = "index")]
    pub seifert_index: u64,
}

/// Computes the surgery invariant when the knot word is primitive (the
/// condition for the twisted-neighborhood complement to be a solid torus):
/// the third fiber index is the determinant of the exponent-sum pairing of
/// the knot word with the level-zero center circle.
pub fn surgery_invariant(p: i64, q: i64) -> Option<SurgeryInvariant> {
    let dp = knot_word(p, q);
    if !is_primitive(&dp) {
        return None;
    }
    let circle = generate(FamilyId::L0, ParamTriple::new(0, p, q))
        .expect("center-circle template stays under the default cap");
    let det = dp.exponent_sums().det(circle.exponent_sums());
    Some(SurgeryInvariant {
        slope: boundary_slope(p, q),
        seifert_index: det.unsigned_abs(),
    })
}

/// Genus of the braid-closure surface associated with the meridian word;
/// linear in `|p|` and undefined at `p = 0` where the braid degenerates.
pub fn meridian_genus(p: i64) -> Result<u64> {
    if p == 0 {
        return Err(Error::GenusUndefined);
    }
    Ok(3 * p.unsigned_abs() - 1)
}

/// One classified grid point. Serializes to the stable report schema; the
/// field order here is the column order of the CSV flattening.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub p: i64,
    pub q: i64,
    pub form: KnotForm,
    pub torus_params: Option<(i64, i64)>,
    pub slope: i64,
    pub pi1_injective: Option<bool>,
    pub tunnel_witness: Option<String>,
    pub atoroidal_window: Option<u32>,
    pub atoroidal_ok: Option<bool>,
    pub one_one: OneOneDecision,
    pub surgery: Option<SurgeryInvariant>,
}

/// Classifies a single parameter point. The window bounds every lift-index
/// search; special forms skip the general-pipeline fields (reported as
/// null) and carry a `one_one` placeholder with window 0.
pub fn classify_point(p: i64, q: i64, window: u32) -> Result<ClassificationReport> {
    let form = special_form(p, q);
    let tunnel_witness = tunnel_one(p, q, window).map(|w| w.compact());
    let general = form == KnotForm::General;
    let (pi1, atoroidal, one_one) = if general {
        let cert = atoroidality_certificate(p, q, window);
        (
            Some(pi1_injective(p, q)),
            Some(cert.verified()),
            decide_11(p, q, window)?,
        )
    } else {
        (None, None, OneOneDecision::not_run())
    };
    Ok(ClassificationReport {
        p,
        q,
        form,
        torus_params: form.torus_params(),
        slope: boundary_slope(p, q),
        pi1_injective: pi1,
        tunnel_witness,
        atoroidal_window: general.then_some(window),
        atoroidal_ok: atoroidal,
        one_one,
        surgery: surgery_invariant(p, q),
    })
}

/// Classifies an inclusive grid in row order `(p, then q)`.
pub fn survey(
    p_range: (i64, i64),
    q_range: (i64, i64),
    window: u32,
) -> Result<Vec<ClassificationReport>> {
    if p_range.0 > p_range.1 || q_range.0 > q_range.1 {
        return Err(Error::EmptyRange);
    }
    let mut rows = Vec::new();
    for p in p_range.0..=p_range.1 {
        for q in q_range.0..=q_range.1 {
            rows.push(classify_point(p, q, window)?);
        }
    }
    Ok(rows)
}

/// Column header matching [`ClassificationReport::csv_row`].
pub const CSV_HEADER: &str = "p,q,form,torus_params,slope,pi1_injective,tunnel_witness,\
atoroidal_window,atoroidal_ok,one_one_decided,one_one_window,witness_n,witness_c0,\
witness_c1,witness_condition,surgery_slope,surgery_index";

fn csv_opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

impl ClassificationReport {
    /// Flattens the report into one CSV row (empty cells for nulls, the
    /// torus parameter pair rendered as `a:b`).
    pub fn csv_row(&self) -> String {
        let witness = self.one_one.witness.as_ref();
        [
            self.p.to_string(),
            self.q.to_string(),
            self.form.tag().to_string(),
            csv_opt(self.torus_params.map(|(a, b)| format!("{a}:{b}"))),
            self.slope.to_string(),
            csv_opt(self.pi1_injective),
            csv_opt(self.tunnel_witness.as_deref()),
            csv_opt(self.atoroidal_window),
            csv_opt(self.atoroidal_ok),
            self.one_one.decided.to_string(),
            self.one_one.window.to_string(),
            csv_opt(witness.map(|w| w.n)),
            csv_opt(witness.map(|w| w.c0)),
            csv_opt(witness.map(|w| w.c1)),
            csv_opt(witness.map(|w| w.condition)),
            csv_opt(self.surgery.map(|s| s.slope)),
            csv_opt(self.surgery.map(|s| s.seifert_index)),
        ]
        .join(",")
    }
}

fn n_order(window: u32) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=window as i64).flat_map(|k| [k, -k]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_form_table() {
        assert_eq!(special_form(0, 0), KnotForm::Trivial);
        assert_eq!(special_form(0, 1), KnotForm::Trivial);
        assert_eq!(special_form(0, 3), KnotForm::Torus(2, 5));
        assert_eq!(special_form(0, -4), KnotForm::Torus(2, -9));
        assert_eq!(special_form(-1, 1), KnotForm::Torus(5, 8));
        assert_eq!(special_form(0, -1), KnotForm::General);
        assert_eq!(special_form(2, 3), KnotForm::General);
        assert_eq!(special_form(-1, 0), KnotForm::General);
    }

    #[test]
    fn injectivity_examples() {
        assert!(!pi1_injective(3, 0));
        assert!(!pi1_injective(-1, 2));
        assert!(!pi1_injective(-2, 1));
        assert!(pi1_injective(2, 3));
        assert!(pi1_injective(1, 1));
    }

    #[test]
    fn tunnel_witness_is_the_level_zero_circle() {
        for (p, q) in [(1, 1), (-3, 4), (5, -2), (0, -1)] {
            let witness = tunnel_one(p, q, 6).unwrap();
            let expected = Word::x().multiply(&Word::x().pow(p).multiply(&Word::y()).pow(2));
            assert_eq!(witness, expected);
        }
    }

    #[test]
    fn atoroidality_examples() {
        assert!(atoroidality_certificate(2, 3, 6).verified());
        assert!(atoroidality_certificate(1, -1, 6).verified());
        assert!(atoroidality_certificate(-2, 5, 6).verified());
    }

    #[test]
    fn one_one_examples() {
        let d = decide_11(3, 1, 6).unwrap();
        assert!(d.decided);
        let w = d.witness.unwrap();
        assert_eq!((w.n, w.condition), (0, CommCondition::III));

        let d = decide_11(-1, 0, 6).unwrap();
        assert!(d.decided);
        let w = d.witness.unwrap();
        assert_eq!((w.n, w.condition), (1, CommCondition::II));
        assert_eq!((w.c0, w.c1), (FamilyId::C0P, FamilyId::C1P));

        let d = decide_11(2, 3, 6).unwrap();
        assert!(!d.decided);
        assert_eq!(d.window, 6);
        assert_eq!(d.witness, None);
    }

    /// `(0, -1)` runs the general pipeline by design even though the knot
    /// there is the `(2,-3)` torus knot, outside the scope of the grid
    /// characterizations (they assume `p != 0`). The honest outputs: the
    /// boundary word degenerates to the primitive `yx` (so not injective),
    /// and the disk word at lift index 1 really is a basis commutator (a
    /// true positive: that torus knot does have a `(1,1)` decomposition).
    #[test]
    fn degenerate_column_point_is_honestly_reported() {
        assert!(!pi1_injective(0, -1));

        let d = decide_11(0, -1, 6).unwrap();
        assert!(d.decided);
        let w = d.witness.unwrap();
        assert_eq!(
            (w.n, w.c0, w.c1, w.condition),
            (1, FamilyId::C0P, FamilyId::C1P, CommCondition::I)
        );
        // At lift index 0 three pairings collapse to empty circle words
        // and are recorded as skips rather than silently dropped.
        assert_eq!(d.skipped.len(), 3);
        assert!(d.skipped.iter().all(|s| s.n == 0 && s.reason == Error::EmptyWord));
    }

    #[test]
    fn surgery_examples() {
        let s = surgery_invariant(1, 0).unwrap();
        assert_eq!((s.slope, s.seifert_index), (-36, 5));
        let s = surgery_invariant(-1, 2).unwrap();
        assert_eq!((s.slope, s.seifert_index), (44, 3));
        let s = surgery_invariant(-2, 1).unwrap();
        assert_eq!((s.slope, s.seifert_index), (76, 7));
        // Not primitive away from the listed cases, so no invariant.
        assert_eq!(surgery_invariant(2, 3), None);
    }

    #[test]
    fn genus_formula() {
        assert_eq!(meridian_genus(1), Ok(2));
        assert_eq!(meridian_genus(-2), Ok(5));
        assert_eq!(meridian_genus(3), Ok(8));
        assert_eq!(meridian_genus(0), Err(Error::GenusUndefined));
    }

    #[test]
    fn report_schema_is_stable() {
        let report = classify_point(0, 3, 6).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            "{\"p\":0,\"q\":3,\"form\":\"torus\",\"torus_params\":[2,5],\"slope\":12,\
             \"pi1_injective\":null,\"tunnel_witness\":\"xy^2\",\"atoroidal_window\":null,\
             \"atoroidal_ok\":null,\"one_one\":{\"decided\":false,\"window\":0,\"witness\":null},\
             \"surgery\":{\"slope\":12,\"index\":7}}"
        );

        let report = classify_point(-1, 0, 2).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"form\":\"general\""));
        assert!(json.contains("\"witness\":{\"n\":1,\"c0\":\"c0p\",\"c1\":\"c1p\",\"condition\":\"ii\"}"));
        assert!(!json.contains("detail"));
        assert!(!json.contains("skipped"));
    }

    #[test]
    fn csv_rows_flatten_the_schema() {
        assert_eq!(CSV_HEADER.split(',').count(), 17);
        let report = classify_point(0, 3, 6).unwrap();
        assert_eq!(report.csv_row(), "0,3,torus,2:5,12,,xy^2,,,false,0,,,,,12,7");
        let report = classify_point(-1, 0, 2).unwrap();
        assert_eq!(report.csv_row().split(',').count(), 17);
    }

    #[test]
    fn survey_rows_and_order() {
        let rows = survey((0, 1), (0, 1), 2).unwrap();
        assert_eq!(rows.len(), 4);
        let coords: Vec<(i64, i64)> = rows.iter().map(|r| (r.p, r.q)).collect();
        assert_eq!(coords, [(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(rows[0].form, KnotForm::Trivial);
        assert_eq!(rows[1].form, KnotForm::Trivial);
        assert_eq!(survey((1, 0), (0, 1), 2), Err(Error::EmptyRange));
    }
}
