//! Freely reduced words and cyclic words over the alphabet `{x, x⁻¹, y, y⁻¹}`.
//!
//! Inverse letters are written as capitals: `X = x⁻¹`, `Y = y⁻¹`. The letter
//! order used everywhere (canonical rotations, class representatives) is
//! `x < X < y < Y`.
//!
//! The text grammar accepted by [`Word::parse`]:
//!
//! ```text
//! expr   := factor*
//! factor := atom [ '^' int ]
//! atom   := 'x' | 'y' | 'X' | 'Y' | '1' | '(' expr ')'
//! int    := ['+'|'-'] digit+          (signed 64-bit)
//! ```
//!
//! Whitespace is ignored, `1` denotes the empty word, and the empty word
//! prints as `1`. Formatting groups maximal runs, so `parse(format(w)) == w`
//! for every word `w`.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of letters materialized by parsing, powers, and
/// template expansion. Guards against accidental `x^(10^12)`-style blowups.
pub const DEFAULT_LENGTH_CAP: usize = 1_000_000;

/// One alphabet letter. The declaration order fixes the letter order
/// `x < X < y < Y` used for canonical rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    XBar,
    Y,
    YBar,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X, Letter::XBar, Letter::Y, Letter::YBar];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::XBar,
            Letter::XBar => Letter::X,
            Letter::Y => Letter::YBar,
            Letter::YBar => Letter::Y,
        }
    }

    /// True when both letters are powers of the same generator.
    pub fn same_generator(self, other: Letter) -> bool {
        self.is_x_type() == other.is_x_type()
    }

    pub fn is_x_type(self) -> bool {
        matches!(self, Letter::X | Letter::XBar)
    }

    /// Sign of the letter as a power of its generator: +1 or -1.
    pub fn sign(self) -> i64 {
        match self {
            Letter::X | Letter::Y => 1,
            Letter::XBar | Letter::YBar => -1,
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'X' => Some(Letter::XBar),
            'y' => Some(Letter::Y),
            'Y' => Some(Letter::YBar),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::XBar => 'X',
            Letter::Y => 'y',
            Letter::YBar => 'Y',
        }
    }
}

/// Image of a word in the abelianization `Z²`: exponent sums of `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AbelianImage {
    pub x: i64,
    pub y: i64,
}

impl AbelianImage {
    /// Determinant of the 2×2 integer matrix with rows `self`, `other`.
    pub fn det(self, other: AbelianImage) -> i64 {
        self.x * other.y - self.y * other.x
    }
}

/// A freely reduced word. The reduction invariant is maintained by every
/// constructor and operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

pub(crate) fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

impl Word {
    pub fn identity() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn x() -> Word {
        Word { letters: vec![Letter::X] }
    }

    pub fn y() -> Word {
        Word { letters: vec![Letter::Y] }
    }

    pub fn from_letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    /// Wraps a buffer that is already freely reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(letters
            .windows(2)
            .all(|w| w[0] != w[1].inverse()));
        Word { letters }
    }

    /// Builds a word from arbitrary letters, freely reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let iter = letters.into_iter();
        let mut buf = Vec::with_capacity(iter.size_hint().0);
        for l in iter {
            push_reduced(&mut buf, l);
        }
        Word { letters: buf }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product `self · rhs`, freely reduced.
    pub fn multiply(&self, rhs: &Word) -> Word {
        let mut buf = self.letters.clone();
        for &l in &rhs.letters {
            push_reduced(&mut buf, l);
        }
        Word { letters: buf }
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k`, built through the cyclic decomposition `self = c·v·c⁻¹` so
    /// the exact materialized size is known up front and checked against
    /// `cap`.
    pub fn checked_pow(&self, k: i64, cap: usize) -> Result<Word> {
        if k == 0 || self.is_empty() {
            return Ok(Word::identity());
        }
        let (core, conj) = self.cyclic_reduce();
        let reps = k.unsigned_abs() as u128;
        let needed = core.len() as u128 * reps + 2 * conj.len() as u128;
        if needed > cap as u128 {
            return Err(Error::LengthCap { needed, cap });
        }
        let rep = core.representative();
        let block = if k > 0 { rep } else { rep.invert() };
        let mut buf = Vec::with_capacity(needed as usize);
        buf.extend_from_slice(conj.letters());
        for _ in 0..reps {
            buf.extend_from_slice(block.letters());
        }
        buf.extend(conj.letters.iter().rev().map(|l| l.inverse()));
        Ok(Word::from_letters(buf))
    }

    /// `self^k` under the default length cap. Panics if the cap is exceeded;
    /// use [`Word::checked_pow`] where inputs are untrusted.
    pub fn pow(&self, k: i64) -> Word {
        self.checked_pow(k, DEFAULT_LENGTH_CAP)
            .expect("word power exceeds default length cap")
    }

    /// Commutator `[u, v] = u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.multiply(v).multiply(&u.invert()).multiply(&v.invert())
    }

    /// Splits `self = conj · rep · conj⁻¹` with `rep` the canonical
    /// representative of the cyclic core. The identity is exact on letters
    /// after free reduction.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let s = &self.letters;
        let mut a = 0;
        let mut b = s.len();
        while b - a >= 2 && s[a] == s[b - 1].inverse() {
            a += 1;
            b -= 1;
        }
        let core = &s[a..b];
        let start = least_rotation(core);
        let mut canon = Vec::with_capacity(core.len());
        canon.extend_from_slice(&core[start..]);
        canon.extend_from_slice(&core[..start]);
        // conj = stripped prefix · rotation offset; a prefix of self, so
        // already reduced.
        let mut conj = Vec::with_capacity(a + start);
        conj.extend_from_slice(&s[..a]);
        conj.extend_from_slice(&core[..start]);
        (CyclicWord { letters: canon }, Word { letters: conj })
    }

    /// Canonical cyclic core, discarding the conjugator.
    pub fn cyclic_core(&self) -> CyclicWord {
        self.cyclic_reduce().0
    }

    pub fn exponent_sums(&self) -> AbelianImage {
        let mut img = AbelianImage::default();
        for l in &self.letters {
            if l.is_x_type() {
                img.x += l.sign();
            } else {
                img.y += l.sign();
            }
        }
        img
    }

    pub fn parse(text: &str) -> Result<Word> {
        Word::parse_with_cap(text, DEFAULT_LENGTH_CAP)
    }

    pub fn parse_with_cap(text: &str, cap: usize) -> Result<Word> {
        let mut p = Parser { bytes: text.as_bytes(), pos: 0, cap };
        let w = p.parse_seq()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(Error::Parse {
                pos: p.pos,
                msg: "unexpected ')'".into(),
            });
        }
        Ok(w)
    }

    /// Compact rendering without spaces, e.g. `X^3yx`.
    pub fn compact(&self) -> String {
        render(&self.letters, false)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.letters, true))
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.compact())
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let text = String::deserialize(deserializer)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

fn render(letters: &[Letter], spaced: bool) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        if !out.is_empty() && spaced {
            out.push(' ');
        }
        out.push(l.to_char());
        if j - i > 1 {
            out.push('^');
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

/// A cyclically reduced word stored in its canonical rotation (the least
/// rotation in the letter order), so structural equality is conjugacy of
/// cyclically reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn identity() -> CyclicWord {
        CyclicWord { letters: Vec::new() }
    }

    /// Canonicalizes a sequence that is already cyclically reduced.
    pub(crate) fn from_cyclically_reduced(letters: Vec<Letter>) -> CyclicWord {
        debug_assert!(is_cyclically_reduced(&letters));
        let start = least_rotation(&letters);
        let mut canon = Vec::with_capacity(letters.len());
        canon.extend_from_slice(&letters[start..]);
        canon.extend_from_slice(&letters[..start]);
        CyclicWord { letters: canon }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The canonical rotation as a linear word (freely reduced by
    /// construction).
    pub fn representative(&self) -> Word {
        Word { letters: self.letters.clone() }
    }

    /// Cyclic word of the inverse: invert letters, reverse, canonicalize.
    pub fn inverted(&self) -> CyclicWord {
        let inv: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverse()).collect();
        CyclicWord::from_cyclically_reduced(inv)
    }

    /// The rotation starting at `offset` as a linear word.
    pub fn rotation(&self, offset: usize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return Word::identity();
        }
        let off = offset % n;
        let mut buf = Vec::with_capacity(n);
        buf.extend_from_slice(&self.letters[off..]);
        buf.extend_from_slice(&self.letters[..off]);
        Word { letters: buf }
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.letters, true))
    }
}

fn is_cyclically_reduced(letters: &[Letter]) -> bool {
    let n = letters.len();
    if n == 0 {
        return true;
    }
    (0..n).all(|i| letters[i] != letters[(i + 1) % n].inverse()) || n == 1
}

/// Index of the least rotation of `s` (Booth-style two-pointer scan over the
/// doubled sequence, O(n)).
pub(crate) fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    cap: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_seq(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        loop {
            self.skip_ws();
            let c = match self.peek() {
                None => break,
                Some(b')') => break,
                Some(c) => c,
            };
            let atom_pos = self.pos;
            let atom = match c {
                b'x' | b'X' | b'y' | b'Y' => {
                    self.pos += 1;
                    Word::from_letter(Letter::from_char(c as char).unwrap())
                }
                b'1' => {
                    self.pos += 1;
                    Word::identity()
                }
                b'(' => {
                    self.pos += 1;
                    let inner = self.parse_seq()?;
                    self.skip_ws();
                    if self.peek() != Some(b')') {
                        return Err(Error::Parse {
                            pos: self.pos.min(self.bytes.len()),
                            msg: format!("unclosed '(' opened at byte {atom_pos}"),
                        });
                    }
                    self.pos += 1;
                    inner
                }
                _ => {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: "expected one of x, X, y, Y, 1, or '('".into(),
                    });
                }
            };
            self.skip_ws();
            let part = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let k = self.parse_int()?;
                atom.checked_pow(k, self.cap)?
            } else {
                atom
            };
            if (acc.len() + part.len()) as u128 > self.cap as u128 {
                return Err(Error::LengthCap {
                    needed: (acc.len() + part.len()) as u128,
                    cap: self.cap,
                });
            }
            acc = acc.multiply(&part);
        }
        Ok(acc)
    }

    fn parse_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let mut sign: i64 = 1;
        match self.peek() {
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let digits_start = self.pos;
        let mut value: i64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            let d = (c - b'0') as i64;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d))
                .ok_or(Error::ExponentOverflow { pos: start })?;
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::Parse {
                pos: self.pos,
                msg: "expected integer exponent after '^'".into(),
            });
        }
        // i64::MIN magnitude cannot be reached: value is capped at i64::MAX.
        Ok(sign * value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    #[test]
    fn letter_order_is_x_xbar_y_ybar() {
        assert!(Letter::X < Letter::XBar);
        assert!(Letter::XBar < Letter::Y);
        assert!(Letter::Y < Letter::YBar);
    }

    #[test]
    fn parse_reduces_freely() {
        assert!(w("x X").is_empty());
        assert_eq!(w("1"), Word::identity());
        assert_eq!(
            w("x^2 (x y)^-1").letters(),
            &[Letter::X, Letter::X, Letter::YBar, Letter::XBar][..]
        );
        assert_eq!(
            w("X y X y^2 X y").letters(),
            &[
                Letter::XBar,
                Letter::Y,
                Letter::XBar,
                Letter::Y,
                Letter::Y,
                Letter::XBar,
                Letter::Y
            ][..]
        );
    }

    #[test]
    fn parse_nested_groups_and_signs() {
        assert_eq!(w("x^2 (x y)^-3 Y"), w("x x (Y X)(Y X)(Y X) Y"));
        assert_eq!(w("(x (y X)^2)^2"), w("x y X y X x y X y X"));
        assert_eq!(w("x^+3"), w("x x x"));
        assert_eq!(w("x^0"), Word::identity());
        assert_eq!(w("1^5 x"), w("x"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Word::parse("x z") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Word::parse("x ^") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(Word::parse("(x y"), Err(Error::Parse { .. })));
        match Word::parse("x) y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            Word::parse("x^99999999999999999999"),
            Err(Error::ExponentOverflow { .. })
        ));
    }

    #[test]
    fn parse_respects_length_cap() {
        assert!(Word::parse_with_cap("x^1000", 1000).is_ok());
        assert!(matches!(
            Word::parse_with_cap("x^1001", 1000),
            Err(Error::LengthCap { .. })
        ));
        // Large exponents on conjugates are sized through the cyclic core.
        assert!(matches!(
            Word::parse_with_cap("(x y X)^2000", 1000),
            Err(Error::LengthCap { .. })
        ));
    }

    #[test]
    fn display_round_trips_and_uses_runs() {
        for text in ["1", "x", "x^2 Y^3 x", "X y X y^2 X y", "x Y x Y"] {
            let word = w(text);
            assert_eq!(w(&word.to_string()), word, "round trip of {text}");
        }
        assert_eq!(w("x x x Y Y").to_string(), "x^3 Y^2");
        assert_eq!(Word::identity().to_string(), "1");
        assert_eq!(w("X X y x").compact(), "X^2yx");
    }

    #[test]
    fn multiply_invert_commutator() {
        assert_eq!(w("x y").multiply(&w("Y X")), Word::identity());
        assert_eq!(w("x y x").invert(), w("X Y X"));
        assert_eq!(Word::commutator(&w("x"), &w("y")), w("x y X Y"));
        assert_eq!(
            Word::commutator(&w("x^2"), &w("y^2")),
            w("x^2 y^2 X^2 Y^2")
        );
    }

    #[test]
    fn pow_uses_cyclic_decomposition() {
        assert_eq!(w("x y X").pow(3), w("x y^3 X"));
        assert_eq!(w("x y").pow(-2), w("Y X Y X"));
        assert_eq!(w("x").pow(0), Word::identity());
        // (x y X)^k materializes k+2 letters, well under a tight cap.
        assert!(w("x y X").checked_pow(500, 600).is_ok());
        assert!(matches!(
            w("x y").checked_pow(500, 600),
            Err(Error::LengthCap { .. })
        ));
    }

    #[test]
    fn cyclic_reduce_reassembles() {
        for text in ["x y X", "y x", "x Y x y x Y", "x", "1", "x y x Y X Y"] {
            let word = w(text);
            let (core, conj) = word.cyclic_reduce();
            let back = conj.multiply(&core.representative()).multiply(&conj.invert());
            assert_eq!(back, word, "reassembly of {text}");
        }
    }

    #[test]
    fn cyclic_core_merges_wrapped_runs() {
        // x^2 y x^2 Y X^2 Y x^2 y x^2 has the same core as
        // x^4 y x^2 Y X^2 Y x^2 y.
        let long = w("x^2 y x^2 Y X^2 Y x^2 y x^2");
        let merged = w("x^4 y x^2 Y X^2 Y x^2 y");
        assert_eq!(long.cyclic_core(), merged.cyclic_core());
    }

    #[test]
    fn canonical_rotation_is_least() {
        let c = w("y x").cyclic_core();
        assert_eq!(c.representative(), w("x y"));
        let c = w("Y x").cyclic_core();
        assert_eq!(c.representative(), w("x Y"));
        // All rotations canonicalize identically.
        let base = w("x y X y y");
        let canon = base.cyclic_core();
        for off in 0..base.len() {
            assert_eq!(canon.rotation(off).cyclic_core(), canon);
        }
    }

    #[test]
    fn least_rotation_matches_naive() {
        let samples = ["x y X y y", "y y y", "Y x Y x x", "x", "x y", "y x x y"];
        for text in samples {
            let letters = w(text).letters().to_vec();
            let k = least_rotation(&letters);
            let n = letters.len();
            let rot = |s: usize| -> Vec<Letter> {
                (0..n).map(|i| letters[(s + i) % n]).collect()
            };
            let best = (0..n).map(rot).min().unwrap();
            assert_eq!(rot(k), best, "least rotation of {text}");
        }
    }

    #[test]
    fn inverted_cyclic_word() {
        let c = w("x x y").cyclic_core();
        assert_eq!(c.inverted(), w("X X Y").cyclic_core());
        assert_eq!(c.inverted().inverted(), c);
    }

    #[test]
    fn exponent_sums_are_homomorphic() {
        assert_eq!(w("x y X Y").exponent_sums(), AbelianImage { x: 0, y: 0 });
        assert_eq!(w("x^2 Y^3").exponent_sums(), AbelianImage { x: 2, y: -3 });
        let u = w("x y x");
        let v = w("Y x Y");
        let uv = u.multiply(&v).exponent_sums();
        assert_eq!(uv.x, u.exponent_sums().x + v.exponent_sums().x);
        assert_eq!(uv.y, u.exponent_sums().y + v.exponent_sums().y);
    }

    #[test]
    fn abelian_det() {
        let a = AbelianImage { x: 2, y: 3 };
        let b = AbelianImage { x: 1, y: 2 };
        assert_eq!(a.det(b), 1);
    }
}
