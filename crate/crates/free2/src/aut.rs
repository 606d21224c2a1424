//! Automorphisms of the rank-two free group and the Whitehead method.
//!
//! Every automorphism is carried together with a factorization into the seven
//! elementary moves below, so each answer doubles as a replayable witness.
//!
//! ## Why this move set decides minimality in rank two
//!
//! On conjugacy classes (cyclic words) the Whitehead automorphisms of
//! `F = <x, y>` act as follows. The letter permutations are generated by
//! `invert_x`, `invert_y`, and `swap`. A non-permutation Whitehead
//! automorphism has a multiplier `a ∈ {x, x⁻¹, y, y⁻¹}` and either
//! right-multiplies the other generator by `a`, left-multiplies it by `a⁻¹`,
//! or conjugates it by `a`. Conjugation is trivial on cyclic words, and a
//! left multiplication equals an inner twist of the corresponding right
//! multiplication (for example `x ↦ y⁻¹x` agrees with `x ↦ xy⁻¹` after
//! conjugating by `y`), so on cyclic words every non-permutation Whitehead
//! automorphism acts as one of `x_to_xy`, `x_to_xY`, `y_to_yx`, `y_to_yX`.
//! The peak-reduction theorem then gives both facts the algorithms below rely
//! on: a cyclic word of non-minimal orbit length admits a single move that
//! strictly shortens it (so greedy descent reaches the global minimum), and
//! two minimal cyclic words in the same orbit are joined by a chain of moves
//! through cyclic words of the same minimal length (so breadth-first search
//! at that length decides orbit equivalence).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{push_reduced, CyclicWord, Letter, Word};

/// The seven elementary moves. The declaration order is the tie-break order
/// used by the minimizer and the orbit search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementaryMove {
    InvertX,
    InvertY,
    Swap,
    XToXY,
    XToXYBar,
    YToYX,
    YToYXBar,
}

use ElementaryMove::*;

impl ElementaryMove {
    pub const ALL: [ElementaryMove; 7] =
        [InvertX, InvertY, Swap, XToXY, XToXYBar, YToYX, YToYXBar];

    /// The four length-changing moves, in tie-break order.
    pub const LENGTH_MOVES: [ElementaryMove; 4] = [XToXY, XToXYBar, YToYX, YToYXBar];

    pub fn inverse(self) -> ElementaryMove {
        match self {
            InvertX => InvertX,
            InvertY => InvertY,
            Swap => Swap,
            XToXY => XToXYBar,
            XToXYBar => XToXY,
            YToYX => YToYXBar,
            YToYXBar => YToYX,
        }
    }

    /// Images `(x-image, y-image)` of the move.
    pub fn images(self) -> (Word, Word) {
        let parse = |t: &str| Word::parse(t).unwrap();
        match self {
            InvertX => (parse("X"), parse("y")),
            InvertY => (parse("x"), parse("Y")),
            Swap => (parse("y"), parse("x")),
            XToXY => (parse("x y"), parse("y")),
            XToXYBar => (parse("x Y"), parse("y")),
            YToYX => (parse("x"), parse("y x")),
            YToYXBar => (parse("x"), parse("y X")),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            InvertX => "invert_x",
            InvertY => "invert_y",
            Swap => "swap",
            XToXY => "x_to_xy",
            XToXYBar => "x_to_xY",
            YToYX => "y_to_yx",
            YToYXBar => "y_to_yX",
        }
    }

    pub fn from_token(t: &str) -> Option<ElementaryMove> {
        Self::ALL.into_iter().find(|m| m.token() == t)
    }
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// An automorphism of `F`, stored as generator images plus a factorization
/// into elementary moves (in application order: `moves[0]` acts first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    image_x: Word,
    image_y: Word,
    moves: Vec<ElementaryMove>,
}

impl Automorphism {
    pub fn identity() -> Automorphism {
        Automorphism {
            image_x: Word::x(),
            image_y: Word::y(),
            moves: Vec::new(),
        }
    }

    pub fn from_move(m: ElementaryMove) -> Automorphism {
        let (image_x, image_y) = m.images();
        Automorphism { image_x, image_y, moves: vec![m] }
    }

    /// Composes a factorization, `moves[0]` applied first.
    pub fn from_moves(moves: &[ElementaryMove]) -> Automorphism {
        let mut acc = Automorphism::identity();
        for &m in moves {
            acc = Automorphism::from_move(m).compose(&acc);
        }
        acc
    }

    pub fn image_x(&self) -> &Word {
        &self.image_x
    }

    pub fn image_y(&self) -> &Word {
        &self.image_y
    }

    /// Factorization into elementary moves, in application order.
    pub fn factorization(&self) -> &[ElementaryMove] {
        &self.moves
    }

    /// Factorization serialized as `move;move;...` (empty string for the
    /// identity).
    pub fn factorization_string(&self) -> String {
        self.moves
            .iter()
            .map(|m| m.token())
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Substitutes generator images into `w`.
    pub fn apply(&self, w: &Word) -> Word {
        let inv_x = self.image_x.invert();
        let inv_y = self.image_y.invert();
        let mut buf = Vec::with_capacity(w.len());
        for &l in w.letters() {
            let img = match l {
                Letter::X => &self.image_x,
                Letter::XBar => &inv_x,
                Letter::Y => &self.image_y,
                Letter::YBar => &inv_y,
            };
            for &m in img.letters() {
                push_reduced(&mut buf, m);
            }
        }
        Word::from_reduced_unchecked(buf)
    }

    /// Action on conjugacy classes: substitute and take the cyclic core.
    pub fn apply_cyclic(&self, c: &CyclicWord) -> CyclicWord {
        self.apply(&c.representative()).cyclic_core()
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let mut moves = other.moves.clone();
        moves.extend_from_slice(&self.moves);
        Automorphism {
            image_x: self.apply(&other.image_x),
            image_y: self.apply(&other.image_y),
            moves,
        }
    }

    pub fn invert(&self) -> Automorphism {
        let inv_moves: Vec<ElementaryMove> =
            self.moves.iter().rev().map(|m| m.inverse()).collect();
        Automorphism::from_moves(&inv_moves)
    }

    /// The inner automorphism `z ↦ c z c⁻¹`, factored into elementary moves.
    pub fn conjugation_by(c: &Word) -> Automorphism {
        // Per-letter factorizations, each verified by the unit tests:
        // conjugation by a single letter is a product of four moves.
        fn letter_conj(l: Letter) -> [ElementaryMove; 4] {
            match l {
                Letter::X => [InvertY, YToYXBar, InvertY, YToYXBar],
                Letter::XBar => [YToYX, InvertY, YToYX, InvertY],
                Letter::Y => [InvertX, XToXYBar, InvertX, XToXYBar],
                Letter::YBar => [XToXY, InvertX, XToXY, InvertX],
            }
        }
        // conj(l1 l2 ... lk) = conj(l1) ∘ conj(l2) ∘ ... ∘ conj(lk),
        // so the innermost letter acts first.
        let mut moves = Vec::with_capacity(4 * c.len());
        for &l in c.letters().iter().rev() {
            moves.extend_from_slice(&letter_conj(l));
        }
        let aut = Automorphism::from_moves(&moves);
        debug_assert_eq!(aut.apply(&Word::x()), c.multiply(&Word::x()).multiply(&c.invert()));
        debug_assert_eq!(aut.apply(&Word::y()), c.multiply(&Word::y()).multiply(&c.invert()));
        aut
    }
}

/// Greedy Whitehead descent: repeatedly applies the first length-reducing
/// move until none applies. By peak reduction the result has the minimal
/// length in the automorphism orbit of `c`. Returns the minimal cyclic word
/// and an automorphism carrying `c` onto it.
pub fn whitehead_minimize(c: &CyclicWord) -> (CyclicWord, Automorphism) {
    let mut cur = c.clone();
    let mut phi = Automorphism::identity();
    'outer: loop {
        for m in ElementaryMove::LENGTH_MOVES {
            let step = Automorphism::from_move(m);
            let next = step.apply_cyclic(&cur);
            if next.len() < cur.len() {
                cur = next;
                phi = step.compose(&phi);
                continue 'outer;
            }
        }
        break;
    }
    (cur, phi)
}

/// Decides whether the conjugacy classes of `a` and `b` (each taken up to
/// inversion) lie in the same automorphism orbit. On success returns a
/// witness `w` with `w(a)` conjugate to `b` or to `b⁻¹`.
pub fn orbit_equivalent(a: &CyclicWord, b: &CyclicWord) -> Option<Automorphism> {
    let (min_a, phi_a) = whitehead_minimize(a);
    let (min_b, phi_b) = whitehead_minimize(b);
    if min_a.len() != min_b.len() {
        return None;
    }
    let target = min_b.clone();
    let target_inv = min_b.inverted();
    let length = min_a.len();

    let chain = bfs_chain(&min_a, length, &target, &target_inv)?;
    let psi = Automorphism::from_moves(&chain);
    Some(phi_b.invert().compose(&psi).compose(&phi_a))
}

/// Breadth-first search over length-preserving moves from `start`, returning
/// the move chain (application order) reaching `target` or `target_inv`.
fn bfs_chain(
    start: &CyclicWord,
    length: usize,
    target: &CyclicWord,
    target_inv: &CyclicWord,
) -> Option<Vec<ElementaryMove>> {
    if start == target || start == target_inv {
        return Some(Vec::new());
    }
    let mut parents: HashMap<CyclicWord, (CyclicWord, ElementaryMove)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(start.clone());
    while let Some(cur) = queue.pop_front() {
        for m in ElementaryMove::ALL {
            let next = Automorphism::from_move(m).apply_cyclic(&cur);
            if next.len() != length || next == *start || parents.contains_key(&next) {
                continue;
            }
            parents.insert(next.clone(), (cur.clone(), m));
            if next == *target || next == *target_inv {
                let mut chain = Vec::new();
                let mut node = &next;
                while node != start {
                    let (prev, mv) = &parents[node];
                    chain.push(*mv);
                    node = prev;
                }
                chain.reverse();
                return Some(chain);
            }
            queue.push_back(next.clone());
        }
    }
    None
}

/// A word is primitive when it is part of some basis, equivalently when its
/// orbit-minimal cyclic length is 1.
pub fn is_primitive(w: &Word) -> bool {
    let core = w.cyclic_core();
    if core.is_empty() {
        return false;
    }
    if !shape_filter(&core) {
        return false;
    }
    whitehead_minimize(&core).0.len() == 1
}

/// Fast necessary test for "primitive or a power of a primitive".
///
/// A cyclic word with that property is, after relabeling generators by signs
/// and swapping, either a pure power of one generator or of the form
/// `a b^{m_1} a b^{m_2} … a b^{m_k}` with every `m_i ∈ {n, n+1}` for some
/// `n ≥ 1` (the single-`a` form allows any `m ≥ 0`). Returns false only when
/// no relabeling matches, which certifies the word is neither primitive nor
/// a power of a primitive. Never rejects a true positive; exactness is not
/// claimed and not needed.
pub fn shape_filter(c: &CyclicWord) -> bool {
    if c.is_empty() {
        return false;
    }
    for a in Letter::ALL {
        for b in Letter::ALL {
            if a.same_generator(b) {
                continue;
            }
            if shape_matches(c, a, b) {
                return true;
            }
        }
    }
    false
}

fn shape_matches(c: &CyclicWord, a: Letter, b: Letter) -> bool {
    let letters = c.letters();
    if letters.iter().any(|&l| l != a && l != b) {
        return false;
    }
    let positions: Vec<usize> = (0..letters.len())
        .filter(|&i| letters[i] == a)
        .collect();
    let k = positions.len();
    if k == 0 || k == letters.len() || k == 1 {
        return true;
    }
    let n = letters.len();
    let mut min_gap = usize::MAX;
    let mut max_gap = 0usize;
    for w in 0..k {
        let here = positions[w];
        let next = positions[(w + 1) % k];
        let gap = (next + n - here - 1) % n;
        if gap == 0 {
            return false;
        }
        min_gap = min_gap.min(gap);
        max_gap = max_gap.max(gap);
    }
    max_gap - min_gap <= 1
}

/// Primitive-root decomposition of a nonempty cyclic word: the maximal
/// exponent `e` with `c = root^e` as cyclic words, plus whether the root is
/// itself primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub exponent: u64,
    pub root: CyclicWord,
    pub root_is_primitive: bool,
}

pub fn primitive_root(c: &CyclicWord) -> Result<MultiplicityResult> {
    if c.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = c.letters();
    let n = letters.len();
    let mut period = n;
    for d in 1..=n / 2 {
        if n % d == 0 && (d..n).all(|i| letters[i] == letters[i - d]) {
            period = d;
            break;
        }
    }
    let root_word = Word::from_reduced_unchecked(letters[..period].to_vec());
    let root = root_word.cyclic_core();
    debug_assert_eq!(root.len(), period);
    let root_is_primitive = is_primitive(&root.representative());
    Ok(MultiplicityResult {
        exponent: (n / period) as u64,
        root,
        root_is_primitive,
    })
}

/// Primitive-root decomposition of the cyclic core of a word.
pub fn multiplicity(w: &Word) -> Result<MultiplicityResult> {
    primitive_root(&w.cyclic_core())
}

/// Completes a primitive word `a` to a basis: returns `b` with `{a, b}` a
/// basis of `F`. Errors when `a` is not primitive.
pub fn complete_to_basis(a: &Word) -> Result<Word> {
    if !is_primitive(a) {
        return Err(Error::NotPrimitive);
    }
    let core = a.cyclic_core();
    let (min, phi0) = whitehead_minimize(&core);
    debug_assert_eq!(min.len(), 1);
    let pi = letter_to_x(min.letters()[0]);
    let psi = pi.compose(&phi0);
    // The cyclic core of psi(a) is exactly the one-letter word x, so psi(a)
    // is a conjugate d·x·d⁻¹; straightening by the inner automorphism sends
    // a itself to x.
    let image = psi.apply(a);
    let (image_core, d) = image.cyclic_reduce();
    debug_assert_eq!(image_core.representative(), Word::x());
    let full = Automorphism::conjugation_by(&d.invert()).compose(&psi);
    debug_assert_eq!(full.apply(a), Word::x());
    Ok(full.invert().apply(&Word::y()))
}

/// The letter permutation sending `l` to `x`.
pub(crate) fn letter_to_x(l: Letter) -> Automorphism {
    match l {
        Letter::X => Automorphism::identity(),
        Letter::XBar => Automorphism::from_move(InvertX),
        Letter::Y => Automorphism::from_move(Swap),
        Letter::YBar => {
            Automorphism::from_move(InvertX).compose(&Automorphism::from_move(Swap))
        }
    }
}

/// Carries the primitive root of a proper power onto the generator `x`:
/// minimizes the root to a single letter and permutes it to `x`. The
/// returned automorphism sends the root's conjugacy class to the class of
/// the one-letter word `x`.
pub(crate) fn root_to_x(root: &CyclicWord) -> Automorphism {
    let (min, phi0) = whitehead_minimize(root);
    debug_assert_eq!(min.len(), 1);
    letter_to_x(min.letters()[0]).compose(&phi0)
}

/// Decides whether `{a, b}` is a basis of `F` by greedy Nielsen reduction of
/// the pair: while some product of one element with the other (or its
/// inverse) is shorter than the element it replaces, replace it. A reduced
/// pair generates `F` exactly when both members are single letters over
/// distinct generators.
pub fn is_basis_pair(a: &Word, b: &Word) -> bool {
    let mut u = a.clone();
    let mut v = b.clone();
    'outer: loop {
        if u.is_empty() || v.is_empty() {
            return false;
        }
        for cand in [
            u.multiply(&v),
            u.multiply(&v.invert()),
            v.multiply(&u),
            v.invert().multiply(&u),
        ] {
            if cand.len() < u.len() {
                u = cand;
                continue 'outer;
            }
        }
        for cand in [
            v.multiply(&u),
            v.multiply(&u.invert()),
            u.multiply(&v),
            u.invert().multiply(&v),
        ] {
            if cand.len() < v.len() {
                v = cand;
                continue 'outer;
            }
        }
        break;
    }
    u.len() == 1 && v.len() == 1 && !u.letters()[0].same_generator(v.letters()[0])
}
