//! Solution-type state machine for two hyperplanes on the moment
//! curve, in the `2d - 3j = 1` regime where the solution set is a
//! disjoint union of circles.
//!
//! A state records a snapshot of one equipartition type: which
//! hyperplane carries the *free* intersection point (the one not used
//! to cut any interval), the gap the free point currently occupies, a
//! sign pair locating the start of the first interval among the four
//! quadrants, and the per-interval partition pattern. Pushing the free
//! point right through one interval is the `step` transition; after
//! the last gap it wraps through infinity back to the front, changing
//! nothing else.
//!
//! Sign bookkeeping: only the pass through the *first* interval flips
//! a sign (the first component if the free point rides the first
//! hyperplane, the second otherwise); interior passes and the wrap
//! leave the sign pair untouched.

use crate::dihedral::DihedralElement;
use crate::words::{Letter, Word};
use crate::{Error, MAX_ENUMERATION_J};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Orientation sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub const fn flipped_if(self, cond: bool) -> Self {
        if cond {
            self.flipped()
        } else {
            self
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub const fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_char(c: char) -> Result<Self, Error> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' | '−' => Ok(Sign::Minus),
            _ => Err(Error::Parse("sign must be + or -")),
        }
    }
}

impl core::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        self.flipped_if(rhs == Sign::Minus)
    }
}

impl core::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flipped()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The pair of orientation signs at the test point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPair {
    pub first: Sign,
    pub second: Sign,
}

impl SignPair {
    pub const PLUS_PLUS: Self = Self::new(Sign::Plus, Sign::Plus);

    pub const fn new(first: Sign, second: Sign) -> Self {
        Self { first, second }
    }

    pub const fn swapped(self) -> Self {
        Self::new(self.second, self.first)
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

impl core::str::FromStr for SignPair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.chars();
        match (chars.next(), chars.next(), chars.next()) {
            (Some(a), Some(b), None) => Ok(SignPair::new(Sign::from_char(a)?, Sign::from_char(b)?)),
            _ => Err(Error::Parse("sign pair must be two of +/-")),
        }
    }
}

/// One snapshot of an equipartition type.
///
/// `capital` names the hyperplane carrying the free point (`A` for the
/// first, `B` for the second); `position` is the gap index, `0` before
/// the first interval through `j` after the last; `pattern` holds the
/// per-interval partition letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SolutionState {
    capital: Letter,
    position: u8,
    signs: SignPair,
    pattern: Word,
}

impl SolutionState {
    /// Builds a state, enforcing the balance invariant
    /// `#a(pattern) + [capital = A] = (j + 1) / 2`.
    pub fn new(
        capital: Letter,
        position: u32,
        signs: SignPair,
        pattern: Word,
    ) -> Result<Self, Error> {
        let j = pattern.len();
        if j.is_multiple_of(2) {
            return Err(Error::InvalidState("pattern length must be odd"));
        }
        if position > j as u32 {
            return Err(Error::InvalidState("position exceeds the last gap"));
        }
        let n = j.div_ceil(2);
        let a_count = pattern.count(Letter::A) + usize::from(capital == Letter::A);
        if a_count != n {
            return Err(Error::InvalidState("letter counts violate balance"));
        }
        Ok(Self {
            capital,
            position: position as u8,
            signs,
            pattern,
        })
    }

    pub fn capital(&self) -> Letter {
        self.capital
    }

    pub fn position(&self) -> u32 {
        self.position as u32
    }

    pub fn signs(&self) -> SignPair {
        self.signs
    }

    pub fn pattern(&self) -> Word {
        self.pattern
    }

    /// Measure count.
    pub fn j(&self) -> u32 {
        self.pattern.len() as u32
    }

    /// Pushes the free point one gap to the right. Interior passes
    /// exchange the free point with the interval's partition letter; at
    /// the last gap the point wraps through infinity, changing nothing
    /// else; the pass out of gap 0 additionally flips the sign matching
    /// the free point's hyperplane.
    pub fn step(&self) -> SolutionState {
        let j = self.j() as usize;
        let pos = self.position as usize;
        if pos == j {
            return SolutionState {
                position: 0,
                ..*self
            };
        }
        let interval = self.pattern.letter(pos);
        let signs = if pos == 0 {
            match self.capital {
                Letter::A => SignPair::new(self.signs.first.flipped(), self.signs.second),
                Letter::B => SignPair::new(self.signs.first, self.signs.second.flipped()),
            }
        } else {
            self.signs
        };
        SolutionState {
            capital: interval,
            position: (pos + 1) as u8,
            signs,
            pattern: self.pattern.with_letter(pos, self.capital),
        }
    }

    /// Symmetry action: orientation flips negate the matching sign;
    /// the swap conjugates the free point and every partition letter
    /// and exchanges the two signs. The gap index never moves.
    pub fn act(&self, g: DihedralElement) -> SolutionState {
        let (capital, pattern, signs) = if g.swap {
            (
                self.capital.conjugate(),
                self.pattern.conjugate(),
                self.signs.swapped(),
            )
        } else {
            (self.capital, self.pattern, self.signs)
        };
        SolutionState {
            capital,
            position: self.position,
            signs: SignPair::new(
                signs.first.flipped_if(g.flip1),
                signs.second.flipped_if(g.flip2),
            ),
            pattern,
        }
    }

    /// The signed word read off the snapshot: the pattern uppercased
    /// with the free point's letter inserted at its gap. Sampled at
    /// `position = j` along a circle this reproduces the compressed
    /// cycle of the corresponding solution component.
    pub fn compress(&self) -> SignedWord {
        let j = self.j() as usize;
        let pos = self.position as usize;
        let mut letters = Vec::with_capacity(j + 1);
        letters.extend((0..pos).map(|i| self.pattern.letter(i)));
        letters.push(self.capital);
        letters.extend((pos..j).map(|i| self.pattern.letter(i)));
        SignedWord {
            word: Word::from_letters(&letters),
            signs: self.signs,
        }
    }

    /// Inverse of `compress` at a chosen gap: the letter at `position`
    /// becomes the free point and the rest the pattern.
    pub fn decompress(sw: &SignedWord, position: u32) -> Result<SolutionState, Error> {
        let len = sw.word.len();
        if position as usize >= len {
            return Err(Error::InvalidState("position exceeds the last gap"));
        }
        let mut letters: Vec<Letter> = sw.word.letters().collect();
        let capital = letters.remove(position as usize);
        SolutionState::new(capital, position, sw.signs, Word::from_letters(&letters))
    }
}

/// Lexicographic on (capital, position, signs, pattern) with `A < B`
/// and `+ < -`; the least state of a circle is its canonical name.
impl Ord for SolutionState {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.capital, self.position, self.signs, self.pattern).cmp(&(
            other.capital,
            other.position,
            other.signs,
            other.pattern,
        ))
    }
}

impl PartialOrd for SolutionState {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SolutionState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = self.position as usize;
        if pos == 0 {
            write!(f, "{}({})", self.capital.upper(), self.signs)?;
            for l in self.pattern.letters() {
                write!(f, "{}", l.lower())?;
            }
        } else {
            write!(f, "({})", self.signs)?;
            for (i, l) in self.pattern.letters().enumerate() {
                if i == pos {
                    write!(f, "{}", self.capital.upper())?;
                }
                write!(f, "{}", l.lower())?;
            }
            if pos == self.pattern.len() {
                write!(f, "{}", self.capital.upper())?;
            }
        }
        Ok(())
    }
}

/// Parses snapshots in the bookkeeping notation: `B(++)aab` for a
/// leading free point, `(+-)bAab` / `(+-)baaB` for interior and
/// trailing gaps.
impl core::str::FromStr for SolutionState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bytes: Vec<char> = s.chars().collect();
        let (capital_front, rest) = match bytes.first() {
            Some('A') => (Some(Letter::A), &bytes[1..]),
            Some('B') => (Some(Letter::B), &bytes[1..]),
            Some('(') => (None, &bytes[..]),
            _ => return Err(Error::Parse("state must start with a capital or '('")),
        };
        if rest.first() != Some(&'(') {
            return Err(Error::Parse("expected '(' before the sign pair"));
        }
        let close = rest
            .iter()
            .position(|&c| c == ')')
            .ok_or(Error::Parse("unterminated sign pair"))?;
        let signs: SignPair = rest[1..close].iter().collect::<String>().parse()?;
        let mut capital = capital_front;
        let mut position = 0u32;
        let mut pattern = Vec::new();
        for &c in &rest[close + 1..] {
            match c {
                'a' => pattern.push(Letter::A),
                'b' => pattern.push(Letter::B),
                'A' | 'B' => {
                    if capital.is_some() {
                        return Err(Error::Parse("more than one capital letter"));
                    }
                    capital = Some(if c == 'A' { Letter::A } else { Letter::B });
                    position = pattern.len() as u32;
                }
                _ => return Err(Error::Parse("unexpected character in state")),
            }
        }
        let capital = capital.ok_or(Error::Parse("state has no capital letter"))?;
        if pattern.is_empty() {
            return Err(Error::Parse("state has no interval pattern"));
        }
        SolutionState::new(capital, position, signs, Word::from_letters(&pattern))
    }
}

/// A balanced solution word with its sign pair, e.g. `BAAB+-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedWord {
    pub word: Word,
    pub signs: SignPair,
}

impl SignedWord {
    pub fn new(word: Word, signs: SignPair) -> Self {
        Self { word, signs }
    }

    /// Moves the first letter to the end, flipping the first sign for
    /// an `A` and the second for a `B`. Generates cyclic equivalence of
    /// signed words.
    pub fn shifted(&self) -> SignedWord {
        let first = self.word.letter(0);
        let signs = match first {
            Letter::A => SignPair::new(self.signs.first.flipped(), self.signs.second),
            Letter::B => SignPair::new(self.signs.first, self.signs.second.flipped()),
        };
        SignedWord {
            word: self.word.rotated(1),
            signs,
        }
    }

    /// Symmetry action on signed words: flips negate signs, the swap
    /// conjugates the word and exchanges the signs.
    pub fn act(&self, g: DihedralElement) -> SignedWord {
        let (word, signs) = if g.swap {
            (self.word.conjugate(), self.signs.swapped())
        } else {
            (self.word, self.signs)
        };
        SignedWord {
            word,
            signs: SignPair::new(
                signs.first.flipped_if(g.flip1),
                signs.second.flipped_if(g.flip2),
            ),
        }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.word, self.signs)
    }
}

impl core::str::FromStr for SignedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() < 3 {
            return Err(Error::Parse("signed word too short"));
        }
        let split = chars.len() - 2;
        let word: Word = chars[..split].iter().collect::<String>().parse()?;
        let signs: SignPair = chars[split..].iter().collect::<String>().parse()?;
        Ok(SignedWord { word, signs })
    }
}

/// One connected component of the solution set: a step-cycle of
/// states, stored from its least state onward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    states: Vec<SolutionState>,
}

impl Circle {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[SolutionState] {
        &self.states
    }

    /// The circle's canonical name: its least state.
    pub fn canonical_state(&self) -> &SolutionState {
        &self.states[0]
    }

    pub fn contains(&self, s: &SolutionState) -> bool {
        self.states.contains(s)
    }

    /// Offset of `s` along the step flow from the canonical state.
    pub fn offset_of(&self, s: &SolutionState) -> Option<usize> {
        self.states.iter().position(|t| t == s)
    }

    /// The signed words sampled at `position = j` in step order,
    /// rotated to start at the least sample. Consecutive entries differ
    /// by one application of the shift rule (read against the flow).
    pub fn compressed_cycle(&self) -> Vec<SignedWord> {
        let samples: Vec<SignedWord> = self
            .states
            .iter()
            .filter(|s| s.position() == s.j())
            .map(SolutionState::compress)
            .collect();
        let least = samples
            .iter()
            .enumerate()
            .min_by_key(|(_, w)| **w)
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut out = Vec::with_capacity(samples.len());
        out.extend_from_slice(&samples[least..]);
        out.extend_from_slice(&samples[..least]);
        out
    }
}

/// Dense index over the full state set of a given `j`, with the
/// successor permutation laid out once. Circle enumeration and orbit
/// grouping both run on top of this.
pub(crate) struct StateSpace {
    states: Vec<SolutionState>,
    index_of: Vec<u32>,
}

impl StateSpace {
    const ABSENT: u32 = u32::MAX;

    pub fn new(j: u32) -> Result<Self, Error> {
        if j.is_multiple_of(2) {
            return Err(Error::JMustBeOdd { j });
        }
        if j > MAX_ENUMERATION_J {
            return Err(Error::JOutOfRange {
                j,
                max: MAX_ENUMERATION_J,
            });
        }
        let jj = j as usize;
        let slots = 2usize * (jj + 1) * 4 * (1 << jj);
        let mut states = Vec::new();
        let mut index_of = alloc::vec![Self::ABSENT; slots];
        for capital in [Letter::A, Letter::B] {
            for position in 0..=j {
                for s1 in [Sign::Plus, Sign::Minus] {
                    for s2 in [Sign::Plus, Sign::Minus] {
                        for bits in 0..1u32 << jj {
                            let state = SolutionState::new(
                                capital,
                                position,
                                SignPair::new(s1, s2),
                                Word::from_bits(bits, jj),
                            );
                            if let Ok(state) = state {
                                index_of[Self::slot(&state)] = states.len() as u32;
                                states.push(state);
                            }
                        }
                    }
                }
            }
        }
        Ok(Self { states, index_of })
    }

    fn slot(s: &SolutionState) -> usize {
        let j = s.j() as usize;
        let mut slot = (s.capital() == Letter::B) as usize;
        slot = slot * (j + 1) + s.position() as usize;
        slot = slot * 2 + (s.signs().first == Sign::Minus) as usize;
        slot = slot * 2 + (s.signs().second == Sign::Minus) as usize;
        slot * (1 << j) + s.pattern().bits() as usize
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[SolutionState] {
        &self.states
    }

    pub fn index(&self, s: &SolutionState) -> usize {
        let idx = self.index_of[Self::slot(s)];
        debug_assert!(idx != Self::ABSENT, "state outside the valid set");
        idx as usize
    }
}

/// Partitions the full state set for `j` measures into step-cycles.
/// The state count is `(j+1) · 4 · C(j+1, (j+1)/2)` and `step` visits
/// each state exactly once per cycle. Circles are returned sorted by
/// canonical state.
pub fn enumerate_circles(j: u32) -> Result<Vec<Circle>, Error> {
    let space = StateSpace::new(j)?;
    let mut visited = alloc::vec![false; space.len()];
    let mut circles = Vec::new();
    for start in 0..space.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut current = space.states()[start];
        loop {
            let idx = space.index(&current);
            if visited[idx] {
                break;
            }
            visited[idx] = true;
            cycle.push(current);
            current = current.step();
        }
        debug_assert_eq!(current, space.states()[start], "step strayed off its cycle");
        // Rotate so the least state leads.
        let least = cycle
            .iter()
            .enumerate()
            .min_by_key(|(_, s)| **s)
            .map(|(i, _)| i)
            .unwrap();
        cycle.rotate_left(least);
        circles.push(Circle { states: cycle });
    }
    circles.sort_by(|a, b| a.canonical_state().cmp(b.canonical_state()));
    Ok(circles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::DihedralElement;
    use core::str::FromStr;

    fn state(s: &str) -> SolutionState {
        SolutionState::from_str(s).unwrap()
    }

    #[test]
    fn state_parsing_round_trips() {
        for s in ["B(++)aab", "(+-)bAab", "(+-)baaB", "A(-+)abb", "(++)aabB"] {
            assert_eq!(alloc::format!("{}", state(s)), s);
        }
        assert!(SolutionState::from_str("B(++)ab").is_err()); // even length
        assert!(SolutionState::from_str("B(++)bbb").is_err()); // unbalanced
        assert!(SolutionState::from_str("(++)aab").is_err()); // no capital
    }

    #[test]
    fn step_rules_from_the_sixteen_type_cycle() {
        // Free pass over the first interval flips the matching sign...
        assert_eq!(state("B(++)aab").step(), state("(+-)bAab"));
        // ...interior passes do not...
        assert_eq!(state("(+-)bAab").step(), state("(+-)baAb"));
        // ...and the wrap through infinity changes nothing else.
        assert_eq!(state("(+-)baaB").step(), state("B(+-)baa"));
    }

    #[test]
    fn action_examples() {
        let base = state("B(++)aab");
        assert_eq!(base.act(DihedralElement::FLIP1), state("B(-+)aab"));
        assert_eq!(base.act(DihedralElement::SWAP), state("A(++)bba"));
    }

    #[test]
    fn action_commutes_with_step_at_j3() {
        let circles = enumerate_circles(3).unwrap();
        for circle in &circles {
            for s in circle.states() {
                for g in DihedralElement::all() {
                    assert_eq!(s.act(g).step(), s.step().act(g));
                }
            }
        }
    }

    #[test]
    fn action_is_free_and_compatible_with_composition() {
        let circles = enumerate_circles(3).unwrap();
        let states: Vec<_> = circles.iter().flat_map(|c| c.states().to_vec()).collect();
        assert_eq!(states.len(), 96);
        for s in &states {
            for g in DihedralElement::all() {
                if g != DihedralElement::IDENTITY {
                    assert_ne!(s.act(g), *s, "nonidentity element fixed a state");
                }
                for h in DihedralElement::all() {
                    assert_eq!(s.act(h).act(g), s.act(g.compose(h)));
                }
            }
        }
    }

    #[test]
    fn compress_examples() {
        assert_eq!(
            alloc::format!("{}", state("(+-)baaB").compress()),
            "BAAB+-"
        );
        assert_eq!(
            alloc::format!("{}", state("(++)bbaA").compress()),
            "BBAA++"
        );
        let shifted = SignedWord::from_str("BAAB+-").unwrap().shifted();
        assert_eq!(alloc::format!("{shifted}"), "AABB++");
    }

    #[test]
    fn decompress_inverts_compress() {
        let s = state("(+-)bAab");
        assert_eq!(
            SolutionState::decompress(&s.compress(), s.position()).unwrap(),
            s
        );
    }

    #[test]
    fn sixteen_type_cycle_is_reproduced_verbatim() {
        let expected = [
            "B(++)aab", "(+-)bAab", "(+-)baAb", "(+-)baaB", "B(+-)baa", "(++)bBaa", "(++)bbAa",
            "(++)bbaA", "A(++)bba", "(-+)aBba", "(-+)abBa", "(-+)abbA", "A(-+)abb", "(++)aAbb",
            "(++)aaBb", "(++)aabB",
        ];
        let mut current = state(expected[0]);
        for want in &expected[1..] {
            current = current.step();
            assert_eq!(current, state(want));
        }
        assert_eq!(current.step(), state(expected[0]), "cycle must close");
    }

    #[test]
    fn circle_census_small_j() {
        // j = 1: 16 states, step bijective, every circle well formed.
        let circles = enumerate_circles(1).unwrap();
        let total: usize = circles.iter().map(Circle::len).sum();
        assert_eq!(total, 16);
        for c in &circles {
            assert_eq!(c.states().last().unwrap().step(), *c.canonical_state());
            assert!(c.len() % 2 == 0, "length must be a multiple of j + 1");
        }

        // j = 3: 6 circles over 96 states.
        let circles = enumerate_circles(3).unwrap();
        assert_eq!(circles.len(), 6);
        assert_eq!(circles.iter().map(Circle::len).sum::<usize>(), 96);
        assert!(circles.iter().all(|c| c.len() % 4 == 0));

        // j = 5: 8 circles over 480 states.
        let circles = enumerate_circles(5).unwrap();
        assert_eq!(circles.len(), 8);
        assert_eq!(circles.iter().map(Circle::len).sum::<usize>(), 480);
    }

    #[test]
    fn rejects_bad_j() {
        assert_eq!(enumerate_circles(4).unwrap_err(), Error::JMustBeOdd { j: 4 });
        assert!(matches!(
            enumerate_circles(17).unwrap_err(),
            Error::JOutOfRange { .. }
        ));
    }

    #[test]
    fn compressed_cycle_of_the_sixteen_type_circle() {
        let circles = enumerate_circles(3).unwrap();
        let probe = state("B(++)aab");
        let circle = circles.iter().find(|c| c.contains(&probe)).unwrap();
        assert_eq!(circle.len(), 16);
        let cycle: Vec<String> = circle
            .compressed_cycle()
            .iter()
            .map(|w| alloc::format!("{w}"))
            .collect();
        // The four signed words of the component, in step order starting
        // from the least.
        assert_eq!(cycle, ["AABB++", "BAAB+-", "BBAA++", "ABBA-+"]);
    }

    #[test]
    fn four_component_class_cycle_at_j5() {
        // The twelve-entry cycle through AABABB++, read in shift order
        // (against the step flow), alternates through these six words.
        let circles = enumerate_circles(5).unwrap();
        let target = SignedWord::from_str("AABABB++").unwrap();
        let circle = circles
            .iter()
            .find(|c| c.compressed_cycle().contains(&target))
            .unwrap();
        let cycle = circle.compressed_cycle();
        assert_eq!(cycle.len(), 12);
        let start = cycle.iter().position(|w| *w == target).unwrap();
        let shift_order: Vec<String> = (0..6)
            .map(|i| alloc::format!("{}", cycle[(start + 12 - 2 * i) % 12]))
            .collect();
        assert_eq!(
            shift_order,
            ["AABABB++", "BABBAA++", "BBAABA--", "AABABB--", "BABBAA--", "BBAABA++"]
        );
    }

    #[test]
    fn consecutive_samples_obey_the_shift_rule() {
        for j in [1, 3, 5] {
            for circle in enumerate_circles(j).unwrap() {
                let cycle = circle.compressed_cycle();
                assert_eq!(cycle.len(), circle.len() / (j as usize + 1));
                for i in 0..cycle.len() {
                    let next = cycle[(i + 1) % cycle.len()];
                    // One shift against the flow recovers the previous
                    // sample.
                    assert_eq!(next.shifted(), cycle[i]);
                }
            }
        }
    }

    #[test]
    fn step_is_a_bijection() {
        for j in [1, 3, 5] {
            let circles = enumerate_circles(j).unwrap();
            let mut seen = alloc::collections::BTreeSet::new();
            for c in &circles {
                for s in c.states() {
                    assert!(seen.insert(s.step()), "two states share a successor");
                }
            }
            let total: usize = circles.iter().map(Circle::len).sum();
            assert_eq!(seen.len(), total);
        }
    }
}
