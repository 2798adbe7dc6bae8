//! Two-generator one-relator presentation of a 2-bridge knot group, and Fox
//! free differential calculus on its words.
//!
//! The group is `<x1, x2 | w x1 w⁻¹ = x2>` with
//! `w = x1^ε_1 x2^ε_2 ... x1^ε_{p-2} x2^ε_{p-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::normal_form::TwoBridgeForm;
use crate::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X1,
    X2,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X1 => write!(f, "x1"),
            Generator::X2 => write!(f, "x2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    /// `+1` or `-1`.
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: Generator, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Letter { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Letter { exponent: -self.exponent, ..self }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^-1", self.generator)
        }
    }
}

/// A freely reduced word in `x1`, `x2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_letters([Letter::new(g, 1)])
    }

    /// Appends a letter, cancelling against the last one if inverse.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
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

    pub fn inverse(&self) -> Self {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    /// Total exponent sum, i.e. the image under `x1, x2 ↦ t`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.exponent)).sum()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The word `w` of the form: letter `j` is `x1^ε_j` for odd `j`, `x2^ε_j` for even `j`.
pub fn build_word(form: &TwoBridgeForm) -> GroupWord {
    GroupWord::from_letters(form.epsilon_sequence().into_iter().enumerate().map(|(i, e)| {
        let g = if i % 2 == 0 { Generator::X1 } else { Generator::X2 };
        Letter::new(g, e)
    }))
}

/// The relator `w x1 w⁻¹ x2⁻¹`.
pub fn build_relator(form: &TwoBridgeForm) -> GroupWord {
    let w = build_word(form);
    w.concat(&GroupWord::generator(Generator::X1))
        .concat(&w.inverse())
        .concat(&GroupWord::from_letters([Letter::new(Generator::X2, -1)]))
}

/// Integer combination of group words, keyed by freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<GroupWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupWord, BigInt)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, word: GroupWord, coeff: BigInt) {
        let entry = self.terms.entry(word).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maps every word to `t^(exponent sum)`.
    pub fn abelianize(&self) -> LaurentPolynomial {
        let Some(min) = self.terms.keys().map(GroupWord::exponent_sum).min() else {
            return LaurentPolynomial::zero();
        };
        let max = self.terms.keys().map(GroupWord::exponent_sum).max().unwrap_or(min);
        let mut coeffs = vec![BigInt::zero(); (max - min) as usize + 1];
        for (w, c) in &self.terms {
            coeffs[(w.exponent_sum() - min) as usize] += c;
        }
        LaurentPolynomial::new(min, IntPolynomial::from_coeffs(coeffs))
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})·{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `t^offset · poly(t)`, kept with `poly(0) != 0` unless zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    pub offset: i64,
    pub poly: IntPolynomial,
}

impl LaurentPolynomial {
    pub fn new(offset: i64, poly: IntPolynomial) -> Self {
        if poly.is_zero() {
            return Self::zero();
        }
        let (k, poly) = poly.strip_low_degree();
        LaurentPolynomial { offset: offset + k as i64, poly }
    }

    pub fn zero() -> Self {
        LaurentPolynomial { offset: 0, poly: IntPolynomial::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial { offset: self.offset, poly: -self.poly.clone() }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.offset {
            0 => write!(f, "{}", self.poly.display("t")),
            k => write!(f, "t^{k}·({})", self.poly.display("t")),
        }
    }
}

/// Fox derivative `∂word/∂gen`, by the rule `D(uv) = D(u) + u D(v)` with
/// `D(gen) = 1`, `D(gen⁻¹) = -gen⁻¹` and `D(other) = 0`.
pub fn fox_derivative(word: &GroupWord, generator: Generator) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = GroupWord::empty();
    for &l in word.letters() {
        if l.generator == generator {
            if l.exponent == 1 {
                out.add_term(prefix.clone(), BigInt::one());
            } else {
                let mut w = prefix.clone();
                w.push(l);
                out.add_term(w, -BigInt::one());
            }
        }
        prefix.push(l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const X1: Letter = Letter { generator: Generator::X1, exponent: 1 };
    const X2: Letter = Letter { generator: Generator::X2, exponent: 1 };
    const X1I: Letter = Letter { generator: Generator::X1, exponent: -1 };
    const X2I: Letter = Letter { generator: Generator::X2, exponent: -1 };

    fn form(p: i64, q: i64) -> TwoBridgeForm {
        TwoBridgeForm::new(p, q).unwrap()
    }

    fn word(letters: &[Letter]) -> GroupWord {
        GroupWord::from_letters(letters.iter().copied())
    }

    #[test]
    fn build_word_examples() {
        assert_eq!(build_word(&form(3, 1)), word(&[X1, X2]));
        assert_eq!(build_word(&form(5, 3)), word(&[X1, X2I, X1I, X2]));
        assert_eq!(build_word(&form(7, 3)), word(&[X1, X2, X1I, X2I, X1, X2]));
        assert_eq!(build_word(&form(5, 3)).to_string(), "x1 x2^-1 x1^-1 x2");
    }

    #[test]
    fn build_relator_examples() {
        assert_eq!(build_relator(&form(3, 1)), word(&[X1, X2, X1, X2I, X1I, X2I]));
        let w = build_word(&form(5, 3));
        let expected = w.concat(&word(&[X1])).concat(&w.inverse()).concat(&word(&[X2I]));
        assert_eq!(build_relator(&form(5, 3)), expected);
        assert_eq!(build_relator(&form(5, 3)).len(), 10);
    }

    #[test]
    fn relators_have_zero_exponent_sum() {
        for f in crate::normal_form::enumerate_forms(41) {
            assert_eq!(build_relator(&f).exponent_sum(), 0);
        }
    }

    #[test]
    fn fox_derivative_examples() {
        assert_eq!(
            fox_derivative(&word(&[X1]), Generator::X1),
            GroupRingElement::from_terms([(GroupWord::empty(), BigInt::one())])
        );
        assert!(fox_derivative(&word(&[X2]), Generator::X1).is_zero());

        let relator = word(&[X1, X2, X1, X2I, X1I, X2I]);
        let expected = GroupRingElement::from_terms([
            (GroupWord::empty(), BigInt::from(1)),
            (word(&[X1, X2]), BigInt::from(1)),
            (word(&[X1, X2, X1, X2I, X1I]), BigInt::from(-1)),
        ]);
        assert_eq!(fox_derivative(&relator, Generator::X1), expected);
    }

    #[test]
    fn fox_inverse_letter() {
        assert_eq!(
            fox_derivative(&word(&[X1I]), Generator::X1),
            GroupRingElement::from_terms([(word(&[X1I]), BigInt::from(-1))])
        );
    }

    #[test]
    fn abelianize_examples() {
        let relator = word(&[X1, X2, X1, X2I, X1I, X2I]);
        let d = fox_derivative(&relator, Generator::X1).abelianize();
        assert_eq!(d, LaurentPolynomial::new(0, IntPolynomial::from_i64s(&[1, -1, 1])));
        assert_eq!(GroupRingElement::zero().abelianize(), LaurentPolynomial::zero());
        let inv = GroupRingElement::from_terms([(word(&[X1I]), BigInt::one())]).abelianize();
        assert_eq!((inv.offset, inv.poly), (-1, IntPolynomial::from_i64s(&[1])));
    }

    #[test]
    fn words_alternate_generators_up_to_99() {
        for f in crate::normal_form::enumerate_forms(99) {
            let w = build_word(&f);
            assert_eq!(w.len(), f.p() as usize - 1);
            for (i, l) in w.letters().iter().enumerate() {
                let g = if i % 2 == 0 { Generator::X1 } else { Generator::X2 };
                assert_eq!(l.generator, g);
            }
        }
    }

    #[test]
    fn fox_partials_cancel_for_relators() {
        for f in crate::normal_form::enumerate_forms(41) {
            let r = build_relator(&f);
            let d1 = fox_derivative(&r, Generator::X1).abelianize();
            let d2 = fox_derivative(&r, Generator::X2).abelianize();
            assert_eq!(d1, d2.neg(), "{f}");
        }
    }

    fn letter() -> impl Strategy<Value = Letter> {
        (any::<bool>(), any::<bool>()).prop_map(|(g, e)| {
            Letter::new(if g { Generator::X1 } else { Generator::X2 }, if e { 1 } else { -1 })
        })
    }

    proptest! {
        #[test]
        fn free_reduction_is_confluent(
            letters in prop::collection::vec(letter(), 0..40),
            picks in prop::collection::vec(any::<prop::sample::Index>(), 64),
        ) {
            // Cancel adjacent inverse pairs in an arbitrary order until none remain.
            let mut raw = letters.clone();
            let mut picks = picks.into_iter().cycle();
            loop {
                let spots: Vec<usize> = (0..raw.len().saturating_sub(1))
                    .filter(|&i| raw[i + 1] == raw[i].inverse())
                    .collect();
                if spots.is_empty() {
                    break;
                }
                let i = spots[picks.next().unwrap().index(spots.len())];
                raw.drain(i..i + 2);
            }
            let reduced = GroupWord::from_letters(letters);
            prop_assert_eq!(reduced.letters(), &raw[..]);
        }

        #[test]
        fn fox_product_rule(
            u in prop::collection::vec(letter(), 0..12),
            v in prop::collection::vec(letter(), 0..12),
        ) {
            let (u, v) = (GroupWord::from_letters(u), GroupWord::from_letters(v));
            for g in [Generator::X1, Generator::X2] {
                let lhs = fox_derivative(&u.concat(&v), g);
                let mut rhs = fox_derivative(&u, g);
                for (w, c) in fox_derivative(&v, g).terms() {
                    rhs.add_term(u.concat(w), c.clone());
                }
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
