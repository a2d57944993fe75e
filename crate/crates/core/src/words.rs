//! Formal words over named generators.
//!
//! Words are elements of the free group on generator ids. They stay
//! symbolic until [`Word::evaluate`] binds each id to a [`JonqElement`],
//! so the same word can be read in any group generated by elements of the
//! Jonquières subgroup.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::jonquieres::JonqElement;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: String,
    pub exp: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Generator id to group element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<String, JonqElement>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, gen: impl Into<String>, value: JonqElement) -> &mut Self {
        self.0.insert(gen.into(), value);
        self
    }

    pub fn with(mut self, gen: impl Into<String>, value: JonqElement) -> Self {
        self.bind(gen, value);
        self
    }

    pub fn get(&self, gen: &str) -> Option<&JonqElement> {
        self.0.get(gen)
    }

    pub fn extend(&mut self, other: Assignment) {
        self.0.extend(other.0);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &JonqElement)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word::default()
    }

    /// A single generator with exponent one.
    pub fn gen(id: impl Into<String>) -> Self {
        Word::from_letters(vec![Letter {
            gen: id.into(),
            exp: 1,
        }])
    }

    /// Builds a word from letters as given; nothing is merged or dropped.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
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

    /// Free reduction: merges adjacent letters on the same generator and
    /// drops zero exponents, cascading with a stack.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for letter in &self.letters {
            if letter.exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.gen == letter.gen => {
                    top.exp += letter.exp;
                    if top.exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push(letter.clone()),
            }
        }
        Word { letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|l| l.exp != 0)
            && self.letters.windows(2).all(|w| w[0].gen != w[1].gen)
    }

    /// Concatenation, reduced.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }.reduce()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen.clone(),
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        Word { letters }.reduce()
    }

    /// Left-to-right product of the bound elements.
    pub fn evaluate(&self, env: &Assignment) -> Result<JonqElement, Error> {
        let mut acc = JonqElement::identity();
        for letter in &self.letters {
            let value = env
                .get(&letter.gen)
                .ok_or_else(|| Error::UnboundGenerator(letter.gen.clone()))?;
            acc = acc.compose(&value.pow(letter.exp));
        }
        Ok(acc)
    }
}

/// `[u, v] = u v u^-1 v^-1`, reduced.
pub fn commutator(u: &Word, v: &Word) -> Word {
    u.mul(v).mul(&u.inverse()).mul(&v.inverse())
}

/// `[u, [u, ..., [u, v]...]]` with `k` copies of `u`; `k = 0` gives `v`.
pub fn iterated_commutator(u: &Word, v: &Word, k: usize) -> Word {
    (0..k).fold(v.reduce(), |acc, _| commutator(u, &acc))
}

impl fmt::Display for Word {
    /// `g1^e1*g2^e2*...`, exponent omitted when it is one; the empty word
    /// prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(&l.gen)?;
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}
