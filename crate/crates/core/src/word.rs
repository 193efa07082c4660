use std::fmt;

use crate::error::{Error, IdentKind, Result};
use crate::symbols::SymbolTable;

/// Index of a letter in the declared alphabet order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub usize);

/// Index of a state in the declared state order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

/// A finite word over the alphabet, stored as letter indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.0
    }

    pub fn push(&mut self, letter: LetterId) {
        self.0.push(letter);
    }

    /// `self` followed by `letter`.
    pub fn extended(&self, letter: LetterId) -> Word {
        let mut w = self.clone();
        w.push(letter);
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.0.extend_from_slice(&other.0);
        w
    }
}

impl From<Vec<LetterId>> for Word {
    fn from(letters: Vec<LetterId>) -> Self {
        Word(letters)
    }
}

impl FromIterator<LetterId> for Word {
    fn from_iter<I: IntoIterator<Item = LetterId>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// The declared alphabet. Letters are arbitrary non-empty strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet(SymbolTable);

impl Alphabet {
    pub fn new(letters: Vec<String>) -> Result<Self> {
        if letters.iter().any(|l| l.is_empty()) {
            return Err(Error::EmptyIdentifier(IdentKind::Letter));
        }
        SymbolTable::new(IdentKind::Letter, letters).map(Alphabet)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        self.0.names()
    }

    pub fn ids(&self) -> impl Iterator<Item = LetterId> + '_ {
        (0..self.len()).map(LetterId)
    }

    pub fn name(&self, id: LetterId) -> &str {
        self.0.name(id.0)
    }

    pub fn lookup(&self, letter: &str) -> Result<LetterId> {
        self.0.lookup(letter).map(LetterId)
    }

    /// Parses a word. Letters may be separated by dots (`"0.2.1"`); without
    /// dots the text is split into declared letters, longest match first.
    /// The empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        if let Some(id) = self.0.get(text) {
            return Ok(Word(vec![LetterId(id)]));
        }
        if text.contains('.') {
            return text.split('.').map(|l| self.lookup(l)).collect();
        }
        let mut out = Vec::new();
        if self.tokenize(text, &mut out) {
            Ok(Word(out))
        } else {
            Err(Error::UnknownIdentifier {
                kind: IdentKind::Letter,
                name: text.to_string(),
            })
        }
    }

    fn tokenize(&self, rest: &str, out: &mut Vec<LetterId>) -> bool {
        if rest.is_empty() {
            return true;
        }
        let mut cuts: Vec<usize> = rest.char_indices().map(|(i, c)| i + c.len_utf8()).collect();
        cuts.reverse();
        for cut in cuts {
            if let Some(id) = self.0.get(&rest[..cut]) {
                out.push(LetterId(id));
                if self.tokenize(&rest[cut..], out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }

    pub fn format_word(&self, word: &Word) -> String {
        DisplayWord {
            alphabet: self,
            word,
        }
        .to_string()
    }
}

struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(self.alphabet.name(l))?;
        }
        Ok(())
    }
}

/// All words of length exactly `len`, in lexicographic order of letter ids.
pub fn words_of_length(alphabet_size: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = alphabet_size.checked_pow(len as u32).unwrap_or(0);
    let count = if len == 0 { 1 } else { total };
    (0..count).map(move |mut code| {
        let mut letters = vec![LetterId(0); len];
        for slot in letters.iter_mut().rev() {
            *slot = LetterId(code % alphabet_size);
            code /= alphabet_size;
        }
        Word(letters)
    })
}
