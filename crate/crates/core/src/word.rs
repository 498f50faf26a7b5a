//! Alternation of letters in words and the graphs words represent.
//!
//! Letters `x` and `y` alternate in `w` when the subsequence of `w` made of
//! their copies reads `xyxy...` or `yxyx...`. A word over `{0..n}` represents
//! a graph on `{0..n}` when alternation coincides with adjacency.

use std::fmt;
use std::str::FromStr;

use crate::error::WordError;
use crate::graph::{bit, Graph};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct letters in ascending order.
    pub fn alphabet(&self) -> Vec<usize> {
        let mut a = self.0.clone();
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn occurrences(&self, x: usize) -> usize {
        self.0.iter().filter(|&&c| c == x).count()
    }

    /// Word with every copy of `v` deleted and larger letters shifted down,
    /// matching [`Graph::remove_vertex`].
    pub fn remove_letter(&self, v: usize) -> Word {
        Word(
            self.0
                .iter()
                .filter(|&&c| c != v)
                .map(|&c| if c > v { c - 1 } else { c })
                .collect(),
        )
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letters shifted by `-offset`; for transcribing 1-based words.
    pub fn shifted_down(&self, offset: usize) -> Word {
        Word(self.0.iter().map(|&c| c - offset).collect())
    }

    fn check_alphabet(&self, n: usize) -> Result<(), WordError> {
        let mut seen = vec![false; n];
        for &c in &self.0 {
            if c >= n {
                return Err(WordError::AlphabetMismatch {
                    n,
                    detail: format!("letter {c} is out of range"),
                });
            }
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(WordError::AlphabetMismatch { n, detail: format!("letter {missing} is missing") });
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    /// Compact digit string when every letter is below 10, otherwise
    /// space-separated decimals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&c| c < 10) {
            for c in &self.0 {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Accepts whitespace-separated decimals, or a compact digit string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let letters: Option<Vec<usize>> = if s.split_whitespace().count() > 1 {
            s.split_whitespace().map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        letters.map(Word).ok_or_else(|| WordError::Parse(s.to_string()))
    }
}

/// Whether `x` and `y` alternate in `w`.
pub fn alternate(w: &Word, x: usize, y: usize) -> Result<bool, WordError> {
    if x == y {
        return Err(WordError::SameLetter(x));
    }
    for z in [x, y] {
        if !w.0.contains(&z) {
            return Err(WordError::MissingLetter(z));
        }
    }
    Ok(alternates_unchecked(&w.0, x, y))
}

fn alternates_unchecked(letters: &[usize], x: usize, y: usize) -> bool {
    let mut last = None;
    for &c in letters {
        if c == x || c == y {
            if last == Some(c) {
                return false;
            }
            last = Some(c);
        }
    }
    true
}

/// Graph on `0..n` whose edges are the alternating pairs of `w`.
pub fn alternation_graph(w: &Word, n: usize) -> Result<Graph, WordError> {
    w.check_alphabet(n)?;
    // broken[x] collects every y that fails to separate two copies of x.
    let mut last_pos: Vec<Option<usize>> = vec![None; n];
    let mut broken = vec![0u64; n];
    for (i, &x) in w.0.iter().enumerate() {
        if let Some(p) = last_pos[x] {
            // Every y with no occurrence strictly between the two copies of x
            // fails to alternate with x.
            let mut between = 0u64;
            for &c in &w.0[p + 1..i] {
                between |= bit(c);
            }
            broken[x] |= !between;
        }
        last_pos[x] = Some(i);
    }
    let mut g = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if broken[x] & bit(y) == 0 && broken[y] & bit(x) == 0 {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// A pair where the word's alternation disagrees with the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    Alphabet(WordError),
    /// `(x, y, adjacent_in_graph)`; alternation in the word is the opposite.
    Pair(usize, usize, bool),
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Alphabet(e) => write!(f, "{e}"),
            Mismatch::Pair(x, y, true) => write!(f, "{x}{y} is an edge but {x} and {y} do not alternate"),
            Mismatch::Pair(x, y, false) => write!(f, "{x}{y} is not an edge but {x} and {y} alternate"),
        }
    }
}

/// Like [`represents`], reporting the first differing pair on failure.
pub fn check_represents(w: &Word, g: &Graph) -> Result<(), Mismatch> {
    let h = alternation_graph(w, g.n()).map_err(Mismatch::Alphabet)?;
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if h.adj(x, y) != g.adj(x, y) {
                return Err(Mismatch::Pair(x, y, g.adj(x, y)));
            }
        }
    }
    Ok(())
}

/// Whether `w` represents the labelled graph `g` exactly.
pub fn represents(w: &Word, g: &Graph) -> bool {
    check_represents(w, g).is_ok()
}

/// Search for a uniform word representing `g`, trying uniformity `1..=max_k`
/// in turn. `None` means no representant within the bound, which does not
/// by itself imply non-representability.
///
/// Uniform representants are closed under cyclic shifts, so the search only
/// considers words that start with letter 0.
pub fn find_representant(g: &Graph, max_k: usize) -> Option<Word> {
    let n = g.n();
    if n == 0 {
        return Some(Word::default());
    }
    (1..=max_k).find_map(|k| UniformSearch::new(g, k).run())
}

struct UniformSearch<'a> {
    g: &'a Graph,
    k: usize,
    word: Vec<usize>,
    remaining: Vec<usize>,
    /// Positions of the most recent copy of each letter.
    last: Vec<Option<usize>>,
    /// `broken[x]` bit `y`: x and y have already failed to alternate.
    broken: Vec<u64>,
}

impl<'a> UniformSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        UniformSearch {
            g,
            k,
            word: Vec::with_capacity(n * k),
            remaining: vec![k; n],
            last: vec![None; n],
            broken: vec![0; n],
        }
    }

    fn run(mut self) -> Option<Word> {
        self.remaining[0] -= 1;
        self.place(0);
        if self.extend() {
            Some(Word(self.word))
        } else {
            None
        }
    }

    /// Bits of letters that occur strictly after the last copy of `x`.
    fn seen_since(&self, x: usize) -> u64 {
        match self.last[x] {
            None => 0,
            Some(p) => self.word[p + 1..].iter().fold(0, |m, &c| m | bit(c)),
        }
    }

    fn place(&mut self, x: usize) {
        self.word.push(x);
        self.last[x] = Some(self.word.len() - 1);
    }

    fn extend(&mut self) -> bool {
        let n = self.g.n();
        if self.word.len() == n * self.k {
            // Every non-edge must have broken alternation by now.
            return (0..n).all(|x| {
                let nonadj = self.g.vertex_mask() & !self.g.neighbors_mask(x) & !bit(x);
                nonadj & !(self.broken[x] | self.sym_broken(x)) == 0
            });
        }
        for x in 0..n {
            if self.remaining[x] == 0 {
                continue;
            }
            // Placing x breaks alternation with every letter absent since
            // x's previous copy; none of those may be neighbours of x.
            let newly = if self.last[x].is_some() {
                self.g.vertex_mask() & !self.seen_since(x) & !bit(x)
            } else {
                0
            };
            if newly & self.g.neighbors_mask(x) != 0 {
                continue;
            }
            let saved_broken = self.broken[x];
            let saved_last = self.last[x];
            self.broken[x] |= newly;
            self.remaining[x] -= 1;
            self.place(x);
            if self.extend() {
                return true;
            }
            self.word.pop();
            self.last[x] = saved_last;
            self.remaining[x] += 1;
            self.broken[x] = saved_broken;
        }
        false
    }

    fn sym_broken(&self, x: usize) -> u64 {
        (0..self.g.n()).filter(|&y| self.broken[y] & bit(x) != 0).fold(0, |m, y| m | bit(y))
    }
}
