//! Reduction from H-word reachability to token sliding on incomparability graphs.
//!
//! For a digraph `H` and a length `n`, the poset `P_n(H)` lives on
//! `V(H) × {1..n}` with `(x,i) ≺ (y,j)` iff `j = i+1` and `xy ∈ E(H)`, or
//! `j > i+1`. Its size-`n` chains are exactly the H-words of length `n`, so
//! independent sets of size `n` in the incomparability graph correspond to
//! H-words and single slides to single-letter changes.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::oracle::{AbstractGraph, OracleError, State};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HardnessError {
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("words have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("words must be nonempty")]
    EmptyWord,
    #[error("word {word} is not an H-word: no arc from position {position} to {}", position + 1)]
    NotHWord { word: char, position: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Directed graph on labelled vertices; loops allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    letters: Vec<String>,
    index: HashMap<String, usize>,
    arcs: Vec<Vec<bool>>,
}

impl Digraph {
    pub fn new<S, E>(letters: Vec<S>, arcs: E) -> Result<Self, HardnessError>
    where
        S: Into<String>,
        E: IntoIterator<Item = (S, S)>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, l) in letters.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(HardnessError::DuplicateLetter(l.clone()));
            }
        }
        let n = letters.len();
        let mut h = Digraph {
            letters,
            index,
            arcs: vec![vec![false; n]; n],
        };
        for (x, y) in arcs {
            let (x, y) = (h.letter(&x.into())?, h.letter(&y.into())?);
            h.arcs[x][y] = true;
        }
        Ok(h)
    }

    /// Digraph on letters `0..n` with arcs given as a bitmask over `x * n + y`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let letters: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let arcs = (0..n)
            .map(|x| (0..n).map(|y| mask >> (x * n + y) & 1 == 1).collect())
            .collect();
        let index = letters.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Digraph { letters, index, arcs }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn letter(&self, l: &str) -> Result<usize, HardnessError> {
        self.index
            .get(l)
            .copied()
            .ok_or_else(|| HardnessError::UnknownLetter(l.to_owned()))
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.arcs[x][y]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.arcs[x][y])
            .collect()
    }

    pub fn word<S: AsRef<str>>(&self, letters: &[S]) -> Result<Vec<usize>, HardnessError> {
        letters.iter().map(|l| self.letter(l.as_ref())).collect()
    }

    /// First position `i` (1-based) with no arc from letter `i` to letter `i+1`.
    pub fn h_word_violation(&self, w: &[usize]) -> Option<usize> {
        w.windows(2).position(|p| !self.arcs[p[0]][p[1]]).map(|i| i + 1)
    }

    pub fn is_h_word(&self, w: &[usize]) -> bool {
        self.h_word_violation(w).is_none()
    }

    /// All H-words of length `n`, lexicographically.
    pub fn h_words(&self, n: usize) -> Vec<Vec<usize>> {
        let mut words: Vec<Vec<usize>> = if n == 0 {
            vec![]
        } else {
            (0..self.len()).map(|x| vec![x]).collect()
        };
        for _ in 1..n {
            words = words
                .into_iter()
                .flat_map(|w| {
                    let last = *w.last().unwrap();
                    (0..self.len())
                        .filter(move |&y| self.arcs[last][y])
                        .map(move |y| {
                            let mut next = w.clone();
                            next.push(y);
                            next
                        })
                })
                .collect();
        }
        words
    }
}

/// `(x, i) ≺ (y, j)` in `P_n(H)`; levels are 1-based.
pub fn precedes(h: &Digraph, (x, i): (usize, usize), (y, j): (usize, usize)) -> bool {
    (j == i + 1 && h.has_arc(x, y)) || j > i + 1
}

#[derive(Clone, Debug)]
pub struct HardnessInstance {
    pub digraph: Digraph,
    pub n: usize,
    /// Incomparability graph of `P_n(H)`; element `(x, i)` has index `(i-1)|V(H)| + x`.
    pub graph: AbstractGraph,
    pub initial: State,
    pub target: State,
    /// `2|V(H)|`.
    pub width_bound: usize,
}

impl HardnessInstance {
    pub fn element(&self, v: u32) -> (usize, usize) {
        let h = self.digraph.len();
        (v as usize % h, v as usize / h + 1)
    }

    /// The word encoded by a state with one element per level.
    pub fn word_of(&self, s: &[u32]) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for &v in s {
            let (x, i) = self.element(v);
            w[i - 1] = x;
        }
        w
    }
}

fn state_of(h: &Digraph, w: &[usize]) -> State {
    w.iter()
        .enumerate()
        .map(|(i, &x)| (i * h.len() + x) as u32)
        .collect()
}

fn check_words(h: &Digraph, a: &[usize], b: &[usize]) -> Result<(), HardnessError> {
    if a.len() != b.len() {
        return Err(HardnessError::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(HardnessError::EmptyWord);
    }
    for (name, w) in [('a', a), ('b', b)] {
        if let Some(position) = h.h_word_violation(w) {
            return Err(HardnessError::NotHWord { word: name, position });
        }
    }
    Ok(())
}

/// Builds the incomparability graph of `P_n(H)` with the sets encoding `a` and `b`.
pub fn gen_hardness(h: &Digraph, a: &[usize], b: &[usize]) -> Result<HardnessInstance, HardnessError> {
    check_words(h, a, b)?;
    let n = a.len();
    let size = h.len();
    let element = |v: usize| (v % size, v / size + 1);
    let ids = (0..n * size)
        .map(|v| {
            let (x, i) = element(v);
            format!("{}@{i}", h.letters[x])
        })
        .collect();
    let graph = AbstractGraph::from_fn(ids, |u, v| {
        let (p, q) = (element(u), element(v));
        !precedes(h, p, q) && !precedes(h, q, p)
    })?;
    Ok(HardnessInstance {
        digraph: h.clone(),
        n,
        graph,
        initial: state_of(h, a),
        target: state_of(h, b),
        width_bound: 2 * size,
    })
}

/// BFS over H-words changing one letter at a time.
pub fn hword_reachability_oracle(
    h: &Digraph,
    a: &[usize],
    b: &[usize],
) -> Result<(bool, Option<usize>), HardnessError> {
    check_words(h, a, b)?;
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::from([(a.to_vec(), 0)]);
    let mut queue = VecDeque::from([a.to_vec()]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if w == b {
            return Ok((true, Some(d)));
        }
        for i in 0..w.len() {
            for x in 0..h.len() {
                if x == w[i] {
                    continue;
                }
                let ok_left = i == 0 || h.has_arc(w[i - 1], x);
                let ok_right = i + 1 == w.len() || h.has_arc(x, w[i + 1]);
                if ok_left && ok_right {
                    let mut next = w.clone();
                    next[i] = x;
                    if !dist.contains_key(&next) {
                        dist.insert(next.clone(), d + 1);
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok((false, None))
}
