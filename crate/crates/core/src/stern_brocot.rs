//! The pair-level quintic forest.
//!
//! Fractions `n/m` with `0 < n < m`, `gcd(n, m) = 1` and `m ≢ n (mod 3)` form
//! two trees rooted at `1/2` and `1/3 = S·(1,2)ᵀ`. The five children of a
//! pair `v` are `A_i·v`; the `A_i` are the Stern–Brocot step matrices `F_i`
//! conjugated by `C = [[0,1],[1,1]]`.

use std::fmt;
use std::str::FromStr;

use crate::eisenstein::Pair;
use crate::error::{Error, Result};
use crate::matrix::Mat2;

pub const S_PRIME: Mat2 = Mat2::new([[1, 1], [0, 1]]);

/// `F_1..F_5`, stored at indices `0..5`.
pub const F: [Mat2; 5] = [
    Mat2::new([[1, 3], [0, 1]]),
    Mat2::new([[2, 3], [1, 1]]),
    Mat2::new([[2, 3], [1, 2]]),
    Mat2::new([[1, 3], [1, 2]]),
    Mat2::new([[1, 0], [1, 1]]),
];

pub const S: Mat2 = Mat2::new([[1, 0], [1, 1]]);

/// `A_1..A_5`, stored at indices `0..5`.
pub const A: [Mat2; 5] = [
    Mat2::new([[1, 0], [3, 1]]),
    Mat2::new([[0, 1], [1, 3]]),
    Mat2::new([[1, 1], [2, 3]]),
    Mat2::new([[1, 1], [3, 2]]),
    Mat2::new([[0, 1], [-1, 2]]),
];

/// The conjugator taking the `F` basis to the `A` basis.
pub const C: Mat2 = Mat2::new([[0, 1], [1, 1]]);

/// All constant 2×2 matrices of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constants {
    pub s_prime: Mat2,
    pub f: [Mat2; 5],
    pub s: Mat2,
    pub a: [Mat2; 5],
    pub c: Mat2,
}

pub fn constants() -> Constants {
    Constants {
        s_prime: S_PRIME,
        f: F,
        s: S,
        a: A,
        c: C,
    }
}

/// A child index in `1..=5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step(u8);

impl Step {
    pub const ALL: [Step; 5] = [Step(1), Step(2), Step(3), Step(4), Step(5)];

    pub fn new(index: u8) -> Option<Step> {
        (1..=5).contains(&index).then_some(Step(index))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn pair_matrix(self) -> &'static Mat2 {
        &A[usize::from(self.0 - 1)]
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which of the two trees a node lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// Pair `(1,2)`, triple `(7,8,5)`.
    A,
    /// Pair `(1,3)`, triple `(13,15,7)`.
    B,
}

impl Root {
    pub const BOTH: [Root; 2] = [Root::A, Root::B];

    pub fn pair(self) -> Pair {
        match self {
            Root::A => Pair::new(1, 2),
            Root::B => Pair::new(1, 3),
        }
    }

    fn token(self) -> char {
        match self {
            Root::A => 'A',
            Root::B => 'B',
        }
    }
}

/// A forest address: root plus the child indices taken from it, first step first.
///
/// Written as `A`, `B:4`, `A:5.5`, ...
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCode {
    pub root: Root,
    pub steps: Vec<Step>,
}

impl PathCode {
    pub fn root(root: Root) -> Self {
        PathCode {
            root,
            steps: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    pub fn child(&self, step: Step) -> PathCode {
        let mut steps = Vec::with_capacity(self.steps.len() + 1);
        steps.extend_from_slice(&self.steps);
        steps.push(step);
        PathCode {
            root: self.root,
            steps,
        }
    }

    pub fn parent(&self) -> Option<PathCode> {
        let (_, init) = self.steps.split_last()?;
        Some(PathCode {
            root: self.root,
            steps: init.to_vec(),
        })
    }
}

impl fmt::Display for PathCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root.token())?;
        for (i, s) in self.steps.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { ':' } else { '.' }, s)?;
        }
        Ok(())
    }
}

impl FromStr for PathCode {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason| Error::BadPath {
            input: input.to_owned(),
            reason,
        };
        let (head, tail) = match input.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (input, None),
        };
        let root = match head {
            "A" => Root::A,
            "B" => Root::B,
            _ => return Err(bad("root must be \"A\" or \"B\"")),
        };
        let steps = match tail {
            None => Vec::new(),
            Some("") => return Err(bad("empty step list after ':'")),
            Some(t) => t
                .split('.')
                .map(|tok| match tok.as_bytes() {
                    [d @ b'1'..=b'5'] => Ok(Step(d - b'0')),
                    _ => Err(bad("each step must be a single digit 1-5")),
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(PathCode { root, steps })
    }
}

/// Outcome of one descent step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParentResult {
    IsRoot(Root),
    Parent { pair: Pair, step: Step },
}

pub fn is_forest_pair(p: &Pair) -> bool {
    p.is_valid()
}

/// The five children `A_i·p`, index `i − 1`.
pub fn children_pair(p: &Pair) -> Result<[Pair; 5]> {
    let p = p.validate()?;
    let mut out = [p; 5];
    for (slot, m) in out.iter_mut().zip(&A) {
        *slot = Pair::from_vec(m.apply(p.to_vec())?);
    }
    Ok(out)
}

/// Invert one `A_i`. The ranges of `m/n` reached by the five children are
/// disjoint: step 1 gives `r > 4`, step 2 `3 < r < 4`, step 3 `5/2 < r < 3`,
/// step 4 `2 < r < 5/2` and step 5 `1 < r < 2`.
pub fn parent_pair(p: &Pair) -> Result<ParentResult> {
    let Pair { n, m } = p.validate()?;
    if let Some(root) = Root::BOTH.into_iter().find(|r| r.pair() == *p) {
        return Ok(ParentResult::IsRoot(root));
    }
    // every subtraction below stays positive in its branch, so none can overflow
    let (step, parent) = if exceeds(1, m, 4, n) {
        (1, Pair::new(n, m - n - n - n))
    } else if exceeds(1, m, 3, n) {
        (2, Pair::new(m - n - n - n, n))
    } else if exceeds(2, m, 5, n) {
        (3, Pair::new(n - (m - n - n), m - n - n))
    } else if exceeds(1, m, 2, n) {
        (4, Pair::new(m - n - n, n - (m - n - n)))
    } else {
        (5, Pair::new(n - (m - n), n))
    };
    if !parent.is_valid() {
        return Err(Error::Invariant("descent produced a non-forest pair"));
    }
    Ok(ParentResult::Parent {
        pair: parent,
        step: Step(step),
    })
}

/// `j·x > k·y` for non-negative `x, y`, compared exactly.
fn exceeds(j: u128, x: i128, k: u128, y: i128) -> bool {
    let lhs = j.checked_mul(x as u128);
    let rhs = k.checked_mul(y as u128);
    match (lhs, rhs) {
        (Some(l), Some(r)) => l > r,
        (_, None) => false,
        (None, Some(_)) => true,
    }
}

pub fn path_of_pair(p: &Pair) -> Result<PathCode> {
    let mut steps = Vec::new();
    let mut cur = *p;
    let root = loop {
        match parent_pair(&cur)? {
            ParentResult::IsRoot(root) => break root,
            ParentResult::Parent { pair, step } => {
                steps.push(step);
                cur = pair;
            }
        }
    };
    steps.reverse();
    Ok(PathCode { root, steps })
}

pub fn pair_of_path(code: &PathCode) -> Result<Pair> {
    code.steps.iter().try_fold(code.root.pair(), |v, s| {
        Ok(Pair::from_vec(s.pair_matrix().apply(v.to_vec())?))
    })
}

/// Every forest pair with `m ≤ max_m` together with its path, ordered by
/// depth, then root, then steps. Each child has a larger `m` than its parent.
pub fn enumerate_pairs(max_m: i128) -> Vec<(Pair, PathCode)> {
    let mut out = Vec::new();
    let mut stack: Vec<(Pair, PathCode)> = Root::BOTH
        .into_iter()
        .map(|r| (r.pair(), PathCode::root(r)))
        .filter(|(p, _)| p.m <= max_m)
        .collect();
    while let Some((pair, code)) = stack.pop() {
        for step in Step::ALL {
            if let Ok(v) = step.pair_matrix().apply(pair.to_vec()) {
                let child = Pair::from_vec(v);
                if child.m <= max_m {
                    stack.push((child, code.child(step)));
                }
            }
        }
        out.push((pair, code));
    }
    out.sort_unstable_by(|x, y| (x.1.depth(), &x.1).cmp(&(y.1.depth(), &y.1)));
    out
}
