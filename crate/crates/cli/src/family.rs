//! `--family` specs: `complete:m`, `path:n`, `lollipop:m,n`, `lariat:k`.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use chromsym::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Lollipop(usize, usize),
    /// Indexed by vertex count: `lariat:9` is `L_{3,6}`.
    Lariat(usize),
}

impl Family {
    /// The same graph as a lollipop `(m, n)`.
    pub fn as_lollipop(self) -> (usize, usize) {
        match self {
            Family::Complete(m) => (m, 0),
            Family::Path(n) => (0, n),
            Family::Lollipop(m, n) => (m, n),
            Family::Lariat(k) => (3, k - 3),
        }
    }

    /// `(m, n)` with `m >= 2` describing the same graph, if there is one.
    /// `L_{1,n} = L_{0,n+1}` and `L_{0,n} = L_{2,n-2}` for `n >= 2`.
    pub fn normalized_lollipop(self) -> Option<(usize, usize)> {
        let (m, n) = self.as_lollipop();
        let total = m + n;
        if m >= 2 {
            Some((m, n))
        } else if total >= 2 {
            Some((2, total - 2))
        } else {
            None
        }
    }

    pub fn graph(self) -> Graph {
        let (m, n) = self.as_lollipop();
        Graph::lollipop(m, n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(m) => write!(f, "complete:{m}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Lollipop(m, n) => write!(f, "lollipop:{m},{n}"),
            Family::Lariat(k) => write!(f, "lariat:{k}"),
        }
    }
}

fn number(s: &str, spec: &str) -> anyhow::Result<usize> {
    s.trim()
        .parse()
        .with_context(|| format!("bad number {s:?} in family {spec:?}"))
}

impl FromStr for Family {
    type Err = anyhow::Error;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let (name, args) = spec
            .split_once(':')
            .ok_or_else(|| anyhow!("family {spec:?} must look like name:args"))?;
        let args: Vec<&str> = args.split(',').collect();
        match (name, args.as_slice()) {
            ("complete", [m]) => Ok(Family::Complete(number(m, spec)?)),
            ("path", [n]) => Ok(Family::Path(number(n, spec)?)),
            ("lollipop", [m, n]) => Ok(Family::Lollipop(number(m, spec)?, number(n, spec)?)),
            ("lariat", [k]) => {
                let k = number(k, spec)?;
                if k < 3 {
                    bail!("lariat:{k} is undefined, lariats start at lariat:3");
                }
                Ok(Family::Lariat(k))
            }
            ("complete" | "path" | "lariat" | "lollipop", _) => {
                bail!("wrong number of arguments in family {spec:?}")
            }
            _ => bail!("unknown family {name:?} (expected complete, path, lollipop or lariat)"),
        }
    }
}
