use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// The named graph families, written on the command line and in graph files
/// as `star N`, `bistar A B`, `path N`, `cycle N`, `complete N`,
/// `bipartite M N`, `multipartite A,B,C` and `wheel N`.
///
/// Vertex numbering is fixed per family:
/// - star: center 0, leaves `1..=n`;
/// - bistar: centers 0 and 1, then the `a` leaves of 0, then the `b` leaves of 1;
/// - path and cycle: `0..n` in order;
/// - complete multipartite (and bipartite): parts consecutively;
/// - wheel: hub 0, rim `1..n` in cycle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Star(usize),
    Bistar(usize, usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Wheel(usize),
}

fn too_small(what: &str, min: &str) -> Error {
    Error::invalid(format!("{what} needs {min}"))
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        let (n, edges): (usize, Vec<(usize, usize)>) = match *self {
            Family::Star(n) => {
                if n < 1 {
                    return Err(too_small("star", "n >= 1"));
                }
                (n + 1, (1..=n).map(|i| (0, i)).collect())
            }
            Family::Bistar(a, b) => {
                if a < 1 || b < 1 {
                    return Err(too_small("bistar", "a, b >= 1"));
                }
                let mut e = vec![(0, 1)];
                e.extend((2..2 + a).map(|i| (0, i)));
                e.extend((2 + a..2 + a + b).map(|i| (1, i)));
                (a + b + 2, e)
            }
            Family::Path(n) => {
                if n < 2 {
                    return Err(too_small("path", "n >= 2"));
                }
                (n, (1..n).map(|i| (i - 1, i)).collect())
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(too_small("cycle", "n >= 3"));
                }
                let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                e.push((0, n - 1));
                (n, e)
            }
            Family::Complete(n) => {
                if n < 2 {
                    return Err(too_small("complete graph", "n >= 2"));
                }
                (n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
            }
            Family::CompleteBipartite(m, n) => {
                return Family::CompleteMultipartite(vec![m, n]).build_named(self);
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.len() < 2 || parts.contains(&0) {
                    return Err(too_small("complete multipartite graph", "at least 2 nonempty parts"));
                }
                let mut start = Vec::with_capacity(parts.len());
                let mut total = 0;
                for &p in parts {
                    start.push(total);
                    total += p;
                }
                let mut e = Vec::new();
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        for u in start[i]..start[i] + parts[i] {
                            for v in start[j]..start[j] + parts[j] {
                                e.push((u, v));
                            }
                        }
                    }
                }
                (total, e)
            }
            Family::Wheel(n) => {
                if n < 4 {
                    return Err(too_small("wheel", "n >= 4"));
                }
                let mut e: Vec<_> = (1..n).map(|i| (0, i)).collect();
                e.extend((2..n).map(|i| (i - 1, i)));
                e.push((1, n - 1));
                (n, e)
            }
        };
        let edges =
            super::canonical_edges(n, edges).map_err(|f| Error::Internal(format!("family {self}: {}", f.message)))?;
        Ok(Graph::from_canonical(n, edges, Some(self.to_string())))
    }

    fn build_named(&self, as_family: &Family) -> Result<Graph> {
        let g = self.build()?;
        Ok(g.with_name(as_family.to_string()))
    }

    /// Families whose automorphism group acts transitively on edges.
    pub fn is_edge_transitive(&self) -> bool {
        match self {
            Family::Star(_) | Family::Cycle(_) | Family::Complete(_) | Family::CompleteBipartite(..) => true,
            Family::Path(n) => *n <= 3,
            Family::CompleteMultipartite(parts) => parts.len() == 2,
            Family::Bistar(..) | Family::Wheel(_) => false,
        }
    }

    /// Parses the whitespace-separated command-line form.
    pub fn from_args<S: AsRef<str>>(args: &[S]) -> Result<Family> {
        let joined: Vec<&str> = args.iter().map(AsRef::as_ref).collect();
        joined.join(" ").parse()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Star(n) => write!(f, "star {n}"),
            Family::Bistar(a, b) => write!(f, "bistar {a} {b}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::CompleteBipartite(m, n) => write!(f, "bipartite {m} {n}"),
            Family::CompleteMultipartite(parts) => {
                let p: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite {}", p.join(","))
            }
            Family::Wheel(n) => write!(f, "wheel {n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let mut words = s.split_whitespace();
        let kind = words.next().ok_or_else(|| Error::invalid("empty family spec"))?;
        let rest: Vec<&str> = words.collect();
        let num = |w: &str| -> Result<usize> {
            w.parse()
                .map_err(|_| Error::invalid(format!("expected a nonnegative integer, got {w:?}")))
        };
        let nums = |k: usize| -> Result<Vec<usize>> {
            if rest.len() != k {
                return Err(Error::invalid(format!(
                    "family {kind:?} takes {k} argument(s), got {}",
                    rest.len()
                )));
            }
            rest.iter().map(|w| num(w)).collect()
        };
        let family = match kind {
            "star" => Family::Star(nums(1)?[0]),
            "bistar" => {
                let v = nums(2)?;
                Family::Bistar(v[0], v[1])
            }
            "path" => Family::Path(nums(1)?[0]),
            "cycle" => Family::Cycle(nums(1)?[0]),
            "complete" => Family::Complete(nums(1)?[0]),
            "bipartite" => {
                let v = nums(2)?;
                Family::CompleteBipartite(v[0], v[1])
            }
            "multipartite" => {
                let parts: Vec<usize> = rest
                    .iter()
                    .flat_map(|w| w.split(','))
                    .filter(|w| !w.is_empty())
                    .map(num)
                    .collect::<Result<_>>()?;
                Family::CompleteMultipartite(parts)
            }
            "wheel" => Family::Wheel(nums(1)?[0]),
            other => return Err(Error::invalid(format!("unknown graph family {other:?}"))),
        };
        Ok(family)
    }
}
