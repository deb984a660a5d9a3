//! Verification of AR-labelings.
//!
//! A vertex is an AR-vertex when the labels on its incident edges have
//! distinct subset sums; a labeling is an AR-labeling when it is injective and
//! every vertex is an AR-vertex. Failed checks come with a certificate that
//! can be re-validated independently.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dss::{colliding_subsets, is_dss};
use crate::error::{Error, Result};
use crate::graph::{json_error, load_graph, Graph};

/// Degree up to which collision certificates come from listing all `2^d` sums.
const NAIVE_CERT_DEGREE: usize = 20;

/// Positive edge labels aligned to a graph's canonical edge order.
///
/// Injectivity is not enforced here: a repeated label is a verification
/// failure reported by [`is_ar_labeling`], not a malformed input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Result<Self> {
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            return Err(Error::invalid(format!("label {i} is not a positive integer")));
        }
        Ok(Labeling { labels })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_label(&self) -> u64 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn label(&self, e: usize) -> u64 {
        self.labels[e]
    }

    /// Labels of the edges at `v`, in incident-edge order.
    pub fn at_vertex(&self, g: &Graph, v: usize) -> Vec<u64> {
        g.incidence().of(v).iter().map(|&e| self.labels[e]).collect()
    }

    pub fn to_json(&self) -> String {
        format!("{}\n", serde_json::to_string(self).expect("labels serialize"))
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels)
    }
}

/// Parses labeling-file text: `{"labels": [1, 2, 3]}`.
pub fn parse_labeling(text: &str, source: &str) -> Result<Labeling> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Raw {
        labels: Vec<u64>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    if let Some(i) = raw.labels.iter().position(|&l| l == 0) {
        return Err(Error::Parse {
            path: source.to_string(),
            position: format!("labels[{i}]"),
            message: "labels must be positive integers".into(),
        });
    }
    Ok(Labeling { labels: raw.labels })
}

pub fn load_labeling(path: impl AsRef<Path>) -> Result<Labeling> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_labeling(&text, &path.display().to_string())
}

pub fn save_labeling(l: &Labeling, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, l.to_json()).map_err(|e| Error::io(path, e))
}

/// Why a labeling is not an AR-labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Failure {
    /// Two edges share a label.
    NotInjective { edges: (usize, usize), label: u64 },
    /// Two disjoint sets of edges at `vertex` have the same label sum.
    SubsetCollision {
        vertex: usize,
        left: Vec<usize>,
        right: Vec<usize>,
        sum: u64,
    },
}

impl Failure {
    /// Re-checks the certificate against the labeling, independently of how it was found.
    pub fn holds(&self, g: &Graph, l: &Labeling) -> bool {
        match self {
            Failure::NotInjective { edges: (a, b), label } => {
                a != b && *a < l.len() && *b < l.len() && l.label(*a) == *label && l.label(*b) == *label
            }
            Failure::SubsetCollision {
                vertex,
                left,
                right,
                sum,
            } => {
                let Ok(incident) = g.incident_edges(*vertex) else {
                    return false;
                };
                let ok_side = |side: &[usize]| side.iter().all(|e| incident.contains(e));
                let total = |side: &[usize]| side.iter().map(|&e| l.label(e)).sum::<u64>();
                left != right && ok_side(left) && ok_side(right) && total(left) == *sum && total(right) == *sum
            }
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotInjective { edges: (a, b), label } => {
                write!(f, "not injective: edges {a} and {b} both carry label {label}")
            }
            Failure::SubsetCollision {
                vertex,
                left,
                right,
                sum,
            } => write!(
                f,
                "vertex {vertex} is not an AR-vertex: edge sets {left:?} and {right:?} both sum to {sum}"
            ),
        }
    }
}

/// Outcome of [`is_ar_labeling`]; `failure` is the first violation found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub failure: Option<Failure>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            ok: true,
            failure: None,
        }
    }

    fn fail(failure: Failure) -> Self {
        Verdict {
            ok: false,
            failure: Some(failure),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("AR-labeling: ok"),
            Some(fail) => write!(f, "AR-labeling: violated: {fail}"),
        }
    }
}

fn check_length(g: &Graph, l: &Labeling) -> Result<()> {
    if l.len() != g.edge_count() {
        return Err(Error::invalid(format!(
            "labeling has {} labels but the graph has {} edges",
            l.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

fn labels_are_dss(labels: &[u64]) -> bool {
    if labels.is_empty() {
        return true;
    }
    // duplicates and zeros make is_dss fail as invalid input; both mean "not AR"
    is_dss(labels).unwrap_or(false)
}

/// Whether `v`'s incident labels have distinct subset sums.
pub fn is_ar_vertex(g: &Graph, l: &Labeling, v: usize) -> Result<bool> {
    check_length(g, l)?;
    g.incident_edges(v)?;
    Ok(labels_are_dss(&l.at_vertex(g, v)))
}

/// Two disjoint index sets of `labels` with equal sums, for any degree.
fn collision_indices(labels: &[u64]) -> Option<(Vec<usize>, Vec<usize>)> {
    let to_vec = |m: u64| (0..labels.len()).filter(|&i| m >> i & 1 == 1).collect();
    if labels.len() <= NAIVE_CERT_DEGREE {
        let (a, b) = colliding_subsets(labels)?;
        return Some((to_vec(a), to_vec(b)));
    }
    // Grow the sum -> subset map one label at a time; the first repeated sum
    // is a collision.
    let mut seen: HashMap<u64, Vec<usize>> = HashMap::from([(0, Vec::new())]);
    for (i, &a) in labels.iter().enumerate() {
        let current: Vec<(u64, Vec<usize>)> = seen.iter().map(|(s, m)| (*s, m.clone())).collect();
        for (s, mut subset) in current {
            subset.push(i);
            if let Some(other) = seen.get(&(s + a)) {
                let left: Vec<usize> = other.iter().copied().filter(|x| !subset.contains(x)).collect();
                let right: Vec<usize> = subset.iter().copied().filter(|x| !other.contains(x)).collect();
                return Some(if left <= right { (left, right) } else { (right, left) });
            }
            seen.insert(s + a, subset);
        }
    }
    None
}

/// Checks injectivity, then every vertex in increasing order.
pub fn is_ar_labeling(g: &Graph, l: &Labeling) -> Result<Verdict> {
    check_length(g, l)?;
    let mut first: HashMap<u64, usize> = HashMap::with_capacity(l.len());
    for (e, &label) in l.labels().iter().enumerate() {
        if let Some(&prev) = first.get(&label) {
            return Ok(Verdict::fail(Failure::NotInjective {
                edges: (prev, e),
                label,
            }));
        }
        first.insert(label, e);
    }
    for v in 0..g.vertex_count() {
        let labels = l.at_vertex(g, v);
        if labels_are_dss(&labels) {
            continue;
        }
        let incident = g.incidence().of(v);
        let (a, b) = collision_indices(&labels)
            .ok_or_else(|| Error::Internal(format!("vertex {v} failed the DSS test but no collision was found")))?;
        let left: Vec<usize> = a.iter().map(|&i| incident[i]).collect();
        let right: Vec<usize> = b.iter().map(|&i| incident[i]).collect();
        let sum = left.iter().map(|&e| l.label(e)).sum();
        return Ok(Verdict::fail(Failure::SubsetCollision {
            vertex: v,
            left,
            right,
            sum,
        }));
    }
    Ok(Verdict::pass())
}

/// With edges labeled `x` and `y` at a vertex, a third edge may carry `z`
/// iff `z ≠ x + y` and `z ≠ |x − y|`.
pub fn third_label_feasible(x: u64, y: u64, z: u64) -> Result<bool> {
    if x == 0 || y == 0 || z == 0 {
        return Err(Error::invalid("labels must be positive integers"));
    }
    if x == y || y == z || x == z {
        return Err(Error::invalid(format!(
            "labels {x}, {y}, {z} are not pairwise distinct"
        )));
    }
    Ok(z != x + y && z != x.abs_diff(y))
}

/// Loads a graph file and a labeling file and checks the labeling.
pub fn verify_files(graph_path: impl AsRef<Path>, labeling_path: impl AsRef<Path>) -> Result<Verdict> {
    let g = load_graph(graph_path)?;
    let l = load_labeling(labeling_path)?;
    is_ar_labeling(&g, &l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn lab(v: &[u64]) -> Labeling {
        Labeling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ar_vertex_examples() {
        let p3 = Family::Path(3).build().unwrap();
        let l = lab(&[4, 9]);
        assert!(is_ar_vertex(&p3, &l, 0).unwrap());
        assert!(is_ar_vertex(&p3, &l, 1).unwrap());
        let s3 = Family::Star(3).build().unwrap();
        assert!(!is_ar_vertex(&s3, &lab(&[1, 2, 3]), 0).unwrap());
        assert!(is_ar_vertex(&s3, &lab(&[1, 2, 3]), 3).unwrap());
        assert!(is_ar_vertex(&s3, &lab(&[1, 2, 3]), 4).is_err());
    }

    #[test]
    fn labeling_examples() {
        let p4 = Family::Path(4).build().unwrap();
        assert!(is_ar_labeling(&p4, &lab(&[1, 2, 3])).unwrap().ok);

        let s3 = Family::Star(3).build().unwrap();
        let v = is_ar_labeling(&s3, &lab(&[1, 2, 3])).unwrap();
        assert!(!v.ok);
        let f = v.failure.unwrap();
        assert!(matches!(f, Failure::SubsetCollision { vertex: 0, .. }));
        assert!(f.holds(&s3, &lab(&[1, 2, 3])));

        let v = is_ar_labeling(&p4, &lab(&[2, 5, 2])).unwrap();
        assert_eq!(
            v.failure,
            Some(Failure::NotInjective {
                edges: (0, 2),
                label: 2
            })
        );
        assert!(is_ar_labeling(&p4, &lab(&[1, 2])).is_err());
    }

    #[test]
    fn certificate_for_high_degree_vertex() {
        let star = Family::Star(24).build().unwrap();
        let mut labels: Vec<u64> = (0..12).map(|i| 1u64 << i).collect();
        labels.extend((0..12).map(|i| 10_000 + 7 * i));
        let l = Labeling::new(labels).unwrap();
        let v = is_ar_labeling(&star, &l).unwrap();
        let f = v.failure.unwrap();
        assert!(f.holds(&star, &l), "{f}");
    }

    #[test]
    fn lemma_examples() {
        assert!(!third_label_feasible(2, 5, 7).unwrap());
        assert!(!third_label_feasible(2, 5, 3).unwrap());
        assert!(third_label_feasible(2, 5, 6).unwrap());
        assert!(third_label_feasible(2, 2, 6).is_err());
        assert!(third_label_feasible(0, 2, 6).is_err());
    }

    #[test]
    fn labeling_file_parsing() {
        assert_eq!(
            parse_labeling(r#"{"labels": [1, 2, 4]}"#, "t").unwrap(),
            lab(&[1, 2, 4])
        );
        let err = parse_labeling(r#"{"labels": [1, 0]}"#, "t").unwrap_err();
        assert!(matches!(err, Error::Parse { ref position, .. } if position == "labels[1]"));
        assert!(parse_labeling(r#"{"labels": [1], "extra": 1}"#, "t").is_err());
        assert!(parse_labeling(r#"{"labels": [-1]}"#, "t").is_err());
    }
}
