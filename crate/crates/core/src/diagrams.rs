//! Non-crossing chord diagrams.
//!
//! A diagram on `2n` points has two interchangeable names: a [`Matching`]
//! (the fixed-point-free non-crossing involution on points `1..=2n`) and a
//! [`RestrictedSequence`] (the arc insertions `l_{a_n} ∘ … ∘ l_{a_1}` that
//! build it from the empty diagram). Sequences are stored `a_1` first and
//! rendered in the conventional order `(a_n, …, a_1)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid restricted sequence at a_{index}: {reason}")]
    InvalidSequence { index: usize, reason: String },
    #[error("malformed sequence token {0:?}")]
    MalformedToken(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("l_{k} is defined for 1 <= k <= {max}")]
    InsertOutOfRange { k: usize, max: usize },
    #[error("tau_{k} is defined for 1 <= k <= {max}")]
    ContractOutOfRange { k: usize, max: usize },
    #[error("diagram sizes differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("({}, {}) / ({}, {}) is not a quad move site", .0.outer.0, .0.outer.1, .0.inner.0, .0.inner.1)]
    InvalidQuadSite(QuadMoveSite),
}

/// The canonical name of a chord diagram.
///
/// `entries()[i]` is `a_{i+1}`. The derived ordering compares entries from
/// `a_1` upward, which is the basis order used throughout the crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RestrictedSequence {
    entries: Vec<u32>,
}

impl RestrictedSequence {
    /// Validates entries given `a_1` first.
    pub fn new(entries: Vec<u32>) -> Result<Self, DiagramError> {
        for (i, &a) in entries.iter().enumerate() {
            let index = i + 1;
            if a == 0 {
                return Err(DiagramError::InvalidSequence {
                    index,
                    reason: "entries must be positive".into(),
                });
            }
            if i == 0 && a != 1 {
                return Err(DiagramError::InvalidSequence {
                    index,
                    reason: format!("a_1 = {a}, expected 1"),
                });
            }
            if i > 0 && a > entries[i - 1] + 1 {
                return Err(DiagramError::InvalidSequence {
                    index,
                    reason: format!("a_{index} = {a} > a_{} + 1 = {}", i, entries[i - 1] + 1),
                });
            }
        }
        Ok(RestrictedSequence { entries })
    }

    /// Validates entries given in the conventional order `(a_n, …, a_1)`.
    pub fn from_tuple(tuple: &[u32]) -> Result<Self, DiagramError> {
        Self::new(tuple.iter().rev().copied().collect())
    }

    /// The empty diagram φ.
    pub fn empty() -> Self {
        RestrictedSequence::default()
    }

    /// Entries `a_1` first.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entries in the conventional order `(a_n, …, a_1)`.
    pub fn to_tuple(&self) -> Vec<u32> {
        self.entries.iter().rev().copied().collect()
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a_n`, the index of the last insertion.
    pub fn leading(&self) -> Option<u32> {
        self.entries.last().copied()
    }

    /// `(a_{n-1}, …, a_1)`.
    pub fn tail(&self) -> RestrictedSequence {
        let mut entries = self.entries.clone();
        entries.pop();
        RestrictedSequence { entries }
    }

    /// Replaces `a_n`. Returns `None` if the result is not restricted.
    pub fn with_leading(&self, a: u32) -> Option<RestrictedSequence> {
        let mut entries = self.entries.clone();
        *entries.last_mut()? = a;
        RestrictedSequence::new(entries).ok()
    }

    /// `(a, a_n, …, a_1)` if restricted.
    pub fn push(&self, a: u32) -> Option<RestrictedSequence> {
        let mut entries = self.entries.clone();
        entries.push(a);
        RestrictedSequence::new(entries).ok()
    }

    /// Parenthesised label, `φ` for the empty diagram.
    pub fn label(&self) -> String {
        if self.is_empty() {
            "φ".to_string()
        } else {
            format!("({self})")
        }
    }

    pub fn to_matching(&self) -> Matching {
        seq_to_matching(self)
    }
}

/// Comma-separated conventional order, e.g. `3,2,2,1`; φ renders empty.
impl fmt::Display for RestrictedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for RestrictedSequence {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let s = s.trim();
        if s.is_empty() || s == "φ" {
            return Ok(Self::empty());
        }
        let tuple = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| DiagramError::MalformedToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_tuple(&tuple)
    }
}

impl Serialize for RestrictedSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_tuple().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RestrictedSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let tuple = Vec::<u32>::deserialize(d)?;
        Self::from_tuple(&tuple).map_err(serde::de::Error::custom)
    }
}

/// A non-crossing perfect matching on points `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    // 0-indexed: partner[i] is the point joined to i
    partner: Vec<usize>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { partner: Vec::new() }
    }

    /// Builds from 1-indexed arcs, checking every invariant.
    pub fn from_arcs(arcs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let points = 2 * arcs.len();
        let mut partner = vec![usize::MAX; points];
        for &(a, b) in arcs {
            if a == b || a == 0 || b == 0 || a > points || b > points {
                return Err(DiagramError::InvalidMatching(format!("bad arc ({a},{b})")));
            }
            for p in [a, b] {
                if partner[p - 1] != usize::MAX {
                    return Err(DiagramError::InvalidMatching(format!("point {p} used twice")));
                }
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        Self::from_partners(partner)
    }

    /// Builds from a 1-indexed partner table (`table[i-1]` is the partner of `i`).
    pub fn from_partner_table(table: &[usize]) -> Result<Self, DiagramError> {
        if table.iter().any(|&p| p == 0 || p > table.len()) {
            return Err(DiagramError::InvalidMatching("partner out of range".into()));
        }
        Self::from_partners(table.iter().map(|p| p - 1).collect())
    }

    fn from_partners(partner: Vec<usize>) -> Result<Self, DiagramError> {
        let m = Matching { partner };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), DiagramError> {
        let len = self.partner.len();
        if !len.is_multiple_of(2) {
            return Err(DiagramError::InvalidMatching("odd number of points".into()));
        }
        for (i, &p) in self.partner.iter().enumerate() {
            if p >= len || p == i || self.partner[p] != i {
                return Err(DiagramError::InvalidMatching(format!(
                    "point {} is not in a fixed-point-free involution",
                    i + 1
                )));
            }
        }
        // non-crossing iff arcs nest like parentheses
        let mut stack = Vec::new();
        for (i, &p) in self.partner.iter().enumerate() {
            if p > i {
                stack.push(i);
            } else if stack.pop() != Some(p) {
                return Err(DiagramError::InvalidMatching(format!(
                    "arc ({},{}) crosses another arc",
                    p + 1,
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of boundary points, `2n`.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// Partner of the 1-indexed point `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] + 1
    }

    /// 1-indexed arcs `(left, right)` sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p > i)
            .map(|(i, &p)| (i + 1, p + 1))
            .collect()
    }

    pub(crate) fn partners0(&self) -> &[usize] {
        &self.partner
    }

    /// `l_k`: inserts a new innermost arc on positions `(k, k+1)`.
    pub fn insert_arc(&self, k: usize) -> Result<Matching, DiagramError> {
        insert_arc(self, k)
    }

    /// `τ_k`: see [`contract`].
    pub fn contract(&self, k: usize) -> Result<(Matching, u32), DiagramError> {
        contract(self, k)
    }

    pub fn to_sequence(&self) -> RestrictedSequence {
        matching_to_seq(self)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.arcs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}}")
    }
}

/// `l_k` on a matching with `2n` points, for `1 <= k <= 2n+1`.
///
/// Old points `p < k` keep their label, points `p >= k` move to `p + 2`, and
/// the new arc joins `k` and `k + 1`.
pub fn insert_arc(m: &Matching, k: usize) -> Result<Matching, DiagramError> {
    let max = m.points() + 1;
    if k == 0 || k > max {
        return Err(DiagramError::InsertOutOfRange { k, max });
    }
    let k0 = k - 1;
    let shift = |p: usize| if p < k0 { p } else { p + 2 };
    let mut partner = vec![0; m.points() + 2];
    for (i, &p) in m.partner.iter().enumerate() {
        partner[shift(i)] = shift(p);
    }
    partner[k0] = k0 + 1;
    partner[k0 + 1] = k0;
    Ok(Matching { partner })
}

/// `τ_k` on a matching with `2n` points, for `1 <= k <= 2n-1`.
///
/// Joins `k` and `k+1` below the axis and deletes them. When they were
/// already an arc the closed loop is discarded and the returned count is 1,
/// otherwise it is 0. Remaining points are renumbered in order.
pub fn contract(m: &Matching, k: usize) -> Result<(Matching, u32), DiagramError> {
    let max = m.points().saturating_sub(1);
    if k == 0 || k > max {
        return Err(DiagramError::ContractOutOfRange { k, max });
    }
    let (x, y) = (k - 1, k);
    let mut partner = m.partner.clone();
    let loops = if partner[x] == y {
        1
    } else {
        let (a, b) = (partner[x], partner[y]);
        partner[a] = b;
        partner[b] = a;
        0
    };
    let squeeze = |p: usize| if p < x { p } else { p - 2 };
    let compact = partner
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x && i != y)
        .map(|(_, &p)| squeeze(p))
        .collect();
    Ok((Matching { partner: compact }, loops))
}

/// Folds `l_{a_1}, l_{a_2}, …, l_{a_n}` over the empty diagram.
pub fn seq_to_matching(s: &RestrictedSequence) -> Matching {
    s.entries.iter().fold(Matching::empty(), |m, &a| {
        insert_arc(&m, a as usize).expect("restricted sequences insert in range")
    })
}

/// Repeatedly contracts the leftmost inner arc, recording its position.
pub fn matching_to_seq(m: &Matching) -> RestrictedSequence {
    let mut entries = Vec::with_capacity(m.size());
    let mut cur = m.clone();
    while cur.size() > 0 {
        let k = (0..cur.points() - 1)
            .find(|&i| cur.partner[i] == i + 1)
            .expect("every non-empty diagram has an inner arc");
        entries.push(k as u32 + 1);
        cur = contract(&cur, k + 1).expect("in range").0;
    }
    entries.reverse();
    RestrictedSequence { entries }
}

/// All restricted sequences of length `n` in basis order. There are C_n.
pub fn enumerate(n: usize) -> Vec<RestrictedSequence> {
    fn extend(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<RestrictedSequence>) {
        if prefix.len() == n {
            out.push(RestrictedSequence {
                entries: prefix.clone(),
            });
            return;
        }
        let max = prefix.last().map_or(1, |a| a + 1);
        for a in 1..=max {
            prefix.push(a);
            extend(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out
}

/// The coordinate-wise order: `a ⪯ b` iff `a_k <= b_k` for every `k`.
pub fn leq(a: &RestrictedSequence, b: &RestrictedSequence) -> Result<bool, DiagramError> {
    if a.len() != b.len() {
        return Err(DiagramError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(leq_unchecked(a, b))
}

pub(crate) fn leq_unchecked(a: &RestrictedSequence, b: &RestrictedSequence) -> bool {
    a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y)
}

/// A nested pair of arcs where `inner` sits directly under `outer`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadMoveSite {
    pub outer: (usize, usize),
    pub inner: (usize, usize),
}

/// Every parent/child arc pair of `m`, sorted by outer then inner arc.
pub fn quad_sites(m: &Matching) -> Vec<QuadMoveSite> {
    let arcs = m.arcs();
    let mut sites: Vec<QuadMoveSite> = arcs
        .iter()
        .filter_map(|&inner| {
            // the closest enclosing arc has the largest left endpoint
            arcs.iter()
                .filter(|&&(i, l)| i < inner.0 && inner.1 < l)
                .max_by_key(|&&(i, _)| i)
                .map(|&outer| QuadMoveSite { outer, inner })
        })
        .collect();
    sites.sort();
    sites
}

/// Replaces `(i,l), (k,j)` by `(i,k), (j,l)`, lowering the depth order.
pub fn apply_quad(m: &Matching, site: QuadMoveSite) -> Result<Matching, DiagramError> {
    if !quad_sites(m).contains(&site) {
        return Err(DiagramError::InvalidQuadSite(site));
    }
    let ((i, l), (k, j)) = (site.outer, site.inner);
    let mut partner = m.partner.clone();
    let link = |p: &mut Vec<usize>, a: usize, b: usize| {
        p[a - 1] = b - 1;
        p[b - 1] = a - 1;
    };
    link(&mut partner, i, k);
    link(&mut partner, j, l);
    Ok(Matching { partner })
}

/// Breadth-first search over quad moves from `b` towards `a`.
///
/// Returns the diagrams visited after each move (ending at `a`), or `None`
/// if `a` cannot be reached. An empty path means `a == b`.
pub fn quad_reachable(
    a: &RestrictedSequence,
    b: &RestrictedSequence,
) -> Result<Option<Vec<RestrictedSequence>>, DiagramError> {
    if a.len() != b.len() {
        return Err(DiagramError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut came_from: HashMap<RestrictedSequence, RestrictedSequence> = HashMap::new();
    let mut queue = VecDeque::from([b.clone()]);
    let mut found = a == b;
    while let Some(cur) = queue.pop_front() {
        if found {
            break;
        }
        let m = cur.to_matching();
        for site in quad_sites(&m) {
            let next = apply_quad(&m, site)?.to_sequence();
            if next == *b || came_from.contains_key(&next) {
                continue;
            }
            came_from.insert(next.clone(), cur.clone());
            if next == *a {
                found = true;
                break;
            }
            queue.push_back(next);
        }
    }
    if !found {
        return Ok(None);
    }
    let mut path = Vec::new();
    let mut cur = a.clone();
    while cur != *b {
        let prev = came_from[&cur].clone();
        path.push(cur);
        cur = prev;
    }
    path.reverse();
    Ok(Some(path))
}

/// Covering pairs `(a, b)` of `⪯` over `enumerate(n)`, by exhaustive comparison.
pub fn hasse(n: usize) -> Vec<(RestrictedSequence, RestrictedSequence)> {
    let basis = enumerate(n);
    let len = basis.len();
    let below: Vec<Vec<bool>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| a != b && leq_unchecked(a, b))
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..len {
        for j in 0..len {
            if below[i][j] && !(0..len).any(|c| below[i][c] && below[c][j]) {
                edges.push((basis[i].clone(), basis[j].clone()));
            }
        }
    }
    edges
}

/// DOT digraph of the cover relation, edges pointing from smaller to larger.
pub fn hasse_dot(n: usize) -> String {
    let mut out = format!("digraph hasse_{n} {{\n");
    for s in enumerate(n) {
        out.push_str(&format!("  \"{}\";\n", s.label()));
    }
    for (a, b) in hasse(n) {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", a.label(), b.label()));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(tuple: &[u32]) -> RestrictedSequence {
        RestrictedSequence::from_tuple(tuple).unwrap()
    }

    fn arcs(list: &[(usize, usize)]) -> Matching {
        Matching::from_arcs(list).unwrap()
    }

    #[test]
    fn validation() {
        assert!(RestrictedSequence::from_tuple(&[3, 2, 2, 1, 2, 2, 1]).is_ok());
        assert_eq!(
            RestrictedSequence::from_tuple(&[3, 1, 1]).unwrap_err(),
            DiagramError::InvalidSequence {
                index: 3,
                reason: "a_3 = 3 > a_2 + 1 = 2".into()
            }
        );
        assert!(RestrictedSequence::from_tuple(&[]).unwrap().is_empty());
        assert!(matches!(
            RestrictedSequence::from_tuple(&[1, 2]),
            Err(DiagramError::InvalidSequence { index: 1, .. })
        ));
        assert!(matches!(
            RestrictedSequence::from_tuple(&[0, 1]),
            Err(DiagramError::InvalidSequence { index: 2, .. })
        ));
    }

    #[test]
    fn parse_and_render() {
        let s: RestrictedSequence = "3,2,2,1,2,2,1".parse().unwrap();
        assert_eq!(s.to_string(), "3,2,2,1,2,2,1");
        assert_eq!(s.entries(), &[1, 2, 2, 1, 2, 2, 3]);
        assert_eq!("".parse::<RestrictedSequence>().unwrap(), RestrictedSequence::empty());
        assert_eq!(
            "2,x,1".parse::<RestrictedSequence>(),
            Err(DiagramError::MalformedToken("x".into()))
        );
        assert_eq!(seq(&[2, 1]).label(), "(2,1)");
        assert_eq!(RestrictedSequence::empty().label(), "φ");
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::from_arcs(&[(1, 3), (2, 4)]).is_err());
        assert!(Matching::from_arcs(&[(1, 2), (2, 3)]).is_err());
        assert!(Matching::from_arcs(&[(1, 1)]).is_err());
        assert!(Matching::from_partner_table(&[2, 1, 4, 3]).is_ok());
        assert!(Matching::from_partner_table(&[3, 4, 1, 2]).is_err());
    }

    #[test]
    fn seq_to_matching_examples() {
        assert_eq!(seq(&[1, 1]).to_matching(), arcs(&[(1, 2), (3, 4)]));
        assert_eq!(seq(&[2, 1]).to_matching(), arcs(&[(1, 4), (2, 3)]));
        assert_eq!(seq(&[2, 2, 1]).to_matching(), arcs(&[(1, 6), (2, 3), (4, 5)]));
    }

    #[test]
    fn matching_to_seq_examples() {
        assert_eq!(arcs(&[(1, 6), (2, 3), (4, 5)]).to_sequence(), seq(&[2, 2, 1]));
        assert_eq!(arcs(&[(1, 2)]).to_sequence(), seq(&[1]));
        let fig = seq(&[3, 2, 2, 1, 2, 2, 1]);
        assert_eq!(fig.to_matching().to_sequence(), fig);
    }

    #[test]
    fn enumerate_examples() {
        let three: Vec<String> = enumerate(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(three, ["1,1,1", "2,1,1", "1,2,1", "2,2,1", "3,2,1"]);
        assert_eq!(enumerate(0), vec![RestrictedSequence::empty()]);
        let counts: Vec<usize> = (1..=10).map(|n| enumerate(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }

    #[test]
    fn enumerate_is_sorted_and_distinct() {
        for n in 0..=7 {
            let all = enumerate(n);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn insert_examples() {
        assert_eq!(insert_arc(&Matching::empty(), 1).unwrap(), arcs(&[(1, 2)]));
        let m = insert_arc(&arcs(&[(1, 2), (3, 4)]), 2).unwrap();
        assert_eq!(m, arcs(&[(1, 4), (2, 3), (5, 6)]));
        assert_eq!(m.to_sequence(), seq(&[2, 1, 1]));
        let m = insert_arc(&arcs(&[(1, 4), (2, 3)]), 3).unwrap();
        assert_eq!(m, arcs(&[(1, 6), (2, 5), (3, 4)]));
        assert_eq!(m.to_sequence(), seq(&[3, 2, 1]));
        assert_eq!(
            insert_arc(&arcs(&[(1, 2)]), 4),
            Err(DiagramError::InsertOutOfRange { k: 4, max: 3 })
        );
        assert!(insert_arc(&arcs(&[(1, 2)]), 0).is_err());
        assert!(insert_arc(&arcs(&[(1, 2)]), 3).is_ok());
    }

    #[test]
    fn contract_examples() {
        let m = arcs(&[(1, 4), (2, 3), (5, 6)]);
        let (t, c) = contract(&m, 1).unwrap();
        assert_eq!((t.clone(), c), (arcs(&[(1, 2), (3, 4)]), 0));
        assert_eq!(t.to_sequence(), seq(&[1, 1]));
        assert_eq!(contract(&m, 2).unwrap(), (arcs(&[(1, 2), (3, 4)]), 1));
        assert_eq!(contract(&arcs(&[(1, 2)]), 1).unwrap(), (Matching::empty(), 1));
        assert_eq!(
            contract(&m, 6),
            Err(DiagramError::ContractOutOfRange { k: 6, max: 5 })
        );
        assert!(contract(&Matching::empty(), 1).is_err());
    }

    #[test]
    fn tau_inverts_l_exhaustively() {
        for n in 0..=5 {
            for s in enumerate(n) {
                let m = s.to_matching();
                for k in 1..=m.points() + 1 {
                    let lifted = insert_arc(&m, k).unwrap();
                    for j in [k.wrapping_sub(1), k, k + 1] {
                        if j == 0 || j > lifted.points() - 1 {
                            continue;
                        }
                        assert_eq!(contract(&lifted, j).unwrap().0, m, "{s} k={k} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&seq(&[1, 2, 1]), &seq(&[2, 2, 1])).unwrap());
        assert!(!leq(&seq(&[2, 1, 1]), &seq(&[1, 2, 1])).unwrap());
        assert!(!leq(&seq(&[1, 2, 1]), &seq(&[2, 1, 1])).unwrap());
        for s in enumerate(4) {
            assert!(leq(&s, &s).unwrap());
        }
        assert_eq!(
            leq(&seq(&[1]), &seq(&[1, 1])),
            Err(DiagramError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn quad_site_examples() {
        let site = |o, i| QuadMoveSite { outer: o, inner: i };
        assert_eq!(
            quad_sites(&seq(&[3, 2, 1]).to_matching()),
            vec![site((1, 6), (2, 5)), site((2, 5), (3, 4))]
        );
        assert!(quad_sites(&seq(&[1, 1, 1]).to_matching()).is_empty());
        assert_eq!(
            quad_sites(&seq(&[2, 1]).to_matching()),
            vec![site((1, 4), (2, 3))]
        );
    }

    #[test]
    fn apply_quad_examples() {
        let site = |o, i| QuadMoveSite { outer: o, inner: i };
        let m = seq(&[3, 2, 1]).to_matching();
        let a = apply_quad(&m, site((1, 6), (2, 5))).unwrap();
        assert_eq!(a, arcs(&[(1, 2), (3, 4), (5, 6)]));
        assert_eq!(a.to_sequence(), seq(&[1, 1, 1]));
        let b = apply_quad(&m, site((2, 5), (3, 4))).unwrap();
        assert_eq!(b, arcs(&[(1, 6), (2, 3), (4, 5)]));
        assert_eq!(b.to_sequence(), seq(&[2, 2, 1]));
        let c = apply_quad(&b, site((1, 6), (4, 5))).unwrap();
        assert_eq!(c, arcs(&[(1, 4), (2, 3), (5, 6)]));
        assert_eq!(c.to_sequence(), seq(&[2, 1, 1]));
        assert!(matches!(
            apply_quad(&m, site((1, 6), (3, 4))),
            Err(DiagramError::InvalidQuadSite(_))
        ));
    }

    #[test]
    fn quad_reachable_examples() {
        let path = quad_reachable(&seq(&[2, 1, 1]), &seq(&[3, 2, 1])).unwrap().unwrap();
        assert_eq!(path, vec![seq(&[2, 2, 1]), seq(&[2, 1, 1])]);
        assert_eq!(quad_reachable(&seq(&[2, 1, 1]), &seq(&[1, 2, 1])).unwrap(), None);
        assert_eq!(quad_reachable(&seq(&[2, 1]), &seq(&[2, 1])).unwrap(), Some(vec![]));
        assert!(quad_reachable(&seq(&[1]), &seq(&[2, 1])).is_err());
    }

    #[test]
    fn hasse_examples() {
        let fmt = |edges: Vec<(RestrictedSequence, RestrictedSequence)>| -> Vec<String> {
            let mut v: Vec<String> = edges
                .iter()
                .map(|(a, b)| format!("{}->{}", a.label(), b.label()))
                .collect();
            v.sort();
            v
        };
        let mut expected = vec![
            "(2,2,1)->(3,2,1)",
            "(2,1,1)->(2,2,1)",
            "(1,2,1)->(2,2,1)",
            "(1,1,1)->(2,1,1)",
            "(1,1,1)->(1,2,1)",
        ];
        expected.sort();
        assert_eq!(fmt(hasse(3)), expected);
        assert!(hasse(1).is_empty());
        assert_eq!(fmt(hasse(2)), ["(1,1)->(2,1)"]);
    }

    #[test]
    fn hasse_dot_shape() {
        let dot = hasse_dot(2);
        assert_eq!(
            dot,
            "digraph hasse_2 {\n  \"(1,1)\";\n  \"(2,1)\";\n  \"(1,1)\" -> \"(2,1)\";\n}\n"
        );
    }

    #[test]
    fn json_uses_tuple_order() {
        let s = seq(&[2, 2, 1]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,2,1]");
        let back: RestrictedSequence = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<RestrictedSequence>("[3,1,1]").is_err());
    }
}
