use std::fmt;
use std::str::FromStr;

use super::Multigraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    Edgeless,
    Wheel,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Star,
        FamilyKind::Complete,
        FamilyKind::Edgeless,
        FamilyKind::Wheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::Edgeless => "edgeless",
            FamilyKind::Wheel => "wheel",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown graph family {s:?}")))
    }
}

/// Standard members of the named families.
///
/// `path(n)`, `complete(n)` and `edgeless(n)` have n vertices. `cycle(1)` is a
/// vertex with a loop and `cycle(2)` two vertices joined by two parallel
/// edges. `star(n)` and `wheel(n)` have n + 1 vertices with the center at 0.
pub fn family(kind: FamilyKind, n: usize) -> Result<Multigraph> {
    let invalid = || Error::InvalidSize {
        what: kind.name(),
        size: n,
    };
    let edges: Vec<(usize, usize)> = match kind {
        FamilyKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        FamilyKind::Cycle => {
            if n == 0 {
                return Err(invalid());
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        FamilyKind::Star => (1..=n).map(|i| (0, i)).collect(),
        FamilyKind::Complete => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        FamilyKind::Edgeless => Vec::new(),
        FamilyKind::Wheel => {
            if n < 3 {
                return Err(invalid());
            }
            (1..=n)
                .map(|i| (0, i))
                .chain((1..=n).map(|i| (i, i % n + 1)))
                .collect()
        }
    };
    let size = match kind {
        FamilyKind::Star | FamilyKind::Wheel => n + 1,
        _ => n,
    };
    Multigraph::new(size, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        assert_eq!(family(FamilyKind::Path, 1).unwrap(), Multigraph::empty(1));
        let c2 = family(FamilyKind::Cycle, 2).unwrap();
        assert_eq!((c2.n(), c2.m()), (2, 2));
        assert!(c2.has_parallel_edges());
        let c1 = family(FamilyKind::Cycle, 1).unwrap();
        assert!(c1.has_loops() && c1.m() == 1);
        let s3 = family(FamilyKind::Star, 3).unwrap();
        assert_eq!((s3.n(), s3.m(), s3.degree(0)), (4, 3, 3));
        let w4 = family(FamilyKind::Wheel, 4).unwrap();
        assert_eq!((w4.n(), w4.m()), (5, 8));
        assert!(w4.is_simple());
        assert!(family(FamilyKind::Cycle, 0).is_err());
        assert!(family(FamilyKind::Wheel, 2).is_err());
        assert_eq!("star".parse::<FamilyKind>().unwrap(), FamilyKind::Star);
        assert!("tree".parse::<FamilyKind>().is_err());
    }
}
