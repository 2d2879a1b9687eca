//! Articulation and bridge identities. Both are evaluated over Laurent
//! polynomials; the negative powers of x and z must cancel.

use crate::error::{Error, Result};
use crate::poly::tri::{c, mono};
use crate::poly::TriPoly;

fn settle(p: TriPoly, what: &str) -> Result<TriPoly> {
    p.into_polynomial()
        .map_err(|_| Error::CancellationFailure(format!("{what}: negative exponents survived")))
}

/// `C(G)` for `G` the union of `G¹` and `G²` sharing only the vertex `v`,
/// from `C(G¹)`, `C(G¹₋ᵥ)`, `C(G²)` and `C(G²₋ᵥ)`:
///
/// `C1·C2/(xz) + (1 − 1/z)(C1·C2v + C1v·C2) + (x/z − x)·C1v·C2v`.
///
/// Loops at `v` may sit in either part, but not both.
pub fn articulation_join(c1: &TriPoly, c1v: &TriPoly, c2: &TriPoly, c2v: &TriPoly) -> Result<TriPoly> {
    let inv_xz = mono(1, -1, 0, -1);
    let one_minus_inv_z = c(1) - mono(1, 0, 0, -1);
    let x_over_z_minus_x = mono(1, 1, 0, -1) - mono(1, 1, 0, 0);
    let p = &(c1 * c2) * &inv_xz
        + &one_minus_inv_z * &(c1 * c2v + c1v * c2)
        + &x_over_z_minus_x * &(c1v * c2v);
    settle(p, "articulation join")
}

/// `C(G)` for a bridge `e = {v₁, v₂}` from `C(G₋ₑ)`, `C(G₋ᵥ₁)`, `C(G₋ᵥ₂)` and `C(G†ₑ)`:
///
/// `(1 + y/(xz))·C₋ₑ + (y − y/z)(C₋ᵥ₁ + C₋ᵥ₂) + (xy/z + xyz − 2xy)·C†ₑ`.
pub fn bridge_reduction(c_minus: &TriPoly, c_v1: &TriPoly, c_v2: &TriPoly, c_dagger: &TriPoly) -> Result<TriPoly> {
    let a = c(1) + mono(1, -1, 1, -1);
    let b = mono(1, 0, 1, 0) - mono(1, 0, 1, -1);
    let d = mono(1, 1, 1, -1) + mono(1, 1, 1, 1) - mono(2, 1, 1, 0);
    let p = &a * c_minus + &b * &(c_v1 + c_v2) + &d * c_dagger;
    settle(p, "bridge reduction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::ccp_bruteforce;
    use crate::graph::{family, FamilyKind, Multigraph};
    use crate::poly::tri::*;

    fn bf(g: &Multigraph) -> TriPoly {
        ccp_bruteforce(g, 20).unwrap()
    }

    #[test]
    fn articulation_examples() {
        let k2 = family(FamilyKind::Path, 2).unwrap();
        let cp3 = articulation_join(&bf(&k2), &x(), &bf(&k2), &x()).unwrap();
        assert_eq!(cp3, bf(&family(FamilyKind::Path, 3).unwrap()));
        // K1 as the second part: C(K1) = x, C(∅) = 1
        assert_eq!(articulation_join(&bf(&k2), &x(), &x(), &c(1)).unwrap(), bf(&k2));
        let p3 = family(FamilyKind::Path, 3).unwrap();
        let p2 = family(FamilyKind::Path, 2).unwrap();
        let p3_minus_end = p3.delete_vertex(0).unwrap();
        assert_eq!(p3_minus_end, p2);
        let cp5 = articulation_join(&bf(&p3), &bf(&p2), &bf(&p3), &bf(&p2)).unwrap();
        assert_eq!(cp5, bf(&family(FamilyKind::Path, 5).unwrap()));
        let err = articulation_join(&x(), &x(), &x(), &x());
        assert!(matches!(err, Err(Error::CancellationFailure(_))));
    }

    #[test]
    fn bridge_examples() {
        let k2 = family(FamilyKind::Path, 2).unwrap();
        assert_eq!(bridge_reduction(&mono(1, 2, 0, 0), &x(), &x(), &c(1)).unwrap(), bf(&k2));
        for (n, e) in [(3usize, 0usize), (4, 1)] {
            let p = family(FamilyKind::Path, n).unwrap();
            let edge = p.edges()[e];
            let got = bridge_reduction(
                &bf(&p.delete_edge(e).unwrap()),
                &bf(&p.delete_vertex(edge.a).unwrap()),
                &bf(&p.delete_vertex(edge.b).unwrap()),
                &bf(&p.extract_edge(e).unwrap()),
            )
            .unwrap();
            assert_eq!(got, bf(&p));
        }
    }
}
