//! Closed F-index formulas for the eight F-join composites, evaluated from
//! the factor invariants without building the composite.

mod families;

pub use families::{
    AuditReport, CaseAudit, CaseId, FamilyExampleId, FamilyPair, GridPoint, Mismatch, PathOrCycle,
    Roman, Verdict, audit_examples, family_value, AuditGrid,
};

use crate::arith::{Checked, c};
use crate::error::Result;
use crate::indices::GraphInvariants;
use crate::join::{JoinMode, OperationSpec};
use crate::derived::DerivedKind;

/// A theorem is identified by the operation it evaluates.
pub type TheoremId = OperationSpec;

/// F(G1 ∘ G2) for the composite `id` names, from the invariants of G1 and G2.
pub fn theorem_value(id: TheoremId, inv1: &GraphInvariants, inv2: &GraphInvariants) -> Result<u128> {
    let n1 = c(inv1.n as u128);
    let m1 = c(inv1.m as u128);
    let n2 = c(inv2.n as u128);
    let m2 = c(inv2.m as u128);
    let (f1, f2) = (c(inv1.f), c(inv2.f));
    let (zagreb1, zagreb2) = (c(inv1.m1), c(inv2.m1));
    let (m4_1, hm1, rezm1) = (c(inv1.m4), c(inv1.hm), c(inv1.rezm));

    use DerivedKind::{Q, R, S, T};
    use JoinMode::{Edge, Vertex};

    // Terms shared by every vertex-mode formula: the G2 side gains n1 and the
    // G1 originals gain n2, cubed and summed.
    let vertex_common = || {
        f2 + c(3) * n1 * zagreb2 + c(6) * m2 * n1.pow(2) + n1 * n2 * (n1.pow(2) + n2.pow(2))
    };

    let value: Checked<u128> = match (id.kind, id.mode) {
        (S, Vertex) => {
            f1 + c(3) * n2 * zagreb1 + c(6) * m1 * n2.pow(2) + c(8) * m1 + vertex_common()
        }
        (S, Edge) => {
            f1 + f2
                + c(3) * m1 * zagreb2
                + c(6) * m1.pow(2) * m2
                + m1 * (n2 + c(2)).pow(3)
                + n2 * m1.pow(3)
        }
        (R, Vertex) => {
            c(8) * f1 + c(12) * n2 * zagreb1 + c(12) * m1 * n2.pow(2) + c(8) * m1 + vertex_common()
        }
        (R, Edge) => {
            c(8) * f1
                + f2
                + c(3) * m1 * zagreb2
                + c(6) * m1.pow(2) * m2
                + m1 * (n2 + c(2)).pow(3)
                + n2 * m1.pow(3)
        }
        (Q, Vertex) => {
            f1 + c(3) * n2 * zagreb1
                + m4_1
                + c(3) * rezm1
                + c(6) * m1 * n2.pow(2)
                + vertex_common()
        }
        (Q, Edge) => {
            f1 + f2
                + c(3) * n2.pow(2) * zagreb1
                + c(3) * m1 * zagreb2
                + m4_1
                + c(3) * n2 * hm1
                + c(3) * rezm1
                + m1.pow(2) * (c(6) * m2 + m1 * n2)
                + m1 * n2.pow(3)
        }
        (T, Vertex) => {
            c(8) * f1
                + c(12) * n2 * zagreb1
                + m4_1
                + c(3) * rezm1
                + c(12) * m1 * n2.pow(2)
                + vertex_common()
        }
        (T, Edge) => {
            c(8) * f1
                + f2
                + c(3) * n2.pow(2) * zagreb1
                + c(3) * m1 * zagreb2
                + m4_1
                + c(3) * n2 * hm1
                + c(3) * rezm1
                + m1.pow(2) * (c(6) * m2 + m1 * n2)
                + m1 * n2.pow(3)
        }
    };
    value.get(&format!("closed-form F-index ({id})"))
}
