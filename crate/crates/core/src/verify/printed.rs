//! Printed data, in the text syntax of the expression language.

use crate::algebra::Elem;
use crate::tensor::Tensor;
use crate::text::{parse_chain, parse_elem};

pub(crate) fn elem(s: &str) -> Elem {
    parse_elem(s).unwrap_or_else(|e| panic!("printed element {s:?}: {e}"))
}

pub(crate) fn tensor(s: &str) -> Tensor {
    parse_chain(s, None).unwrap_or_else(|e| panic!("printed tensor {s:?}: {e}")).into_body()
}

/// `Ψ(x ⊗ y)` on generators.
pub(crate) const BRAIDING: [(&str, &str); 16] = [
    ("a@a", "a@a"),
    ("a@b", "q^-1*b@a + (1 - q^-2)*a@b"),
    ("a@c", "q*c@a"),
    ("a@d", "d@a + (q - q^-1)*c@b"),
    ("b@a", "q^-1*a@b"),
    ("b@b", "b@b"),
    ("b@c", "c@b"),
    ("b@d", "q*d@b"),
    ("c@a", "q*a@c + (1 - q^2)*c@a"),
    ("c@b", "b@c - (q - q^-1)^2*c@b + (q - q^-1)*a@d + (q^-1 - q)*d@a"),
    ("c@c", "c@c"),
    ("c@d", "q^-1*d@c + (1 - q^-2)*c@d"),
    ("d@a", "a@d - (q - q^-1)*c@b"),
    ("d@b", "q*b@d + (1 - q^2)*d@b"),
    ("d@c", "q^-1*c@d"),
    ("d@d", "d@d"),
];

pub(crate) const WEDGE3_BAD: &str = "b@a@d - q^-1*a@b@d - b@d@a - (q - q^-1)*b@c@b + a@d@b + q*d@b@a - d@a@b";

/// `ω₃(0,0) ⌢ (∂₁ ⌣ ∂₂ ⌣ ∂₃)`, by the labels of the basic derivations.
pub(crate) const CAP_LIST: [([&str; 3], &str); 20] = [
    (["H+", "E+", "F+"], "(q^-1 - q)*b*c + 1"),
    (["H+", "E+", "H-"], "2*(q^4 - 1)*d*b^2*c - 2*q*d*b"),
    (["H+", "E+", "E-"], "(q - q^-3)*b^3*c - q^-2*b^2"),
    (["H+", "E+", "F-"], "(q - q^5)*d^2*b*c + d^2"),
    (["H+", "F+", "H-"], "2*(q - q^-3)*a*b*c^2 - 2*a*c"),
    (["H+", "F+", "E-"], "(q^-1 - q^-5)*a^2*b*c - a^2"),
    (["H+", "F+", "F-"], "(q^-1 - q^3)*b*c^3 + (2 - q^2)*c^2"),
    (["H+", "H-", "E-"], "2*(q^-4 - q^-2)*a*b^2*c + 2*q^-1*a*b"),
    (["H+", "H-", "F-"], "2*(q - q^3)*d*b*c^2 + 2*d*c"),
    (["H+", "E-", "F-"], "2*(1 - q^2)*b^2*c^2 + 2*q^-1*b*c + 1"),
    (["E+", "F+", "H-"], "2*(q^-4 - q^2)*b^2*c^2 + (2*q^-3 - q + q^-1)*b*c + 1"),
    (["E+", "F+", "E-"], "(q^-7 - q^-1)*a*b^2*c + q^-4*a*b"),
    (["E+", "F+", "F-"], "(q^4 - q^-2)*d*b*c^2 - q^-1*d*c"),
    (["E+", "H-", "E-"], "(q - q^-3)*b^3*c - q^-2*b^2"),
    (["E+", "H-", "F-"], "(q^5 - q)*d^2*b*c - d^2"),
    (["E+", "E-", "F-"], "(q^5 - q)*d*b^2*c - d*b"),
    (["F+", "H-", "E-"], "(q^-5 - q^-1)*a^2*b*c + a^2"),
    (["F+", "H-", "F-"], "(q^-1 - q^3)*b*c^3 + (2 - q^2)*c^2"),
    (["F+", "E-", "F-"], "(q^-2 - q^2)*a*b*c^2 + q^-1*a*c"),
    (["H-", "E-", "F-"], "1"),
];

/// Boundaries in the normalised complex twisted by `σ_{q^-2,1}`.
pub(crate) const B_IDENTITIES: [(&str, &str); 4] = [
    ("b*c@a@d", "q^-2*a*b*c@d - q*b*c@b*c + q^2*d*b*c@a"),
    ("b*c@b@c", "b^2*c@c - b*c@b*c + b*c^2@b"),
    ("c*a@wedge(d, b)", "(q^3 - q)*b*c^2@b"),
    ("b*a@wedge(d, c)", "(q - q^-1)*b^2*c@c"),
];

/// `[ω₂(0,0)] ⌢ [∂⁺_H]`, up to the factor 2.
pub(crate) const OMEGA2_CAP_H: &str = "-q^-2*a*b*c@d - q^2*d*b*c@a + q*b*c^2@b + q^-1*b^2*c@c + c@b + b@c";
