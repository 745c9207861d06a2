//! Boolean analogical proportion `a : b :: c : d`.
//!
//! Two equivalent definitions are provided: the similarity form
//! `(a∧d ≡ b∧c) ∧ (a∨d ≡ b∨c)` ([`pia`]) and the dissimilarity form
//! `(a∧¬b ≡ c∧¬d) ∧ (¬a∧b ≡ ¬c∧d)` ([`analogy_dissim`]). Both are true on
//! exactly six of the sixteen valuations.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolQuad {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl BoolQuad {
    pub const fn new(a: bool, b: bool, c: bool, d: bool) -> Self {
        BoolQuad { a, b, c, d }
    }

    /// All 16 valuations, lexicographic in `(a, b, c, d)` with `0 < 1`.
    pub fn all() -> impl Iterator<Item = BoolQuad> {
        (0u8..16)
            .map(|bits| BoolQuad::new(bits & 8 != 0, bits & 4 != 0, bits & 2 != 0, bits & 1 != 0))
    }

    pub fn as_array(self) -> [bool; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl fmt::Display for BoolQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.as_array().map(u8::from);
        write!(f, "{a}{b}{c}{d}")
    }
}

pub fn pia(q: BoolQuad) -> bool {
    let BoolQuad { a, b, c, d } = q;
    ((a && d) == (b && c)) && ((a || d) == (b || c))
}

pub fn analogy_dissim(q: BoolQuad) -> bool {
    let BoolQuad { a, b, c, d } = q;
    ((a && !b) == (c && !d)) && ((!a && b) == (!c && d))
}

pub fn ap_truth_table() -> Vec<(BoolQuad, bool)> {
    BoolQuad::all().map(|q| (q, pia(q))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Reflexivity,
    Symmetry,
    CentralPermutation,
    Sameness,
    ExternalPermutation,
    InternalReversal,
    CompleteReversal,
    Transitivity,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::Reflexivity,
        Law::Symmetry,
        Law::CentralPermutation,
        Law::Sameness,
        Law::ExternalPermutation,
        Law::InternalReversal,
        Law::CompleteReversal,
        Law::Transitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Reflexivity => "reflexivity",
            Law::Symmetry => "symmetry",
            Law::CentralPermutation => "central-permutation",
            Law::Sameness => "sameness",
            Law::ExternalPermutation => "external-permutation",
            Law::InternalReversal => "internal-reversal",
            Law::CompleteReversal => "complete-reversal",
            Law::Transitivity => "transitivity",
        }
    }
}

/// Outcome of checking one law exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub cases: usize,
    /// Offending valuations, as the free variables of the law in order
    /// (two for the unary laws on pairs, four for quadruple laws, six for
    /// transitivity).
    pub counterexamples: Vec<Vec<bool>>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostulateReport {
    pub checks: Vec<LawCheck>,
}

impl PostulateReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn get(&self, law: Law) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

fn bits(n: usize, width: usize) -> Vec<bool> {
    (0..width).rev().map(|i| n >> i & 1 == 1).collect()
}

fn check_law(law: Law, holds: impl Fn(&[bool]) -> bool) -> LawCheck {
    let width = match law {
        Law::Reflexivity | Law::Sameness => 2,
        Law::Transitivity => 6,
        _ => 4,
    };
    let cases = 1usize << width;
    let counterexamples = (0..cases)
        .map(|n| bits(n, width))
        .filter(|v| !holds(v))
        .collect();
    LawCheck {
        law,
        cases,
        counterexamples,
    }
}

fn quad(v: &[bool]) -> BoolQuad {
    BoolQuad::new(v[0], v[1], v[2], v[3])
}

/// Implication from `q` to the permuted quadruple, for every valuation.
fn permutation_law(law: Law, permute: fn(BoolQuad) -> BoolQuad) -> LawCheck {
    check_law(law, |v| {
        let q = quad(v);
        !pia(q) || pia(permute(q))
    })
}

/// Checks every postulate and consequence exhaustively: 4 pairs, 16
/// quadruples or 64 sextuples per law.
pub fn verify_boolean_postulates() -> PostulateReport {
    let checks = Law::ALL
        .iter()
        .map(|&law| match law {
            Law::Reflexivity => check_law(law, |v| pia(BoolQuad::new(v[0], v[1], v[0], v[1]))),
            Law::Sameness => check_law(law, |v| pia(BoolQuad::new(v[0], v[0], v[1], v[1]))),
            Law::Symmetry => permutation_law(law, |q| BoolQuad::new(q.c, q.d, q.a, q.b)),
            Law::CentralPermutation => permutation_law(law, |q| BoolQuad::new(q.a, q.c, q.b, q.d)),
            Law::ExternalPermutation => permutation_law(law, |q| BoolQuad::new(q.d, q.b, q.c, q.a)),
            Law::InternalReversal => permutation_law(law, |q| BoolQuad::new(q.b, q.a, q.d, q.c)),
            Law::CompleteReversal => permutation_law(law, |q| BoolQuad::new(q.d, q.c, q.b, q.a)),
            Law::Transitivity => check_law(law, |v| {
                let (a, b, c, d, e, f) = (v[0], v[1], v[2], v[3], v[4], v[5]);
                let premise = pia(BoolQuad::new(a, b, c, d)) && pia(BoolQuad::new(c, d, e, f));
                !premise || pia(BoolQuad::new(a, b, e, f))
            }),
        })
        .collect();
    PostulateReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BoolQuad {
        let v: Vec<bool> = s.bytes().map(|c| c == b'1').collect();
        quad(&v)
    }

    #[test]
    fn pia_examples() {
        assert!(pia(q("1010")));
        assert!(!pia(q("1110")));
        assert!(pia(q("0000")));
    }

    #[test]
    fn dissim_examples() {
        assert!(analogy_dissim(q("0101")));
        assert!(!analogy_dissim(q("0110")));
        assert!(analogy_dissim(q("1100")));
    }

    #[test]
    fn both_forms_agree_everywhere() {
        for quad in BoolQuad::all() {
            assert_eq!(pia(quad), analogy_dissim(quad), "{quad}");
        }
    }

    #[test]
    fn truth_table_shape() {
        let table = ap_truth_table();
        assert_eq!(table.len(), 16);
        let trues: Vec<String> = table
            .iter()
            .filter(|r| r.1)
            .map(|r| r.0.to_string())
            .collect();
        assert_eq!(trues, ["0000", "0011", "0101", "1010", "1100", "1111"]);
        assert_eq!(table.iter().filter(|r| !r.1).count(), 10);
        assert!(table.contains(&(q("0011"), true)));
        // lexicographic order
        assert!(table.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn reflexivity_forces_four_valuations() {
        for s in ["0000", "0101", "1010", "1111"] {
            assert!(pia(q(s)), "{s}");
        }
    }

    #[test]
    fn all_postulates_pass() {
        let report = verify_boolean_postulates();
        assert_eq!(report.checks.len(), 8);
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.get(Law::Reflexivity).unwrap().cases, 4);
        assert_eq!(report.get(Law::CentralPermutation).unwrap().cases, 16);
        assert_eq!(report.get(Law::Transitivity).unwrap().cases, 64);
    }

    #[test]
    fn a_broken_law_yields_counterexamples() {
        // a:b::c:d => a:b::d:c is not a law.
        let check = permutation_law(Law::Symmetry, |q| BoolQuad::new(q.a, q.b, q.d, q.c));
        assert!(!check.passed());
        assert!(check
            .counterexamples
            .contains(&vec![false, true, false, true]));
    }
}
