//! Names, law statements, and tolerance tiers of every predicate.

use crate::random::Profile;
use crate::tolerance::Tier;

/// One executable law.
#[derive(Debug, Clone, Copy)]
pub struct PredicateInfo {
    pub name: &'static str,
    /// The statement being checked.
    pub law: &'static str,
    pub arity: usize,
    /// Spectral shapes the inputs are drawn with.
    pub profiles: &'static [Profile],
    pub tier: Tier,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub predicates: &'static [PredicateInfo],
}

impl SuiteInfo {
    /// The catalog entry for a predicate name as it appears in a report;
    /// `/…` suffixes that tag a sub-case are ignored.
    pub fn predicate(&self, reported: &str) -> Option<&PredicateInfo> {
        let base = reported.split('/').next().unwrap_or(reported);
        self.predicates.iter().find(|p| p.name == base)
    }
}

/// The registry of suites that [`run_suite`](super::run_suite) accepts.
#[derive(Debug, Clone, Copy)]
pub struct SuiteCatalog {
    suites: &'static [SuiteInfo],
}

impl SuiteCatalog {
    pub fn standard() -> Self {
        Self { suites: SUITES }
    }

    pub fn suites(&self) -> &'static [SuiteInfo] {
        self.suites
    }

    pub fn get(&self, name: &str) -> Option<&'static SuiteInfo> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name).collect()
    }
}

use Profile::{Atomic, Boundary, Degenerate, Generic, Sharp};
use Tier::{Base, Chained};

const ANY: &[Profile] = &Profile::ALL;
const GEN: &[Profile] = &[Generic];
const SHARP: &[Profile] = &[Sharp];
const ATOM: &[Profile] = &[Atomic];
const SHARP_ATOM: &[Profile] = &[Sharp, Atomic];
const CLUSTER: &[Profile] = &[Degenerate, Generic];
const POSITIVE: &[Profile] = &[Generic, Boundary];
const NONE: &[Profile] = &[];

const fn p(name: &'static str, law: &'static str, arity: usize, profiles: &'static [Profile], tier: Tier) -> PredicateInfo {
    PredicateInfo { name, law, arity, profiles, tier }
}

static SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "axioms-S1..S7",
        summary: "the seven axioms of a sequential product",
        predicates: &[
            p("S1", "additivity: a & (b + c) = a & b + a & c when b + c is an effect", 3, ANY, Base),
            p("S2-holder", "continuity of a ↦ a & b, probed as ‖aₙ & b − a & b‖ ≤ C‖aₙ − a‖^½‖b‖ (reported only)", 2, GEN, Base),
            p("S3", "unitality: 1 & a = a", 1, ANY, Base),
            p("S4", "orthogonal effects are compatible: a & b = 0 ⟹ b & a = 0", 2, GEN, Chained),
            p("S5", "associativity of compatible effects: a ∣ b ⟹ a & (b & c) = (a & b) & c", 3, ANY, Chained),
            p("S6-complement", "a ∣ b ⟹ a ∣ 1 − b", 2, GEN, Chained),
            p("S6-sum", "a ∣ b and a ∣ c ⟹ a ∣ b + c", 3, GEN, Chained),
            p("S7", "a ∣ b and a ∣ c ⟹ a ∣ b & c", 3, CLUSTER, Chained),
        ],
    },
    SuiteInfo {
        name: "derived-weak-S7",
        summary: "multiplicativity of pairwise compatible triples from associativity alone",
        predicates: &[
            p("S5-chain", "a & (b & c) = (a & b) & c = (b & a) & c = b & (a & c) = b & (c & a) = (b & c) & a", 3, CLUSTER, Chained),
            p("weak-S7", "a ∣ b, a ∣ c and b ∣ c ⟹ a ∣ b & c", 3, CLUSTER, Chained),
        ],
    },
    SuiteInfo {
        name: "basic-laws",
        summary: "zero, unit, order and scalar laws of the sequential product and its left-multiplication map",
        predicates: &[
            p("zero-law", "a & 0 = 0 & a = 0", 1, ANY, Base),
            p("unit-law", "a & 1 = 1 & a = a", 1, ANY, Base),
            p("decreasing", "a & b ≤ a", 2, ANY, Base),
            p("effect-closure", "a & b is an effect", 2, ANY, Base),
            p("order-preserving", "a ≤ b ⟹ c & a ≤ c & b", 3, ANY, Chained),
            p("scalar-left", "(λa) & b = λ(a & b)", 2, ANY, Base),
            p("scalar-right", "a & (λb) = λ(a & b)", 2, ANY, Base),
            p("scalar-compatible", "a ∣ b ⟹ a ∣ λb", 2, GEN, Chained),
            p("left-mult-linear", "the matrix of L_a reproduces a & x on all of V", 2, ANY, Chained),
            p("left-mult-positive", "L_a maps positives to positives", 2, ANY, Base),
            p("left-mult-inverse", "L_{a⁻¹} L_a = id for invertible a", 1, POSITIVE, Chained),
        ],
    },
    SuiteInfo {
        name: "jordan-algebra",
        summary: "the reference Jordan product and trace form",
        predicates: &[
            p("commutative", "a ∘ b = b ∘ a", 2, GEN, Base),
            p("bilinear", "(αa + βb) ∘ c = α(a ∘ c) + β(b ∘ c)", 3, GEN, Base),
            p("jordan-identity", "a ∘ (b ∘ (a ∘ a)) = (a ∘ b) ∘ (a ∘ a)", 2, GEN, Base),
            p("trace-associative", "⟨a ∘ b, c⟩ = ⟨b, a ∘ c⟩", 3, GEN, Base),
            p("formal-reality", "a ∘ a ≥ 0 and ⟨a ∘ a, 1⟩ > 0 for a ≠ 0", 1, GEN, Base),
            p("order-unit-norm", "‖a‖ = inf{r : −r·1 ≤ a ≤ r·1}", 1, GEN, Base),
        ],
    },
    SuiteInfo {
        name: "sharpness",
        summary: "idempotents of the sequential product",
        predicates: &[
            p("sharp-equivalence", "a & a = a ⟺ a & a⊥ = 0, since a = a & a + a & a⊥", 1, ANY, Base),
            p("sharp-certified", "sampled projections satisfy p & p = p", 1, SHARP, Base),
            p("half-not-sharp", "½p is not sharp for p ≠ 0", 1, SHARP, Base),
            p("interior-not-sharp", "an effect with spectrum inside (0, 1) is not sharp", 1, GEN, Base),
            p("orthogonal-symmetric", "p & q = 0 ⟺ q & p = 0", 2, SHARP, Base),
        ],
    },
    SuiteInfo {
        name: "classical-algebra",
        summary: "a finite proxy for classicality: the span of the powers of a and a⊥ is commutative, associative and of dimension the number of distinct eigenvalues",
        predicates: &[
            p("classical-commutative", "x & y = y & x on the span of powers", 1, GEN, Chained),
            p("classical-associative", "x & (y & z) = (x & y) & z on the span of powers", 1, GEN, Chained),
            p("classical-dimension", "dim span{aⁿ, (a⊥)ᵐ} = number of distinct eigenvalues", 1, GEN, Base),
            p("power-recursion", "aⁿ = a & aⁿ⁻¹", 1, GEN, Chained),
        ],
    },
    SuiteInfo {
        name: "homogeneity",
        summary: "Φ = L_b L_{a⁻¹} is an order isomorphism taking a to b",
        predicates: &[
            p("maps-a-to-b", "Φ(a) = b", 2, POSITIVE, Chained),
            p("inverse-maps-b-to-a", "Φ⁻¹(b) = a with Φ⁻¹ = L_a L_{b⁻¹}", 2, POSITIVE, Chained),
            p("inverse-composition", "Φ⁻¹ Φ = id", 2, POSITIVE, Chained),
            p("preserves-positivity", "x ≥ 0 ⟹ Φ(x) ≥ 0", 3, ANY, Chained),
            p("reflects-positivity", "x ≥ 0 ⟹ Φ⁻¹(x) ≥ 0", 3, ANY, Chained),
        ],
    },
    SuiteInfo {
        name: "spectral",
        summary: "spectral decomposition, functional calculus, ceiling and floor",
        predicates: &[
            p("reconstruction", "a = Σ λᵢ pᵢ", 1, ANY, Base),
            p("idempotent-orthogonality", "pᵢ ∘ pⱼ = 0 for i ≠ j", 1, ANY, Base),
            p("idempotent-sharpness", "pᵢ ∘ pᵢ = pᵢ", 1, ANY, Base),
            p("cluster-separation", "distinct eigenvalues differ by at least the cluster gap", 1, ANY, Base),
            p("sqrt-square", "√a ∘ √a = a", 1, ANY, Base),
            p("power-two", "a² = a & a", 1, ANY, Base),
            p("inverse", "a & a⁻¹ = 1", 1, POSITIVE, Chained),
            p("ceiling-floor-duality", "⌊a⌋ = 1 − ⌈1 − a⌉", 1, ANY, Base),
            p("ceiling-scaling", "⌈λa⌉ = ⌈a⌉ for λ ∈ (0, 1]", 1, ANY, Base),
            p("ceiling-above", "a ≤ ⌈a⌉", 1, ANY, Base),
            p("floor-below", "⌊a⌋ ≤ a", 1, ANY, Base),
            p("ceiling-sharp", "⌈a⌉ and ⌊a⌋ are sharp", 1, ANY, Base),
            p("ceiling-minimal", "a ≤ p sharp ⟹ ⌈a⌉ ≤ p", 2, SHARP, Chained),
        ],
    },
    SuiteInfo {
        name: "lattice",
        summary: "join, meet, orthogonality and the covering property of sharp effects",
        predicates: &[
            p("join-upper", "p, q ≤ p ∨ q", 2, SHARP_ATOM, Base),
            p("join-commutative", "p ∨ q = q ∨ p", 2, SHARP_ATOM, Base),
            p("join-minimal", "p ∨ q ≤ r for every sampled sharp upper bound r", 3, SHARP, Chained),
            p("meet-lower", "p ∧ q ≤ p, q", 2, SHARP_ATOM, Chained),
            p("de-morgan", "(p ∨ q)⊥ = p⊥ ∧ q⊥", 2, SHARP_ATOM, Chained),
            p("orthogonal-symmetric", "p & q = 0 ⟹ q & p = 0", 2, SHARP, Base),
            p("orthogonal-sum-below-unit", "p & q = 0 ⟹ p + q ≤ 1", 2, SHARP, Base),
            p("orthogonal-join-is-sum", "p & q = 0 ⟹ p ∨ q = p + q", 2, SHARP, Base),
            p("ceiling-annihilation", "b & a = 0 ⟹ b & ⌈a⌉ = 0", 2, GEN, Chained),
            p("ceiling-of-compression", "⌈p & a⌉ = ⌈p & ⌈a⌉⌉", 2, ANY, Chained),
            p("below-sharp", "a ≤ p ⟹ p & a = a and p⊥ & a = 0", 2, ANY, Chained),
            p("compatible-sharp-meet", "p ∣ q sharp ⟹ p & q is sharp and equals p ∧ q", 2, SHARP, Chained),
            p("difference-is-meet", "q ≤ p ⟹ p − q = p ∧ q⊥", 2, SHARP_ATOM, Chained),
            p("compression-of-atom", "a & q is a multiple of an atom for an atom q", 2, ANY, Base),
            p("covering", "(q ∨ p) − p is zero or an atom for an atom q", 2, SHARP_ATOM, Base),
            p("covering-ceiling", "⌈p⊥ & q⌉ = (q ∨ p) − p", 2, SHARP_ATOM, Chained),
            p("rank-two-ideal", "a ≤ p ∨ q for distinct atoms decomposes over at most two atoms summing to p ∨ q", 3, ANY, Chained),
        ],
    },
    SuiteInfo {
        name: "rank",
        summary: "every atomic decomposition of a sharp effect has the same length",
        predicates: &[
            p("unit-rank", "rank 1 = n for matrix factors and 2 for spin factors, summed over factors", 0, NONE, Base),
            p("decomposition-sum", "Σ atoms = p", 1, SHARP, Base),
            p("decomposition-orthogonal", "pᵢ & pⱼ = 0 for i ≠ j", 1, SHARP, Base),
            p("frame-independence", "three random frames give the same number of atoms", 1, SHARP, Base),
            p("rank-is-trace", "rank p = ⟨p, 1⟩", 1, SHARP, Base),
            p("rank-monotone", "q ≤ p ⟹ rank q ≤ rank p", 2, ANY, Base),
            p("rank-equality-forces-equal", "q ≤ p and rank q = rank p ⟹ q = p", 2, ANY, Chained),
            p("join-of-atoms-rank-two", "rank(p ∨ q) = 2 for distinct atoms", 2, ATOM, Base),
        ],
    },
    SuiteInfo {
        name: "duality",
        summary: "pure states of atoms, transition probabilities and the self-dual inner product",
        predicates: &[
            p("transition-symmetry", "ω_p(q) = ω_q(p)", 2, ATOM, Base),
            p("transition-range", "0 ≤ ω_p(q) ≤ 1", 2, ATOM, Base),
            p("product-law", "p & q = ω_p(q) p", 2, ATOM, Chained),
            p("zero-iff-orthogonal", "ω_p(q) = 0 ⟺ p & q = 0", 2, ATOM, Base),
            p("orthogonal-atoms-zero", "ω_p(q) = 0 for distinct atoms of one frame", 2, ATOM, Base),
            p("pure-state-unique", "ω(p & a)/ω(p) = ⟨p, a⟩/⟨p, p⟩", 2, ATOM, Base),
            p("pure-state-normalized", "ω_p(p) = ω_p(1) = 1 and ω_p(p⊥) = 0", 1, ATOM, Base),
            p("pure-state-positive", "ω_p ≥ 0 on the positive cone", 1, ATOM, Base),
            p("form-matches-reference", "Σ λᵢμⱼ ω_{pᵢ}(qⱼ) = ⟨a, b⟩", 2, GEN, Base),
            p("form-frame-independent", "the form does not depend on the atomic frames used", 2, GEN, Base),
            p("form-symmetric", "⟨a, b⟩ = ⟨b, a⟩", 2, GEN, Base),
            p("norm-is-eigen-sum", "⟨a, a⟩ = Σ λᵢ²", 1, GEN, Base),
            p("self-dual-forward", "a, b ≥ 0 ⟹ ⟨a, b⟩ ≥ 0", 2, ANY, Base),
            p("self-dual-backward", "⟨a, pⱼ⟩ ≥ 0 for the frame atoms of a ⟺ a ≥ 0", 1, ANY, Base),
            p("state-separation", "some pure state separates v ≠ w at scale ‖v − w‖/dim", 2, GEN, Base),
            p("gram-positive-definite", "the Gram matrix of the form has least eigenvalue above 1e-8", 0, NONE, Base),
        ],
    },
    SuiteInfo {
        name: "reconstruction",
        summary: "the Jordan product rebuilt as a * b = Σ λᵢμⱼ pᵢ * qⱼ with p * b = ½(b + p & b − p⊥ & b)",
        predicates: &[
            p("matches-jordan", "a * b = a ∘ b", 2, GEN, Chained),
            p("commutative", "a * b = b * a", 2, GEN, Chained),
            p("bilinear", "(αa + βc) * b = α(a * b) + β(c * b)", 3, GEN, Chained),
            p("frame-independent", "two atomic frames give the same product", 2, GEN, Base),
            p("unit-identity", "1 * b = b", 1, GEN, Base),
            p("atom-idempotent", "p * p = p", 1, ATOM, Base),
            p("atom-unit", "p * 1 = p", 1, ATOM, Base),
            p("orthogonal-annihilation", "p & q = 0 ⟹ p * q = 0", 2, ATOM, Base),
            p("distinct-atoms-closed-form", "2(p * q) = q + ⟨p, q⟩p − ⟨p′, q⟩p′ with p′ = p ∨ q − p", 2, ATOM, Chained),
            p("distinct-atoms-final-form", "2(p * q) = q + p − (1 − ⟨p, q⟩)(p ∨ q)", 2, ATOM, Chained),
            p("restriction-law", "p⊥ & q = p′ & q with p′ = p ∨ q − p", 2, ATOM, Chained),
            p("square-by-parts", "a * a = a⁺ & a − a⁻ & a = (a⁺)² + (a⁻)²", 1, GEN, Chained),
            p("formal-reality", "a * a ≥ 0", 1, GEN, Chained),
            p("symmetric-product", "⟨a * b, c⟩ = ⟨b, a * c⟩ under the self-dual form", 3, GEN, Chained),
            p("left-mult-self-adjoint", "⟨a & x, y⟩ = ⟨x, a & y⟩ for positive a", 1, POSITIVE, Chained),
        ],
    },
    SuiteInfo {
        name: "t-commutation",
        summary: "the operators T_a = a * (·)",
        predicates: &[
            p("compatible-commute", "a ∣ b ⟹ T_a T_b = T_b T_a", 2, GEN, Chained),
            p("jordan-identity-operator", "T_a T_{a*a} = T_{a*a} T_a", 1, GEN, Chained),
            p("by-parts", "a ∣ b ⟹ T_a b = a⁺ & b − a⁻ & b", 2, GEN, Chained),
            p("unit-identity", "T_1 = id", 0, NONE, Base),
        ],
    },
    SuiteInfo {
        name: "tensor",
        summary: "explicit composites complex:n ⊗ complex:m of the complex summands",
        predicates: &[
            p("tensor-product-law", "(a₁ ⊗ b₁) & (a₂ ⊗ b₂) = (a₁ & a₂) ⊗ (b₁ & b₂)", 4, GEN, Chained),
            p("tensor-atom-sharp", "(p ⊗ q) & (p ⊗ q) = p ⊗ q for atoms", 2, ATOM, Chained),
            p("tensor-atom-atomic", "p ⊗ q is atomic for atoms", 2, ATOM, Base),
            p("tensor-classical", "c ⊗ d is classical for classical c, d", 2, GEN, Chained),
            p("tensor-rank", "rank(1 ⊗ 1) = n·m", 0, NONE, Base),
            p("tensor-dimension", "dim(complex:n ⊗ complex:m) = (n·m)²", 0, NONE, Base),
            p("spread-atom-overlap", "the atom onto (1/√r)Σvᵢ overlaps every frame atom", 1, NONE, Chained),
            p("summand-overlap", "atoms with p & q ≠ 0 lie in the same summand", 2, ATOM, Base),
        ],
    },
    SuiteInfo {
        name: "table",
        summary: "the classification of simple Euclidean Jordan algebras and the square-composite verdicts",
        predicates: &[
            p("table-consistent", "every row's dimension matches its family formula", 0, NONE, Base),
            p("rank-four-dims", "the simple algebras of rank 4 have dimensions 10, 16 and 28", 0, NONE, Base),
            p("rank-nine-max", "the largest simple algebra of rank 9 has dimension 9·17 = 153", 0, NONE, Base),
            p("albert-no-square", "no simple algebra has rank 9 and dimension 27² = 729", 0, NONE, Base),
            p("verdict-matches-oracle", "a summand has a square composite exactly when it is a complex matrix algebra", 0, NONE, Base),
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_predicate_has_a_law() {
        let cat = SuiteCatalog::standard();
        assert_eq!(cat.suites().len(), 15);
        for s in cat.suites() {
            assert!(!s.predicates.is_empty(), "{}", s.name);
            for p in s.predicates {
                assert!(!p.law.is_empty(), "{}/{}", s.name, p.name);
            }
            let mut names: Vec<_> = s.predicates.iter().map(|p| p.name).collect();
            names.sort();
            names.dedup();
            assert_eq!(names.len(), s.predicates.len(), "{}", s.name);
            assert!(super::super::suites::lookup(s.name).is_some(), "{}", s.name);
        }
    }
}
