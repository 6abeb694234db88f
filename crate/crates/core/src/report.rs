//! Validation reports with canonical ordering of violations.

use std::fmt;

use crate::cell::CellId;

/// Tags identifying which law a violation breaks.
///
/// The `Display` form is the stable name used in serialized reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomTag {
    // Hom-category laws.
    VerticalAssociativity,
    VerticalUnit,
    // Functoriality of horizontal composition.
    HorizontalIdentity,
    Interchange,
    // Constraint cells.
    AssociatorInverse,
    LeftUnitorInverse,
    RightUnitorInverse,
    AssociatorNaturality,
    LeftUnitorNaturality,
    RightUnitorNaturality,
    MiddleUnity,
    Pentagon,
    // Derived unitor properties (consequences, checked separately).
    LeftUnitorComposite,
    RightUnitorComposite,
    UnitorsAgreeAtIdentity,
    // Lax functor laws.
    TwoCellIdentity,
    TwoCellComposition,
    ConstraintNaturality,
    LaxAssociativity,
    LaxLeftUnity,
    LaxRightUnity,
    // Lax transformation laws.
    ComponentNaturality,
    TransformationUnity,
    TransformationNaturality,
    // Modifications.
    ModificationAxiom,
    // Adjunctions.
    TriangleLeft,
    TriangleRight,
    // Inc-lax terminal structure.
    InitialComponent,
    IdentityComponent,
    UniversalFactorisation,
    PreservesInitialComponents,
    // Local characterisation of biequivalences.
    EssentialSurjectivity,
    EssentialFullness,
    FullFaithfulness,
    // Certificate structure.
    CertificateBoundary,
    CertificateFunctorPseudo,
    CertificateTransformationStrong,
    CertificateComponentInvertible,
    CertificateModificationInvertible,
    CertificatePieceInvalid,
}

impl AxiomTag {
    pub fn name(&self) -> &'static str {
        use AxiomTag::*;
        match self {
            VerticalAssociativity => "vertical-associativity",
            VerticalUnit => "vertical-unit",
            HorizontalIdentity => "horizontal-identity",
            Interchange => "interchange",
            AssociatorInverse => "associator-inverse",
            LeftUnitorInverse => "left-unitor-inverse",
            RightUnitorInverse => "right-unitor-inverse",
            AssociatorNaturality => "associator-naturality",
            LeftUnitorNaturality => "left-unitor-naturality",
            RightUnitorNaturality => "right-unitor-naturality",
            MiddleUnity => "middle-unity",
            Pentagon => "pentagon",
            LeftUnitorComposite => "left-unitor-composite",
            RightUnitorComposite => "right-unitor-composite",
            UnitorsAgreeAtIdentity => "unitors-agree-at-identity",
            TwoCellIdentity => "two-cell-identity",
            TwoCellComposition => "two-cell-composition",
            ConstraintNaturality => "constraint-naturality",
            LaxAssociativity => "lax-associativity",
            LaxLeftUnity => "lax-left-unity",
            LaxRightUnity => "lax-right-unity",
            ComponentNaturality => "component-naturality",
            TransformationUnity => "transformation-unity",
            TransformationNaturality => "transformation-naturality",
            ModificationAxiom => "modification-axiom",
            TriangleLeft => "triangle-left",
            TriangleRight => "triangle-right",
            InitialComponent => "initial-component",
            IdentityComponent => "identity-component",
            UniversalFactorisation => "universal-factorisation",
            PreservesInitialComponents => "preserves-initial-components",
            EssentialSurjectivity => "essential-surjectivity",
            EssentialFullness => "essential-fullness",
            FullFaithfulness => "full-faithfulness",
            CertificateBoundary => "certificate-boundary",
            CertificateFunctorPseudo => "certificate-functor-pseudo",
            CertificateTransformationStrong => "certificate-transformation-strong",
            CertificateComponentInvertible => "certificate-component-invertible",
            CertificateModificationInvertible => "certificate-modification-invertible",
            CertificatePieceInvalid => "certificate-piece-invalid",
        }
    }
}

impl AxiomTag {
    pub const ALL: &'static [AxiomTag] = &[
        AxiomTag::VerticalAssociativity,
        AxiomTag::VerticalUnit,
        AxiomTag::HorizontalIdentity,
        AxiomTag::Interchange,
        AxiomTag::AssociatorInverse,
        AxiomTag::LeftUnitorInverse,
        AxiomTag::RightUnitorInverse,
        AxiomTag::AssociatorNaturality,
        AxiomTag::LeftUnitorNaturality,
        AxiomTag::RightUnitorNaturality,
        AxiomTag::MiddleUnity,
        AxiomTag::Pentagon,
        AxiomTag::LeftUnitorComposite,
        AxiomTag::RightUnitorComposite,
        AxiomTag::UnitorsAgreeAtIdentity,
        AxiomTag::TwoCellIdentity,
        AxiomTag::TwoCellComposition,
        AxiomTag::ConstraintNaturality,
        AxiomTag::LaxAssociativity,
        AxiomTag::LaxLeftUnity,
        AxiomTag::LaxRightUnity,
        AxiomTag::ComponentNaturality,
        AxiomTag::TransformationUnity,
        AxiomTag::TransformationNaturality,
        AxiomTag::ModificationAxiom,
        AxiomTag::TriangleLeft,
        AxiomTag::TriangleRight,
        AxiomTag::InitialComponent,
        AxiomTag::IdentityComponent,
        AxiomTag::UniversalFactorisation,
        AxiomTag::PreservesInitialComponents,
        AxiomTag::EssentialSurjectivity,
        AxiomTag::EssentialFullness,
        AxiomTag::FullFaithfulness,
        AxiomTag::CertificateBoundary,
        AxiomTag::CertificateFunctorPseudo,
        AxiomTag::CertificateTransformationStrong,
        AxiomTag::CertificateComponentInvertible,
        AxiomTag::CertificateModificationInvertible,
        AxiomTag::CertificatePieceInvalid,
    ];

    pub fn from_name(name: &str) -> Option<AxiomTag> {
        AxiomTag::ALL.iter().copied().find(|t| t.name() == name)
    }
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single failed law instance.
///
/// `witness` is the tuple of cells instantiating the law, in the order the
/// law quantifies them. For equational laws `lhs`/`rhs` are the two evaluated
/// 2-cells that were expected to coincide; structural findings leave them
/// empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub axiom: AxiomTag,
    pub witness: Vec<CellId>,
    pub lhs: Option<CellId>,
    pub rhs: Option<CellId>,
}

impl Violation {
    pub fn unequal(
        axiom: AxiomTag,
        witness: Vec<CellId>,
        lhs: impl Into<CellId>,
        rhs: impl Into<CellId>,
    ) -> Self {
        Violation {
            axiom,
            witness,
            lhs: Some(lhs.into()),
            rhs: Some(rhs.into()),
        }
    }

    pub fn structural(axiom: AxiomTag, witness: Vec<CellId>) -> Self {
        Violation {
            axiom,
            witness,
            lhs: None,
            rhs: None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")?;
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, ": {l} != {r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
        }
    }
}

/// Outcome of a validation run.
///
/// Violations are sorted and deduplicated, so equal inputs always produce
/// identical reports. The status is `Pass` exactly when `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub status: Status,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn pass() -> Self {
        ValidationReport {
            status: Status::Pass,
            violations: Vec::new(),
        }
    }

    pub fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        let status = if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        ValidationReport { status, violations }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merge another report's violations into this one, re-normalizing.
    pub fn absorb(&mut self, other: ValidationReport) {
        if !other.violations.is_empty() {
            self.violations.extend(other.violations);
            self.violations.sort();
            self.violations.dedup();
            self.status = Status::Fail;
        }
    }

    pub fn first_with_tag(&self, tag: AxiomTag) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == tag)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", self.status)?;
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}

/// Structural defect in an input: dangling ids, partial or overfull tables,
/// boundary mismatches. Distinct from an axiom failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed input at {site}: {detail}")]
pub struct MalformedInput {
    pub site: String,
    pub detail: String,
}

impl MalformedInput {
    pub fn new(site: impl Into<String>, detail: impl Into<String>) -> Self {
        MalformedInput {
            site: site.into(),
            detail: detail.into(),
        }
    }
}
