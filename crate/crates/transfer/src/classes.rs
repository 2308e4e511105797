//! Per-object module classes and membership in the perpendicular classes
//! of induced, coinduced and stalk functors.
//!
//! For a cotorsion pair `(∏ F_A, ∏ G_A)` of `∏ R_A`-modules:
//!
//! * `q(∏ F_A)^⊥` consists of the `X` with `X(A) ∈ G_A` for all `A`,
//!   provided every object of `F_A` is `q_A`-flat;
//! * `⊥p(∏ G_A)` consists of the `X` with `X(A) ∈ F_A`, provided every
//!   object of `G_A` is `p_A`-coflat;
//! * `s(∏ F_A)^⊥` consists of the `X` with `k_A(X) ∈ G_A` and
//!   `X(A) -> ker μ_{A,X}` surjective, provided `∏ F_A` is generating;
//! * `⊥s(∏ G_A)` consists of the `X` with `c_A(X) ∈ F_A` and
//!   `coker φ_{A,X} -> X(A)` injective, provided `∏ G_A` is cogenerating.
//!
//! The pair is described by one of its halves: a right half `G` must be
//! all modules, the injectives, or a right perpendicular class `L^⊥`; a
//! left half `F` must be all modules, the projectives, or `⊥L`. Each of
//! these is a half of a cotorsion pair, and the generating / cogenerating
//! hypotheses hold for them automatically.

use std::fmt;
use std::sync::Arc;

use cotlab_algmod::{ext_dim, is_injective, is_projective, same_algebra, LeftModule};
use cotlab_functorcat::{coker_phi, ker_mu, reduced_c, reduced_k, AddFunctor, AdjunctionHandle, FunctorError};

use crate::error::{Result, TransferError};

/// A class of modules over one endomorphism algebra.
#[derive(Clone, Debug)]
pub enum ClassSelector {
    All,
    Projectives,
    Injectives,
    /// `{M : Ext¹(L, M) = 0 for every listed L}`.
    RightPerpOf(Vec<Arc<LeftModule>>),
    /// `{M : Ext¹(M, L) = 0 for every listed L}`.
    LeftPerpOf(Vec<Arc<LeftModule>>),
}

impl ClassSelector {
    pub fn name(&self) -> &'static str {
        match self {
            ClassSelector::All => "all",
            ClassSelector::Projectives => "projectives",
            ClassSelector::Injectives => "injectives",
            ClassSelector::RightPerpOf(_) => "rightPerpOf",
            ClassSelector::LeftPerpOf(_) => "leftPerpOf",
        }
    }

    /// Whether `m` belongs to the class.
    pub fn contains(&self, m: &Arc<LeftModule>) -> Result<bool> {
        Ok(match self {
            ClassSelector::All => true,
            ClassSelector::Projectives => is_projective(m)?,
            ClassSelector::Injectives => is_injective(m)?,
            ClassSelector::RightPerpOf(ls) => {
                for l in ls {
                    check_alg(l, m)?;
                    if ext_dim(l, m, 1)? != 0 {
                        return Ok(false);
                    }
                }
                true
            }
            ClassSelector::LeftPerpOf(ls) => {
                for l in ls {
                    check_alg(l, m)?;
                    if ext_dim(m, l, 1)? != 0 {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }

    fn is_right_half(&self) -> bool {
        matches!(self, ClassSelector::All | ClassSelector::Injectives | ClassSelector::RightPerpOf(_))
    }

    fn is_left_half(&self) -> bool {
        matches!(self, ClassSelector::All | ClassSelector::Projectives | ClassSelector::LeftPerpOf(_))
    }
}

fn check_alg(l: &LeftModule, m: &LeftModule) -> Result<()> {
    if same_algebra(l.alg(), m.alg()) {
        Ok(())
    } else {
        Err(TransferError::Inapplicable("class module lives over a different algebra".into()))
    }
}

/// One class per object, in object order.
pub type ClassSpec = Vec<ClassSelector>;

/// Which perpendicular class is being tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PerpSelector {
    /// `q(∏ F_A)^⊥`, described by `G`.
    QPerp,
    /// `⊥p(∏ G_A)`, described by `F`.
    PPerp,
    /// `s(∏ F_A)^⊥`, described by `G`.
    SPerp,
    /// `⊥s(∏ G_A)`, described by `F`.
    PerpS,
}

impl PerpSelector {
    pub fn name(self) -> &'static str {
        match self {
            PerpSelector::QPerp => "qPerp",
            PerpSelector::PPerp => "pPerp",
            PerpSelector::SPerp => "sPerp",
            PerpSelector::PerpS => "perpS",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "qPerp" => Some(PerpSelector::QPerp),
            "pPerp" => Some(PerpSelector::PPerp),
            "sPerp" => Some(PerpSelector::SPerp),
            "perpS" => Some(PerpSelector::PerpS),
            _ => None,
        }
    }

    /// Whether the class spec describes the right half `G` (otherwise `F`).
    pub fn uses_right_half(self) -> bool {
        matches!(self, PerpSelector::QPerp | PerpSelector::SPerp)
    }
}

impl fmt::Display for PerpSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence gathered at one object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectEvidence {
    pub object: usize,
    /// `dim X(A)`.
    pub value_dim: usize,
    /// Dimension of the module tested against the class: `X(A)` for the
    /// q/p selectors, `k_A(X)` or `c_A(X)` for the stalk selectors.
    pub tested_dim: usize,
    pub in_class: bool,
    /// For the stalk selectors, the domain (`coker φ`) or codomain
    /// (`ker μ`) dimension of the comparison map and whether it has the
    /// required injectivity / surjectivity.
    pub comparison: Option<(usize, bool)>,
}

impl ObjectEvidence {
    pub fn holds(&self) -> bool {
        self.in_class && self.comparison.map_or(true, |(_, ok)| ok)
    }
}

/// Result of a perpendicular-class membership test.
#[derive(Clone, Debug)]
pub enum PerpVerdict {
    Member { member: bool, evidence: Vec<ObjectEvidence> },
    Inapplicable(String),
}

impl PerpVerdict {
    pub fn member(&self) -> Option<bool> {
        match self {
            PerpVerdict::Member { member, .. } => Some(*member),
            PerpVerdict::Inapplicable(_) => None,
        }
    }

    /// The first object whose condition fails.
    pub fn witness(&self) -> Option<&ObjectEvidence> {
        match self {
            PerpVerdict::Member { evidence, .. } => evidence.iter().find(|e| !e.holds()),
            PerpVerdict::Inapplicable(_) => None,
        }
    }
}

fn inapplicable_on_functor_error(e: TransferError) -> Result<PerpVerdict> {
    match e {
        TransferError::Functor(FunctorError::ZeroTrace(msg)) => Ok(PerpVerdict::Inapplicable(msg)),
        TransferError::Inapplicable(msg) => Ok(PerpVerdict::Inapplicable(msg)),
        other => Err(other),
    }
}

/// Decides whether `X` lies in the perpendicular class named by
/// `selector`, after checking the side conditions.
pub fn perp_membership(selector: PerpSelector, x: &Arc<AddFunctor>, classes: &[ClassSelector]) -> Result<PerpVerdict> {
    let ctx = x.ctx();
    let n = ctx.object_count();
    if classes.len() != n {
        return Err(TransferError::Inapplicable(format!("{} classes given for {} objects", classes.len(), n)));
    }
    for (a, cls) in classes.iter().enumerate() {
        let ok = if selector.uses_right_half() { cls.is_right_half() } else { cls.is_left_half() };
        if !ok {
            return Ok(PerpVerdict::Inapplicable(format!(
                "{} at {} is not a {} half of a cotorsion pair",
                cls.name(),
                ctx.object_name(a),
                if selector.uses_right_half() { "right" } else { "left" }
            )));
        }
    }
    match membership(selector, x, classes) {
        Ok(v) => Ok(v),
        Err(e) => inapplicable_on_functor_error(e),
    }
}

fn membership(selector: PerpSelector, x: &Arc<AddFunctor>, classes: &[ClassSelector]) -> Result<PerpVerdict> {
    let ctx = x.ctx();
    let n = ctx.object_count();
    let mut evidence = Vec::with_capacity(n);
    for (a, cls) in classes.iter().enumerate() {
        let ev = match selector {
            PerpSelector::QPerp | PerpSelector::PPerp => {
                // Every object of F_A must be q_A-flat (every object of G_A
                // p_A-coflat). For G = all, F is the projectives, which are
                // always flat; dually for F = all. Otherwise require the
                // functor to be exact.
                let trivial = matches!(cls, ClassSelector::All);
                if !trivial {
                    let (h, exact) = if selector == PerpSelector::QPerp {
                        let h = AdjunctionHandle::q_ev(ctx, a)?;
                        let e = h.q_exact()?;
                        (h, e)
                    } else {
                        let h = AdjunctionHandle::ev_p(ctx, a)?;
                        let e = h.t_exact()?;
                        (h, e)
                    };
                    if !exact {
                        return Ok(PerpVerdict::Inapplicable(format!(
                            "{:?} is not exact, so the flatness hypothesis for {} at {} is not established",
                            h.tag(),
                            cls.name(),
                            ctx.object_name(a)
                        )));
                    }
                }
                let xa = x.eval(a);
                ObjectEvidence {
                    object: a,
                    value_dim: xa.dim(),
                    tested_dim: xa.dim(),
                    in_class: cls.contains(&xa)?,
                    comparison: None,
                }
            }
            PerpSelector::SPerp => {
                let (k, _) = reduced_k(x, a)?;
                let (km, psi) = ker_mu(x, a)?;
                ObjectEvidence {
                    object: a,
                    value_dim: x.dim(a),
                    tested_dim: k.dim(),
                    in_class: cls.contains(&k)?,
                    comparison: Some((km.dim(), psi.is_surjective())),
                }
            }
            PerpSelector::PerpS => {
                let (c, _) = reduced_c(x, a)?;
                let (cp, phi) = coker_phi(x, a)?;
                ObjectEvidence {
                    object: a,
                    value_dim: x.dim(a),
                    tested_dim: c.dim(),
                    in_class: cls.contains(&c)?,
                    comparison: Some((cp.dim(), phi.is_injective())),
                }
            }
        };
        evidence.push(ev);
    }
    let member = evidence.iter().all(ObjectEvidence::holds);
    Ok(PerpVerdict::Member { member, evidence })
}
