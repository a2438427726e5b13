//! Skeletal model candidates: one object per ring element, automorphism
//! groups identified with the bimodule, and one module-valued table per
//! structure constraint.
//!
//! Every morphism is an endomorphism `(x, x, u)` with `u` in the module;
//! composition adds values, `(+)` on morphisms adds sources and values, and
//! `(*)` transports values through the bimodule actions. With that
//! dictionary each coherence diagram becomes an equation in the module.

use crate::algebra::{FiniteBimodule, FiniteRing, ShapeError};
use thiserror::Error;

/// The structure constraints a model stores tables for.
///
/// `lhat` / `rhat` are not stored; they are derived from the others (see
/// [`derive_lhat`]) and only usable once consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintKind {
    /// `(x+y)+z -> x+(y+z)`, additive associativity.
    APlus,
    /// `x+y -> y+x`, additive commutativity.
    C,
    /// `0+x -> x`, left additive unit.
    G,
    /// `x+0 -> x`, right additive unit.
    D,
    /// `(xy)z -> x(yz)`, multiplicative associativity.
    A,
    /// `1x -> x`, left multiplicative unit.
    L1,
    /// `x1 -> x`, right multiplicative unit.
    R1,
    /// `a(x+y) -> ax+ay`, left distributor.
    LDist,
    /// `(x+y)a -> xa+ya`, right distributor.
    RDist,
    /// `a0 -> 0`, derived left unit annihilator.
    LHat,
    /// `0a -> 0`, derived right unit annihilator.
    RHat,
}

impl ConstraintKind {
    pub const ALL_STORED: [ConstraintKind; 9] = [
        ConstraintKind::APlus,
        ConstraintKind::C,
        ConstraintKind::G,
        ConstraintKind::D,
        ConstraintKind::A,
        ConstraintKind::L1,
        ConstraintKind::R1,
        ConstraintKind::LDist,
        ConstraintKind::RDist,
    ];

    pub fn arity(self) -> usize {
        match self {
            ConstraintKind::APlus | ConstraintKind::A | ConstraintKind::LDist | ConstraintKind::RDist => 3,
            ConstraintKind::C => 2,
            _ => 1,
        }
    }

    /// Stable token used in diagram names and the CLI.
    pub fn token(self) -> &'static str {
        match self {
            ConstraintKind::APlus => "aplus",
            ConstraintKind::C => "c",
            ConstraintKind::G => "g",
            ConstraintKind::D => "d",
            ConstraintKind::A => "a",
            ConstraintKind::L1 => "l",
            ConstraintKind::R1 => "r",
            ConstraintKind::LDist => "L",
            ConstraintKind::RDist => "R",
            ConstraintKind::LHat => "lhat",
            ConstraintKind::RHat => "rhat",
        }
    }
}

/// Identifies one of the nine stored constraint tables, e.g. for search
/// spaces that sweep a subset of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableId {
    Xi,
    Eta,
    G,
    D,
    Alpha,
    LamU,
    RhoU,
    Ldist,
    Rdist,
}

impl TableId {
    pub const ALL: [TableId; 9] = [
        TableId::Xi,
        TableId::Eta,
        TableId::G,
        TableId::D,
        TableId::Alpha,
        TableId::LamU,
        TableId::RhoU,
        TableId::Ldist,
        TableId::Rdist,
    ];

    /// Number of entries for a ring of order `n`.
    pub fn len(self, n: usize) -> usize {
        match self.arity() {
            1 => n,
            2 => n * n,
            _ => n * n * n,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            TableId::Xi | TableId::Alpha | TableId::Ldist | TableId::Rdist => 3,
            TableId::Eta => 2,
            _ => 1,
        }
    }

    /// Token used by the model file format and `--vary`.
    pub fn token(self) -> &'static str {
        match self {
            TableId::Xi => "xi",
            TableId::Eta => "eta",
            TableId::G => "g",
            TableId::D => "d",
            TableId::Alpha => "alpha",
            TableId::LamU => "lam_u",
            TableId::RhoU => "rho_u",
            TableId::Ldist => "L",
            TableId::Rdist => "R",
        }
    }

    pub fn from_token(token: &str) -> Option<TableId> {
        TableId::ALL.iter().copied().find(|t| t.token() == token)
    }

    /// The table backing a stored constraint kind.
    pub fn for_kind(kind: ConstraintKind) -> Option<TableId> {
        match kind {
            ConstraintKind::APlus => Some(TableId::Xi),
            ConstraintKind::C => Some(TableId::Eta),
            ConstraintKind::G => Some(TableId::G),
            ConstraintKind::D => Some(TableId::D),
            ConstraintKind::A => Some(TableId::Alpha),
            ConstraintKind::L1 => Some(TableId::LamU),
            ConstraintKind::R1 => Some(TableId::RhoU),
            ConstraintKind::LDist => Some(TableId::Ldist),
            ConstraintKind::RDist => Some(TableId::Rdist),
            ConstraintKind::LHat | ConstraintKind::RHat => None,
        }
    }
}

/// An endomorphism of the skeletal groupoid. `source == target` always; the
/// pair is kept so ill-formed diagram terms surface as mismatches rather
/// than silent nonsense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub value: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("composition mismatch: target {target} of first factor != source {source} of second")]
    ObjectMismatch { target: usize, source: usize },
    #[error("constraint {kind} expects {expected} arguments, got {got}")]
    ArityMismatch {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("argument {value} out of range for ring of order {order}")]
    ArgOutOfRange { value: usize, order: usize },
    #[error("constraint {0} has no stored table; derive it first")]
    DerivedConstraint(&'static str),
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A skeletal model: ring, bimodule, and the nine constraint tables.
/// Immutable once handed to checkers; the search layer mutates entries
/// through [`SkeletalModel::set_entry`] while it owns the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletalModel {
    ring: FiniteRing,
    module: FiniteBimodule,
    xi: Vec<usize>,
    eta: Vec<usize>,
    g: Vec<usize>,
    d: Vec<usize>,
    alpha: Vec<usize>,
    lam_u: Vec<usize>,
    rho_u: Vec<usize>,
    ldist: Vec<usize>,
    rdist: Vec<usize>,
}

/// The nine raw constraint tables, in the order of [`TableId::ALL`].
#[derive(Debug, Clone, Default)]
pub struct ConstraintTables {
    pub xi: Vec<usize>,
    pub eta: Vec<usize>,
    pub g: Vec<usize>,
    pub d: Vec<usize>,
    pub alpha: Vec<usize>,
    pub lam_u: Vec<usize>,
    pub rho_u: Vec<usize>,
    pub ldist: Vec<usize>,
    pub rdist: Vec<usize>,
}

impl ConstraintTables {
    pub fn zeroed(ring_order: usize) -> Self {
        let n = ring_order;
        ConstraintTables {
            xi: vec![0; n * n * n],
            eta: vec![0; n * n],
            g: vec![0; n],
            d: vec![0; n],
            alpha: vec![0; n * n * n],
            lam_u: vec![0; n],
            rho_u: vec![0; n],
            ldist: vec![0; n * n * n],
            rdist: vec![0; n * n * n],
        }
    }
}

impl SkeletalModel {
    pub fn new(
        ring: FiniteRing,
        module: FiniteBimodule,
        tables: ConstraintTables,
    ) -> Result<Self, ModelError> {
        let n = ring.order();
        let m = module.order();
        let check = |name: &'static str, t: &[usize], want: usize| -> Result<(), ModelError> {
            if t.len() != want {
                return Err(ShapeError::BadShape {
                    table: name,
                    expected: want,
                    got: t.len(),
                }
                .into());
            }
            for (index, &value) in t.iter().enumerate() {
                if value >= m {
                    return Err(ShapeError::IndexOutOfRange {
                        table: name,
                        index,
                        value,
                        order: m,
                    }
                    .into());
                }
            }
            Ok(())
        };
        check("xi", &tables.xi, n * n * n)?;
        check("eta", &tables.eta, n * n)?;
        check("g", &tables.g, n)?;
        check("d", &tables.d, n)?;
        check("alpha", &tables.alpha, n * n * n)?;
        check("lam_u", &tables.lam_u, n)?;
        check("rho_u", &tables.rho_u, n)?;
        check("L", &tables.ldist, n * n * n)?;
        check("R", &tables.rdist, n * n * n)?;
        Ok(SkeletalModel {
            ring,
            module,
            xi: tables.xi,
            eta: tables.eta,
            g: tables.g,
            d: tables.d,
            alpha: tables.alpha,
            lam_u: tables.lam_u,
            rho_u: tables.rho_u,
            ldist: tables.ldist,
            rdist: tables.rdist,
        })
    }

    /// The model with every constraint table zero.
    pub fn trivial(ring: FiniteRing, module: FiniteBimodule) -> Self {
        let tables = ConstraintTables::zeroed(ring.order());
        SkeletalModel::new(ring, module, tables).expect("zero tables are always in range")
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn module(&self) -> &FiniteBimodule {
        &self.module
    }

    pub fn table(&self, id: TableId) -> &[usize] {
        match id {
            TableId::Xi => &self.xi,
            TableId::Eta => &self.eta,
            TableId::G => &self.g,
            TableId::D => &self.d,
            TableId::Alpha => &self.alpha,
            TableId::LamU => &self.lam_u,
            TableId::RhoU => &self.rho_u,
            TableId::Ldist => &self.ldist,
            TableId::Rdist => &self.rdist,
        }
    }

    /// Overwrites one flat table entry. The search layer's enumeration
    /// odometer uses this before a model is shared; checkers never mutate.
    pub fn set_entry(&mut self, id: TableId, index: usize, value: usize) {
        assert!(value < self.module.order(), "table value out of range");
        let t = match id {
            TableId::Xi => &mut self.xi,
            TableId::Eta => &mut self.eta,
            TableId::G => &mut self.g,
            TableId::D => &mut self.d,
            TableId::Alpha => &mut self.alpha,
            TableId::LamU => &mut self.lam_u,
            TableId::RhoU => &mut self.rho_u,
            TableId::Ldist => &mut self.ldist,
            TableId::Rdist => &mut self.rdist,
        };
        t[index] = value;
    }

    #[inline]
    fn idx3(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.ring.order() + y) * self.ring.order() + z
    }

    #[inline]
    pub fn xi(&self, x: usize, y: usize, z: usize) -> usize {
        self.xi[self.idx3(x, y, z)]
    }

    #[inline]
    pub fn eta(&self, x: usize, y: usize) -> usize {
        self.eta[x * self.ring.order() + y]
    }

    #[inline]
    pub fn g(&self, x: usize) -> usize {
        self.g[x]
    }

    #[inline]
    pub fn d(&self, x: usize) -> usize {
        self.d[x]
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize, z: usize) -> usize {
        self.alpha[self.idx3(x, y, z)]
    }

    #[inline]
    pub fn lam_u(&self, x: usize) -> usize {
        self.lam_u[x]
    }

    #[inline]
    pub fn rho_u(&self, x: usize) -> usize {
        self.rho_u[x]
    }

    #[inline]
    pub fn ldist(&self, a: usize, x: usize, y: usize) -> usize {
        self.ldist[self.idx3(a, x, y)]
    }

    #[inline]
    pub fn rdist(&self, x: usize, y: usize, a: usize) -> usize {
        self.rdist[self.idx3(x, y, a)]
    }

    #[inline]
    pub fn identity(&self, object: usize) -> Morphism {
        Morphism {
            source: object,
            target: object,
            value: self.module.zero(),
        }
    }

    /// Groupoid composition, diagrammatic order: `f` then `g`.
    #[inline]
    pub fn compose(&self, f: Morphism, g: Morphism) -> Result<Morphism, ModelError> {
        if f.target != g.source {
            return Err(ModelError::ObjectMismatch {
                target: f.target,
                source: g.source,
            });
        }
        Ok(Morphism {
            source: f.source,
            target: g.target,
            value: self.module.add(f.value, g.value),
        })
    }

    #[inline]
    pub fn oplus_mor(&self, f: Morphism, g: Morphism) -> Morphism {
        Morphism {
            source: self.ring.add(f.source, g.source),
            target: self.ring.add(f.target, g.target),
            value: self.module.add(f.value, g.value),
        }
    }

    /// Tensor of morphisms: the value is transported by the actions of the
    /// factors' source objects, `s_f . value(g) + value(f) . s_g`.
    #[inline]
    pub fn otimes_mor(&self, f: Morphism, g: Morphism) -> Morphism {
        Morphism {
            source: self.ring.mul(f.source, g.source),
            target: self.ring.mul(f.target, g.target),
            value: self
                .module
                .add(self.module.left(f.source, g.value), self.module.right(f.value, g.source)),
        }
    }

    #[inline]
    pub fn invert(&self, f: Morphism) -> Morphism {
        Morphism {
            source: f.target,
            target: f.source,
            value: self.module.neg(f.value),
        }
    }

    /// Looks up a stored constraint morphism. Source and target objects are
    /// computed independently from the argument tuple and asserted equal;
    /// in a lawful ring they always are.
    pub fn constraint(&self, kind: ConstraintKind, args: &[usize]) -> Result<Morphism, ModelError> {
        if args.len() != kind.arity() {
            return Err(ModelError::ArityMismatch {
                kind: kind.token(),
                expected: kind.arity(),
                got: args.len(),
            });
        }
        for &a in args {
            if a >= self.ring.order() {
                return Err(ModelError::ArgOutOfRange {
                    value: a,
                    order: self.ring.order(),
                });
            }
        }
        let r = &self.ring;
        let (source, target, value) = match kind {
            ConstraintKind::APlus => {
                let (x, y, z) = (args[0], args[1], args[2]);
                (r.add(r.add(x, y), z), r.add(x, r.add(y, z)), self.xi(x, y, z))
            }
            ConstraintKind::C => {
                let (x, y) = (args[0], args[1]);
                (r.add(x, y), r.add(y, x), self.eta(x, y))
            }
            ConstraintKind::G => {
                let x = args[0];
                (r.add(r.zero(), x), x, self.g(x))
            }
            ConstraintKind::D => {
                let x = args[0];
                (r.add(x, r.zero()), x, self.d(x))
            }
            ConstraintKind::A => {
                let (x, y, z) = (args[0], args[1], args[2]);
                (r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)), self.alpha(x, y, z))
            }
            ConstraintKind::L1 => {
                let x = args[0];
                (r.mul(r.one(), x), x, self.lam_u(x))
            }
            ConstraintKind::R1 => {
                let x = args[0];
                (r.mul(x, r.one()), x, self.rho_u(x))
            }
            ConstraintKind::LDist => {
                let (a, x, y) = (args[0], args[1], args[2]);
                (
                    r.mul(a, r.add(x, y)),
                    r.add(r.mul(a, x), r.mul(a, y)),
                    self.ldist(a, x, y),
                )
            }
            ConstraintKind::RDist => {
                let (x, y, a) = (args[0], args[1], args[2]);
                (
                    r.mul(r.add(x, y), a),
                    r.add(r.mul(x, a), r.mul(y, a)),
                    self.rdist(x, y, a),
                )
            }
            ConstraintKind::LHat | ConstraintKind::RHat => {
                return Err(ModelError::DerivedConstraint(kind.token()))
            }
        };
        assert_eq!(
            source, target,
            "skeletal self-check: constraint endpoints disagree (non-lawful ring?)"
        );
        Ok(Morphism { source, target, value })
    }
}

/// A disagreement found while deriving a unit annihilator: for object
/// `object`, probe `probe` produced `candidate` where `canonical` was
/// expected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitConflict {
    pub object: usize,
    pub probe: usize,
    pub candidate: usize,
    pub canonical: usize,
}

/// One derived unit table (`lhat` or `rhat`) with its consistency evidence.
///
/// `conflicts` are probe disagreements in the defining square; `alt_conflicts`
/// come from the cross-check against the right-unit variant of the square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedUnit {
    pub table: Vec<usize>,
    pub consistent: bool,
    pub conflicts: Vec<UnitConflict>,
    pub alt_conflicts: Vec<UnitConflict>,
}

/// Both derived unit tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedUnits {
    pub lhat: DerivedUnit,
    pub rhat: DerivedUnit,
}

impl DerivedUnits {
    pub fn both_consistent(&self) -> bool {
        self.lhat.consistent && self.rhat.consistent
    }
}

/// Solves the left-unit square for the unique `lhat(a): a0 -> 0`.
///
/// For each object `a` and probe `x` the square forces
/// `candidate(a, x) = a.g(x) - L(a, 0, x) - g(a x)`; the table stores the
/// probe-0 value and `consistent` records whether all probes agree. The
/// `alt_conflicts` list cross-checks the same unit against the `d`-variant
/// square, `a.d(x) - L(a, x, 0) - d(a x)`.
pub fn derive_lhat(model: &SkeletalModel) -> DerivedUnit {
    let r = model.ring();
    let m = model.module();
    let candidate = |a: usize, x: usize| {
        let ax = r.mul(a, x);
        m.sub(
            m.sub(m.left(a, model.g(x)), model.ldist(a, r.zero(), x)),
            model.g(ax),
        )
    };
    let alt = |a: usize, x: usize| {
        let ax = r.mul(a, x);
        m.sub(
            m.sub(m.left(a, model.d(x)), model.ldist(a, x, r.zero())),
            model.d(ax),
        )
    };
    derive_unit(r.order(), candidate, alt)
}

/// Mirror of [`derive_lhat`] for `rhat(a): 0a -> 0`, solved from
/// `g(x).a - R(0, x, a) - g(x a)` with cross-check `d(x).a - R(x, 0, a) - d(x a)`.
pub fn derive_rhat(model: &SkeletalModel) -> DerivedUnit {
    let r = model.ring();
    let m = model.module();
    let candidate = |a: usize, x: usize| {
        let xa = r.mul(x, a);
        m.sub(
            m.sub(m.right(model.g(x), a), model.rdist(r.zero(), x, a)),
            model.g(xa),
        )
    };
    let alt = |a: usize, x: usize| {
        let xa = r.mul(x, a);
        m.sub(
            m.sub(m.right(model.d(x), a), model.rdist(x, r.zero(), a)),
            model.d(xa),
        )
    };
    derive_unit(r.order(), candidate, alt)
}

pub fn derive_units(model: &SkeletalModel) -> DerivedUnits {
    DerivedUnits {
        lhat: derive_lhat(model),
        rhat: derive_rhat(model),
    }
}

fn derive_unit(
    n: usize,
    candidate: impl Fn(usize, usize) -> usize,
    alt: impl Fn(usize, usize) -> usize,
) -> DerivedUnit {
    let mut table = Vec::with_capacity(n);
    let mut conflicts = Vec::new();
    let mut alt_conflicts = Vec::new();
    for a in 0..n {
        let canonical = candidate(a, 0);
        table.push(canonical);
        for x in 0..n {
            let c = candidate(a, x);
            if c != canonical {
                conflicts.push(UnitConflict {
                    object: a,
                    probe: x,
                    candidate: c,
                    canonical,
                });
            }
            let alt_c = alt(a, x);
            if alt_c != canonical {
                alt_conflicts.push(UnitConflict {
                    object: a,
                    probe: x,
                    candidate: alt_c,
                    canonical,
                });
            }
        }
    }
    let consistent = conflicts.is_empty();
    DerivedUnit {
        table,
        consistent,
        conflicts,
        alt_conflicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_ring, ring_bimodule};

    fn z2_model() -> SkeletalModel {
        let ring = cyclic_ring(2).unwrap();
        let module = ring_bimodule(&ring);
        SkeletalModel::trivial(ring, module)
    }

    #[test]
    fn compose_identity_and_inverse() {
        let model = z2_model();
        let f = Morphism { source: 1, target: 1, value: 1 };
        let id = model.identity(1);
        assert_eq!(model.compose(f, id).unwrap(), f);
        assert_eq!(model.compose(f, model.invert(f)).unwrap(), id);
        // 1 + 1 = 0 in the Z/2 module
        assert_eq!(model.compose(f, f).unwrap().value, 0);
    }

    #[test]
    fn compose_rejects_object_mismatch() {
        let model = z2_model();
        let f = Morphism { source: 0, target: 0, value: 0 };
        let g = Morphism { source: 1, target: 1, value: 0 };
        assert!(matches!(
            model.compose(f, g),
            Err(ModelError::ObjectMismatch { .. })
        ));
    }

    #[test]
    fn oplus_adds_sources_and_values() {
        let model = z2_model();
        let f = Morphism { source: 1, target: 1, value: 1 };
        let g = Morphism { source: 1, target: 1, value: 1 };
        let sum = model.oplus_mor(f, g);
        assert_eq!(sum, Morphism { source: 0, target: 0, value: 0 });
        let ids = model.oplus_mor(model.identity(1), model.identity(1));
        assert_eq!(ids, model.identity(0));
    }

    #[test]
    fn otimes_preserves_identities_and_scales() {
        let model = z2_model();
        assert_eq!(
            model.otimes_mor(model.identity(1), model.identity(1)),
            model.identity(1)
        );
        // id_A (*) f scales the value by the left action of A
        let f = Morphism { source: 1, target: 1, value: 1 };
        let t = model.otimes_mor(model.identity(1), f);
        assert_eq!(t, Morphism { source: 1, target: 1, value: 1 });
        let t0 = model.otimes_mor(model.identity(0), f);
        assert_eq!(t0, Morphism { source: 0, target: 0, value: 0 });
    }

    /// Both bifunctors preserve composition and identities; exhausted over
    /// every source pair and value quadruple of the Z/2 regular model.
    #[test]
    fn bifunctoriality_exhaustive_z2() {
        let model = z2_model();
        for sf in 0..2 {
            for sg in 0..2 {
                for vf in 0..2 {
                    for vf2 in 0..2 {
                        for vg in 0..2 {
                            for vg2 in 0..2 {
                                let f = Morphism { source: sf, target: sf, value: vf };
                                let f2 = Morphism { source: sf, target: sf, value: vf2 };
                                let g = Morphism { source: sg, target: sg, value: vg };
                                let g2 = Morphism { source: sg, target: sg, value: vg2 };
                                let ff2 = model.compose(f, f2).unwrap();
                                let gg2 = model.compose(g, g2).unwrap();
                                assert_eq!(
                                    model.oplus_mor(ff2, gg2),
                                    model
                                        .compose(model.oplus_mor(f, g), model.oplus_mor(f2, g2))
                                        .unwrap()
                                );
                                assert_eq!(
                                    model.otimes_mor(ff2, gg2),
                                    model
                                        .compose(model.otimes_mor(f, g), model.otimes_mor(f2, g2))
                                        .unwrap()
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invert_in_z3() {
        let ring = cyclic_ring(3).unwrap();
        let module = ring_bimodule(&ring);
        let model = SkeletalModel::trivial(ring, module);
        let f = Morphism { source: 1, target: 1, value: 2 };
        assert_eq!(model.invert(f).value, 1);
        assert_eq!(model.invert(model.identity(2)), model.identity(2));
    }

    #[test]
    fn constraint_lookup_and_objects() {
        let mut model = z2_model();
        let m = model.constraint(ConstraintKind::APlus, &[1, 0, 1]).unwrap();
        assert_eq!(m.source, 0);
        assert_eq!(m.value, 0);

        model.set_entry(TableId::Eta, 1 * 2 + 1, 1);
        let c = model.constraint(ConstraintKind::C, &[1, 1]).unwrap();
        assert_eq!(c, Morphism { source: 0, target: 0, value: 1 });

        assert!(matches!(
            model.constraint(ConstraintKind::C, &[1]),
            Err(ModelError::ArityMismatch { .. })
        ));
        assert!(matches!(
            model.constraint(ConstraintKind::G, &[7]),
            Err(ModelError::ArgOutOfRange { .. })
        ));
        assert!(matches!(
            model.constraint(ConstraintKind::LHat, &[1]),
            Err(ModelError::DerivedConstraint(_))
        ));
    }

    /// The distributor endpoints agree numerically because the ring
    /// distributes; checked over every Z/4 triple.
    #[test]
    fn ldist_endpoints_agree_over_z4() {
        let ring = cyclic_ring(4).unwrap();
        let module = ring_bimodule(&ring);
        let model = SkeletalModel::trivial(ring, module);
        for a in 0..4 {
            for x in 0..4 {
                for y in 0..4 {
                    let m = model.constraint(ConstraintKind::LDist, &[a, x, y]).unwrap();
                    assert_eq!(m.source, m.target);
                }
            }
        }
    }

    #[test]
    fn derive_lhat_trivial_model() {
        let model = z2_model();
        let unit = derive_lhat(&model);
        assert!(unit.consistent);
        assert!(unit.alt_conflicts.is_empty());
        assert_eq!(unit.table, vec![0, 0]);
    }

    #[test]
    fn derive_lhat_single_entry_inconsistency() {
        let mut model = z2_model();
        // L(1, 0, 1) = 1, everything else zero: probe x=1 disagrees with
        // probe x=0 for object a=1.
        model.set_entry(TableId::Ldist, (1 * 2 + 0) * 2 + 1, 1);
        let unit = derive_lhat(&model);
        assert!(!unit.consistent);
        assert_eq!(
            unit.conflicts,
            vec![UnitConflict { object: 1, probe: 1, candidate: 1, canonical: 0 }]
        );
    }

    #[test]
    fn derive_rhat_single_entry_inconsistency() {
        let mut model = z2_model();
        model.set_entry(TableId::Rdist, (0 * 2 + 1) * 2 + 1, 1);
        let unit = derive_rhat(&model);
        assert!(!unit.consistent);
        assert_eq!(
            unit.conflicts,
            vec![UnitConflict { object: 1, probe: 1, candidate: 1, canonical: 0 }]
        );
    }

    /// Over a commutative ring with mirrored distributor tables the two
    /// derived units coincide.
    #[test]
    fn mirrored_tables_give_equal_units() {
        let ring = cyclic_ring(4).unwrap();
        let module = ring_bimodule(&ring);
        let mut model = SkeletalModel::trivial(ring, module);
        let mut k = 1usize;
        for a in 0..4 {
            for x in 0..4 {
                for y in 0..4 {
                    let v = (k * 7 + 3) % 4;
                    k += 1;
                    model.set_entry(TableId::Ldist, (a * 4 + x) * 4 + y, v);
                    model.set_entry(TableId::Rdist, (x * 4 + y) * 4 + a, v);
                }
            }
        }
        for (x, v) in [(0, 1), (1, 3), (2, 0), (3, 2)] {
            model.set_entry(TableId::G, x, v);
        }
        let lhat = derive_lhat(&model);
        let rhat = derive_rhat(&model);
        assert_eq!(lhat.table, rhat.table);
        assert_eq!(lhat.consistent, rhat.consistent);
    }
}
