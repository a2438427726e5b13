//! Finite unital rings and finite bimodules as explicit operation tables.
//!
//! Elements are dense indices `0..n-1`; every operation is a table lookup, so
//! all downstream coherence checks are branch-free loops. Additive inverses
//! are stored as a vector rather than recomputed on demand.

use thiserror::Error;

/// Largest ring or module order accepted by constructors. Diagram checks
/// iterate over up to four ring variables times the module order; the cap
/// keeps worst cases at desk scale.
pub const MAX_ORDER: usize = 64;

/// Structural problems with a table: wrong shape or an out-of-range index.
/// Law violations are not errors; they go in a [`ValidationReport`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("order {0} outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("{table} table has wrong shape (expected {expected} entries, got {got})")]
    BadShape {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{table} entry {index} is {value}, out of range for order {order}")]
    IndexOutOfRange {
        table: &'static str,
        index: usize,
        value: usize,
        order: usize,
    },
}

/// A single violated law together with the witnessing element tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

/// Outcome of an exhaustive law check: passes iff `violations` is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<LawViolation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, law: &'static str, witness: &[usize]) {
        self.violations.push(LawViolation {
            law,
            witness: witness.to_vec(),
        });
    }
}

/// A finite unital ring given by addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
}

impl FiniteRing {
    /// Builds a ring from raw tables, checking shapes and index ranges only.
    /// The additive-inverse vector is derived from the addition table; an
    /// element without an inverse keeps itself as a placeholder, which
    /// [`validate_ring`] then reports.
    pub fn new(
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self, ShapeError> {
        if order == 0 || order > MAX_ORDER {
            return Err(ShapeError::OrderOutOfRange(order));
        }
        check_table("add", &add, order * order, order)?;
        check_table("mul", &mul, order * order, order)?;
        check_index("zero", 0, zero, order)?;
        check_index("one", 0, one, order)?;
        let neg = (0..order)
            .map(|x| (0..order).find(|&y| add[x * order + y] == zero).unwrap_or(x))
            .collect();
        Ok(FiniteRing {
            order,
            add,
            mul,
            zero,
            one,
            neg,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }
}

/// The cyclic ring `Z/n` with standard arithmetic tables.
pub fn cyclic_ring(n: usize) -> Result<FiniteRing, ShapeError> {
    if n == 0 || n > MAX_ORDER {
        return Err(ShapeError::OrderOutOfRange(n));
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            add.push((x + y) % n);
            mul.push((x * y) % n);
        }
    }
    FiniteRing::new(n, add, mul, 0, 1 % n)
}

/// A finite abelian group with left and right ring actions.
///
/// `left_action` is indexed `[ring][module]`, `right_action` `[module][ring]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBimodule {
    order: usize,
    ring_order: usize,
    add: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
    left_action: Vec<usize>,
    right_action: Vec<usize>,
}

impl FiniteBimodule {
    pub fn new(
        ring_order: usize,
        order: usize,
        add: Vec<usize>,
        zero: usize,
        left_action: Vec<usize>,
        right_action: Vec<usize>,
    ) -> Result<Self, ShapeError> {
        if order == 0 || order > MAX_ORDER {
            return Err(ShapeError::OrderOutOfRange(order));
        }
        check_table("module add", &add, order * order, order)?;
        check_index("module zero", 0, zero, order)?;
        check_table("left_action", &left_action, ring_order * order, order)?;
        check_table("right_action", &right_action, order * ring_order, order)?;
        let neg = (0..order)
            .map(|u| (0..order).find(|&v| add[u * order + v] == zero).unwrap_or(u))
            .collect();
        Ok(FiniteBimodule {
            order,
            ring_order,
            add,
            zero,
            neg,
            left_action,
            right_action,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, u: usize, v: usize) -> usize {
        self.add[u * self.order + v]
    }

    #[inline]
    pub fn neg(&self, u: usize) -> usize {
        self.neg[u]
    }

    /// Subtraction `u - v`, used when solving diagram equations for a
    /// single unknown morphism value.
    #[inline]
    pub fn sub(&self, u: usize, v: usize) -> usize {
        self.add(u, self.neg(v))
    }

    /// Left action `x . u` of a ring element on a module element.
    #[inline]
    pub fn left(&self, x: usize, u: usize) -> usize {
        self.left_action[x * self.order + u]
    }

    /// Right action `u . x`.
    #[inline]
    pub fn right(&self, u: usize, x: usize) -> usize {
        self.right_action[u * self.ring_order + x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn left_table(&self) -> &[usize] {
        &self.left_action
    }

    pub fn right_table(&self) -> &[usize] {
        &self.right_action
    }
}

/// The regular bimodule: the additive group of `R` acting on itself by
/// ring multiplication on both sides.
pub fn ring_bimodule(ring: &FiniteRing) -> FiniteBimodule {
    let n = ring.order();
    let mut left = Vec::with_capacity(n * n);
    let mut right = Vec::with_capacity(n * n);
    for x in 0..n {
        for u in 0..n {
            left.push(ring.mul(x, u)); // [ring][module]
        }
    }
    for u in 0..n {
        for x in 0..n {
            right.push(ring.mul(u, x)); // [module][ring]
        }
    }
    FiniteBimodule::new(n, n, ring.add_table().to_vec(), ring.zero(), left, right)
        .expect("regular bimodule tables are well-shaped by construction")
}

/// Exhaustively checks every ring law and reports each failure with a witness.
pub fn validate_ring(ring: &FiniteRing) -> ValidationReport {
    let n = ring.order();
    let mut report = ValidationReport::default();
    for x in 0..n {
        for y in 0..n {
            if ring.add(x, y) != ring.add(y, x) {
                report.record("additive commutativity", &[x, y]);
            }
            for z in 0..n {
                if ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z)) {
                    report.record("additive associativity", &[x, y, z]);
                }
                if ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z)) {
                    report.record("multiplicative associativity", &[x, y, z]);
                }
                if ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y), ring.mul(x, z)) {
                    report.record("left distributivity", &[x, y, z]);
                }
                if ring.mul(ring.add(x, y), z) != ring.add(ring.mul(x, z), ring.mul(y, z)) {
                    report.record("right distributivity", &[x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        if ring.add(ring.zero(), x) != x || ring.add(x, ring.zero()) != x {
            report.record("additive identity", &[x]);
        }
        if ring.add(x, ring.neg(x)) != ring.zero() {
            report.record("additive inverse", &[x]);
        }
        if ring.mul(ring.one(), x) != x || ring.mul(x, ring.one()) != x {
            report.record("multiplicative identity", &[x]);
        }
    }
    report
}

/// Exhaustively checks the abelian-group and bimodule action laws.
pub fn validate_bimodule(ring: &FiniteRing, module: &FiniteBimodule) -> ValidationReport {
    let n = ring.order();
    let m = module.order();
    let mut report = ValidationReport::default();
    for u in 0..m {
        for v in 0..m {
            if module.add(u, v) != module.add(v, u) {
                report.record("module additive commutativity", &[u, v]);
            }
            for w in 0..m {
                if module.add(module.add(u, v), w) != module.add(u, module.add(v, w)) {
                    report.record("module additive associativity", &[u, v, w]);
                }
            }
        }
        if module.add(module.zero(), u) != u {
            report.record("module additive identity", &[u]);
        }
        if module.add(u, module.neg(u)) != module.zero() {
            report.record("module additive inverse", &[u]);
        }
        if module.left(ring.one(), u) != u {
            report.record("left action unital", &[u]);
        }
        if module.right(u, ring.one()) != u {
            report.record("right action unital", &[u]);
        }
    }
    for x in 0..n {
        for u in 0..m {
            for y in 0..n {
                if module.left(ring.add(x, y), u) != module.add(module.left(x, u), module.left(y, u)) {
                    report.record("left action additive in ring argument", &[x, y, u]);
                }
                if module.right(u, ring.add(x, y)) != module.add(module.right(u, x), module.right(u, y)) {
                    report.record("right action additive in ring argument", &[u, x, y]);
                }
                if module.left(ring.mul(x, y), u) != module.left(x, module.left(y, u)) {
                    report.record("left action associative", &[x, y, u]);
                }
                if module.right(u, ring.mul(x, y)) != module.right(module.right(u, x), y) {
                    report.record("right action associative", &[u, x, y]);
                }
                if module.right(module.left(x, u), y) != module.left(x, module.right(u, y)) {
                    report.record("actions commute", &[x, u, y]);
                }
            }
            for v in 0..m {
                if module.left(x, module.add(u, v)) != module.add(module.left(x, u), module.left(x, v)) {
                    report.record("left action additive in module argument", &[x, u, v]);
                }
                if module.right(module.add(u, v), x) != module.add(module.right(u, x), module.right(v, x)) {
                    report.record("right action additive in module argument", &[u, v, x]);
                }
            }
        }
    }
    report
}

fn check_table(
    name: &'static str,
    table: &[usize],
    expected: usize,
    order: usize,
) -> Result<(), ShapeError> {
    if table.len() != expected {
        return Err(ShapeError::BadShape {
            table: name,
            expected,
            got: table.len(),
        });
    }
    for (index, &value) in table.iter().enumerate() {
        check_index(name, index, value, order)?;
    }
    Ok(())
}

fn check_index(
    name: &'static str,
    index: usize,
    value: usize,
    order: usize,
) -> Result<(), ShapeError> {
    if value >= order {
        Err(ShapeError::IndexOutOfRange {
            table: name,
            index,
            value,
            order,
        })
    } else {
        Ok(())
    }
}
