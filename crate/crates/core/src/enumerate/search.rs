//! Constraint-propagating backtracking over the `2n²` table cells.
//!
//! The identity is fixed at 0 and the unit laws are seeded before search:
//! column 0 of the left table is `x`, row 0 of the right table is `x`, and
//! `x↼0` is tied to `0⇀x`. Every assignment wakes the diassociative
//! equations in which the cell occurs as an inner or outer product; an
//! equation whose one side is known and whose other side lacks only its
//! outer cell forces that cell. After propagation each element must still
//! have a feasible Liu inverse, and a unique feasible candidate is forced.
//!
//! Symmetry breaking follows the least-number heuristic: elements never
//! mentioned by an assignment are interchangeable, so a branch tries every
//! mentioned value and only the smallest unmentioned one. Final
//! deduplication happens on canonical forms, so this pruning only has to be
//! sound, not complete.

use std::sync::Arc;

use crate::table::Product;

const UNKNOWN: u8 = u8::MAX;

/// One side of an equation: `(x inner y) outer z` when `inner_first`,
/// otherwise `x outer (y inner z)`.
#[derive(Clone, Copy, Debug)]
struct Side {
    outer: Product,
    inner: Product,
    inner_first: bool,
}

const fn side(outer: Product, inner: Product, inner_first: bool) -> Side {
    Side {
        outer,
        inner,
        inner_first,
    }
}

use Product::{Left as L, Right as R};

/// The diassociative law as pairwise equalities. The transitive closures
/// `x⇀(y⇀z) = x⇀(y↼z)` and `(x⇀y)↼z = x↼(y↼z)` are included because they
/// propagate further than the chain alone.
const EQUATIONS: [(Side, Side); 7] = [
    (side(L, L, false), side(L, L, true)),
    (side(L, L, true), side(L, R, false)),
    (side(L, L, false), side(L, R, false)),
    (side(L, R, true), side(R, L, false)),
    (side(R, L, true), side(R, R, true)),
    (side(R, R, true), side(R, R, false)),
    (side(R, L, true), side(R, R, false)),
];

enum SideValue {
    Known(u8),
    /// Inner product known, outer cell unassigned.
    Pending(usize),
    Unknown,
}

/// Shared, immutable description of the problem.
#[derive(Debug)]
pub(crate) struct Problem {
    n: usize,
    /// Cells in branching order.
    order: Vec<usize>,
    /// `0⇀x` ↔ `x↼0`.
    link: Vec<Option<usize>>,
}

impl Problem {
    pub(crate) fn new(n: usize) -> Arc<Self> {
        assert!((1..=16).contains(&n), "search supports orders 1..=16");
        let nn = n * n;
        let mut link = vec![None; 2 * nn];
        for x in 0..n {
            link[x] = Some(nn + x * n);
            link[nn + x * n] = Some(x);
        }
        // cells whose indices stay small first, so the least-number bound bites
        let mut order: Vec<usize> = (0..2 * nn).collect();
        order.sort_by_key(|&c| {
            let (op, x, y) = decode(n, c);
            (x.max(y), x, y, op == R)
        });
        Arc::new(Self { n, order, link })
    }
}

#[inline]
fn decode(n: usize, cell: usize) -> (Product, usize, usize) {
    let nn = n * n;
    let (op, k) = if cell < nn { (L, cell) } else { (R, cell - nn) };
    (op, k / n, k % n)
}

#[derive(Clone)]
pub(crate) struct Search {
    problem: Arc<Problem>,
    cells: Vec<u8>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    mentioned: u32,
    /// Position in `problem.order` below which every cell is assigned.
    cursor: usize,
}

/// A complete assignment: `(left, right)` flattened row-major.
pub(crate) type Leaf = (Vec<usize>, Vec<usize>);

impl Search {
    /// The root state, or `None` if the seeded constraints already conflict.
    pub(crate) fn root(problem: Arc<Problem>) -> Option<Self> {
        let n = problem.n;
        let mut s = Self {
            cells: vec![UNKNOWN; 2 * n * n],
            trail: Vec::new(),
            queue: Vec::new(),
            mentioned: 1,
            cursor: 0,
            problem,
        };
        for x in 0..n {
            if !s.assign(s.idx(L, x, 0), x as u8) || !s.assign(s.idx(R, 0, x), x as u8) {
                return None;
            }
        }
        // seeded facts are invariant under identity-fixing relabelings
        s.mentioned = 1;
        if !s.propagate_all() {
            return None;
        }
        s.mentioned = 1;
        s.trail.clear();
        Some(s)
    }

    #[inline]
    fn n(&self) -> usize {
        self.problem.n
    }

    #[inline]
    fn idx(&self, op: Product, x: usize, y: usize) -> usize {
        let n = self.n();
        match op {
            L => x * n + y,
            R => n * n + x * n + y,
        }
    }

    #[inline]
    fn get(&self, op: Product, x: usize, y: usize) -> u8 {
        self.cells[self.idx(op, x, y)]
    }

    fn assign(&mut self, cell: usize, v: u8) -> bool {
        match self.cells[cell] {
            UNKNOWN => {}
            w => return w == v,
        }
        self.cells[cell] = v;
        self.trail.push(cell);
        self.queue.push(cell);
        let (_, x, y) = decode(self.n(), cell);
        self.mentioned |= 1 << x | 1 << y | 1 << v;
        match self.problem.link[cell] {
            Some(other) => self.assign(other, v),
            None => true,
        }
    }

    fn side(&self, s: Side, x: usize, y: usize, z: usize) -> SideValue {
        let (a, b) = if s.inner_first { (x, y) } else { (y, z) };
        let inner = self.get(s.inner, a, b);
        if inner == UNKNOWN {
            return SideValue::Unknown;
        }
        let (a, b) = if s.inner_first {
            (inner as usize, z)
        } else {
            (x, inner as usize)
        };
        let cell = self.idx(s.outer, a, b);
        match self.cells[cell] {
            UNKNOWN => SideValue::Pending(cell),
            v => SideValue::Known(v),
        }
    }

    fn check(&mut self, eq: usize, x: usize, y: usize, z: usize) -> bool {
        let (lhs, rhs) = EQUATIONS[eq];
        match (self.side(lhs, x, y, z), self.side(rhs, x, y, z)) {
            (SideValue::Known(a), SideValue::Known(b)) => a == b,
            (SideValue::Known(v), SideValue::Pending(c))
            | (SideValue::Pending(c), SideValue::Known(v)) => self.assign(c, v),
            _ => true,
        }
    }

    /// Re-examines every equation instance in which `cell` occurs.
    fn wake(&mut self, cell: usize) -> bool {
        let n = self.n();
        let (op, a, b) = decode(n, cell);
        for (eq, &(lhs, rhs)) in EQUATIONS.iter().enumerate() {
            for s in [lhs, rhs] {
                if s.inner == op {
                    for t in 0..n {
                        let ok = if s.inner_first {
                            self.check(eq, a, b, t)
                        } else {
                            self.check(eq, t, a, b)
                        };
                        if !ok {
                            return false;
                        }
                    }
                }
                if s.outer == op {
                    // instances whose inner product evaluates to the outer
                    // cell's argument
                    let target = if s.inner_first { a } else { b } as u8;
                    for p in 0..n {
                        for q in 0..n {
                            if self.get(s.inner, p, q) != target {
                                continue;
                            }
                            let ok = if s.inner_first {
                                self.check(eq, p, q, b)
                            } else {
                                self.check(eq, a, p, q)
                            };
                            if !ok {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(cell) = self.queue.pop() {
            if !self.wake(cell) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    /// Every `x` needs some `y` with `y⇀x = 0` and `x↼y = 0` still possible;
    /// a single candidate is forced.
    fn inverses(&mut self) -> bool {
        let n = self.n();
        for x in 1..n {
            let mut candidates = 0;
            let mut last = 0;
            for y in 0..n {
                let l = self.get(L, y, x);
                let r = self.get(R, x, y);
                if (l == UNKNOWN || l == 0) && (r == UNKNOWN || r == 0) {
                    candidates += 1;
                    last = y;
                }
            }
            match candidates {
                0 => return false,
                1 => {
                    let (lc, rc) = (self.idx(L, last, x), self.idx(R, x, last));
                    if !self.assign(lc, 0) || !self.assign(rc, 0) {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn propagate_all(&mut self) -> bool {
        loop {
            if !self.propagate() {
                return false;
            }
            let before = self.trail.len();
            if !self.inverses() {
                self.queue.clear();
                return false;
            }
            if self.trail.len() == before {
                return true;
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().expect("trail entry");
            self.cells[cell] = UNKNOWN;
        }
        self.queue.clear();
    }

    fn next_cell(&mut self) -> Option<usize> {
        let order = &self.problem.order;
        while self.cursor < order.len() && self.cells[order[self.cursor]] != UNKNOWN {
            self.cursor += 1;
        }
        order.get(self.cursor).copied()
    }

    fn leaf(&self) -> Leaf {
        let nn = self.n() * self.n();
        let cells: Vec<usize> = self.cells.iter().map(|&v| v as usize).collect();
        (cells[..nn].to_vec(), cells[nn..].to_vec())
    }

    /// Depth-first search. At `split_depth` the current state is handed to
    /// `on_split` instead of being explored; complete assignments go to
    /// `on_leaf`.
    pub(crate) fn run(
        &mut self,
        depth: usize,
        split_depth: Option<usize>,
        on_split: &mut dyn FnMut(Search),
        on_leaf: &mut dyn FnMut(Leaf),
    ) {
        let Some(cell) = self.next_cell() else {
            on_leaf(self.leaf());
            return;
        };
        if split_depth == Some(depth) {
            on_split(self.clone());
            return;
        }
        let n = self.n();
        let (_, x, y) = decode(n, cell);
        let base = self.mentioned | 1 << x | 1 << y;
        let fresh = (0..n).find(|&v| base >> v & 1 == 0);
        let cursor = self.cursor;
        for v in 0..n {
            if base >> v & 1 == 0 && Some(v) != fresh {
                continue;
            }
            let mark = self.trail.len();
            self.mentioned = base;
            if self.assign(cell, v as u8) && self.propagate_all() {
                self.run(depth + 1, split_depth, on_split, on_leaf);
            }
            self.undo_to(mark);
            self.cursor = cursor;
        }
        self.mentioned = base;
    }
}
