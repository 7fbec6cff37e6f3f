use alloc::format;
use alloc::vec::Vec;

use crate::tableau::Cell;
use crate::{Error, Result, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    North,
    West,
    South,
    East,
}

/// One switch performed by an elementary step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// The short (for `jdt`) or tall (for `ijdt`) entry that moved.
    pub entry: usize,
    /// The neighbour it was switched with.
    pub partner: usize,
    pub direction: Direction,
    pub from: Cell,
    pub to: Cell,
}

/// Every elementary step of one `jdt` run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningTrace {
    pub initial: Tableau,
    pub steps: Vec<Step>,
    pub result: Tableau,
}

impl StraighteningTrace {
    /// The shift `k` with `initial = k + T`, i.e. `δ(initial) mod n`.
    pub fn shift(&self) -> usize {
        self.initial
            .delta()
            .map(|d| d % self.initial.n())
            .unwrap_or(0)
    }

    /// Moving entries `1, ..., k-1`.
    pub fn is_moving(&self, v: usize) -> bool {
        v >= 1 && v < self.shift()
    }

    /// Non-moving entries `k+1, ..., n`.
    pub fn is_non_moving(&self, v: usize) -> bool {
        v > self.shift() && v <= self.initial.n()
    }

    /// Tableaux before each step, followed by the result.
    pub fn states(&self) -> Vec<Tableau> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut t = self.initial.clone();
        out.push(t.clone());
        for s in &self.steps {
            t.swap_cells(s.from, s.to);
            out.push(t.clone());
        }
        out
    }
}

fn short_step(t: &Tableau) -> Option<Step> {
    let shape = t.shape();
    let pos = t.positions();
    for (v, &cell) in pos.iter().enumerate().skip(1) {
        let above = shape
            .above(cell)
            .map(|c| (c, t.get(c).unwrap(), Direction::North));
        let left = shape
            .left(cell)
            .map(|c| (c, t.get(c).unwrap(), Direction::West));
        let larger = [above, left]
            .into_iter()
            .flatten()
            .filter(|&(_, w, _)| w > v)
            .max_by_key(|&(_, w, _)| w);
        if let Some((to, partner, direction)) = larger {
            return Some(Step {
                entry: v,
                partner,
                direction,
                from: cell,
                to,
            });
        }
    }
    None
}

fn tall_step(t: &Tableau) -> Option<Step> {
    let shape = t.shape();
    let pos = t.positions();
    for (v, &cell) in pos.iter().enumerate().skip(1).rev() {
        let below = shape
            .below(cell)
            .map(|c| (c, t.get(c).unwrap(), Direction::South));
        let right = shape
            .right(cell)
            .map(|c| (c, t.get(c).unwrap(), Direction::East));
        let smaller = [below, right]
            .into_iter()
            .flatten()
            .filter(|&(_, w, _)| w < v)
            .min_by_key(|&(_, w, _)| w);
        if let Some((to, partner, direction)) = smaller {
            return Some(Step {
                entry: v,
                partner,
                direction,
                from: cell,
                to,
            });
        }
    }
    None
}

/// One step of `jdt`: switch the minimal short entry with the larger of its
/// neighbours above and to the left.
pub fn elementary_step(t: &Tableau) -> Result<Tableau> {
    let step = short_step(t).ok_or(Error::NoStep)?;
    let mut out = t.clone();
    out.swap_cells(step.from, step.to);
    Ok(out)
}

/// One step of `ijdt`: switch the maximal tall entry with the smaller of its
/// neighbours below and to the right.
pub fn elementary_step_inv(t: &Tableau) -> Result<Tableau> {
    let step = tall_step(t).ok_or(Error::NoStep)?;
    let mut out = t.clone();
    out.swap_cells(step.from, step.to);
    Ok(out)
}

fn step_limit(n: usize) -> usize {
    n * n
}

/// Straightens `k + T` (`T ∈ SYT(λ^□)`, `δ(T) = n`) into the standard
/// tableau `jdt(k + T)`, which has `δ = k`.
pub fn jdt(r: &Tableau) -> Result<(Tableau, StraighteningTrace)> {
    let n = r.n();
    let k = r.delta()? % n;
    if !r.add_mod(-(k as i64)).is_standard() {
        return Err(Error::OutsideDomain(format!(
            "{r:?} is not k + T for a standard T with δ(T) = n"
        )));
    }
    let mut t = r.clone();
    let mut steps = Vec::new();
    while let Some(step) = short_step(&t) {
        if steps.len() == step_limit(n) {
            return Err(Error::StepLimitExceeded(step_limit(n)));
        }
        t.swap_cells(step.from, step.to);
        steps.push(step);
    }
    let trace = StraighteningTrace {
        initial: r.clone(),
        steps,
        result: t.clone(),
    };
    Ok((t, trace))
}

/// Straightens `-k + P` (`P ∈ SYT(λ^□)`, `δ(P) = k`) back to a standard
/// tableau with `δ = n`.
pub fn ijdt(r: &Tableau) -> Result<Tableau> {
    let n = r.n();
    if r.delta()? != n {
        return Err(Error::OutsideDomain(format!(
            "{r:?} does not hold n in its box"
        )));
    }
    if !(0..n).any(|k| r.add_mod(k as i64).is_standard()) {
        return Err(Error::OutsideDomain(format!(
            "{r:?} is not -k + P for a standard P"
        )));
    }
    let mut t = r.clone();
    let mut count = 0;
    while let Some(step) = tall_step(&t) {
        if count == step_limit(n) {
            return Err(Error::StepLimitExceeded(step_limit(n)));
        }
        t.swap_cells(step.from, step.to);
        count += 1;
    }
    Ok(t)
}

/// `jdt⁻¹(P) = δ(P) + ijdt(-δ(P) + P)`.
pub fn jdt_inverse(p: &Tableau) -> Result<Tableau> {
    let n = p.n();
    let k = p.delta()? % n;
    if !p.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(ijdt(&p.add_mod(-(k as i64)))?.add_mod(k as i64))
}

/// A failed check on a `jdt` trace.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TraceViolation {
    #[error("state {state}: restriction to moving entries is not standard")]
    MovingNotStandard { state: usize },
    #[error("state {state}: restriction to non-moving entries is not standard")]
    NonMovingNotStandard { state: usize },
    #[error("step {step} switches {entry} and {partner}, not a moving and a non-moving entry")]
    NotMixedSwitch {
        step: usize,
        entry: usize,
        partner: usize,
    },
    #[error("step {step} moves {entry} after a larger moving entry")]
    OutOfOrder { step: usize, entry: usize },
    #[error("step {step}: entries below {entry} do not form a left-justified standard tableau")]
    NotLeftJustified { step: usize, entry: usize },
    #[error("step {step} is not undone by an inverse elementary step")]
    NotReversed { step: usize },
    #[error("result is not standard with δ = k")]
    BadResult,
}

/// Replays a `jdt` trace and checks, at every intermediate state: both
/// restrictions (moving / non-moving entries) are standard; each step
/// switches a moving with a non-moving entry; moving entries are handled in
/// increasing order; the entries below the one moving form a left-justified
/// standard tableau; and one inverse elementary step on `-k + Q'` gives
/// back `-k + Q`.
pub fn check_jdt_trace(trace: &StraighteningTrace) -> core::result::Result<(), TraceViolation> {
    let k = trace.shift();
    let states = trace.states();
    for (idx, q) in states.iter().enumerate() {
        if !restriction_standard(q, |v| trace.is_moving(v)) {
            return Err(TraceViolation::MovingNotStandard { state: idx });
        }
        if !restriction_standard(q, |v| trace.is_non_moving(v)) {
            return Err(TraceViolation::NonMovingNotStandard { state: idx });
        }
    }
    let mut last_entry = 0;
    for (idx, step) in trace.steps.iter().enumerate() {
        let (a, b) = (step.entry, step.partner);
        let mixed = (trace.is_moving(a) && trace.is_non_moving(b))
            || (trace.is_moving(b) && trace.is_non_moving(a));
        if !mixed {
            return Err(TraceViolation::NotMixedSwitch {
                step: idx,
                entry: a,
                partner: b,
            });
        }
        if a < last_entry {
            return Err(TraceViolation::OutOfOrder {
                step: idx,
                entry: a,
            });
        }
        last_entry = a;
        if !left_justified_below(&states[idx], a) {
            return Err(TraceViolation::NotLeftJustified {
                step: idx,
                entry: a,
            });
        }
        let back = elementary_step_inv(&states[idx + 1].add_mod(-(k as i64)));
        if back.as_ref() != Ok(&states[idx].add_mod(-(k as i64))) {
            return Err(TraceViolation::NotReversed { step: idx });
        }
    }
    let result = &trace.result;
    if !result.is_standard() || result.delta().map(|d| d % result.n()) != Ok(k) {
        return Err(TraceViolation::BadResult);
    }
    Ok(())
}

/// No two selected entries with the smaller one weakly south-east of the larger.
fn restriction_standard(t: &Tableau, selected: impl Fn(usize) -> bool) -> bool {
    let pos = t.positions();
    let chosen: Vec<usize> = (1..=t.n()).filter(|&v| selected(v)).collect();
    chosen.iter().enumerate().all(|(i, &a)| {
        chosen[i + 1..].iter().all(|&b| {
            let (pa, pb) = (pos[a], pos[b]);
            !(pa.0 >= pb.0 && pa.1 >= pb.1)
        })
    })
}

/// Entries `1..i-1` occupy a Young diagram anchored at the top-left cell of
/// λ (row 1, column 0) and increase along its rows and columns.
fn left_justified_below(t: &Tableau, i: usize) -> bool {
    let pos = t.positions();
    let rows = t.shape().num_rows();
    let mut lengths = alloc::vec![0usize; rows];
    let mut cols: Vec<Vec<usize>> = alloc::vec![Vec::new(); rows];
    for &(r, c) in &pos[1..i] {
        if r == 0 {
            return false;
        }
        lengths[r] += 1;
        cols[r].push(c);
    }
    for r in 1..rows {
        cols[r].sort_unstable();
        if cols[r].iter().enumerate().any(|(j, &c)| c != j) {
            return false;
        }
        if r > 1 && lengths[r] > lengths[r - 1] {
            return false;
        }
    }
    // increasing rows and columns inside the diagram
    (1..i).all(|v| {
        let cell = pos[v];
        let below_ok = |nb: Option<Cell>| nb.is_none_or(|c| t.get(c).unwrap() < v);
        below_ok(t.shape().above(cell)) && below_ok(t.shape().left(cell))
    })
}
