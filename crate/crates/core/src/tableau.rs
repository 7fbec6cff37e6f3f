//! Fillings of shapes by `1..n`: standardness, (cyclic) descents, rotation
//! by `k + T`, reading words and the correspondence `φ` between rotated
//! permutations and rotated tableaux of shape `λ^□`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{
    reduce_mod, DescentSet, Error, Partition, PermMultiset, Permutation, Result, Shape, MAX_SIZE,
};

pub type Cell = (usize, usize);

/// A filling of a [`Shape`] using each of `1..=n` exactly once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Shape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// `rows[r]` lists the entries of row `r` left to right, starting at the
    /// first column of that row in the shape.
    pub fn new(shape: Shape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::InvalidFilling(format!(
                "expected {} rows, found {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::InvalidFilling(format!(
                    "row {} has {} entries, shape needs {}",
                    r + 1,
                    row.len(),
                    shape.row_len(r)
                )));
            }
        }
        let n = shape.size();
        if n == 0 || n > MAX_SIZE {
            return Err(Error::UnsupportedSize(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidFilling(format!(
                    "entries must be 1..{n} each once, found {v} out of place"
                )));
            }
            seen[v] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// A filling of the straight shape given by the row lengths.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lambda = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(Shape::straight(lambda), rows)
    }

    /// A filling of `λ^□` with `box_entry` in the disconnected box and
    /// `rows` filling λ.
    pub fn boxed(box_entry: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lambda = Partition::new(rows.iter().map(Vec::len).collect())?;
        let shape = Shape::boxed(lambda)?;
        let mut all = vec![vec![box_entry]];
        all.extend(rows);
        Tableau::new(shape, all)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, (r, c): Cell) -> Option<usize> {
        let (start, _) = self.shape.row_range(r);
        self.rows
            .get(r)
            .and_then(|row| c.checked_sub(start).and_then(|i| row.get(i)))
            .copied()
    }

    pub(crate) fn set(&mut self, (r, c): Cell, v: usize) {
        let (start, _) = self.shape.row_range(r);
        self.rows[r][c - start] = v;
    }

    pub(crate) fn swap_cells(&mut self, a: Cell, b: Cell) {
        let (x, y) = (self.get(a).unwrap(), self.get(b).unwrap());
        self.set(a, y);
        self.set(b, x);
    }

    /// `positions()[v]` is the cell holding `v` (index 0 unused).
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![(0, 0); self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            let (start, _) = self.shape.row_range(r);
            for (i, &v) in row.iter().enumerate() {
                pos[v] = (r, start + i);
            }
        }
        pos
    }

    /// Rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        self.shape.cells().all(|cell| {
            let v = self.get(cell).unwrap();
            let ok_left = self
                .shape
                .left(cell)
                .is_none_or(|l| self.get(l).unwrap() < v);
            let ok_above = self
                .shape
                .above(cell)
                .is_none_or(|a| self.get(a).unwrap() < v);
            ok_left && ok_above
        })
    }

    /// All `k ∈ 1..=n` such that the filling increases along rows and
    /// columns for the order `k+1 < ... < n < 1 < ... < k`.
    pub fn rotation_witnesses(&self) -> Vec<usize> {
        let n = self.n();
        (1..=n)
            .filter(|&k| self.add_mod(-(k as i64)).is_standard())
            .collect()
    }

    pub fn is_rotated_standard(&self) -> bool {
        let n = self.n();
        (1..=n).any(|k| self.add_mod(-(k as i64)).is_standard())
    }

    /// `k + T`: add `k` modulo `n` to every entry.
    pub fn add_mod(&self, k: i64) -> Tableau {
        let n = self.n();
        let shift = reduce_mod(k, n);
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&v| (v - 1 + shift) % n + 1).collect())
                .collect(),
        }
    }

    /// `{i ∈ [n-1] : i+1 lies in a lower row than i}` for a standard tableau.
    pub fn descent_set(&self) -> Result<DescentSet> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        Ok(self.row_descents())
    }

    /// `{i ∈ [n-1] : i+1 lies in a lower row than i}` for any filling.
    pub fn row_descents(&self) -> DescentSet {
        self.cdes_rot().truncate(self.n() - 1)
    }

    /// `{i ∈ [n] : i+1 lies in a lower row than i}`, indices modulo `n`.
    /// Defined for any filling.
    pub fn cdes_rot(&self) -> DescentSet {
        let n = self.n();
        let pos = self.positions();
        let mut d = DescentSet::empty(n);
        for i in 1..=n {
            let next = i % n + 1;
            if pos[next].0 > pos[i].0 {
                d.insert(i);
            }
        }
        d
    }

    /// `{i ∈ [n] : i+1 strictly south of i, or in the same row and west of i}`.
    pub fn cdes_rot_prime(&self) -> DescentSet {
        let n = self.n();
        let pos = self.positions();
        let mut d = DescentSet::empty(n);
        for i in 1..=n {
            let (a, b) = (pos[i], pos[i % n + 1]);
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                d.insert(i);
            }
        }
        d
    }

    /// Rows read left to right, bottom row first.
    pub fn reading_word(&self) -> Permutation {
        let word = self.rows.iter().rev().flatten().copied().collect();
        Permutation::new(word).expect("tableau entries form a permutation")
    }

    pub fn inverse_reading_word(&self) -> Permutation {
        self.reading_word().inverse()
    }

    /// Entry of the disconnected box of a `λ^□` tableau.
    pub fn delta(&self) -> Result<usize> {
        let cell = self.shape.box_cell().ok_or(Error::NotBoxed)?;
        Ok(self.get(cell).unwrap())
    }

    /// Renders in English notation with the box of `λ^□` on its own
    /// indented line.
    pub fn to_ascii(&self) -> String {
        let width = digits(self.n());
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let (start, _) = self.shape.row_range(r);
            for _ in 0..start * (width + 1) {
                out.push(' ');
            }
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{v:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn digits(mut n: usize) -> usize {
    let mut d = 1;
    while n >= 10 {
        n /= 10;
        d += 1;
    }
    d
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        f.write_str("Tableau[")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str("]")
    }
}

/// All standard fillings of `shape`, sorted lexicographically by the
/// row-by-row (top to bottom) reading of the entries.
pub fn enumerate_syt(shape: &Shape) -> Vec<Tableau> {
    let n = shape.size();
    let mut work = Tableau {
        shape: shape.clone(),
        rows: shape
            .row_lengths()
            .into_iter()
            .map(|len| vec![0; len])
            .collect(),
    };
    let cells: Vec<Cell> = shape.cells().collect();
    let mut out = Vec::new();
    fill_next(&mut work, &cells, 1, n, &mut out);
    out.sort();
    out
}

fn fill_next(work: &mut Tableau, cells: &[Cell], v: usize, n: usize, out: &mut Vec<Tableau>) {
    if v > n {
        out.push(work.clone());
        return;
    }
    for &cell in cells {
        if work.get(cell) != Some(0) {
            continue;
        }
        let ready = |nb: Option<Cell>| nb.is_none_or(|c| work.get(c) != Some(0));
        if ready(work.shape.above(cell)) && ready(work.shape.left(cell)) {
            work.set(cell, v);
            fill_next(work, cells, v + 1, n, out);
            work.set(cell, 0);
        }
    }
}

/// The shape `λ^□` for `λ ⊢ n-1`.
pub fn boxed_shape(lambda: &Partition) -> Result<Shape> {
    Shape::boxed(lambda.clone())
}

/// `φ(τ)`: the tableau of shape `λ^□` whose reading word is `τ^{-1}`.
///
/// Only defined on `A_λ C_n`, i.e. when the result is `k + T` for a standard
/// `T` with `δ(T) = n`; anything else is rejected.
pub fn phi(tau: &Permutation, lambda: &Partition) -> Result<Tableau> {
    let shape = Shape::boxed(lambda.clone())?;
    if tau.n() != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: tau.n(),
        });
    }
    let word = tau.inverse();
    let mut letters = word.word().iter().copied();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
    for r in (0..shape.num_rows()).rev() {
        rows[r] = letters.by_ref().take(shape.row_len(r)).collect();
    }
    let t = Tableau::new(shape, rows)?;
    let k = t.delta()?;
    if !t.add_mod(-(k as i64)).is_standard() {
        return Err(Error::OutsideDomain(format!(
            "{tau} is not a horizontal rotation of an element of A_{lambda}"
        )));
    }
    Ok(t)
}

/// `A_λ`: inverse reading words of `SYT(λ)`, a subset of `S_{|λ|}`.
pub fn a_lambda(lambda: &Partition) -> Result<PermMultiset> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    let words: BTreeSet<Permutation> = enumerate_syt(&Shape::straight(lambda.clone()))
        .iter()
        .map(Tableau::inverse_reading_word)
        .collect();
    PermMultiset::from_perms(n, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// The running example: box 6 over rows 135 / 24.
    fn example_t() -> Tableau {
        Tableau::boxed(6, vec![vec![1, 3, 5], vec![2, 4]]).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(Tableau::straight(vec![vec![1, 1]]).is_err());
        assert!(Tableau::straight(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::boxed(4, vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&Shape::straight(part("2,1"))).len(), 2);
        assert_eq!(enumerate_syt(&Shape::straight(part("3,2"))).len(), 5);
        assert_eq!(enumerate_syt(&Shape::boxed(part("3,2")).unwrap()).len(), 30);
    }

    #[test]
    fn syt_order_is_lexicographic() {
        let all = enumerate_syt(&Shape::straight(part("2,1")));
        assert_eq!(all[0].rows(), [vec![1, 2], vec![3]]);
        assert_eq!(all[1].rows(), [vec![1, 3], vec![2]]);
    }

    #[test]
    fn descents_of_tableaux() {
        let row = Tableau::straight(vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(row.descent_set().unwrap().is_empty());
        let col = Tableau::straight(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(col.descent_set().unwrap().to_vec(), [1, 2]);
        assert_eq!(example_t().descent_set().unwrap().to_vec(), [1, 3]);
        assert_eq!(
            example_t().add_mod(3).descent_set(),
            Err(Error::NotStandard)
        );
    }

    #[test]
    fn add_mod_examples() {
        let t = example_t();
        assert_eq!(t.add_mod(0), t);
        assert_eq!(
            t.add_mod(2),
            Tableau::boxed(2, vec![vec![3, 5, 1], vec![4, 6]]).unwrap()
        );
        assert_eq!(t.add_mod(4).add_mod(2), t);
        assert_eq!(t.add_mod(-3), t.add_mod(3));
    }

    #[test]
    fn cyclic_descents_of_running_example() {
        let t = example_t();
        assert_eq!(t.cdes_rot().to_vec(), [1, 3, 6]);
        assert_eq!(t.add_mod(2).cdes_rot().to_vec(), [2, 3, 5]);
        assert_eq!(t.add_mod(3).cdes_rot().to_vec(), [3, 4, 6]);
        assert_eq!(t.cdes_rot_prime().to_vec(), [1, 3, 6]);
    }

    #[test]
    fn cdes_rot_prime_restricts_to_des_on_standard() {
        for t in enumerate_syt(&Shape::straight(part("3,2,1"))) {
            assert_eq!(t.cdes_rot_prime().truncate(5), t.descent_set().unwrap());
        }
    }

    #[test]
    fn reading_words() {
        let t = example_t();
        assert_eq!(t.reading_word().to_string(), "241356");
        assert_eq!(t.add_mod(3).reading_word().to_string(), "514623");
        assert_eq!(t.inverse_reading_word().to_string(), "314256");
        assert_eq!(t.add_mod(3).inverse_reading_word().to_string(), "256314");
        let row = Tableau::straight(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(row.reading_word(), Permutation::identity(3));
        assert_eq!(row.inverse_reading_word(), Permutation::identity(3));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(example_t().delta(), Ok(6));
        assert_eq!(example_t().add_mod(3).delta(), Ok(3));
        let straight = Tableau::straight(vec![vec![1, 2]]).unwrap();
        assert_eq!(straight.delta(), Err(Error::NotBoxed));
    }

    #[test]
    fn phi_examples() {
        let tau: Permutation = "256314".parse().unwrap();
        let r = phi(&tau, &part("3,2")).unwrap();
        assert_eq!(
            r,
            Tableau::boxed(3, vec![vec![4, 6, 2], vec![5, 1]]).unwrap()
        );
        let t = example_t();
        assert_eq!(phi(&t.inverse_reading_word(), &part("3,2")).unwrap(), t);
        // 123456 would put 1 in the box with 2..6 below it in the wrong order
        assert!(matches!(
            phi(&Permutation::identity(6), &part("3,2")),
            Err(Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn a_lambda_examples() {
        assert_eq!(a_lambda(&part("4")).unwrap().distinct(), 1);
        assert_eq!(
            a_lambda(&part("4"))
                .unwrap()
                .multiplicity(&Permutation::identity(4)),
            1
        );
        let a = a_lambda(&part("3,2")).unwrap();
        assert_eq!(a.distinct(), 5);
        assert_eq!(a.multiplicity(&"31425".parse().unwrap()), 1);
    }

    #[test]
    fn rotation_witness_on_straight_shapes_is_unique() {
        for t in enumerate_syt(&Shape::straight(part("3,2"))) {
            for k in 1..=5i64 {
                assert_eq!(t.add_mod(k).rotation_witnesses(), [k as usize]);
            }
        }
    }

    #[test]
    fn ascii_layout() {
        assert_eq!(example_t().to_ascii(), "      6\n1 3 5\n2 4\n");
    }
}
