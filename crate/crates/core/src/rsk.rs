//! Robinson–Schensted row insertion.

use alloc::vec::Vec;

use crate::{Permutation, Tableau};

/// Insertion and recording tableaux `(P_π, Q_π)`.
pub fn rsk(pi: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in pi.word().iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(Vec::from([carry]));
                q.push(Vec::from([step + 1]));
                break;
            }
            // rows are increasing, so the first larger entry is found by bisection
            let idx = p[row].partition_point(|&y| y < carry);
            if idx == p[row].len() {
                p[row].push(carry);
                q[row].push(step + 1);
                break;
            }
            core::mem::swap(&mut p[row][idx], &mut carry);
            row += 1;
        }
    }
    (
        Tableau::straight(p).expect("insertion tableau is a valid filling"),
        Tableau::straight(q).expect("recording tableau is a valid filling"),
    )
}
