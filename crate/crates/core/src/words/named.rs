//! Named braid words: `x_i`, `y_i`, `P`, `β_n`, `δ_i` and the commutator.

use super::{Gen, Word, WordError};

/// Which of the two strand-moving families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

fn check_strand(i: usize, n: usize) -> Result<(), WordError> {
    if i == 0 || i > n {
        return Err(WordError::IndexOutOfRange { index: i, strands: n });
    }
    Ok(())
}

/// `x_i` or `y_i` expanded down to `x_1`, `y_1` through
/// `x_{i+1} = σ_i^-1 x_i σ_i^-1` and `y_{i+1} = σ_i y_i σ_i`.
pub fn gen_xy(i: usize, axis: Axis, n: usize) -> Result<Word, WordError> {
    check_strand(i, n)?;
    let mut letters = vec![match axis {
        Axis::X => Gen::X,
        Axis::Y => Gen::Y,
    }];
    for j in 1..i {
        let side = match axis {
            Axis::X => Gen::sigma_inv(j as u16),
            Axis::Y => Gen::sigma(j as u16),
        };
        letters.insert(0, side);
        letters.push(side);
    }
    Word::new(&letters, n)
}

/// `σ_1 σ_2 ⋯ σ_{n-1} σ_{n-1} ⋯ σ_2 σ_1`
pub fn beta(n: usize) -> Result<Word, WordError> {
    check_strand(1, n)?;
    let up = (1..n).map(|i| Gen::sigma(i as u16));
    let down = (1..n).rev().map(|i| Gen::sigma(i as u16));
    Word::new(&up.chain(down).collect::<Vec<_>>(), n)
}

/// `δ_i = σ_{i-1} ⋯ σ_1 σ_1 ⋯ σ_{i-1}`; empty for `i = 1`.
pub fn delta(i: usize, n: usize) -> Result<Word, WordError> {
    check_strand(i, n)?;
    let down = (1..i).rev().map(|j| Gen::sigma(j as u16));
    let up = (1..i).map(|j| Gen::sigma(j as u16));
    Word::new(&down.chain(up).collect::<Vec<_>>(), n)
}

/// `x_1 y_1 x_1^-1 y_1^-1`
pub fn commutator_x1y1(n: usize) -> Result<Word, WordError> {
    Word::new(&[Gen::X, Gen::Y, Gen::X_INV, Gen::Y_INV], n)
}

/// `P = σ_{n-1}^-1 ⋯ σ_1^-1 x_1 y_1 x_1^-1 y_1^-1 σ_1^-1 ⋯ σ_{n-1}^-1`, the
/// braid taking strand `n` once around the base string.
pub fn p_word(n: usize) -> Result<Word, WordError> {
    check_strand(1, n)?;
    let mut letters: Vec<Gen> = (1..n).rev().map(|i| Gen::sigma_inv(i as u16)).collect();
    letters.extend([Gen::X, Gen::Y, Gen::X_INV, Gen::Y_INV]);
    letters.extend((1..n).map(|i| Gen::sigma_inv(i as u16)));
    Word::new(&letters, n)
}

/// Selector for [`named_word`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    P,
    Beta,
    Delta(usize),
    CommutatorX1Y1,
}

pub fn named_word(which: Named, n: usize) -> Result<Word, WordError> {
    match which {
        Named::P => p_word(n),
        Named::Beta => beta(n),
        Named::Delta(i) => delta(i, n),
        Named::CommutatorX1Y1 => commutator_x1y1(n),
    }
}
