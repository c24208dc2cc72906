//! Block matrices `W` with `W² = 4I` on closed candles.
//!
//! With vertices grouped into blocks `{2i−1, 2i}` (1-based), `H_k` is the cycle `C_k` with
//! every vertex replaced by a non-adjacent pair, so a `k × k` grid of `2 × 2` blocks with
//! nonzero blocks exactly on cycle-adjacent positions fits `H_k`.

use serde::{Deserialize, Serialize};

use super::WitnessError;
use crate::numlin::{ExactMatrix, Packed, QuadElem};
use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Block {
    /// `[[-1, 1], [1, -1]]`
    R,
    /// `[[1, 1], [-1, -1]]`
    S,
    /// Transpose of `S`.
    St,
    /// All ones.
    J,
    /// Zero.
    O,
}

impl Block {
    pub fn entries(self) -> [[i64; 2]; 2] {
        match self {
            Block::R => [[-1, 1], [1, -1]],
            Block::S => [[1, 1], [-1, -1]],
            Block::St => [[1, -1], [1, -1]],
            Block::J => [[1, 1], [1, 1]],
            Block::O => [[0, 0], [0, 0]],
        }
    }

    pub fn transpose(self) -> Block {
        match self {
            Block::S => Block::St,
            Block::St => Block::S,
            other => other,
        }
    }
}

/// Assignment of blocks to a `k × k` grid; block `(j, i)` is the transpose of block `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecipe {
    pub k: usize,
    pub grid: Vec<Vec<Block>>,
}

impl BlockRecipe {
    fn blank(k: usize) -> Self {
        BlockRecipe { k, grid: vec![vec![Block::O; k]; k] }
    }

    /// Places `b` at 1-based block position `(i, j)` and its transpose at `(j, i)`.
    fn put(&mut self, i: usize, j: usize, b: Block) {
        self.grid[i - 1][j - 1] = b;
        self.grid[j - 1][i - 1] = b.transpose();
    }

    /// Recipe for `H_k`, `k >= 3`.
    ///
    /// Even `k`: `R` at `(1,2), (3,4), ..., (k−1,k)`, `J` at `(2,3), ..., (k−2,k−1)` and `(1,k)`.
    /// Odd `k >= 5`: `J` at `(1,2), (3,4), ..., (k−4,k−3)`; `R` at `(2,3), ..., (k−5,k−4)` and
    /// `(k−2,k−1)`; `S` at `(1,k)` and `(k−3,k−2)`; `Sᵀ` at `(k−1,k)`.
    /// `k = 3`: `J` at `(1,2)`, `R` at `(2,3)`, `S` at `(1,3)`.
    pub fn for_candle(k: usize) -> Result<Self, WitnessError> {
        if k < 3 {
            return Err(WitnessError::Parameter(format!("closed candle needs k >= 3, got {k}")));
        }
        let mut r = BlockRecipe::blank(k);
        if k == 3 {
            r.put(1, 2, Block::J);
            r.put(2, 3, Block::R);
            r.put(1, 3, Block::S);
        } else if k % 2 == 0 {
            for i in (1..k).step_by(2) {
                r.put(i, i + 1, Block::R);
            }
            for i in (2..k - 1).step_by(2) {
                r.put(i, i + 1, Block::J);
            }
            r.put(1, k, Block::J);
        } else {
            for i in (1..=k - 4).step_by(2) {
                r.put(i, i + 1, Block::J);
            }
            for i in (2..=k.saturating_sub(5)).step_by(2) {
                r.put(i, i + 1, Block::R);
            }
            r.put(k - 2, k - 1, Block::R);
            r.put(1, k, Block::S);
            r.put(k - 3, k - 2, Block::S);
            r.put(k - 1, k, Block::St);
        }
        Ok(r)
    }

    /// The assembled `2k × 2k` integer matrix, as full rows.
    pub fn assemble(&self) -> Vec<Vec<i64>> {
        let n = 2 * self.k;
        let mut w = vec![vec![0i64; n]; n];
        for (bi, row) in self.grid.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                let e = b.entries();
                for x in 0..2 {
                    for y in 0..2 {
                        w[2 * bi + x][2 * bj + y] = e[x][y];
                    }
                }
            }
        }
        w
    }

    /// Every block row has exactly two nonzero blocks and the grid is transpose-symmetric.
    pub fn is_well_formed(&self) -> bool {
        (0..self.k).all(|i| {
            self.grid[i].iter().filter(|&&b| b != Block::O).count() == 2
                && (0..self.k).all(|j| self.grid[j][i] == self.grid[i][j].transpose())
        })
    }
}

/// Integer matrix `W` for `H_k` with `W² = 4I`.
pub fn candle_matrix(k: usize) -> Result<Vec<Vec<i64>>, WitnessError> {
    Ok(BlockRecipe::for_candle(k)?.assemble())
}

/// `W / 2` as an exact involution (`scale_sq = 1/4`).
pub fn candle_witness(k: usize) -> Result<ExactMatrix, WitnessError> {
    let w = candle_matrix(k)?;
    Ok(ExactMatrix::with_scale_sq(
        Packed::from_fn(w.len(), |i, j| QuadElem::from_int(w[i][j])),
        BigRational::new(1.into(), 4.into()),
    ))
}
