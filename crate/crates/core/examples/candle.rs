//! Integer witnesses for closed candles: prints W for small k and checks W^2 = 4I up to k = 200.
//!
//! cargo run --release --example candle -- 5

use qtwo::graph::candle;
use qtwo::witnesses::{candle_matrix, BlockRecipe};

fn square_is_4i(w: &[Vec<i64>]) -> bool {
    let n = w.len();
    (0..n).all(|i| (0..n).all(|j| (0..n).map(|t| w[i][t] * w[t][j]).sum::<i64>() == if i == j { 4 } else { 0 }))
}

fn main() {
    let k: usize = std::env::args().nth(1).map_or(4, |a| a.parse().expect("k"));
    let recipe = BlockRecipe::for_candle(k).expect("k >= 3");
    println!("recipe for H{k}: {recipe:?}");
    let w = candle_matrix(k).unwrap();
    for row in &w {
        println!("{}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
    }
    let g = candle(k).unwrap();
    let fits = (0..2 * k).all(|i| (0..2 * k).all(|j| i == j || (w[i][j] != 0) == g.has_edge(i, j)));
    println!("fits H{k}: {fits}, W^2 = 4I: {}", square_is_4i(&w));

    let t = std::time::Instant::now();
    let bad: Vec<usize> = (3..=200).filter(|&k| !square_is_4i(&candle_matrix(k).unwrap())).collect();
    println!("k = 3..200 checked in {:.2?}, failures: {bad:?}", t.elapsed());
}
