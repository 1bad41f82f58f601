use nalgebra::{DMatrix, DVector};
use std::time::Instant;

// Tree-like sparse symmetric matrix of size n: balanced binary tree adjacency.
fn tree_matrix(n: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    for i in 1..n {
        let p = (i - 1) / 2;
        m[(i, p)] = if i % 2 == 0 { 0.7 } else { 0.3 };
        m[(p, i)] = m[(i, p)];
    }
    m
}

fn main() {
    // symmetric_eigenvalues at 1278
    let n = 1278;
    let m = tree_matrix(n);
    let t0 = Instant::now();
    let ev = m.clone().symmetric_eigenvalues();
    println!("symmetric_eigenvalues n={} : {:?} (ev[0]={:.3})", n, t0.elapsed(), ev[0]);

    // SymmetricEigen with vectors at 1278
    let t0 = Instant::now();
    let se = nalgebra::SymmetricEigen::new(m.clone());
    println!("SymmetricEigen n={} : {:?} (l0={:.3})", n, t0.elapsed(), se.eigenvalues[0]);

    // SVD (values only) at 640x638
    let (ne, no) = (640usize, 638usize);
    let mut c = DMatrix::<f64>::zeros(ne, no);
    for j in 0..no {
        c[(j % ne, j)] = 0.9;
        c[((j * 7 + 3) % ne, j)] = 0.4;
        c[((j * 13 + 11) % ne, j)] = 0.2;
    }
    let t0 = Instant::now();
    let svd = c.clone().svd(false, false);
    println!("svd {}x{} : {:?} (s0={:.3})", ne, no, t0.elapsed(), svd.singular_values[0]);

    // SymmetricEigen with vectors at 78 and 158 (repeated to time per-solve)
    for &k in &[78usize, 158] {
        let mk = tree_matrix(k);
        let t0 = Instant::now();
        let reps = 100;
        let mut acc = 0.0;
        for _ in 0..reps {
            let se = nalgebra::SymmetricEigen::new(mk.clone());
            acc += se.eigenvalues[0];
        }
        println!("SymmetricEigen n={} x{}: {:?} (acc={:.3})", k, reps, t0.elapsed(), acc);
    }

    // dense mat-vec based propagation step cost at n=78: eigen path
    let k = 78usize;
    let mk = tree_matrix(k);
    let v = DVector::<f64>::from_element(k, 1.0 / (k as f64).sqrt());
    let t0 = Instant::now();
    let mut s = 0.0;
    for _ in 0..10000 {
        let w = &mk * &v;
        s += w[0];
    }
    println!("dense matvec n=78 x10000: {:?} (s={:.3})", t0.elapsed(), s);
}
