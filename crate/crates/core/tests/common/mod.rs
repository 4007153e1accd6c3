//! Independent reference computations used by the integration tests.
//!
//! Nothing here calls into the q-character machinery. Root systems are rebuilt
//! from the Cartan matrix alone, weight multiplicities come from Freudenthal's
//! formula, and the longest Weyl group element is found by enumerating the group.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use qchar_core::{LieType, RootData};

/// Types and ranks covered by the full check suite.
pub fn suite_types() -> Vec<(LieType, usize)> {
    let mut v = Vec::new();
    for n in 1..=5 {
        v.push((LieType::A, n));
    }
    for n in 2..=4 {
        v.push((LieType::B, n));
    }
    for n in 2..=4 {
        v.push((LieType::C, n));
    }
    v.push((LieType::D, 4));
    v.push((LieType::G, 2));
    v.push((LieType::F, 4));
    v.push((LieType::E, 6));
    v
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Root system data rebuilt from a Cartan matrix `C[i][j] = <alpha_j, alpha_i^vee>`.
pub struct Oracle {
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// `form[i][j] = scale * (omega_i, omega_j)`, an integer matrix.
    pub form: Vec<Vec<i64>>,
    /// `half_len[i] = (alpha_i, alpha_i) / 2`, coprime.
    pub half_len: Vec<i64>,
}

impl Oracle {
    pub fn new(cartan: Vec<Vec<i64>>) -> Self {
        let l = cartan.len();
        // Root lengths: d_i C_ij = d_j C_ji, found by propagation as fractions.
        let mut num = vec![0i64; l];
        let mut den = vec![1i64; l];
        num[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..l {
                if j != i && cartan[i][j] != 0 && num[j] == 0 {
                    let (n, d) = (num[i] * cartan[i][j], den[i] * cartan[j][i]);
                    let g = gcd(n, d) * d.signum();
                    num[j] = n / g;
                    den[j] = d / g;
                    queue.push_back(j);
                }
            }
        }
        let lcm = den.iter().fold(1, |a, &b| a / gcd(a, b) * b);
        let mut half_len: Vec<i64> = (0..l).map(|i| num[i] * lcm / den[i]).collect();
        let g = half_len.iter().fold(0, |a, &b| gcd(a, b));
        half_len.iter_mut().for_each(|x| *x /= g);

        let b: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| half_len[i] * cartan[i][j]).collect()).collect();
        for i in 0..l {
            for j in 0..l {
                assert_eq!(b[i][j], b[j][i], "symmetrized Cartan matrix must be symmetric");
            }
        }
        // (omega_i, alpha_j) = d_j delta_ij and alpha_j = sum_k C_kj omega_k give
        // G C = diag(d), so G = diag(d) C^-1.
        let inv = inverse_fraction(&cartan);
        let den_all = inv.iter().flatten().fold(1i64, |a, &(_, d)| a / gcd(a, d) * d);
        let form: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let (n, d) = inv[i][j];
                        half_len[i] * n * (den_all / d)
                    })
                    .collect()
            })
            .collect();
        for i in 0..l {
            for j in 0..l {
                assert_eq!(form[i][j], form[j][i], "fundamental weight form must be symmetric");
            }
        }

        // Positive roots by closing the simple roots under simple reflections.
        let to_weight = |c: &[i64]| -> Vec<i64> { (0..l).map(|i| (0..l).map(|j| cartan[i][j] * c[j]).sum()).collect() };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..l {
            let mut e = vec![0; l];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            let w = to_weight(&beta);
            for i in 0..l {
                let mut next = beta.clone();
                next[i] -= w[i];
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive_roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        Oracle { cartan, positive_roots, form, half_len }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Weight (omega-coordinates) of a root given in simple-root coordinates.
    pub fn root_weight(&self, c: &[i64]) -> Vec<i64> {
        let l = self.rank();
        (0..l).map(|i| (0..l).map(|j| self.cartan[i][j] * c[j]).sum()).collect()
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let l = self.rank();
        (0..l).map(|i| (0..l).map(|j| x[i] * self.form[i][j] * y[j]).sum::<i64>()).sum()
    }

    pub fn reflect(&self, mu: &[i64], i: usize) -> Vec<i64> {
        let k = mu[i];
        (0..self.rank()).map(|j| mu[j] - k * self.cartan[j][i]).collect()
    }

    pub fn dominant_rep(&self, mu: &[i64]) -> Vec<i64> {
        let mut m = mu.to_vec();
        while let Some(i) = m.iter().position(|&x| x < 0) {
            m = self.reflect(&m, i);
        }
        m
    }

    pub fn orbit(&self, mu: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::from([mu.to_vec()]);
        let mut queue = VecDeque::from([mu.to_vec()]);
        while let Some(m) = queue.pop_front() {
            for i in 0..self.rank() {
                let n = self.reflect(&m, i);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weight multiplicities of the irreducible module with highest weight `lambda`.
    pub fn freudenthal(&self, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
        let l = self.rank();
        let rho = vec![1i64; l];
        let add = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(a, b)| a + b).collect() };
        let sub = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(a, b)| a - b).collect() };
        let roots: Vec<Vec<i64>> = self.positive_roots.iter().map(|c| self.root_weight(c)).collect();

        // Dominant weights below lambda, linked by positive roots, in order of depth.
        let mut dominant: Vec<Vec<i64>> = vec![lambda.to_vec()];
        let mut seen: HashSet<Vec<i64>> = HashSet::from([lambda.to_vec()]);
        let mut k = 0;
        while k < dominant.len() {
            let mu = dominant[k].clone();
            for a in &roots {
                let nu = sub(&mu, a);
                if nu.iter().all(|&x| x >= 0) && seen.insert(nu.clone()) {
                    dominant.push(nu);
                }
            }
            k += 1;
        }
        let lr = add(lambda, &rho);
        let norm_lr = self.pairing(&lr, &lr);
        let depth = |mu: &[i64]| -> i64 { self.pairing(&sub(lambda, mu), &rho) };
        dominant.sort_by_key(|mu| depth(mu));

        let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
        mult.insert(lambda.to_vec(), 1);
        for mu in dominant.iter().skip(1) {
            let mut acc = 0i64;
            for a in &roots {
                // The string mu + k a stays inside the weights until it leaves for good.
                for k in 1.. {
                    let nu = add(mu, &a.iter().map(|x| x * k).collect::<Vec<_>>());
                    let rep = self.dominant_rep(&nu);
                    if !seen.contains(&rep) {
                        break;
                    }
                    acc += mult.get(&rep).copied().unwrap_or(0) * self.pairing(&nu, a);
                }
            }
            let mr = add(mu, &rho);
            let denom = norm_lr - self.pairing(&mr, &mr);
            assert!(denom > 0);
            assert_eq!((2 * acc) % denom, 0, "Freudenthal quotient must be exact");
            let m = 2 * acc / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
            }
        }
        let mut out = BTreeMap::new();
        for (mu, m) in mult {
            for w in self.orbit(&mu) {
                out.insert(w, m as u64);
            }
        }
        out
    }

    /// `bar(i)` from the longest element of the Weyl group, found by enumerating
    /// the group as matrices on simple-root coordinates.
    pub fn bar_by_enumeration(&self) -> Vec<usize> {
        let l = self.rank();
        type Mat = Vec<Vec<i64>>;
        let ident: Mat = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
        // s_i(alpha_j) = alpha_j - C_ij alpha_i, as a matrix acting on coordinate columns.
        let gens: Vec<Mat> = (0..l)
            .map(|i| {
                let mut m = ident.clone();
                for j in 0..l {
                    m[i][j] -= self.cartan[i][j];
                }
                m
            })
            .collect();
        let mul = |a: &Mat, b: &Mat| -> Mat {
            (0..l).map(|i| (0..l).map(|j| (0..l).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
        };
        let mut seen: HashSet<Mat> = HashSet::from([ident.clone()]);
        let mut queue = VecDeque::from([ident]);
        let mut longest = None;
        while let Some(w) = queue.pop_front() {
            // Longest element: sends every simple root to a negative root.
            if (0..l).all(|j| (0..l).all(|i| w[i][j] <= 0)) {
                longest = Some(w.clone());
            }
            for g in &gens {
                let n = mul(g, &w);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        let w0 = longest.expect("finite Weyl group has a longest element");
        (0..l)
            .map(|j| {
                let col: Vec<i64> = (0..l).map(|i| -w0[i][j]).collect();
                let k = col.iter().position(|&x| x == 1).expect("image is minus a simple root");
                assert_eq!(col.iter().filter(|&&x| x != 0).count(), 1);
                k + 1
            })
            .collect()
    }

    /// Dual Coxeter number `1 + sum_i a_i^vee` from the highest root.
    pub fn dual_coxeter(&self) -> i64 {
        let theta = self.positive_roots.last().expect("nonempty root system");
        let long = *self.half_len.iter().max().unwrap();
        // theta^vee = sum_i theta_i d_i / d_theta alpha_i^vee, with theta long.
        1 + theta.iter().zip(&self.half_len).map(|(t, d)| t * d).sum::<i64>() / long
    }
}

/// Exact inverse of an integer matrix as (numerator, positive denominator) pairs.
fn inverse_fraction(m: &[Vec<i64>]) -> Vec<Vec<(i64, i64)>> {
    let l = m.len();
    let mut a: Vec<Vec<(i128, i128)>> = (0..l)
        .map(|i| {
            (0..2 * l)
                .map(|j| if j < l { (i128::from(m[i][j]), 1) } else { (i128::from(j - l == i), 1) })
                .collect()
        })
        .collect();
    fn norm((n, d): (i128, i128)) -> (i128, i128) {
        let mut g = {
            let (mut x, mut y) = (n.abs(), d.abs());
            while y != 0 {
                let t = x % y;
                x = y;
                y = t;
            }
            x
        };
        if g == 0 {
            g = 1;
        }
        let s = if d < 0 { -1 } else { 1 };
        (s * n / g, s * d / g)
    }
    let sub = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.1 - y.0 * x.1, x.1 * y.1));
    let mulf = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.0, x.1 * y.1));
    let divf = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.1, x.1 * y.0));
    for col in 0..l {
        let p = (col..l).find(|&r| a[r][col].0 != 0).expect("invertible");
        a.swap(col, p);
        let piv = a[col][col];
        for j in 0..2 * l {
            a[col][j] = divf(a[col][j], piv);
        }
        for r in 0..l {
            if r != col && a[r][col].0 != 0 {
                let f = a[r][col];
                for j in 0..2 * l {
                    a[r][j] = sub(a[r][j], mulf(f, a[col][j]));
                }
            }
        }
    }
    (0..l)
        .map(|i| (l..2 * l).map(|j| (a[i][j].0 as i64, a[i][j].1 as i64)).collect())
        .collect()
}

pub fn oracle_for(rd: &RootData) -> Oracle {
    Oracle::new(rd.cartan_matrix().to_vec())
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
