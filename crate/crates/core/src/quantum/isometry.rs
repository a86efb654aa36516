use serde::Serialize;

/// An encoding map `C^{d^m} → C^{d^n}` with integer coefficients, given as
/// one output vector per input basis state.
#[derive(Clone, Debug, Serialize)]
pub struct IsometryCode {
    pub local_dim: usize,
    pub in_qudits: usize,
    pub out_qudits: usize,
    /// `table[i][x]` is the coefficient of `|x⟩` in the image of `|i⟩`, with
    /// `x` read as base-`local_dim` digits, first qudit most significant.
    pub table: Vec<Vec<i64>>,
}

/// `|a⟩ ↦ Σ_b |b, b+a, b+2a⟩` on qutrits:
/// `|0⟩ ↦ |000⟩+|111⟩+|222⟩`, `|1⟩ ↦ |012⟩+|120⟩+|201⟩`, `|2⟩ ↦ |021⟩+|102⟩+|210⟩`.
pub fn qutrit_perfect_code() -> IsometryCode {
    let mut table = vec![vec![0i64; 27]; 3];
    for (a, row) in table.iter_mut().enumerate() {
        for b in 0..3 {
            let (c, d) = ((b + a) % 3, (b + 2 * a) % 3);
            row[9 * b + 3 * c + d] += 1;
        }
    }
    IsometryCode { local_dim: 3, in_qudits: 1, out_qudits: 3, table }
}

impl IsometryCode {
    /// Support of the image of `|i⟩`, as digit strings.
    pub fn support(&self, i: usize) -> Vec<Vec<usize>> {
        self.table[i]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(x, _)| self.digits(x, self.out_qudits))
            .collect()
    }

    fn digits(&self, mut x: usize, len: usize) -> Vec<usize> {
        let mut d = vec![0; len];
        for slot in d.iter_mut().rev() {
            *slot = x % self.local_dim;
            x /= self.local_dim;
        }
        d
    }

    /// `G[i][j] = ⟨enc(i), enc(j)⟩`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let k = self.table.len();
        (0..k)
            .map(|i| (0..k).map(|j| self.table[i].iter().zip(&self.table[j]).map(|(x, y)| x * y).sum()).collect())
            .collect()
    }

    /// The tensor `T_{i x_1 … x_n}` with the input as leg 0.
    fn tensor_entry(&self, legs: &[usize]) -> i64 {
        let x = legs[1..].iter().fold(0, |acc, &d| acc * self.local_dim + d);
        self.table[legs[0]][x]
    }

    /// Whether the tensor, read as a map from the legs in `inputs` to the
    /// remaining legs, satisfies `M^† M = c I` for some `c > 0`.
    pub fn is_isometry_from(&self, inputs: &[usize]) -> bool {
        let legs = 1 + self.out_qudits;
        let outputs: Vec<usize> = (0..legs).filter(|l| !inputs.contains(l)).collect();
        let d = self.local_dim;
        let (din, dout) = (d.pow(inputs.len() as u32), d.pow(outputs.len() as u32));
        let entry = |i: usize, o: usize| {
            let mut assign = vec![0; legs];
            let ins = self.digits(i, inputs.len());
            let outs = self.digits(o, outputs.len());
            for (l, v) in inputs.iter().zip(ins) {
                assign[*l] = v;
            }
            for (l, v) in outputs.iter().zip(outs) {
                assign[*l] = v;
            }
            self.tensor_entry(&assign)
        };
        let mut c0 = None;
        for i in 0..din {
            for j in 0..din {
                let g: i64 = (0..dout).map(|o| entry(i, o) * entry(j, o)).sum();
                if i == j {
                    match c0 {
                        None if g > 0 => c0 = Some(g),
                        Some(c) if c == g => {}
                        _ => return false,
                    }
                } else if g != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Unnormalized reduced density matrix of `enc(i)` on output qudit `site`.
    pub fn reduced_state(&self, i: usize, site: usize) -> Vec<Vec<i64>> {
        let d = self.local_dim;
        let mut rho = vec![vec![0i64; d]; d];
        let v = &self.table[i];
        for x in 0..v.len() {
            for y in 0..v.len() {
                let (dx, dy) = (self.digits(x, self.out_qudits), self.digits(y, self.out_qudits));
                let rest_equal = (0..self.out_qudits).all(|s| s == site || dx[s] == dy[s]);
                if rest_equal {
                    rho[dx[site]][dy[site]] += v[x] * v[y];
                }
            }
        }
        rho
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_displayed_map() {
        let code = qutrit_perfect_code();
        assert_eq!(code.support(0), vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]);
        assert_eq!(code.support(1), vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(code.support(2), vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]);
    }

    #[test]
    fn gram_and_perfectness() {
        let code = qutrit_perfect_code();
        assert_eq!(code.gram(), vec![vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]]);
        for l in 0..4 {
            assert!(code.is_isometry_from(&[l]));
            for m in l + 1..4 {
                assert!(code.is_isometry_from(&[l, m]));
            }
        }
        for i in 0..3 {
            for s in 0..3 {
                assert_eq!(code.reduced_state(i, s), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
            }
        }
    }
}
