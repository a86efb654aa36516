use serde::Serialize;

use super::TilingError;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Presentation data of the triangle group Γ(a,b,c).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleGroup {
    pub orders: [u64; 3],
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub modulus: u64,
}

pub fn triangle_group_data(a: u64, b: u64, c: u64) -> Result<TriangleGroup, TilingError> {
    // 1/a + 1/b + 1/c < 1  ⇔  bc + ac + ab < abc
    if a == 0 || b == 0 || c == 0 || b * c + a * c + a * b >= a * b * c {
        return Err(TilingError::NotHyperbolic { a, b, c });
    }
    Ok(TriangleGroup {
        orders: [a, b, c],
        generators: vec!["g1".into(), "g2".into(), "g3".into()],
        relations: vec![format!("g1^{a}"), format!("g2^{b}"), format!("g3^{c}"), "g1 g2 g3".into()],
        modulus: lcm(lcm(a, b), c),
    })
}

fn check(a: u64, l: u64) -> Result<(), TilingError> {
    if a == 0 || l == 0 || !l.is_multiple_of(a) {
        return Err(TilingError::NonDivisor { a, l });
    }
    Ok(())
}

/// One branch of the vertex code: evaluates
/// `f(t) = α_0 + α_1 t + ⋯ + α_{a−1} t^{a−1} + α t^a` over Z/ℓZ at the points
/// `t = (ℓ/a)·x`, `x ∈ Z/aZ`.
pub fn vertex_poly_encode(a: u64, l: u64, alpha: u64, coeffs: &[u64]) -> Result<Vec<u64>, TilingError> {
    check(a, l)?;
    if coeffs.len() != a as usize {
        return Err(TilingError::InvalidComplex(format!("expected {a} coefficients, got {}", coeffs.len())));
    }
    let step = l / a;
    let out = (0..a)
        .map(|x| {
            let t = (step * x) % l;
            let mut acc = alpha % l;
            for &c in coeffs.iter().rev() {
                acc = (acc * t + c % l) % l;
            }
            acc
        })
        .collect();
    Ok(out)
}

/// All `ℓ^a` branches of the encoding of `|α⟩`, as (coefficients, output).
pub fn vertex_poly_superposition(
    a: u64,
    l: u64,
    alpha: u64,
) -> Result<impl Iterator<Item = (Vec<u64>, Vec<u64>)>, TilingError> {
    check(a, l)?;
    let total = l.checked_pow(a as u32).ok_or(TilingError::NonDivisor { a, l })?;
    Ok((0..total).map(move |mut idx| {
        let coeffs: Vec<u64> = (0..a)
            .map(|_| {
                let c = idx % l;
                idx /= l;
                c
            })
            .collect();
        let out = vertex_poly_encode(a, l, alpha, &coeffs).expect("checked");
        (coeffs, out)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_groups() {
        assert_eq!(triangle_group_data(2, 4, 5).unwrap().modulus, 20);
        assert_eq!(triangle_group_data(2, 3, 7).unwrap().modulus, 42);
        assert!(matches!(triangle_group_data(2, 3, 6), Err(TilingError::NotHyperbolic { .. })));
    }

    #[test]
    fn small_cases() {
        // a = 1 evaluates only at t = 0
        assert_eq!(vertex_poly_encode(1, 5, 3, &[2]).unwrap(), vec![2]);
        // t ∈ {0, 10} mod 20: f(0) = α_0, f(10) = α_0 + 10α_1 + 100α
        assert_eq!(vertex_poly_encode(2, 20, 1, &[3, 1]).unwrap(), vec![3, (3 + 10 + 100) % 20]);
        assert!(matches!(vertex_poly_encode(3, 20, 0, &[0, 0, 0]), Err(TilingError::NonDivisor { .. })));
        assert_eq!(vertex_poly_superposition(2, 4, 1).unwrap().count(), 16);
    }

    #[test]
    fn leading_term_is_linear() {
        let c = [4, 7, 1, 9];
        for (x, y) in [(1, 2), (5, 19), (11, 11)] {
            let lhs = vertex_poly_encode(4, 20, x + y, &c).unwrap();
            let base = vertex_poly_encode(4, 20, x, &c).unwrap();
            let shift = vertex_poly_encode(4, 20, y, &[0; 4]).unwrap();
            let rhs: Vec<u64> = base.iter().zip(&shift).map(|(p, q)| (p + q) % 20).collect();
            assert_eq!(lhs, rhs);
        }
    }
}
