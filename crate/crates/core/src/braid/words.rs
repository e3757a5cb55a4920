//! Canonical braid words: the `Z_ij`, the good-quadrangle relator, the
//! transversal commutator, frame transport and the centralizer generators.

use super::{BraidWord, HalfTwist};
use crate::error::{Error, Result};

fn need(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFewStrands { n, min });
    }
    Ok(())
}

fn gens(n: usize, letters: impl IntoIterator<Item = i32>) -> BraidWord {
    BraidWord::from_letters_unchecked(n, letters.into_iter().collect())
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i >= j {
        return Err(Error::IndexOutOfRange { index: i, max: j.saturating_sub(1) });
    }
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    Ok(())
}

/// `Z_ij` as a conjugate of `X_1`:
/// `X_1` for `(1,2)`, `(X_1)_{X_2..X_{j-1}}` for `i = 1`,
/// `(X_1)_{X_2..X_{j-1} X_1..X_{i-1}}` otherwise. Its endpoints are `(i, j)`.
pub fn z_ij_twist(n: usize, i: usize, j: usize) -> Result<HalfTwist> {
    need(n, 2)?;
    check_pair(n, i, j)?;
    let conj = (2..j as i32).chain(1..i as i32);
    HalfTwist::new(gens(n, conj), 1, false)
}

pub fn z_ij(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    Ok(z_ij_twist(n, i, j)?.word())
}

/// The alternative form `(X_i)_{X_{i+1}..X_{j-1}}`.
pub fn z_ij_short(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    need(n, 2)?;
    check_pair(n, i, j)?;
    let conj = gens(n, i as i32 + 1..j as i32);
    Ok(HalfTwist::new(conj, i, false)?.word())
}

/// `Y_1^2 Y_3^2 Y_4^-2 Y_2^-2` for the good quadrangle
/// `(X_1, (X_3)_{X_2^-1}, X_3, (X_1)_{X_2^-1})`.
pub fn quadrangle_relator(n: usize) -> Result<BraidWord> {
    need(n, 4)?;
    Ok(gens(n, [1, 1, 3, 3, 2, -1, -1, -2, 2, -3, -3, -2]))
}

/// `[X_2, (X_2)_{X_1 X_3}]`.
pub fn transversal_commutator(n: usize) -> Result<BraidWord> {
    need(n, 4)?;
    let x2 = gens(n, [2]);
    let t = x2.conjugate_by(&gens(n, [1, 3]))?;
    BraidWord::commutator(&x2, &t)
}

/// `(X_3)^-2_{X_2^-1} (X_1)^-2_{X_2^-1} X_1^2 X_3^2`, equal in `B_n` to the transversal commutator.
pub fn transversal_commutator_expanded(n: usize) -> Result<BraidWord> {
    need(n, 4)?;
    Ok(gens(n, [2, -3, -3, -2, 2, -1, -1, -2, 1, 1, 3, 3]))
}

/// `c = [X_1^2, X_2^2]`.
pub fn c_word(n: usize) -> Result<BraidWord> {
    need(n, 3)?;
    Ok(gens(n, [1, 1, 2, 2, -1, -1, -2, -2]))
}

/// A word `t` with `(X_i)_t = X_j` preserving frame polarization:
/// `(X_{i+1} X_i)(X_{i+2} X_{i+1})..(X_j X_{j-1})` for `i < j`, its inverse for `i > j`.
pub fn frame_transport(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    for k in [i, j] {
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange { index: k, max: n - 1 });
        }
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let up = gens(n, (lo + 1..=hi).flat_map(|k| [k as i32, k as i32 - 1]));
    Ok(if i <= j { up } else { up.inv() })
}

/// Generators `X_1^2, X_2 X_1^2 X_2, X_3, ..., X_{n-1}` of the polarization-preserving
/// centralizer of `X_1`.
pub fn centralizer_generators(n: usize) -> Result<Vec<BraidWord>> {
    need(n, 3)?;
    let mut out = vec![gens(n, [1, 1]), gens(n, [2, 1, 1, 2])];
    out.extend((3..n as i32).map(|k| gens(n, [k])));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::bn_equal;

    #[test]
    fn z_examples() {
        assert_eq!(z_ij(4, 1, 2).unwrap().letters(), &[1]);
        assert!(bn_equal(&z_ij(4, 2, 3).unwrap(), &gens(4, [2])).unwrap());
        assert_eq!(z_ij_twist(4, 1, 3).unwrap().endpoints(), (1, 3));
        for n in 3..=6 {
            for j in 2..=n {
                for i in 1..j {
                    let t = z_ij_twist(n, i, j).unwrap();
                    assert_eq!(t.endpoints(), (i, j));
                }
            }
        }
        assert!(z_ij(4, 2, 2).is_err());
        assert!(z_ij(4, 1, 5).is_err());
    }

    #[test]
    fn quadrangle_shape() {
        let q = quadrangle_relator(5).unwrap();
        assert!(q.is_pure());
        assert_eq!(q.exponent_sum(), 0);
        assert!(!bn_equal(&q, &BraidWord::identity(5)).unwrap());
        assert!(quadrangle_relator(3).is_err());
    }

    #[test]
    fn transversal_commutator_identity() {
        for n in 4..=6 {
            let t = transversal_commutator(n).unwrap();
            assert!(bn_equal(&t, &transversal_commutator_expanded(n).unwrap()).unwrap());
            assert!(t.is_pure());
            assert_eq!(t.exponent_sum(), 0);
        }
        assert!(transversal_commutator(3).is_err());
    }

    #[test]
    fn frame_transport_moves_frames() {
        let n = 6;
        for i in 1..n {
            for j in 1..n {
                let t = frame_transport(n, i, j).unwrap();
                let moved = HalfTwist::frame(n, i).unwrap().conjugate(&t).unwrap();
                assert!(bn_equal(&moved.word(), &gens(n, [j as i32])).unwrap(), "{i}->{j}");
                assert_eq!(moved.endpoints(), (j, j + 1));
            }
        }
    }

    #[test]
    fn centralizer_generators_commute_with_x1() {
        for n in 3..=7 {
            let x1 = gens(n, [1]);
            for g in centralizer_generators(n).unwrap() {
                let c = BraidWord::commutator(&g, &x1).unwrap();
                assert!(bn_equal(&c, &BraidWord::identity(n)).unwrap());
                let moved = HalfTwist::frame(n, 1).unwrap().conjugate(&g).unwrap();
                assert_eq!(moved.endpoints(), (1, 2));
            }
        }
    }
}
