//! Reference data: dimension and largest-abelian-subalgebra dimension for
//! the simple Lie algebras over an algebraically closed field of
//! characteristic zero. Pure lookup; none of these algebras are
//! constructed here.

use crate::CatalogError;

/// (dim, alpha) for the named family at the given rank.
pub fn table1_alpha(family: char, rank: u64) -> Result<(u64, u64), CatalogError> {
    let out_of_range = |msg: &str| Err(CatalogError::BadParams(msg.into()));
    match (family.to_ascii_uppercase(), rank) {
        ('A', n) if n >= 1 => Ok((n * (n + 2), (n + 1) * (n + 1) / 4)),
        ('A', _) => out_of_range("A_n needs rank >= 1"),
        ('B', 3) => Ok((21, 5)),
        ('B', n) if n >= 4 => Ok((n * (2 * n + 1), n * (n - 1) / 2 + 1)),
        ('B', _) => out_of_range("B_n needs rank >= 3"),
        ('C', n) if n >= 2 => Ok((n * (2 * n + 1), n * (n + 1) / 2)),
        ('C', _) => out_of_range("C_n needs rank >= 2"),
        ('D', n) if n >= 4 => Ok((n * (2 * n - 1), n * (n - 1) / 2)),
        ('D', _) => out_of_range("D_n needs rank >= 4"),
        ('G', 2) => Ok((14, 3)),
        ('G', _) => out_of_range("G exists only at rank 2"),
        ('F', 4) => Ok((52, 9)),
        ('F', _) => out_of_range("F exists only at rank 4"),
        ('E', 6) => Ok((78, 16)),
        ('E', 7) => Ok((133, 27)),
        ('E', 8) => Ok((248, 36)),
        ('E', _) => out_of_range("E exists only at ranks 6, 7, 8"),
        _ => out_of_range("family must be one of A, B, C, D, E, F, G"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ten_rows() {
        assert_eq!(table1_alpha('A', 1).unwrap(), (3, 1));
        assert_eq!(table1_alpha('A', 4).unwrap(), (24, 6));
        assert_eq!(table1_alpha('B', 3).unwrap(), (21, 5));
        assert_eq!(table1_alpha('B', 4).unwrap(), (36, 7));
        assert_eq!(table1_alpha('C', 2).unwrap(), (10, 3));
        assert_eq!(table1_alpha('D', 4).unwrap(), (28, 6));
        assert_eq!(table1_alpha('G', 2).unwrap(), (14, 3));
        assert_eq!(table1_alpha('F', 4).unwrap(), (52, 9));
        assert_eq!(table1_alpha('E', 6).unwrap(), (78, 16));
        assert_eq!(table1_alpha('E', 7).unwrap(), (133, 27));
        assert_eq!(table1_alpha('E', 8).unwrap(), (248, 36));
    }

    #[test]
    fn rank_guards() {
        assert!(table1_alpha('D', 3).is_err());
        assert!(table1_alpha('B', 2).is_err());
        assert!(table1_alpha('E', 9).is_err());
        assert!(table1_alpha('X', 1).is_err());
    }
}
