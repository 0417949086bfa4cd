//! Bit-packed GF(2) rows for n <= 64. Column `c` lives in bit `c`.

use super::Matrix;

pub fn pack_row(row: &[u8]) -> u64 {
    debug_assert!(row.len() <= 64);
    row.iter()
        .enumerate()
        .fold(0u64, |acc, (c, &e)| acc | (((e & 1) as u64) << c))
}

pub fn pack_rows(m: &Matrix) -> Vec<u64> {
    m.row_iter().map(pack_row).collect()
}

/// Rank of the packed rows; the slice is used as scratch space.
pub fn rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let r = rows[i];
        if r == 0 {
            continue;
        }
        let low = r & r.wrapping_neg();
        for row in rows[i + 1..].iter_mut() {
            if *row & low != 0 {
                *row ^= r;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of `a` stacked on `b`, both already in echelon form of their own.
pub fn stacked_rank(a: &[u64], b: &[u64]) -> usize {
    let mut buf = [0u64; 128];
    if a.len() + b.len() <= buf.len() {
        let buf = &mut buf[..a.len() + b.len()];
        buf[..a.len()].copy_from_slice(a);
        buf[a.len()..].copy_from_slice(b);
        rank(buf)
    } else {
        let mut v: Vec<u64> = a.iter().chain(b).copied().collect();
        rank(&mut v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&mut []), 0);
        assert_eq!(rank(&mut [0, 0]), 0);
        assert_eq!(rank(&mut [0b011, 0b110, 0b101]), 2);
        assert_eq!(rank(&mut [0b001, 0b010, 0b100]), 3);
        assert_eq!(stacked_rank(&[0b0011], &[0b0011]), 1);
        assert_eq!(stacked_rank(&[0b0001, 0b0010], &[0b0100, 0b1000]), 4);
    }

    #[test]
    fn pack_order() {
        assert_eq!(pack_row(&[1, 0, 0, 1]), 0b1001);
        assert_eq!(pack_row(&[0, 1, 1]), 0b110);
    }
}
