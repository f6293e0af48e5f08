use std::collections::HashMap;

use crate::field::Field;

/// A sparse row: `(column, value)` pairs with strictly increasing columns and nonzero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Rank of the matrix with the given rows, by exact elimination over `field`.
pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseRow<F::Elem>>) -> usize {
    let mut pivots: HashMap<usize, SparseRow<F::Elem>> = HashMap::new();
    for mut row in rows {
        while let Some((col, lead)) = row.first().cloned() {
            match pivots.get(&col) {
                Some(pivot) => row = axpy(field, &row, &field.neg(&lead), pivot),
                None => {
                    let inv = field.inv(&lead).expect("nonzero lead");
                    for entry in &mut row {
                        entry.1 = field.mul(&entry.1, &inv);
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

// a + c * b
fn axpy<F: Field>(field: &F, a: &SparseRow<F::Elem>, c: &F::Elem, b: &SparseRow<F::Elem>) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut s, mut t) = (0, 0);
    while s < a.len() || t < b.len() {
        let take_a = t == b.len() || (s < a.len() && a[s].0 < b[t].0);
        let take_b = s == a.len() || (t < b.len() && b[t].0 < a[s].0);
        if take_a {
            out.push(a[s].clone());
            s += 1;
        } else if take_b {
            out.push((b[t].0, field.mul(c, &b[t].1)));
            t += 1;
        } else {
            let v = field.add(&a[s].1, &field.mul(c, &b[t].1));
            if !field.is_zero(&v) {
                out.push((a[s].0, v));
            }
            s += 1;
            t += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn dense<F: Field>(field: &F, m: &[&[i64]]) -> Vec<SparseRow<F::Elem>> {
        m.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c, field.from_i64(v)))
                    .filter(|(_, v)| !field.is_zero(v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ranks() {
        let m: &[&[i64]] = &[&[1, 1, 0], &[0, 1, 1], &[1, 0, -1]];
        assert_eq!(rank(&Rationals, dense(&Rationals, m)), 2);
        let f2 = PrimeField::new(2).unwrap();
        let m: &[&[i64]] = &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]];
        assert_eq!(rank(&f2, dense(&f2, m)), 2);
        assert_eq!(rank(&Rationals, dense(&Rationals, m)), 3);
        assert_eq!(rank(&Rationals, Vec::new()), 0);
    }
}
