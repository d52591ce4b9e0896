//! Brute-force Ext¹ over F_2 by enumerating block upper-triangular middle
//! terms, independent of the projective-cover computation.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use exactlim_core::fincat::FinCat;
use exactlim_core::{Field, Mat, Rep};

/// A dense F_2 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl Bits {
    pub fn zero(rows: usize, cols: usize) -> Bits {
        Bits { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Bits {
        let mut b = Bits::zero(n, n);
        for i in 0..n {
            b.data[i * n + i] = 1;
        }
        b
    }

    /// The matrix whose entries are the low bits of `mask`.
    pub fn from_mask(rows: usize, cols: usize, mask: u64) -> Bits {
        Bits { rows, cols, data: (0..rows * cols).map(|i| ((mask >> i) & 1) as u8).collect() }
    }

    pub fn of(m: &Mat) -> Bits {
        let data = m.entries().iter().map(|s| s.as_residue().expect("an F_2 matrix") as u8).collect();
        Bits { rows: m.rows(), cols: m.cols(), data }
    }

    pub fn to_mat(&self) -> Mat {
        let data: Vec<i64> = self.data.iter().map(|&x| x as i64).collect();
        Mat::from_i64(Field::prime(2).unwrap(), self.rows, self.cols, &data)
    }

    pub fn mul(&self, o: &Bits) -> Bits {
        assert_eq!(self.cols, o.rows);
        let mut out = Bits::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i * self.cols + k] == 1 {
                    for j in 0..o.cols {
                        out.data[i * o.cols + j] ^= o.data[k * o.cols + j];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Bits) -> Bits {
        Bits { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a ^ b).collect() }
    }
}

fn dims_upto(n_obj: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n_obj {
        out = out.into_iter().flat_map(|d| (0..=max).map(move |x| [d.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Every F_2 representation of `cat` with all dimensions at most `max`,
/// found by trying every matrix on every non-identity morphism.
pub fn all_reps(cat: &Arc<FinCat>, max: usize) -> Vec<Rep> {
    let f2 = Field::prime(2).unwrap();
    let non_id: Vec<usize> = cat.non_identities().collect();
    let mut out = Vec::new();
    for dims in dims_upto(cat.n_objects(), max) {
        let sizes: Vec<usize> = non_id.iter().map(|&m| dims[cat.tgt(m)] * dims[cat.src(m)]).collect();
        let bits: usize = sizes.iter().sum();
        for mask in 0..(1u64 << bits) {
            let mut shift = 0;
            let mut action: Vec<Mat> = (0..cat.n_morphisms()).map(|m| Mat::identity(f2, dims[cat.src(m)])).collect();
            for (&m, &sz) in non_id.iter().zip(&sizes) {
                action[m] = Bits::from_mask(dims[cat.tgt(m)], dims[cat.src(m)], mask >> shift).to_mat();
                shift += sz;
            }
            if let Ok(r) = Rep::new(cat.clone(), f2, dims.clone(), action) {
                out.push(r);
            }
        }
    }
    out
}

fn gl(n: usize) -> Vec<(Bits, Bits)> {
    let all: Vec<Bits> = (0..(1u64 << (n * n))).map(|m| Bits::from_mask(n, n, m)).collect();
    let id = Bits::identity(n);
    all.iter()
        .filter_map(|g| all.iter().find(|h| g.mul(h) == id).map(|h| (g.clone(), h.clone())))
        .collect()
}

/// One representative per isomorphism class, by minimizing over base changes.
pub fn iso_classes(reps: Vec<Rep>) -> Vec<Rep> {
    let Some(first) = reps.first() else { return reps };
    let cat = first.cat().clone();
    let non_id: Vec<usize> = cat.non_identities().collect();
    let groups: Vec<Vec<(Bits, Bits)>> = (0..=2).map(gl).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in reps {
        let acts: Vec<Bits> = non_id.iter().map(|&m| Bits::of(r.action(m))).collect();
        // Enumerate tuples of base changes, one per object.
        let mut tuples: Vec<Vec<&(Bits, Bits)>> = vec![vec![]];
        for o in 0..cat.n_objects() {
            tuples = tuples
                .into_iter()
                .flat_map(|t| groups[r.dim(o)].iter().map(move |g| [t.clone(), vec![g]].concat()))
                .collect();
        }
        let key = tuples
            .iter()
            .map(|t| {
                let mut k = r.dims().to_vec().into_iter().map(|d| d as u8).collect::<Vec<_>>();
                for (&m, a) in non_id.iter().zip(&acts) {
                    k.extend(t[cat.tgt(m)].0.mul(a).mul(&t[cat.src(m)].1).data);
                }
                k
            })
            .min()
            .unwrap();
        if seen.insert(key) {
            out.push(r);
        }
    }
    out
}

/// `dim Ext¹(M, N)` over F_2: the number of middle terms
/// `[[N(f), c(f)], [0, M(f)]]` that are functors, divided by the number of
/// distinct changes `c(f) ↦ c(f) + N(f)h_s + h_t M(f)`, as a power of two.
pub fn ext1_dim(m: &Rep, n: &Rep) -> usize {
    let cat = m.cat().clone();
    let f2 = Field::prime(2).unwrap();
    let non_id: Vec<usize> = cat.non_identities().collect();
    let block = |f: usize| (n.dim(cat.tgt(f)), m.dim(cat.src(f)));
    let bits: usize = non_id.iter().map(|&f| block(f).0 * block(f).1).sum();
    let dims: Vec<usize> = (0..cat.n_objects()).map(|o| n.dim(o) + m.dim(o)).collect();

    let mut cocycles = 0u64;
    for mask in 0..(1u64 << bits) {
        let mut c: Vec<Option<Bits>> = vec![None; cat.n_morphisms()];
        let mut shift = 0;
        for &f in &non_id {
            let (r, k) = block(f);
            c[f] = Some(Bits::from_mask(r, k, mask >> shift));
            shift += r * k;
        }
        let action = (0..cat.n_morphisms())
            .map(|f| {
                let (s, t) = (cat.src(f), cat.tgt(f));
                let (nf, mf) = (Bits::of(n.action(f)), Bits::of(m.action(f)));
                let cf = c[f].clone().unwrap_or_else(|| Bits::zero(n.dim(t), m.dim(s)));
                Mat::from_fn(f2, dims[t], dims[s], |i, j| {
                    let v = match (i < n.dim(t), j < n.dim(s)) {
                        (true, true) => nf.data[i * nf.cols + j],
                        (true, false) => cf.data[i * cf.cols + (j - n.dim(s))],
                        (false, true) => 0,
                        (false, false) => mf.data[(i - n.dim(t)) * mf.cols + (j - n.dim(s))],
                    };
                    f2.from_i64(v as i64)
                })
            })
            .collect();
        if Rep::new(cat.clone(), f2, dims.clone(), action).is_ok() {
            cocycles += 1;
        }
    }

    let hbits: Vec<usize> = (0..cat.n_objects()).map(|o| n.dim(o) * m.dim(o)).collect();
    let total: usize = hbits.iter().sum();
    let mut boundaries = BTreeSet::new();
    for mask in 0..(1u64 << total) {
        let mut shift = 0;
        let h: Vec<Bits> = (0..cat.n_objects())
            .map(|o| {
                let b = Bits::from_mask(n.dim(o), m.dim(o), mask >> shift);
                shift += hbits[o];
                b
            })
            .collect();
        let image: Vec<Bits> = non_id
            .iter()
            .map(|&f| {
                let (s, t) = (cat.src(f), cat.tgt(f));
                Bits::of(n.action(f)).mul(&h[s]).add(&h[t].mul(&Bits::of(m.action(f))))
            })
            .collect();
        boundaries.insert(image);
    }
    let b = boundaries.len() as u64;
    assert_eq!(cocycles % b, 0, "cocycles form a union of cosets");
    let classes = cocycles / b;
    assert!(classes.is_power_of_two());
    classes.trailing_zeros() as usize
}
